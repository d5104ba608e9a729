//! Text form of polynomials: signed products such as `3/2*x1_2^2*x2_1 - x1_1`.
//!
//! `x{a}_{j}` is slot `j` of block `a` (one-based). With at most two blocks,
//! `x{j}` and `y{j}` may stand for slot `j` of the first and second block.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::monomial::{Monomial, VariableLayout};
use crate::scalar::Rational;
use crate::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum VarRef {
    Block { block: usize, slot: usize },
    AliasX(usize),
    AliasY(usize),
}

#[derive(Debug)]
struct Term {
    coeff: Rational,
    factors: Vec<(VarRef, u32)>,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn index(&mut self) -> Result<usize> {
        match self.digits().map(str::parse::<usize>) {
            Some(Ok(v)) if v >= 1 => Ok(v),
            _ => self.err("expected a positive index"),
        }
    }

    fn number(&mut self) -> Result<Rational> {
        let numer: BigInt = self.digits().expect("caller checked a digit").parse().unwrap();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let denom: BigInt = match self.digits() {
                Some(d) => d.parse().unwrap(),
                None => return self.err("expected a denominator"),
            };
            if denom.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from_integer(numer))
    }

    fn variable(&mut self) -> Result<VarRef> {
        let letter = self.src[self.pos];
        self.pos += 1;
        let first = self.index()?;
        if letter == b'x' && self.src.get(self.pos) == Some(&b'_') {
            self.pos += 1;
            let slot = self.index()?;
            return Ok(VarRef::Block { block: first, slot });
        }
        Ok(if letter == b'x' { VarRef::AliasX(first) } else { VarRef::AliasY(first) })
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        match self.digits().map(str::parse::<u32>) {
            Some(Ok(e)) if e < 64 => Ok(e),
            _ => self.err("expected an exponent below 64"),
        }
    }

    fn term(&mut self, sign: bool) -> Result<Term> {
        let mut coeff = if sign { -Rational::one() } else { Rational::one() };
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number()?;
                    let e = self.exponent()?;
                    coeff *= num_traits::pow(n, e as usize);
                }
                Some(b'x' | b'y') => {
                    let v = self.variable()?;
                    let e = self.exponent()?;
                    factors.push((v, e));
                }
                _ => return self.err("expected a number or a variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(Term { coeff, factors });
            }
        }
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut sign = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            sign = c == b'-';
            self.pos += 1;
        }
        loop {
            terms.push(self.term(sign)?);
            match self.peek() {
                None => return Ok(terms),
                Some(c @ (b'+' | b'-')) => {
                    sign = c == b'-';
                    self.pos += 1;
                    if self.peek() == Some(b'-') {
                        sign = !sign;
                        self.pos += 1;
                    }
                }
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
        }
    }
}

fn lex(text: &str) -> Result<Vec<Term>> {
    let mut lexer = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    if lexer.peek().is_none() {
        return lexer.err("empty polynomial");
    }
    lexer.terms()
}

/// The smallest layout holding every variable mentioned in `text`.
pub fn infer_layout(text: &str) -> Result<VariableLayout> {
    let terms = lex(text)?;
    Ok(infer(&terms))
}

fn infer(terms: &[Term]) -> VariableLayout {
    let (mut blocks, mut slots) = (1, 1);
    for (v, _) in terms.iter().flat_map(|t| &t.factors) {
        let (b, s) = match *v {
            VarRef::Block { block, slot } => (block, slot),
            VarRef::AliasX(s) => (1, s),
            VarRef::AliasY(s) => (2, s),
        };
        blocks = blocks.max(b);
        slots = slots.max(s);
    }
    VariableLayout::new(blocks, slots).expect("indices are positive")
}

/// Parses a polynomial, inferring the smallest layout that fits.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let terms = lex(text)?;
    let layout = infer(&terms);
    build(terms, layout)
}

/// Parses a polynomial in a given layout.
pub fn parse_poly_in(text: &str, layout: VariableLayout) -> Result<Poly> {
    build(lex(text)?, layout)
}

fn build(terms: Vec<Term>, layout: VariableLayout) -> Result<Poly> {
    let mut poly = Poly::zero(layout);
    for term in terms {
        let mut exps = vec![0u32; layout.num_vars()];
        for (v, e) in term.factors {
            let (block, slot) = match v {
                VarRef::Block { block, slot } => (block, slot),
                VarRef::AliasX(s) if layout.blocks() <= 2 => (1, s),
                VarRef::AliasY(s) if layout.blocks() == 2 => (2, s),
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "variable alias {v:?} is ambiguous in a layout with {} blocks",
                        layout.blocks()
                    )))
                }
            };
            if block > layout.blocks() || slot > layout.vars_per_block() {
                return Err(Error::LayoutMismatch(format!(
                    "variable in block {block}, slot {slot} is outside a {}x{} layout",
                    layout.blocks(),
                    layout.vars_per_block()
                )));
            }
            let idx = layout.index(block - 1, slot - 1);
            exps[idx] = exps[idx]
                .checked_add(e)
                .filter(|&d| d < 64)
                .ok_or_else(|| Error::InvalidInput("exponent too large".into()))?;
        }
        poly.add_term(Monomial::from_exponents(exps), term.coeff);
    }
    Ok(poly)
}
