//! Polynomial expressions: sums, products, powers, parentheses and rational constants.

use num::bigint::BigInt;
use num::One;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ring::{Polynomial, Ring};

/// Parse `src` as a polynomial in `ring`; `*` between factors is optional.
pub fn parse_polynomial<F: Field>(ring: &Ring<F>, src: &str) -> Result<Polynomial<F>> {
    parse_polynomial_at(ring, src, 1, 1)
}

/// As [`parse_polynomial`], reporting positions relative to `(line, column)`.
pub fn parse_polynomial_at<F: Field>(ring: &Ring<F>, src: &str, line: usize, column: usize) -> Result<Polynomial<F>> {
    let mut p = Parser { ring, chars: src.chars().collect(), pos: 0, line, column };
    let out = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, message: String) -> Error {
        let mut line = self.line;
        let mut column = self.column;
        for c in &self.chars[..self.pos.min(self.chars.len())] {
            if *c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse { line, column, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Polynomial<F>> {
        let mut acc = Polynomial::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { self.ring.sub(&acc, &t) } else { self.ring.add(&acc, &t) };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = self.ring.mul(&acc, &f);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let c = constant_of(self.ring, &d).ok_or_else(|| self.error("division by a non-constant".into()))?;
                    let inv = self.ring.field().inv(&c).ok_or_else(|| self.error("division by zero".into()))?;
                    acc = self.ring.scale(&inv, &acc);
                }
                Some(c) if c == '(' || c.is_alphanumeric() || c == '_' => {
                    let f = self.power()?;
                    acc = self.ring.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer().ok_or_else(|| self.error("expected an exponent".into()))?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large".into()))?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().expect("digit");
                let c = self.ring.field().from_ratio(&n, &BigInt::one()).map_err(|e| self.error(e.to_string()))?;
                Ok(self.ring.constant(c))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let mut end = start;
                while end < self.chars.len() && (self.chars[end].is_alphanumeric() || self.chars[end] == '_') {
                    end += 1;
                }
                // longest variable name that prefixes the identifier; trailing digits are an exponent
                let word: String = self.chars[start..end].iter().collect();
                let found = (1..=word.len()).rev().find_map(|k| {
                    let name: String = word.chars().take(k).collect();
                    self.ring.var_by_name(&name).map(|v| (k, v))
                });
                let Some((k, v)) = found else {
                    return Err(self.error(format!("unknown variable `{word}`")));
                };
                self.pos = start + k;
                if self.pos < end && self.chars[self.pos].is_ascii_digit() {
                    let e = self.integer().expect("digit");
                    let e: u32 = e.try_into().map_err(|_| self.error("exponent too large".into()))?;
                    return Ok(self.ring.pow(&v, e));
                }
                Ok(v)
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}

fn constant_of<F: Field>(ring: &Ring<F>, p: &Polynomial<F>) -> Option<F::Elem> {
    match p.terms() {
        [] => Some(ring.field().zero()),
        [(m, c)] if m.is_one() => Some(c.clone()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn implicit_and_explicit_products_agree() {
        let r = Ring::polynomial(Rationals, &["x", "y", "z"]).unwrap();
        let a = parse_polynomial(&r, "2x^2y - (x+y)^2 + 1/2 z").unwrap();
        let b = parse_polynomial(&r, "2*x^2*y - x^2 - 2*x*y - y^2 + z/2").unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial(&r, "xy2z - x y^2 z").unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn unknown_variable_reports_position() {
        let r = Ring::polynomial(PrimeField::default(), &["x", "y"]).unwrap();
        match parse_polynomial(&r, "x +\n  w") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
    }
}
