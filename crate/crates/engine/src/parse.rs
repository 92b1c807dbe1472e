//! Recursive-descent parser for the polynomial text grammar: integer or `a/b`
//! rational coefficients, `*` products, `^` powers, `+`/`-`, parentheses.
//! Variables are identifiers declared at ring creation.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingRef;

pub fn poly_parse(ring: &RingRef, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        chars: text.chars().collect(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input at byte {}",
            p.pos
        )));
    }
    Ok(poly)
}

struct Parser<'a> {
    ring: &'a RingRef,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut neg = false;
        if let Some(c) = self.peek() {
            if c == '+' || c == '-' {
                self.bump();
                neg = c == '-';
            }
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                let f = self.factor()?;
                acc = acc.mul(&f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let n = self.uint()?;
            return base.pow(n);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(Error::Parse("expected `)`".into()));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.variable(),
            other => Err(Error::Parse(format!("unexpected input: {:?}", other))),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected an integer".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<u32>()
            .map_err(|_| Error::Parse(format!("malformed exponent `{}`", s)))
    }

    fn rational(&mut self) -> Result<Polynomial> {
        let num = self.uint()? as i64;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            let den = self.uint()? as i64;
            let c = Coeff::from_ratio(num, den, self.ring.charac())?;
            return Ok(Polynomial::constant(self.ring, c));
        }
        Ok(Polynomial::constant(
            self.ring,
            Coeff::from_i64(num, self.ring.charac()),
        ))
    }

    fn variable(&mut self) -> Result<Polynomial> {
        let start = self.pos;
        self.pos += 1;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match self.ring.var_index(&name) {
            Some(i) => Ok(Polynomial::var(self.ring, i)),
            None => Err(Error::UnknownVariable(name)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    #[test]
    fn parses_edge_binomial() {
        let r = PolyRing::standard(&["x1", "x2", "y1", "y2"], 0).unwrap();
        let f = poly_parse(&r, "x1*y2 - x2*y1").unwrap();
        assert_eq!(f.num_terms(), 2);
        // canonical form leads with x2*y1 under degrevlex in this order
        assert_eq!(f.render(), "-x2*y1 + x1*y2");
        assert_eq!(poly_parse(&r, &f.render()).unwrap(), f);
    }

    #[test]
    fn zero_and_ring_identity() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        assert!(poly_parse(&r, "0").unwrap().is_zero());
        let f = poly_parse(&r, "(x+y)^2 - x^2 - 2*x*y").unwrap();
        assert_eq!(f.render(), "y^2");
    }

    #[test]
    fn rational_coefficients() {
        let r = PolyRing::standard(&["x"], 0).unwrap();
        let f = poly_parse(&r, "1/2*x + 1/2*x").unwrap();
        assert_eq!(f.render(), "x");
    }

    #[test]
    fn rejects_unknowns_and_garbage() {
        let r = PolyRing::standard(&["x"], 0).unwrap();
        assert!(matches!(
            poly_parse(&r, "x + w"),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(poly_parse(&r, "x +"), Err(Error::Parse(_))));
        assert!(matches!(poly_parse(&r, "x x"), Err(Error::Parse(_))));
        assert!(matches!(poly_parse(&r, "1/0"), Err(Error::ZeroDivision)));
    }

    #[test]
    fn roundtrip_parse_render() {
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        for text in [
            "x^2*y - 3*z + 1/4",
            "-x + y",
            "0",
            "2/3",
            "x*y*z - x*y + x - 1",
        ] {
            let f = poly_parse(&r, text).unwrap();
            let g = poly_parse(&r, &f.render()).unwrap();
            assert_eq!(f, g);
        }
    }
}
