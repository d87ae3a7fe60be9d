//! Polynomial expression parser used for input files and tests.
//!
//! Grammar: sums of products of factors, a factor being a rational literal,
//! a ring variable, or a parenthesized expression, optionally with `^ n`.

use super::poly::{Poly, PolyRing};
use super::rat::Rat;

#[derive(Debug, thiserror::Error)]
#[error("polynomial parse error at byte {pos}: {msg}")]
pub struct PolyParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    ring: &'a PolyRing,
    input: &'a [u8],
    pos: usize,
}

impl PolyRing {
    pub fn parse(&self, s: &str) -> Result<Poly, PolyParseError> {
        let mut p = Parser { ring: self, input: s.as_bytes(), pos: 0 };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.input.len() {
            return Err(p.err("trailing input"));
        }
        Ok(poly)
    }
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyParseError {
        PolyParseError { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, PolyParseError> {
        let mut neg = false;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
            }
            Some(b'-') => {
                self.pos += 1;
                neg = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t, self.ring);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t, self.ring);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f, self.ring);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyParseError> {
        let base = self.base()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            let e = self.uint()?;
            return Ok(base.pow(e, self.ring));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly, PolyParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint_big()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.uint_big()?;
                    if d == "0" {
                        return Err(self.err("zero denominator"));
                    }
                    let r: Rat = format!("{}/{}", n, d)
                        .parse()
                        .map_err(|_| self.err("bad rational"))?;
                    Ok(self.ring.constant(r))
                } else {
                    let r: Rat = n.parse().map_err(|_| self.err("bad integer"))?;
                    Ok(self.ring.constant(r))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.input.len()
                    && (self.input[self.pos].is_ascii_alphanumeric()
                        || self.input[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable '{}'", name)))
                    }
                }
            }
            _ => Err(self.err("expected factor")),
        }
    }

    fn uint_big(&mut self) -> Result<String, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected number"));
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos]).unwrap().to_string())
    }

    fn uint(&mut self) -> Result<u32, PolyParseError> {
        let s = self.uint_big()?;
        s.parse().map_err(|_| self.err("exponent out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::super::monomial::MonomialOrder;
    use super::super::poly::PolyRing;

    #[test]
    fn parses_products_of_sums() {
        let r = PolyRing::new(vec!["x1", "x2", "y1", "y2"], MonomialOrder::GrevLex);
        let f = r.parse("(x1 - x2)*(y1 - y2)").unwrap();
        assert_eq!(r.poly_to_string(&f), "x1*y1 - x2*y1 - x1*y2 + x2*y2");
        let g = r.parse("-x1^2 + 3/2*x2*y1 - 7").unwrap();
        assert_eq!(r.poly_to_string(&g), "-x1^2 + 3/2*x2*y1 - 7");
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = PolyRing::new(vec!["x"], MonomialOrder::GrevLex);
        assert!(r.parse("x + w").is_err());
        assert!(r.parse("x +").is_err());
        assert!(r.parse("(x").is_err());
    }

    #[test]
    fn roundtrips_display() {
        let r = PolyRing::new(vec!["x", "y"], MonomialOrder::GrevLex);
        for s in ["0", "1", "-1/2", "x^2 - y^2", "x*y + 1", "-x + 2*y - 3"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.poly_to_string(&p), s);
        }
    }
}
