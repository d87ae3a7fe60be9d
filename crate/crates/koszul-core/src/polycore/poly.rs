//! Sparse multivariate polynomials over the rationals.
//!
//! A `Poly` stores nonzero terms sorted strictly descending in the order of the
//! ambient `PolyRing`. Operations that depend on the term order take the ring.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::monomial::{Monomial, MonomialOrder};
use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: Into<String>>(vars: Vec<S>, order: MonomialOrder) -> Self {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(!vars.iter().any(|v| v.is_empty()), "empty variable name");
        PolyRing { vars, order }
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { vars: self.vars.clone(), order }
    }

    /// Ring with one auxiliary variable prepended, ordered to eliminate it.
    pub fn with_elimination_var(&self, name: &str) -> PolyRing {
        let mut vars = vec![name.to_string()];
        vars.extend(self.vars.iter().cloned());
        PolyRing { vars, order: MonomialOrder::Block { first: 1 } }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one(&self) -> Poly {
        self.constant(Rat::one())
    }

    pub fn constant(&self, c: Rat) -> Poly {
        if c.is_zero() {
            self.zero()
        } else {
            Poly { terms: vec![(Monomial::one(self.n_vars()), c)] }
        }
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly { terms: vec![(Monomial::var(i, self.n_vars()), Rat::one())] }
    }

    pub fn monomial(&self, m: Monomial, c: Rat) -> Poly {
        assert_eq!(m.n_vars(), self.n_vars());
        if c.is_zero() {
            self.zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms(&self, terms: Vec<(Monomial, Rat)>) -> Poly {
        let mut p = Poly { terms };
        p.normalize(self);
        p
    }

    /// Re-sorts a polynomial that was built under a different order.
    pub fn renormalize(&self, p: &Poly) -> Poly {
        self.from_terms(p.terms.clone())
    }

    pub fn poly_to_string(&self, p: &Poly) -> String {
        if p.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mon = self.monomial_to_string(m);
            if mon.is_empty() {
                let _ = write!(out, "{}", mag);
            } else if mag.is_one() {
                out.push_str(&mon);
            } else {
                let _ = write!(out, "{}*{}", mag, mon);
            }
        }
        out
    }

    pub fn monomial_to_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 1 {
                parts.push(self.vars[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.vars[i], e));
            }
        }
        parts.join("*")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rat)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the ring order the polynomial is normalized in.
    pub fn lt(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lc(&self) -> Option<&Rat> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn deg(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg()).max().unwrap_or(0)
    }

    /// Minimal total degree among terms (the order of vanishing at 0).
    pub fn ord_deg(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg()).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.deg() == w[1].0.deg())
            || self.terms.len() <= 1
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.deg() == d).cloned().collect() }
    }

    /// Sum of the terms of minimal total degree.
    pub fn lowest_form(&self) -> Poly {
        self.homogeneous_component(self.ord_deg())
    }

    fn normalize(&mut self, ring: &PolyRing) {
        let order = ring.order();
        self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rat)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += &c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn add(&self, other: &Poly, ring: &PolyRing) -> Poly {
        let order = ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp(&self.terms[i].0, &other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Poly, ring: &PolyRing) -> Poly {
        self.add(&other.neg(), ring)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Multiplication by a single term keeps the term order intact.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn mul(&self, other: &Poly, ring: &PolyRing) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        ring.from_terms(acc.into_iter().collect())
    }

    pub fn pow(&self, k: u32, ring: &PolyRing) -> Poly {
        let mut out = ring.one();
        for _ in 0..k {
            out = out.mul(self, ring);
        }
        out
    }

    pub fn monic(&self) -> Poly {
        match self.lc() {
            None => Poly::zero(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut out = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v *= &point[i].pow(e);
                }
            }
            out += &v;
        }
        out
    }

    /// Reinterprets the polynomial in a ring with `front` new leading variables
    /// and `back` new trailing variables; existing exponents shift right by `front`.
    pub fn embed(&self, front: usize, back: usize, target: &PolyRing) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; front];
                exps.extend_from_slice(m.exps());
                exps.extend(std::iter::repeat(0).take(back));
                (Monomial::new(exps), c.clone())
            })
            .collect();
        target.from_terms(terms)
    }

    /// Drops the first `front` variables; caller must ensure they do not occur.
    pub fn project_out_front(&self, front: usize, target: &PolyRing) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                assert!(m.exps()[..front].iter().all(|&e| e == 0));
                (Monomial::new(m.exps()[front..].to_vec()), c.clone())
            })
            .collect();
        target.from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::new(vec!["x", "y", "z"], MonomialOrder::GrevLex)
    }

    #[test]
    fn product_and_display() {
        let r = ring();
        let f = r.parse("x + y").unwrap();
        let g = r.parse("x - y").unwrap();
        let h = f.mul(&g, &r);
        assert_eq!(r.poly_to_string(&h), "x^2 - y^2");
        assert_eq!(r.poly_to_string(&f.mul(&f, &r)), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn leading_term_respects_order() {
        let r = ring();
        let f = r.parse("y^3 + x*z^2").unwrap();
        // grevlex: y^3 > x*z^2
        assert_eq!(r.monomial_to_string(f.lm().unwrap()), "y^3");
        let rl = r.with_order(MonomialOrder::Lex);
        let f = rl.renormalize(&f);
        assert_eq!(rl.monomial_to_string(f.lm().unwrap()), "x*z^2");
    }

    #[test]
    fn eval_matches_substitution() {
        let r = ring();
        let f = r.parse("x^2*y - 2*z + 1/2").unwrap();
        let v = f.eval(&["1/2".parse().unwrap(), "4".parse().unwrap(), "-1".parse().unwrap()]);
        assert_eq!(v.to_string(), "7/2");
    }

    #[test]
    fn homogeneous_parts() {
        let r = ring();
        let f = r.parse("x^2 - y + 3").unwrap();
        assert!(!f.is_homogeneous());
        assert_eq!(f.ord_deg(), 0);
        assert_eq!(r.poly_to_string(&f.lowest_form()), "3");
        assert_eq!(r.poly_to_string(&f.homogeneous_component(1)), "-y");
    }
}
