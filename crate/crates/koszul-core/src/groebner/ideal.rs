//! Ideal-level wrappers over the module Groebner engine, plus the
//! elimination-based ideal operations.

use crate::polycore::{Poly, PolyRing};

use super::module::{module_gb, svec_nf, SVec};

pub fn ideal_gb(ring: &PolyRing, gens: &[Poly]) -> Vec<Poly> {
    let vecs: Vec<SVec> = gens.iter().map(|p| vec![p.clone()]).collect();
    module_gb(ring, &vecs).into_iter().map(|mut v| v.pop().unwrap()).collect()
}

pub fn nf_poly(ring: &PolyRing, f: &Poly, gb: &[Poly]) -> Poly {
    let vecs: Vec<SVec> = gb.iter().map(|p| vec![p.clone()]).collect();
    let mut r = svec_nf(ring, &vec![f.clone()], &vecs);
    r.pop().unwrap()
}

pub fn ideal_member(ring: &PolyRing, f: &Poly, gb: &[Poly]) -> bool {
    nf_poly(ring, f, gb).is_zero()
}

pub fn is_unit_ideal(ring: &PolyRing, gb: &[Poly]) -> bool {
    ideal_member(ring, &ring.one(), gb)
}

/// Equality of ideals given by generating sets, via mutual membership.
pub fn ideals_equal(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> bool {
    let ga = ideal_gb(ring, a);
    let gb = ideal_gb(ring, b);
    a.iter().all(|f| ideal_member(ring, f, &gb)) && b.iter().all(|f| ideal_member(ring, f, &ga))
}

/// I  cap  J by the single-tag elimination trick: eliminate t from t*I + (1-t)*J.
pub fn ideal_intersection(ring: &PolyRing, i_gens: &[Poly], j_gens: &[Poly]) -> Vec<Poly> {
    if i_gens.iter().all(|p| p.is_zero()) || j_gens.iter().all(|p| p.is_zero()) {
        return vec![];
    }
    let ext = ring.with_elimination_var("t#");
    let t = ext.var(0);
    let one_minus_t = ext.one().sub(&t, &ext);
    let mut gens = Vec::new();
    for f in i_gens {
        gens.push(f.embed(1, 0, &ext).mul(&t, &ext));
    }
    for g in j_gens {
        gens.push(g.embed(1, 0, &ext).mul(&one_minus_t, &ext));
    }
    let gb = ideal_gb(&ext, &gens);
    gb.into_iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exp(0) == 0))
        .map(|p| p.project_out_front(1, ring))
        .collect()
}

pub fn ideal_intersection_many(ring: &PolyRing, ideals: &[Vec<Poly>]) -> Vec<Poly> {
    match ideals.len() {
        0 => vec![ring.one()],
        1 => ideals[0].clone(),
        _ => {
            let mut acc = ideals[0].clone();
            for next in &ideals[1..] {
                acc = ideal_intersection(ring, &acc, next);
            }
            acc
        }
    }
}

/// Exact quotient p / f; panics when the division leaves a remainder.
pub fn exact_div(ring: &PolyRing, p: &Poly, f: &Poly) -> Poly {
    assert!(!f.is_zero(), "division by zero polynomial");
    let mut rem = p.clone();
    let mut q = ring.zero();
    let (fm, fc) = {
        let (m, c) = f.lt().unwrap();
        (m.clone(), c.clone())
    };
    while let Some((m, c)) = rem.lt().map(|(m, c)| (m.clone(), c.clone())) {
        assert!(fm.divides(&m), "inexact polynomial division");
        let qm = fm.div_into(&m);
        let qc = &c / &fc;
        let term = ring.monomial(qm, qc);
        q = q.add(&term, ring);
        rem = rem.sub(&f.mul(&term, ring), ring);
    }
    q
}

/// Colon ideal (I : f) computed as (I  cap  (f)) / f.
pub fn colon_ideal(ring: &PolyRing, i_gens: &[Poly], f: &Poly) -> Vec<Poly> {
    assert!(!f.is_zero());
    let inter = ideal_intersection(ring, i_gens, &[f.clone()]);
    inter.iter().map(|p| exact_div(ring, p, f)).collect()
}

/// Smallest k <= max_pow with f^k in I, if any. Witness-power radical test.
pub fn radical_membership_witness(
    ring: &PolyRing,
    f: &Poly,
    gb: &[Poly],
    max_pow: u32,
) -> Option<u32> {
    let mut p = ring.one();
    for k in 1..=max_pow {
        p = p.mul(f, ring);
        if ideal_member(ring, &p, gb) {
            return Some(k);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::MonomialOrder;

    fn ring2() -> PolyRing {
        PolyRing::new(vec!["x", "y"], MonomialOrder::GrevLex)
    }

    #[test]
    fn textbook_groebner_basis() {
        let r = ring2();
        // I = (x^2 + y^2, x*y): GB adds y^3.
        let gens = vec![r.parse("x^2 + y^2").unwrap(), r.parse("x*y").unwrap()];
        let gb = ideal_gb(&r, &gens);
        assert!(ideal_member(&r, &r.parse("y^3").unwrap(), &gb));
        assert!(!ideal_member(&r, &r.parse("y^2").unwrap(), &gb));
        assert!(ideal_member(&r, &r.parse("x^3").unwrap(), &gb));
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let r = ring2();
        let i = vec![r.parse("x").unwrap()];
        let j = vec![r.parse("y").unwrap()];
        let inter = ideal_intersection(&r, &i, &j);
        assert!(ideals_equal(&r, &inter, &[r.parse("x*y").unwrap()]));
    }

    #[test]
    fn intersection_nontrivial() {
        let r = ring2();
        // (x) cap (x - y^2, y^3) in k[x,y]
        let i = vec![r.parse("x").unwrap()];
        let j = vec![r.parse("x - y^2").unwrap(), r.parse("y^3").unwrap()];
        let inter = ideal_intersection(&r, &i, &j);
        for f in &inter {
            assert!(ideal_member(&r, f, &ideal_gb(&r, &i)));
            assert!(ideal_member(&r, f, &ideal_gb(&r, &j)));
        }
        // x*y is in both: x | x*y and x*y = y*(x - y^2) + y^3.
        let gbi = ideal_gb(&r, &inter);
        assert!(ideal_member(&r, &r.parse("x*y").unwrap(), &gbi));
        assert!(!ideal_member(&r, &r.parse("x").unwrap(), &gbi));
    }

    #[test]
    fn colon_and_exact_division() {
        let r = ring2();
        let i = vec![r.parse("x^2*y").unwrap(), r.parse("x*y^2").unwrap()];
        let f = r.parse("x*y").unwrap();
        let c = colon_ideal(&r, &i, &f);
        assert!(ideals_equal(&r, &c, &[r.parse("x").unwrap(), r.parse("y").unwrap()]));
        let p = r.parse("x^3*y + x^2*y^2").unwrap();
        assert_eq!(exact_div(&r, &p, &f), r.parse("x^2 + x*y").unwrap());
    }

    #[test]
    fn radical_witness() {
        let r = ring2();
        let gb = ideal_gb(&r, &[r.parse("x^3").unwrap(), r.parse("y - x").unwrap()]);
        assert_eq!(radical_membership_witness(&r, &r.parse("y").unwrap(), &gb, 6), Some(3));
        assert_eq!(radical_membership_witness(&r, &r.parse("x + 1").unwrap(), &gb, 6), None);
    }
}
