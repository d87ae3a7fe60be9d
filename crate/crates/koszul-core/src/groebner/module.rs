//! Groebner bases for submodules of free modules S^r over a polynomial ring.
//!
//! Vectors are dense `Vec<Poly>` of length r with each entry normalized in the
//! ring's term order. Module terms are compared position-over-term: e_0 > e_1
//! > ... and ties broken by the ring's monomial order. Syzygies and lifts use
//! the classical tagged-module elimination: the tag block sits in components
//! r..r+s, which position-over-term automatically eliminates.

use std::collections::BTreeSet;

use crate::polycore::{Monomial, Poly, PolyRing, Rat};

pub type SVec = Vec<Poly>;

pub fn svec_zero(rank: usize) -> SVec {
    vec![Poly::zero(); rank]
}

pub fn svec_is_zero(v: &SVec) -> bool {
    v.iter().all(|p| p.is_zero())
}

pub fn svec_add(ring: &PolyRing, a: &SVec, b: &SVec) -> SVec {
    a.iter().zip(b).map(|(p, q)| p.add(q, ring)).collect()
}

pub fn svec_sub(ring: &PolyRing, a: &SVec, b: &SVec) -> SVec {
    a.iter().zip(b).map(|(p, q)| p.sub(q, ring)).collect()
}

pub fn svec_scale(v: &SVec, c: &Rat) -> SVec {
    v.iter().map(|p| p.scale(c)).collect()
}

pub fn svec_mul_term(v: &SVec, m: &Monomial, c: &Rat) -> SVec {
    v.iter().map(|p| p.mul_term(m, c)).collect()
}

pub fn svec_mul_poly(ring: &PolyRing, v: &SVec, f: &Poly) -> SVec {
    v.iter().map(|p| p.mul(f, ring)).collect()
}

/// Leading module term `(component, monomial, coefficient)` under
/// position-over-term, or None for the zero vector.
pub fn svec_lead(v: &SVec) -> Option<(usize, &Monomial, &Rat)> {
    for (i, p) in v.iter().enumerate() {
        if let Some((m, c)) = p.lt() {
            return Some((i, m, c));
        }
    }
    None
}

fn svec_monic(v: &SVec) -> SVec {
    match svec_lead(v) {
        None => v.clone(),
        Some((_, _, c)) => svec_scale(v, &c.inv()),
    }
}

/// Full normal form of `v` against `gb`: no term of the result is divisible by
/// the leading term of any basis element in the matching component.
pub fn svec_nf(ring: &PolyRing, v: &SVec, gb: &[SVec]) -> SVec {
    let rank = v.len();
    let mut rem = svec_zero(rank);
    let mut p = v.clone();
    'outer: while let Some((c, m, a)) = svec_lead(&p).map(|(c, m, a)| (c, m.clone(), a.clone())) {
        for g in gb {
            if let Some((gc, gm, _)) = svec_lead(g) {
                if gc == c && gm.divides(&m) {
                    let q = gm.div_into(&m);
                    p = svec_sub(ring, &p, &svec_mul_term(g, &q, &a));
                    continue 'outer;
                }
            }
        }
        let t = ring.monomial(m.clone(), a.clone());
        rem[c] = rem[c].add(&t, ring);
        p[c] = p[c].sub(&t, ring);
    }
    rem
}

pub fn svec_reduces_to_zero(ring: &PolyRing, v: &SVec, gb: &[SVec]) -> bool {
    svec_is_zero(&svec_nf(ring, v, gb))
}

fn spair(ring: &PolyRing, f: &SVec, g: &SVec) -> SVec {
    let (cf, mf, _) = svec_lead(f).unwrap();
    let (cg, mg, _) = svec_lead(g).unwrap();
    debug_assert_eq!(cf, cg);
    let l = mf.lcm(mg);
    let a = svec_mul_term(f, &mf.div_into(&l), &Rat::one());
    let b = svec_mul_term(g, &mg.div_into(&l), &Rat::one());
    svec_sub(ring, &a, &b)
}

fn supported_only_on_lead(v: &SVec) -> bool {
    let Some((c, _, _)) = svec_lead(v) else { return true };
    v.iter().enumerate().all(|(i, p)| i == c || p.is_zero())
}

/// Buchberger's algorithm with the product criterion (restricted to vectors
/// supported on a single component) and the chain criterion.
pub fn module_gb(ring: &PolyRing, gens: &[SVec]) -> Vec<SVec> {
    let mut g: Vec<SVec> = gens
        .iter()
        .filter(|v| !svec_is_zero(v))
        .map(svec_monic)
        .collect();
    g.dedup();

    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let add_pairs = |g: &[SVec],
                         t: usize,
                         pending: &mut BTreeSet<(u32, usize, usize)>,
                         pending_pairs: &mut BTreeSet<(usize, usize)>| {
        let (ct, mt, _) = svec_lead(&g[t]).unwrap();
        for i in 0..t {
            let (ci, mi, _) = svec_lead(&g[i]).unwrap();
            if ci == ct {
                let deg = mi.lcm(mt).deg();
                pending.insert((deg, i, t));
                pending_pairs.insert((i, t));
            }
        }
    };
    for t in 0..g.len() {
        add_pairs(&g, t, &mut pending, &mut pending_pairs);
    }

    while let Some(&(deg, i, j)) = pending.iter().next() {
        pending.remove(&(deg, i, j));
        pending_pairs.remove(&(i, j));

        let (ci, mi, _) = svec_lead(&g[i]).unwrap();
        let (_, mj, _) = svec_lead(&g[j]).unwrap();
        let lcm = mi.lcm(mj);

        // Product criterion, valid only in the single-component (ideal) case.
        if mi.coprime(mj) && supported_only_on_lead(&g[i]) && supported_only_on_lead(&g[j]) {
            continue;
        }
        // Chain criterion: some g_k divides the lcm and both companion pairs
        // were already treated.
        let mut skip = false;
        for (k, gk) in g.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let (ck, mk, _) = svec_lead(gk).unwrap();
            if ck == ci && mk.divides(&lcm) {
                let pik = (i.min(k), i.max(k));
                let pjk = (j.min(k), j.max(k));
                if !pending_pairs.contains(&pik) && !pending_pairs.contains(&pjk) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }

        let s = spair(ring, &g[i], &g[j]);
        let h = svec_nf(ring, &s, &g);
        if !svec_is_zero(&h) {
            g.push(svec_monic(&h));
            let t = g.len() - 1;
            add_pairs(&g, t, &mut pending, &mut pending_pairs);
        }
    }

    interreduce(ring, g)
}

/// Minimal reduced basis: leading terms pairwise indivisible, every element
/// fully reduced against the others, deterministic order.
fn interreduce(ring: &PolyRing, mut g: Vec<SVec>) -> Vec<SVec> {
    // Minimalize: drop elements whose lead is divisible by another lead.
    let mut keep = vec![true; g.len()];
    for i in 0..g.len() {
        if !keep[i] {
            continue;
        }
        let (ci, mi, _) = svec_lead(&g[i]).unwrap();
        for j in 0..g.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (cj, mj, _) = svec_lead(&g[j]).unwrap();
            if ci == cj && mj.divides(mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<SVec> = g
        .drain(..)
        .zip(keep)
        .filter_map(|(v, k)| if k { Some(v) } else { None })
        .collect();

    // Tail-reduce each against the others until stable.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<SVec> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v.clone())
                .collect();
            let r = svec_monic(&svec_nf(ring, &minimal[i], &others));
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    minimal.sort_by(|a, b| {
        let (ca, ma, _) = svec_lead(a).unwrap();
        let (cb, mb, _) = svec_lead(b).unwrap();
        ca.cmp(&cb).then_with(|| ring.order().cmp(ma, mb))
    });
    minimal
}

/// Groebner basis of the tagged module { (f_i, e_i) } used for lifts,
/// membership with witnesses, and syzygies.
pub struct TaggedGB {
    pub rank: usize,
    pub n_gens: usize,
    gb: Vec<SVec>,
}

impl TaggedGB {
    pub fn new(ring: &PolyRing, rank: usize, gens: &[SVec]) -> TaggedGB {
        let s = gens.len();
        let tagged: Vec<SVec> = gens
            .iter()
            .enumerate()
            .map(|(i, f)| {
                assert_eq!(f.len(), rank, "generator rank mismatch");
                let mut v = f.clone();
                v.extend((0..s).map(|j| if i == j { ring.one() } else { Poly::zero() }));
                v
            })
            .collect();
        TaggedGB { rank, n_gens: s, gb: module_gb(ring, &tagged) }
    }

    /// Writes `v = sum q_i f_i` if possible; returns the coefficient vector q.
    pub fn lift(&self, ring: &PolyRing, v: &SVec) -> Option<Vec<Poly>> {
        assert_eq!(v.len(), self.rank);
        let mut w = v.clone();
        w.extend((0..self.n_gens).map(|_| Poly::zero()));
        let r = svec_nf(ring, &w, &self.gb);
        if r[..self.rank].iter().all(|p| p.is_zero()) {
            Some(r[self.rank..].iter().map(|p| p.neg()).collect())
        } else {
            None
        }
    }

    /// Generators of the syzygy module of the original generators.
    pub fn syzygies(&self) -> Vec<Vec<Poly>> {
        self.gb
            .iter()
            .filter(|g| g[..self.rank].iter().all(|p| p.is_zero()))
            .map(|g| g[self.rank..].to_vec())
            .collect()
    }
}

pub fn syzygies(ring: &PolyRing, rank: usize, gens: &[SVec]) -> Vec<Vec<Poly>> {
    TaggedGB::new(ring, rank, gens).syzygies()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::MonomialOrder;

    fn ring3() -> PolyRing {
        PolyRing::new(vec!["x", "y", "z"], MonomialOrder::GrevLex)
    }

    fn sv(ring: &PolyRing, entries: &[&str]) -> SVec {
        entries.iter().map(|s| ring.parse(s).unwrap()).collect()
    }

    #[test]
    fn koszul_syzygies_of_variables() {
        let r = ring3();
        let gens: Vec<SVec> = vec![sv(&r, &["x"]), sv(&r, &["y"]), sv(&r, &["z"])];
        let syz = syzygies(&r, 1, &gens);
        // Syz(x, y, z) is generated by the three Koszul relations.
        assert_eq!(syz.len(), 3);
        for s in &syz {
            let mut acc = r.zero();
            for (si, gi) in s.iter().zip(&gens) {
                acc = acc.add(&si.mul(&gi[0], &r), &r);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn lift_membership() {
        let r = ring3();
        let gens: Vec<SVec> = vec![sv(&r, &["x^2 + y"]), sv(&r, &["x*y - z"])];
        let tg = TaggedGB::new(&r, 1, &gens);
        let target = sv(&r, &["y*x^2 + y^2 + z*x*y - z^2"]); // y*g0 + z*g1
        let q = tg.lift(&r, &target).expect("should lift");
        let mut acc = r.zero();
        for (qi, gi) in q.iter().zip(&gens) {
            acc = acc.add(&qi.mul(&gi[0], &r), &r);
        }
        assert_eq!(acc, target[0]);
        assert!(tg.lift(&r, &sv(&r, &["x"])).is_none());
    }

    #[test]
    fn module_gb_detects_membership() {
        let r = ring3();
        // Submodule of S^2 generated by (x, y), (y, x), (0, x^2 - y^2).
        let gens = vec![sv(&r, &["x", "y"]), sv(&r, &["y", "x"]), sv(&r, &["0", "x^2 - y^2"])];
        let gb = module_gb(&r, &gens);
        // y*(x,y) - x*(y,x) = (0, y^2 - x^2) is in the module.
        let v = sv(&r, &["0", "y^2 - x^2"]);
        assert!(svec_reduces_to_zero(&r, &v, &gb));
        let w = sv(&r, &["0", "y^2"]);
        assert!(!svec_reduces_to_zero(&r, &w, &gb));
    }

    #[test]
    fn syzygy_vectors_annihilate_generators() {
        let r = ring3();
        let gens = vec![
            sv(&r, &["x", "y"]),
            sv(&r, &["y", "x"]),
            sv(&r, &["z", "z"]),
            sv(&r, &["x + y", "x + y"]),
        ];
        let syz = syzygies(&r, 2, &gens);
        assert!(!syz.is_empty());
        for s in &syz {
            for row in 0..2 {
                let mut acc = r.zero();
                for (si, gi) in s.iter().zip(&gens) {
                    acc = acc.add(&si.mul(&gi[row], &r), &r);
                }
                assert!(acc.is_zero());
            }
        }
    }
}
