//! Finitely presented modules: subquotient presentations, minimization,
//! annihilators, Fitting ideals, and exterior powers.

use itertools::Itertools;

use crate::polycore::{Poly, PolyRing};

use super::ideal::{ideal_gb, ideal_intersection_many};
use super::module::{svec_is_zero, svec_sub, syzygies, SVec, TaggedGB};

/// Cokernel presentation: M = S^{n_gens} / <relation columns>.
/// `shifts[i]` is the internal degree of generator i when every relation
/// column is homogeneous with respect to some assignment; otherwise None.
#[derive(Clone, Debug)]
pub struct FpModule {
    pub n_gens: usize,
    pub gen_labels: Vec<String>,
    pub relations: Vec<SVec>,
    pub shifts: Option<Vec<u32>>,
}

impl FpModule {
    pub fn free(labels: Vec<String>, shifts: Option<Vec<u32>>) -> FpModule {
        FpModule { n_gens: labels.len(), gen_labels: labels, relations: vec![], shifts }
    }

    pub fn zero() -> FpModule {
        FpModule { n_gens: 0, gen_labels: vec![], relations: vec![], shifts: Some(vec![]) }
    }

    pub fn is_zero_presentation(&self) -> bool {
        self.n_gens == 0
    }

    /// Degrees are consistent when each relation column is homogeneous after
    /// shifting by the generator degrees.
    pub fn is_graded(&self) -> bool {
        let Some(shifts) = &self.shifts else { return false };
        self.relations.iter().all(|col| {
            let mut coldeg: Option<u32> = None;
            col.iter().enumerate().all(|(i, p)| {
                if p.is_zero() {
                    return true;
                }
                if !p.is_homogeneous() {
                    return false;
                }
                let d = p.deg() + shifts[i];
                match coldeg {
                    None => {
                        coldeg = Some(d);
                        true
                    }
                    Some(c) => c == d,
                }
            })
        })
    }
}

/// Presentation of <sub_gens> / <quot_gens> inside S^rank.
/// Every quotient generator must lie in the span of the sub generators.
pub fn subquotient(
    ring: &PolyRing,
    rank: usize,
    sub_gens: &[SVec],
    gen_labels: Vec<String>,
    quot_gens: &[SVec],
) -> FpModule {
    assert_eq!(sub_gens.len(), gen_labels.len());
    if sub_gens.is_empty() {
        for h in quot_gens {
            assert!(svec_is_zero(h), "quotient generators outside zero submodule");
        }
        return FpModule::zero();
    }
    let tagged = TaggedGB::new(ring, rank, sub_gens);
    let mut relations: Vec<SVec> = Vec::new();
    for h in quot_gens {
        if svec_is_zero(h) {
            continue;
        }
        let q = tagged
            .lift(ring, h)
            .expect("quotient generator not contained in submodule");
        relations.push(q);
    }
    relations.extend(tagged.syzygies());

    let shifts = homogeneous_shifts(sub_gens);
    minimize_presentation(
        ring,
        FpModule { n_gens: sub_gens.len(), gen_labels, relations, shifts },
    )
}

/// Generator degrees read off from homogeneous generating vectors whose
/// ambient components sit in degree zero.
fn homogeneous_shifts(gens: &[SVec]) -> Option<Vec<u32>> {
    let mut shifts = Vec::with_capacity(gens.len());
    for g in gens {
        let mut deg: Option<u32> = None;
        for p in g {
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return None;
            }
            match deg {
                None => deg = Some(p.deg()),
                Some(d) if d == p.deg() => {}
                _ => return None,
            }
        }
        shifts.push(deg.unwrap_or(0));
    }
    Some(shifts)
}

/// Removes generators against relation entries that are nonzero constants.
/// The result presents the same module with no unit entries left.
pub fn minimize_presentation(ring: &PolyRing, mut fp: FpModule) -> FpModule {
    loop {
        fp.relations.retain(|col| !svec_is_zero(col));
        let mut pivot: Option<(usize, usize)> = None;
        'scan: for (j, col) in fp.relations.iter().enumerate() {
            for (i, p) in col.iter().enumerate() {
                if !p.is_zero() && p.deg() == 0 {
                    pivot = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((i, j)) = pivot else { break };
        let pivot_col = fp.relations[j].clone();
        let c = pivot_col[i].lc().unwrap().clone();
        let cinv = c.inv();
        for (jj, col) in fp.relations.iter_mut().enumerate() {
            if jj == j || col[i].is_zero() {
                continue;
            }
            let f = col[i].scale(&cinv);
            let adjust: SVec = pivot_col.iter().map(|p| p.mul(&f, ring)).collect();
            *col = svec_sub(ring, col, &adjust);
        }
        fp.relations.remove(j);
        for col in fp.relations.iter_mut() {
            col.remove(i);
        }
        fp.gen_labels.remove(i);
        if let Some(shifts) = &mut fp.shifts {
            shifts.remove(i);
        }
        fp.n_gens -= 1;
    }
    fp.relations.retain(|col| !svec_is_zero(col));
    fp
}

/// Annihilator of coker(relations), as intersection of the colon ideals
/// (N : e_i) read off from syzygy first coordinates.
pub fn ann_cokernel(ring: &PolyRing, fp: &FpModule) -> Vec<Poly> {
    if fp.n_gens == 0 {
        return vec![ring.one()];
    }
    let mut colon_ideals = Vec::with_capacity(fp.n_gens);
    for i in 0..fp.n_gens {
        let mut gens: Vec<SVec> = Vec::with_capacity(fp.relations.len() + 1);
        let mut e = vec![Poly::zero(); fp.n_gens];
        e[i] = ring.one();
        gens.push(e);
        gens.extend(fp.relations.iter().cloned());
        let syz = syzygies(ring, fp.n_gens, &gens);
        let coords: Vec<Poly> =
            syz.into_iter().map(|s| s[0].clone()).filter(|p| !p.is_zero()).collect();
        colon_ideals.push(ideal_gb(ring, &coords));
    }
    ideal_gb(ring, &ideal_intersection_many(ring, &colon_ideals))
}

pub fn det_poly(ring: &PolyRing, mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    if n == 0 {
        return ring.one();
    }
    assert!(mat.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut det = ring.zero();
    for (k, entry) in mat[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = det_poly(ring, &minor).mul(entry, ring);
        det = if k % 2 == 0 { det.add(&cof, ring) } else { det.sub(&cof, ring) };
    }
    det
}

/// All k x k minors of the n_gens x n_rels presentation matrix.
pub fn minors(ring: &PolyRing, fp: &FpModule, k: usize) -> Vec<Poly> {
    let rows = fp.n_gens;
    let cols = fp.relations.len();
    if k == 0 {
        return vec![ring.one()];
    }
    if k > rows || k > cols {
        return vec![];
    }
    let mut out = Vec::new();
    for rsub in (0..rows).combinations(k) {
        for csub in (0..cols).combinations(k) {
            let sub: Vec<Vec<Poly>> = rsub
                .iter()
                .map(|&i| csub.iter().map(|&j| fp.relations[j][i].clone()).collect())
                .collect();
            let d = det_poly(ring, &sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// Fitting ideal Fitt_s(M) = ideal of (n_gens - s)-minors of the presentation.
pub fn fitting_ideal(ring: &PolyRing, fp: &FpModule, s: usize) -> Vec<Poly> {
    if s >= fp.n_gens {
        return vec![ring.one()];
    }
    let k = fp.n_gens - s;
    minors(ring, fp, k)
}

/// Presentation of the s-th exterior power of coker(relations).
pub fn exterior_power(ring: &PolyRing, fp: &FpModule, s: usize) -> FpModule {
    let g = fp.n_gens;
    if s == 0 {
        return FpModule::free(vec!["1".to_string()], Some(vec![0]));
    }
    if s > g {
        return FpModule::zero();
    }
    let subsets: Vec<Vec<usize>> = (0..g).combinations(s).collect();
    let index_of = |t: &[usize]| subsets.iter().position(|u| u == t).unwrap();
    let labels: Vec<String> = subsets
        .iter()
        .map(|t| t.iter().map(|&i| fp.gen_labels[i].clone()).join("^"))
        .collect();
    let shifts = fp
        .shifts
        .as_ref()
        .map(|sh| subsets.iter().map(|t| t.iter().map(|&i| sh[i]).sum()).collect());

    let mut relations = Vec::new();
    for tsub in (0..g).combinations(s - 1) {
        for col in &fp.relations {
            let mut new_col = vec![Poly::zero(); subsets.len()];
            let mut nonzero = false;
            for k in 0..g {
                if tsub.contains(&k) || col[k].is_zero() {
                    continue;
                }
                let mut merged = tsub.clone();
                merged.push(k);
                merged.sort_unstable();
                let sign = tsub.iter().filter(|&&t| t > k).count();
                let idx = index_of(&merged);
                let term = if sign % 2 == 0 { col[k].clone() } else { col[k].neg() };
                new_col[idx] = new_col[idx].add(&term, ring);
                nonzero = true;
            }
            if nonzero {
                relations.push(new_col);
            }
        }
    }
    FpModule { n_gens: subsets.len(), gen_labels: labels, relations, shifts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::MonomialOrder;

    fn ring2() -> PolyRing {
        PolyRing::new(vec!["x", "y"], MonomialOrder::GrevLex)
    }

    fn col(ring: &PolyRing, entries: &[&str]) -> SVec {
        entries.iter().map(|s| ring.parse(s).unwrap()).collect()
    }

    #[test]
    fn ann_of_cyclic_module() {
        let r = ring2();
        // S/(x, y^2)
        let fp = FpModule {
            n_gens: 1,
            gen_labels: vec!["u".into()],
            relations: vec![col(&r, &["x"]), col(&r, &["y^2"])],
            shifts: Some(vec![0]),
        };
        let ann = ann_cokernel(&r, &fp);
        assert!(super::super::ideal::ideals_equal(
            &r,
            &ann,
            &[r.parse("x").unwrap(), r.parse("y^2").unwrap()]
        ));
    }

    #[test]
    fn ann_of_direct_sum_is_intersection() {
        let r = ring2();
        // S/(x) + S/(y): Ann = (x) cap (y) = (xy)
        let fp = FpModule {
            n_gens: 2,
            gen_labels: vec!["u".into(), "v".into()],
            relations: vec![col(&r, &["x", "0"]), col(&r, &["0", "y"])],
            shifts: Some(vec![0, 0]),
        };
        let ann = ann_cokernel(&r, &fp);
        assert!(super::super::ideal::ideals_equal(&r, &ann, &[r.parse("x*y").unwrap()]));
    }

    #[test]
    fn subquotient_of_koszul_kernel() {
        let r = ring2();
        // ker(S^2 --(x,y)--> S) = <(-y, x)>; quotient by x*(-y, x).
        let sub = vec![col(&r, &["-y", "x"])];
        let quot = vec![col(&r, &["-x*y", "x^2"])];
        let fp = subquotient(&r, 2, &sub, vec!["s".into()], &quot);
        assert_eq!(fp.n_gens, 1);
        let ann = ann_cokernel(&r, &fp);
        assert!(super::super::ideal::ideals_equal(&r, &ann, &[r.parse("x").unwrap()]));
    }

    #[test]
    fn minimization_removes_unit_pivots() {
        let r = ring2();
        // gens u, v with relation u = y*v and x*u = 0: minimal is S/(x*y).
        let fp = FpModule {
            n_gens: 2,
            gen_labels: vec!["u".into(), "v".into()],
            relations: vec![col(&r, &["1", "-y"]), col(&r, &["x", "0"])],
            shifts: None,
        };
        let m = minimize_presentation(&r, fp);
        assert_eq!(m.n_gens, 1);
        assert_eq!(m.gen_labels, vec!["v".to_string()]);
        let ann = ann_cokernel(&r, &m);
        assert!(super::super::ideal::ideals_equal(&r, &ann, &[r.parse("x*y").unwrap()]));
    }

    #[test]
    fn fitting_ideals_of_diagonal() {
        let r = ring2();
        // M = S/(x) + S/(y): Fitt_0 = (xy), Fitt_1 = (x, y), Fitt_2 = (1).
        let fp = FpModule {
            n_gens: 2,
            gen_labels: vec!["u".into(), "v".into()],
            relations: vec![col(&r, &["x", "0"]), col(&r, &["0", "y"])],
            shifts: Some(vec![0, 0]),
        };
        assert!(super::super::ideal::ideals_equal(
            &r,
            &fitting_ideal(&r, &fp, 0),
            &[r.parse("x*y").unwrap()]
        ));
        assert!(super::super::ideal::ideals_equal(
            &r,
            &fitting_ideal(&r, &fp, 1),
            &[r.parse("x").unwrap(), r.parse("y").unwrap()]
        ));
        assert_eq!(fitting_ideal(&r, &fp, 2), vec![r.one()]);
    }

    #[test]
    fn exterior_square_of_rank_two() {
        let r = ring2();
        // M = coker(x, y)^T on gens u, v: wedge^2 M = S / (x, y)? No:
        // relations of wedge^2 come from e_T wedge P(col): T = {u} gives y*u^v... wait:
        // single column (x, y): wedge^2 relations: for T = {0}: x*? k=1: entry y -> y*(u^v);
        // for T = {1}: k=0: entry x with sign (-1)^{#t>0} = -x. So wedge^2 = S/(x, y).
        let fp = FpModule {
            n_gens: 2,
            gen_labels: vec!["u".into(), "v".into()],
            relations: vec![col(&r, &["x", "y"])],
            shifts: Some(vec![0, 0]),
        };
        let w2 = exterior_power(&r, &fp, 2);
        assert_eq!(w2.n_gens, 1);
        let ann = ann_cokernel(&r, &w2);
        assert!(super::super::ideal::ideals_equal(
            &r,
            &ann,
            &[r.parse("x").unwrap(), r.parse("y").unwrap()]
        ));
        assert!(exterior_power(&r, &fp, 3).is_zero_presentation());
    }

    #[test]
    fn det_of_polynomial_matrix() {
        let r = ring2();
        let m = vec![
            vec![r.parse("x").unwrap(), r.parse("y").unwrap()],
            vec![r.parse("y").unwrap(), r.parse("x").unwrap()],
        ];
        assert_eq!(det_poly(&r, &m), r.parse("x^2 - y^2").unwrap());
    }
}
