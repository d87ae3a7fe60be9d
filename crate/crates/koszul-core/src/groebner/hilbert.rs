//! Hilbert series of graded modules, truncated associated-graded dimensions
//! for the maximal-ideal filtration, and lowest-degree initial ideals.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::polycore::{
    monomials_up_to, Monomial, MonomialOrder, Poly, PolyRing, Rat, SparseEchelon, SparseRow,
    SparseRref,
};

use super::ideal::{ideal_gb, nf_poly};
use super::module::{module_gb, svec_lead};
use super::ops::FpModule;

/// Rational function numer(t) / (1 - t)^denom_pow in canonical form: the
/// numerator has no trailing zeros and shares no factor (1 - t) with the
/// denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertSeries {
    pub numer: Vec<BigInt>,
    pub denom_pow: usize,
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Quotient of p(t) by (1 - t) when exact.
fn div_one_minus_t(p: &[BigInt]) -> Option<Vec<BigInt>> {
    if p.is_empty() {
        return Some(vec![]);
    }
    let mut q = Vec::with_capacity(p.len());
    let mut acc = BigInt::zero();
    for c in p {
        acc += c;
        q.push(acc.clone());
    }
    match q.pop() {
        Some(last) if last.is_zero() => Some(trim(q)),
        _ => None,
    }
}

impl HilbertSeries {
    pub fn new(numer: Vec<BigInt>, denom_pow: usize) -> HilbertSeries {
        let mut numer = trim(numer);
        let mut denom_pow = denom_pow;
        if numer.is_empty() {
            return HilbertSeries { numer, denom_pow: 0 };
        }
        while denom_pow > 0 {
            match div_one_minus_t(&numer) {
                Some(q) => {
                    numer = q;
                    denom_pow -= 1;
                }
                None => break,
            }
        }
        HilbertSeries { numer, denom_pow }
    }

    pub fn from_ints(numer: Vec<i64>, denom_pow: usize) -> HilbertSeries {
        HilbertSeries::new(numer.into_iter().map(BigInt::from).collect(), denom_pow)
    }

    pub fn zero() -> HilbertSeries {
        HilbertSeries { numer: vec![], denom_pow: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom_pow == 0
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let d = self.denom_pow.max(other.denom_pow);
        let lift = |h: &HilbertSeries| -> Vec<BigInt> {
            let mut v = h.numer.clone();
            for _ in 0..d - h.denom_pow {
                // multiply by (1 - t)
                let mut w = vec![BigInt::zero(); v.len() + 1];
                for (i, c) in v.iter().enumerate() {
                    w[i] += c;
                    w[i + 1] -= c;
                }
                v = w;
            }
            v
        };
        let a = lift(self);
        let b = lift(other);
        let mut numer = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.into_iter().enumerate() {
            numer[i] += c;
        }
        for (i, c) in b.into_iter().enumerate() {
            numer[i] += c;
        }
        HilbertSeries::new(numer, d)
    }

    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() || other.is_zero() {
            return HilbertSeries::zero();
        }
        let mut numer = vec![BigInt::zero(); self.numer.len() + other.numer.len() - 1];
        for (i, a) in self.numer.iter().enumerate() {
            for (j, b) in other.numer.iter().enumerate() {
                numer[i + j] += a * b;
            }
        }
        HilbertSeries::new(numer, self.denom_pow + other.denom_pow)
    }

    pub fn shift(&self, k: usize) -> HilbertSeries {
        if self.is_zero() {
            return HilbertSeries::zero();
        }
        let mut numer = vec![BigInt::zero(); k];
        numer.extend(self.numer.iter().cloned());
        HilbertSeries::new(numer, self.denom_pow)
    }

    /// Taylor coefficients through degree n.
    pub fn taylor(&self, n: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n + 1];
        for (i, c) in self.numer.iter().enumerate() {
            if i <= n {
                v[i] = c.clone();
            }
        }
        for _ in 0..self.denom_pow {
            for i in 1..=n {
                let prev = v[i - 1].clone();
                v[i] += prev;
            }
        }
        v
    }
}

fn poly_in_t(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = !mag.is_one() || i == 0;
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if i == 1 {
            if show_coeff {
                out.push('*');
            }
            out.push('t');
        } else if i > 1 {
            if show_coeff {
                out.push('*');
            }
            out.push_str(&format!("t^{}", i));
        }
    }
    if first {
        out.push('0');
    }
    out
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = poly_in_t(&self.numer);
        if self.denom_pow == 0 {
            return write!(f, "{}", num);
        }
        let den = if self.denom_pow == 1 {
            "(1-t)".to_string()
        } else {
            format!("(1-t)^{}", self.denom_pow)
        };
        let nz: usize = self.numer.iter().filter(|c| !c.is_zero()).count();
        if nz > 1 || num.starts_with('-') {
            write!(f, "({})/{}", num, den)
        } else {
            write!(f, "{}/{}", num, den)
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum HilbertError {
    #[error("module presentation is not graded; use graded_dims_truncated instead")]
    NotGraded,
}

fn minimalize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.deg());
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator of Hilb(S/I) * (1-t)^n for a monomial ideal I, by pivot splitting:
/// K(I) = K(I + (x)) + t * K(I : x).
fn monomial_quotient_numerator(gens: Vec<Monomial>) -> Vec<BigInt> {
    let gens = minimalize_monomials(gens);
    if gens.iter().any(|m| m.is_one()) {
        return vec![];
    }
    let pairwise_coprime =
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![BigInt::one()];
        for m in &gens {
            let d = m.deg() as usize;
            let mut next = vec![BigInt::zero(); acc.len() + d];
            for (i, c) in acc.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            acc = next;
        }
        return trim(acc);
    }
    // Pivot on the variable hitting the most generators.
    let n = gens[0].n_vars();
    let (pivot, _) = (0..n)
        .map(|v| (v, gens.iter().filter(|m| m.exp(v) > 0).count()))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .unwrap();
    let var = Monomial::var(pivot, n);
    let plus: Vec<Monomial> = std::iter::once(var.clone())
        .chain(gens.iter().filter(|m| m.exp(pivot) == 0).cloned())
        .collect();
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| if m.exp(pivot) > 0 { var.div_into(m) } else { m.clone() })
        .collect();
    let a = monomial_quotient_numerator(plus);
    let b = monomial_quotient_numerator(colon);
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + 1)];
    for (i, c) in a.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.into_iter().enumerate() {
        out[i + 1] += c;
    }
    trim(out)
}

/// Hilbert series of coker(relations) in the internal grading, where
/// generator i contributes in degrees >= shifts[i].
pub fn hilbert_series(ring: &PolyRing, fp: &FpModule) -> Result<HilbertSeries, HilbertError> {
    if fp.n_gens == 0 {
        return Ok(HilbertSeries::zero());
    }
    if !fp.is_graded() {
        return Err(HilbertError::NotGraded);
    }
    let shifts = fp.shifts.clone().unwrap();
    let gb = module_gb(ring, &fp.relations);
    let mut lead_monomials: Vec<Vec<Monomial>> = vec![vec![]; fp.n_gens];
    for g in &gb {
        let (c, m, _) = svec_lead(g).unwrap();
        lead_monomials[c].push(m.clone());
    }
    let n = ring.n_vars();
    let mut numer = vec![BigInt::zero(); 1];
    for (i, gens) in lead_monomials.into_iter().enumerate() {
        let k = monomial_quotient_numerator(gens);
        let s = shifts[i] as usize;
        if numer.len() < k.len() + s {
            numer.resize(k.len() + s, BigInt::zero());
        }
        for (j, c) in k.into_iter().enumerate() {
            numer[j + s] += c;
        }
    }
    Ok(HilbertSeries::new(numer, n))
}

/// dim_k of M / m^{k+1} M for the irrelevant maximal ideal m, k = 0..=d_max,
/// returned as the associated graded dimensions gr_k = dim_k - dim_{k-1}.
/// Exact linear algebra on truncations; stabilization implies all later
/// values vanish (Nakayama), which is used to stop early.
pub fn graded_dims_truncated(ring: &PolyRing, fp: &FpModule, d_max: usize) -> Vec<usize> {
    let n = ring.n_vars();
    let g = fp.n_gens;
    if g == 0 {
        return vec![0; d_max + 1];
    }
    let mut dims = Vec::with_capacity(d_max + 1);
    let mut prev_dim: Option<usize> = None;
    let mut out = Vec::with_capacity(d_max + 1);
    for k in 0..=d_max {
        let mons = monomials_up_to(n, k as u32);
        let mon_index: HashMap<Monomial, usize> =
            mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n_cols = g * mons.len();
        let col = |gen: usize, m: &Monomial| -> Option<usize> {
            mon_index.get(m).map(|&mi| gen * mons.len() + mi)
        };
        let mut ech = SparseEchelon::new();
        let mut rank = 0usize;
        for rel in &fp.relations {
            for mult in &mons {
                let mut entries: std::collections::BTreeMap<usize, Rat> = Default::default();
                for (gen, p) in rel.iter().enumerate() {
                    for (m, c) in p.terms() {
                        let prod = m.mul(mult);
                        if let Some(ci) = col(gen, &prod) {
                            let e = entries.entry(ci).or_insert_with(Rat::zero);
                            *e += c;
                        }
                    }
                }
                let row: SparseRow =
                    entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !row.is_empty() && ech.insert(row) {
                    rank += 1;
                }
            }
        }
        let dim_k = n_cols - rank;
        dims.push(dim_k);
        let gr = dim_k - prev_dim.unwrap_or(0);
        out.push(gr);
        if prev_dim == Some(dim_k) {
            // Filtration stabilized: m^k M = m^{k+1} M forces m^k M = 0.
            out.extend(std::iter::repeat(0).take(d_max - k));
            return out;
        }
        prev_dim = Some(dim_k);
    }
    let _ = dims;
    out
}

/// dim_k F_d/F_{d-1} for the filtration of the presented module by chain
/// degree (generator j enters in degree shifts[j]), d = 0..=d_max. On graded
/// input this agrees with the graded dimensions; on non-homogeneous input it
/// is the affine Hilbert function of the presentation. The working degree
/// widens until the table for degrees <= d_max is stable under one more step;
/// the returned flag reports whether that stabilization was reached.
pub fn filtered_dims_truncated(
    ring: &PolyRing,
    fp: &FpModule,
    d_max: usize,
) -> (Vec<usize>, bool) {
    let n = ring.n_vars();
    let g = fp.n_gens;
    if g == 0 {
        return (vec![0; d_max + 1], true);
    }
    let shifts: Vec<u32> = fp.shifts.clone().unwrap_or_else(|| vec![0; g]);
    let mut last: Option<Vec<usize>> = None;
    for work in d_max..=d_max + 6 {
        let work = work as u32;
        // Columns (generator, monomial) of shifted degree <= work, ordered by
        // shifted degree descending so each echelon pivot is the top-degree
        // entry of its row.
        let mut cols: Vec<(usize, Monomial, u32)> = Vec::new();
        for (gen, &s) in shifts.iter().enumerate() {
            if s > work {
                continue;
            }
            for m in monomials_up_to(n, work - s) {
                let d = m.deg() + s;
                cols.push((gen, m, d));
            }
        }
        cols.sort_by(|a, b| b.2.cmp(&a.2).then(a.0.cmp(&b.0)));
        let col_index: HashMap<(usize, Monomial), usize> = cols
            .iter()
            .enumerate()
            .map(|(i, (gen, m, _))| ((*gen, m.clone()), i))
            .collect();
        let mut free = vec![0usize; d_max + 1];
        for (_, _, d) in &cols {
            if (*d as usize) <= d_max {
                free[*d as usize] += 1;
            }
        }
        let mut ech = SparseEchelon::new();
        let mut pivot_degs: Vec<u32> = Vec::new();
        for rel in &fp.relations {
            let top = rel
                .iter()
                .enumerate()
                .flat_map(|(i, p)| {
                    let s = shifts[i];
                    p.terms().into_iter().map(move |(m, _)| m.deg() + s)
                })
                .max();
            let Some(top) = top else { continue };
            if top > work {
                continue;
            }
            for mult in monomials_up_to(n, work - top) {
                let mut entries: std::collections::BTreeMap<usize, Rat> = Default::default();
                for (gen, p) in rel.iter().enumerate() {
                    for (m, c) in p.terms() {
                        let ci = col_index[&(gen, m.mul(&mult))];
                        let e = entries.entry(ci).or_insert_with(Rat::zero);
                        *e += c;
                    }
                }
                let row: SparseRow =
                    entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                let row = ech.reduce(row);
                if let Some((c, _)) = row.first() {
                    pivot_degs.push(cols[*c].2);
                    ech.insert(row);
                }
            }
        }
        let mut cut = vec![0usize; d_max + 1];
        for d in &pivot_degs {
            if (*d as usize) <= d_max {
                cut[*d as usize] += 1;
            }
        }
        // Pivots of degree d sit on distinct degree-d columns, so the jump at
        // degree d is the column count minus the pivot count there.
        let out: Vec<usize> = (0..=d_max).map(|d| free[d] - cut[d]).collect();
        if last.as_ref() == Some(&out) {
            return (out, true);
        }
        last = Some(out);
    }
    (last.unwrap(), false)
}

/// Generators of the ideal of lowest-degree forms of I, listed through degree
/// `d_max`. The computation widens the working degree until the dimension
/// table for degrees <= d_max is stable under one more step; the returned flag
/// reports whether that stabilization was reached.
pub fn initial_lowest_ideal(
    ring: &PolyRing,
    gens: &[Poly],
    d_max: u32,
) -> (Vec<Poly>, bool) {
    let grevlex = ring.with_order(MonomialOrder::GrevLex);
    let gens: Vec<Poly> = gens.iter().map(|p| grevlex.renormalize(p)).collect();
    let gb = ideal_gb(&grevlex, &gens);
    if gb.is_empty() {
        return (vec![], true);
    }

    let n = grevlex.n_vars();
    let max_work = d_max + 6;
    let mut last: Option<(Vec<usize>, Vec<Poly>)> = None;
    for work in d_max..=max_work {
        // Columns: monomials of degree <= work, ascending (degree, lex).
        let mons = monomials_up_to(n, work);
        let mon_index: HashMap<Monomial, usize> =
            mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rref = SparseRref::new();
        for g in &gb {
            let gdeg = g.deg();
            if gdeg > work {
                continue;
            }
            for mult in monomials_up_to(n, work - gdeg) {
                let mut entries: std::collections::BTreeMap<usize, Rat> = Default::default();
                for (m, c) in g.terms() {
                    let ci = mon_index[&m.mul(&mult)];
                    let e = entries.entry(ci).or_insert_with(Rat::zero);
                    *e += c;
                }
                let row: SparseRow = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !row.is_empty() {
                    rref.insert(row);
                }
            }
        }
        // Row leading columns are lowest monomials; group lowest forms by degree.
        let mut dims = vec![0usize; d_max as usize + 1];
        let mut forms: Vec<Poly> = Vec::new();
        let mut rows: Vec<&SparseRow> = rref.rows().iter().collect();
        rows.sort_by_key(|row| row[0].0);
        for row in rows {
            let ord = mons[row[0].0].deg();
            if ord > d_max {
                continue;
            }
            dims[ord as usize] += 1;
            let terms: Vec<(Monomial, Rat)> = row
                .iter()
                .filter(|(c, _)| mons[*c].deg() == ord)
                .map(|(c, v)| (mons[*c].clone(), v.clone()))
                .collect();
            forms.push(ring.from_terms(terms));
        }
        if let Some((prev_dims, prev_forms)) = &last {
            if *prev_dims == dims {
                return (interreduce_homogeneous(ring, prev_forms.clone()), true);
            }
        }
        last = Some((dims, forms));
    }
    let (_, forms) = last.unwrap();
    (interreduce_homogeneous(ring, forms), false)
}

/// Drops forms already generated by earlier (lower-degree) ones.
fn interreduce_homogeneous(ring: &PolyRing, mut forms: Vec<Poly>) -> Vec<Poly> {
    forms.sort_by_key(|f| f.deg());
    let mut kept: Vec<Poly> = Vec::new();
    let mut kept_gb: Vec<Poly> = Vec::new();
    for f in forms {
        if kept.is_empty() || !nf_poly(ring, &f, &kept_gb).is_zero() {
            kept.push(f.monic());
            kept_gb = ideal_gb(ring, &kept);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ops::FpModule;
    use crate::polycore::MonomialOrder;

    fn ring2() -> PolyRing {
        PolyRing::new(vec!["x", "y"], MonomialOrder::GrevLex)
    }

    fn col(ring: &PolyRing, entries: &[&str]) -> Vec<Poly> {
        entries.iter().map(|s| ring.parse(s).unwrap()).collect()
    }

    #[test]
    fn series_of_polynomial_ring_and_residue_field() {
        let r = ring2();
        let free = FpModule::free(vec!["u".into()], Some(vec![0]));
        let h = hilbert_series(&r, &free).unwrap();
        assert_eq!(h, HilbertSeries::from_ints(vec![1], 2));
        assert_eq!(h.to_string(), "1/(1-t)^2");
        assert_eq!(
            h.taylor(4),
            vec![1, 2, 3, 4, 5].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );

        let k = FpModule {
            n_gens: 1,
            gen_labels: vec!["u".into()],
            relations: vec![col(&r, &["x"]), col(&r, &["y"])],
            shifts: Some(vec![0]),
        };
        let h = hilbert_series(&r, &k).unwrap();
        assert_eq!(h, HilbertSeries::from_ints(vec![1], 0));
        assert_eq!(h.to_string(), "1");
    }

    #[test]
    fn series_of_shifted_syzygy_module() {
        let r = ring2();
        // Syz(x, y) = S(-1): one generator in degree 1, no relations.
        let free = FpModule::free(vec!["s".into()], Some(vec![1]));
        let h = hilbert_series(&r, &free).unwrap();
        assert_eq!(h, HilbertSeries::from_ints(vec![0, 1], 2));
        assert_eq!(h.to_string(), "t/(1-t)^2");
    }

    #[test]
    fn series_of_nontrivial_quotient() {
        let r = ring2();
        // S/(x^2, xy): Hilb = 1 + 2t + t^2 + t^3 + ... = (1 + t - t^2)/(1-t).
        let fp = FpModule {
            n_gens: 1,
            gen_labels: vec!["u".into()],
            relations: vec![col(&r, &["x^2"]), col(&r, &["x*y"])],
            shifts: Some(vec![0]),
        };
        let h = hilbert_series(&r, &fp).unwrap();
        assert_eq!(
            h.taylor(5),
            vec![1, 2, 1, 1, 1, 1].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(h, HilbertSeries::from_ints(vec![1, 1, -1], 1));
    }

    #[test]
    fn non_graded_module_is_rejected() {
        let r = ring2();
        let fp = FpModule {
            n_gens: 1,
            gen_labels: vec!["u".into()],
            relations: vec![col(&r, &["x^2 - y"])],
            shifts: Some(vec![0]),
        };
        assert!(hilbert_series(&r, &fp).is_err());
    }

    #[test]
    fn filtered_dims_agree_with_graded_dims_on_homogeneous_input() {
        let r = ring2();
        for relations in [
            vec![col(&r, &["x^2"]), col(&r, &["x*y"])],
            vec![col(&r, &["x"]), col(&r, &["y^3"])],
        ] {
            let fp = FpModule {
                n_gens: 1,
                gen_labels: vec!["u".into()],
                relations,
                shifts: Some(vec![0]),
            };
            let (dims, stable) = filtered_dims_truncated(&r, &fp, 6);
            assert!(stable);
            let h = hilbert_series(&r, &fp).unwrap();
            let want: Vec<usize> =
                h.taylor(6).into_iter().map(|c| usize::try_from(c).unwrap()).collect();
            assert_eq!(dims, want);
        }
    }

    #[test]
    fn filtered_dims_of_non_homogeneous_quotients() {
        let r = ring2();
        // S/(x^2 - y, xy, y^2): k-basis {1, x, y} by chain degree, even though
        // the tangent cone (y, x^3) spreads the same total dimension as
        // 1 + t + t^2.
        let fp = FpModule {
            n_gens: 1,
            gen_labels: vec!["u".into()],
            relations: vec![col(&r, &["x^2 - y"]), col(&r, &["x*y"]), col(&r, &["y^2"])],
            shifts: Some(vec![0]),
        };
        let (dims, stable) = filtered_dims_truncated(&r, &fp, 5);
        assert!(stable);
        assert_eq!(dims, vec![1, 2, 0, 0, 0, 0]);
        assert_eq!(graded_dims_truncated(&r, &fp, 5), vec![1, 1, 1, 0, 0, 0]);

        // S/(x - 1, y): the generator's class spans everything in degree 0.
        let fp = FpModule {
            n_gens: 1,
            gen_labels: vec!["u".into()],
            relations: vec![col(&r, &["x - 1"]), col(&r, &["y"])],
            shifts: Some(vec![0]),
        };
        let (dims, stable) = filtered_dims_truncated(&r, &fp, 4);
        assert!(stable);
        assert_eq!(dims, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn filtered_dims_honor_generator_shifts() {
        let r = ring2();
        // S(-1) plus a degree-0 generator killed by m: dims t + ... = 1 + 2t + 2t^2 + ...
        let fp = FpModule {
            n_gens: 2,
            gen_labels: vec!["s".into(), "u".into()],
            relations: vec![col(&r, &["0", "x"]), col(&r, &["0", "y"])],
            shifts: Some(vec![1, 0]),
        };
        let (dims, stable) = filtered_dims_truncated(&r, &fp, 4);
        assert!(stable);
        assert_eq!(dims, vec![1, 1, 2, 3, 4]);
    }

    #[test]
    fn graded_dims_of_non_graded_quotient() {
        let r = ring2();
        // S/(x^2 - y, y^2) = k[x]/(x^4) via y = x^2, so gr dims are 1,1,1,1,0,...
        let fp = FpModule {
            n_gens: 1,
            gen_labels: vec!["u".into()],
            relations: vec![col(&r, &["x^2 - y"]), col(&r, &["y^2"])],
            shifts: Some(vec![0]),
        };
        let dims = graded_dims_truncated(&r, &fp, 6);
        assert_eq!(dims, vec![1, 1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn initial_lowest_of_unit_distance_ideal() {
        let r = PolyRing::new(vec!["x"], MonomialOrder::GrevLex);
        let (gens, certified) = initial_lowest_ideal(&r, &[r.parse("x - 1").unwrap()], 4);
        assert!(certified);
        assert_eq!(gens, vec![r.one()]);
    }

    #[test]
    fn initial_lowest_detects_hidden_power() {
        let r = ring2();
        // I = (y^2, x*y, x^2 - y): lowest forms contain y, and x^3 = x*(x^2 - y) + x*y.
        let gens = vec![
            r.parse("y^2").unwrap(),
            r.parse("x*y").unwrap(),
            r.parse("x^2 - y").unwrap(),
        ];
        let (infs, certified) = initial_lowest_ideal(&r, &gens, 8);
        assert!(certified);
        assert!(super::super::ideal::ideals_equal(
            &r,
            &infs,
            &[r.parse("y").unwrap(), r.parse("x^3").unwrap()]
        ));
    }
}
