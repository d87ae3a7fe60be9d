//! Resonance ideals, holonomy Chen ranks, closed-form rank formulas,
//! tangent cones, and the named cross-check suite.

pub mod verify;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cdga::{
    bibby_model, ce_complex, conf_elliptic_h2, os_braid_truncation, Cdga,
};
pub use crate::cdga::{simplicial_reduced_betti, SimplicialComplex};
use crate::groebner::{
    ann_cokernel, exterior_power, graded_dims_truncated, hilbert_series, initial_lowest_ideal,
    FpModule, HilbertSeries, SVec,
};
use crate::koszul::{
    aomoto_dims, b1_presentation_of, koszul_homology_of, KoszulComplex, KoszulError,
};
use crate::lie;
use crate::polycore::{MonomialOrder, Poly, PolyRing, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResonanceError {
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error("depth s = {s} out of range: need 1 <= s <= {max}")]
    SOutOfRange { s: usize, max: usize },
}

/// Ideal of (r_i - s + 1)-minors of the block matrix `delta^{i-1} (+) delta^i`,
/// whose zero set is the locus where the degree-i Aomoto cohomology has
/// dimension at least s. Reported as raw minors, no radical.
pub fn resonance_jump_ideal(
    a: &Cdga,
    i: usize,
    s: usize,
    order: MonomialOrder,
) -> Result<(PolyRing, Vec<Poly>), ResonanceError> {
    let kc = KoszulComplex::new(a, order)?;
    let r_i = a.dim(i);
    if s < 1 || s > r_i {
        return Err(ResonanceError::SOutOfRange { s, max: r_i });
    }
    let ring = kc.ring().clone();
    let out = kc.cochain_matrix(i)?;
    let rows_out = a.dim(i + 1);
    let (inn, rows_in, cols_in) = if i == 0 {
        (Vec::new(), r_i, 0)
    } else {
        (kc.cochain_matrix(i - 1)?.to_vec(), r_i, a.dim(i - 1))
    };
    let rows = rows_in + rows_out;
    let mut cols: Vec<SVec> = Vec::with_capacity(cols_in + out.len());
    for c in &inn {
        let mut col = c.clone();
        col.resize(rows, ring.zero());
        cols.push(col);
    }
    for c in out {
        let mut col = vec![ring.zero(); rows_in];
        col.extend_from_slice(c);
        cols.push(col);
    }
    let k = r_i - s + 1;
    let fake = FpModule { n_gens: rows, gen_labels: (0..rows).map(|r| format!("r{r}")).collect(), relations: cols, shifts: None };
    let gens: Vec<Poly> = crate::groebner::minors(&ring, &fake, k)
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    Ok((ring, gens))
}

/// Annihilator of the s-th exterior power of the degree-i Koszul homology
/// module; its zero set is the support locus.
pub fn resonance_support_ideal(
    a: &Cdga,
    i: usize,
    s: usize,
    order: MonomialOrder,
) -> Result<(PolyRing, Vec<Poly>), ResonanceError> {
    let kc = KoszulComplex::new(a, order)?;
    let r_i = a.dim(i);
    if s < 1 || s > r_i {
        return Err(ResonanceError::SOutOfRange { s, max: r_i });
    }
    let fp = koszul_homology_of(&kc, i)?;
    let ring = kc.ring().clone();
    let ext = exterior_power(&ring, &fp, s);
    Ok((ring.clone(), ann_cokernel(&ring, &ext)))
}

/// Pointwise jump test: does the Aomoto cohomology at `point` in degree `i`
/// have dimension at least `s`?
pub fn jump_test_point(
    a: &Cdga,
    point: &[Rat],
    i: usize,
    s: usize,
    order: MonomialOrder,
) -> Result<bool, ResonanceError> {
    let kc = KoszulComplex::new(a, order)?;
    Ok(aomoto_dims(&kc, point, i)? >= s)
}

pub fn vanishes_at(gens: &[Poly], point: &[Rat]) -> bool {
    gens.iter().all(|g| g.eval(point).is_zero())
}

#[derive(Debug, Clone)]
pub struct PointCheck {
    pub point: Vec<Rat>,
    pub aomoto_ge_s: bool,
    pub on_jump_locus: bool,
    pub on_support_locus: bool,
}

#[derive(Debug, Clone)]
pub struct ResonanceReport {
    pub model: String,
    pub i: usize,
    pub s: usize,
    pub vars: Vec<String>,
    pub jump_ideal: Vec<Poly>,
    pub support_ideal: Vec<Poly>,
    pub samples: Vec<PointCheck>,
    /// The jump locus and the determinantal rank test agree at every sample;
    /// this is an identity, so a false value indicates a bug.
    pub jump_matches_rank_test: bool,
    /// Jump and support loci agree at every sampled point away from the
    /// origin.
    pub agree_off_origin: bool,
}

/// Deterministic small rational sample points, seeded
pub fn sample_points(n_vars: usize, count: usize, seed: u64) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::with_capacity(count);
    for _ in 0..count {
        let pt: Vec<Rat> = (0..n_vars)
            .map(|_| {
                let num: i64 = rng.gen_range(-4..=4);
                let den: i64 = rng.gen_range(1..=3);
                Rat::new(BigInt::from(num), BigInt::from(den))
            })
            .collect();
        pts.push(pt);
    }
    pts
}

pub fn resonance_report(
    a: &Cdga,
    model: &str,
    i: usize,
    s: usize,
    order: MonomialOrder,
    n_samples: usize,
    seed: u64,
) -> Result<ResonanceReport, ResonanceError> {
    let kc = KoszulComplex::new(a, order)?;
    let (ring, jump) = resonance_jump_ideal(a, i, s, order)?;
    let (_, support) = resonance_support_ideal(a, i, s, order)?;
    let m = ring.n_vars();
    let mut points = vec![vec![Rat::zero(); m]];
    points.extend(sample_points(m, n_samples, seed));
    let mut samples = Vec::with_capacity(points.len());
    let mut rank_ok = true;
    let mut off_origin_ok = true;
    for point in points {
        let aomoto_ge_s = aomoto_dims(&kc, &point, i)? >= s;
        let on_jump_locus = vanishes_at(&jump, &point);
        let on_support_locus = vanishes_at(&support, &point);
        if aomoto_ge_s != on_jump_locus {
            rank_ok = false;
        }
        if point.iter().any(|c| !c.is_zero()) && on_jump_locus != on_support_locus {
            off_origin_ok = false;
        }
        samples.push(PointCheck { point, aomoto_ge_s, on_jump_locus, on_support_locus });
    }
    Ok(ResonanceReport {
        model: model.to_string(),
        i,
        s,
        vars: ring.vars().to_vec(),
        jump_ideal: jump,
        support_ideal: support,
        samples,
        jump_matches_rank_test: rank_ok,
        agree_off_origin: off_origin_ok,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChenSource {
    ExactHilbert,
    TruncatedGr,
}

impl std::fmt::Display for ChenSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChenSource::ExactHilbert => write!(f, "exact Hilbert"),
            ChenSource::TruncatedGr => write!(f, "truncated gr"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ChenReport {
    pub theta1: usize,
    /// theta[k - 2] is the k-th rank, for k = 2..=bound.
    pub theta: Vec<u64>,
    pub source: ChenSource,
    pub bound: usize,
    /// Rational form of the full rank series sum theta_{n+2} t^n, available
    /// when the first Koszul homology module is generated in one degree.
    pub gr_series: Option<HilbertSeries>,
}

/// Holonomy Chen ranks through k = bound; the k-th rank for k >= 2 is the
/// dimension of the (k-2)-nd associated graded piece of the first Koszul
/// homology module for the irrelevant maximal ideal.
pub fn chen_ranks(a: &Cdga, bound: usize, order: MonomialOrder) -> Result<ChenReport, KoszulError> {
    let kc = KoszulComplex::new(a, order)?;
    let theta1 = kc.h1_dim();
    let b1 = b1_presentation_of(&kc)?;
    let ring = kc.ring();
    let theta: Vec<u64> = if bound < 2 {
        Vec::new()
    } else {
        graded_dims_truncated(ring, &b1, bound - 2).iter().map(|&d| d as u64).collect()
    };
    let single_degree = match (&b1.shifts, b1.n_gens) {
        (_, 0) => Some(0),
        (Some(sh), _) if sh.iter().all(|&d| d == sh[0]) => Some(sh[0] as usize),
        _ => None,
    };
    let mut source = ChenSource::TruncatedGr;
    let mut gr_series = None;
    if let Some(d) = single_degree {
        if let Ok(series) = hilbert_series(ring, &b1) {
            if series.numer.len() >= d && series.numer.iter().take(d).all(|c| c == &BigInt::from(0))
            {
                let numer: Vec<BigInt> = series.numer.iter().skip(d).cloned().collect();
                gr_series = Some(HilbertSeries::new(numer, series.denom_pow));
                source = ChenSource::ExactHilbert;
            } else if series.is_zero() {
                gr_series = Some(HilbertSeries::zero());
                source = ChenSource::ExactHilbert;
            }
        }
    }
    Ok(ChenReport { theta1, theta, source, bound, gr_series })
}

/// Chen ranks of a free group of rank r: (n-1) C(r+n-2, n) for n >= 2.
pub fn chen_free(r: usize, bound: usize) -> Vec<u64> {
    (2..=bound).map(|n| (n as u64 - 1) * binomial(r + n - 2, n)).collect()
}

/// Lower central series ranks of a free group of rank r, by the Moebius
/// formula.
pub fn witt_ranks(r: usize, bound: usize) -> Vec<u64> {
    (1..=bound)
        .map(|n| {
            let mut sum: i128 = 0;
            for d in 1..=n {
                if n % d == 0 {
                    sum += i128::from(moebius(d)) * (r as i128).pow((n / d) as u32);
                }
            }
            assert!(sum >= 0 && sum % n as i128 == 0, "Witt numerator must divide");
            (sum / n as i128) as u64
        })
        .collect()
}

fn moebius(n: usize) -> i32 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for j in 0..k.min(n - k) {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("series must start with constant term 1")]
    BadConstant,
    #[error("series is shorter than the requested bound")]
    TooShort,
    #[error("no integral exponent in degree {n}: the input is not a PBW series")]
    NonIntegral { n: usize },
}

/// Solves prod_{n>=1} (1 - t^n)^{phi_n} = 1/H(t) for integer exponents
/// phi_1..phi_bound, given the coefficients of H. Exact rational arithmetic
/// on the logarithmic derivative; integrality is verified degree by degree.
pub fn pbw_invert(h: &[Rat], bound: usize) -> Result<Vec<i64>, PbwError> {
    if h.is_empty() || !h[0].is_one() {
        return Err(PbwError::BadConstant);
    }
    if h.len() < bound + 1 {
        return Err(PbwError::TooShort);
    }
    // G = H'/H, so that j * [t^j] log H = G_{j-1}.
    let mut g: Vec<Rat> = Vec::with_capacity(bound);
    for j in 0..bound {
        let mut v = &h[j + 1] * &Rat::from_int((j + 1) as i64);
        for k in 0..j {
            v = &v - &(&g[k] * &h[j - k]);
        }
        g.push(v);
    }
    let mut phi: Vec<i64> = Vec::with_capacity(bound);
    for n in 1..=bound {
        // sum_{d | n} d phi_d = G_{n-1}
        let mut rest = g[n - 1].clone();
        for d in 1..n {
            if n % d == 0 {
                rest = &rest - &Rat::from_int(d as i64 * phi[d - 1]);
            }
        }
        let v = &rest * &Rat::from_int(n as i64).inv();
        if !v.is_integer() {
            return Err(PbwError::NonIntegral { n });
        }
        let num = v.numer();
        let as_i64 = i64::try_from(num.clone()).map_err(|_| PbwError::NonIntegral { n })?;
        phi.push(as_i64);
    }
    Ok(phi)
}

/// Ideal of lowest-degree forms, certified through degree d_max; the flag
/// reports whether the internal widening stabilized.
pub fn tangent_cone_ideal(ring: &PolyRing, gens: &[Poly], d_max: u32) -> (Vec<Poly>, bool) {
    initial_lowest_ideal(ring, gens, d_max)
}

/// True when every generator is homogeneous for the weighted degree given by
/// `weights` on the ring variables.
pub fn weight_homogeneous(gens: &[Poly], weights: &[u32]) -> bool {
    gens.iter().all(|p| {
        let mut wd: Option<u64> = None;
        for (m, _) in p.terms() {
            let w: u64 = (0..weights.len()).map(|i| m.exp(i) as u64 * weights[i] as u64).sum();
            match wd {
                None => wd = Some(w),
                Some(prev) if prev == w => {}
                _ => return false,
            }
        }
        true
    })
}

/// All model keys the command line and the check suites understand.
pub fn catalog_keys() -> Vec<String> {
    let mut keys: Vec<String> = lie::catalog_names().iter().map(|n| format!("ce:{n}")).collect();
    keys.extend((2..=4).map(|n| format!("bibby:{n}")));
    keys.extend((3..=5).map(|n| format!("os-braid:{n}")));
    keys.extend((2..=3).map(|n| format!("conf-e-h2:{n}")));
    keys
}

pub fn catalog_model(key: &str) -> Option<Cdga> {
    if let Some(name) = key.strip_prefix("ce:") {
        return lie::builtin_lie(name).map(|g| ce_complex(&g));
    }
    if let Some(n) = key.strip_prefix("bibby:") {
        let n: usize = n.parse().ok()?;
        return (2..=4).contains(&n).then(|| bibby_model(n));
    }
    if let Some(n) = key.strip_prefix("os-braid:") {
        let n: usize = n.parse().ok()?;
        return (3..=5).contains(&n).then(|| os_braid_truncation(n));
    }
    if let Some(n) = key.strip_prefix("conf-e-h2:") {
        let n: usize = n.parse().ok()?;
        return (2..=3).contains(&n).then(|| conf_elliptic_h2(n));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideal_member, ideals_equal, is_unit_ideal};

    fn grevlex() -> MonomialOrder {
        MonomialOrder::GrevLex
    }

    #[test]
    fn witt_and_chen_free_closed_forms() {
        assert_eq!(witt_ranks(2, 6), vec![2, 1, 2, 3, 6, 9]);
        assert_eq!(witt_ranks(1, 4), vec![1, 0, 0, 0]);
        assert_eq!(witt_ranks(3, 3), vec![3, 3, 8]);
        assert_eq!(chen_free(2, 6), vec![1, 2, 3, 4, 5]);
        assert_eq!(chen_free(3, 4), vec![3, 8, 15]);
        assert_eq!(chen_free(1, 5), vec![0, 0, 0, 0]);
    }

    #[test]
    fn pbw_invert_recovers_witt_ranks() {
        for r in 1..=4u32 {
            let h: Vec<Rat> =
                (0..=10u32).map(|j| Rat::from_int((r as i64).pow(j))).collect();
            let phi = pbw_invert(&h, 10).unwrap();
            let expected: Vec<i64> =
                witt_ranks(r as usize, 10).iter().map(|&v| v as i64).collect();
            assert_eq!(phi, expected, "r = {r}");
        }
        let ones: Vec<Rat> = std::iter::repeat(Rat::one()).take(11).collect();
        assert_eq!(pbw_invert(&ones, 10).unwrap(), vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let constant: Vec<Rat> =
            std::iter::once(Rat::one()).chain(std::iter::repeat(Rat::zero()).take(10)).collect();
        assert_eq!(pbw_invert(&constant, 10).unwrap(), vec![0; 10]);
    }

    #[test]
    fn pbw_invert_rejects_non_pbw_series() {
        let mut h: Vec<Rat> = std::iter::repeat(Rat::zero()).take(11).collect();
        h[0] = Rat::one();
        h[1] = Rat::new(BigInt::from(1), BigInt::from(2));
        assert!(matches!(pbw_invert(&h, 10), Err(PbwError::NonIntegral { n: 1 })));
        let bad = vec![Rat::from_int(2); 11];
        assert!(matches!(pbw_invert(&bad, 10), Err(PbwError::BadConstant)));
    }

    #[test]
    fn sol2_resonance_goldens() {
        let a = ce_complex(&lie::sol2());
        let (ring, jump) = resonance_jump_ideal(&a, 1, 1, grevlex()).unwrap();
        // Zero set {0, 1}: x(x-1) generates up to scale.
        let x = ring.var(0);
        let xx1 = x.mul(&x.sub(&ring.one(), &ring), &ring);
        assert!(ideal_member(&ring, &xx1, &jump));
        for pt in [[Rat::zero()], [Rat::one()], [Rat::from_int(2)], [Rat::from_int(-1)]] {
            let on_locus = vanishes_at(&jump, &pt);
            let expected = pt[0].is_zero() || pt[0].is_one();
            assert_eq!(on_locus, expected, "jump locus at {:?}", pt);
            assert_eq!(
                jump_test_point(&a, &pt, 1, 1, grevlex()).unwrap(),
                expected,
                "rank test at {:?}",
                pt
            );
        }
        let (ring2, supp) = resonance_support_ideal(&a, 1, 1, grevlex()).unwrap();
        let xm1 = ring2.var(0).sub(&ring2.one(), &ring2);
        assert!(ideals_equal(&ring2, &supp, &[xm1]));
    }

    #[test]
    fn resonance_depth_out_of_range_is_rejected() {
        let a = ce_complex(&lie::sol2());
        assert!(matches!(
            resonance_jump_ideal(&a, 1, 3, grevlex()),
            Err(ResonanceError::SOutOfRange { s: 3, max: 2 })
        ));
        assert!(matches!(
            resonance_support_ideal(&a, 1, 0, grevlex()),
            Err(ResonanceError::SOutOfRange { s: 0, max: 2 })
        ));
    }

    #[test]
    fn degree_zero_jump_locus_is_the_origin() {
        for key in ["ce:sol2", "ce:h(1)", "ce:L4,3"] {
            let a = catalog_model(key).unwrap();
            let (ring, jump) = resonance_jump_ideal(&a, 0, 1, grevlex()).unwrap();
            let vars: Vec<Poly> = (0..ring.n_vars()).map(|j| ring.var(j)).collect();
            assert!(ideals_equal(&ring, &jump, &vars), "{key}");
        }
    }

    #[test]
    fn l55_support_ideal_matches_table() {
        let a = catalog_model("ce:L5,5").unwrap();
        let (ring, supp) = resonance_support_ideal(&a, 1, 1, grevlex()).unwrap();
        let expected = vec![
            ring.parse("x2").unwrap(),
            ring.parse("x4").unwrap(),
            ring.parse("x1^2").unwrap(),
        ];
        assert!(ideals_equal(&ring, &supp, &expected));
    }

    #[test]
    fn chen_ranks_of_wedge_models_match_the_free_formula() {
        for r in 2..=3usize {
            let names: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
            let a = crate::cdga::quadratic_cdga("wedge", &names, &[], &[], &[], &[], None, None);
            let rep = chen_ranks(&a, 10, grevlex()).unwrap();
            assert_eq!(rep.theta1, r);
            assert_eq!(rep.theta, chen_free(r, 10), "r = {r}");
            assert_eq!(rep.source, ChenSource::ExactHilbert);
        }
    }

    #[test]
    fn chen_ranks_of_bibby_models() {
        let a = bibby_model(2);
        let rep = chen_ranks(&a, 6, grevlex()).unwrap();
        assert_eq!(rep.theta1, 4);
        assert_eq!(rep.theta, vec![1, 2, 3, 4, 5]);
        let a3 = bibby_model(3);
        let rep3 = chen_ranks(&a3, 4, grevlex()).unwrap();
        assert_eq!(rep3.theta, vec![3, 6, 9]);
    }

    #[test]
    fn sol2_chen_ranks_vanish_and_are_tagged_truncated() {
        // The module is supported away from the origin, so every associated
        // graded piece vanishes.
        let a = ce_complex(&lie::sol2());
        let rep = chen_ranks(&a, 8, grevlex()).unwrap();
        assert_eq!(rep.theta1, 1);
        assert!(rep.theta.iter().all(|&v| v == 0));
    }

    #[test]
    fn tangent_cone_goldens() {
        let ring = PolyRing::new(vec!["x1", "x2"], grevlex());
        let gens = vec![
            ring.parse("x2^2").unwrap(),
            ring.parse("x1*x2").unwrap(),
            ring.parse("x1^2 - x2").unwrap(),
        ];
        let (tc, certified) = tangent_cone_ideal(&ring, &gens, 8);
        assert!(certified);
        let expected = vec![ring.parse("x2").unwrap(), ring.parse("x1^3").unwrap()];
        assert!(ideals_equal(&ring, &tc, &expected));

        let ring1 = PolyRing::new(vec!["x"], grevlex());
        let off_origin = vec![ring1.parse("x - 1").unwrap()];
        let (tc1, _) = tangent_cone_ideal(&ring1, &off_origin, 8);
        assert!(is_unit_ideal(&ring1, &tc1));

        let homog = vec![ring.parse("x1^2 + x2^2").unwrap()];
        let (tc2, _) = tangent_cone_ideal(&ring, &homog, 8);
        assert!(ideals_equal(&ring, &tc2, &homog));
    }

    #[test]
    fn resonance_report_consistency_on_small_models() {
        for key in ["ce:sol2", "ce:h(1)", "ce:L4,3"] {
            let a = catalog_model(key).unwrap();
            let rep = resonance_report(&a, key, 1, 1, grevlex(), 12, 17).unwrap();
            assert!(rep.jump_matches_rank_test, "{key}: rank test disagreed");
            assert!(rep.agree_off_origin, "{key}: jump vs support disagreed off origin");
        }
    }

    #[test]
    fn catalog_keys_all_build() {
        for key in catalog_keys() {
            let a = catalog_model(&key).unwrap_or_else(|| panic!("{key} must build"));
            assert!(a.cap() >= 2 || key.starts_with("ce:"), "{key}");
        }
        assert!(catalog_model("nosuch").is_none());
        assert!(catalog_model("bibby:9").is_none());
    }
}
