//! Finite-dimensional Lie algebras over Q with a catalog of small nilpotent
//! and solvable examples.
//!
//! Brackets are stored only for index pairs `i < j`; antisymmetry and
//! `[x, x] = 0` are built into the representation. An optional positive
//! grading assigns a weight to each basis vector; it is validated against
//! the brackets and later induces the weight grading of the
//! Chevalley-Eilenberg complex.

use std::collections::BTreeMap;
use std::fmt;

use crate::polycore::{QMat, Rat};

/// A finite-dimensional Lie algebra given by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    /// `brackets[(i, j)]` for `i < j` is the coordinate vector of `[x_i, x_j]`.
    /// Missing pairs bracket to zero.
    brackets: BTreeMap<(usize, usize), Vec<Rat>>,
    /// Positive weights making the brackets graded, when the algebra has them.
    grading: Option<Vec<u32>>,
}

/// Problems found by [`validate_lie`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieDefect {
    /// Dimension mismatch in a bracket vector, or a pair index out of range.
    Shape(String),
    /// Jacobi fails on the basis triple (i, j, k); indices are 0-based.
    Jacobi(usize, usize, usize),
    /// `[x_i, x_j]` leaves the expected weight component.
    Weight(usize, usize),
    /// A weight is zero.
    NonPositiveWeight(usize),
}

impl fmt::Display for LieDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieDefect::Shape(msg) => write!(f, "shape: {msg}"),
            LieDefect::Jacobi(i, j, k) => {
                write!(f, "Jacobi identity fails on basis triple ({i}, {j}, {k})")
            }
            LieDefect::Weight(i, j) => {
                write!(f, "[x_{i}, x_{j}] is not concentrated in weight w_{i} + w_{j}")
            }
            LieDefect::NonPositiveWeight(i) => write!(f, "weight of basis vector {i} is 0"),
        }
    }
}

impl LieAlgebra {
    /// Builds an algebra from sparse bracket data. `brackets` lists
    /// `((i, j), v)` with `i < j`; pairs may repeat only by mistake, so
    /// duplicates are rejected. Validation is the caller's business via
    /// [`validate_lie`]; catalog constructors assert it.
    pub fn new(
        name: &str,
        basis: Vec<String>,
        brackets: Vec<((usize, usize), Vec<Rat>)>,
        grading: Option<Vec<u32>>,
    ) -> Result<Self, String> {
        let dim = basis.len();
        let mut map = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= j || j >= dim {
                return Err(format!("bracket pair ({i}, {j}) out of range for dim {dim}"));
            }
            if v.len() != dim {
                return Err(format!("bracket vector for ({i}, {j}) has length {}", v.len()));
            }
            if map.insert((i, j), v).is_some() {
                return Err(format!("duplicate bracket pair ({i}, {j})"));
            }
        }
        if let Some(w) = &grading {
            if w.len() != dim {
                return Err(format!("grading has length {}, expected {dim}", w.len()));
            }
        }
        Ok(LieAlgebra { name: name.to_string(), basis, brackets: map, grading })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn grading(&self) -> Option<&[u32]> {
        self.grading.as_deref()
    }

    /// `[x_i, x_j]` as a coordinate vector, for any i, j.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        let dim = self.dim();
        if i == j {
            return vec![Rat::zero(); dim];
        }
        let (p, q, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        let mut v = self
            .brackets
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| vec![Rat::zero(); dim]);
        if flip {
            for c in &mut v {
                *c = -&*c;
            }
        }
        v
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let dim = self.dim();
        let mut out = vec![Rat::zero(); dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let w = self.bracket_basis(i, j);
                let ab = a * b;
                for (k, c) in w.iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Structure constants as used by the Chevalley-Eilenberg differential:
    /// the list of `((i, j), k, c)` with `i < j` and `[x_i, x_j] = sum c x_k`.
    pub fn structure_constants(&self) -> Vec<((usize, usize), usize, Rat)> {
        let mut out = Vec::new();
        for (&(i, j), v) in &self.brackets {
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    out.push(((i, j), k, c.clone()));
                }
            }
        }
        out
    }
}

/// Checks the Jacobi identity on all basis triples and, if a grading is
/// present, positivity and compatibility of the weights.
pub fn validate_lie(g: &LieAlgebra) -> Vec<LieDefect> {
    let dim = g.dim();
    let mut defects = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            for k in (j + 1)..dim {
                let ei = unit(dim, i);
                let ej = unit(dim, j);
                let ek = unit(dim, k);
                let mut s = g.bracket(&g.bracket(&ei, &ej), &ek);
                let t = g.bracket(&g.bracket(&ej, &ek), &ei);
                let u = g.bracket(&g.bracket(&ek, &ei), &ej);
                for m in 0..dim {
                    s[m] = &(&s[m] + &t[m]) + &u[m];
                }
                if s.iter().any(|c| !c.is_zero()) {
                    defects.push(LieDefect::Jacobi(i, j, k));
                }
            }
        }
    }
    if let Some(w) = g.grading() {
        for (i, wi) in w.iter().enumerate() {
            if *wi == 0 {
                defects.push(LieDefect::NonPositiveWeight(i));
            }
        }
        for (&(i, j), v) in &g.brackets {
            let expect = w[i] + w[j];
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() && w[k] != expect {
                    defects.push(LieDefect::Weight(i, j));
                    break;
                }
            }
        }
    }
    defects
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

/// Dimensions of the lower central series terms gamma_1 = g,
/// gamma_{k+1} = [g, gamma_k], reported until the series stabilizes or
/// `max_terms` entries have been produced.
pub fn lower_central_series(g: &LieAlgebra, max_terms: usize) -> Vec<usize> {
    let dim = g.dim();
    let mut dims = vec![dim];
    // Row space of the current term, as a matrix of coordinate rows.
    let mut current: Vec<Vec<Rat>> = (0..dim).map(|i| unit(dim, i)).collect();
    while dims.len() < max_terms {
        let mut rows = Vec::new();
        for i in 0..dim {
            let ei = unit(dim, i);
            for v in &current {
                rows.push(g.bracket(&ei, v));
            }
        }
        let mat = if rows.is_empty() {
            QMat::zeros(1, dim)
        } else {
            QMat::from_rows(rows.clone())
        };
        let (rref, pivots) = mat.rref();
        let next_dim = pivots.len();
        dims.push(next_dim);
        // A repeated dimension means the series has stabilized: the terms are
        // nested, so equal dimensions force equal subspaces.
        if next_dim == 0 || Some(&next_dim) == dims.get(dims.len().wrapping_sub(2)) {
            break;
        }
        current = (0..next_dim)
            .map(|r| (0..dim).map(|c| rref.get(r, c).clone()).collect())
            .collect();
    }
    dims
}

/// True when the lower central series reaches 0.
pub fn is_nilpotent(g: &LieAlgebra) -> bool {
    lower_central_series(g, g.dim() + 2).last() == Some(&0)
}

fn e(dim: usize, k: usize) -> Vec<Rat> {
    unit(dim, k)
}

/// The non-abelian solvable algebra of dimension 2: [x1, x2] = x2.
pub fn sol2() -> LieAlgebra {
    let g = LieAlgebra::new(
        "sol2",
        vec!["x1".into(), "x2".into()],
        vec![((0, 1), e(2, 1))],
        None,
    )
    .unwrap();
    debug_assert!(validate_lie(&g).is_empty());
    g
}

/// Heisenberg algebra of dimension 2n + 1: [e_i, f_i] = z.
pub fn heisenberg(n: usize) -> LieAlgebra {
    assert!(n >= 1, "heisenberg(n) needs n >= 1");
    let dim = 2 * n + 1;
    let mut names = Vec::new();
    for i in 1..=n {
        names.push(format!("e{i}"));
    }
    for i in 1..=n {
        names.push(format!("f{i}"));
    }
    names.push("z".into());
    let mut brackets = Vec::new();
    for i in 0..n {
        brackets.push(((i, n + i), e(dim, dim - 1)));
    }
    let mut weights = vec![1; dim];
    weights[dim - 1] = 2;
    let g = LieAlgebra::new(&format!("h({n})"), names, brackets, Some(weights)).unwrap();
    debug_assert!(validate_lie(&g).is_empty());
    g
}

/// Free 2-step nilpotent algebra on m generators: gamma_2 is the full
/// wedge square, so dim = m + m(m-1)/2 and [x_i, x_j] = w_ij for i < j.
pub fn free_two_step(m: usize) -> LieAlgebra {
    assert!(m >= 2, "free_two_step(m) needs m >= 2");
    let second = m * (m - 1) / 2;
    let dim = m + second;
    let mut names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let mut brackets = Vec::new();
    let mut next = m;
    for i in 0..m {
        for j in (i + 1)..m {
            names.push(format!("w{}{}", i + 1, j + 1));
            brackets.push(((i, j), e(dim, next)));
            next += 1;
        }
    }
    let mut weights = vec![1; m];
    weights.extend(std::iter::repeat(2).take(second));
    let g = LieAlgebra::new(&format!("f({m},2)"), names, brackets, Some(weights)).unwrap();
    debug_assert!(validate_lie(&g).is_empty());
    g
}

/// Abelian algebra of dimension n.
pub fn abelian(n: usize) -> LieAlgebra {
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    let g = LieAlgebra::new(&format!("abelian({n})"), names, Vec::new(), Some(vec![1; n]))
        .unwrap();
    debug_assert!(validate_lie(&g).is_empty());
    g
}

/// Nilpotent algebras of dimension at most 5 in de Graaf's list, by label.
/// Supported labels: "L3,2", "L4,2", "L4,3", "L5,4", "L5,5", "L5,6",
/// "L5,7", "L5,8", "L5,9".
pub fn de_graaf(label: &str) -> Option<LieAlgebra> {
    let names = |n: usize| -> Vec<String> { (1..=n).map(|i| format!("x{i}")).collect() };
    let data: (usize, Vec<((usize, usize), usize)>, Vec<u32>) = match label {
        "L3,2" => (3, vec![((0, 1), 2)], vec![1, 1, 2]),
        "L4,2" => (4, vec![((0, 1), 2)], vec![1, 1, 2, 1]),
        "L4,3" => (4, vec![((0, 1), 2), ((0, 2), 3)], vec![1, 1, 2, 3]),
        "L5,4" => (5, vec![((0, 1), 4), ((2, 3), 4)], vec![1, 1, 1, 1, 2]),
        "L5,5" => (5, vec![((0, 1), 2), ((0, 2), 4), ((1, 3), 4)], vec![1, 1, 2, 2, 3]),
        "L5,6" => (
            5,
            vec![((0, 1), 2), ((0, 2), 3), ((0, 3), 4), ((1, 2), 4)],
            vec![1, 2, 3, 4, 5],
        ),
        "L5,7" => (5, vec![((0, 1), 2), ((0, 2), 3), ((0, 3), 4)], vec![1, 1, 2, 3, 4]),
        "L5,8" => (5, vec![((0, 1), 3), ((0, 2), 4)], vec![1, 1, 1, 2, 2]),
        "L5,9" => (5, vec![((0, 1), 2), ((0, 2), 3), ((1, 2), 4)], vec![1, 1, 2, 3, 3]),
        _ => return None,
    };
    let (dim, pairs, weights) = data;
    let brackets = pairs.into_iter().map(|(p, k)| (p, e(dim, k))).collect();
    let g = LieAlgebra::new(label, names(dim), brackets, Some(weights)).unwrap();
    debug_assert!(validate_lie(&g).is_empty());
    Some(g)
}

/// Looks up a catalog algebra by name. Accepted forms: "sol2", "h(n)",
/// "f(m,2)", "abelian(n)", and de Graaf labels "Ld,k".
pub fn builtin_lie(name: &str) -> Option<LieAlgebra> {
    if name == "sol2" {
        return Some(sol2());
    }
    if let Some(rest) = name.strip_prefix("h(").and_then(|s| s.strip_suffix(')')) {
        return rest.parse::<usize>().ok().filter(|&n| n >= 1).map(heisenberg);
    }
    if let Some(rest) = name.strip_prefix("f(").and_then(|s| s.strip_suffix(')')) {
        let (m, step) = rest.split_once(',')?;
        if step.trim() != "2" {
            return None;
        }
        return m.trim().parse::<usize>().ok().filter(|&m| m >= 2).map(free_two_step);
    }
    if let Some(rest) = name.strip_prefix("abelian(").and_then(|s| s.strip_suffix(')')) {
        return rest.parse::<usize>().ok().map(abelian);
    }
    de_graaf(name)
}

/// Names of all catalog families with small default parameters, used by the
/// CLI listing and the cross-model verification suites.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "sol2", "h(1)", "h(2)", "f(2,2)", "f(3,2)", "abelian(2)", "abelian(3)", "L3,2",
        "L4,2", "L4,3", "L5,4", "L5,5", "L5,6", "L5,7", "L5,8", "L5,9",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn jacobi_catches_fake_algebra() {
        // [x1,x2] = x3, [x1,x3] = x1, [x2,x3] = x2 violates Jacobi.
        let g = LieAlgebra::new(
            "fake",
            vec!["x1".into(), "x2".into(), "x3".into()],
            vec![((0, 1), e(3, 2)), ((0, 2), e(3, 0)), ((1, 2), e(3, 1))],
            None,
        )
        .unwrap();
        let defects = validate_lie(&g);
        assert!(defects.contains(&LieDefect::Jacobi(0, 1, 2)));
    }

    #[test]
    fn lcs_dimensions() {
        assert_eq!(lower_central_series(&heisenberg(1), 5), vec![3, 1, 0]);
        assert_eq!(lower_central_series(&free_two_step(3), 5), vec![6, 3, 0]);
        assert_eq!(lower_central_series(&sol2(), 5), vec![2, 1, 1]);
        assert_eq!(lower_central_series(&de_graaf("L5,7").unwrap(), 9), vec![5, 3, 2, 1, 0]);
    }

    #[test]
    fn nilpotency_matches_grading_presence() {
        for name in catalog_names() {
            let g = builtin_lie(name).unwrap();
            assert!(validate_lie(&g).is_empty(), "catalog algebra {name} invalid");
            assert_eq!(is_nilpotent(&g), g.grading().is_some(), "{name}");
        }
    }

    #[test]
    fn f22_is_heisenberg() {
        let f = free_two_step(2);
        let h = heisenberg(1);
        assert_eq!(f.dim(), h.dim());
        // Same structure constants up to renaming: [x1, x2] = w12 vs [e1, f1] = z.
        assert_eq!(f.bracket_basis(0, 1), h.bracket_basis(0, 1));
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let g = de_graaf("L5,6").unwrap();
        let u = vec![r(1), r(2), r(0), r(3), r(0)];
        let v = vec![r(0), r(1), r(1), r(0), r(2)];
        let uv = g.bracket(&u, &v);
        let vu = g.bracket(&v, &u);
        for (a, b) in uv.iter().zip(&vu) {
            assert_eq!(*a, -b);
        }
    }
}
