//! Finite-type commutative differential graded algebras over Q, truncated at
//! a degree cap.
//!
//! A `Cdga` stores bases for degrees `0..=cap`, dense multiplication tables
//! for ordered degree pairs `(i, j)` with `i <= j` and `i + j <= cap` (the
//! other order is derived from graded commutativity), and differential
//! matrices `d^i: A^i -> A^{i+1}` for `i < cap`. Degree 0 is always the line
//! spanned by the unit. Nothing above the cap exists: products and
//! differentials that would land there are undefined rather than zero.
//!
//! An optional weight grading assigns a nonnegative weight to each basis
//! element; products are additive and the differential preserves weights.

use std::collections::BTreeMap;

use crate::polycore::{QMat, Rat, SparseEchelon};

mod constructors;
mod json;
mod models;

pub use constructors::{
    ce_complex, ce_complex_capped, cohomology_cdga_cap2, coproduct, exterior_cdga,
    hirsch_extension, quadratic_cdga, tensor_product,
};
pub use json::{cdga_from_json, cdga_to_json};
pub use models::{
    bibby_model, conf_elliptic_h2, os_braid_truncation, simplicial_reduced_betti,
    stanley_reisner_exterior, SimplicialComplex,
};

/// Dense multiplication table for one degree pair: `table[a][b]` is the
/// coordinate vector of the product of the a-th and b-th basis elements.
pub type ProductTable = Vec<Vec<Vec<Rat>>>;

#[derive(Debug, Clone, PartialEq)]
pub struct Cdga {
    name: String,
    cap: usize,
    basis: Vec<Vec<String>>,
    /// Keys are `(i, j)` with `1 <= i <= j` and `i + j <= cap`.
    products: BTreeMap<(usize, usize), ProductTable>,
    /// `d[i]` is the matrix of `d^i` with `dim(i+1)` rows and `dim(i)` columns.
    d: Vec<QMat>,
    weights: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdgaDefect(pub String);

impl std::fmt::Display for CdgaDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl Cdga {
    /// Assembles an algebra from parts. Product tables are given only for
    /// `i <= j`; the opposite order is derived. Shape errors are reported
    /// here, algebraic defects by [`validate_cdga`].
    pub fn from_parts(
        name: &str,
        basis: Vec<Vec<String>>,
        products: BTreeMap<(usize, usize), ProductTable>,
        d: Vec<QMat>,
        weights: Option<Vec<Vec<u32>>>,
    ) -> Result<Self, String> {
        if basis.is_empty() {
            return Err("basis must cover at least degree 0".into());
        }
        let cap = basis.len() - 1;
        if cap < 1 {
            return Err("cap must be at least 1".into());
        }
        if basis[0] != vec!["1".to_string()] {
            return Err("degree 0 basis must be [\"1\"]".into());
        }
        let a = Cdga { name: name.to_string(), cap, basis, products, d, weights };
        for ((i, j), table) in &a.products {
            if *i < 1 || *i > *j || i + j > cap {
                return Err(format!("product table for invalid degree pair ({i}, {j})"));
            }
            if table.len() != a.dim(*i) {
                return Err(format!("product table ({i}, {j}) has {} rows", table.len()));
            }
            for row in table {
                if row.len() != a.dim(*j) {
                    return Err(format!("product table ({i}, {j}) has a row of length {}", row.len()));
                }
                for v in row {
                    if v.len() != a.dim(i + j) {
                        return Err(format!("product table ({i}, {j}) has a value of length {}", v.len()));
                    }
                }
            }
        }
        if a.d.len() != cap {
            return Err(format!("expected {} differential matrices, got {}", cap, a.d.len()));
        }
        for i in 0..cap {
            if a.d[i].rows != a.dim(i + 1) || a.d[i].cols != a.dim(i) {
                return Err(format!("d^{i} has shape {}x{}", a.d[i].rows, a.d[i].cols));
            }
        }
        if let Some(w) = &a.weights {
            if w.len() != cap + 1 {
                return Err("weights must cover degrees 0..=cap".into());
            }
            for (i, wi) in w.iter().enumerate() {
                if wi.len() != a.dim(i) {
                    return Err(format!("weights in degree {i} have length {}", wi.len()));
                }
            }
            if w[0] != vec![0] {
                return Err("the unit must have weight 0".into());
            }
        }
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Dimension of `A^i`; zero above the cap.
    pub fn dim(&self, i: usize) -> usize {
        self.basis.get(i).map_or(0, |b| b.len())
    }

    pub fn basis_names(&self, i: usize) -> &[String] {
        self.basis.get(i).map_or(&[], |b| b.as_slice())
    }

    pub fn weights(&self) -> Option<&Vec<Vec<u32>>> {
        self.weights.as_ref()
    }

    pub fn weight(&self, i: usize, a: usize) -> Option<u32> {
        self.weights.as_ref().map(|w| w[i][a])
    }

    /// Matrix of `d^i`. Panics above `cap - 1`.
    pub fn d_matrix(&self, i: usize) -> &QMat {
        assert!(i < self.cap, "d^{i} is undefined at cap {}", self.cap);
        &self.d[i]
    }

    /// Product of basis elements, as coordinates in degree `i + j`.
    /// Panics when the result degree exceeds the cap.
    pub fn mul_basis(&self, i: usize, a: usize, j: usize, b: usize) -> Vec<Rat> {
        assert!(i + j <= self.cap, "product lands above cap {}", self.cap);
        if i == 0 {
            let mut v = vec![Rat::zero(); self.dim(j)];
            v[b] = Rat::one();
            return v;
        }
        if j == 0 {
            let mut v = vec![Rat::zero(); self.dim(i)];
            v[a] = Rat::one();
            return v;
        }
        let (key, p, q, flip) = if i <= j { ((i, j), a, b, false) } else { ((j, i), b, a, (i * j) % 2 == 1) };
        let table = match self.products.get(&key) {
            Some(t) => t,
            None => return vec![Rat::zero(); self.dim(i + j)],
        };
        let mut v = table[p][q].clone();
        if flip {
            for c in &mut v {
                *c = -&*c;
            }
        }
        v
    }

    /// Bilinear extension of the product to coordinate vectors.
    pub fn mul(&self, i: usize, u: &[Rat], j: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim(i + j)];
        for (a, ca) in u.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in v.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let w = self.mul_basis(i, a, j, b);
                let c = ca * cb;
                for (k, wk) in w.iter().enumerate() {
                    if !wk.is_zero() {
                        out[k] = &out[k] + &(&c * wk);
                    }
                }
            }
        }
        out
    }

    /// Applies `d^i` to a coordinate vector.
    pub fn apply_d(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        self.d_matrix(i).mul_vec(v)
    }

    /// Brutal truncation retaining degrees up to `q + 1`, so that Koszul
    /// homology in homological degrees at most `q` is unchanged.
    pub fn truncate(&self, q: usize) -> Cdga {
        let new_cap = (q + 1).min(self.cap);
        let basis = self.basis[..=new_cap].to_vec();
        let products = self
            .products
            .iter()
            .filter(|((i, j), _)| i + j <= new_cap)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        let d = self.d[..new_cap].to_vec();
        let weights = self.weights.as_ref().map(|w| w[..=new_cap].to_vec());
        Cdga {
            name: format!("{}|<={}", self.name, new_cap),
            cap: new_cap,
            basis,
            products,
            d,
            weights,
        }
    }

    pub(crate) fn products(&self) -> &BTreeMap<(usize, usize), ProductTable> {
        &self.products
    }
}

/// Checks the algebra axioms within the cap: graded commutativity on the
/// diagonal tables, associativity, d squared, Leibniz, and weight
/// compatibility. Returns a list of human-readable defects.
pub fn validate_cdga(a: &Cdga) -> Vec<CdgaDefect> {
    let mut out = Vec::new();
    let cap = a.cap();
    // Diagonal commutativity; off-diagonal tables are derived so they are
    // commutative by construction.
    for ((i, j), table) in a.products() {
        if i != j {
            continue;
        }
        let sign_flip = i % 2 == 1;
        for p in 0..a.dim(*i) {
            for q in p..a.dim(*j) {
                let pq = &table[p][q];
                let qp = &table[q][p];
                let ok = pq.iter().zip(qp).all(|(x, y)| {
                    if sign_flip {
                        *x == -y
                    } else {
                        x == y
                    }
                });
                if !ok {
                    out.push(CdgaDefect(format!(
                        "graded commutativity fails in degree ({i}, {j}) at ({p}, {q})"
                    )));
                }
            }
        }
    }
    // Associativity on basis triples.
    for i in 1..=cap {
        for j in 1..=cap {
            for k in 1..=cap {
                if i + j + k > cap {
                    continue;
                }
                for p in 0..a.dim(i) {
                    for q in 0..a.dim(j) {
                        let pq = a.mul_basis(i, p, j, q);
                        for r in 0..a.dim(k) {
                            let mut er = vec![Rat::zero(); a.dim(k)];
                            er[r] = Rat::one();
                            let left = a.mul(i + j, &pq, k, &er);
                            let qr = a.mul_basis(j, q, k, r);
                            let mut ep = vec![Rat::zero(); a.dim(i)];
                            ep[p] = Rat::one();
                            let right = a.mul(i, &ep, j + k, &qr);
                            if left != right {
                                out.push(CdgaDefect(format!(
                                    "associativity fails on ({i},{p}) ({j},{q}) ({k},{r})"
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    // The unit is closed.
    if !a.d_matrix(0).is_zero() {
        out.push(CdgaDefect("d of the unit is nonzero".into()));
    }
    // d^2 = 0 wherever both maps exist.
    for i in 0..cap.saturating_sub(1) {
        let dd = a.d_matrix(i + 1).mul(a.d_matrix(i));
        if !dd.is_zero() {
            out.push(CdgaDefect(format!("d^{} . d^{} is nonzero", i + 1, i)));
        }
    }
    // Leibniz within the cap.
    for i in 1..cap {
        for j in 1..cap {
            if i + j > cap - 1 {
                continue;
            }
            for p in 0..a.dim(i) {
                for q in 0..a.dim(j) {
                    let mut ep = vec![Rat::zero(); a.dim(i)];
                    ep[p] = Rat::one();
                    let mut eq = vec![Rat::zero(); a.dim(j)];
                    eq[q] = Rat::one();
                    let lhs = a.apply_d(i + j, &a.mul_basis(i, p, j, q));
                    let dp = a.apply_d(i, &ep);
                    let dq = a.apply_d(j, &eq);
                    let mut rhs = a.mul(i + 1, &dp, j, &eq);
                    let second = a.mul(i, &ep, j + 1, &dq);
                    let sign = if i % 2 == 1 { -Rat::one() } else { Rat::one() };
                    for (k, s) in second.iter().enumerate() {
                        rhs[k] = &rhs[k] + &(&sign * s);
                    }
                    if lhs != rhs {
                        out.push(CdgaDefect(format!("Leibniz fails on ({i},{p}) ({j},{q})")));
                    }
                }
            }
        }
    }
    // Degree-1 squares vanish in characteristic 0.
    if let Some(t) = a.products().get(&(1, 1)) {
        for p in 0..a.dim(1) {
            if t[p][p].iter().any(|c| !c.is_zero()) {
                out.push(CdgaDefect(format!("square of odd element ({p}) is nonzero")));
            }
        }
    }
    if let Some(w) = a.weights() {
        for ((i, j), table) in a.products() {
            for p in 0..a.dim(*i) {
                for q in 0..a.dim(*j) {
                    let expect = w[*i][p] + w[*j][q];
                    for (k, c) in table[p][q].iter().enumerate() {
                        if !c.is_zero() && w[i + j][k] != expect {
                            out.push(CdgaDefect(format!(
                                "product weight mismatch on ({i},{p}) ({j},{q})"
                            )));
                        }
                    }
                }
            }
        }
        for i in 0..cap {
            let m = a.d_matrix(i);
            for p in 0..a.dim(i) {
                for k in 0..a.dim(i + 1) {
                    if !m.get(k, p).is_zero() && w[i + 1][k] != w[i][p] {
                        out.push(CdgaDefect(format!("d does not preserve weight at ({i},{p})")));
                    }
                }
            }
        }
    }
    out
}

/// A cohomology space in one degree, with chosen cocycle representatives.
///
/// Representatives are picked deterministically: kernel vectors of `d^i` are
/// scanned in the order produced by row reduction and kept when independent
/// from the image of `d^{i-1}` and the representatives already chosen.
#[derive(Debug, Clone)]
pub struct Cohomology {
    /// Coordinates of the chosen representatives in `A^i`.
    pub reps: Vec<Vec<Rat>>,
    solver: QMat,
    im_cols: usize,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of a cocycle `v` in the representative
    /// basis. Returns `None` when `v` is not a cocycle (not in the span of
    /// image and representatives).
    pub fn class_coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if self.reps.is_empty() && self.im_cols == 0 {
            return if v.iter().all(|c| c.is_zero()) { Some(Vec::new()) } else { None };
        }
        let sol = self.solver.solve(v)?;
        Some(sol[self.im_cols..].to_vec())
    }
}

/// Kernel-mod-image of a pair of matrices: `d_out` maps the ambient space
/// forward, `d_in` (when given) maps into it. Kernel vectors are taken in
/// row-reduction order, filtered against the image span.
pub(crate) fn cohomology_of(d_in: Option<&QMat>, d_out: &QMat) -> Cohomology {
    let n = d_out.cols;
    let kernel = d_out.kernel_basis();
    let im_vectors: Vec<Vec<Rat>> = match d_in {
        None => Vec::new(),
        Some(m) => (0..m.cols).map(|c| m.col(c)).collect(),
    };
    let mut ech = SparseEchelon::new();
    let mut im_basis: Vec<Vec<Rat>> = Vec::new();
    for v in &im_vectors {
        if ech.insert(dense_to_sparse(v)) {
            im_basis.push(v.clone());
        }
    }
    let mut reps = Vec::new();
    for v in &kernel {
        if ech.insert(dense_to_sparse(v)) {
            reps.push(v.clone());
        }
    }
    let mut cols = im_basis;
    cols.extend(reps.iter().cloned());
    let im_cols = cols.len() - reps.len();
    let solver = if cols.is_empty() {
        QMat::zeros(n.max(1), 1)
    } else {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        QMat::from_rows(rows)
    };
    Cohomology { reps, solver, im_cols }
}

/// Cohomology of `A` in degree `i`, for `i <= cap - 1`.
pub fn cohomology(a: &Cdga, i: usize) -> Cohomology {
    assert!(i < a.cap(), "cohomology needs degree at most cap - 1 = {}", a.cap() - 1);
    let d_in = if i == 0 { None } else { Some(a.d_matrix(i - 1)) };
    cohomology_of(d_in, a.d_matrix(i))
}

fn dense_to_sparse(v: &[Rat]) -> Vec<(usize, Rat)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// Betti number `dim H^i(A)`.
pub fn cohomology_dim(a: &Cdga, i: usize) -> usize {
    cohomology(a, i).dim()
}

/// The degree 1 and 2 cohomology of `A` together with the cup product
/// expressed in the representative bases.
#[derive(Debug, Clone)]
pub struct QuadraticData {
    pub h1: Cohomology,
    pub h2: Cohomology,
    /// Names for the H^1 basis, taken from `A^1` basis names when a
    /// representative is a multiple of a single basis vector.
    pub h1_names: Vec<String>,
    pub h2_names: Vec<String>,
    /// `cup[p][q]` is the H^2 coordinate vector of the product of classes.
    pub cup: Vec<Vec<Vec<Rat>>>,
    /// Weights of the representatives when `A` is weighted and every
    /// representative is weight-homogeneous.
    pub h1_weights: Option<Vec<u32>>,
    pub h2_weights: Option<Vec<u32>>,
}

/// Computes H^1, H^2, and the cup product matrix of `A`. Needs cap >= 3 for
/// honest H^2; with cap = 2 the kernel of the undefined `d^2` is taken to be
/// all of `A^2`, which is the right reading for models that are themselves
/// truncations with zero differential out of degree 2.
pub fn cohomology_quadratic_data(a: &Cdga) -> QuadraticData {
    let h1 = cohomology(a, 1);
    let h2 = if a.cap() >= 3 {
        cohomology(a, 2)
    } else {
        // With cap = 2 the kernel of the undefined d^2 is read as all of A^2.
        cohomology_of(Some(a.d_matrix(1)), &QMat::zeros(1, a.dim(2)))
    };
    let h1_names = rep_names(a, 1, &h1.reps);
    let h2_names = rep_names(a, 2, &h2.reps);
    let mut cup = Vec::new();
    for p in 0..h1.dim() {
        let mut row = Vec::new();
        for q in 0..h1.dim() {
            let prod = a.mul(1, &h1.reps[p], 1, &h1.reps[q]);
            let coords = h2.class_coords(&prod).expect("cup product of cocycles is a cocycle");
            row.push(coords);
        }
        cup.push(row);
    }
    let h1_weights = rep_weights(a, 1, &h1.reps);
    let h2_weights = rep_weights(a, 2, &h2.reps);
    QuadraticData { h1, h2, h1_names, h2_names, cup, h1_weights, h2_weights }
}

fn rep_names(a: &Cdga, degree: usize, reps: &[Vec<Rat>]) -> Vec<String> {
    reps.iter()
        .enumerate()
        .map(|(k, v)| {
            let support: Vec<usize> =
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect();
            if support.len() == 1 {
                a.basis_names(degree)[support[0]].clone()
            } else {
                format!("h{degree}_{}", k + 1)
            }
        })
        .collect()
}

fn rep_weights(a: &Cdga, degree: usize, reps: &[Vec<Rat>]) -> Option<Vec<u32>> {
    let w = a.weights()?;
    let mut out = Vec::new();
    for v in reps {
        let mut seen: Option<u32> = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let wi = w[degree][i];
            match seen {
                None => seen = Some(wi),
                Some(prev) if prev != wi => return None,
                _ => {}
            }
        }
        out.push(seen.unwrap_or(0));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie;

    #[test]
    fn heisenberg_ce_validates_and_has_expected_betti() {
        let a = ce_complex(&lie::heisenberg(1));
        assert!(validate_cdga(&a).is_empty());
        assert_eq!(a.cap(), 3);
        assert_eq!(cohomology_dim(&a, 0), 1);
        assert_eq!(cohomology_dim(&a, 1), 2);
        assert_eq!(cohomology_dim(&a, 2), 2);
    }

    #[test]
    fn truncation_keeps_low_degrees() {
        let a = ce_complex(&lie::free_two_step(3));
        let t = a.truncate(1);
        assert_eq!(t.cap(), 2);
        assert_eq!(t.dim(1), a.dim(1));
        assert_eq!(t.dim(2), a.dim(2));
        assert!(validate_cdga(&t).is_empty());
    }

    #[test]
    fn quadratic_data_of_heisenberg() {
        let a = ce_complex(&lie::heisenberg(1));
        let q = cohomology_quadratic_data(&a);
        assert_eq!(q.h1.dim(), 2);
        assert_eq!(q.h2.dim(), 2);
        // e1 and f1 survive; their cup product e1*f1 is exact, hence zero in H^2.
        assert!(q.cup[0][1].iter().all(|c| c.is_zero()));
        assert_eq!(q.h1_names, vec!["e1", "f1"]);
    }

    #[test]
    fn class_coords_are_unique_even_with_redundant_image_columns() {
        let a = ce_complex(&lie::heisenberg(1));
        let h2 = cohomology(&a, 2);
        for (k, rep) in h2.reps.iter().enumerate() {
            let coords = h2.class_coords(rep).unwrap();
            for (j, c) in coords.iter().enumerate() {
                assert_eq!(c.is_one(), j == k);
            }
        }
    }
}
