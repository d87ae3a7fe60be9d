//! Exact linear algebra over the rationals.
//!
//! `QMat` is a small dense matrix with deterministic Gauss-Jordan pivoting
//! (first nonzero row per column, columns left to right). `SparseEchelon` is
//! an online row-echelon accumulator for large sparse rank computations.

use std::collections::HashMap;

use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    a: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, a: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        QMat { rows: r, cols: c, a: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> QMat {
        let mut m = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = other.get(k, j);
                    if !v.is_zero() {
                        let cur = m.get(i, j) + &(aik * v);
                        m.set(i, j, cur);
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        s += &(a * &v[j]);
                    }
                }
                s
            })
            .collect()
    }

    /// Reduced row echelon form with the list of pivot columns.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..m.cols {
            if r >= m.rows {
                break;
            }
            let piv = (r..m.rows).find(|&i| !m.get(i, j).is_zero());
            let Some(p) = piv else { continue };
            if p != r {
                for jj in 0..m.cols {
                    let x = m.get(p, jj).clone();
                    let y = m.get(r, jj).clone();
                    m.set(p, jj, y);
                    m.set(r, jj, x);
                }
            }
            let inv = m.get(r, j).inv();
            for jj in 0..m.cols {
                let v = m.get(r, jj) * &inv;
                m.set(r, jj, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, j).is_zero() {
                    let f = m.get(i, j).clone();
                    for jj in 0..m.cols {
                        let v = m.get(i, jj) - &(&f * m.get(r, jj));
                        m.set(i, jj, v);
                    }
                }
            }
            pivots.push(j);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space; one vector per free column, free columns
    /// in ascending order, unit entry at the free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains_key(&f) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (&pj, &pk) in &pivot_set {
                v[pj] = -r.get(pk, f);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A x = b` with free variables set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = QMat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (k, &j) in pivots.iter().enumerate() {
            x[j] = r.get(k, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, None when singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(QMat::zeros(0, 0));
        }
        let (r, pivots) = self.hstack(&QMat::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = QMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn hstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.rows, other.rows);
        let mut m = QMat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }
}

/// Sparse row with strictly ascending column indices and nonzero coefficients.
pub type SparseRow = Vec<(usize, Rat)>;

/// a - c * b for sorted sparse rows.
fn row_sub_scaled(a: &SparseRow, c: &Rat, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, -&(c * &b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &a[i].1 - &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (col, v) in &b[j..] {
        out.push((*col, -&(c * v)));
    }
    out
}

#[derive(Default)]
pub struct SparseEchelon {
    rows: Vec<SparseRow>,
    pivot_of_col: HashMap<usize, usize>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Fully reduces `row` against the current echelon; the remainder's leading
    /// column is not a pivot column.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((c, a)) = row.first().cloned() else { return row };
            match self.pivot_of_col.get(&c) {
                Some(&ri) => row = row_sub_scaled(&row, &a, &self.rows[ri]),
                None => return row,
            }
        }
    }

    /// Inserts a row; returns true when it enlarged the row space.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((c, a)) = row.first().cloned() else { return false };
        let inv = a.inv();
        let row: SparseRow = row.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
        self.pivot_of_col.insert(c, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Online reduced row echelon: every pivot column occurs in exactly one row.
#[derive(Default)]
pub struct SparseRref {
    rows: Vec<SparseRow>,
    pivot_of_col: HashMap<usize, usize>,
}

impl SparseRref {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        // Clear every entry sitting in an existing pivot column. Stored rows
        // contain no foreign pivot columns, so each step strictly shrinks the
        // set of pivot columns present in `row`.
        loop {
            let hit = row
                .iter()
                .find(|(c, _)| self.pivot_of_col.contains_key(c))
                .map(|(c, a)| (*c, a.clone()));
            match hit {
                Some((c, a)) => {
                    let ri = self.pivot_of_col[&c];
                    row = row_sub_scaled(&row, &a, &self.rows[ri]);
                }
                None => break,
            }
        }
        let Some((c, a)) = row.first().cloned() else { return false };
        let inv = a.inv();
        let row: SparseRow = row.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
        for other in self.rows.iter_mut() {
            if let Ok(k) = other.binary_search_by_key(&c, |(j, _)| *j) {
                let coef = other[k].1.clone();
                *other = row_sub_scaled(other, &coef, &row);
            }
        }
        self.pivot_of_col.insert(c, self.rows.len());
        self.rows.push(row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn rref_rank_kernel() {
        // rows: (1,2,3), (2,4,6), (1,0,1) -> rank 2
        let m = QMat::from_rows(vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![r(1), r(0), r(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = QMat::from_rows(vec![vec![r(1), r(1)], vec![r(1), r(-1)]]);
        let x = m.solve(&[r(3), r(1)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
        let sing = QMat::from_rows(vec![vec![r(1), r(1)], vec![r(2), r(2)]]);
        assert!(sing.solve(&[r(0), r(1)]).is_none());
        assert!(sing.solve(&[r(1), r(2)]).is_some());
    }

    #[test]
    fn sparse_rref_keeps_pivots_unique() {
        let mut m = SparseRref::new();
        m.insert(vec![(1, r(2)), (3, r(4))]);
        m.insert(vec![(0, r(1)), (1, r(1))]);
        m.insert(vec![(0, r(1)), (3, r(-2)), (4, r(5))]);
        assert_eq!(m.rank(), 3);
        // Every pivot column appears in exactly one stored row.
        let pivots: Vec<usize> = m.rows().iter().map(|row| row[0].0).collect();
        for row in m.rows() {
            for (c, _) in &row[1..] {
                assert!(!pivots.contains(c));
            }
        }
        // Dependent row does not increase rank.
        assert!(!m.insert(vec![(1, r(2)), (3, r(4))]));
    }

    #[test]
    fn sparse_echelon_rank_matches_dense() {
        let dense = QMat::from_rows(vec![
            vec![r(0), r(1), r(2), r(0)],
            vec![r(1), r(0), r(0), r(3)],
            vec![r(1), r(1), r(2), r(3)],
            vec![r(0), r(0), r(1), r(1)],
        ]);
        let mut ech = SparseEchelon::new();
        let mut rank = 0;
        for i in 0..dense.rows {
            let row: SparseRow = dense
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect();
            if ech.insert(row) {
                rank += 1;
            }
        }
        assert_eq!(rank, dense.rank());
        assert_eq!(ech.rank(), 3);
        assert!(ech.contains(vec![(0, r(2)), (1, r(2)), (2, r(4)), (3, r(6))]));
    }
}
