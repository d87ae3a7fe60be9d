//! Model catalog: holomorphic-page models of elliptic configuration spaces,
//! Orlik-Solomon truncations of braid arrangements, and Stanley-Reisner
//! exterior quotients.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::polycore::{QMat, Rat};

use super::{Cdga, ProductTable};

/// Builds a cap-2 algebra from degree-1 names and a list of relation vectors
/// in the formal wedge square. The degree-2 basis is the image of the
/// non-pivot wedge pairs under row reduction of the relation span, and the
/// returned projector sends a wedge-coordinate vector to that basis.
struct WedgeQuotient {
    pairs: Vec<(usize, usize)>,
    /// Reduced rows of the relation space, with their pivot columns.
    rref: QMat,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl WedgeQuotient {
    fn new(n1: usize, relations: &[Vec<Rat>]) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n1).tuple_combinations().collect();
        let (rref, pivots) = if relations.is_empty() {
            (QMat::zeros(1, pairs.len()), Vec::new())
        } else {
            QMat::from_rows(relations.to_vec()).rref()
        };
        let free: Vec<usize> = (0..pairs.len()).filter(|c| !pivots.contains(c)).collect();
        WedgeQuotient { pairs, rref, pivots, free }
    }

    fn pair_index(&self, p: usize, q: usize) -> (usize, Rat) {
        if p < q {
            (self.pairs.iter().position(|&t| t == (p, q)).unwrap(), Rat::one())
        } else {
            (self.pairs.iter().position(|&t| t == (q, p)).unwrap(), -Rat::one())
        }
    }

    /// Projects a wedge-coordinate vector to quotient coordinates.
    fn project(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let c = w[pc].clone();
                for j in 0..w.len() {
                    let adj = &c * self.rref.get(r, j);
                    w[j] = &w[j] - &adj;
                }
            }
        }
        self.free.iter().map(|&c| w[c].clone()).collect()
    }

    fn dim2(&self) -> usize {
        self.free.len()
    }

    fn basis_names(&self, names1: &[String]) -> Vec<String> {
        self.free
            .iter()
            .map(|&c| {
                let (p, q) = self.pairs[c];
                format!("{}∧{}", names1[p], names1[q])
            })
            .collect()
    }
}

fn cap2_from_quotient(
    name: &str,
    names1: Vec<String>,
    wq: &WedgeQuotient,
    d1_images: Vec<Vec<Rat>>,
    weights1: Option<Vec<u32>>,
) -> Cdga {
    let n1 = names1.len();
    let n2 = wq.dim2();
    let mut table: ProductTable = vec![vec![vec![Rat::zero(); n2]; n1]; n1];
    for p in 0..n1 {
        for q in 0..n1 {
            if p == q {
                continue;
            }
            let (idx, sign) = wq.pair_index(p, q);
            let mut v = vec![Rat::zero(); wq.pairs.len()];
            v[idx] = sign;
            table[p][q] = wq.project(&v);
        }
    }
    let mut products = BTreeMap::new();
    products.insert((1, 1), table);
    let mut d1 = QMat::zeros(n2, n1);
    for (c, img) in d1_images.iter().enumerate() {
        for (r, v) in img.iter().enumerate() {
            d1.set(r, c, v.clone());
        }
    }
    let d = vec![QMat::zeros(n1, 1), d1];
    let names2 = wq.basis_names(&names1);
    let weights = weights1.map(|w1| {
        let w2 = wq
            .free
            .iter()
            .map(|&c| {
                let (p, q) = wq.pairs[c];
                w1[p] + w1[q]
            })
            .collect();
        vec![vec![0], w1, w2]
    });
    Cdga::from_parts(name, vec![vec!["1".into()], names1, names2], products, d, weights)
        .expect("wedge quotient model is well shaped")
}

/// Weight filtration page model for the configuration space of n points on an
/// elliptic curve: generators a_i, b_i of weight 1 and e_ij of weight 2 with
/// (a_i - a_j) e_ij = (b_i - b_j) e_ij = 0, triple relations among the e's,
/// and d(e_ij) = (a_i - a_j)(b_i - b_j). Cap 2.
pub fn bibby_model(n: usize) -> Cdga {
    assert!(n >= 2, "bibby model needs n >= 2");
    let mut names1: Vec<String> = Vec::new();
    for i in 1..=n {
        names1.push(format!("a{i}"));
    }
    for i in 1..=n {
        names1.push(format!("b{i}"));
    }
    let pairs_ij: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    for &(i, j) in &pairs_ij {
        names1.push(format!("e{}{}", i + 1, j + 1));
    }
    let n1 = names1.len();
    let a = |i: usize| i;
    let b = |i: usize| n + i;
    let e = |i: usize, j: usize| 2 * n + pairs_ij.iter().position(|&t| t == (i, j)).unwrap();

    let all_pairs: Vec<(usize, usize)> = (0..n1).tuple_combinations().collect();
    let wedge_dim = all_pairs.len();
    let coord = |p: usize, q: usize| -> (usize, Rat) {
        if p < q {
            (all_pairs.iter().position(|&t| t == (p, q)).unwrap(), Rat::one())
        } else {
            (all_pairs.iter().position(|&t| t == (q, p)).unwrap(), -Rat::one())
        }
    };
    let mut relations: Vec<Vec<Rat>> = Vec::new();
    let mut add_rel = |terms: &[(usize, usize, i64)]| {
        let mut v = vec![Rat::zero(); wedge_dim];
        for &(p, q, c) in terms {
            let (idx, sign) = coord(p, q);
            v[idx] = &v[idx] + &(&Rat::from_int(c) * &sign);
        }
        relations.push(v);
    };
    for &(i, j) in &pairs_ij {
        add_rel(&[(a(i), e(i, j), 1), (a(j), e(i, j), -1)]);
        add_rel(&[(b(i), e(i, j), 1), (b(j), e(i, j), -1)]);
    }
    for (i, j, k) in (0..n).tuple_combinations() {
        add_rel(&[(e(i, j), e(i, k), 1), (e(i, j), e(j, k), -1), (e(i, k), e(j, k), 1)]);
    }

    let wq = WedgeQuotient::new(n1, &relations);
    // d(e_ij) = (a_i - a_j)(b_i - b_j) = a_i b_i - a_i b_j - a_j b_i + a_j b_j.
    let mut d1_images = vec![vec![Rat::zero(); wq.dim2()]; n1];
    for &(i, j) in &pairs_ij {
        let mut v = vec![Rat::zero(); wedge_dim];
        for (p, q, c) in
            [(a(i), b(i), 1i64), (a(i), b(j), -1), (a(j), b(i), -1), (a(j), b(j), 1)]
        {
            let (idx, sign) = coord(p, q);
            v[idx] = &v[idx] + &(&Rat::from_int(c) * &sign);
        }
        d1_images[e(i, j)] = wq.project(&v);
    }
    let mut weights1 = vec![1u32; 2 * n];
    weights1.extend(std::iter::repeat(2).take(pairs_ij.len()));
    cap2_from_quotient(&format!("bibby:{n}"), names1, &wq, d1_images, Some(weights1))
}

/// The degree-2 truncation of the holomorphic part for n points on an
/// elliptic curve: a_i, b_i with relations a_i b_i = 0 and
/// a_i b_j + a_j b_i = 0, zero differential, all weights 1. Cap 2.
pub fn conf_elliptic_h2(n: usize) -> Cdga {
    assert!(n >= 1);
    let mut names1: Vec<String> = Vec::new();
    for i in 1..=n {
        names1.push(format!("a{i}"));
    }
    for i in 1..=n {
        names1.push(format!("b{i}"));
    }
    let n1 = names1.len();
    let a = |i: usize| i;
    let b = |i: usize| n + i;
    let all_pairs: Vec<(usize, usize)> = (0..n1).tuple_combinations().collect();
    let wedge_dim = all_pairs.len();
    let coord = |p: usize, q: usize| -> (usize, Rat) {
        if p < q {
            (all_pairs.iter().position(|&t| t == (p, q)).unwrap(), Rat::one())
        } else {
            (all_pairs.iter().position(|&t| t == (q, p)).unwrap(), -Rat::one())
        }
    };
    let mut relations: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        let mut v = vec![Rat::zero(); wedge_dim];
        let (idx, sign) = coord(a(i), b(i));
        v[idx] = sign;
        relations.push(v);
    }
    for (i, j) in (0..n).tuple_combinations() {
        let mut v = vec![Rat::zero(); wedge_dim];
        let (idx, sign) = coord(a(i), b(j));
        v[idx] = sign;
        let (idx2, sign2) = coord(a(j), b(i));
        v[idx2] = &v[idx2] + &sign2;
        relations.push(v);
    }
    let wq = WedgeQuotient::new(n1, &relations);
    let d1_images = vec![vec![Rat::zero(); wq.dim2()]; n1];
    cap2_from_quotient(&format!("conf-e-h2:{n}"), names1, &wq, d1_images, Some(vec![1; n1]))
}

/// Degree-2 truncation of the Orlik-Solomon algebra of the braid arrangement
/// on n strands: generators e_ij, one triple relation per i < j < k, zero
/// differential, weights 1. Cap 2.
pub fn os_braid_truncation(n: usize) -> Cdga {
    assert!(n >= 2, "braid truncation needs n >= 2");
    let pairs_ij: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let names1: Vec<String> =
        pairs_ij.iter().map(|&(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let n1 = names1.len();
    let e = |i: usize, j: usize| pairs_ij.iter().position(|&t| t == (i, j)).unwrap();
    let all_pairs: Vec<(usize, usize)> = (0..n1).tuple_combinations().collect();
    let wedge_dim = all_pairs.len();
    let coord = |p: usize, q: usize| -> (usize, Rat) {
        if p < q {
            (all_pairs.iter().position(|&t| t == (p, q)).unwrap(), Rat::one())
        } else {
            (all_pairs.iter().position(|&t| t == (q, p)).unwrap(), -Rat::one())
        }
    };
    let mut relations: Vec<Vec<Rat>> = Vec::new();
    for (i, j, k) in (0..n).tuple_combinations() {
        let mut v = vec![Rat::zero(); wedge_dim];
        for (p, q, c) in [(e(i, j), e(i, k), 1i64), (e(i, j), e(j, k), -1), (e(i, k), e(j, k), 1)]
        {
            let (idx, sign) = coord(p, q);
            v[idx] = &v[idx] + &(&Rat::from_int(c) * &sign);
        }
        relations.push(v);
    }
    let wq = WedgeQuotient::new(n1, &relations);
    let d1_images = vec![vec![Rat::zero(); wq.dim2()]; n1];
    cap2_from_quotient(&format!("os-braid:{n}"), names1, &wq, d1_images, Some(vec![1; n1]))
}

/// An abstract simplicial complex on vertices `0..n_vertices`, given by its
/// facets. Faces are the subsets of facets; the empty set is always a face.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    pub n_vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn new(n_vertices: usize, mut facets: Vec<Vec<usize>>) -> Self {
        for f in &mut facets {
            f.sort_unstable();
            f.dedup();
            assert!(f.iter().all(|&v| v < n_vertices), "facet vertex out of range");
        }
        SimplicialComplex { n_vertices, facets }
    }

    pub fn is_face(&self, subset: &[usize]) -> bool {
        self.facets.iter().any(|f| subset.iter().all(|v| f.contains(v)))
    }

    /// All faces with k vertices, in lexicographic order.
    pub fn faces(&self, k: usize) -> Vec<Vec<usize>> {
        (0..self.n_vertices).combinations(k).filter(|s| self.is_face(s)).collect()
    }

    /// The subcomplex induced on a vertex subset.
    pub fn induced(&self, vertices: &[usize]) -> SimplicialComplex {
        let keep: Vec<usize> = vertices.to_vec();
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|v| keep.contains(v)).collect::<Vec<_>>())
            .collect();
        SimplicialComplex::new(self.n_vertices, facets)
    }
}

/// Reduced Betti numbers over Q of the induced subcomplex on `vertices`,
/// reported for homological degrees `-1..=max_dim`. Entry 0 of the result is
/// reduced degree -1 (nonzero only for the empty complex).
pub fn simplicial_reduced_betti(
    sc: &SimplicialComplex,
    vertices: &[usize],
    max_dim: usize,
) -> Vec<usize> {
    let sub = sc.induced(vertices);
    // Chains in dimension k are faces with k + 1 vertices; the augmentation
    // lives in dimension -1 with one generator.
    let mut faces_by_dim: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for k in 1..=(max_dim + 2) {
        faces_by_dim.push(sub.faces(k));
    }
    let boundary = |k: usize| -> QMat {
        // From dimension k (faces of size k + 1) to dimension k - 1.
        let from = &faces_by_dim[k + 1];
        let to = &faces_by_dim[k];
        let mut m = QMat::zeros(to.len().max(1), from.len().max(1));
        for (c, f) in from.iter().enumerate() {
            for (t, _) in f.iter().enumerate() {
                let sub_face: Vec<usize> =
                    f.iter().enumerate().filter(|(u, _)| *u != t).map(|(_, &v)| v).collect();
                if let Some(r) = to.iter().position(|g| *g == sub_face) {
                    let sign = if t % 2 == 0 { Rat::one() } else { -Rat::one() };
                    m.set(r, c, sign);
                }
            }
        }
        m
    };
    let mut betti = Vec::new();
    let mut ranks = Vec::new();
    for k in 0..=(max_dim + 1) {
        ranks.push(if faces_by_dim[k + 1].is_empty() { 0 } else { boundary(k).rank() });
    }
    for k in 0..=max_dim {
        // Reduced degree k - 1: cycles in dim k-1 minus boundaries from dim k.
        let dim_k1 = faces_by_dim[k].len();
        let rank_in = if k == 0 { 0 } else { ranks[k - 1] };
        let cycles = dim_k1 - rank_in;
        betti.push(cycles - ranks[k]);
    }
    betti
}

/// Exterior Stanley-Reisner algebra of a simplicial complex: one degree-1
/// generator per vertex, monomial basis indexed by faces, zero differential,
/// weights 1.
pub fn stanley_reisner_exterior(sc: &SimplicialComplex) -> Cdga {
    let n = sc.n_vertices;
    let cap = sc
        .facets
        .iter()
        .map(|f| f.len())
        .max()
        .unwrap_or(1)
        .max(1);
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::with_capacity(cap + 1);
    for k in 0..=cap {
        faces.push(sc.faces(k));
    }
    let basis: Vec<Vec<String>> = faces
        .iter()
        .enumerate()
        .map(|(k, list)| {
            if k == 0 {
                vec!["1".to_string()]
            } else {
                list.iter().map(|f| f.iter().map(|v| format!("v{}", v + 1)).join("∧")).collect()
            }
        })
        .collect();
    let mut products = BTreeMap::new();
    for i in 1..=cap {
        for j in i..=cap {
            if i + j > cap {
                continue;
            }
            let dim_out = faces[i + j].len();
            let table: ProductTable = faces[i]
                .iter()
                .map(|s| {
                    faces[j]
                        .iter()
                        .map(|t| {
                            let word: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
                            match super::constructors::wedge_sort(&word) {
                                Some((sign, sorted)) => {
                                    match faces[i + j].iter().position(|f| *f == sorted) {
                                        Some(k) => {
                                            let mut v = vec![Rat::zero(); dim_out];
                                            v[k] = Rat::from_int(sign as i64);
                                            v
                                        }
                                        None => vec![Rat::zero(); dim_out],
                                    }
                                }
                                None => vec![Rat::zero(); dim_out],
                            }
                        })
                        .collect()
                })
                .collect();
            products.insert((i, j), table);
        }
    }
    let d = (0..cap).map(|k| QMat::zeros(faces[k + 1].len(), faces[k].len())).collect();
    let weights =
        Some(faces.iter().map(|list| list.iter().map(|f| f.len() as u32).collect()).collect());
    Cdga::from_parts(&format!("sr({n})"), basis, products, d, weights)
        .expect("Stanley-Reisner algebra is well shaped")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{cohomology_dim, validate_cdga};

    #[test]
    fn bibby_two_points() {
        let a = bibby_model(2);
        assert!(validate_cdga(&a).is_empty());
        // Degree 1: a1, a2, b1, b2, e12.
        assert_eq!(a.dim(1), 5);
        // Wedge square is 10-dimensional; relations (a1-a2)e12, (b1-b2)e12
        // are independent, no triples.
        assert_eq!(a.dim(2), 8);
        // (a1 - a2) e12 = 0 in the quotient.
        let e12 = 4usize;
        let mut v = vec![Rat::zero(); 5];
        v[0] = Rat::one();
        v[1] = -Rat::one();
        let mut e = vec![Rat::zero(); 5];
        e[e12] = Rat::one();
        let prod = a.mul(1, &v, 1, &e);
        assert!(prod.iter().all(|c| c.is_zero()));
        // d(e12) is a nonzero degree-2 class.
        let de = a.d_matrix(1).col(e12);
        assert!(de.iter().any(|c| !c.is_zero()));
    }

    #[test]
    fn bibby_triple_relation_counts() {
        let a = bibby_model(3);
        assert!(validate_cdga(&a).is_empty());
        // 9 generators; wedge dim 36; relations: 6 edge ones plus 1 triple.
        assert_eq!(a.dim(1), 9);
        assert_eq!(a.dim(2), 36 - 7);
    }

    #[test]
    fn conf_elliptic_two_points() {
        let a = conf_elliptic_h2(2);
        assert!(validate_cdga(&a).is_empty());
        assert_eq!(a.dim(1), 4);
        // Wedge dim 6, relations a1b1, a2b2, a1b2 + a2b1: dim 3.
        assert_eq!(a.dim(2), 3);
        assert_eq!(cohomology_dim(&a, 1), 4);
    }

    #[test]
    fn os_braid_dimensions() {
        let a3 = os_braid_truncation(3);
        assert!(validate_cdga(&a3).is_empty());
        assert_eq!(a3.dim(1), 3);
        assert_eq!(a3.dim(2), 2);
        let a4 = os_braid_truncation(4);
        assert_eq!(a4.dim(1), 6);
        assert_eq!(a4.dim(2), 15 - 4);
    }

    #[test]
    fn stanley_reisner_of_two_disjoint_edges() {
        // Vertices 1..4, facets {1,2} and {3,4}.
        let sc = SimplicialComplex::new(4, vec![vec![0, 1], vec![2, 3]]);
        let a = stanley_reisner_exterior(&sc);
        assert!(validate_cdga(&a).is_empty());
        assert_eq!(a.dim(1), 4);
        assert_eq!(a.dim(2), 2);
        // v1 v3 is a non-face, so the product vanishes.
        let prod = a.mul_basis(1, 0, 1, 2);
        assert!(prod.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn reduced_betti_of_circle_and_points() {
        // Boundary of a triangle: a circle.
        let sc = SimplicialComplex::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let betti = simplicial_reduced_betti(&sc, &[0, 1, 2], 2);
        assert_eq!(betti, vec![0, 0, 1]);
        // Two points: reduced b_0 = 1.
        let two = SimplicialComplex::new(2, vec![vec![0], vec![1]]);
        let betti = simplicial_reduced_betti(&two, &[0, 1], 1);
        assert_eq!(betti, vec![0, 1]);
    }
}
