//! Constructors: Chevalley-Eilenberg complexes, exterior algebras, Hirsch
//! extensions, tensor products, coproducts, and quadratic-data models.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

use crate::lie::LieAlgebra;
use crate::polycore::{QMat, Rat};

use super::{cohomology_quadratic_data, Cdga, ProductTable, QuadraticData};

/// Sorts a wedge word of generator indices. Returns the permutation sign and
/// the sorted indices, or `None` when an index repeats.
pub(crate) fn wedge_sort(word: &[usize]) -> Option<(i32, Vec<usize>)> {
    let mut idx: Vec<usize> = word.to_vec();
    let mut sign = 1i32;
    // Insertion sort, counting transpositions; words here are short.
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in idx.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((sign, idx))
}

fn unit_vec(dim: usize, k: usize, c: Rat) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[k] = c;
    v
}

/// Chevalley-Eilenberg complex of `g`, built only in degrees `<= cap`.
///
/// Degree-k basis vectors are the k-subsets of the dual generators in
/// lexicographic order, and `d` is the derivation extending
/// `d xi_k = -sum c^k_{ij} xi_i xi_j` over the structure constants.
/// A cap above `dim g` records the vanishing of the higher degrees
/// explicitly, which computations quotienting by a top boundary need.
pub fn ce_complex_capped(g: &LieAlgebra, cap: usize) -> Cdga {
    let n = g.dim();
    let cap = cap.max(1);
    let gen_names = g.basis_names();

    let mut subsets: Vec<Vec<Vec<usize>>> = Vec::with_capacity(cap + 1);
    let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::with_capacity(cap + 1);
    for k in 0..=cap {
        let subs: Vec<Vec<usize>> = (0..n).combinations(k).collect();
        let map = subs.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        subsets.push(subs);
        index.push(map);
    }

    let basis: Vec<Vec<String>> = subsets
        .iter()
        .enumerate()
        .map(|(k, subs)| {
            if k == 0 {
                vec!["1".to_string()]
            } else {
                subs.iter().map(|s| s.iter().map(|&i| gen_names[i].clone()).join("∧")).collect()
            }
        })
        .collect();

    let mut products = BTreeMap::new();
    for i in 1..=cap {
        for j in i..=cap {
            if i + j > cap {
                continue;
            }
            let dim_out = subsets[i + j].len();
            let table: ProductTable = subsets[i]
                .iter()
                .map(|s| {
                    subsets[j]
                        .iter()
                        .map(|t| {
                            let word: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
                            match wedge_sort(&word) {
                                Some((sign, sorted)) => {
                                    let k = index[i + j][&sorted];
                                    unit_vec(dim_out, k, Rat::from_int(sign as i64))
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

    // d on generators, as sparse 2-forms: d xi_k = -sum_{i<j} c^k_{ij} xi_i xi_j.
    let mut dgen: Vec<Vec<((usize, usize), Rat)>> = vec![Vec::new(); n];
    for ((i, j), k, c) in g.structure_constants() {
        dgen[k].push(((i, j), -&c));
    }

    let mut d = Vec::with_capacity(cap);
    for deg in 0..cap {
        let mut m = QMat::zeros(subsets[deg + 1].len(), subsets[deg].len());
        for (col, s) in subsets[deg].iter().enumerate() {
            for (t, &gen) in s.iter().enumerate() {
                let koszul = if t % 2 == 0 { 1i32 } else { -1 };
                let rest: Vec<usize> =
                    s.iter().enumerate().filter(|(u, _)| *u != t).map(|(_, &v)| v).collect();
                for ((p, q), c) in &dgen[gen] {
                    let mut word = rest[..t].to_vec();
                    word.push(*p);
                    word.push(*q);
                    word.extend_from_slice(&rest[t..]);
                    if let Some((sign, sorted)) = wedge_sort(&word) {
                        let row = index[deg + 1][&sorted];
                        let add = &Rat::from_int((koszul * sign) as i64) * c;
                        let cur = m.get(row, col).clone();
                        m.set(row, col, &cur + &add);
                    }
                }
            }
        }
        d.push(m);
    }

    let weights = g.grading().map(|w| {
        subsets
            .iter()
            .map(|subs| subs.iter().map(|s| s.iter().map(|&i| w[i]).sum()).collect())
            .collect()
    });

    Cdga::from_parts(&format!("ce:{}", g.name()), basis, products, d, weights)
        .expect("Chevalley-Eilenberg construction is well shaped")
}

/// Full Chevalley-Eilenberg complex, cap = dim g.
pub fn ce_complex(g: &LieAlgebra) -> Cdga {
    ce_complex_capped(g, g.dim())
}

/// Exterior algebra on degree-1 generators with zero differential and all
/// weights 1.
pub fn exterior_cdga(names: &[String]) -> Cdga {
    let g = crate::lie::LieAlgebra::new("exterior", names.to_vec(), Vec::new(), Some(vec![1; names.len()]))
        .expect("abelian data is valid");
    let mut a = ce_complex(&g);
    a.set_name(&format!("exterior({})", names.len()));
    a
}

/// Tensor product with Koszul signs, truncated at the smaller cap.
pub fn tensor_product(a: &Cdga, b: &Cdga) -> Cdga {
    let cap = a.cap().min(b.cap());
    // Degree-k basis: triples (i, p, q) with p in A^i, q in B^{k-i}, ordered
    // by i, then p, then q.
    let mut layout: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(cap + 1);
    let mut index: Vec<HashMap<(usize, usize, usize), usize>> = Vec::with_capacity(cap + 1);
    for k in 0..=cap {
        let mut list = Vec::new();
        for i in 0..=k {
            let j = k - i;
            for p in 0..a.dim(i) {
                for q in 0..b.dim(j) {
                    list.push((i, p, q));
                }
            }
        }
        let map = list.iter().enumerate().map(|(pos, t)| (*t, pos)).collect();
        layout.push(list);
        index.push(map);
    }

    let name_of = |k: usize, i: usize, p: usize, q: usize| -> String {
        let j = k - i;
        if i == 0 {
            b.basis_names(j)[q].clone()
        } else if j == 0 {
            a.basis_names(i)[p].clone()
        } else {
            format!("{}⊗{}", a.basis_names(i)[p], b.basis_names(j)[q])
        }
    };
    let basis: Vec<Vec<String>> = layout
        .iter()
        .enumerate()
        .map(|(k, list)| list.iter().map(|&(i, p, q)| name_of(k, i, p, q)).collect())
        .collect();

    let mut products = BTreeMap::new();
    for k in 1..=cap {
        for l in k..=cap {
            if k + l > cap {
                continue;
            }
            let dim_out = layout[k + l].len();
            let mut table: ProductTable =
                vec![vec![vec![Rat::zero(); dim_out]; layout[l].len()]; layout[k].len()];
            for (pa, &(i, p, q)) in layout[k].iter().enumerate() {
                let j = k - i;
                for (pb, &(i2, p2, q2)) in layout[l].iter().enumerate() {
                    let j2 = l - i2;
                    let sign = if (j * i2) % 2 == 1 { -Rat::one() } else { Rat::one() };
                    let aa = a.mul_basis(i, p, i2, p2);
                    let bb = b.mul_basis(j, q, j2, q2);
                    let out = &mut table[pa][pb];
                    for (x, ca) in aa.iter().enumerate() {
                        if ca.is_zero() {
                            continue;
                        }
                        for (y, cb) in bb.iter().enumerate() {
                            if cb.is_zero() {
                                continue;
                            }
                            let pos = index[k + l][&(i + i2, x, y)];
                            out[pos] = &out[pos] + &(&(&sign * ca) * cb);
                        }
                    }
                }
            }
            products.insert((k, l), table);
        }
    }

    let mut d = Vec::with_capacity(cap);
    for k in 0..cap {
        let mut m = QMat::zeros(layout[k + 1].len(), layout[k].len());
        for (col, &(i, p, q)) in layout[k].iter().enumerate() {
            let j = k - i;
            let da = a.d_matrix(i).col(p);
            for (x, c) in da.iter().enumerate() {
                if !c.is_zero() {
                    let row = index[k + 1][&(i + 1, x, q)];
                    let cur = m.get(row, col).clone();
                    m.set(row, col, &cur + c);
                }
            }
            let db = b.d_matrix(j).col(q);
            let sign = if i % 2 == 1 { -Rat::one() } else { Rat::one() };
            for (y, c) in db.iter().enumerate() {
                if !c.is_zero() {
                    let row = index[k + 1][&(i, p, y)];
                    let cur = m.get(row, col).clone();
                    m.set(row, col, &cur + &(&sign * c));
                }
            }
        }
        d.push(m);
    }

    let weights = match (a.weights(), b.weights()) {
        (Some(wa), Some(wb)) => Some(
            layout
                .iter()
                .enumerate()
                .map(|(k, list)| list.iter().map(|&(i, p, q)| wa[i][p] + wb[k - i][q]).collect())
                .collect(),
        ),
        _ => None,
    };

    Cdga::from_parts(&format!("({})⊗({})", a.name(), b.name()), basis, products, d, weights)
        .expect("tensor product is well shaped")
}

/// Wedge-style coproduct: degreewise direct sum in positive degrees, with
/// products of mixed terms set to zero. Truncated at the smaller cap.
pub fn coproduct(a: &Cdga, b: &Cdga) -> Cdga {
    let cap = a.cap().min(b.cap());
    let basis: Vec<Vec<String>> = (0..=cap)
        .map(|k| {
            if k == 0 {
                vec!["1".to_string()]
            } else {
                a.basis_names(k)
                    .iter()
                    .cloned()
                    .chain(b.basis_names(k).iter().cloned())
                    .collect()
            }
        })
        .collect();
    let dim_a = |k: usize| if k == 0 { 0 } else { a.dim(k) };

    let mut products = BTreeMap::new();
    for i in 1..=cap {
        for j in i..=cap {
            if i + j > cap {
                continue;
            }
            let rows = a.dim(i) + b.dim(i);
            let cols = a.dim(j) + b.dim(j);
            let dim_out = a.dim(i + j) + b.dim(i + j);
            let mut table: ProductTable = vec![vec![vec![Rat::zero(); dim_out]; cols]; rows];
            for p in 0..a.dim(i) {
                for q in 0..a.dim(j) {
                    let v = a.mul_basis(i, p, j, q);
                    for (k, c) in v.into_iter().enumerate() {
                        table[p][q][k] = c;
                    }
                }
            }
            for p in 0..b.dim(i) {
                for q in 0..b.dim(j) {
                    let v = b.mul_basis(i, p, j, q);
                    for (k, c) in v.into_iter().enumerate() {
                        table[dim_a(i) + p][dim_a(j) + q][dim_a(i + j) + k] = c;
                    }
                }
            }
            products.insert((i, j), table);
        }
    }

    let mut d = Vec::with_capacity(cap);
    for k in 0..cap {
        let rows = a.dim(k + 1) + b.dim(k + 1);
        let cols = if k == 0 { 1 } else { a.dim(k) + b.dim(k) };
        let mut m = QMat::zeros(rows, cols);
        if k > 0 {
            let ma = a.d_matrix(k);
            for r in 0..ma.rows {
                for c in 0..ma.cols {
                    m.set(r, c, ma.get(r, c).clone());
                }
            }
            let mb = b.d_matrix(k);
            for r in 0..mb.rows {
                for c in 0..mb.cols {
                    m.set(a.dim(k + 1) + r, a.dim(k) + c, mb.get(r, c).clone());
                }
            }
        }
        d.push(m);
    }

    let weights = match (a.weights(), b.weights()) {
        (Some(wa), Some(wb)) => Some(
            (0..=cap)
                .map(|k| {
                    if k == 0 {
                        vec![0]
                    } else {
                        wa[k].iter().chain(wb[k].iter()).copied().collect()
                    }
                })
                .collect(),
        ),
        _ => None,
    };

    Cdga::from_parts(&format!("({})∨({})", a.name(), b.name()), basis, products, d, weights)
        .expect("coproduct is well shaped")
}

/// Degree-1 Hirsch extension `A ⊗ (t)` with `dt = e` for a class
/// representative `e` in `A^2`. The cap is preserved. The new generator gets
/// weight 1 when `e = 0`, otherwise the weight of `e` when homogeneous;
/// weights are dropped when `e` is inhomogeneous.
pub fn hirsch_extension(a: &Cdga, t_name: &str, e: &[Rat]) -> Cdga {
    let cap = a.cap();
    assert!(cap >= 2, "Hirsch extension needs cap >= 2 to hold dt");
    assert_eq!(e.len(), a.dim(2), "dt must be a degree-2 coordinate vector");

    // Degree k: A^k basis, then A^{k-1} wedge t.
    let basis: Vec<Vec<String>> = (0..=cap)
        .map(|k| {
            let mut names: Vec<String> = a.basis_names(k).to_vec();
            if k >= 1 {
                let lower = a.basis_names(k - 1);
                for nm in lower {
                    names.push(if k == 1 { t_name.to_string() } else { format!("{nm}∧{t_name}") });
                }
            }
            names
        })
        .collect();
    let dim_of = |k: usize| a.dim(k) + if k >= 1 { a.dim(k - 1) } else { 0 };

    let mut products = BTreeMap::new();
    for i in 1..=cap {
        for j in i..=cap {
            if i + j > cap {
                continue;
            }
            let dim_out = dim_of(i + j);
            let mut table: ProductTable =
                vec![vec![vec![Rat::zero(); dim_out]; dim_of(j)]; dim_of(i)];
            for p in 0..dim_of(i) {
                let (p_a, p_t) = if p < a.dim(i) { (p, false) } else { (p - a.dim(i), true) };
                for q in 0..dim_of(j) {
                    let (q_a, q_t) = if q < a.dim(j) { (q, false) } else { (q - a.dim(j), true) };
                    let out = &mut table[p][q];
                    match (p_t, q_t) {
                        (false, false) => {
                            let v = a.mul_basis(i, p_a, j, q_a);
                            for (k, c) in v.into_iter().enumerate() {
                                out[k] = c;
                            }
                        }
                        (false, true) => {
                            // u (v t) = (u v) t.
                            let v = a.mul_basis(i, p_a, j - 1, q_a);
                            for (k, c) in v.into_iter().enumerate() {
                                out[a.dim(i + j) + k] = c;
                            }
                        }
                        (true, false) => {
                            // (u t) v = (-1)^{|v|} (u v) t.
                            let v = a.mul_basis(i - 1, p_a, j, q_a);
                            let sign =
                                if j % 2 == 1 { -Rat::one() } else { Rat::one() };
                            for (k, c) in v.into_iter().enumerate() {
                                out[a.dim(i + j) + k] = &sign * &c;
                            }
                        }
                        (true, true) => {}
                    }
                }
            }
            products.insert((i, j), table);
        }
    }

    let mut d = Vec::with_capacity(cap);
    for k in 0..cap {
        let mut m = QMat::zeros(dim_of(k + 1), dim_of(k));
        let ma = a.d_matrix(k);
        for r in 0..ma.rows {
            for c in 0..ma.cols {
                m.set(r, c, ma.get(r, c).clone());
            }
        }
        if k >= 1 {
            // d(u t) = (du) t + (-1)^{|u|} u e with u in A^{k-1}.
            let mu = a.d_matrix(k - 1);
            for c in 0..a.dim(k - 1) {
                for r in 0..a.dim(k) {
                    m.set(a.dim(k + 1) + r, a.dim(k) + c, mu.get(r, c).clone());
                }
                let mut eu = vec![Rat::zero(); a.dim(k - 1)];
                eu[c] = Rat::one();
                let ue = a.mul(k - 1, &eu, 2, e);
                let sign = if (k - 1) % 2 == 1 { -Rat::one() } else { Rat::one() };
                for (r, v) in ue.iter().enumerate() {
                    if !v.is_zero() {
                        let cur = m.get(r, a.dim(k) + c).clone();
                        m.set(r, a.dim(k) + c, &cur + &(&sign * v));
                    }
                }
            }
        }
        d.push(m);
    }
    // d(t) itself is the k = 1 instance of the loop: u = 1 in A^0 gives
    // d(1 t) = 0 + 1 e = e.

    let weights = a.weights().and_then(|w| {
        let wt = if e.iter().all(|c| c.is_zero()) {
            1
        } else {
            let mut seen = None;
            for (i, c) in e.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match seen {
                    None => seen = Some(w[2][i]),
                    Some(prev) if prev != w[2][i] => return None,
                    _ => {}
                }
            }
            seen.unwrap_or(1)
        };
        Some(
            (0..=cap)
                .map(|k| {
                    let mut row: Vec<u32> = w[k].clone();
                    if k >= 1 {
                        row.extend(w[k - 1].iter().map(|v| v + wt));
                    }
                    row
                })
                .collect(),
        )
    });

    Cdga::from_parts(&format!("{}[{t_name}]", a.name()), basis, products, d, weights)
        .expect("Hirsch extension is well shaped")
}

/// Cap-2 model with `A^1 = V ⊕ U` and `A^2 = W`: `V` is closed, `d(u_k)` is
/// the k-th column of `du`, and `products` lists `((p, q), w)` for `p < q`
/// over the combined degree-1 index set; the opposite order is filled in by
/// sign. Weights, when given, are per degree-1 and degree-2 element.
#[allow(clippy::too_many_arguments)]
pub fn quadratic_cdga(
    name: &str,
    v_names: &[String],
    u_names: &[String],
    w_names: &[String],
    du: &[Vec<Rat>],
    products: &[((usize, usize), Vec<Rat>)],
    weights1: Option<Vec<u32>>,
    weights2: Option<Vec<u32>>,
) -> Cdga {
    let n1 = v_names.len() + u_names.len();
    let n2 = w_names.len();
    assert_eq!(du.len(), u_names.len(), "one differential column per u generator");
    let basis = vec![
        vec!["1".to_string()],
        v_names.iter().chain(u_names.iter()).cloned().collect(),
        w_names.to_vec(),
    ];
    let mut table: ProductTable = vec![vec![vec![Rat::zero(); n2]; n1]; n1];
    for ((p, q), v) in products {
        assert!(p < q && *q < n1, "products use pairs p < q of degree-1 indices");
        assert_eq!(v.len(), n2);
        table[*p][*q] = v.clone();
        table[*q][*p] = v.iter().map(|c| -c).collect();
    }
    let mut products_map = BTreeMap::new();
    products_map.insert((1, 1), table);
    let mut d1 = QMat::zeros(n2, n1);
    for (k, col) in du.iter().enumerate() {
        assert_eq!(col.len(), n2);
        for (r, c) in col.iter().enumerate() {
            d1.set(r, v_names.len() + k, c.clone());
        }
    }
    let d = vec![QMat::zeros(n1, 1), d1];
    let weights = match (weights1, weights2) {
        (Some(w1), Some(w2)) => Some(vec![vec![0], w1, w2]),
        _ => None,
    };
    Cdga::from_parts(name, basis, products_map, d, weights)
        .expect("quadratic model is well shaped")
}

/// The cap-2 cohomology model of `A`: zero differential on H^1 and H^2 with
/// the cup product of `A`, built from [`cohomology_quadratic_data`].
pub fn cohomology_cdga_cap2(a: &Cdga) -> Cdga {
    let q: QuadraticData = cohomology_quadratic_data(a);
    let n1 = q.h1.dim();
    let n2 = q.h2.dim();
    let mut table: ProductTable = vec![vec![vec![Rat::zero(); n2]; n1]; n1];
    for p in 0..n1 {
        for r in 0..n1 {
            table[p][r] = q.cup[p][r].clone();
        }
    }
    let mut products = BTreeMap::new();
    products.insert((1, 1), table);
    let d = vec![QMat::zeros(n1, 1), QMat::zeros(n2, n1)];
    let weights = match (&q.h1_weights, &q.h2_weights) {
        (Some(w1), Some(w2)) => Some(vec![vec![0], w1.clone(), w2.clone()]),
        _ => None,
    };
    Cdga::from_parts(
        &format!("H({})", a.name()),
        vec![vec!["1".to_string()], q.h1_names.clone(), q.h2_names.clone()],
        products,
        d,
        weights,
    )
    .expect("cohomology model is well shaped")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{cohomology_dim, validate_cdga};
    use crate::lie;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn ce_of_sol2_has_line_cohomology() {
        let a = ce_complex(&lie::sol2());
        assert!(validate_cdga(&a).is_empty());
        // d(x2) = -x1 x2, so only x1 survives in H^1 and H^2 dies.
        assert_eq!(cohomology_dim(&a, 1), 1);
        let h1 = crate::cdga::cohomology(&a, 1);
        assert!(h1.reps[0][0].is_one());
    }

    #[test]
    fn exterior_algebra_products_anticommute() {
        let a = exterior_cdga(&names(&["a", "b", "c"]));
        assert!(validate_cdga(&a).is_empty());
        let ab = a.mul_basis(1, 0, 1, 1);
        let ba = a.mul_basis(1, 1, 1, 0);
        assert_eq!(ab[0], -&ba[0]);
        assert_eq!(a.dim(2), 3);
        assert_eq!(a.dim(3), 1);
    }

    #[test]
    fn tensor_of_exteriors_is_exterior_sized() {
        let a = exterior_cdga(&names(&["a"]));
        let b = exterior_cdga(&names(&["b"]));
        let t = tensor_product(&a, &b);
        assert!(validate_cdga(&t).is_empty());
        assert_eq!(t.dim(0), 1);
        assert_eq!(t.dim(1), 2);
        // cap = min(1, 1) = 1, so the product a⊗b in degree 2 is cut off.
        assert_eq!(t.cap(), 1);
    }

    #[test]
    fn tensor_cap2_keeps_koszul_sign() {
        let a = ce_complex(&lie::abelian(2));
        let b = ce_complex(&lie::abelian(2));
        let t = tensor_product(&a, &b);
        assert!(validate_cdga(&t).is_empty());
        assert_eq!(t.cap(), 2);
        assert_eq!(t.dim(2), 1 + 4 + 1);
        // (1⊗y)(x⊗1) = -(x⊗y): odd times odd anticommutes across the tensor.
        let x_pos = 0usize;
        let y_pos = a.dim(1);
        let v = t.mul_basis(1, y_pos, 1, x_pos);
        let w = t.mul_basis(1, x_pos, 1, y_pos);
        for (cv, cw) in v.iter().zip(&w) {
            assert_eq!(*cv, -cw);
        }
    }

    #[test]
    fn coproduct_kills_mixed_products() {
        let a = exterior_cdga(&names(&["a1", "a2"]));
        let b = exterior_cdga(&names(&["b1", "b2"]));
        let c = coproduct(&a, &b);
        assert!(validate_cdga(&c).is_empty());
        assert_eq!(c.dim(1), 4);
        let mixed = c.mul_basis(1, 0, 1, 2);
        assert!(mixed.iter().all(|x| x.is_zero()));
        let within = c.mul_basis(1, 0, 1, 1);
        assert!(within.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn hirsch_extension_of_exterior_square() {
        // B = exterior(a, b) capped at 2; extend by t with dt = a b.
        let a = exterior_cdga(&names(&["a", "b"]));
        let mut e = vec![Rat::zero(); a.dim(2)];
        e[0] = Rat::one();
        let h = hirsch_extension(&a, "t", &e);
        assert!(validate_cdga(&h).is_empty());
        assert_eq!(h.dim(1), 3);
        // d(t) = a b.
        let dt = h.d_matrix(1).col(2);
        assert!(dt[0].is_one());
        // Weight of t = weight of a b = 2.
        assert_eq!(h.weights().unwrap()[1][2], 2);
    }

    #[test]
    fn quadratic_free_model_has_no_relations() {
        let a = quadratic_cdga(
            "free2",
            &names(&["x1", "x2"]),
            &[],
            &[],
            &[],
            &[],
            Some(vec![1, 1]),
            Some(vec![]),
        );
        assert!(validate_cdga(&a).is_empty());
        assert_eq!(a.dim(2), 0);
    }

    #[test]
    fn cohomology_model_of_heisenberg_matches_golden_ring() {
        let a = ce_complex(&lie::heisenberg(1));
        let h = cohomology_cdga_cap2(&a);
        assert!(validate_cdga(&h).is_empty());
        assert_eq!(h.dim(1), 2);
        assert_eq!(h.dim(2), 2);
        // e1 f1 = 0 in cohomology.
        let cup = h.mul_basis(1, 0, 1, 1);
        assert!(cup.iter().all(|c| c.is_zero()));
    }
}
