//! Serialization of algebras as JSON.
//!
//! The schema keeps products sparse: only pairs `i <= j` with a nonzero
//! value appear, as `{"i", "j", "a", "b", "value": [[coeff, index], ...]}`
//! with rational coefficients rendered as strings. Differentials are dense
//! row-major string matrices. Output field order is fixed by the structs,
//! and entries are emitted in sorted order, so serialization is
//! deterministic.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::polycore::{QMat, Rat};

use super::{Cdga, ProductTable};

#[derive(Serialize, Deserialize)]
struct ProductEntry {
    i: usize,
    j: usize,
    a: usize,
    b: usize,
    value: Vec<(String, usize)>,
}

#[derive(Serialize, Deserialize)]
struct CdgaJson {
    name: String,
    cap: usize,
    basis: Vec<Vec<String>>,
    products: Vec<ProductEntry>,
    d: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<Vec<u32>>>,
}

pub fn cdga_to_json(a: &Cdga) -> String {
    let mut products = Vec::new();
    for ((i, j), table) in a.products() {
        for (p, row) in table.iter().enumerate() {
            for (q, v) in row.iter().enumerate() {
                let value: Vec<(String, usize)> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (c.to_string(), k))
                    .collect();
                if !value.is_empty() {
                    products.push(ProductEntry { i: *i, j: *j, a: p, b: q, value });
                }
            }
        }
    }
    let d: Vec<Vec<Vec<String>>> = (0..a.cap())
        .map(|k| {
            let m = a.d_matrix(k);
            (0..m.rows)
                .map(|r| (0..m.cols).map(|c| m.get(r, c).to_string()).collect())
                .collect()
        })
        .collect();
    let doc = CdgaJson {
        name: a.name().to_string(),
        cap: a.cap(),
        basis: (0..=a.cap()).map(|k| a.basis_names(k).to_vec()).collect(),
        products,
        d,
        weights: a.weights().cloned(),
    };
    serde_json::to_string_pretty(&doc).expect("algebra serializes")
}

pub fn cdga_from_json(text: &str) -> Result<Cdga, String> {
    let doc: CdgaJson = serde_json::from_str(text).map_err(|e| format!("bad JSON: {e}"))?;
    if doc.basis.len() != doc.cap + 1 {
        return Err(format!("basis covers {} degrees, cap is {}", doc.basis.len(), doc.cap));
    }
    let dims: Vec<usize> = doc.basis.iter().map(|b| b.len()).collect();
    let mut tables: BTreeMap<(usize, usize), ProductTable> = BTreeMap::new();
    for e in &doc.products {
        if e.i < 1 || e.i > e.j || e.i + e.j > doc.cap {
            return Err(format!("product entry has invalid degrees ({}, {})", e.i, e.j));
        }
        if e.a >= dims[e.i] || e.b >= dims[e.j] {
            return Err(format!("product entry index out of range in degrees ({}, {})", e.i, e.j));
        }
        let table = tables.entry((e.i, e.j)).or_insert_with(|| {
            vec![vec![vec![Rat::zero(); dims[e.i + e.j]]; dims[e.j]]; dims[e.i]]
        });
        for (coeff, k) in &e.value {
            if *k >= dims[e.i + e.j] {
                return Err(format!("product value index {k} out of range"));
            }
            let c: Rat = coeff.parse().map_err(|_| format!("bad rational '{coeff}'"))?;
            table[e.a][e.b][*k] = c;
        }
    }
    if doc.d.len() != doc.cap {
        return Err(format!("expected {} differentials, got {}", doc.cap, doc.d.len()));
    }
    let mut d = Vec::new();
    for (k, rows) in doc.d.iter().enumerate() {
        let mut m = QMat::zeros(dims[k + 1], dims[k]);
        if rows.len() != dims[k + 1] {
            return Err(format!("d^{k} has {} rows, expected {}", rows.len(), dims[k + 1]));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dims[k] {
                return Err(format!("d^{k} row {r} has length {}", row.len()));
            }
            for (c, s) in row.iter().enumerate() {
                let v: Rat = s.parse().map_err(|_| format!("bad rational '{s}'"))?;
                m.set(r, c, v);
            }
        }
        d.push(m);
    }
    Cdga::from_parts(&doc.name, doc.basis, tables, d, doc.weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{ce_complex, validate_cdga};
    use crate::lie;

    #[test]
    fn round_trip_preserves_algebra() {
        let a = ce_complex(&lie::heisenberg(1));
        let text = cdga_to_json(&a);
        let b = cdga_from_json(&text).unwrap();
        assert_eq!(a, b);
        assert!(validate_cdga(&b).is_empty());
    }

    #[test]
    fn serialization_is_deterministic() {
        let a = ce_complex(&lie::de_graaf("L5,5").unwrap());
        assert_eq!(cdga_to_json(&a), cdga_to_json(&a));
    }

    #[test]
    fn bad_shapes_are_rejected() {
        let a = ce_complex(&lie::sol2());
        let text = cdga_to_json(&a);
        let mangled = text.replace("\"cap\": 2", "\"cap\": 3");
        assert!(cdga_from_json(&mangled).is_err());
    }
}
