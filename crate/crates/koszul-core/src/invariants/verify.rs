//! Named cross-check suites: structural identities between Koszul modules of
//! an algebra and of its cohomology, and the rank-one summary table for the
//! nilpotent catalog. Each check reports pass/fail per model with degreewise
//! evidence.

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cdga::{
    cohomology, cohomology_cdga_cap2, ce_complex, ce_complex_capped, coproduct, hirsch_extension,
    tensor_product, Cdga,
};
use crate::groebner::{
    ann_cokernel, exterior_power, filtered_dims_truncated, graded_dims_truncated,
    hilbert_series, ideal_gb, ideal_intersection, ideals_equal, is_unit_ideal,
    radical_membership_witness, FpModule, HilbertSeries,
};
use crate::invariants::catalog_model;
use crate::koszul::{
    b1_presentation_of, cochain_koszul_module_of, koszul_homology_of, KoszulComplex,
};
use crate::lie::{abelian, builtin_lie, heisenberg, is_nilpotent, sol2};
use crate::polycore::{MonomialOrder, Poly, PolyRing};

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub model: String,
    pub check: String,
    pub status: String,
    pub evidence: Value,
}

impl CheckReport {
    pub fn pass(model: &str, check: &str, evidence: Value) -> Self {
        CheckReport { model: model.into(), check: check.into(), status: "pass".into(), evidence }
    }

    pub fn fail(model: &str, check: &str, evidence: Value) -> Self {
        CheckReport { model: model.into(), check: check.into(), status: "fail".into(), evidence }
    }

    pub fn is_pass(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, Error)]
#[error("unknown check {name:?}; known checks: {known}")]
pub struct UnknownCheck {
    pub name: String,
    pub known: String,
}

pub const CHECK_NAMES: [&str; 10] = [
    "kunneth",
    "coproduct_exterior",
    "hirsch_deg1",
    "pd_duality",
    "euler_identity",
    "hilb_inequality",
    "crowell",
    "truncation_stability",
    "nilpotent_res_trivial",
    "bpres_oracle",
];

pub fn run_check(name: &str) -> Result<Vec<CheckReport>, UnknownCheck> {
    match name {
        "kunneth" => Ok(check_kunneth()),
        "coproduct_exterior" => Ok(check_coproduct_exterior()),
        "hirsch_deg1" => Ok(check_hirsch_deg1()),
        "pd_duality" => Ok(check_pd_duality()),
        "euler_identity" => Ok(check_euler_identity()),
        "hilb_inequality" => Ok(check_hilb_inequality()),
        "crowell" => Ok(check_crowell()),
        "truncation_stability" => Ok(check_truncation_stability()),
        "nilpotent_res_trivial" => Ok(check_nilpotent_res_trivial()),
        "bpres_oracle" => Ok(check_bpres_oracle()),
        _ => Err(UnknownCheck { name: name.to_string(), known: CHECK_NAMES.join(", ") }),
    }
}

pub fn run_identities() -> Vec<CheckReport> {
    CHECK_NAMES.iter().flat_map(|n| run_check(n).expect("registered name")).collect()
}

fn ord() -> MonomialOrder {
    MonomialOrder::GrevLex
}

fn run(model: &str, check: &str, f: impl FnOnce() -> Result<(bool, Value), String>) -> CheckReport {
    match f() {
        Ok((true, ev)) => CheckReport::pass(model, check, ev),
        Ok((false, ev)) => CheckReport::fail(model, check, ev),
        Err(e) => CheckReport::fail(model, check, json!({ "error": e })),
    }
}

fn grdims(a: &Cdga, i: usize, d: usize) -> Result<Vec<usize>, String> {
    let kc = KoszulComplex::new(a, ord()).map_err(|e| e.to_string())?;
    let fp = koszul_homology_of(&kc, i).map_err(|e| e.to_string())?;
    Ok(graded_dims_truncated(kc.ring(), &fp, d))
}

fn top_degree(a: &Cdga) -> usize {
    (0..=a.cap()).rev().find(|&k| a.dim(k) > 0).unwrap_or(0)
}

/// gr dims of the tensor factor convolved into `acc`.
fn convolve_into(acc: &mut [usize], u: &[usize], v: &[usize]) {
    for (i, &a) in u.iter().enumerate() {
        for (j, &b) in v.iter().enumerate() {
            if i + j < acc.len() {
                acc[i + j] += a * b;
            }
        }
    }
}

/// Mutual radical membership of generators; returns the largest witness power.
fn same_zero_set(ring: &PolyRing, a: &[Poly], b: &[Poly], bound: u32) -> (bool, Option<u32>) {
    let gb_a = ideal_gb(ring, a);
    let gb_b = ideal_gb(ring, b);
    let mut max_pow = 0;
    for g in a {
        match radical_membership_witness(ring, g, &gb_b, bound) {
            Some(w) => max_pow = max_pow.max(w),
            None => return (false, None),
        }
    }
    for g in b {
        match radical_membership_witness(ring, g, &gb_a, bound) {
            Some(w) => max_pow = max_pow.max(w),
            None => return (false, None),
        }
    }
    (true, Some(max_pow))
}

fn check_kunneth() -> Vec<CheckReport> {
    const D: usize = 8;
    let cases = vec![
        ("ce:h(1) (x) exterior:1", ce_complex_capped(&heisenberg(1), 4),
         ce_complex_capped(&abelian(1), 4), 3usize),
        ("ce:sol2 (x) exterior:2", ce_complex_capped(&sol2(), 3),
         ce_complex_capped(&abelian(2), 3), 2),
    ];
    cases
        .into_iter()
        .map(|(label, a, b, qmax)| {
            run(label, "kunneth", || {
                let t = tensor_product(&a, &b);
                let mut rows = Vec::new();
                let mut ok = true;
                for q in 0..=qmax {
                    let lhs = grdims(&t, q, D)?;
                    let mut rhs = vec![0usize; D + 1];
                    for i in 0..=q {
                        let da = grdims(&a, i, D)?;
                        let db = grdims(&b, q - i, D)?;
                        convolve_into(&mut rhs, &da, &db);
                    }
                    ok &= lhs == rhs;
                    rows.push(json!({ "q": q, "tensor": lhs, "convolution": rhs }));
                }
                Ok((ok, json!({ "degreewise": rows, "bound": D })))
            })
        })
        .collect()
}

fn check_coproduct_exterior() -> Vec<CheckReport> {
    vec![run("exterior:1 v exterior:1", "coproduct_exterior", || {
        let e1 = ce_complex_capped(&abelian(1), 2);
        let c = coproduct(&e1, &e1);
        let kc = KoszulComplex::new(&c, ord()).map_err(|e| e.to_string())?;
        let fp = koszul_homology_of(&kc, 1).map_err(|e| e.to_string())?;
        let ok = fp.n_gens == 1 && fp.relations.is_empty() && fp.shifts.as_deref() == Some(&[1]);
        Ok((
            ok,
            json!({
                "n_gens": fp.n_gens,
                "n_relations": fp.relations.len(),
                "shifts": fp.shifts,
                "expected": "free of rank 1, generator in degree 1",
            }),
        ))
    })]
}

fn check_hirsch_deg1() -> Vec<CheckReport> {
    let models = vec![
        ("ce:h(1)", ce_complex(&heisenberg(1))),
        ("ce:L5,8", ce_complex(&builtin_lie("L5,8").expect("catalog name"))),
    ];
    models
        .into_iter()
        .map(|(label, a)| {
            run(label, "hirsch_deg1", || {
                let h2 = cohomology(&a, 2);
                if h2.reps.is_empty() {
                    return Err("model has no degree-2 cohomology class to attach".into());
                }
                let ext = hirsch_extension(&a, "t", &h2.reps[0]);
                let kc_a = KoszulComplex::new(&a, ord()).map_err(|e| e.to_string())?;
                let kc_e = KoszulComplex::new(&ext, ord()).map_err(|e| e.to_string())?;
                if kc_a.ring().vars() != kc_e.ring().vars() {
                    return Ok((
                        false,
                        json!({
                            "reason": "rings differ after extension",
                            "base_vars": kc_a.ring().vars(),
                            "extended_vars": kc_e.ring().vars(),
                        }),
                    ));
                }
                let ring = kc_a.ring();
                let fa = koszul_homology_of(&kc_a, 1).map_err(|e| e.to_string())?;
                let fe = koszul_homology_of(&kc_e, 1).map_err(|e| e.to_string())?;
                let mut ok = true;
                let mut rows = Vec::new();
                for s in 1..=2usize {
                    let ann_a = ann_cokernel(ring, &exterior_power(ring, &fa, s));
                    let ann_e = ann_cokernel(ring, &exterior_power(ring, &fe, s));
                    let (eq, power) = same_zero_set(ring, &ann_a, &ann_e, 8);
                    ok &= eq;
                    rows.push(json!({
                        "s": s,
                        "supports_equal": eq,
                        "radical_power": power,
                        "ann_base": ann_a.iter().map(|p| ring.poly_to_string(p)).collect::<Vec<_>>(),
                        "ann_extended": ann_e.iter().map(|p| ring.poly_to_string(p)).collect::<Vec<_>>(),
                    }));
                }
                Ok((ok, json!({ "exterior_powers": rows })))
            })
        })
        .collect()
}

fn check_pd_duality() -> Vec<CheckReport> {
    const D: usize = 6;
    let models = vec![
        ("ce:h(1)", ce_complex_capped(&heisenberg(1), 4), 3usize),
        ("exterior:3", ce_complex_capped(&abelian(3), 4), 3),
    ];
    models
        .into_iter()
        .map(|(label, a, m)| {
            run(label, "pd_duality", || {
                let kc = KoszulComplex::new(&a, ord()).map_err(|e| e.to_string())?;
                let mut ok = true;
                let mut rows = Vec::new();
                for i in 0..=m {
                    let chain = koszul_homology_of(&kc, i).map_err(|e| e.to_string())?;
                    let co = cochain_koszul_module_of(&kc, m - i).map_err(|e| e.to_string())?;
                    let lhs = graded_dims_truncated(kc.ring(), &chain, D);
                    let rhs = graded_dims_truncated(kc.ring(), &co, D);
                    ok &= lhs == rhs;
                    rows.push(json!({ "i": i, "chain_gr": lhs, "cochain_dual_gr": rhs }));
                }
                Ok((ok, json!({ "pd_degree": m, "degreewise": rows })))
            })
        })
        .collect()
}

fn check_euler_identity() -> Vec<CheckReport> {
    const D: usize = 8;
    let models = vec![
        ("ce:sol2", ce_complex_capped(&sol2(), 3), ce_complex_capped(&abelian(1), 3)),
        ("exterior:2", ce_complex_capped(&abelian(2), 3), ce_complex_capped(&abelian(2), 3)),
    ];
    models
        .into_iter()
        .map(|(label, a, h)| {
            run(label, "euler_identity", || {
                let alt = |c: &Cdga| -> Result<Vec<i64>, String> {
                    let mut sum = vec![0i64; D + 1];
                    for i in 0..=top_degree(c) {
                        let g = grdims(c, i, D)?;
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        for (k, v) in g.iter().enumerate() {
                            sum[k] += sign * *v as i64;
                        }
                    }
                    Ok(sum)
                };
                let lhs = alt(&a)?;
                let rhs = alt(&h)?;
                Ok((lhs == rhs, json!({ "algebra": lhs, "cohomology": rhs, "bound": D })))
            })
        })
        .collect()
}

fn check_hilb_inequality() -> Vec<CheckReport> {
    const D: usize = 8;
    let models = vec![
        ("ce:L3,2", ce_complex(&builtin_lie("L3,2").expect("catalog name"))),
        ("ce:L5,9", ce_complex(&builtin_lie("L5,9").expect("catalog name"))),
        ("bibby:2", catalog_model("bibby:2").expect("catalog key")),
    ];
    models
        .into_iter()
        .map(|(label, a)| {
            run(label, "hilb_inequality", || {
                let lhs = grdims(&a, 1, D)?;
                let h = cohomology_cdga_cap2(&a);
                let rhs = grdims(&h, 1, D)?;
                let ok = lhs.iter().zip(&rhs).all(|(l, r)| l <= r);
                let strict: Vec<usize> =
                    (0..=D).filter(|&k| lhs[k] < rhs[k]).collect();
                Ok((
                    ok,
                    json!({ "algebra_gr": lhs, "cohomology_gr": rhs, "strict_degrees": strict }),
                ))
            })
        })
        .collect()
}

/// Coefficients of (1 - (1-t)^m)/t, the series of the irrelevant ideal with
/// its generators placed in degree 0.
fn irrelevant_numer(m: usize) -> Vec<i64> {
    let mut c = Vec::with_capacity(m);
    let mut binom: i64 = m as i64;
    for j in 0..m {
        c.push(if j % 2 == 0 { binom } else { -binom });
        binom = binom * (m - j - 1) as i64 / (j + 2) as i64;
    }
    c
}

fn check_crowell() -> Vec<CheckReport> {
    let models = vec![
        ("os-braid:3", catalog_model("os-braid:3").expect("catalog key")),
        ("conf-e-h2:2", catalog_model("conf-e-h2:2").expect("catalog key")),
        ("exterior:3", ce_complex_capped(&abelian(3), 3)),
    ];
    models
        .into_iter()
        .map(|(label, a)| {
            run(label, "crowell", || {
                let kc = KoszulComplex::new(&a, ord()).map_err(|e| e.to_string())?;
                let ring = kc.ring();
                let d2 = kc.chain_matrix(2).map_err(|e| e.to_string())?;
                let n1 = a.dim(1);
                let coker = FpModule {
                    n_gens: n1,
                    gen_labels: (0..n1).map(|j| format!("e{}", j + 1)).collect(),
                    relations: d2,
                    shifts: Some(vec![0; n1]),
                };
                let lhs = hilbert_series(ring, &coker).map_err(|e| e.to_string())?;
                let b1 = koszul_homology_of(&kc, 1).map_err(|e| e.to_string())?;
                let mid = hilbert_series(ring, &b1).map_err(|e| e.to_string())?;
                let m = ring.n_vars();
                let maximal = HilbertSeries::from_ints(irrelevant_numer(m), m);
                let rhs = mid.add(&maximal);
                let lt = lhs.taylor(16);
                let rt = rhs.taylor(16);
                let ok = lt == rt;
                let as_i: Vec<String> = lt.iter().map(|b| b.to_string()).collect();
                let bs_i: Vec<String> = rt.iter().map(|b| b.to_string()).collect();
                Ok((ok, json!({ "alexander": as_i, "b1_plus_irrelevant": bs_i })))
            })
        })
        .collect()
}

fn check_truncation_stability() -> Vec<CheckReport> {
    const D: usize = 8;
    let models = vec![
        ("ce:L5,7", ce_complex(&builtin_lie("L5,7").expect("catalog name"))),
        ("ce:h(2)", ce_complex(&heisenberg(2))),
        ("bibby:2", catalog_model("bibby:2").expect("catalog key")),
    ];
    models
        .into_iter()
        .map(|(label, a)| {
            run(label, "truncation_stability", || {
                let t = a.truncate(1);
                let kc_a = KoszulComplex::new(&a, ord()).map_err(|e| e.to_string())?;
                let kc_t = KoszulComplex::new(&t, ord()).map_err(|e| e.to_string())?;
                let fa = koszul_homology_of(&kc_a, 1).map_err(|e| e.to_string())?;
                let ft = koszul_homology_of(&kc_t, 1).map_err(|e| e.to_string())?;
                let ring = kc_a.ring();
                let ann_a = ann_cokernel(ring, &fa);
                let ann_t = ann_cokernel(kc_t.ring(), &ft);
                let ann_ok = kc_a.ring().vars() == kc_t.ring().vars()
                    && ideals_equal(ring, &ann_a, &ann_t);
                let gr_a = graded_dims_truncated(ring, &fa, D);
                let gr_t = graded_dims_truncated(kc_t.ring(), &ft, D);
                let ok = ann_ok && gr_a == gr_t;
                Ok((
                    ok,
                    json!({
                        "ann_equal": ann_ok,
                        "full_gr": gr_a,
                        "truncated_gr": gr_t,
                    }),
                ))
            })
        })
        .collect()
}

fn check_nilpotent_res_trivial() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for name in crate::lie::catalog_names() {
        let g = builtin_lie(name).expect("catalog name");
        if !is_nilpotent(&g) {
            continue;
        }
        let label = format!("ce:{name}");
        out.push(run(&label, "nilpotent_res_trivial", || {
            let a = ce_complex_capped(&g, g.dim().max(3));
            let kc = KoszulComplex::new(&a, ord()).map_err(|e| e.to_string())?;
            let ring = kc.ring();
            let mut ok = true;
            let mut rows = Vec::new();
            for i in 1..=2usize {
                let fp = koszul_homology_of(&kc, i).map_err(|e| e.to_string())?;
                if fp.n_gens == 0 {
                    rows.push(json!({ "i": i, "module": "zero", "power": 0 }));
                    continue;
                }
                let ann = ann_cokernel(ring, &fp);
                let gb = ideal_gb(ring, &ann);
                if is_unit_ideal(ring, &gb) {
                    rows.push(json!({ "i": i, "module": "zero", "power": 0 }));
                    continue;
                }
                let mut total: u32 = 1;
                let mut witnesses = Vec::new();
                let mut found = true;
                for j in 0..ring.n_vars() {
                    match radical_membership_witness(ring, &ring.var(j), &gb, 8) {
                        Some(w) => {
                            witnesses.push(w);
                            total += w - 1;
                        }
                        None => {
                            found = false;
                            break;
                        }
                    }
                }
                let within = found && total <= 8;
                ok &= within;
                rows.push(json!({
                    "i": i,
                    "variable_powers": witnesses,
                    "power": if found { Value::from(total) } else { Value::Null },
                    "within_bound": within,
                }));
            }
            Ok((ok, json!({ "degrees": rows, "bound": 8 })))
        }));
    }
    out
}

fn check_bpres_oracle() -> Vec<CheckReport> {
    const D: usize = 6;
    let mut keys: Vec<String> =
        crate::lie::catalog_names().iter().map(|n| format!("ce:{n}")).collect();
    keys.extend(["bibby:2", "bibby:3", "os-braid:3", "os-braid:4", "conf-e-h2:2"]
        .iter()
        .map(|s| s.to_string()));
    keys.into_iter()
        .map(|key| {
            let a = catalog_model(&key).expect("catalog key");
            run(&key, "bpres_oracle", || {
                let kc = KoszulComplex::new(&a, ord()).map_err(|e| e.to_string())?;
                let ring = kc.ring();
                let presented = b1_presentation_of(&kc).map_err(|e| e.to_string())?;
                let direct = koszul_homology_of(&kc, 1).map_err(|e| e.to_string())?;
                let ann_p = ann_cokernel(ring, &presented);
                let ann_d = ann_cokernel(ring, &direct);
                let ann_ok = ideals_equal(ring, &ann_p, &ann_d);
                let gr_p = graded_dims_truncated(ring, &presented, D);
                let gr_d = graded_dims_truncated(ring, &direct, D);
                let ok = ann_ok && gr_p == gr_d;
                Ok((
                    ok,
                    json!({ "ann_equal": ann_ok, "presentation_gr": gr_p, "direct_gr": gr_d }),
                ))
            })
        })
        .collect()
}

enum ExpectedAnn {
    Irrelevant,
    IrrelevantSquared,
    Zero,
    Gens(&'static [&'static str]),
    Meet(&'static [&'static str], &'static [&'static str]),
}

struct TableRow {
    lie: &'static str,
    ce_ann: ExpectedAnn,
    ce_gr: &'static [usize],
    h_ann: ExpectedAnn,
    h_numer: &'static [i64],
    h_denom: usize,
}

fn table_rows() -> Vec<TableRow> {
    use ExpectedAnn::*;
    vec![
        TableRow { lie: "L3,2", ce_ann: Irrelevant, ce_gr: &[1], h_ann: Zero,
                   h_numer: &[0, 1], h_denom: 2 },
        TableRow { lie: "L4,2", ce_ann: Irrelevant, ce_gr: &[1], h_ann: Gens(&["x4"]),
                   h_numer: &[0, 1], h_denom: 2 },
        TableRow { lie: "L4,3", ce_ann: Gens(&["x2", "x1^2"]), ce_gr: &[1, 1], h_ann: Zero,
                   h_numer: &[0, 1], h_denom: 2 },
        TableRow { lie: "L5,4", ce_ann: Irrelevant, ce_gr: &[1],
                   h_ann: Meet(&["x1", "x2"], &["x3", "x4"]), h_numer: &[0, 2], h_denom: 2 },
        TableRow { lie: "L5,5", ce_ann: Gens(&["x2", "x4", "x1^2"]), ce_gr: &[1, 1],
                   h_ann: Gens(&["x4"]), h_numer: &[0, 1], h_denom: 2 },
        TableRow { lie: "L5,6", ce_ann: Gens(&["x2^2", "x1*x2", "x1^2 - x2"]), ce_gr: &[1, 2],
                   h_ann: Zero, h_numer: &[0, 1], h_denom: 2 },
        TableRow { lie: "L5,7", ce_ann: Gens(&["x2", "x1^3"]), ce_gr: &[1, 1, 1], h_ann: Zero,
                   h_numer: &[0, 1], h_denom: 2 },
        TableRow { lie: "L5,8", ce_ann: Irrelevant, ce_gr: &[2], h_ann: Zero,
                   h_numer: &[0, 2, -1], h_denom: 3 },
        TableRow { lie: "L5,9", ce_ann: IrrelevantSquared, ce_gr: &[1, 2], h_ann: Zero,
                   h_numer: &[0, 1], h_denom: 2 },
    ]
}

fn expand_ann(ring: &PolyRing, e: &ExpectedAnn) -> Result<Vec<Poly>, String> {
    let parse_all = |list: &[&str]| -> Result<Vec<Poly>, String> {
        list.iter().map(|s| ring.parse(s).map_err(|e| format!("{s}: {e}"))).collect()
    };
    match e {
        ExpectedAnn::Irrelevant => Ok((0..ring.n_vars()).map(|j| ring.var(j)).collect()),
        ExpectedAnn::IrrelevantSquared => {
            let mut gens = Vec::new();
            for i in 0..ring.n_vars() {
                for j in i..ring.n_vars() {
                    gens.push(ring.var(i).mul(&ring.var(j), ring));
                }
            }
            Ok(gens)
        }
        ExpectedAnn::Zero => Ok(Vec::new()),
        ExpectedAnn::Gens(list) => parse_all(list),
        ExpectedAnn::Meet(a, b) => {
            Ok(ideal_intersection(ring, &parse_all(a)?, &parse_all(b)?))
        }
    }
}

/// The rank-one table: for each nilpotent algebra in the catalog of dimension
/// at most 5 with non-cyclic entries, the annihilator and gr dimensions of
/// the first Koszul module of the CE model, and the annihilator and Hilbert
/// series over the cohomology model.
pub fn table_suite() -> Vec<CheckReport> {
    table_rows()
        .into_iter()
        .map(|row| {
            let model = format!("ce:{}", row.lie);
            run(&model, "table", || {
                let g = builtin_lie(row.lie).expect("catalog name");
                let a = ce_complex(&g);
                let kc = KoszulComplex::new(&a, ord()).map_err(|e| e.to_string())?;
                let ring = kc.ring();
                let fp = koszul_homology_of(&kc, 1).map_err(|e| e.to_string())?;
                let ann = ann_cokernel(ring, &fp);
                let expected_ann = expand_ann(ring, &row.ce_ann)?;
                let ce_ann_ok = ideals_equal(ring, &ann, &expected_ann);
                // Chain-degree filtration dims; the sole non-homogeneous row
                // (L5,6) separates these from the m-adic graded dims.
                let (gr, stable) = filtered_dims_truncated(ring, &fp, row.ce_gr.len() + 2);
                let mut want = row.ce_gr.to_vec();
                want.resize(gr.len(), 0);
                let ce_gr_ok = stable && gr == want;

                let h = cohomology_cdga_cap2(&a);
                let kch = KoszulComplex::new(&h, ord()).map_err(|e| e.to_string())?;
                let ring_h = kch.ring();
                let fph = koszul_homology_of(&kch, 1).map_err(|e| e.to_string())?;
                let ann_h = ann_cokernel(ring_h, &fph);
                let expected_h = expand_ann(ring_h, &row.h_ann)?;
                let h_ann_ok = ideals_equal(ring_h, &ann_h, &expected_h);
                let series = hilbert_series(ring_h, &fph).map_err(|e| e.to_string())?;
                let expected_series = HilbertSeries::from_ints(row.h_numer.to_vec(), row.h_denom);
                let h_series_ok = series.taylor(12) == expected_series.taylor(12);

                let ok = ce_ann_ok && ce_gr_ok && h_ann_ok && h_series_ok;
                Ok((
                    ok,
                    json!({
                        "ce_ann_matches": ce_ann_ok,
                        "ce_ann": ann.iter().map(|p| ring.poly_to_string(p)).collect::<Vec<_>>(),
                        "ce_gr": gr,
                        "ce_gr_matches": ce_gr_ok,
                        "h_ann_matches": h_ann_ok,
                        "h_ann": ann_h.iter().map(|p| ring_h.poly_to_string(p)).collect::<Vec<_>>(),
                        "h_series_matches": h_series_ok,
                        "h_series": series.to_string(),
                    }),
                ))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kunneth_convolution_holds() {
        for r in check_kunneth() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn coproduct_of_circles_gives_free_rank_one() {
        for r in check_coproduct_exterior() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn hirsch_degree_one_preserves_annihilators() {
        for r in check_hirsch_deg1() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn pd_duality_palindromy() {
        for r in check_pd_duality() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn euler_identity_on_formal_and_solvable_models() {
        for r in check_euler_identity() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn hilb_inequality_with_strictness() {
        let reports = check_hilb_inequality();
        for r in &reports {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
        // The rank-3 row is strict from degree 1 on.
        let l32 = &reports[0];
        let strict = l32.evidence["strict_degrees"].as_array().unwrap();
        assert!(strict.iter().any(|v| v == 1), "{}", l32.evidence);
        assert!(!strict.iter().any(|v| v == 0), "{}", l32.evidence);
    }

    #[test]
    fn crowell_sequence_is_exact_on_hilbert_series() {
        for r in check_crowell() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn truncation_keeps_b1() {
        for r in check_truncation_stability() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn nilpotent_models_have_nilpotent_annihilators() {
        for r in check_nilpotent_res_trivial() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn presentation_oracle_agrees_everywhere() {
        for r in check_bpres_oracle() {
            assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
        }
    }

    #[test]
    fn table_matches_goldens() {
        let reports = table_suite();
        assert_eq!(reports.len(), 9);
        for r in &reports {
            if r.model == "ce:L5,4" {
                // The published H^* entry for L5,4 cannot arise from a
                // five-dimensional algebra: dim H^1 = 4 leaves a single
                // exact 2-form, and a rank-4 form pins the quotient to a
                // one-dimensional module. ker d here is spanned by one
                // symplectic form, so B_1(H^*) = k(-1): Ann = m, Hilb = t.
                // Two transverse planes would need two decomposable exact
                // forms, hence a two-dimensional commutator.
                assert!(!r.is_pass(), "{}: {}", r.model, r.evidence);
                assert_eq!(r.evidence["ce_ann_matches"], json!(true));
                assert_eq!(r.evidence["ce_gr_matches"], json!(true));
                assert_eq!(r.evidence["h_ann_matches"], json!(false));
                assert_eq!(r.evidence["h_series_matches"], json!(false));
                assert_eq!(r.evidence["h_series"], json!("t"));
                let ann: Vec<String> = r.evidence["h_ann"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_str().unwrap().to_string())
                    .collect();
                let mut sorted = ann.clone();
                sorted.sort();
                assert_eq!(sorted, vec!["x1", "x2", "x3", "x4"]);
            } else {
                assert!(r.is_pass(), "{}: {}", r.model, r.evidence);
            }
        }
    }

    #[test]
    fn unknown_checks_are_rejected() {
        assert!(run_check("nosuch").is_err());
        for name in CHECK_NAMES {
            assert!(run_check(name).is_ok());
        }
    }
}
