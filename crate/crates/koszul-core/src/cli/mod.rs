//! Command line front end: the model catalog, Koszul homology reports, Chen
//! ranks, resonance ideals, Aomoto point tests, and the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input, 3 the model's
//! degree cap is too small for the request. Reports are deterministic: the
//! same invocation produces byte-identical output, in both formats.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cdga::{cdga_to_json, Cdga};
use crate::groebner::{ann_cokernel, filtered_dims_truncated, hilbert_series, FpModule, SVec};
use crate::invariants::verify::{run_check, run_identities, table_suite, CheckReport};
use crate::invariants::{
    catalog_keys, catalog_model, chen_ranks, resonance_report, sample_points,
    tangent_cone_ideal, vanishes_at, ResonanceError, ResonanceReport,
};
use crate::koszul::{
    aomoto_dims, cochain_koszul_module_of, koszul_homology_of, KoszulComplex, KoszulError,
};
use crate::lie::builtin_lie;
use crate::polycore::{MonomialOrder, PolyRing, Rat};

const DEFAULT_DEGREE_BOUND: usize = 12;

#[derive(Parser)]
#[command(
    name = "koszul",
    version,
    about = "Koszul homology, resonance ideals, and Chen ranks of finite-type CDGAs"
)]
pub struct Cli {
    /// Truncation degree for dimension tables; falls back to the
    /// KOSZUL_DEGREE_BOUND environment variable, then to 12.
    #[arg(long, global = true)]
    pub degree_bound: Option<usize>,

    /// Monomial order for Groebner computations.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> MonomialOrder {
        match o {
            OrderArg::Grevlex => MonomialOrder::GrevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// List catalog models or dump one model.
    Model {
        #[command(subcommand)]
        action: ModelCmd,
    },
    /// Koszul homology module of a catalog model.
    Koszul {
        /// Catalog key, e.g. "ce:L5,9" or "bibby:3".
        key: String,
        /// Homological degree of the requested module.
        #[arg(long, default_value_t = 1)]
        homology: usize,
        /// Use the cochain complex (modules B^i) instead of the chain side.
        #[arg(long)]
        cochain: bool,
        /// Also print the two matrices adjacent to the requested degree.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Chen ranks theta_1 .. theta_N of a catalog model.
    Chen {
        key: String,
        /// Largest index N.
        #[arg(short = 'N', long = "bound", default_value_t = 8)]
        bound: usize,
    },
    /// Resonance jump and support ideals, compared at seeded sample points.
    Resonance {
        key: String,
        /// Cohomological degree of the resonance locus.
        #[arg(short)]
        i: usize,
        /// Jump depth.
        #[arg(short, default_value_t = 1)]
        s: usize,
        /// Also report the tangent cone of the support ideal at the origin.
        #[arg(long)]
        tangent_cone: bool,
    },
    /// Aomoto rank tests against the jump ideal at seeded sample points.
    Aomoto {
        key: String,
        #[arg(short, default_value_t = 1)]
        i: usize,
        #[arg(short, default_value_t = 1)]
        s: usize,
        /// Number of sample points.
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Run verification suites; exits 0 only when every check passes.
    Verify {
        /// Suite name: "table" or "identities".
        #[arg(long, conflicts_with = "all")]
        suite: Option<String>,
        /// Run every suite.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
pub enum ModelCmd {
    /// List every catalog key with its provenance.
    List,
    /// Dump one model: provenance, Lie data when present, and the full CDGA.
    Show { key: String },
}

#[derive(Debug)]
pub enum CliError {
    BadInput(String),
    CapTooSmall { required: usize, cap: usize },
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::BadInput(m) => write!(f, "{m}"),
            CliError::CapTooSmall { required, cap } => write!(
                f,
                "insufficient degree cap: this request needs cap >= {required}, \
                 the model provides cap = {cap}"
            ),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadInput(_) => 2,
            CliError::CapTooSmall { .. } => 3,
        }
    }
}

impl From<KoszulError> for CliError {
    fn from(e: KoszulError) -> CliError {
        match e {
            KoszulError::CapTooSmall { required, cap } => CliError::CapTooSmall { required, cap },
            other => CliError::BadInput(other.to_string()),
        }
    }
}

impl From<ResonanceError> for CliError {
    fn from(e: ResonanceError) -> CliError {
        match e {
            ResonanceError::Koszul(k) => k.into(),
            other => CliError::BadInput(other.to_string()),
        }
    }
}

pub struct CmdOut {
    pub body: String,
    pub exit: i32,
}

/// Parses the process arguments, runs the command, prints the report, and
/// returns the exit code.
pub fn run_main() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            println!("{}", out.body);
            out.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn dispatch(cli: &Cli) -> Result<CmdOut, CliError> {
    let bound = resolve_degree_bound(cli.degree_bound)?;
    let order: MonomialOrder = cli.order.into();
    let json_mode = cli.format == FormatArg::Json;
    match &cli.command {
        Command::Model { action } => match action {
            ModelCmd::List => Ok(model_list(json_mode)),
            ModelCmd::Show { key } => model_show(key, json_mode),
        },
        Command::Koszul { key, homology, cochain, dump_matrices } => {
            cmd_koszul(key, *homology, *cochain, *dump_matrices, bound, order, json_mode)
        }
        Command::Chen { key, bound: n } => cmd_chen(key, *n, order, json_mode),
        Command::Resonance { key, i, s, tangent_cone } => {
            cmd_resonance(key, *i, *s, *tangent_cone, bound, order, json_mode)
        }
        Command::Aomoto { key, i, s, points, seed } => {
            cmd_aomoto(key, *i, *s, *points, *seed, order, json_mode)
        }
        Command::Verify { suite, all } => cmd_verify(suite.as_deref(), *all, json_mode),
    }
}

fn resolve_degree_bound(flag: Option<usize>) -> Result<usize, CliError> {
    let bound = match flag {
        Some(b) => b,
        None => match std::env::var("KOSZUL_DEGREE_BOUND") {
            Ok(v) => v.parse().map_err(|_| {
                CliError::BadInput(format!("KOSZUL_DEGREE_BOUND is not a number: {v:?}"))
            })?,
            Err(_) => DEFAULT_DEGREE_BOUND,
        },
    };
    if bound == 0 {
        return Err(CliError::BadInput("--degree-bound must be at least 1".into()));
    }
    Ok(bound)
}

fn lookup(key: &str) -> Result<Cdga, CliError> {
    catalog_model(key).ok_or_else(|| {
        CliError::BadInput(format!(
            "unknown model key {key:?}; run `koszul model list` for the catalog"
        ))
    })
}

/// One-line source citation per catalog family.
fn provenance(key: &str) -> String {
    if let Some(name) = key.strip_prefix("ce:") {
        let lie = if name == "sol2" {
            "the solvable Lie algebra with [x,y] = y".to_string()
        } else if let Some(n) = name.strip_prefix("h(") {
            format!("the Heisenberg Lie algebra h({}", n)
        } else if let Some(rest) = name.strip_prefix("f(") {
            format!("the free two-step nilpotent Lie algebra f({}", rest)
        } else if let Some(n) = name.strip_prefix("abelian(") {
            format!("the abelian Lie algebra of dimension {}", n.trim_end_matches(')'))
        } else {
            format!("the nilpotent Lie algebra {name} of de Graaf's classification")
        };
        return format!("Chevalley-Eilenberg complex of {lie}");
    }
    if let Some(n) = key.strip_prefix("bibby:") {
        return format!(
            "Bibby's weight-graded model of the type-A elliptic arrangement complement, n = {n}"
        );
    }
    if let Some(n) = key.strip_prefix("os-braid:") {
        return format!(
            "degree-two truncation of the Orlik-Solomon algebra of the braid arrangement \
             on {n} strands"
        );
    }
    if let Some(n) = key.strip_prefix("conf-e-h2:") {
        return format!(
            "quadratic cover of H^2 of the configuration space of {n} points on an \
             elliptic curve"
        );
    }
    "user-supplied model".to_string()
}

fn model_list(json_mode: bool) -> CmdOut {
    let keys = catalog_keys();
    if json_mode {
        let models: Vec<Value> = keys
            .iter()
            .map(|k| json!({ "key": k, "provenance": provenance(k) }))
            .collect();
        return CmdOut { body: pretty(&json!({ "models": models })), exit: 0 };
    }
    let width = keys.iter().map(|k| k.len()).max().unwrap_or(0);
    let mut text = String::new();
    for k in &keys {
        let _ = writeln!(text, "{k:width$}  {}", provenance(k));
    }
    CmdOut { body: text.trim_end().to_string(), exit: 0 }
}

fn model_show(key: &str, json_mode: bool) -> Result<CmdOut, CliError> {
    let a = lookup(key)?;
    let lie = key.strip_prefix("ce:").and_then(builtin_lie);
    let lie_json = lie.as_ref().map(|g| {
        let brackets: Vec<String> = g
            .structure_constants()
            .iter()
            .map(|((i, j), k, c)| {
                let names = g.basis_names();
                format!("[{},{}] = {}", names[*i], names[*j], scaled(c, &names[*k]))
            })
            .collect();
        json!({
            "name": g.name(),
            "dim": g.dim(),
            "basis": g.basis_names(),
            "brackets": brackets,
            "weights": g.grading(),
        })
    });
    let cdga: Value = serde_json::from_str(&cdga_to_json(&a))
        .expect("cdga serialization is valid JSON");
    if json_mode {
        let doc = json!({
            "key": key,
            "provenance": provenance(key),
            "lie": lie_json,
            "cdga": cdga,
        });
        return Ok(CmdOut { body: pretty(&doc), exit: 0 });
    }
    let mut text = String::new();
    let _ = writeln!(text, "{key}: {}", provenance(key));
    if let Some(l) = &lie_json {
        let _ = writeln!(text, "lie basis: {}", join_json_strings(&l["basis"]));
        for b in l["brackets"].as_array().unwrap() {
            let _ = writeln!(text, "  {}", b.as_str().unwrap());
        }
    }
    let _ = writeln!(text, "cap: {}", a.cap());
    for i in 0..=a.cap() {
        if a.dim(i) > 0 {
            let _ = writeln!(text, "A^{i} basis: {}", a.basis_names(i).join(", "));
        }
    }
    for i in 0..a.cap() {
        for (c, name) in a.basis_names(i).iter().enumerate() {
            let image = differential_string(&a, i, c);
            if image != "0" {
                let _ = writeln!(text, "d {name} = {image}");
            }
        }
    }
    if a.weights().is_some() {
        let _ = writeln!(text, "weights: positive weight grading present");
    }
    Ok(CmdOut { body: text.trim_end().to_string(), exit: 0 })
}

fn scaled(c: &Rat, name: &str) -> String {
    if c.is_one() {
        name.to_string()
    } else if (-c).is_one() {
        format!("-{name}")
    } else {
        format!("{c}*{name}")
    }
}

fn differential_string(a: &Cdga, i: usize, c: usize) -> String {
    let m = a.d_matrix(i);
    let targets = a.basis_names(i + 1);
    let mut parts: Vec<String> = Vec::new();
    for r in 0..m.rows {
        let v = m.get(r, c);
        if !v.is_zero() {
            parts.push(scaled(v, &targets[r]));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn ideal_strings(ring: &PolyRing, gens: &[crate::polycore::Poly]) -> Vec<String> {
    gens.iter().map(|p| ring.poly_to_string(p)).collect()
}

/// Generator list with zeros, repeats, and sign duplicates removed; the
/// underlying ideal is unchanged.
fn dedup_ideal_strings(ring: &PolyRing, gens: &[crate::polycore::Poly]) -> Vec<String> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for p in gens {
        if p.is_zero() {
            continue;
        }
        let s = ring.poly_to_string(p);
        let s = match s.strip_prefix('-') {
            Some(_) => ring.poly_to_string(&-p.clone()),
            None => s,
        };
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    out
}

fn matrix_strings(ring: &PolyRing, cols: &[SVec]) -> Vec<Vec<String>> {
    let rows = cols.first().map(|c| c.len()).unwrap_or(0);
    (0..rows)
        .map(|r| cols.iter().map(|c| ring.poly_to_string(&c[r])).collect())
        .collect()
}

/// Renders a cyclic degree-zero presentation as a quotient ring, the shape
/// the worked examples use; everything else keeps the generator list.
fn presentation_display(ring: &PolyRing, fp: &FpModule) -> Option<String> {
    let shifts = fp.shifts.as_ref()?;
    if fp.n_gens != 1 || shifts != &[0] {
        return None;
    }
    let vars = ring.vars().join(",");
    let rels: Vec<String> = fp
        .relations
        .iter()
        .map(|col| ring.poly_to_string(&col[0]))
        .collect();
    if rels.is_empty() {
        return Some(format!("k[{vars}]"));
    }
    Some(format!("k[{vars}]/({})", rels.join(", ")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_koszul(
    key: &str,
    i: usize,
    cochain: bool,
    dump_matrices: bool,
    bound: usize,
    order: MonomialOrder,
    json_mode: bool,
) -> Result<CmdOut, CliError> {
    let a = lookup(key)?;
    let kc = KoszulComplex::new(&a, order)?;
    let ring = kc.ring();
    let fp = if cochain {
        cochain_koszul_module_of(&kc, i)?
    } else {
        koszul_homology_of(&kc, i)?
    };
    let ann = ann_cokernel(ring, &fp);
    let hilbert = hilbert_series(ring, &fp).ok().map(|h| h.to_string());
    let (gr, gr_stable) = filtered_dims_truncated(ring, &fp, bound);
    let display = presentation_display(ring, &fp);
    let module = if cochain { format!("B^{i}") } else { format!("B_{i}") };
    let side = if cochain { "cochain" } else { "chain" };

    let gens: Vec<Value> = (0..fp.n_gens)
        .map(|g| {
            json!({
                "label": fp.gen_labels[g],
                "degree": fp.shifts.as_ref().map(|s| s[g]),
            })
        })
        .collect();
    let relations: Vec<Vec<String>> = fp
        .relations
        .iter()
        .map(|col| col.iter().map(|p| ring.poly_to_string(p)).collect())
        .collect();
    let matrices = if dump_matrices {
        let lower = if cochain && i == 0 {
            None
        } else if cochain {
            Some(kc.cochain_matrix(i - 1)?.to_vec())
        } else {
            Some(kc.chain_matrix(i)?)
        };
        let upper = if cochain {
            kc.cochain_matrix(i).ok().map(|m| m.to_vec())
        } else {
            kc.chain_matrix(i + 1).ok()
        };
        Some(json!({
            "in": upper.as_deref().map(|m| matrix_strings(ring, m)),
            "out": lower.as_deref().map(|m| matrix_strings(ring, m)),
        }))
    } else {
        None
    };

    let doc = json!({
        "model": key,
        "module": module,
        "side": side,
        "ring_vars": ring.vars(),
        "generators": gens,
        "relations": relations,
        "display": display,
        "annihilator": ideal_strings(ring, &ann),
        "hilbert": hilbert,
        "gr_dims": gr,
        "gr_stable": gr_stable,
        "degree_bound": bound,
        "matrices": matrices,
    });
    if json_mode {
        return Ok(CmdOut { body: pretty(&doc), exit: 0 });
    }

    let mut text = String::new();
    let _ = writeln!(text, "{module}({key}) over k[{}]", ring.vars().join(","));
    if let Some(d) = &display {
        let _ = writeln!(text, "  = {d}");
    } else {
        let shifts = fp.shifts.clone().unwrap_or_else(|| vec![0; fp.n_gens]);
        let gens: Vec<String> = fp
            .gen_labels
            .iter()
            .zip(&shifts)
            .map(|(l, s)| format!("{l} (degree {s})"))
            .collect();
        let _ = writeln!(text, "generators: {}", gens.join(", "));
        for col in &fp.relations {
            let entries: Vec<String> = col.iter().map(|p| ring.poly_to_string(p)).collect();
            let _ = writeln!(text, "relation: [{}]", entries.join(", "));
        }
    }
    let ann_s = ideal_strings(ring, &ann);
    let _ = writeln!(
        text,
        "Ann = ({})",
        if ann_s.is_empty() { "0".to_string() } else { ann_s.join(", ") }
    );
    match &hilbert {
        Some(h) => {
            let _ = writeln!(text, "Hilb = {h}");
        }
        None => {
            let _ = writeln!(text, "Hilb: module is not graded; reporting filtration dims");
        }
    }
    let _ = writeln!(
        text,
        "dims through degree {bound}: {gr:?}{}",
        if gr_stable { "" } else { " (not stabilized)" }
    );
    if let Some(m) = &matrices {
        let _ = writeln!(text, "incoming matrix: {}", compact(&m["in"]));
        let _ = writeln!(text, "outgoing matrix: {}", compact(&m["out"]));
    }
    Ok(CmdOut { body: text.trim_end().to_string(), exit: 0 })
}

fn cmd_chen(
    key: &str,
    n: usize,
    order: MonomialOrder,
    json_mode: bool,
) -> Result<CmdOut, CliError> {
    if n < 1 {
        return Err(CliError::BadInput("-N must be at least 1".into()));
    }
    let a = lookup(key)?;
    let report = chen_ranks(&a, n, order)?;
    let doc = json!({
        "model": key,
        "bound": n,
        "theta1": report.theta1,
        "theta": report.theta,
        "source": report.source.to_string(),
        "gr_series": report.gr_series.as_ref().map(|h| h.to_string()),
    });
    if json_mode {
        return Ok(CmdOut { body: pretty(&doc), exit: 0 });
    }
    let mut text = String::new();
    let _ = writeln!(text, "Chen ranks of {key} through N = {n}");
    let _ = writeln!(text, "theta_1 = {}", report.theta1);
    for (j, t) in report.theta.iter().enumerate() {
        let _ = writeln!(text, "theta_{} = {t}", j + 2);
    }
    let _ = writeln!(text, "source: {}", report.source);
    if let Some(h) = &report.gr_series {
        let _ = writeln!(text, "gr series: {h}");
    }
    Ok(CmdOut { body: text.trim_end().to_string(), exit: 0 })
}

fn sample_json(r: &ResonanceReport) -> Vec<Value> {
    r.samples
        .iter()
        .map(|p| {
            json!({
                "point": p.point.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "aomoto_ge_s": p.aomoto_ge_s,
                "on_jump_locus": p.on_jump_locus,
                "on_support_locus": p.on_support_locus,
            })
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_resonance(
    key: &str,
    i: usize,
    s: usize,
    tangent_cone: bool,
    bound: usize,
    order: MonomialOrder,
    json_mode: bool,
) -> Result<CmdOut, CliError> {
    let a = lookup(key)?;
    let report = resonance_report(&a, key, i, s, order, 12, 42)?;
    let kc = KoszulComplex::new(&a, order)?;
    let ring = kc.ring();
    let tc = if tangent_cone {
        let (gens, stable) = tangent_cone_ideal(ring, &report.support_ideal, bound as u32);
        Some(json!({
            "generators": ideal_strings(ring, &gens),
            "degree_bound": bound,
            "stable": stable,
        }))
    } else {
        None
    };
    let doc = json!({
        "model": key,
        "i": i,
        "s": s,
        "vars": report.vars,
        "jump_ideal": dedup_ideal_strings(ring, &report.jump_ideal),
        "support_ideal": ideal_strings(ring, &report.support_ideal),
        "samples": sample_json(&report),
        "jump_matches_rank_test": report.jump_matches_rank_test,
        "agree_off_origin": report.agree_off_origin,
        "tangent_cone": tc,
    });
    if json_mode {
        return Ok(CmdOut { body: pretty(&doc), exit: 0 });
    }
    let mut text = String::new();
    let _ = writeln!(text, "resonance of {key} at i = {i}, s = {s}");
    let _ = writeln!(text, "jump ideal: ({})", doc_list(&doc["jump_ideal"]));
    let _ = writeln!(text, "support ideal: ({})", doc_list(&doc["support_ideal"]));
    let _ = writeln!(
        text,
        "sampled {} points: rank test {}, jump/support off origin {}",
        report.samples.len(),
        agree_word(report.jump_matches_rank_test),
        agree_word(report.agree_off_origin),
    );
    if let Some(tc) = &tc {
        let _ = writeln!(
            text,
            "tangent cone at 0: ({}){}",
            doc_list(&tc["generators"]),
            if tc["stable"].as_bool().unwrap() { "" } else { " (not stabilized)" }
        );
    }
    Ok(CmdOut { body: text.trim_end().to_string(), exit: 0 })
}

fn agree_word(ok: bool) -> &'static str {
    if ok {
        "agrees"
    } else {
        "DISAGREES"
    }
}

fn cmd_aomoto(
    key: &str,
    i: usize,
    s: usize,
    points: usize,
    seed: u64,
    order: MonomialOrder,
    json_mode: bool,
) -> Result<CmdOut, CliError> {
    let a = lookup(key)?;
    let kc = KoszulComplex::new(&a, order)?;
    let ring = kc.ring();
    let (_, jump) = crate::invariants::resonance_jump_ideal(&a, i, s, order)?;
    let mut rows = Vec::new();
    let mut agree = true;
    for point in sample_points(ring.n_vars(), points, seed) {
        let rank_test = aomoto_dims(&kc, &point, i)? >= s;
        let on_ideal = vanishes_at(&jump, &point);
        agree &= rank_test == on_ideal;
        rows.push(json!({
            "point": point.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "aomoto_ge_s": rank_test,
            "on_jump_locus": on_ideal,
        }));
    }
    let doc = json!({
        "model": key,
        "i": i,
        "s": s,
        "seed": seed,
        "jump_ideal": dedup_ideal_strings(ring, &jump),
        "points": rows,
        "agree": agree,
    });
    if json_mode {
        return Ok(CmdOut { body: pretty(&doc), exit: 0 });
    }
    let mut text = String::new();
    let _ = writeln!(
        text,
        "aomoto rank test for {key} at i = {i}, s = {s}: {} points, seed {seed}",
        points
    );
    let _ = writeln!(text, "jump ideal: ({})", doc_list(&doc["jump_ideal"]));
    let hits = doc["points"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["aomoto_ge_s"].as_bool().unwrap())
        .count();
    let _ = writeln!(text, "points on the locus: {hits}/{points}");
    let _ = writeln!(text, "rank test vs ideal membership: {}", agree_word(agree));
    Ok(CmdOut { body: text.trim_end().to_string(), exit: 0 })
}

fn cmd_verify(suite: Option<&str>, all: bool, json_mode: bool) -> Result<CmdOut, CliError> {
    let suites: Vec<&str> = match (suite, all) {
        (Some(s), false) => vec![s],
        (None, true) => vec!["identities", "table"],
        (None, false) => {
            return Err(CliError::BadInput(
                "verify needs --suite <name> or --all".into(),
            ))
        }
        (Some(_), true) => unreachable!("clap rejects --suite with --all"),
    };
    let mut checks: Vec<CheckReport> = Vec::new();
    for s in suites {
        match s {
            "table" => checks.extend(table_suite()),
            "identities" => checks.extend(run_identities()),
            other => {
                return run_check(other)
                    .map(|mut reports| {
                        checks.append(&mut reports);
                        render_verify(checks, json_mode)
                    })
                    .map_err(|e| CliError::BadInput(e.to_string()));
            }
        }
    }
    Ok(render_verify(checks, json_mode))
}

fn render_verify(checks: Vec<CheckReport>, json_mode: bool) -> CmdOut {
    let failed = checks.iter().filter(|c| !c.is_pass()).count();
    let passed = checks.len() - failed;
    let exit = if failed == 0 { 0 } else { 1 };
    if json_mode {
        let doc = json!({
            "checks": checks,
            "passed": passed,
            "failed": failed,
        });
        return CmdOut { body: pretty(&doc), exit };
    }
    let mut text = String::new();
    for c in &checks {
        if c.is_pass() {
            let _ = writeln!(text, "pass  {:<24} {}", c.check, c.model);
        } else {
            let _ = writeln!(text, "FAIL  {:<24} {}  {}", c.check, c.model, compact(&c.evidence));
        }
    }
    let _ = writeln!(text, "{passed} passed, {failed} failed");
    CmdOut { body: text.trim_end().to_string(), exit }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("report serialization")
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("report serialization")
}

fn doc_list(v: &Value) -> String {
    let items: Vec<&str> = v
        .as_array()
        .map(|a| a.iter().filter_map(|x| x.as_str()).collect())
        .unwrap_or_default();
    if items.is_empty() {
        "0".to_string()
    } else {
        items.join(", ")
    }
}

fn join_json_strings(v: &Value) -> String {
    v.as_array()
        .map(|a| a.iter().filter_map(|x| x.as_str()).collect::<Vec<_>>().join(", "))
        .unwrap_or_default()
}
