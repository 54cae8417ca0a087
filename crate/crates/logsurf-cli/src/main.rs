use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use logsurf::adjunction::{diff_class, diff_coeff, DiffInput};
use logsurf::checks::{
    delta2_case_check, fano_big_index_classify, fano_index, kem_bound, lct_quasihomog,
    lct_set_check, nikulin_bound, toric_bound, Delta2Case, NikulinVariant, ToricTag,
};
use logsurf::coeff::CoeffClass;
use logsurf::curves::{
    nodal_semicomplement, p1_has_n_complement, p1_is_exceptional, p1_min_complement,
    CurveBoundary, CurveModel,
};
use logsurf::graph::DualGraph;
use logsurf::hj::{
    hj_expand, hj_value, reid_tai_canonical, wblowup_discrepancy, wblowup_strict_mult,
    CyclicQuot, HJChain, WeightedBlowup,
};
use logsurf::kodaira::{dlt_model_map, kodaira_classify, multiple_fiber_solve, FiberGraph};
use logsurf::p2::{delta_invariant, p2_classify_capped, p2_enumerate, EnumMode, LineArrangement};
use logsurf::{Error, Rat};

#[derive(Parser)]
#[command(name = "logsurf", version, about = "Exact calculator for log surface complements, singularity graphs, and degenerate fibers")]
struct Cli {
    /// emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// emit CSV where the output is a table
    #[arg(long, global = true)]
    csv: bool,
    /// cap for minimal complement index searches
    #[arg(long, global = true, default_value_t = 300)]
    cap: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hirzebruch-Jung continued fractions
    Hj {
        #[command(subcommand)]
        cmd: HjCmd,
    },
    /// Weighted blowup discrepancy and multiplicities
    Wblow { m: u64, weights: String },
    /// Reid-Tai canonicity of a cyclic quotient
    Reidtai { m: u64, weights: String },
    /// Dual graphs of exceptional curve configurations
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Different coefficient on a boundary curve through quotient points
    Diff {
        /// index of the quotient point
        #[arg(long)]
        index: u64,
        /// intersecting branch as coeff:mult, e.g. 1/2:1
        #[arg(long = "term")]
        terms: Vec<String>,
    },
    /// Complements of boundaries on the projective line
    P1 {
        /// comma-separated coefficients, e.g. 1/2,2/3,4/5
        #[arg(long, default_value = "")]
        coeffs: String,
        /// check feasibility of one index
        #[arg(long)]
        n: Option<u64>,
        /// search the minimal index
        #[arg(long)]
        min: bool,
        /// decide exceptionality
        #[arg(long)]
        exceptional: bool,
    },
    /// Semicomplements on nodal curve models
    Nodal {
        /// p1, chain:<k>, or cycle:<k>
        #[arg(long)]
        model: String,
        /// coefficients at the end components
        #[arg(long)]
        ends: Option<String>,
        #[arg(long)]
        n: u64,
    },
    /// Line arrangements on the projective plane
    P2 {
        #[command(subcommand)]
        cmd: P2Cmd,
    },
    /// Index of a polarized del Pezzo surface
    Fano {
        /// dim |H|
        #[arg(long)]
        l: u64,
        #[arg(long)]
        h2: u64,
    },
    /// Numeric bounds from the boundedness results
    Bounds {
        #[command(subcommand)]
        cmd: BoundsCmd,
    },
    /// Log canonical threshold of a quasihomogeneous curve
    Lct {
        /// coprime weights, e.g. 3,2
        #[arg(long)]
        weights: String,
        #[arg(long)]
        deg: u64,
    },
    /// Two-curve coefficient constraints near 1
    Delta2 {
        #[arg(long)]
        case: String,
        #[arg(long)]
        b1: String,
        #[arg(long)]
        b2: String,
    },
    /// Degenerate elliptic fibers
    Kodaira {
        #[command(subcommand)]
        cmd: KodairaCmd,
    },
    /// Write the enumeration tables to a directory
    Tables {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum HjCmd {
    /// Expand m/q into a chain of entries
    Expand { frac: String },
    /// Evaluate a chain back to m/q
    Value { entries: String },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Grade, type, and index of the contracted point
    Classify {
        file: PathBuf,
        #[arg(long)]
        eps: Option<String>,
    },
    /// Discrepancy of every component
    Discrep { file: PathBuf },
}

#[derive(Subcommand)]
enum P2Cmd {
    /// Verdict for one multiplicity tuple
    Classify { tuple: String },
    /// Walk the ample or trivial range
    Enum {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 6)]
        max_lines: usize,
        #[arg(long, default_value_t = 66)]
        max_m: u64,
    },
    /// Count divisors of log discrepancy at most 1/7
    Delta { tuple: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Ample,
    Trivial,
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Bound on the number of exceptional curves
    Nikulin {
        #[arg(long)]
        e: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
        variant: VariantArg,
    },
    /// Orbifold Euler characteristic bound
    Kem {
        #[arg(long)]
        mp: String,
        #[arg(long)]
        chix: i64,
        #[arg(long)]
        chic: i64,
    },
    /// Boundary degree against rho + 2
    Toric {
        #[arg(long)]
        rho: u64,
        #[arg(long)]
        coeffs: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Standard,
    Linear,
}

#[derive(Subcommand)]
enum KodairaCmd {
    /// Fiber type of a configuration file
    Classify { file: PathBuf },
    /// The fiber / dlt model / complement correspondence
    Table,
    /// Solve the multiple-fiber degree equation
    Multifiber { rs: String },
}

enum CliError {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let r = std::io::stdout().write_all(text.as_bytes());
            match r {
                Ok(()) => ExitCode::SUCCESS,
                // reader went away (e.g. piped into head); not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("IoError: {}", e);
                    ExitCode::from(1)
                }
            }
        }
        Err(CliError::Domain(e)) => {
            eprintln!("{}", e);
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
        Err(CliError::Io(e)) => {
            eprintln!("IoError: {}", e);
            ExitCode::from(1)
        }
    }
}

type Out = Result<String, CliError>;

fn run(cli: Cli) -> Out {
    let json = cli.json;
    let csv = cli.csv;
    let cap = cli.cap;
    match cli.cmd {
        Cmd::Hj { cmd } => run_hj(cmd, json),
        Cmd::Wblow { m, weights } => run_wblow(m, &weights, json),
        Cmd::Reidtai { m, weights } => run_reidtai(m, &weights, json),
        Cmd::Graph { cmd } => run_graph(cmd, json),
        Cmd::Diff { index, terms } => run_diff(index, &terms, json),
        Cmd::P1 { coeffs, n, min, exceptional } => run_p1(&coeffs, n, min, exceptional, cap, json),
        Cmd::Nodal { model, ends, n } => run_nodal(&model, ends.as_deref(), n, json),
        Cmd::P2 { cmd } => run_p2(cmd, cap, json, csv),
        Cmd::Fano { l, h2 } => run_fano(l, h2, json),
        Cmd::Bounds { cmd } => run_bounds(cmd, json),
        Cmd::Lct { weights, deg } => run_lct(&weights, deg, json),
        Cmd::Delta2 { case, b1, b2 } => run_delta2(&case, &b1, &b2, json),
        Cmd::Kodaira { cmd } => run_kodaira(cmd, json, csv),
        Cmd::Tables { out } => run_tables(&out, cap),
    }
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|w| {
            w.trim()
                .parse()
                .map_err(|_| Error::Parse { line: 0, msg: format!("bad integer '{}'", w.trim()) })
        })
        .collect()
}

fn parse_rat_list(s: &str) -> Result<Vec<Rat>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(Rat::parse).collect()
}

// "m/q" or plain "m" (then q = 1); kept unreduced, (m, q) is a pair of
// invariants, not a fraction
fn parse_mq(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::Parse { line: 0, msg: format!("expected m/q, got '{}'", s) };
    let mut it = s.trim().splitn(2, '/');
    let m = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let q = match it.next() {
        Some(w) => w.trim().parse().map_err(|_| bad())?,
        None => 1,
    };
    Ok((m, q))
}

fn rat_json(r: &Rat) -> Value {
    match r.to_i64_parts() {
        Some((num, den)) => json!({ "num": num, "den": den }),
        None => json!({ "num": r.numer().to_string(), "den": r.denom().to_string() }),
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn jline(v: Value) -> Out {
    Ok(format!("{}\n", v))
}

fn run_hj(cmd: HjCmd, json: bool) -> Out {
    match cmd {
        HjCmd::Expand { frac } => {
            let (m, q) = parse_mq(&frac)?;
            let chain = hj_expand(&CyclicQuot::new(m, q)?);
            if json {
                jline(json!({ "entries": chain.entries }))
            } else {
                Ok(format!("{}\n", join(&chain.entries)))
            }
        }
        HjCmd::Value { entries } => {
            let chain = HJChain { entries: parse_u64_list(&entries)? };
            let c = hj_value(&chain)?;
            if json {
                jline(json!({ "m": c.m(), "q": c.q() }))
            } else {
                Ok(format!("{}/{}\n", c.m(), c.q()))
            }
        }
    }
}

fn run_wblow(m: u64, weights: &str, json: bool) -> Out {
    let wb = WeightedBlowup::new(m, parse_u64_list(weights)?)?;
    let disc = wblowup_discrepancy(&wb);
    let mults = (0..wb.weights().len())
        .map(|i| wblowup_strict_mult(&wb, i))
        .collect::<Result<Vec<_>, _>>()?;
    if json {
        jline(json!({
            "discrepancy": rat_json(&disc),
            "mults": mults.iter().map(rat_json).collect::<Vec<_>>(),
        }))
    } else {
        Ok(format!("discrepancy={} mults={}\n", disc, join(&mults)))
    }
}

fn run_reidtai(m: u64, weights: &str, json: bool) -> Out {
    let canonical = reid_tai_canonical(m, &parse_u64_list(weights)?)?;
    if json {
        jline(json!({ "canonical": canonical }))
    } else {
        Ok(format!("canonical={}\n", canonical))
    }
}

fn read_file(p: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(p).map_err(CliError::Io)
}

fn run_graph(cmd: GraphCmd, json: bool) -> Out {
    match cmd {
        GraphCmd::Classify { file, eps } => {
            let g = DualGraph::parse(&read_file(&file)?)?;
            let eps = eps.as_deref().map(Rat::parse).transpose()?;
            let c = g.classify(eps.as_ref())?;
            let mindisc = c.eps_grade.as_ref().map(|eg| eg - &Rat::one());
            if json {
                jline(json!({
                    "grade": c.grade.to_string(),
                    "type": c.type_tag.as_ref().map(|t| t.to_string()),
                    "mindisc": mindisc.as_ref().map(rat_json),
                    "index": c.index,
                    "notes": c.notes,
                }))
            } else {
                let mut out = format!("grade={}", c.grade);
                if let Some(t) = &c.type_tag {
                    out.push_str(&format!(" type={}", t));
                }
                if let Some(d) = &mindisc {
                    out.push_str(&format!(" mindisc={}", d));
                }
                match c.index {
                    Some(i) if i != 1 => out.push_str(&format!(" index={}", i)),
                    _ => {}
                }
                out.push('\n');
                for n in &c.notes {
                    out.push_str(&format!("note={}\n", n));
                }
                Ok(out)
            }
        }
        GraphCmd::Discrep { file } => {
            let g = DualGraph::parse(&read_file(&file)?)?;
            let data = g.discrepancies()?;
            if json {
                let rows: Vec<Value> =
                    data.iter().map(|(id, v)| json!({ "id": id, "value": rat_json(v) })).collect();
                jline(json!(rows))
            } else {
                let mut out = String::new();
                for (id, v) in data.iter() {
                    out.push_str(&format!("{}={}\n", id, v));
                }
                Ok(out)
            }
        }
    }
}

fn class_str(c: &CoeffClass) -> String {
    match c {
        CoeffClass::StandardFinite(m) => format!("standard({})", m),
        CoeffClass::StandardInfinite => "standard(inf)".to_string(),
        CoeffClass::InMmOnly => "mm-tail".to_string(),
        CoeffClass::Outside => "outside".to_string(),
    }
}

fn run_diff(index: u64, terms: &[String], json: bool) -> Out {
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let (coeff, mult) = match t.split_once(':') {
            Some((c, m)) => (
                Rat::parse(c)?,
                m.trim().parse().map_err(|_| Error::Parse {
                    line: 0,
                    msg: format!("bad multiplicity '{}'", m),
                })?,
            ),
            None => (Rat::parse(t)?, 1),
        };
        parsed.push((coeff, mult));
    }
    let inp = DiffInput { index_m: index, terms: parsed };
    let v = diff_coeff(&inp)?;
    let class = if v.over_unit { None } else { Some(class_str(&diff_class(&inp)?)) };
    if json {
        jline(json!({ "value": rat_json(&v.value), "over_unit": v.over_unit, "class": class }))
    } else {
        let mut out = format!("value={} over_unit={}", v.value, v.over_unit);
        if let Some(c) = class {
            out.push_str(&format!(" class={}", c));
        }
        out.push('\n');
        Ok(out)
    }
}

fn run_p1(
    coeffs: &str,
    n: Option<u64>,
    min: bool,
    exceptional: bool,
    cap: u64,
    json: bool,
) -> Out {
    let coeffs = parse_rat_list(coeffs)?;
    let min = min || (n.is_none() && !exceptional);
    let mut fields = serde_json::Map::new();
    let mut lines = String::new();
    if let Some(n) = n {
        match p1_has_n_complement(&coeffs, n)? {
            Some(cert) => {
                let extra = cert.extra_degree[0].1;
                lines.push_str(&format!(
                    "complement=true numerators={} extra={} nonklt={}\n",
                    join(&cert.numerators),
                    extra,
                    cert.nonklt
                ));
                fields.insert("complement".into(), json!(true));
                fields.insert("numerators".into(), json!(cert.numerators));
                fields.insert("extra".into(), json!(extra));
                fields.insert("nonklt".into(), json!(cert.nonklt));
            }
            None => {
                lines.push_str("complement=false\n");
                fields.insert("complement".into(), json!(false));
            }
        }
    }
    if min {
        let c = p1_min_complement(&coeffs, cap)?;
        lines.push_str(&format!("compl={}\n", c));
        fields.insert("compl".into(), json!(c));
    }
    if exceptional {
        let e = p1_is_exceptional(&coeffs)?;
        lines.push_str(&format!("exceptional={}\n", e));
        fields.insert("exceptional".into(), json!(e));
    }
    if json {
        jline(Value::Object(fields))
    } else {
        Ok(lines)
    }
}

fn run_nodal(model: &str, ends: Option<&str>, n: u64, json: bool) -> Out {
    let bad = |msg: String| Error::Parse { line: 0, msg };
    let (model, end_ids) = match model.split_once(':') {
        None if model == "p1" => (CurveModel::single_p1(), vec!["p1", "p1"]),
        Some(("chain", k)) => {
            let k: usize = k.parse().map_err(|_| bad(format!("bad chain length '{}'", k)))?;
            if k == 0 {
                return Err(bad("chain length must be positive".into()).into());
            }
            (CurveModel::chain(k), vec!["c1", "ck"])
        }
        Some(("cycle", k)) => {
            let k: usize = k.parse().map_err(|_| bad(format!("bad cycle length '{}'", k)))?;
            if k == 0 {
                return Err(bad("cycle length must be positive".into()).into());
            }
            (CurveModel::cycle(k), Vec::new())
        }
        _ => return Err(bad(format!("unknown model '{}'", model)).into()),
    };
    let end_coeffs = parse_rat_list(ends.unwrap_or(""))?;
    if end_coeffs.len() > end_ids.len() {
        return Err(Error::BadEntry(format!(
            "model has {} end slot(s), got {} coefficients",
            end_ids.len(),
            end_coeffs.len()
        ))
        .into());
    }
    let last = model.components().len();
    let points = end_coeffs
        .into_iter()
        .enumerate()
        .map(|(i, d)| {
            let id = match end_ids[i] {
                "ck" => format!("c{}", last),
                other => other.to_string(),
            };
            (id, d)
        })
        .collect();
    let b = CurveBoundary { points };
    match nodal_semicomplement(&model, &b, n)? {
        Some(cert) => {
            if json {
                let extra: Vec<Value> = cert
                    .extra_degree
                    .iter()
                    .map(|(id, e)| json!({ "id": id, "degree": e }))
                    .collect();
                jline(json!({
                    "feasible": true,
                    "numerators": cert.numerators,
                    "extra": extra,
                    "nonklt": cert.nonklt,
                }))
            } else {
                let extra =
                    join(cert.extra_degree.iter().map(|(id, e)| format!("{}:{}", id, e)));
                Ok(format!(
                    "feasible=true numerators={} extra={} nonklt={}\n",
                    join(&cert.numerators),
                    extra,
                    cert.nonklt
                ))
            }
        }
        None => {
            if json {
                jline(json!({ "feasible": false }))
            } else {
                Ok("feasible=false\n".to_string())
            }
        }
    }
}

fn verdict_word(exceptional: bool) -> &'static str {
    if exceptional {
        "exceptional"
    } else {
        "nonexceptional"
    }
}

fn run_p2(cmd: P2Cmd, cap: u64, json: bool, csv: bool) -> Out {
    match cmd {
        P2Cmd::Classify { tuple } => {
            let a = LineArrangement::new(parse_u64_list(&tuple)?)?;
            let v = p2_classify_capped(&a, cap)?;
            if json {
                jline(json!({
                    "compl": v.compl,
                    "exceptional": v.exceptional,
                    "trivial": v.trivial,
                    "nonklt_regular_n": v.nonklt_regular_n,
                }))
            } else {
                let mut out = format!("compl={} exceptional={}", v.compl, v.exceptional);
                if v.trivial {
                    out.push_str(" trivial=true");
                }
                if let Some(n) = v.nonklt_regular_n {
                    out.push_str(&format!(" nonklt_n={}", n));
                }
                out.push('\n');
                Ok(out)
            }
        }
        P2Cmd::Enum { mode, max_lines, max_m } => {
            let mode = match mode {
                ModeArg::Ample => EnumMode::Ample,
                ModeArg::Trivial => EnumMode::Trivial,
            };
            let rows = p2_enumerate(mode, max_lines, max_m, cap)?;
            if json {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|(t, v)| {
                        json!({
                            "tuple": t,
                            "compl": v.compl,
                            "exceptional": v.exceptional,
                            "trivial": v.trivial,
                            "nonklt_regular_n": v.nonklt_regular_n,
                        })
                    })
                    .collect();
                jline(json!(rows))
            } else {
                let mut out = String::new();
                if csv {
                    out.push_str("compl,tuple,verdict\n");
                }
                for (t, v) in &rows {
                    out.push_str(&format!(
                        "{},({}),{}\n",
                        v.compl,
                        join(t),
                        verdict_word(v.exceptional)
                    ));
                }
                Ok(out)
            }
        }
        P2Cmd::Delta { tuple } => {
            let a = LineArrangement::new(parse_u64_list(&tuple)?)?;
            let d = delta_invariant(&a.coefficients())?;
            if json {
                jline(json!({ "delta": d }))
            } else {
                Ok(format!("delta={}\n", d))
            }
        }
    }
}

fn run_fano(l: u64, h2: u64, json: bool) -> Out {
    let r = fano_index(l, h2)?;
    let class = if r > Rat::one() { Some(fano_big_index_classify(&r)?.to_string()) } else { None };
    if json {
        jline(json!({ "r": rat_json(&r), "class": class }))
    } else {
        let mut out = format!("r={}", r);
        if let Some(c) = class {
            out.push_str(&format!(" class={}", c));
        }
        out.push('\n');
        Ok(out)
    }
}

fn run_bounds(cmd: BoundsCmd, json: bool) -> Out {
    match cmd {
        BoundsCmd::Nikulin { e, variant } => {
            let variant = match variant {
                VariantArg::Standard => NikulinVariant::Standard,
                VariantArg::Linear => NikulinVariant::Linear,
            };
            let b = nikulin_bound(e, variant)?;
            if json {
                jline(json!({ "bound": b }))
            } else {
                match b {
                    Some(b) => Ok(format!("bound={}\n", b)),
                    None => Ok("bound=unspecified\n".to_string()),
                }
            }
        }
        BoundsCmd::Kem { mp, chix, chic } => {
            let holds = kem_bound(&parse_u64_list(&mp)?, chix, chic)?;
            if json {
                jline(json!({ "holds": holds }))
            } else {
                Ok(format!("holds={}\n", holds))
            }
        }
        BoundsCmd::Toric { rho, coeffs } => {
            let tag = toric_bound(rho, &parse_rat_list(&coeffs)?)?;
            let note = (tag == ToricTag::Equality).then_some("toric candidate");
            if json {
                jline(json!({ "verdict": tag.to_string(), "note": note }))
            } else {
                let mut out = format!("verdict={}\n", tag);
                if let Some(n) = note {
                    out.push_str(&format!("note={}\n", n));
                }
                Ok(out)
            }
        }
    }
}

fn run_lct(weights: &str, deg: u64, json: bool) -> Out {
    let ws = parse_u64_list(weights)?;
    let [w1, w2] = ws[..] else {
        return Err(Error::Parse { line: 0, msg: "exactly two weights expected".into() }.into());
    };
    let c = lct_quasihomog(w1, w2, deg)?;
    let in_set = if c >= Rat::new(2, 3) { Some(lct_set_check(&c)?) } else { None };
    if json {
        jline(json!({ "lct": rat_json(&c), "in_set": in_set }))
    } else {
        let mut out = format!("lct={}", c);
        if let Some(s) = in_set {
            out.push_str(&format!(" in_set={}", s));
        }
        out.push('\n');
        Ok(out)
    }
}

fn run_delta2(case: &str, b1: &str, b2: &str, json: bool) -> Out {
    let case: Delta2Case = case.parse()?;
    let ok = delta2_case_check(case, &Rat::parse(b1)?, &Rat::parse(b2)?)?;
    if json {
        jline(json!({ "ok": ok }))
    } else {
        Ok(format!("ok={}\n", ok))
    }
}

// the correspondence: fiber types, dlt model classes, complement indices;
// seven columns as printed
const KODAIRA_TABLE: [[&str; 7]; 3] = [
    ["I(b)", "mI(b;m)", "I*(0)", "I*(b)", "IV;IV*", "III;III*", "II;II*"],
    ["Ell;A~(b)", "A~(b)", "D~(4)", "D~(b+4)", "E~6", "E~7", "E~8"],
    ["1", "1", "2", "2", "3", "4", "6"],
];

fn kodaira_table_text() -> String {
    let mut out = String::new();
    for row in KODAIRA_TABLE {
        let line: Vec<String> = row.iter().map(|c| format!("{:<10}", c)).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn kodaira_table_csv() -> String {
    let mut out = String::new();
    for row in KODAIRA_TABLE {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn run_kodaira(cmd: KodairaCmd, json: bool, csv: bool) -> Out {
    match cmd {
        KodairaCmd::Classify { file } => {
            let fg = FiberGraph::parse(&read_file(&file)?)?;
            let t = kodaira_classify(&fg)?;
            let (dlt, compl) = dlt_model_map(t);
            if json {
                jline(json!({ "type": t.to_string(), "dlt": dlt.to_string(), "compl": compl }))
            } else {
                Ok(format!("type={} dlt={} compl={}\n", t, dlt, compl))
            }
        }
        KodairaCmd::Table => {
            if json {
                let rows: Vec<Value> = (0..7)
                    .map(|i| {
                        json!({
                            "fiber": KODAIRA_TABLE[0][i],
                            "dlt": KODAIRA_TABLE[1][i],
                            "compl": KODAIRA_TABLE[2][i].parse::<u64>().expect("digit"),
                        })
                    })
                    .collect();
                jline(json!(rows))
            } else if csv {
                Ok(kodaira_table_csv())
            } else {
                Ok(kodaira_table_text())
            }
        }
        KodairaCmd::Multifiber { rs } => {
            let (delta, n) = multiple_fiber_solve(&parse_u64_list(&rs)?)?;
            if json {
                jline(json!({ "delta": rat_json(&delta), "n": n }))
            } else {
                Ok(format!("delta={} n={}\n", delta, n))
            }
        }
    }
}

fn run_tables(out: &Path, cap: u64) -> Out {
    std::fs::create_dir_all(out)?;
    let mut log = String::new();
    for (name, mode) in [("p2_ample.csv", EnumMode::Ample), ("p2_trivial.csv", EnumMode::Trivial)]
    {
        let rows = p2_enumerate(mode, 6, 66, cap)?;
        let mut text = String::from("compl,tuple,verdict\n");
        for (t, v) in &rows {
            text.push_str(&format!("{},({}),{}\n", v.compl, join(t), verdict_word(v.exceptional)));
        }
        let path = out.join(name);
        std::fs::write(&path, text)?;
        log.push_str(&format!("wrote {}\n", path.display()));
    }
    let path = out.join("kodaira_table.csv");
    std::fs::write(&path, kodaira_table_csv())?;
    log.push_str(&format!("wrote {}\n", path.display()));
    Ok(log)
}
