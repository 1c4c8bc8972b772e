use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use braidinv::algebra::{exp_substitute, RationalPoly};
use braidinv::braid::families::{example1, example2, example3};
use braidinv::braid::morton::{morton_script, morton_start, replay, ReplayError};
use braidinv::braid::{exchange_pair, triviality_filters, BraidWord, ExchangePair};
use braidinv::fiedler::{exchange_fiedler_difference, exchange_windings, fiedler_poly};
use braidinv::permcalc::exchange_lengths_of;
use braidinv::qinv::{conjecture_scan, q_difference, truncation_order, ScanConfig, SCHEMA_VERSION};
use braidinv::tl::{singular_phi, trace_f};
use braidinv::Error;
use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "braidinv", version, about = "Conjugacy invariants of closed braids")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a single braid, e.g. "1 1 1" or "n=4; 1 -2 3".
    Invariants {
        braid: String,
        /// Fiedler polynomial (the default when nothing else is requested).
        #[arg(long)]
        fiedler: bool,
        /// Orders k of Q_k, comma separated.
        #[arg(long, value_delimiter = ',')]
        q: Vec<usize>,
        /// The trace f∘Φ as a polynomial in a and x.
        #[arg(long)]
        trace: bool,
    },
    /// Compare the exchange pair β₁ = Xσ_n⁻¹Yσ_n, β₂ = Xσ_nYσ_n⁻¹.
    Exchange {
        x: String,
        y: String,
        /// Braid index of X and Y; inferred from the letters when omitted.
        #[arg(long)]
        n: Option<usize>,
        /// Orders k of the Q_k differences, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        q: Vec<usize>,
    },
    /// Print a member of one of the example families.
    Family {
        #[command(subcommand)]
        which: Family,
    },
    /// Replay the scripted unknotting of Morton's braid.
    MortonReplay {
        /// Drop the given 1-based step from the script (to exercise validation).
        #[arg(long, hide = true)]
        skip: Option<usize>,
    },
    /// Sample exchange pairs and compare the Fiedler and Q₁ differences (JSON lines).
    Scan {
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Combined length |X| + |Y|.
        #[arg(long, default_value_t = 10)]
        length: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pairs to evaluate first, one per line as `X | Y`.
        #[arg(long)]
        include_file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// X = σ₃σ₂σ₁, Y = σ₃σ₂^(2k+1)σ₁.
    Ex1 {
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// X = σ₃σ₂σ₁, Y = σ₂σ₁σ₃.
    Ex2,
    /// X = σ_{n-1}⋯σ₁, Y = σ_{n-1}⋯σ_{i+1}σ_iσ_{i+1}⁻¹⋯σ_{n-1}⁻¹.
    Ex3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
}

enum Failure {
    Lib(Error),
    Replay(ReplayError),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(e) if e.is_parse_error() => 2,
            Failure::Lib(_) => 3,
            Failure::Replay(_) => 4,
            Failure::Io(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Replay(e) => e.to_string(),
            Failure::Io(s) => s.clone(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Invariants { braid, fiedler, q, trace } => invariants(braid, *fiedler, q, *trace, cli.json),
        Command::Exchange { x, y, n, q } => exchange(x, y, *n, q, cli.json),
        Command::Family { which } => family(which, cli.json),
        Command::MortonReplay { skip } => morton(*skip, cli.json),
        Command::Scan { n, length, samples, seed, include_file } => {
            scan(*n, *length, *samples, *seed, include_file.as_ref())
        }
    }
}

/// Parses `text`, placing it in `B_n` when `n` is given and the text has no header.
fn parse_in(text: &str, n: Option<usize>) -> Result<BraidWord, Error> {
    match n {
        Some(n) if !text.trim_start().starts_with('n') => format!("n={n}; {text}").parse(),
        _ => text.parse(),
    }
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("serializable"))
}

fn q_values(b: &BraidWord, orders: &[usize]) -> Result<Vec<(usize, RationalPoly)>, Error> {
    if orders.is_empty() {
        return Ok(Vec::new());
    }
    let order = orders.iter().map(|&k| truncation_order(k)).max().unwrap_or(2);
    let series = exp_substitute(&trace_f(&singular_phi(b)?), order);
    Ok(orders.iter().map(|&k| (k, series.coeff(k))).collect())
}

fn invariants(text: &str, fiedler: bool, q: &[usize], trace: bool, json: bool) -> Result<String, Failure> {
    let b: BraidWord = text.parse()?;
    let want_fiedler = fiedler || (q.is_empty() && !trace);
    let f = if want_fiedler { Some(fiedler_poly(&b)?) } else { None };
    let tl = if trace { Some(trace_f(&singular_phi(&b)?)) } else { None };
    let qs = q_values(&b, q)?;
    let writhe = b.writhe().ok();
    if json {
        let mut obj = Map::new();
        obj.insert("schema".into(), json!(SCHEMA_VERSION));
        obj.insert("braid".into(), json!(b.to_string()));
        obj.insert("n".into(), json!(b.n()));
        obj.insert("writhe".into(), json!(writhe));
        obj.insert("is_knot".into(), json!(b.is_knot()));
        if let Some(f) = &f {
            obj.insert("fiedler".into(), f.to_json());
        }
        if let Some(t) = &tl {
            obj.insert("tl_trace".into(), t.to_json());
        }
        if !qs.is_empty() {
            let m: Map<String, Value> = qs.iter().map(|(k, p)| (k.to_string(), p.to_json())).collect();
            obj.insert("q".into(), Value::Object(m));
        }
        return Ok(pretty(&Value::Object(obj)));
    }
    let mut out = format!("braid: {b}\n");
    match writhe {
        Some(w) => out += &format!("writhe: {w}\n"),
        None => out += "writhe: undefined (singular)\n",
    }
    out += &format!("knot: {}\n", b.is_knot());
    if let Some(f) = f {
        out += &format!("fiedler: {f}\n");
    }
    if let Some(t) = tl {
        out += &format!("trace: {t}\n");
    }
    for (k, p) in qs {
        out += &format!("q{k}: {p}\n");
    }
    Ok(out)
}

fn exchange(x: &str, y: &str, n: Option<usize>, orders: &[usize], json: bool) -> Result<String, Failure> {
    let (mut xw, mut yw) = (parse_in(x, n)?, parse_in(y, n)?);
    let m = xw.n().max(yw.n());
    xw = xw.embed(m)?;
    yw = yw.embed(m)?;
    let filters = triviality_filters(&xw, &yw)?;
    let pair = exchange_pair(&xw, &yw)?;
    exchange_report(&pair, &filters, orders, json)
}

fn exchange_report(
    pair: &ExchangePair,
    filters: &braidinv::braid::TrivialityReport,
    orders: &[usize],
    json: bool,
) -> Result<String, Failure> {
    let diff = exchange_fiedler_difference(pair)?;
    let (m1, m2) = exchange_windings(pair)?;
    let lengths = exchange_lengths_of(pair)?;
    let predicted_zero = 2 * lengths.l == pair.n() + 2;
    let q_diffs: Vec<(usize, RationalPoly)> =
        orders.iter().map(|&k| q_difference(pair, k).map(|d| (k, d))).collect::<Result<_, _>>()?;
    let verdict = if !diff.is_zero() {
        "distinguished: not conjugate".to_string()
    } else if let Some((k, _)) = q_diffs.iter().find(|(_, d)| !d.is_zero()) {
        format!("distinguished by Q{k}: not conjugate")
    } else {
        "not distinguished".to_string()
    };
    if json {
        let q: Map<String, Value> = q_diffs.iter().map(|(k, d)| (k.to_string(), d.to_json())).collect();
        let v = json!({
            "schema": SCHEMA_VERSION,
            "n": pair.n(),
            "X": pair.x().letters_string(),
            "Y": pair.y().letters_string(),
            "beta1": pair.beta1().to_string(),
            "beta2": pair.beta2().to_string(),
            "triviality": filters,
            "fiedler_diff": diff.to_json(),
            "q_diff": q,
            "m1": m1,
            "m2": m2,
            "l": lengths.l,
            "l_predicts_zero": predicted_zero,
            "prediction_holds": predicted_zero == diff.is_zero(),
            "verdict": verdict,
        });
        return Ok(pretty(&v));
    }
    let mut out = format!("beta1: {}\nbeta2: {}\n", pair.beta1(), pair.beta2());
    if filters.any() {
        out += &format!(
            "trivial: x_avoids_top={} y_avoids_top={} parity_obstruction={}\n",
            filters.x_avoids_top, filters.y_avoids_top, filters.parity_obstruction
        );
    }
    out += &format!("fiedler difference: {diff}\n");
    for (k, d) in &q_diffs {
        out += &format!("q{k} difference: {d}\n");
    }
    out += &format!("m1 = {m1}, m2 = {m2}, l = {}\n", lengths.l);
    out += &format!(
        "cycle lengths predict {} Fiedler difference ({})\n",
        if predicted_zero { "a zero" } else { "a nonzero" },
        if predicted_zero == diff.is_zero() { "holds" } else { "fails" }
    );
    out += &format!("verdict: {verdict}\n");
    Ok(out)
}

fn family(which: &Family, json: bool) -> Result<String, Failure> {
    let (name, pair) = match which {
        Family::Ex1 { k } => (format!("ex1 k={k}"), example1(*k)),
        Family::Ex2 => ("ex2".to_string(), example2()),
        Family::Ex3 { n, i } => (format!("ex3 n={n} i={i}"), example3(*n, *i)?),
    };
    if json {
        return Ok(pretty(&json!({
            "schema": SCHEMA_VERSION,
            "family": name,
            "n": pair.n(),
            "X": pair.x().letters_string(),
            "Y": pair.y().letters_string(),
            "beta1": pair.beta1().to_string(),
            "beta2": pair.beta2().to_string(),
        })));
    }
    Ok(format!(
        "family: {name}\nX: {}\nY: {}\nbeta1: {}\nbeta2: {}\n",
        pair.x(),
        pair.y(),
        pair.beta1(),
        pair.beta2()
    ))
}

fn morton(skip: Option<usize>, json: bool) -> Result<String, Failure> {
    let mut script = morton_script();
    if let Some(s) = skip {
        if s == 0 || s > script.len() {
            return Err(Failure::Io(format!("--skip must lie in 1..={}", script.len())));
        }
        script.remove(s - 1);
    }
    let log = replay(&morton_start(), &script).map_err(Failure::Replay)?;
    if json {
        return Ok(pretty(&json!({
            "schema": SCHEMA_VERSION,
            "start": morton_start().to_string(),
            "steps": log,
        })));
    }
    let mut out = format!("start: {}\n", morton_start());
    for s in &log {
        let moves: Vec<String> = s.moves.iter().map(|m| serde_json::to_string(m).expect("serializable")).collect();
        out += &format!("{:>2}. {} {} -> {}\n", s.step, s.label, moves.join(" "), s.word);
    }
    Ok(out)
}

fn read_includes(path: &PathBuf, n: usize) -> Result<Vec<(BraidWord, BraidWord)>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let mut pairs = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (x, y) = line
            .split_once('|')
            .ok_or_else(|| Failure::Io(format!("include line `{line}` is not of the form `X | Y`")))?;
        pairs.push((parse_in(x.trim(), Some(n))?, parse_in(y.trim(), Some(n))?));
    }
    Ok(pairs)
}

fn scan(n: usize, length: usize, samples: usize, seed: u64, include: Option<&PathBuf>) -> Result<String, Failure> {
    let include = match include {
        Some(p) => read_includes(p, n)?,
        None => Vec::new(),
    };
    let report = conjecture_scan(&ScanConfig { n, length, samples, seed, include })?;
    Ok(report.to_jsonl())
}
