use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mockchar::analysis::{
    dirichlet_series_partial, general_product, l_identity_residual, paperfolding_product_partial,
    pretentious_distance_sq, GAMMA_QUARTER_PRODUCT,
};
use mockchar::arithfun::{ArithmeticFunction, UnitValue};
use mockchar::automata::{compute_kernel, kernel_to_dfao};
use mockchar::classify::{classify, MockClassification};
use mockchar::ffseries::{
    build_g, build_r, coefficient_period_witness, verify_functional_equation, EquationCheck,
    SymbolEmbedding, F4,
};
use mockchar::kronecker::kronecker;
use mockchar_cli::{BFile, OutputFormat, RunConfig, SourceSpec};
use num_complex::Complex64;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "mockchar",
    version,
    about = "Kronecker symbols, automatic sequences and mock characters"
)]
struct Cli {
    /// Config file (key = value); overrides the MOCKCHAR_CONFIG variable.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker symbols (a|n) for one n or an inclusive range lo..hi.
    #[command(allow_negative_numbers = true)]
    Kron {
        a: i64,
        /// n or lo..hi.
        n: String,
    },
    /// Values of a source on an inclusive range.
    #[command(allow_negative_numbers = true)]
    Seq {
        /// Source expression.
        source: String,
        /// lo..hi.
        range: String,
    },
    /// Dirichlet character / mock character verdict.
    #[command(allow_negative_numbers = true)]
    Classify {
        /// Kronecker symbol (a|.) for this a.
        #[arg(long, group = "input")]
        kron: Option<i64>,
        /// Source expression, e.g. kron:-1, paperfold, char:-4, const:1.
        #[arg(long, group = "input")]
        source: Option<String>,
        /// Sequence file ("n value" lines).
        #[arg(long, group = "input")]
        file: Option<PathBuf>,
        /// Base q of the kernel.
        #[arg(long, default_value_t = 2)]
        base: u64,
    },
    /// Automaton from the base-q kernel, as Graphviz DOT.
    Fsm {
        /// Source expression.
        source: String,
        /// Base q of the kernel.
        #[arg(long, default_value_t = 2)]
        base: u64,
        /// Write the DOT graph here and print a summary instead.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compares a source with a b-file.
    #[command(allow_negative_numbers = true)]
    Compare {
        /// Kronecker symbol (a|.) for this a.
        #[arg(long, group = "input")]
        kron: Option<i64>,
        /// Paperfolding sequence.
        #[arg(long, group = "input")]
        paperfold: bool,
        /// Source expression.
        #[arg(long, group = "input")]
        source: Option<String>,
        /// b-file with "n value" lines.
        bfile: PathBuf,
    },
    /// Squared pretentious distance D(f, g; y)^2.
    Distance {
        /// First source expression.
        #[arg(long)]
        f: String,
        /// Second source expression.
        #[arg(long)]
        g: String,
        /// Cutoffs, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<f64>,
    },
    /// Truncated Dirichlet series, or the residual of the L_a factorization.
    #[command(allow_negative_numbers = true)]
    Lseries {
        /// Kronecker symbol (a|.) for this a.
        #[arg(long)]
        a: Option<i64>,
        /// Source expression.
        #[arg(long, conflicts_with = "a")]
        source: Option<String>,
        /// Real part of s.
        #[arg(long)]
        s: f64,
        /// Imaginary part of s.
        #[arg(long, default_value_t = 0.0)]
        t: f64,
        /// Truncation points, comma-separated.
        #[arg(long = "N", value_delimiter = ',', required = true)]
        n: Vec<u64>,
        /// Residual of L_a against its character factorization; requires --a.
        #[arg(long, requires = "a")]
        identity: bool,
    },
    /// Partial products for the paperfolding and generalized products.
    #[command(allow_negative_numbers = true)]
    Product {
        /// Infinite product for the paperfolding sequence.
        #[arg(long, group = "input")]
        paperfold: bool,
        /// Generalized product for this a = 3 mod 4.
        #[arg(long, group = "input")]
        a: Option<i64>,
        /// Truncation points, comma-separated.
        #[arg(long = "N", value_delimiter = ',', required = true)]
        n: Vec<u64>,
    },
    /// Checks G^4 + G + R = 0 over F4 and the period witnesses of R and G.
    #[command(allow_negative_numbers = true)]
    F4check {
        /// Kronecker symbol (a|.) coded over F4.
        #[arg(long)]
        a: i64,
        /// Number of coefficients [default: f4_truncation from the config].
        #[arg(long = "N")]
        n: Option<usize>,
        /// Images of 0, +1, -1 among 0, 1, w, w+1; default: all injective maps.
        #[arg(long)]
        emb: Option<String>,
        /// Also print the hex dump of G for each embedding.
        #[arg(long)]
        dump: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

type Outcome = Result<u8, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = match RunConfig::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    match run(cli.command, &cfg) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, cfg: &RunConfig) -> Outcome {
    match command {
        Command::Kron { a, n } => cmd_kron(cfg, a, &n),
        Command::Seq { source, range } => cmd_seq(cfg, &source, &range),
        Command::Classify {
            kron,
            source,
            file,
            base,
        } => cmd_classify(cfg, kron, source, file, base),
        Command::Fsm { source, base, dot } => cmd_fsm(cfg, &source, base, dot.as_deref()),
        Command::Compare {
            kron,
            paperfold,
            source,
            bfile,
        } => cmd_compare(cfg, kron, paperfold, source, &bfile),
        Command::Distance { f, g, y } => cmd_distance(cfg, &f, &g, &y),
        Command::Lseries {
            a,
            source,
            s,
            t,
            n,
            identity,
        } => cmd_lseries(cfg, a, source, Complex64::new(s, t), &n, identity),
        Command::Product { paperfold, a, n } => cmd_product(cfg, paperfold, a, &n),
        Command::F4check { a, n, emb, dump } => cmd_f4check(cfg, a, n, emb, dump),
    }
}

/// `println!` that ignores a closed stdout.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn schema(command: &str) -> String {
    format!("mockchar/{command}/1")
}

fn print_json(value: &Value) {
    out!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

/// Writes a header row and records to stdout.
fn print_csv(header: &[&str], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    w.write_record(header).map_err(domain)?;
    for row in rows {
        w.write_record(row).map_err(domain)?;
    }
    w.flush().map_err(domain)
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || usage(format!("{s:?} is not an integer or a range lo..hi"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (
            lo.parse().map_err(|_| bad())?,
            hi.parse().map_err(|_| bad())?,
        ),
        None => {
            let n = s.parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(usage(format!("empty range {s}")));
    }
    Ok((lo, hi))
}

fn source(spec: &str) -> Result<(SourceSpec, ArithmeticFunction), Failure> {
    let spec: SourceSpec = spec.parse().map_err(usage)?;
    let f = spec.build().map_err(domain)?;
    Ok((spec, f))
}

fn emit_values(cfg: &RunConfig, command: &str, head: Value, values: Vec<(i64, String)>) -> Outcome {
    match cfg.format {
        OutputFormat::Text => {
            for (_, v) in &values {
                out!("{v}");
            }
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = values
                .into_iter()
                .map(|(n, v)| vec![n.to_string(), v])
                .collect();
            print_csv(&["n", "value"], &rows)?;
        }
        OutputFormat::Json => {
            let mut obj = head;
            obj["schema"] = json!(schema(command));
            obj["values"] = values
                .into_iter()
                .map(|(n, v)| json!({ "n": n, "value": v }))
                .collect();
            print_json(&obj);
        }
    }
    Ok(0)
}

fn cmd_kron(cfg: &RunConfig, a: i64, n: &str) -> Outcome {
    let (lo, hi) = parse_range(n)?;
    let values = (lo..=hi)
        .map(|k| (k, kronecker(a, k).to_i8().to_string()))
        .collect();
    emit_values(cfg, "kron", json!({ "a": a }), values)
}

fn cmd_seq(cfg: &RunConfig, spec: &str, range: &str) -> Outcome {
    let (spec, f) = source(spec)?;
    let (lo, hi) = parse_range(range)?;
    if let Some(limit) = f.domain_limit() {
        if lo < 0 || hi as u64 >= limit {
            return Err(domain(format!("{spec} is only known on 0..{}", limit - 1)));
        }
    }
    let values = (lo..=hi).map(|k| (k, f.eval(k).to_string())).collect();
    emit_values(cfg, "seq", json!({ "source": spec.to_string() }), values)
}

fn cmd_classify(
    cfg: &RunConfig,
    kron: Option<i64>,
    spec: Option<String>,
    file: Option<PathBuf>,
    base: u64,
) -> Outcome {
    if base < 2 {
        return Err(usage("base must be at least 2"));
    }
    let spec = match (kron, spec, file) {
        (Some(a), _, _) => SourceSpec::Kron(a),
        (_, Some(s), _) => s.parse().map_err(usage)?,
        (_, _, Some(path)) => SourceSpec::File(path),
        _ => return Err(usage("one of --kron, --source or --file is required")),
    };
    let f = spec.build().map_err(domain)?;
    let verdict = classify(&f, base, cfg.classify);
    let code = match verdict {
        MockClassification::DirichletCharacter { .. }
        | MockClassification::MockCharacter { .. } => 0,
        MockClassification::Inconsistent { .. } => 3,
        MockClassification::Inconclusive { .. } => 4,
    };
    let mut obj = serde_json::to_value(&verdict).expect("serializable");
    obj["schema"] = json!(schema("classify"));
    obj["source"] = json!(spec.to_string());
    obj["base"] = json!(base);
    match cfg.format {
        OutputFormat::Json => print_json(&obj),
        OutputFormat::Csv | OutputFormat::Text => {
            let detail = match &verdict {
                MockClassification::DirichletCharacter {
                    modulus,
                    period,
                    preperiod,
                    ..
                } => {
                    format!("modulus={modulus} period={period} preperiod={preperiod}")
                }
                MockClassification::MockCharacter {
                    mockulus,
                    d,
                    kernel_size,
                    ..
                } => {
                    format!("mockulus={mockulus} d={d} kernel_size={kernel_size}")
                }
                MockClassification::Inconsistent { witness } => {
                    format!(
                        "witness={}",
                        serde_json::to_string(witness).expect("serializable")
                    )
                }
                MockClassification::Inconclusive { reason, .. } => format!("reason={reason}"),
            };
            if cfg.format == OutputFormat::Csv {
                print_csv(
                    &["source", "base", "verdict", "detail"],
                    &[vec![
                        spec.to_string(),
                        base.to_string(),
                        verdict.kind().into(),
                        detail,
                    ]],
                )?;
            } else {
                out!("{} {detail}", verdict.kind());
            }
        }
    }
    Ok(code)
}

fn cmd_fsm(cfg: &RunConfig, spec: &str, base: u64, dot: Option<&Path>) -> Outcome {
    let (spec, f) = source(spec)?;
    let kernel = compute_kernel(&f, base, cfg.classify.kernel).map_err(domain)?;
    let dfao = kernel_to_dfao(&kernel).map_err(domain)?;
    let replay_end = match f.domain_limit() {
        Some(limit) => cfg.replay_bound.min(limit - 1),
        None => cfg.replay_bound,
    };
    if let Some(n) = dfao.first_mismatch(&f, 0..=replay_end) {
        return Err(domain(format!(
            "automaton disagrees with {spec} at n = {n}"
        )));
    }
    let graph = dfao.to_dot();
    let Some(path) = dot else {
        let _ = std::io::stdout().lock().write_all(graph.as_bytes());
        return Ok(0);
    };
    std::fs::write(path, &graph)
        .map_err(|e| domain(format!("cannot write {}: {e}", path.display())))?;
    let summary = json!({
        "schema": schema("fsm"),
        "source": spec.to_string(),
        "base": base,
        "states": dfao.num_states(),
        "replayed_through": replay_end,
        "dot": path.display().to_string(),
    });
    match cfg.format {
        OutputFormat::Json => print_json(&summary),
        OutputFormat::Csv => print_csv(
            &["source", "base", "states", "replayed_through"],
            &[vec![
                spec.to_string(),
                base.to_string(),
                dfao.num_states().to_string(),
                replay_end.to_string(),
            ]],
        )?,
        OutputFormat::Text => out!("{} states, replayed on 0..={replay_end}", dfao.num_states()),
    }
    Ok(0)
}

fn symbol_value(u: UnitValue) -> Option<i64> {
    u.to_symbol().map(|s| s.to_i8() as i64)
}

fn cmd_compare(
    cfg: &RunConfig,
    kron: Option<i64>,
    paperfold: bool,
    spec: Option<String>,
    path: &Path,
) -> Outcome {
    let spec = match (kron, paperfold, spec) {
        (Some(a), _, _) => SourceSpec::Kron(a),
        (_, true, _) => SourceSpec::Paperfold,
        (_, _, Some(s)) => s.parse().map_err(usage)?,
        _ => return Err(usage("one of --kron, --paperfold or --source is required")),
    };
    let f = spec.build().map_err(domain)?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| domain(format!("cannot read {}: {e}", path.display())))?;
    let bfile = BFile::parse(&text).map_err(usage)?;
    let mismatch = bfile
        .entries()
        .iter()
        .find(|&&(n, v)| symbol_value(f.eval(n)) != Some(v))
        .map(|&(n, v)| (n, v, f.eval(n).to_string()));
    let matched = match mismatch {
        Some((n, _, _)) => bfile.entries().iter().take_while(|&&(m, _)| m < n).count(),
        None => bfile.len(),
    };
    match cfg.format {
        OutputFormat::Json => print_json(&json!({
            "schema": schema("compare"),
            "source": spec.to_string(),
            "file": path.display().to_string(),
            "terms": bfile.len(),
            "matched": matched,
            "first_mismatch": mismatch.as_ref().map(|(n, want, got)| json!({ "n": n, "expected": want, "got": got })),
        })),
        OutputFormat::Csv => print_csv(
            &["source", "terms", "matched", "first_mismatch"],
            &[vec![
                spec.to_string(),
                bfile.len().to_string(),
                matched.to_string(),
                mismatch.as_ref().map_or(String::new(), |m| m.0.to_string()),
            ]],
        )?,
        OutputFormat::Text => match &mismatch {
            None => out!("match: {matched} terms"),
            Some((n, want, got)) => out!("mismatch at n = {n}: expected {want}, got {got}"),
        },
    }
    Ok(if mismatch.is_none() { 0 } else { 1 })
}

fn cmd_distance(cfg: &RunConfig, f: &str, g: &str, ys: &[f64]) -> Outcome {
    let (fs, f) = source(f)?;
    let (gs, g) = source(g)?;
    let results = ys
        .iter()
        .map(|&y| pretentious_distance_sq(&f, &g, y).map_err(domain))
        .collect::<Result<Vec<_>, _>>()?;
    match cfg.format {
        OutputFormat::Text => {
            for r in &results {
                out!("{}", cfg.number(r.squared_distance));
            }
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        cfg.number(r.y),
                        cfg.number(r.squared_distance),
                        r.exact().map_or(String::new(), |q| q.to_string()),
                    ]
                })
                .collect();
            print_csv(&["y", "squared_distance", "exact"], &rows)?;
        }
        OutputFormat::Json => {
            let points: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "y": r.y,
                        "squared_distance": r.squared_distance,
                        "exact": r.exact().map(|q| q.to_string()),
                        "nonzero_terms": r.terms.len(),
                    })
                })
                .collect();
            print_json(&json!({
                "schema": schema("distance"),
                "f": fs.to_string(),
                "g": gs.to_string(),
                "points": points,
            }));
        }
    }
    Ok(0)
}

fn cmd_lseries(
    cfg: &RunConfig,
    a: Option<i64>,
    spec: Option<String>,
    s: Complex64,
    ns: &[u64],
    identity: bool,
) -> Outcome {
    if identity {
        let a = a.expect("clap enforces --a");
        let results = ns
            .iter()
            .map(|&n| l_identity_residual(a, s, n).map_err(domain))
            .collect::<Result<Vec<_>, _>>()?;
        let within = results.iter().all(|r| r.residual <= r.bound);
        match cfg.format {
            OutputFormat::Text => {
                for r in &results {
                    out!("{} {}", cfg.number(r.residual), cfg.number(r.bound));
                }
            }
            OutputFormat::Csv => {
                let rows: Vec<Vec<String>> = ns
                    .iter()
                    .zip(&results)
                    .map(|(n, r)| vec![n.to_string(), cfg.number(r.residual), cfg.number(r.bound)])
                    .collect();
                print_csv(&["N", "residual", "bound"], &rows)?;
            }
            OutputFormat::Json => {
                let points: Vec<Value> = ns
                    .iter()
                    .zip(&results)
                    .map(|(n, r)| {
                        json!({
                            "N": n,
                            "residual": r.residual,
                            "bound": r.bound,
                            "factor": [r.factor.re, r.factor.im],
                            "within_bound": r.residual <= r.bound,
                        })
                    })
                    .collect();
                print_json(&json!({
                    "schema": schema("lseries"),
                    "a": a,
                    "s": [s.re, s.im],
                    "points": points,
                }));
            }
        }
        return Ok(if within { 0 } else { 1 });
    }

    let (spec, f) = match (a, spec) {
        (Some(a), _) => (SourceSpec::Kron(a), ArithmeticFunction::kronecker(a)),
        (None, Some(s)) => source(&s)?,
        (None, None) => return Err(usage("one of --a or --source is required")),
    };
    let results = ns
        .iter()
        .map(|&n| dirichlet_series_partial(&f, s, n).map_err(domain))
        .collect::<Result<Vec<_>, _>>()?;
    match cfg.format {
        OutputFormat::Text => {
            for r in &results {
                out!(
                    "{} {} {}",
                    cfg.number(r.partial.re),
                    cfg.number(r.partial.im),
                    cfg.number(r.tail_bound)
                );
            }
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r.terms.to_string(),
                        cfg.number(r.partial.re),
                        cfg.number(r.partial.im),
                        cfg.number(r.tail_bound),
                    ]
                })
                .collect();
            print_csv(&["N", "re", "im", "tail_bound"], &rows)?;
        }
        OutputFormat::Json => {
            let points: Vec<Value> = results
                .iter()
                .map(|r| json!({ "N": r.terms, "partial": [r.partial.re, r.partial.im], "tail_bound": r.tail_bound }))
                .collect();
            print_json(&json!({
                "schema": schema("lseries"),
                "source": spec.to_string(),
                "s": [s.re, s.im],
                "points": points,
            }));
        }
    }
    Ok(0)
}

fn cmd_product(cfg: &RunConfig, paperfold: bool, a: Option<i64>, ns: &[u64]) -> Outcome {
    let (header, rows): (Vec<&str>, Vec<Vec<f64>>) = match (paperfold, a) {
        (true, _) => (
            vec!["N", "partial", "relative_error"],
            ns.iter()
                .map(|&n| {
                    let p = paperfolding_product_partial(n);
                    vec![n as f64, p, (p / GAMMA_QUARTER_PRODUCT - 1.0).abs()]
                })
                .collect(),
        ),
        (false, Some(a)) => (
            vec!["N", "lhs", "rhs", "residual"],
            ns.iter()
                .map(|&n| general_product(a, n).map(|g| vec![n as f64, g.lhs, g.rhs, g.residual()]))
                .collect::<Result<_, _>>()
                .map_err(domain)?,
        ),
        (false, None) => return Err(usage("one of --paperfold or --a is required")),
    };
    let show = |i: usize, x: f64| {
        if i == 0 {
            (x as u64).to_string()
        } else {
            cfg.number(x)
        }
    };
    match cfg.format {
        OutputFormat::Text => {
            for row in &rows {
                out!("{}", show(1, row[1]));
            }
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().enumerate().map(|(i, &x)| show(i, x)).collect())
                .collect();
            print_csv(&header, &rows)?;
        }
        OutputFormat::Json => {
            let points: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut obj = serde_json::Map::new();
                    for (i, (&k, &x)) in header.iter().zip(r).enumerate() {
                        obj.insert(k.into(), if i == 0 { json!(x as u64) } else { json!(x) });
                    }
                    Value::Object(obj)
                })
                .collect();
            let mut out = json!({ "schema": schema("product"), "points": points });
            if paperfold {
                out["target"] = json!(GAMMA_QUARTER_PRODUCT);
            } else {
                out["a"] = json!(a);
            }
            print_json(&out);
        }
    }
    Ok(0)
}

fn parse_element(s: &str) -> Result<F4, Failure> {
    match s.trim() {
        "0" => Ok(F4::ZERO),
        "1" => Ok(F4::ONE),
        "w" => Ok(F4::OMEGA),
        "w+1" => Ok(F4::OMEGA_PLUS_ONE),
        other => Err(usage(format!("{other:?} is not one of 0, 1, w, w+1"))),
    }
}

fn parse_embedding(s: &str) -> Result<SymbolEmbedding, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    let [zero, plus, minus] = parts[..] else {
        return Err(usage("--emb takes three comma-separated elements"));
    };
    SymbolEmbedding::new(
        parse_element(zero)?,
        parse_element(plus)?,
        parse_element(minus)?,
    )
    .map_err(usage)
}

fn period_witness_json(s: &mockchar::ffseries::F4Series) -> Result<Value, Failure> {
    let v = coefficient_period_witness(s).map_err(domain)?;
    Ok(serde_json::to_value(v).expect("serializable"))
}

fn cmd_f4check(
    cfg: &RunConfig,
    a: i64,
    n: Option<usize>,
    emb: Option<String>,
    dump: bool,
) -> Outcome {
    let n = n.unwrap_or(cfg.f4_truncation);
    let embeddings = match emb {
        Some(s) => vec![parse_embedding(&s)?],
        None => SymbolEmbedding::all_injective(),
    };
    let mut records = Vec::new();
    let mut all_hold = true;
    for e in embeddings {
        let check = verify_functional_equation(a, e, n).map_err(domain)?;
        all_hold &= check == EquationCheck::Holds;
        let g = build_g(a, e, n).map_err(domain)?;
        let r = build_r(a, e, n).map_err(domain)?;
        records.push((
            e,
            check,
            period_witness_json(&r)?,
            period_witness_json(&g)?,
            dump.then(|| g.to_hex()),
        ));
    }
    let label = |e: &SymbolEmbedding| {
        use mockchar::kronecker::SymbolValue::*;
        format!("{},{},{}", e.apply(Zero), e.apply(Plus), e.apply(Minus))
    };
    let kind = |v: &Value| v["kind"].as_str().unwrap_or_default().to_string();
    let holds = |c: &EquationCheck| match c {
        EquationCheck::Holds => "holds".to_string(),
        EquationCheck::FailsAt { index } => format!("fails at {index}"),
    };
    match cfg.format {
        OutputFormat::Json => {
            let items: Vec<Value> = records
                .iter()
                .map(|(e, c, r, g, hex)| {
                    json!({ "embedding": label(e), "equation": c, "r_period": r, "g_period": g, "g_dump": hex })
                })
                .collect();
            print_json(&json!({ "schema": schema("f4check"), "a": a, "N": n, "results": items }));
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|(e, c, r, g, _)| vec![label(e), holds(c), kind(r), kind(g)])
                .collect();
            print_csv(&["embedding", "equation", "r_period", "g_period"], &rows)?;
        }
        OutputFormat::Text => {
            for (e, c, r, g, hex) in &records {
                out!("{} {} R:{} G:{}", label(e), holds(c), kind(r), kind(g));
                if let Some(h) = hex {
                    out!("{h}");
                }
            }
        }
    }
    Ok(if all_hold { 0 } else { 1 })
}
