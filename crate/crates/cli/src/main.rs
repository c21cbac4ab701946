mod report;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use repgraph::graph::{ExportFormat, Graph, GraphJob};
use repgraph::predict::{self, DiameterValue};
use repgraph::qform::Discriminant;
use repgraph::{parse_form, Error, Field, QuadraticForm};

use report::*;

#[derive(Parser)]
#[command(
    name = "repgraph",
    version,
    about = "Invariants of representation graphs of quadratic forms over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a form up to isometry.
    Classify(FormArgs),
    /// Predict the invariants of G(q, a) from closed formulas.
    Predict(GraphArgs),
    /// Predict, then check every prediction against exhaustive search.
    Verify(GraphArgs),
    /// Run one form template over a range of fields.
    Sweep(SweepArgs),
    /// Write the graph as an edge list or Graphviz file.
    Export(ExportArgs),
}

#[derive(Args)]
struct FormArgs {
    /// Field: `q=<order>` or `p=<p>,m=<m>[,mod=<c0,...,cm>]`.
    #[arg(short = 'q', long = "field")]
    field: String,
    /// Form, e.g. `2*H + diag(1,lambda)` or `bin(1,1)`.
    #[arg(short = 'f', long = "form")]
    form: String,
    /// Human-readable output instead of JSON.
    #[arg(long)]
    text: bool,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, env = "REPGRAPH_MAX_VERTICES", default_value_t = repgraph::DEFAULT_MAX_VERTICES)]
    max_vertices: u64,
    /// Worker threads for the exhaustive engine.
    #[arg(long)]
    threads: Option<usize>,
    /// Omit timings, for byte-identical reports.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    form: FormArgs,
    /// Target value, as a field element encoding.
    #[arg(short = 'a', long = "value")]
    a: u64,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMode {
    Diameter,
    All,
}

#[derive(Args)]
struct SweepArgs {
    /// Form template, parsed afresh over every field.
    #[arg(short = 'f', long = "form")]
    form: String,
    /// Inclusive range `LO..HI`; every prime power in it is used.
    #[arg(long)]
    fields: String,
    #[arg(short = 'a', long = "value", default_value_t = 1)]
    a: u64,
    /// Use every nonzero a instead of a single value.
    #[arg(long)]
    all_a: bool,
    #[arg(long, value_enum, default_value_t = SweepMode::Diameter)]
    mode: SweepMode,
    #[arg(long)]
    text: bool,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dot,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(short = 'q', long = "field")]
    field: String,
    #[arg(short = 'f', long = "form")]
    form: String,
    #[arg(short = 'a', long = "value")]
    a: u64,
    #[arg(long, value_enum, default_value_t = Format::Edges)]
    format: Format,
    /// Output file; stdout if absent.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    #[arg(long, env = "REPGRAPH_MAX_VERTICES", default_value_t = repgraph::DEFAULT_MAX_VERTICES)]
    max_vertices: u64,
}

enum Outcome {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Classify(args) => classify(&args),
        Command::Predict(args) => run_graph(&args, false),
        Command::Verify(args) => run_graph(&args, true),
        Command::Sweep(args) => sweep(&args),
        Command::Export(args) => export(&args),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn load(field: &str, form: &str) -> repgraph::Result<(Field, QuadraticForm)> {
    let field: Field = field.parse()?;
    let form = parse_form(&field, form)?;
    Ok((field, form))
}

fn emit<T: serde::Serialize>(value: &T) {
    let json = serde_json::to_string_pretty(value).expect("reports serialize");
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(io::stdout().lock(), "{json}");
}

fn classify(args: &FormArgs) -> repgraph::Result<Outcome> {
    let (field, form) = load(&args.field, &args.form)?;
    let ty = form.classify();
    let witt = form.witt_decompose();
    let hyperbolic = ty.hyperbolic == Some(true);
    let discriminant = match ty.disc {
        Discriminant::Determinant(repgraph::SquareClass::Square) => "square",
        Discriminant::Determinant(_) => "non-square",
        Discriminant::Arf { in_wp_image: true } => "arf-trivial",
        Discriminant::Arf { in_wp_image: false } => "arf-nontrivial",
        Discriminant::Trivial => "trivial",
    };
    let shape = if hyperbolic {
        "hyperbolic"
    } else if ty.isotropic {
        "isotropic"
    } else {
        "anisotropic"
    };
    let report = ClassifyReport {
        schema: SCHEMA_VERSION,
        command: "classify",
        field: FieldEcho::new(&field),
        form: FormEcho::new(&args.form, &form),
        isotropic: ty.isotropic,
        hyperbolic,
        witt_index: witt.witt_index,
        anisotropic_kernel_dim: witt.anisotropic_kernel.dim(),
        discriminant,
        summary: format!("{shape}, {}", form.canonical_name()),
    };
    if args.text {
        println!("{}", report.summary);
        println!("dimension     {}", report.form.dim);
        println!("witt index    {}", report.witt_index);
        println!("discriminant  {}", report.discriminant);
        println!("model         {}", report.form.model_dsl);
    } else {
        emit(&report);
    }
    Ok(Outcome::Ok)
}

struct Timer {
    enabled: bool,
    phases: BTreeMap<&'static str, f64>,
}

impl Timer {
    fn new(enabled: bool) -> Timer {
        Timer {
            enabled,
            phases: BTreeMap::new(),
        }
    }

    fn time<T>(&mut self, phase: &'static str, run: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = run();
        self.phases.insert(phase, start.elapsed().as_secs_f64() * 1e3);
        out
    }

    fn finish(self) -> Option<BTreeMap<&'static str, f64>> {
        self.enabled.then_some(self.phases)
    }
}

fn job(form: &QuadraticForm, a: u32, engine: &EngineArgs) -> GraphJob {
    let job = GraphJob::new(form.clone(), a).with_max_vertices(engine.max_vertices);
    match engine.threads {
        Some(t) => job.with_threads(t),
        None => job,
    }
}

fn prediction_block(form: &QuadraticForm, a: u32, cap: u64) -> PredictedBlock {
    let connected = predict::predict_connected(form, a);
    let diameter = predict::predict_diameter(form, a);
    let girth = predict::predict_girth(form, a);
    PredictedBlock {
        connected: Tagged {
            value: connected.value,
            clause: connected.clause,
        },
        diameter: DiameterBlock {
            value: DiameterJson(diameter.value),
            clause: diameter.clause,
            resolved: None,
        },
        girth: Tagged {
            value: girth.value,
            clause: girth.clause,
        },
        triangles: predict::predict_triangles(form, a, cap).into(),
        four_cycles: predict::predict_four_cycles(form, a).into(),
    }
}

fn bruteforce_block(g: &Graph, timer: &mut Timer) -> repgraph::Result<BruteforceBlock> {
    let components = timer.time("components", || g.component_count())?;
    let spectrum = timer.time("distances", || g.distance_spectrum());
    if !spectrum.uniform {
        return Err(Error::Disagreement("distance is not a function of the value".into()));
    }
    Ok(BruteforceBlock {
        vertices: g.vertex_count(),
        degree: g.degree(),
        connected: components == 1,
        components,
        diameter: spectrum.diameter,
        girth: timer.time("girth", || g.girth()),
        triangles: timer.time("triangles", || g.triangle_census()),
        four_cycles: timer.time("four_cycles", || g.four_cycle_census()),
    })
}

fn compare(p: &PredictedBlock, b: &BruteforceBlock) -> Matches {
    let triangles = match p.triangles {
        TriangleBlock::Predicted { c1, c2, total, .. } => {
            (c1, c2, total) == (b.triangles.c1, b.triangles.c2, b.triangles.total)
        }
        TriangleBlock::Failed { .. } => false,
    };
    Matches {
        connected: p.connected.value == b.connected,
        diameter: p.diameter.value.0.contains(b.diameter),
        girth: p.girth.value == b.girth,
        triangles,
        four_cycles: p.four_cycles.total.map(|t| t == b.four_cycles.total),
    }
}

/// Builds the report for one graph; `verify` adds the exhaustive block.
fn invariant_report(
    field: &Field,
    source: &str,
    form: &QuadraticForm,
    a: u32,
    verify: bool,
    engine: &EngineArgs,
) -> repgraph::Result<InvariantReport> {
    let mut timer = Timer::new(!engine.no_timing);
    let mut predicted = timer.time("predict", || prediction_block(form, a, engine.max_vertices));
    let (bruteforce, matches) = if verify {
        let g = timer.time("build", || job(form, a, engine).build())?;
        let b = bruteforce_block(&g, &mut timer)?;
        if let (DiameterValue::Interval { .. }, Some(d)) = (predicted.diameter.value.0, b.diameter.finite()) {
            predicted.diameter.resolved = Some(d);
        }
        let m = compare(&predicted, &b);
        (Some(b), Some(m))
    } else {
        (None, None)
    };
    Ok(InvariantReport {
        schema: SCHEMA_VERSION,
        command: if verify { "verify" } else { "predict" },
        field: FieldEcho::new(field),
        form: FormEcho::new(source, form),
        a,
        predicted,
        all_match: matches.as_ref().map(Matches::all),
        bruteforce,
        matches,
        timing_ms: timer.finish(),
    })
}

fn run_graph(args: &GraphArgs, verify: bool) -> repgraph::Result<Outcome> {
    let (field, form) = load(&args.form.field, &args.form.form)?;
    let a = field.check(args.a)?;
    let report = invariant_report(&field, &args.form.form, &form, a, verify, &args.engine)?;
    if args.form.text {
        print_text(&report);
    } else {
        emit(&report);
    }
    Ok(match report.all_match {
        Some(false) => Outcome::Mismatch,
        _ => Outcome::Ok,
    })
}

fn print_text(r: &InvariantReport) {
    let p = &r.predicted;
    println!(
        "GF({}) {} = {}, a = {}",
        r.field.order, r.form.source, r.form.model, r.a
    );
    let mark = |m: Option<bool>| match m {
        Some(true) => " ok",
        Some(false) => " MISMATCH",
        None => "",
    };
    let m = r.matches.as_ref();
    let b = r.bruteforce.as_ref();
    let oracle = |s: Option<String>| s.map(|s| format!("  [oracle {s}]")).unwrap_or_default();
    println!(
        "connected     {:<12} {}{}{}",
        p.connected.value,
        p.connected.clause,
        oracle(b.map(|b| format!("{} component(s)", b.components))),
        mark(m.map(|m| m.connected))
    );
    println!(
        "diameter      {:<12} {}{}{}",
        p.diameter.value.to_string(),
        p.diameter.clause,
        oracle(b.map(|b| b.diameter.to_string())),
        mark(m.map(|m| m.diameter))
    );
    println!(
        "girth         {:<12} {}{}{}",
        p.girth.value.to_string(),
        p.girth.clause,
        oracle(b.map(|b| b.girth.to_string())),
        mark(m.map(|m| m.girth))
    );
    let tri = match &p.triangles {
        TriangleBlock::Predicted { c1, c2, total, .. } => format!("{total} (c1={c1}, c2={c2})"),
        TriangleBlock::Failed { error } => format!("unavailable: {error}"),
    };
    println!(
        "triangles     {tri}{}{}",
        oracle(b.map(|b| b.triangles.total.to_string())),
        mark(m.map(|m| m.triangles))
    );
    let four = p.four_cycles.total.map_or("not covered".to_string(), |t| t.to_string());
    println!(
        "four-cycles   {four}{}{}",
        oracle(b.map(|b| b.four_cycles.total.to_string())),
        mark(m.and_then(|m| m.four_cycles))
    );
}

fn parse_range(src: &str) -> repgraph::Result<Vec<u64>> {
    let bad = || Error::Parse(format!("expected LO..HI, got {src:?}"));
    let (lo, hi) = src.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo..=hi).filter(|&q| repgraph::gf::prime_power(q).is_some()).collect())
}

fn sweep(args: &SweepArgs) -> repgraph::Result<Outcome> {
    let orders = parse_range(&args.fields)?;
    let start = Instant::now();
    let mut rows = Vec::new();
    for q in orders {
        let field = Field::of_order(q)?;
        let values: Vec<u64> = if args.all_a { (1..q).collect() } else { vec![args.a] };
        for a in values {
            rows.push(sweep_row(&field, a, args));
        }
    }
    let mismatches = rows.iter().filter(|r| r.matches == Some(false)).count();
    let errors = rows.iter().filter(|r| r.error.is_some()).count();
    let mut timing = BTreeMap::new();
    timing.insert("total", start.elapsed().as_secs_f64() * 1e3);
    let report = SweepReport {
        schema: SCHEMA_VERSION,
        command: "sweep",
        form: args.form.clone(),
        mode: match args.mode {
            SweepMode::Diameter => "diameter",
            SweepMode::All => "all",
        },
        rows,
        mismatches,
        errors,
        timing_ms: (!args.engine.no_timing).then_some(timing),
    };
    if args.text {
        println!(
            "{:>6} {:>4} {:>10} {:>8} {:>6}",
            "f", "a", "predicted", "oracle", "match"
        );
        for r in &report.rows {
            let pred = r.predicted.map_or("-".into(), |d| d.to_string());
            let oracle = r.oracle.map_or("-".into(), |d| d.to_string());
            let status = match (r.matches, &r.error) {
                (_, Some(e)) => e.clone(),
                (Some(m), None) => m.to_string(),
                (None, None) => "-".into(),
            };
            println!("{:>6} {:>4} {:>10} {:>8} {:>6}", r.f, r.a, pred, oracle, status);
        }
    } else {
        emit(&report);
    }
    Ok(if mismatches > 0 { Outcome::Mismatch } else { Outcome::Ok })
}

fn sweep_row(field: &Field, a: u64, args: &SweepArgs) -> SweepRow {
    let mut row = SweepRow {
        f: field.order(),
        a: a as u32,
        predicted: None,
        clause: None,
        oracle: None,
        matches: None,
        error: None,
        report: None,
    };
    let run = |row: &mut SweepRow| -> repgraph::Result<()> {
        let form = parse_form(field, &args.form)?;
        let a = field.check(a)?;
        match args.mode {
            SweepMode::Diameter => {
                let p = predict::predict_diameter(&form, a);
                row.predicted = Some(DiameterJson(p.value));
                row.clause = Some(p.clause);
                let d = job(&form, a, &args.engine).build()?.distance_spectrum().diameter;
                row.oracle = Some(d);
                row.matches = Some(p.value.contains(d));
            }
            SweepMode::All => {
                let r = invariant_report(field, &args.form, &form, a, true, &args.engine)?;
                row.predicted = Some(r.predicted.diameter.value);
                row.clause = Some(r.predicted.diameter.clause);
                row.oracle = r.bruteforce.as_ref().map(|b| b.diameter);
                row.matches = r.all_match;
                row.report = Some(r);
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut row) {
        row.error = Some(e.to_string());
    }
    row
}

fn export(args: &ExportArgs) -> repgraph::Result<Outcome> {
    let (field, form) = load(&args.field, &args.form)?;
    let a = field.check(args.a)?;
    let g = GraphJob::new(form, a).with_max_vertices(args.max_vertices).build()?;
    let format = match args.format {
        Format::Edges => ExportFormat::Edges,
        Format::Dot => ExportFormat::Dot,
    };
    let mut out: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    g.export(format, &mut out)?;
    out.flush().map_err(|e| Error::Parse(format!("write failed: {e}")))?;
    Ok(Outcome::Ok)
}
