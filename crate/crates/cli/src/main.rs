use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cyclic_pir::cyclic::{coset_representatives, cyclotomic_coset, parse_code_spec, CosetRole, CyclicCodeSpec};
use cyclic_pir::distance::{min_distance, DistanceEngine, DistanceOptions, DEEP_BUDGET, DEFAULT_BUDGET};
use cyclic_pir::protocol::{
    encode_storage, privacy_check, run_full_retrieval, Database, HonestServers, PrivacyMode, ProtocolSetup,
};
use cyclic_pir::reed_muller::{puncture_at_zero, rm_as_cyclic, rm_generator_matrix, shorten_at_zero, RMSpec, ZeroCoset};
use cyclic_pir::scheme::{evaluate_scheme, Rate};
use cyclic_pir::search::{search_pir_codes, Objective, SearchSpec};
use cyclic_pir::tables::{reproduce_table_with, TableId, Verdict};
use cyclic_pir::Error;

#[derive(Parser)]
#[command(name = "cyclic-pir", version, about = "Cyclic codes, Reed-Muller codes and star-product PIR")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized distance search and protocol runs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Enumeration budget in codewords, e.g. 67108864 or 2^26.
    #[arg(long, global = true, value_parser = parse_budget)]
    budget: Option<u64>,
    /// Raise the enumeration budget to 2^29.
    #[arg(long, global = true, conflicts_with = "budget")]
    deep: bool,
    /// Write the per-round protocol transcript as JSON lines ("-" for stdout).
    #[arg(long, global = true, value_name = "FILE")]
    transcript: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the q-cyclotomic cosets mod n.
    Coset {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Only the coset containing this residue.
        #[arg(long)]
        of: Option<u32>,
    },
    /// Cyclic code queries.
    Code {
        #[command(subcommand)]
        command: CodeCommand,
    },
    /// Star product of two cyclic codes.
    Star {
        a: String,
        b: String,
        #[arg(long)]
        defining: bool,
    },
    /// Dual of a cyclic code.
    Dual {
        spec: String,
        #[arg(long)]
        defining: bool,
    },
    /// Reed-Muller codes and their cyclic forms.
    Rm {
        #[command(subcommand)]
        command: RmCommand,
    },
    /// PIR scheme evaluation and simulation.
    Pir {
        #[command(subcommand)]
        command: PirCommand,
    },
    /// Search coset unions for good (C, D) pairs.
    Search(SearchArgs),
    /// Recompute a printed parameter table.
    Table {
        id: String,
        /// Read the printed cells as they stand, without the recorded errata.
        #[arg(long)]
        verbatim: bool,
    },
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Dimension, cosets, BCH bound and minimum distance.
    Info {
        spec: String,
        /// Treat the listed cosets as the defining set (zeros) instead.
        #[arg(long)]
        defining: bool,
    },
}

#[derive(Subcommand)]
enum RmCommand {
    /// RM(r, m) of length 2^m.
    Build(RmArgs),
    /// RM(r, m) punctured at the zero point.
    Puncture(RmArgs),
    /// RM(r, m) shortened at the zero point.
    Shorten(RmArgs),
    /// Cyclic code with generating set {i : w_2(i) <= r}.
    AsCyclic {
        #[command(flatten)]
        rm: RmArgs,
        /// Drop coset {0}, giving the shortened code.
        #[arg(long)]
        shortened: bool,
    },
}

#[derive(Args)]
struct RmArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    m: u32,
}

#[derive(Args)]
struct Pair {
    /// Storage code C.
    c: String,
    /// Retrieval code D.
    d: String,
    #[arg(long)]
    defining: bool,
}

#[derive(Subcommand)]
enum PirCommand {
    /// Privacy and rate of the scheme (C, D).
    Eval(Pair),
    /// Run the retrieval protocol on a random database.
    Simulate {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 3)]
        files: usize,
        #[arg(long, default_value_t = 2)]
        rows: usize,
        /// 0-based index of the file to retrieve.
        #[arg(long, default_value_t = 0)]
        file: usize,
    },
    /// Check that every t columns of the D generator are independent.
    PrivacyCheck {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        t: usize,
        /// Sample this many subsets instead of enumerating when there are too many.
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, conflicts_with = "sampled")]
        exhaustive: bool,
        #[arg(long)]
        sampled: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Coset representatives to draw from (default: all).
    #[arg(long, value_delimiter = ',')]
    pool: Option<Vec<u32>>,
    #[arg(long, default_value_t = 2)]
    max_c: usize,
    #[arg(long, default_value_t = 5)]
    max_d: usize,
    /// Fix the storage code to this coset union.
    #[arg(long, value_delimiter = ',')]
    fixed_c: Option<Vec<u32>>,
    /// Maximize privacy subject to this rate, e.g. 14/127.
    #[arg(long, required_unless_present = "max_rate", conflicts_with = "max_rate")]
    min_rate: Option<String>,
    /// Maximize rate instead, subject to --min-privacy.
    #[arg(long, requires = "min_privacy")]
    max_rate: bool,
    #[arg(long)]
    min_privacy: Option<usize>,
    /// Stop distance work after this many seconds; results are flagged partial.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Hits to print.
    #[arg(long, default_value_t = 10)]
    top: usize,
}

enum Failure {
    Usage(String),
    Spec { input: String, position: usize, message: String },
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn parse_budget(s: &str) -> Result<u64, String> {
    let value = match s.split_once('^') {
        Some(("2", e)) => e.trim().parse::<u32>().ok().and_then(|e| 1u64.checked_shl(e)),
        Some(_) => None,
        None => s.trim().parse().ok(),
    };
    value.ok_or_else(|| format!("'{s}' is not a codeword count such as 67108864 or 2^26"))
}

fn spec(input: &str, defining: bool) -> Result<CyclicCodeSpec, Failure> {
    let role = if defining { CosetRole::Defining } else { CosetRole::Generating };
    parse_code_spec(input, role).map_err(|e| match e {
        Error::Parse { position, message } => Failure::Spec { input: input.to_string(), position, message },
        other => Failure::Usage(format!("'{input}': {other}")),
    })
}

struct Ctx {
    json: bool,
    seed: u64,
    opts: DistanceOptions,
    transcript: Option<PathBuf>,
}

impl Ctx {
    fn engine(&self) -> Result<DistanceEngine, Failure> {
        Ok(DistanceEngine::new(self.opts)?)
    }

    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        let out = if self.json { serde_json::to_string_pretty(&value).expect("serializable") } else { text() };
        // A closed pipe (e.g. `| head`) is not an error worth reporting.
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    }
}

fn code_json(c: &CyclicCodeSpec) -> Value {
    json!({ "code": c, "n": c.n(), "k": c.dim(), "defining_cosets": c.defining_cosets() })
}

fn coset(ctx: &Ctx, n: u32, q: u32, of: Option<u32>) -> Outcome {
    let reps = match of {
        Some(s) => vec![s % n.max(1)],
        None => coset_representatives(n, q)?,
    };
    let cosets: Vec<(u32, Vec<u32>)> =
        reps.iter().map(|&r| cyclotomic_coset(r, n, q).map(|c| (r, c))).collect::<Result<_, _>>()?;
    ctx.emit(json!(cosets.iter().map(|(r, c)| json!({ "rep": r, "members": c })).collect::<Vec<_>>()), || {
        cosets
            .iter()
            .map(|(r, c)| format!("U{r} ({}): {}", c.len(), c.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")))
            .collect::<Vec<_>>()
            .join("\n")
    });
    Ok(())
}

fn code_info(ctx: &Ctx, input: &str, defining: bool) -> Outcome {
    let c = spec(input, defining)?;
    let report = ctx.engine()?.report(&c)?;
    let mut value = code_json(&c);
    value["bch"] = json!(c.bch_bound());
    value["distance"] = json!(report);
    ctx.emit(value, || {
        format!(
            "{c}\n[{},{},{}] via {}\ndefining cosets {:?}\nBCH bound {}",
            c.n(),
            c.dim(),
            report,
            report.method,
            c.defining_cosets(),
            c.bch_bound()
        )
    });
    Ok(())
}

fn star(ctx: &Ctx, a: &str, b: &str, defining: bool) -> Outcome {
    let (a, b) = (spec(a, defining)?, spec(b, defining)?);
    let s = a.star(&b)?;
    ctx.emit(code_json(&s), || format!("{s}\n[{},{}]", s.n(), s.dim()));
    Ok(())
}

fn dual(ctx: &Ctx, input: &str, defining: bool) -> Outcome {
    let d = spec(input, defining)?.dual();
    ctx.emit(code_json(&d), || format!("{d}\n[{},{}]", d.n(), d.dim()));
    Ok(())
}

fn rm(ctx: &Ctx, command: &RmCommand) -> Outcome {
    let (args, kind) = match command {
        RmCommand::Build(a) => (a, "full"),
        RmCommand::Puncture(a) => (a, "punctured"),
        RmCommand::Shorten(a) => (a, "shortened"),
        RmCommand::AsCyclic { rm, shortened } => (rm, if *shortened { "cyclic-shortened" } else { "cyclic-punctured" }),
    };
    let spec = RMSpec::new(args.r, args.m)?;
    let (code, cyclic) = match kind {
        "full" => (rm_generator_matrix(&spec)?, None),
        "punctured" => (puncture_at_zero(&spec)?, None),
        "shortened" => (shorten_at_zero(&spec)?, None),
        _ => {
            let zero = if kind == "cyclic-shortened" { ZeroCoset::Exclude } else { ZeroCoset::Include };
            let c = rm_as_cyclic(args.r, args.m, zero)?;
            (c.linear_code()?, Some(c))
        }
    };
    let report = match &cyclic {
        Some(c) => ctx.engine()?.report(c)?,
        None => min_distance(&code, &ctx.opts)?,
    };
    let value = json!({
        "r": args.r, "m": args.m, "variant": kind,
        "n": code.n(), "k": code.k(), "distance": report,
        "code": cyclic,
    });
    ctx.emit(value, || {
        let mut s = format!("RM({},{}) {kind}: [{},{},{}] via {}", args.r, args.m, code.n(), code.k(), report, report.method);
        if let Some(c) = &cyclic {
            s.push_str(&format!("\n{c}"));
        }
        s
    });
    Ok(())
}

fn pair(p: &Pair) -> Result<(CyclicCodeSpec, CyclicCodeSpec), Failure> {
    let (c, d) = (spec(&p.c, p.defining)?, spec(&p.d, p.defining)?);
    if (c.q(), c.n()) != (d.q(), d.n()) {
        return Err(Failure::Usage(format!("C is over q={} n={}, D over q={} n={}", c.q(), c.n(), d.q(), d.n())));
    }
    Ok((c, d))
}

fn pir(ctx: &Ctx, command: &PirCommand) -> Outcome {
    match command {
        PirCommand::Eval(p) => {
            let (c, d) = pair(p)?;
            let params = evaluate_scheme(&c, &d, &ctx.engine()?)?;
            ctx.emit(json!({ "C": c, "D": d, "params": params }), || {
                format!(
                    "C {c}\nD {d}\nprivacy t = {} (d(D^perp) = {} via {})\nrate {} ({} symbols per {} downloads)",
                    params.privacy, params.ddual, params.ddual.method, params.rate, params.retrieved_per_round, params.n
                )
            });
            Ok(())
        }
        PirCommand::Simulate { pair: p, files, rows, file } => {
            let (c, d) = pair(p)?;
            let setup = ProtocolSetup::new(&c, &d)?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let db = Database::random(c.q(), *files, *rows, setup.gc.k(), &mut rng)?;
            let storage = encode_storage(&db, &setup.gc)?;
            let servers = HonestServers::new(&storage);
            let report = run_full_retrieval(&setup, &db, &storage, &servers, *file, ctx.seed)?;
            if let Some(path) = &ctx.transcript {
                write_transcript(path, &report.transcript)?;
            }
            let correct = report.file == db.file(*file);
            ctx.emit(
                json!({
                    "file": file, "correct": correct, "rounds": report.rounds, "downloads": report.downloads,
                    "effective_rate": report.effective_rate, "nominal_rate": report.nominal_rate,
                    "decomposition_failures": report.decomposition_failures,
                }),
                || {
                    format!(
                        "file {file} of {files} ({rows} rows of {} symbols): {}\n{} rounds, {} downloads, \
                         effective rate {} (nominal {}), {} decomposition failures",
                        setup.gc.k(),
                        if correct { "retrieved exactly" } else { "RETRIEVED WRONG DATA" },
                        report.rounds,
                        report.downloads,
                        report.effective_rate,
                        report.nominal_rate,
                        report.decomposition_failures
                    )
                },
            );
            if correct && report.decomposition_failures == 0 {
                Ok(())
            } else {
                Err(Failure::Mismatch("retrieval did not reproduce the stored file".into()))
            }
        }
        PirCommand::PrivacyCheck { pair: p, t, trials, exhaustive, sampled } => {
            let (_, d) = pair(p)?;
            let gd = d.linear_code()?;
            let mode = if *exhaustive {
                PrivacyMode::Exhaustive
            } else if *sampled {
                PrivacyMode::Sampled { trials: *trials }
            } else {
                PrivacyMode::Auto { trials: *trials }
            };
            let verdict = privacy_check(&gd, *t, mode, ctx.seed)?;
            ctx.emit(json!(verdict), || {
                let how = if verdict.exhaustive { "exhaustive" } else { "sampled" };
                match &verdict.witness {
                    None if verdict.passed => format!("t = {t}: PASS ({how}, {} subsets)", verdict.subsets_checked),
                    _ => format!("t = {t}: FAIL ({how}), dependent columns {:?}", verdict.witness.clone().unwrap_or_default()),
                }
            });
            if verdict.passed {
                Ok(())
            } else {
                Err(Failure::Mismatch(format!("{t} colluding servers can learn the file index")))
            }
        }
    }
}

fn write_transcript<T: serde::Serialize>(path: &PathBuf, rounds: &[T]) -> Result<(), Failure> {
    let mut out: Box<dyn Write> = if path.as_os_str() == "-" {
        Box::new(std::io::stdout().lock())
    } else {
        Box::new(BufWriter::new(File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?))
    };
    for r in rounds {
        writeln!(out, "{}", serde_json::to_string(r).expect("serializable")).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    out.flush().map_err(|e| Failure::Usage(e.to_string()))
}

fn search(ctx: &Ctx, a: &SearchArgs) -> Outcome {
    let objective = match (&a.min_rate, a.max_rate) {
        (Some(r), _) => Objective::MaxPrivacy { min_rate: r.parse::<Rate>()?, min_privacy: a.min_privacy },
        (None, _) => Objective::MaxRate { min_privacy: a.min_privacy.unwrap_or(0) },
    };
    let mut spec = SearchSpec::new(a.n, a.q, objective)?;
    if let Some(pool) = &a.pool {
        spec.pool = pool.clone();
    }
    spec.max_c_cosets = a.max_c;
    spec.max_d_cosets = a.max_d;
    spec.fixed_c = a.fixed_c.clone();
    spec.distance = ctx.opts;
    spec.time_limit = a.time_limit.map(Duration::from_secs_f64);
    let result = search_pir_codes(&spec)?;
    let top: Vec<_> = result.hits.iter().take(a.top).collect();
    ctx.emit(json!({ "hits": top, "total_hits": result.hits.len(), "partial": result.partial, "stats": result.stats }), || {
        let mut lines = vec![format!(
            "{} hits{}; {} storage and {} retrieval candidates, {} pruned by BCH, {} distance reports",
            result.hits.len(),
            if result.partial { " (partial: time limit reached)" } else { "" },
            result.stats.storage_candidates,
            result.stats.retrieval_candidates,
            result.stats.pruned_bch,
            result.stats.distance_reports
        )];
        for h in &top {
            lines.push(format!(
                "t {:<10} rate {:<8} C U{:?}  D U{:?}{}",
                h.params.privacy.to_string(),
                h.params.rate.to_string(),
                h.c.cosets(),
                h.d.cosets(),
                if h.pareto { "  *" } else { "" }
            ));
        }
        lines.join("\n")
    });
    Ok(())
}

fn table(ctx: &Ctx, id: &str, verbatim: bool) -> Outcome {
    let id: TableId = id.parse()?;
    let report = reproduce_table_with(id, ctx.opts, !verbatim)?;
    ctx.emit(json!(report), || {
        let mut lines = vec![format!(
            "table {} (q={} n={}, budget {}, errata {}): {} MATCH, {} BOUND-CONSISTENT, {} MISMATCH",
            report.id,
            report.q,
            report.n,
            report.budget,
            if report.errata { "applied" } else { "ignored" },
            report.counts.matched,
            report.counts.bound_consistent,
            report.counts.mismatched
        )];
        for row in &report.rows {
            lines.push(format!("row {}: C {}  D {}  -> {}", row.index, row.c_printed, row.d_printed, row.verdict()));
            for e in &row.errata {
                lines.push(format!("    erratum: {}", e.note()));
            }
            for cell in &row.cells {
                let reading = cell.reading.as_ref().map(|r| format!(" (read as {r})")).unwrap_or_default();
                lines.push(format!(
                    "    {:<8} {:<9} printed {:<6}{reading} computed {:<12} {}",
                    cell.column,
                    format!("{:?}", cell.quantity).to_lowercase(),
                    cell.printed,
                    cell.computed,
                    cell.verdict
                ));
            }
        }
        for note in &report.notes {
            lines.push(format!("note: {note}"));
        }
        lines.join("\n")
    });
    if report.verdict() == Verdict::Mismatch {
        Err(Failure::Mismatch(format!("table {id}: {} cells disagree with the printed values", report.counts.mismatched)))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Outcome {
    let budget = if cli.deep { DEEP_BUDGET } else { cli.budget.unwrap_or(DEFAULT_BUDGET) };
    let opts = DistanceOptions::default().with_budget(budget).with_seed(cli.seed);
    opts.check()?;
    let ctx = Ctx { json: cli.json, seed: cli.seed, opts, transcript: cli.transcript };
    match &cli.command {
        Command::Coset { n, q, of } => coset(&ctx, *n, *q, *of),
        Command::Code { command: CodeCommand::Info { spec, defining } } => code_info(&ctx, spec, *defining),
        Command::Star { a, b, defining } => star(&ctx, a, b, *defining),
        Command::Dual { spec, defining } => dual(&ctx, spec, *defining),
        Command::Rm { command } => rm(&ctx, command),
        Command::Pir { command } => pir(&ctx, command),
        Command::Search(a) => search(&ctx, a),
        Command::Table { id, verbatim } => table(&ctx, id, *verbatim),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(why)) => {
            eprintln!("mismatch: {why}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(why)) => {
            eprintln!("error: {why}");
            ExitCode::from(2)
        }
        Err(Failure::Spec { input, position, message }) => {
            eprintln!("error: invalid code spec at position {position}: {message}");
            eprintln!("  {input}");
            eprintln!("  {}^", " ".repeat(input[..position.min(input.len())].chars().count()));
            ExitCode::from(2)
        }
    }
}
