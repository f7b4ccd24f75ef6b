//! `bergesat`: build, verify, sample and enumerate Berge-star-saturated
//! 3-graphs.
//!
//! Exit codes: 0 ok / saturated, 2 free but not saturated, 3 not free,
//! 4 argument or file error, 5 sampler budget exhausted, 6 provably no
//! saturated graph with that many edges, 7 outside the supported ranges.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bergesat::assembler::{build_spectrum_witness, theory_spectrum, BuildOptions, SpectrumOutcome, Verdict};
use bergesat::checker::{classify_link_5, is_saturated};
use bergesat::confmodel::{degree_spec, sample_linear_with, SampleOptions, SampleStats, SamplerMode, DEFAULT_MAX_TRIES};
use bergesat::format::{self, Format};
use bergesat::gadgets::GadgetId;
use bergesat::oracle::{enumerate_link_catalog, exhaustive_spectrum, ExhaustiveOptions};
use bergesat::{link, Error, Hypergraph3};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

const EXIT_ARG: u8 = 4;
const EXIT_SAMPLER: u8 = 5;
const EXIT_INFEASIBLE: u8 = 6;
const EXIT_OUT_OF_RANGE: u8 = 7;

#[derive(Parser)]
#[command(name = "bergesat", version, about = "Berge-K_{1,ℓ}-saturated 3-graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for every randomized step; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Graph output format; defaults to the output file extension.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Write a JSON report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// No human-readable summary.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    H3,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Rejection,
    Repair,
}

impl From<ModeArg> for SamplerMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Rejection => SamplerMode::Rejection,
            ModeArg::Repair => SamplerMode::Repair,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a saturated witness with n vertices and m edges.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        m: usize,
        /// Block size of H₁/H₂ for the dense construction.
        #[arg(long)]
        n0: Option<usize>,
        /// Sampler mode; by default rejection then repair for ℓ = 5, repair above.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long)]
        max_tries: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check freeness and saturation of a graph file.
    Verify {
        #[arg(long)]
        ell: usize,
        file: PathBuf,
    },
    /// Predicted or exhaustively computed saturation spectrum.
    Spectrum {
        #[arg(long, conflicts_with = "exhaustive", required_unless_present = "exhaustive")]
        theory: bool,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n0: Option<usize>,
        #[arg(long)]
        allow_n7: bool,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long, default_value_t = 0)]
        shard: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sample the random linear part G(n, ℓ, k); statistics go to stderr.
    SampleConfig {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_TRIES)]
        max_tries: u64,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Skip the disjoint edge pair requirement.
        #[arg(long)]
        no_pair: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write one of the fixed building blocks.
    Gadget {
        #[arg(long)]
        name: String,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Link classes of the ℓ = 5 catalog, or of the vertices of a graph.
    ClassifyLinks {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        enumerate: bool,
        file: Option<PathBuf>,
    },
}

/// A failed run: exit code and message.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SamplerExhausted { .. } => EXIT_SAMPLER,
            _ => EXIT_ARG,
        };
        Fail(code, e.to_string())
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Fail(EXIT_ARG, e.to_string())
    }
}

type Run = Result<u8, Fail>;

struct Ctx {
    global: Global,
}

impl Ctx {
    fn say(&self, line: &str) {
        if !self.global.quiet {
            println!("{line}");
        }
    }

    /// Summary line; to stderr when stdout carries the artifact.
    fn summary(&self, line: &str, artifact_on_stdout: bool) {
        if self.global.quiet {
            return;
        }
        if artifact_on_stdout {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    }

    fn graph_format(&self, output: Option<&Path>) -> Format {
        match (self.global.format, output) {
            (Some(FormatArg::H3), _) => Format::H3,
            (Some(FormatArg::Json), _) => Format::Json,
            (None, Some(p)) => Format::from_path(p),
            (None, None) => Format::H3,
        }
    }

    fn emit_graph(&self, g: &Hypergraph3, output: Option<&Path>) -> Result<(), Fail> {
        let fmt = self.graph_format(output);
        match output {
            Some(p) => format::write_file(p, g, fmt)?,
            None => print!("{}", format::render(g, fmt)),
        }
        Ok(())
    }

    fn emit_text(&self, text: &str, output: Option<&Path>) -> Result<(), Fail> {
        match output {
            Some(p) => format::write_atomic(p, text.as_bytes())?,
            None => println!("{text}"),
        }
        Ok(())
    }

    fn report(&self, value: &impl Serialize) -> Result<(), Fail> {
        if let Some(p) = &self.global.report {
            let mut s = serde_json::to_string_pretty(value)?;
            s.push('\n');
            format::write_atomic(p, s.as_bytes())?;
        }
        Ok(())
    }
}

fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::InfeasibleByTheorem { .. } => EXIT_INFEASIBLE,
        Verdict::OutOfRange { .. } => EXIT_OUT_OF_RANGE,
    }
}

fn read_graph(path: &Path) -> Result<Hypergraph3, Fail> {
    format::read_file(path).map_err(|e| Fail(EXIT_ARG, format!("{}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn build(ctx: &Ctx, n: usize, ell: usize, m: usize, n0: Option<usize>, mode: Option<ModeArg>, max_tries: Option<u64>, output: Option<&Path>) -> Run {
    let seed = ctx.global.seed;
    let mut opts = BuildOptions {
        n0,
        ..BuildOptions::default()
    };
    if let Some(mode) = mode {
        opts.mode = Some(mode.into());
        opts.max_tries = max_tries.unwrap_or(match mode {
            ModeArg::Rejection => DEFAULT_MAX_TRIES,
            ModeArg::Repair => opts.repair_tries,
        });
    } else if let Some(t) = max_tries {
        opts.max_tries = t;
    }
    let w = match build_spectrum_witness(n, ell, m, seed, &opts)? {
        SpectrumOutcome::Witness(w) => w,
        SpectrumOutcome::Infeasible(v) => {
            let kind = match v {
                Verdict::InfeasibleByTheorem { .. } => "infeasible by theorem",
                Verdict::OutOfRange { .. } => "out of range",
            };
            ctx.say(&format!("n={n} ell={ell} m={m} seed={seed}: {kind}: {}", v.reason()));
            ctx.report(&json!({ "n": n, "ell": ell, "m": m, "seed": seed, "verdict": v }))?;
            return Ok(verdict_code(&v));
        }
    };
    let verify = is_saturated(&w.graph, ell);
    ctx.emit_graph(&w.graph, output)?;
    ctx.summary(
        &format!(
            "n={n} ell={ell} m={m} seed={seed}: built via {}; saturated={}",
            w.provenance, verify.is_saturated
        ),
        output.is_none(),
    );
    ctx.report(&json!({
        "witness": &*w,
        "verify": {
            "is_free": verify.is_free,
            "is_saturated": verify.is_saturated,
            "counterexample": verify.counterexample,
        },
    }))?;
    Ok(verify.exit_code() as u8)
}

fn verify(ctx: &Ctx, ell: usize, file: &Path) -> Run {
    if ell == 0 {
        return Err(Fail(EXIT_ARG, "--ell must be positive".into()));
    }
    let g = read_graph(file)?;
    let r = is_saturated(&g, ell);
    let status = if r.is_saturated {
        "saturated".to_string()
    } else if r.is_free {
        format!("free, not saturated; counterexample {}", serde_json::to_string(&r.counterexample)?)
    } else {
        format!("not free; counterexample {}", serde_json::to_string(&r.counterexample)?)
    };
    ctx.say(&format!(
        "{}: n={} m={} ell={ell}: {status}",
        file.display(),
        g.vertex_count(),
        g.edge_count()
    ));
    ctx.report(&r)?;
    Ok(r.exit_code() as u8)
}

#[allow(clippy::too_many_arguments)]
fn spectrum(ctx: &Ctx, theory: bool, n: usize, ell: usize, n0: Option<usize>, allow_n7: bool, shards: usize, shard: usize, output: Option<&Path>) -> Run {
    if theory {
        let t = theory_spectrum(n, ell, n0)?;
        let mut lines = vec![format!(
            "n={n} ell={ell}: sat={} ex={}{}",
            t.sat,
            t.ex,
            if t.ex_exact { "" } else { " (upper bound)" }
        )];
        for r in &t.ranges {
            lines.push(format!("  [{}, {}]  {}", r.lo, r.hi, r.provenance));
        }
        if let (Some(lo), Some(hi)) = (t.infeasible.first(), t.infeasible.last()) {
            lines.push(format!("  infeasible: {lo}..={hi}"));
        }
        for c in &t.caveats {
            lines.push(format!("  caveat: {c}"));
        }
        ctx.emit_text(&lines.join("\n"), output)?;
        ctx.report(&t)?;
        return Ok(0);
    }
    let opts = ExhaustiveOptions {
        allow_n7,
        shards,
        shard,
    };
    let r = exhaustive_spectrum(n, ell, &opts)?;
    ctx.emit_text(&serde_json::to_string_pretty(&r)?, output)?;
    ctx.summary(
        &format!("n={n} ell={ell}: realizable {:?} over {} free graphs", r.realizable, r.free_graphs),
        output.is_none(),
    );
    ctx.report(&r)?;
    Ok(0)
}

fn progress_stderr(s: &SampleStats) {
    eprintln!("{}", serde_json::to_string(&json!({ "progress": s })).unwrap_or_default());
}

#[allow(clippy::too_many_arguments)]
fn sample_config(ctx: &Ctx, n: usize, ell: usize, k: usize, max_tries: u64, mode: Option<ModeArg>, no_pair: bool, output: Option<&Path>) -> Run {
    let spec = degree_spec(n, ell, k)?;
    let mut o = SampleOptions::for_ell(ell).max_tries(max_tries).require_disjoint_pair(!no_pair);
    if let Some(m) = mode {
        o.mode = m.into();
    }
    if !ctx.global.quiet {
        o.progress = Some(progress_stderr);
    }
    let (g, stats) = match sample_linear_with(&spec, ctx.global.seed, &o) {
        Ok(x) => x,
        Err(Error::SamplerExhausted { stats }) => {
            eprintln!("{}", serde_json::to_string(&stats)?);
            ctx.report(&json!({ "spec": spec, "stats": stats, "exhausted": true }))?;
            return Err(Fail(EXIT_SAMPLER, format!("sampler gave up after {} tries (seed {})", stats.tries, stats.seed)));
        }
        Err(e) => return Err(e.into()),
    };
    eprintln!("{}", serde_json::to_string(&stats)?);
    ctx.emit_graph(&g, output)?;
    ctx.summary(
        &format!(
            "n={n} ell={ell} k={k} seed={}: {} edges after {} tries ({:?})",
            stats.seed,
            g.edge_count(),
            stats.tries,
            stats.mode
        ),
        output.is_none(),
    );
    ctx.report(&json!({ "spec": spec, "stats": stats }))?;
    Ok(0)
}

fn gadget(ctx: &Ctx, name: &str, ell: Option<usize>, n: Option<usize>, output: Option<&Path>) -> Run {
    let id = GadgetId::from_name(name, ell, n)?;
    let g = id.build(ctx.global.seed)?;
    ctx.emit_graph(&g, output)?;
    ctx.summary(
        &format!(
            "{name}: n={} m={} (saturated for ell={}) seed={}",
            g.vertex_count(),
            g.edge_count(),
            id.ell(),
            ctx.global.seed
        ),
        output.is_none(),
    );
    ctx.report(&json!({ "name": name, "ell": id.ell(), "n": g.vertex_count(), "m": g.edge_count(), "seed": ctx.global.seed }))?;
    Ok(0)
}

fn classify_links(ctx: &Ctx, file: Option<&Path>) -> Run {
    match file {
        None => {
            let r = enumerate_link_catalog(8, 6);
            print!("{}", r.table());
            ctx.summary(&format!("{} classes enumerated, {} outside the catalog", r.classes, r.extra.len()), true);
            ctx.report(&r)?;
        }
        Some(path) => {
            let g = read_graph(path)?;
            let mut rows = Vec::new();
            for v in 0..g.vertex_count() {
                let l = link::link(&g, v)?;
                if l.vertex_count() >= 5 {
                    let class = classify_link_5(&g, v)?;
                    println!("{v} {class}");
                    rows.push(json!({ "vertex": v, "neighbors": l.vertex_count(), "class": class }));
                }
            }
            ctx.report(&rows)?;
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Run {
    let ctx = Ctx { global: cli.global };
    match cli.command {
        Command::Build {
            n,
            ell,
            m,
            n0,
            mode,
            max_tries,
            output,
        } => build(&ctx, n, ell, m, n0, mode, max_tries, output.as_deref()),
        Command::Verify { ell, file } => verify(&ctx, ell, &file),
        Command::Spectrum {
            theory,
            exhaustive: _,
            n,
            ell,
            n0,
            allow_n7,
            shards,
            shard,
            output,
        } => spectrum(&ctx, theory, n, ell, n0, allow_n7, shards, shard, output.as_deref()),
        Command::SampleConfig {
            n,
            ell,
            k,
            max_tries,
            mode,
            no_pair,
            output,
        } => sample_config(&ctx, n, ell, k, max_tries, mode, no_pair, output.as_deref()),
        Command::Gadget { name, ell, n, output } => gadget(&ctx, &name, ell, n, output.as_deref()),
        Command::ClassifyLinks { enumerate: _, file } => classify_links(&ctx, file.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ARG } else { 0 });
        }
    };
    let code = match run(cli) {
        Ok(c) => c,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code)
}
