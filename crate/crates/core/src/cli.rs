//! Command-line adapter. Every verb forwards to one library call and prints
//! the answer either as text or as line-delimited JSON records.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
//! 3 resource bound exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::affine::{self, Verdict};
use crate::error::{Error, Result};
use crate::field::{Embedding, FieldDescriptor};
use crate::finring::{
    enumerate_subrings, make_dual, make_gf, make_product, maximal_subrings, saturated_chains, ElementSet,
    FiniteRing, RingBounds,
};
use crate::suites::{self, Outcome, Status, Suite, SuiteConfig};
use crate::syntax::{self, Descriptor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "steinitz", version, about = "Maximal subrings of absolutely algebraic fields")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// One JSON object per line.
    Records,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a descriptor and print its canonical form.
    Parse { desc: String },
    /// Number of maximal subrings.
    Rgmax {
        desc: String,
        #[arg(long)]
        list: bool,
    },
    /// The largest subfield that is not submaximal, and the degree over it.
    Lfield { desc: String },
    /// `[E : F]` as a Steinitz number.
    Degree { sub: String, sup: String },
    /// Saturated chains of maximal subrings down to L(E).
    Chains {
        desc: String,
        #[arg(long)]
        enumerate: bool,
    },
    /// Number of fields between F and E.
    Intermediate { sub: String, sup: String },
    /// A maximal subring of E containing F, or the prime that blocks one.
    Embed { sub: String, sup: String },
    /// Verdict for an affine algebra or variety descriptor.
    Affine { desc: String },
    /// Build a finite ring and inspect its subring lattice.
    Ring(RingArgs),
    /// Run a verification suite against the brute-force oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingKind {
    Gf,
    Dual,
    Product,
}

#[derive(Debug, Args)]
struct RingArgs {
    kind: RingKind,
    #[arg(short)]
    p: u64,
    #[arg(short)]
    n: u32,
    #[arg(long, conflicts_with_all = ["maximal", "chains"])]
    lattice: bool,
    #[arg(long, conflicts_with = "chains")]
    maximal: bool,
    #[arg(long)]
    chains: bool,
    #[arg(long, default_value_t = RingBounds::default().max_size)]
    max_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Gf,
    Dual,
    Product,
    Chains,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: SuiteArg,
    #[arg(long, default_value_t = suites::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = RingBounds::default().max_size)]
    max_size: usize,
    /// Random descriptors for the chains suite.
    #[arg(long, default_value_t = 100)]
    samples: usize,
}

/// Collects output lines in either format.
struct Printer {
    format: Format,
    lines: Vec<String>,
}

impl Printer {
    fn emit(&mut self, text: String, record: Value) {
        self.lines.push(match self.format {
            Format::Text => text,
            Format::Records => record.to_string(),
        });
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BoundExceeded { .. } | Error::LatticeOverflow(_) | Error::ChainLimit(_) | Error::CountOverflow => {
            EXIT_BOUND
        }
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut printer = Printer { format: cli.format, lines: Vec::new() };
    let code = match dispatch(cli.command, &mut printer) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    };
    for line in &printer.lines {
        let _ = writeln!(out, "{line}");
    }
    code
}

fn field(s: &str) -> Result<FieldDescriptor> {
    syntax::parse_field(s)
}

fn dispatch(command: Command, pr: &mut Printer) -> Result<i32> {
    match command {
        Command::Parse { desc } => match syntax::parse_descriptor(&desc)? {
            Descriptor::Field(f) => pr.emit(f.to_string(), json!({"record": "field", "value": f.to_string()})),
            Descriptor::Affine(a) => pr.emit(a.to_string(), json!({"record": "affine", "value": a.to_string()})),
        },
        Command::Rgmax { desc, list } => {
            let f = field(&desc)?;
            let count = f.rgmax_count();
            pr.emit(format!("rgmax {count}"), json!({"record": "rgmax", "field": f.to_string(), "count": count.to_string()}));
            if list {
                for m in f.rgmax_list()? {
                    pr.emit(format!("  {m}"), json!({"record": "maximal", "field": m.to_string()}));
                }
            }
        }
        Command::Lfield { desc } => {
            let f = field(&desc)?;
            let l = f.largest_nonsubmaximal();
            let d = f.degree_over_largest_nonsubmaximal();
            pr.emit(
                format!("L = {l}\n[E:L] = {d}"),
                json!({"record": "lfield", "field": f.to_string(), "lfield": l.to_string(), "degree": d.to_string()}),
            );
        }
        Command::Degree { sub, sup } => {
            let (sub, sup) = (field(&sub)?, field(&sup)?);
            let d = sup.degree(&sub)?;
            let natural = d.is_natural();
            pr.emit(
                format!("degree {d}{}", if natural { "" } else { " (infinite)" }),
                json!({"record": "degree", "degree": d.to_string(), "finite": natural}),
            );
        }
        Command::Chains { desc, enumerate } => {
            let f = field(&desc)?;
            let report = f.chain_stats(enumerate)?;
            pr.emit(
                format!("length {}; chains {}; terminus {}", report.length, report.chain_count, report.terminus),
                json!({"record": "chains", "length": report.length, "count": report.chain_count, "terminus": report.terminus.to_string()}),
            );
            for chain in report.chains.unwrap_or_default() {
                let steps: Vec<String> = chain.iter().map(ToString::to_string).collect();
                pr.emit(format!("  {}", steps.join(" > ")), json!({"record": "chain", "steps": steps}));
            }
        }
        Command::Intermediate { sub, sup } => {
            let (sub, sup) = (field(&sub)?, field(&sup)?);
            let n = sup.intermediate_count(&sub)?;
            pr.emit(format!("intermediate {n}"), json!({"record": "intermediate", "count": n.to_string()}));
        }
        Command::Embed { sub, sup } => {
            let (sub, sup) = (field(&sub)?, field(&sup)?);
            match sup.embed_in_maximal(&sub)? {
                Embedding::Maximal { subring, prime } => pr.emit(
                    format!("maximal {subring} (decrement {prime})"),
                    json!({"record": "embed", "maximal": subring.to_string(), "prime": prime}),
                ),
                Embedding::Blocked { witness } => pr.emit(
                    format!("blocked by {witness}"),
                    json!({"record": "embed", "blocked": witness}),
                ),
            }
        }
        Command::Affine { desc } => {
            let verdict = if desc.trim_start().starts_with("variety:") {
                let (base, points) = syntax::parse_variety(&desc)?;
                affine::decide_variety(&base, points)?
            } else {
                affine::decide(&syntax::parse_affine(&desc)?)?
            };
            pr.emit(verdict.to_string(), verdict_record(&verdict));
        }
        Command::Ring(args) => ring(args, pr)?,
        Command::Verify(args) => return Ok(verify(args, pr)),
    }
    Ok(EXIT_OK)
}

fn verdict_record(v: &Verdict) -> Value {
    match v {
        Verdict::FinitelyMany { field, count } => json!({
            "record": "verdict",
            "verdict": "finitely-many",
            "field": field.as_ref().map(ToString::to_string),
            "count": count.map(|c| c.to_string()),
        }),
        Verdict::InfinitelyMany(r) => json!({"record": "verdict", "verdict": "infinitely-many", "reason": r.to_string()}),
        Verdict::NecessaryConditionsHold => json!({"record": "verdict", "verdict": "necessary-conditions-hold"}),
        Verdict::Violated(w) => json!({"record": "verdict", "verdict": "violated", "witness": w.to_string()}),
    }
}

fn build_ring(kind: RingKind, p: u64, n: u32, bounds: RingBounds) -> Result<FiniteRing> {
    let loose = RingBounds { max_size: RingBounds::HARD_MAX_SIZE, ..bounds };
    match kind {
        RingKind::Gf => make_gf(p, n, bounds),
        RingKind::Dual => make_dual(&make_gf(p, n, loose)?, bounds),
        RingKind::Product => {
            let k = make_gf(p, n, loose)?;
            make_product(&k, &k, bounds)
        }
    }
}

fn labels(ring: &FiniteRing, set: &ElementSet) -> String {
    format!("{{{}}}", ring.set_labels(set).join(", "))
}

fn ring(args: RingArgs, pr: &mut Printer) -> Result<()> {
    let bounds = RingBounds { max_size: args.max_size, ..RingBounds::default() };
    let r = build_ring(args.kind, args.p, args.n, bounds)?;
    pr.emit(
        format!("ring {} of size {}", r.provenance(), r.size()),
        json!({"record": "ring", "ring": r.provenance().to_string(), "size": r.size()}),
    );
    if !(args.lattice || args.maximal || args.chains) {
        return Ok(());
    }
    let lattice = enumerate_subrings(&r, bounds)?;
    if args.lattice {
        for (i, s) in lattice.subrings.iter().enumerate() {
            pr.emit(
                format!("  [{i}] size {} {}", s.len(), labels(&r, s)),
                json!({"record": "subring", "index": i, "size": s.len(), "elements": r.set_labels(s)}),
            );
        }
        for &(lo, hi) in &lattice.covers {
            pr.emit(format!("  [{lo}] < [{hi}]"), json!({"record": "cover", "lower": lo, "upper": hi}));
        }
    }
    if args.maximal {
        for s in maximal_subrings(&lattice) {
            pr.emit(
                format!("  maximal size {} {}", s.len(), labels(&r, &s)),
                json!({"record": "maximal", "size": s.len(), "elements": r.set_labels(&s)}),
            );
        }
    }
    if args.chains {
        let chains = saturated_chains(&lattice, &r);
        for c in &chains.chains {
            let sizes: Vec<usize> = c.iter().map(|&i| lattice.subrings[i].len()).collect();
            let text: Vec<String> = sizes.iter().map(ToString::to_string).collect();
            pr.emit(
                format!("  chain {}", text.join(" > ")),
                json!({"record": "chain", "indices": c, "sizes": sizes}),
            );
        }
        let uniform = match chains.uniform {
            Some(true) => "uniform",
            Some(false) => "not uniform",
            None => "uniformity not claimed",
        };
        pr.emit(
            format!("{} chains, {uniform}", chains.chains.len()),
            json!({"record": "chains", "count": chains.chains.len(), "uniform": chains.uniform}),
        );
    }
    Ok(())
}

fn verify(args: VerifyArgs, pr: &mut Printer) -> i32 {
    let config = SuiteConfig {
        seed: args.seed,
        bounds: RingBounds { max_size: args.max_size, ..RingBounds::default() },
        samples: args.samples,
    };
    let selected: Vec<Suite> = match args.suite {
        SuiteArg::Gf => vec![Suite::Gf],
        SuiteArg::Dual => vec![Suite::Dual],
        SuiteArg::Product => vec![Suite::Product],
        SuiteArg::Chains => vec![Suite::Chains],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut statuses = Vec::new();
    for suite in selected {
        let report = suites::run_suite(suite, &config);
        for inst in &report.instances {
            let verdict = match &inst.outcome {
                Outcome::Match => "match".to_string(),
                Outcome::Mismatch { reason } => format!("MISMATCH: {reason}"),
                Outcome::Skipped { reason } => format!("skipped: {reason}"),
            };
            let mut record = serde_json::to_value(inst).expect("plain data");
            record["record"] = json!("instance");
            record["suite"] = json!(suite);
            let text = match inst.outcome {
                Outcome::Skipped { .. } => format!("{suite} {}: {verdict}", inst.name),
                _ => format!("{suite} {}: predicted {} observed {}: {verdict}", inst.name, inst.predicted, inst.observed),
            };
            pr.emit(text, record);
        }
        let matched = report.count(|o| *o == Outcome::Match);
        let status = report.status();
        pr.emit(
            format!("{suite}: {matched}/{} match", report.instances.len()),
            json!({"record": "summary", "suite": suite, "instances": report.instances.len(), "matched": matched}),
        );
        statuses.push(status);
    }
    // a mismatch takes precedence over a skipped instance
    if statuses.contains(&Status::Mismatch) {
        EXIT_MISMATCH
    } else if statuses.contains(&Status::BoundExceeded) {
        EXIT_BOUND
    } else {
        EXIT_OK
    }
}
