//! Command-line frontend for the source-of-primeness library.
//!
//! Exit codes: 0 on success (including verification runs where every check
//! passed or was skipped), 1 when a verification run contains a failed
//! check, 2 on usage, parse, or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use primesource::{
    build_catalog, classify_element, enumerate_ideals, enumerate_prime_ideals, parse_subset,
    prime_radical, primeness_source, resolve_ring_ref, run_battery, s_set,
    semiprimeness_source, BatteryConfig, CheckStatus, ElementProfile, FiniteRing, SourceKind,
    SourceResult, Subset, SubsetPolicy, TheoremId, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "primesource",
    version,
    about = "Source-of-primeness computations on small finite rings",
    long_about = "Computes the sets S_R^a(A), P_R(A), and S_R(A) on exhaustively \
                  validated finite rings, checks the structural theorems about them, \
                  and catalogs all rings on cyclic additive groups.\n\n\
                  Rings are named by expressions like \"Z(6)\", \"N(4)\", \"SZ(4, 2)\", \
                  \"2Z(16)\", \"M(2, Z(2))\", or products \"Z(2) x Z(3)\"; \
                  \"@path/to/ring.json\" loads an explicit-table ring file."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a source set of a subset of a ring
    Compute(ComputeArgs),
    /// Classify elements (idempotents, nilpotents, zero divisors, units)
    Classify(ClassifyArgs),
    /// List ideals, prime ideals, and the prime radical
    Ideals(IdealsArgs),
    /// Verify the structural theorems on a ring or a battery of rings
    Verify(VerifyArgs),
    /// Write the catalog of rings on cyclic additive groups
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Ring expression, or @file.json
    #[arg(long)]
    ring: String,
    /// Subset of the ring: "*" for the whole ring or "{l1, l2, ...}" of labels
    #[arg(long, default_value = "*")]
    subset: String,
    /// Element label a for --kind s (the set S_R^a(A))
    #[arg(long)]
    a: Option<String>,
    /// Which source set: p = P_R(A), s = S_R^a(A), semi = S_R(A)
    #[arg(long, value_enum, default_value_t = KindArg::P)]
    kind: KindArg,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Ring expression, or @file.json
    #[arg(long)]
    ring: String,
    /// Classify only the element with this label
    #[arg(long)]
    element: Option<String>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct IdealsArgs {
    /// Ring expression, or @file.json
    #[arg(long)]
    ring: String,
    /// List only prime ideals
    #[arg(long)]
    prime_only: bool,
    /// Also report the prime radical
    #[arg(long)]
    radical: bool,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Ring expression, or @file.json
    #[arg(long, required_unless_present = "battery", conflicts_with = "battery")]
    ring: Option<String>,
    /// Restrict to these theorem ids (repeatable); only with --ring
    #[arg(long = "theorem", conflicts_with = "battery")]
    theorems: Vec<String>,
    /// Battery config file (JSON: {"rings": [...], "subset_policy": ..., "homs": [...]})
    #[arg(long)]
    battery: Option<PathBuf>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct CatalogArgs {
    /// Catalog every ring on Z_n for n up to this order
    #[arg(long)]
    max_order: usize,
    /// Output path (JSON lines, one ring per line)
    #[arg(long)]
    out: PathBuf,
    /// Drop rings isomorphic to an earlier entry of the same order
    #[arg(long)]
    dedup_iso: bool,
}

#[derive(Args)]
struct FormatArg {
    /// Emit JSON instead of text
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit plain text (the default)
    #[arg(long)]
    text: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    P,
    S,
    Semi,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Ideals(args) => cmd_ideals(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Catalog(args) => cmd_catalog(args),
    }
}

fn load_ring(reference: &str) -> Result<FiniteRing> {
    resolve_ring_ref(reference).map_err(|msg| anyhow!(msg))
}

/// Compact set rendering for text output: `{0,4,8,12}`.
fn compact_set(ring: &FiniteRing, subset: &Subset) -> String {
    format!("{{{}}}", subset.label_vec(ring).join(","))
}

fn element_index(ring: &FiniteRing, label: &str) -> Result<usize> {
    ring.index_of_label(label)
        .ok_or_else(|| anyhow!("no element labeled {label:?} in {}", ring.descriptor()))
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode> {
    let ring = load_ring(&args.ring)?;
    let subset = parse_subset(&args.subset, &ring)
        .with_context(|| format!("invalid --subset {:?}", args.subset))?;

    let (kind, a_index, members) = match args.kind {
        KindArg::P => {
            if args.a.is_some() {
                bail!("--a only applies to --kind s");
            }
            (SourceKind::P, None, primeness_source(&ring, &subset)?)
        }
        KindArg::Semi => {
            if args.a.is_some() {
                bail!("--a only applies to --kind s");
            }
            (SourceKind::Semi, None, semiprimeness_source(&ring, &subset)?)
        }
        KindArg::S => {
            let label = args
                .a
                .as_deref()
                .ok_or_else(|| anyhow!("--kind s needs --a LABEL"))?;
            let a = element_index(&ring, label)?;
            (SourceKind::S, Some(a), s_set(&ring, a, &subset)?)
        }
    };

    if args.format.json {
        let result = SourceResult::new(&ring, kind, a_index, &subset, &members);
        println!("{}", serde_json::to_string_pretty(&result)?);
    } else {
        println!("{}", compact_set(&ring, &members));
    }
    Ok(ExitCode::SUCCESS)
}

fn profile_line(profile: &ElementProfile) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let nilpotency = match profile.nilpotency_index {
        Some(k) => k.to_string(),
        None => "-".to_string(),
    };
    format!(
        "{}: idempotent={} nilpotency_index={} left_zero_divisor={} right_zero_divisor={} unit={} central={}",
        profile.label,
        yes_no(profile.idempotent),
        nilpotency,
        yes_no(profile.left_zero_divisor),
        yes_no(profile.right_zero_divisor),
        yes_no(profile.unit),
        yes_no(profile.central),
    )
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode> {
    let ring = load_ring(&args.ring)?;
    let profiles: Vec<ElementProfile> = match args.element.as_deref() {
        Some(label) => vec![classify_element(&ring, element_index(&ring, label)?)],
        None => ring.elements().map(|x| classify_element(&ring, x)).collect(),
    };
    if args.format.json {
        if profiles.len() == 1 && args.element.is_some() {
            println!("{}", serde_json::to_string_pretty(&profiles[0])?);
        } else {
            println!("{}", serde_json::to_string_pretty(&profiles)?);
        }
    } else {
        for profile in &profiles {
            println!("{}", profile_line(profile));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ideals(args: IdealsArgs) -> Result<ExitCode> {
    let ring = load_ring(&args.ring)?;
    let ideals = if args.prime_only {
        enumerate_prime_ideals(&ring)
    } else {
        enumerate_ideals(&ring)
    };
    let radical = args.radical.then(|| prime_radical(&ring));

    if args.format.json {
        let mut body = serde_json::json!({
            "ring": ring.descriptor(),
            "prime_only": args.prime_only,
            "ideals": ideals.iter().map(|i| i.label_vec(&ring)).collect::<Vec<_>>(),
        });
        if let Some(radical) = &radical {
            body["radical"] = serde_json::json!(radical.label_vec(&ring));
        }
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        for ideal in &ideals {
            println!("{}", compact_set(&ring, ideal));
        }
        if let Some(radical) = &radical {
            println!("radical: {}", compact_set(&ring, radical));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report_text(report: &VerificationReport) {
    println!("== {} ==", report.ring);
    if let Some(error) = &report.error {
        println!("  error: {error}");
        return;
    }
    for entry in &report.entries {
        let mut line = format!("  [{}] {}: {}", entry.status(), entry.theorem, entry.notes);
        if !entry.witnesses.is_empty() {
            line.push_str(&format!(" (witnesses: {})", entry.witnesses.join(", ")));
        }
        println!("{line}");
    }
    println!(
        "  summary: {} pass, {} fail, {} skip",
        report.summary.pass, report.summary.fail, report.summary.skip
    );
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let mut reports = if let Some(path) = &args.battery {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read battery config {}", path.display()))?;
        let config = BatteryConfig::from_json_str(&text)
            .with_context(|| format!("invalid battery config {}", path.display()))?;
        run_battery(&config)
    } else {
        let reference = args.ring.as_deref().expect("clap requires --ring or --battery");
        // Surface ring construction problems as usage errors here; inside a
        // battery they are recorded per ring instead.
        load_ring(reference)?;
        let config = BatteryConfig {
            rings: vec![reference.to_string()],
            subset_policy: SubsetPolicy::Default,
            homs: Vec::new(),
        };
        run_battery(&config)
    };

    if !args.theorems.is_empty() {
        let mut selected: Vec<TheoremId> = Vec::new();
        for name in &args.theorems {
            selected.push(name.parse::<TheoremId>().map_err(|msg| anyhow!(msg))?);
        }
        for report in &mut reports {
            report.entries.retain(|e| selected.contains(&e.theorem));
            report.summary.pass = 0;
            report.summary.fail = 0;
            report.summary.skip = 0;
            for entry in &report.entries {
                match entry.status() {
                    CheckStatus::Pass => report.summary.pass += 1,
                    CheckStatus::Fail => report.summary.fail += 1,
                    CheckStatus::Skip => report.summary.skip += 1,
                }
            }
        }
    }

    if args.format.json {
        if args.battery.is_some() {
            println!("{}", serde_json::to_string_pretty(&reports)?);
        } else {
            println!("{}", serde_json::to_string_pretty(&reports[0])?);
        }
    } else {
        for report in &reports {
            print_report_text(report);
        }
    }

    let failed = reports.iter().any(|r| r.has_failure());
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_catalog(args: CatalogArgs) -> Result<ExitCode> {
    let result = build_catalog(args.max_order, &args.out, args.dedup_iso)
        .map_err(|e| anyhow!("{e}"))?;
    if let Some(note) = &result.dedup_note {
        eprintln!("note: {note}");
    }
    println!("wrote {} entries to {}", result.entries, args.out.display());
    Ok(ExitCode::SUCCESS)
}
