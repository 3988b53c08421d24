//! Command-line front-end: load automata and function automata, decide
//! reducibilities, emit rank reports and certificates, and run the
//! acceptance suite. Exit codes: 0 yes, 1 no, 2 error.

mod dot;
mod files;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wadgelab::automata::{automaton_to_json, Alphabet};
use wadgelab::bourgain::{analyze, m_rank, rank_chain, rank_report};
use wadgelab::realfun::ThresholdPair;
use wadgelab::selfcheck;
use wadgelab::wadge::{
    catalog, decompose, leq_w, m_leq, pair_leq, separate_closed, CatalogFamily, GameMode,
    SetOrPair, SideSpec,
};
use wadgelab::Rat;

use files::{CmpDocument, ComponentCert, LevelCert};

#[derive(Parser)]
#[command(
    name = "wadgelab",
    version,
    about = "reducibility games, ranks and sided types"
)]
struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for independent game solves (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CmpMode {
    Wadge,
    Lipschitz,
    Pair,
    M,
    Mreal,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a reducibility between two inputs.
    Cmp(CmpArgs),
    /// Full rank report of a function automaton.
    Rank(RankArgs),
    /// Sided type of a function automaton.
    Type { file: PathBuf },
    /// Ladder rank of a function automaton.
    Mrank { file: PathBuf },
    /// Replay a stored certificate against sampled inputs.
    Certify(CertifyArgs),
    /// Emit a canonical catalog automaton.
    Catalog(CatalogArgs),
    /// Compute a clopen separator between two disjoint closed sets.
    Separate(SeparateArgs),
    /// Run the acceptance suite.
    Selfcheck,
}

#[derive(Args)]
struct CmpArgs {
    left: PathBuf,
    right: PathBuf,
    #[arg(long, value_enum)]
    mode: CmpMode,
    /// Write the verdict document (with certificate) to a file as well.
    #[arg(long)]
    cert_out: Option<PathBuf>,
    /// Dump the reduction-game arena in DOT (wadge/lipschitz modes).
    #[arg(long)]
    dump_arena: Option<PathBuf>,
}

#[derive(Args)]
struct RankArgs {
    file: PathBuf,
    /// Restrict to the chain of one threshold pair, e.g. --pair 1/3 2/3.
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pair: Option<Vec<String>>,
    /// Dump derivative stages in DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    left: PathBuf,
    right: PathBuf,
    #[arg(long, value_enum)]
    mode: CmpMode,
    /// Certificate document produced by `cmp --cert-out`.
    #[arg(long)]
    cert: PathBuf,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

#[derive(Args)]
struct CatalogArgs {
    /// sigma | pi | delta-jr | delta-ji | e
    #[arg(long)]
    family: String,
    #[arg(long)]
    level: usize,
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SeparateArgs {
    left: PathBuf,
    right: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn level_cap() -> usize {
    std::env::var("WADGE_LAB_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(wadgelab::wadge::DEFAULT_LEVEL_CAP)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Cmp(args) => cmd_cmp(args),
        Command::Rank(args) => cmd_rank(args),
        Command::Type { file } => {
            let f = files::load_function(&file)?;
            let a = analyze(&f).map_err(|e| e.to_string())?;
            emit(&serde_json::json!({ "type": a.sided.name() }).to_string());
            Ok(ExitCode::SUCCESS)
        }
        Command::Mrank { file } => {
            let f = files::load_function(&file)?;
            let a = analyze(&f).map_err(|e| e.to_string())?;
            let rank = m_rank(a.alpha, a.sided).map_err(|e| e.to_string())?;
            emit(&serde_json::json!({ "m_rank": rank }).to_string());
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify(args) => cmd_certify(args, cli.seed),
        Command::Catalog(args) => cmd_catalog(args),
        Command::Separate(args) => cmd_separate(args),
        Command::Selfcheck => cmd_selfcheck(cli.seed),
    }
}

/// Print a line, tolerating a closed pipe on the other end.
fn emit(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn verdict_exit(reducible: bool) -> ExitCode {
    if reducible {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_cmp(args: CmpArgs) -> Result<ExitCode, String> {
    let doc = match args.mode {
        CmpMode::Wadge | CmpMode::Lipschitz => {
            let a = files::load_parity(&args.left)?;
            let b = files::load_parity(&args.right)?;
            let mode = if args.mode == CmpMode::Wadge {
                GameMode::Wadge
            } else {
                GameMode::Lipschitz
            };
            if let Some(path) = &args.dump_arena {
                let fa = SideSpec::Set(&a).tracker().map_err(|e| e.to_string())?;
                let ga = SideSpec::Set(&b).tracker().map_err(|e| e.to_string())?;
                let game = wadgelab::wadge::build_reduction_game(&fa, &ga, mode);
                std::fs::write(path, game.arena.to_dot()).map_err(|e| e.to_string())?;
            }
            let out = leq_w(&a, &b, mode).map_err(|e| e.to_string())?;
            CmpDocument {
                verdict: out.reducible,
                mode: mode_name(args.mode).into(),
                strategy: Some(out.witness),
                components: None,
                levels: None,
            }
        }
        CmpMode::Pair => {
            let p = files::load_pair(&args.left)?;
            let q = files::load_pair(&args.right)?;
            let out = pair_leq(&p, &q).map_err(|e| e.to_string())?;
            CmpDocument {
                verdict: out.reducible,
                mode: "pair".into(),
                strategy: Some(out.witness),
                components: None,
                levels: None,
            }
        }
        CmpMode::M => {
            let a = files::load_parity(&args.left)?;
            let b = files::load_parity(&args.right)?;
            let fam_a = decompose(&SetOrPair::Set(a));
            let fam_b = decompose(&SetOrPair::Set(b));
            let out = m_leq(&fam_a, &fam_b).map_err(|e| e.to_string())?;
            CmpDocument {
                verdict: out.holds,
                mode: "m".into(),
                strategy: None,
                components: Some(
                    out.witnesses
                        .into_iter()
                        .map(|(source, target, strategy)| ComponentCert {
                            source,
                            target,
                            strategy,
                        })
                        .collect(),
                ),
                levels: None,
            }
        }
        CmpMode::Mreal => {
            let f = files::load_function(&args.left)?;
            let g = files::load_function(&args.right)?;
            let out = wadgelab::realfun::m_reducible(&f, &g).map_err(|e| e.to_string())?;
            CmpDocument {
                verdict: out.reducible,
                mode: "mreal".into(),
                strategy: None,
                components: None,
                levels: Some(
                    out.certificate
                        .into_iter()
                        .map(|(fp, gp, strategy)| LevelCert {
                            f_low: fp.low,
                            f_high: fp.high,
                            g_low: gp.low,
                            g_high: gp.high,
                            strategy,
                        })
                        .collect(),
                ),
            }
        }
    };
    let text = serde_json::to_string(&doc).map_err(|e| e.to_string())?;
    emit(&text);
    if let Some(path) = &args.cert_out {
        std::fs::write(path, &text).map_err(|e| e.to_string())?;
    }
    Ok(verdict_exit(doc.verdict))
}

fn mode_name(mode: CmpMode) -> &'static str {
    match mode {
        CmpMode::Wadge => "wadge",
        CmpMode::Lipschitz => "lipschitz",
        CmpMode::Pair => "pair",
        CmpMode::M => "m",
        CmpMode::Mreal => "mreal",
    }
}

fn cmd_rank(args: RankArgs) -> Result<ExitCode, String> {
    let f = files::load_function(&args.file)?;
    match &args.pair {
        Some(raw) => {
            let low: Rat = raw[0].parse().map_err(|e| format!("{e}"))?;
            let high: Rat = raw[1].parse().map_err(|e| format!("{e}"))?;
            if low >= high {
                return Err("pair needs p < q".into());
            }
            let chain =
                rank_chain(&f, &ThresholdPair::new(low, high)).map_err(|e| e.to_string())?;
            if let Some(path) = &args.dot {
                std::fs::write(path, dot::chain_to_dot(&chain)).map_err(|e| e.to_string())?;
            }
            emit(
                &serde_json::json!({
                    "p": low.to_string(),
                    "q": high.to_string(),
                    "rank": chain.rank(),
                    "stages": chain.stages.len(),
                })
                .to_string(),
            );
        }
        None => {
            let report = rank_report(&f, level_cap()).map_err(|e| e.to_string())?;
            emit(&serde_json::to_string(&report).map_err(|e| e.to_string())?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(args: CertifyArgs, seed: u64) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(&args.cert).map_err(|e| e.to_string())?;
    let doc: CmpDocument = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if !doc.verdict {
        return Err("certificate mismatch: stored verdict is negative".into());
    }
    if doc.mode != mode_name(args.mode) {
        return Err(format!(
            "certificate mismatch: stored mode {} does not match {}",
            doc.mode,
            mode_name(args.mode)
        ));
    }

    let mut violations = 0usize;
    let mut strategies = 0usize;
    match args.mode {
        CmpMode::Wadge | CmpMode::Lipschitz => {
            let a = files::load_parity(&args.left)?;
            let b = files::load_parity(&args.right)?;
            let strategy = doc
                .strategy
                .as_ref()
                .ok_or("certificate mismatch: no strategy")?;
            let lassos = wadgelab::sampling::random_lassos(seed, a.alphabet(), 6, args.samples);
            violations += wadgelab::wadge::certify_witness(
                &SideSpec::Set(&a),
                &SideSpec::Set(&b),
                strategy,
                &lassos,
            )
            .map_err(|e| e.to_string())?;
            strategies = 1;
        }
        CmpMode::Pair => {
            let p = files::load_pair(&args.left)?;
            let q = files::load_pair(&args.right)?;
            let strategy = doc
                .strategy
                .as_ref()
                .ok_or("certificate mismatch: no strategy")?;
            let lassos = wadgelab::sampling::random_lassos(seed, p.alphabet(), 6, args.samples);
            violations += wadgelab::wadge::certify_witness(
                &SideSpec::Pair(&p),
                &SideSpec::Pair(&q),
                strategy,
                &lassos,
            )
            .map_err(|e| e.to_string())?;
            strategies = 1;
        }
        CmpMode::M => {
            let a = files::load_parity(&args.left)?;
            let b = files::load_parity(&args.right)?;
            let fam_a = decompose(&SetOrPair::Set(a));
            let fam_b = decompose(&SetOrPair::Set(b));
            let comps = doc
                .components
                .as_ref()
                .ok_or("certificate mismatch: no component table")?;
            for c in comps {
                let left = fam_a
                    .components
                    .get(c.source)
                    .ok_or("certificate mismatch: source component out of range")?;
                let right = fam_b
                    .components
                    .get(c.target)
                    .ok_or("certificate mismatch: target component out of range")?;
                let lassos =
                    wadgelab::sampling::random_lassos(seed, left.alphabet(), 6, args.samples);
                violations += wadgelab::wadge::certify_witness(
                    &left.spec(),
                    &right.spec(),
                    &c.strategy,
                    &lassos,
                )
                .map_err(|e| e.to_string())?;
                strategies += 1;
            }
        }
        CmpMode::Mreal => {
            let f = files::load_function(&args.left)?;
            let g = files::load_function(&args.right)?;
            let levels = doc
                .levels
                .as_ref()
                .ok_or("certificate mismatch: no level table")?;
            let lassos =
                wadgelab::sampling::random_lassos(seed, f.automaton().alphabet(), 6, args.samples);
            for l in levels {
                violations += wadgelab::wadge::certify_witness(
                    &SideSpec::Level {
                        fun: &f,
                        low: l.f_low,
                        high: l.f_high,
                    },
                    &SideSpec::Level {
                        fun: &g,
                        low: l.g_low,
                        high: l.g_high,
                    },
                    &l.strategy,
                    &lassos,
                )
                .map_err(|e| e.to_string())?;
                strategies += 1;
            }
        }
    }
    emit(
        &serde_json::json!({
            "strategies": strategies,
            "samples": args.samples,
            "violations": violations,
        })
        .to_string(),
    );
    Ok(verdict_exit(violations == 0))
}

fn cmd_catalog(args: CatalogArgs) -> Result<ExitCode, String> {
    let family = match args.family.as_str() {
        "sigma" => CatalogFamily::SigmaComplete,
        "pi" => CatalogFamily::PiComplete,
        "delta-jr" => CatalogFamily::DeltaJr,
        "delta-ji" => CatalogFamily::DeltaJi,
        "e" => CatalogFamily::E,
        other => return Err(format!("unknown family `{other}`")),
    };
    let alphabet = Alphabet::new(args.alphabet).map_err(|e| e.to_string())?;
    let entry = catalog(family, args.level, alphabet, level_cap()).map_err(|e| e.to_string())?;
    let text = automaton_to_json(&entry.automaton);
    match &args.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string())?,
        None => emit(&text),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_separate(args: SeparateArgs) -> Result<ExitCode, String> {
    let a = files::load_parity(&args.left)?;
    let b = files::load_parity(&args.right)?;
    let (clopen, automaton) = separate_closed(&a, &b).map_err(|e| e.to_string())?;
    let cylinders: Vec<String> = clopen
        .cylinders()
        .iter()
        .map(|c| {
            if c.is_empty() {
                "<root>".to_string()
            } else {
                c.iter().map(|x| x.to_string()).collect()
            }
        })
        .collect();
    let text = automaton_to_json(&automaton);
    match &args.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string())?,
        None => emit(&text),
    }
    eprintln!("{}", serde_json::json!({ "cylinders": cylinders }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_selfcheck(seed: u64) -> Result<ExitCode, String> {
    let cfg = selfcheck::Config {
        seed,
        level_cap: level_cap(),
        ..Default::default()
    };
    let reports = selfcheck::run_all(&cfg);
    let mut all = true;
    for r in &reports {
        emit(&r.line());
        all &= r.passed;
    }
    Ok(verdict_exit(all))
}
