use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qcanon_cli::report::Battery;
use qcanon_cli::{
    cmd_basis, cmd_reparam, cmd_verify, DiskCache, Report, RunConfig, Suite, WordSel,
};
use qcanon_core::algebra::{Algebra, Caps};
use qcanon_core::tropical::ParamVector;
use qcanon_core::weyl::Word;
use qcanon_core::Error;

/// Exact canonical bases of U_q(sl_{n+1})^+ and the verification battery.
#[derive(Parser)]
#[command(name = "qcanon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and validate every transition table up to the bound.
    Basis(Common),
    /// Run verification suites and write a JSON report.
    Verify {
        /// analogue, pbwstring, fan, graded, main, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Reparametrize a Lusztig parameter between two reduced words.
    Reparam {
        /// Source word, comma-separated letters.
        #[arg(long)]
        from: String,
        /// Target word, comma-separated letters.
        #[arg(long)]
        to: String,
        /// Parameter over the source word, comma-separated.
        #[arg(long)]
        input: String,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct Common {
    /// Rank n of A_n. `verify` runs ranks 2 and 3 when omitted; `basis` uses 2.
    #[arg(long)]
    rank: Option<usize>,
    /// Largest weight height; defaults to the cap of the rank.
    #[arg(long)]
    bound: Option<usize>,
    /// `all`, comma-separated letters, or `adapted:EDGELIST` (one lr/rl per edge).
    #[arg(long, default_value = "all")]
    word: String,
    /// Directory of the persistent table cache.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = qcanon_cli::config::DEFAULT_SEED)]
    seed: u64,
    /// Sampled cases per suite from rank 3 on.
    #[arg(long, default_value_t = qcanon_cli::config::DEFAULT_SAMPLES)]
    samples: usize,
    /// Enumerate every case at every rank.
    #[arg(long)]
    exhaustive: bool,
}

enum Failure {
    Usage(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Assertion(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl Common {
    fn config(&self, rank: usize) -> Result<RunConfig, Failure> {
        let mut cfg = RunConfig::new(rank);
        if let Some(b) = self.bound {
            cfg.bound = b;
        }
        cfg.word = self.word.parse::<WordSel>()?;
        cfg.seed = self.seed;
        cfg.samples = if self.exhaustive || rank < 3 {
            None
        } else {
            Some(self.samples)
        };
        cfg.cache_dir = self.cache_dir.clone();
        cfg.report_path = self.report.clone();
        Ok(cfg)
    }
}

fn algebra(cache_dir: Option<&PathBuf>) -> Result<(Algebra, Option<DiskCache>), Failure> {
    match cache_dir {
        None => Ok((Algebra::default(), None)),
        Some(d) => {
            let cache = DiskCache::open(d)
                .map_err(|e| Failure::Usage(format!("cache directory {}: {e}", d.display())))?;
            Ok((
                Algebra::with_store(Caps::default(), Box::new(cache.clone())),
                Some(cache),
            ))
        }
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn summarize(r: &Report) {
    eprintln!(
        "{} rank {}: {} cases, {} passed, {} failed",
        r.suite, r.config["rank"], r.summary.cases, r.summary.passed, r.summary.failed
    );
}

fn cache_line(alg: &Algebra, cache: &Option<DiskCache>) {
    if let Some(c) = cache {
        eprintln!(
            "tables: {} built, {} loaded from {} ({} corrupt files recomputed)",
            alg.tables_built(),
            alg.tables_loaded(),
            c.dir().display(),
            c.corrupt()
        );
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("bad integer {t:?}")))
        })
        .collect()
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    let letters: Vec<u8> = parse_ints(s)?
        .into_iter()
        .map(|x| u8::try_from(x).map_err(|_| Failure::Usage(format!("bad letter {x}"))))
        .collect::<Result<_, _>>()?;
    // the rank of a word for w0 is determined by its length n(n+1)/2
    let rank = (1..=8)
        .find(|n| n * (n + 1) / 2 == letters.len())
        .ok_or_else(|| {
            Failure::Usage(format!(
                "{} letters is not the length of w0 in any rank",
                letters.len()
            ))
        })?;
    Ok(Word::w0(rank, letters)?)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Basis(common) => {
            let cfg = common.config(common.rank.unwrap_or(2))?;
            let (alg, cache) = algebra(cfg.cache_dir.as_ref())?;
            let report = cmd_basis(&alg, &cfg)?;
            summarize(&report);
            cache_line(&alg, &cache);
            emit(&report.to_json(), cfg.report_path.as_ref())?;
            Ok(report.passed())
        }
        Command::Verify { suite, common } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let ranks = match common.rank {
                Some(r) => vec![r],
                None => vec![2, 3],
            };
            let (alg, cache) = algebra(common.cache_dir.as_ref())?;
            let mut reports = Vec::new();
            for s in suites {
                for &r in &ranks {
                    let report = cmd_verify(&alg, s, &common.config(r)?)?;
                    summarize(&report);
                    reports.push(report);
                }
            }
            cache_line(&alg, &cache);
            let battery = Battery::new(reports);
            emit(&battery.to_json(), common.report.as_ref())?;
            Ok(battery.passed())
        }
        Command::Reparam {
            from,
            to,
            input,
            cache_dir,
        } => {
            let from = parse_word(&from)?;
            let to = parse_word(&to)?;
            let m = ParamVector(parse_ints(&input)?);
            let (alg, _) = algebra(cache_dir.as_ref())?;
            let out = cmd_reparam(&alg, &from, &to, &m)?;
            emit(
                &serde_json::to_string_pretty(&out).expect("output serializes"),
                None,
            )?;
            Ok(out.cross_check.is_none_or(|c| c.agrees))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Assertion(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
