//! `modfusion` command-line frontend.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input,
//! 3 when a computational cap is exceeded.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modfusion::admissible::{self, AdmissibleLevel};
use modfusion::cache::Cache;
use modfusion::walg::{self, WLevel};
use modfusion::{build_root_system, coset, wzw, Error, Family, Limits, Report, RootSystem, Weight};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "modfusion", version, about = "Exact modular data and fusion rules at admissible levels")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Directory for cached Weyl groups and weight lists.
    #[arg(long, env = "MODFUSION_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,

    /// Largest Weyl group to enumerate.
    #[arg(long, default_value_t = Limits::default().weyl_max, global = true)]
    weyl_max: usize,

    /// Largest list of simple objects to build.
    #[arg(long, default_value_t = Limits::default().simples_max, global = true)]
    simples_max: usize,

    /// Bits of precision for floating-point display (at most 53).
    #[arg(long, default_value_t = 53, global = true)]
    precision: u32,
}

#[derive(Args, Debug, Clone)]
struct Target {
    /// Lie type: one of A B C D E F G.
    family: Family,
    rank: usize,
    #[arg(long)]
    u: i64,
    #[arg(long, default_value_t = 1)]
    v: i64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    /// Ordinary modules of the affine algebra.
    Ordinary,
    /// Simple modules of the principal W-algebra.
    W,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the simple objects.
    Simples {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Kind::Ordinary)]
        kind: Kind,
    },
    /// Normalized S-matrix ratios S_{xy}/S_{0y}.
    SMatrix {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Kind::Ordinary)]
        kind: Kind,
    },
    /// Fusion rules of the ordinary modules.
    Fusion {
        #[command(flatten)]
        target: Target,
    },
    /// Fusion rules of the W-algebra.
    WFusion {
        #[command(flatten)]
        target: Target,
    },
    /// Decompose L(μ) ⊗ L(ν) into coset modules.
    CosetDecompose {
        #[command(flatten)]
        target: Target,
        /// Dynkin labels of μ, comma separated.
        #[arg(long, value_parser = parse_weight)]
        mu: Weight,
        /// Dynkin labels of ν (level 1), comma separated.
        #[arg(long, value_parser = parse_weight)]
        nu: Weight,
    },
    /// Run one verification and print its report.
    Verify {
        theorem: Theorem,
        #[command(flatten)]
        target: Target,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Theorem {
    HopfVerlinde,
    Galois,
    Modularity,
    WFactorization,
    WRing,
    Centralizer,
    TwistBalance,
    CosetPartition,
    WzwOracle,
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    let labels: Result<Vec<i64>, _> = s
        .split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect();
    match labels {
        Ok(l) if !l.is_empty() => Ok(Weight::new(l)),
        _ => Err(format!("expected comma-separated integers, got {s:?}")),
    }
}

/// Everything a subcommand needs besides its own arguments.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub cache: Option<Cache>,
    pub limits: Limits,
    pub digits: usize,
}

impl RunConfig {
    fn root_system(&self, t: &Target) -> modfusion::Result<RootSystem> {
        let rs = build_root_system(t.family, t.rank)?.with_limits(self.limits);
        if let Some(cache) = &self.cache {
            if let Err(e) = cache.weyl_group(&rs) {
                if e.is_cap() {
                    return Err(e);
                }
                eprintln!("warning: cache at {} unusable: {e}", cache.dir().display());
            }
        }
        Ok(rs)
    }
}

enum Outcome {
    Done(String),
    Verified(String, bool),
}

fn run(cli: &Cli, cfg: &RunConfig) -> modfusion::Result<Outcome> {
    let fmt = cfg.format;
    match &cli.command {
        Command::Simples { target, kind } => {
            let rs = cfg.root_system(target)?;
            Ok(Outcome::Done(match kind {
                Kind::Ordinary => {
                    let l = AdmissibleLevel::new(rs, target.u, target.v)?;
                    output::simples(fmt, &l, &admissible::ordinary_simples(&l)?)
                }
                Kind::W => {
                    let k = WLevel::new(rs, target.u, target.v)?;
                    let labels = walg::w_labels(&k)?;
                    for w in &labels.warnings {
                        eprintln!("warning: {w}");
                    }
                    output::w_simples(fmt, &k, &labels)
                }
            }))
        }
        Command::SMatrix { target, kind } => {
            let rs = cfg.root_system(target)?;
            Ok(Outcome::Done(match kind {
                Kind::Ordinary => {
                    let l = AdmissibleLevel::new(rs, target.u, target.v)?;
                    let labels = admissible::ordinary_simples(&l)?;
                    let m = admissible::hopf_matrix(&l)?;
                    output::matrix(fmt, &l.rs().to_string(), target.u, target.v, &labels, &m, cfg.digits)
                }
                Kind::W => {
                    let k = WLevel::new(rs, target.u, target.v)?;
                    let labels = walg::w_labels(&k)?.labels();
                    let m = walg::w_s_ratio_matrix(&k, &labels)?;
                    output::matrix(fmt, &format!("W({})", k.rs()), target.u, target.v, &labels, &m, cfg.digits)
                }
            }))
        }
        Command::Fusion { target } => {
            let l = AdmissibleLevel::new(cfg.root_system(target)?, target.u, target.v)?;
            Ok(Outcome::Done(output::fusion(fmt, &admissible::ordinary_fusion(&l)?)))
        }
        Command::WFusion { target } => {
            let k = WLevel::new(cfg.root_system(target)?, target.u, target.v)?;
            Ok(Outcome::Done(output::fusion(fmt, &walg::w_fusion(&k)?)))
        }
        Command::CosetDecompose { target, mu, nu } => {
            let l = AdmissibleLevel::new(cfg.root_system(target)?, target.u, target.v)?;
            Ok(Outcome::Done(output::coset(fmt, &coset::gko_decompose(&l, mu, nu)?)))
        }
        Command::Verify { theorem, target } => {
            let report = verify(cfg, *theorem, target)?;
            let pass = report.pass;
            Ok(Outcome::Verified(output::report(fmt, &report, cfg.digits), pass))
        }
    }
}

fn verify(cfg: &RunConfig, theorem: Theorem, t: &Target) -> modfusion::Result<Report> {
    let rs = cfg.root_system(t)?;
    let adm = || AdmissibleLevel::new(rs.clone(), t.u, t.v);
    let wl = || WLevel::new(rs.clone(), t.u, t.v);
    match theorem {
        Theorem::HopfVerlinde => admissible::verify_verlinde_ordinary(&adm()?),
        Theorem::Galois => admissible::verify_galois_twist(&adm()?),
        Theorem::Modularity => admissible::modularity_report(&adm()?),
        Theorem::WFactorization => walg::verify_factorization(&wl()?),
        Theorem::WRing => walg::verify_w_ring(&wl()?),
        Theorem::Centralizer => walg::verify_centralizer(&wl()?),
        Theorem::TwistBalance => coset::verify_twist_balance(&wl()?),
        Theorem::CosetPartition => coset::verify_partition(&adm()?),
        Theorem::WzwOracle => {
            if t.v != 1 {
                return Err(Error::InvalidLevel(format!("wzw-oracle needs v = 1, got {}", t.v)));
            }
            let m = t.u - rs.dual_coxeter_number();
            if m < 0 {
                return Err(Error::InvalidLevel(format!("u must be at least h∨ = {}", rs.dual_coxeter_number())));
            }
            wzw::wzw_oracle_report(&rs, m)
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    if e.is_cap() {
        3
    } else if matches!(e, Error::NonIntegerFusion(_) | Error::Singular | Error::ZeroDenominator(_)) {
        1
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        format: cli.format,
        cache: cli.cache_dir.clone().map(Cache::new),
        limits: Limits {
            weyl_max: cli.weyl_max,
            simples_max: cli.simples_max,
        },
        digits: output::digits_for_bits(cli.precision),
    };
    match run(&cli, &cfg) {
        Ok(Outcome::Done(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verified(text, pass)) => {
            print!("{text}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
