mod config;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use scv_core::integrality::Epsilon;
use scv_core::sweep::{default_guo_points, CcWhich, IdentityName, Sweep};
use scv_core::{Format, Rat, RunReport};

use config::Config;

#[derive(Parser, Debug)]
#[command(
    name = "scv",
    version,
    about = "Exact verification of supercongruences and binomial identities"
)]
struct Cli {
    /// Write the report to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Report format: json, csv or text (default json)
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// key=value file supplying defaults; flags take precedence
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification sweep
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Args, Debug)]
struct PmaxArgs {
    #[arg(long)]
    pmax: Option<u64>,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[arg(long)]
    nmax: Option<u64>,
    #[arg(long)]
    mmax: Option<u32>,
    /// +1, -1 or both
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Rodriguez-Villegas-Mortenson congruences mod p^2 (default pmax 200)
    Rv(PmaxArgs),
    /// Sums to 2p-1 mod p^2 (default pmax 200)
    Lemma2p(PmaxArgs),
    /// Sums of (2k+1) s_k(-a)^2 mod p^4 (default pmax 100)
    SunP4(PmaxArgs),
    /// Guo's double-sum reduction mod p^4 (default pmax 50)
    GuoBb1 {
        #[arg(long)]
        pmax: Option<u64>,
        /// Rational point a/b; repeatable
        #[arg(long = "x", allow_hyphen_values = true)]
        xs: Vec<String>,
    },
    /// Auxiliary congruences of the mod p^4 proof (default pmax 50)
    Cc {
        #[arg(long)]
        which: Option<CcWhich>,
        #[arg(long)]
        pmax: Option<u64>,
    },
    /// Exact binomial and polynomial identities
    Identity {
        #[arg(long)]
        name: Option<IdentityName>,
        /// Upper bound of the main swept parameter (per-identity default)
        #[arg(long)]
        max: Option<u64>,
        /// n range for the bb4 sweeps (default 25)
        #[arg(long)]
        nmax: Option<u64>,
    },
    /// Integer-valuedness via the Newton criterion (defaults nmax 10, mmax 3)
    Integrality(GridArgs),
    /// Schmidt power-sum divisibility (defaults nmax 6, mmax 3)
    Schmidt(GridArgs),
}

fn parse_eps(s: &str) -> Result<Vec<Epsilon>, String> {
    match s {
        "+1" | "1" => Ok(vec![Epsilon::Plus]),
        "-1" => Ok(vec![Epsilon::Minus]),
        "both" => Ok(Epsilon::BOTH.to_vec()),
        _ => Err(format!("invalid --eps {s:?}: expected +1, -1 or both")),
    }
}

struct Resolved {
    sweep: Sweep,
    invocation: BTreeMap<String, String>,
}

fn pick<T: std::str::FromStr + ToString>(
    flag: Option<T>,
    cfg: &Config,
    scope: &str,
    key: &str,
    default: T,
    inv: &mut BTreeMap<String, String>,
) -> Result<T, String> {
    let v = match flag {
        Some(v) => v,
        None => cfg.parse_value(scope, key)?.unwrap_or(default),
    };
    inv.insert(key.to_string(), v.to_string());
    Ok(v)
}

fn resolve(cmd: &Verify, cfg: &Config) -> Result<Resolved, String> {
    let mut inv = BTreeMap::new();
    let (scope, sweep) = match cmd {
        Verify::Rv(a) => (
            "rv",
            Sweep::Rv {
                pmax: pick(a.pmax, cfg, "rv", "pmax", 200, &mut inv)?,
            },
        ),
        Verify::Lemma2p(a) => (
            "lemma2p",
            Sweep::Lemma2p {
                pmax: pick(a.pmax, cfg, "lemma2p", "pmax", 200, &mut inv)?,
            },
        ),
        Verify::SunP4(a) => (
            "sun-p4",
            Sweep::SunP4 {
                pmax: pick(a.pmax, cfg, "sun-p4", "pmax", 100, &mut inv)?,
            },
        ),
        Verify::GuoBb1 { pmax, xs } => {
            let pmax = pick(*pmax, cfg, "guo-bb1", "pmax", 50, &mut inv)?;
            let xs = if xs.is_empty() {
                match cfg.get("guo-bb1", "x") {
                    Some(list) => list.split(',').map(str::to_string).collect(),
                    None => Vec::new(),
                }
            } else {
                xs.clone()
            };
            let xs: Vec<Rat> = if xs.is_empty() {
                default_guo_points()
            } else {
                xs.iter()
                    .map(|s| s.parse::<Rat>().map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?
            };
            let shown: Vec<String> = xs.iter().map(Rat::to_string).collect();
            inv.insert("x".into(), shown.join(","));
            ("guo-bb1", Sweep::GuoBb1 { pmax, xs })
        }
        Verify::Cc { which, pmax } => {
            let which_v = match which {
                Some(w) => *w,
                None => cfg.parse_value("cc", "which")?.unwrap_or(CcWhich::All),
            };
            let label = match which_v {
                CcWhich::Cc5 => "cc5",
                CcWhich::Cc7 => "cc7",
                CcWhich::Cc8 => "cc8",
                CcWhich::Cc9 => "cc9",
                CcWhich::Cc10 => "cc10",
                CcWhich::All => "all",
            };
            inv.insert("which".into(), label.into());
            let pmax = pick(*pmax, cfg, "cc", "pmax", 50, &mut inv)?;
            (
                "cc",
                Sweep::Cc {
                    which: which_v,
                    pmax,
                },
            )
        }
        Verify::Identity { name, max, nmax } => {
            let name_v = match name {
                Some(n) => *n,
                None => cfg
                    .parse_value("identity", "name")?
                    .unwrap_or(IdentityName::All),
            };
            let max = match max {
                Some(m) => Some(*m),
                None => cfg.parse_value("identity", "max")?,
            };
            let nmax = match nmax {
                Some(n) => Some(*n),
                None => cfg.parse_value("identity", "nmax")?,
            };
            inv.insert("name".into(), format!("{name_v:?}"));
            inv.insert(
                "max".into(),
                max.map_or("default".into(), |m| m.to_string()),
            );
            inv.insert(
                "nmax".into(),
                nmax.map_or("default".into(), |m| m.to_string()),
            );
            (
                "identity",
                Sweep::Identity {
                    name: name_v,
                    max,
                    nmax,
                },
            )
        }
        Verify::Integrality(g) | Verify::Schmidt(g) => {
            let is_int = matches!(cmd, Verify::Integrality(_));
            let scope = if is_int { "integrality" } else { "schmidt" };
            let nmax = pick(
                g.nmax,
                cfg,
                scope,
                "nmax",
                if is_int { 10 } else { 6 },
                &mut inv,
            )?;
            let mmax = pick(g.mmax, cfg, scope, "mmax", 3, &mut inv)?;
            let eps_s = match &g.eps {
                Some(e) => e.clone(),
                None => cfg.get(scope, "eps").unwrap_or("both").to_string(),
            };
            let eps = parse_eps(&eps_s)?;
            inv.insert("eps".into(), eps_s);
            let sweep = if is_int {
                Sweep::Integrality { nmax, mmax, eps }
            } else {
                Sweep::Schmidt { nmax, mmax, eps }
            };
            (scope, sweep)
        }
    };
    inv.insert("subcommand".into(), scope.into());
    Ok(Resolved {
        sweep,
        invocation: inv,
    })
}

fn run(cli: Cli) -> Result<RunReport, String> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let Command::Verify(cmd) = &cli.command;
    let Resolved {
        sweep,
        mut invocation,
    } = resolve(cmd, &cfg)?;
    let format = match cli.format {
        Some(f) => f,
        None => cfg.parse_value("", "format")?.unwrap_or(Format::Json),
    };
    invocation.insert("format".into(), format!("{format:?}").to_lowercase());

    let jobs = match cli.jobs {
        Some(j) => Some(j),
        None => cfg.parse_value("", "jobs")?,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| e.to_string())?;

    let start = Instant::now();
    let checks = pool.install(|| sweep.run()).map_err(|e| e.to_string())?;
    let report = RunReport::new(invocation, checks, start.elapsed().as_secs_f64());

    let rendered = report.render(format);
    match &cli.out {
        Some(path) => {
            std::fs::write(path, rendered).map_err(|e| format!("{}: {e}", path.display()))?;
            let s = report.summary;
            eprintln!(
                "{} pass, {} fail, {} skipped -> {}",
                s.pass,
                s.fail,
                s.skipped,
                path.display()
            );
        }
        None => print!("{rendered}"),
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => ExitCode::from(report.exit_code() as u8),
        Err(msg) => {
            eprintln!("scv: {msg}");
            ExitCode::from(2)
        }
    }
}
