use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use ringlab::constructions::{named_iso, verify_iso};
use ringlab::dsl;
use ringlab::properties::{
    central_idempotents, check_property, idempotents, verify_witness, Budget, CheckOptions, Witness, PROPERTIES,
};
use ringlab::subring::check_maximal_i_reversible;
use ringlab::suite::{self, Status};

/// Exact finite ring checks: reversibility-type properties, witnesses,
/// maximality of subrings and the claim suite.
#[derive(Parser)]
#[command(name = "ringlab", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// TOML file with max_pairs, max_degree, deterministic and jobs.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest number of element pairs or candidates a scan may visit.
    #[arg(long, global = true)]
    max_pairs: Option<u64>,
    /// Largest polynomial degree in bounded scans.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Minimal witnesses and zeroed timings.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Worker threads for scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a property; exit 1 with a witness file when it fails.
    Check {
        prop: String,
        ring: String,
        #[arg(long, default_value = "witness.json")]
        witness_out: PathBuf,
        /// Print the verdict as JSON.
        #[arg(long)]
        json: bool,
    },
    /// List the idempotents of a finite ring.
    Idempotents {
        ring: String,
        #[arg(long)]
        central: bool,
    },
    /// Print the size and canonical form of a ring expression.
    Show { ring: String },
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Is `base` a maximal i-reversible subring of `ambient` = T_n(GF(p))?
    Maximal {
        base: String,
        ambient: String,
        /// Write the full report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check a named isomorphism src → dst exhaustively.
    Iso { src: String, dst: String, map: String },
    /// Run the claim registry.
    Suite {
        /// Comma-separated claim ids; `*` is a wildcard.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write each witness as <digest>.json here.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        /// Run the negative controls instead; they are expected to fail.
        #[arg(long)]
        controls: bool,
    },
    /// List claim ids, anchors and proxies.
    Claims {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Re-check a witness file from scratch.
    Replay { file: PathBuf },
}

#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    max_pairs: Option<u64>,
    max_degree: Option<usize>,
    deterministic: Option<bool>,
    jobs: Option<usize>,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = setup(&cli.global).and_then(|opts| run(cli.command, &opts));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Flags override the config file, which overrides the defaults; the
/// environment cap applies last.
fn setup(g: &Global) -> Result<CheckOptions, Failure> {
    let config: Config = match &g.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            toml::from_str(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?
        }
        None => Config::default(),
    };
    let defaults = Budget::default();
    let budget = Budget {
        max_pairs: g.max_pairs.or(config.max_pairs).unwrap_or(defaults.max_pairs),
        max_degree: g.max_degree.or(config.max_degree).unwrap_or(defaults.max_degree),
    }
    .capped_by_env();
    if let Some(n) = g.jobs.or(config.jobs) {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(CheckOptions {
        budget,
        deterministic: g.deterministic || config.deterministic.unwrap_or(false),
    })
}

fn run(command: Command, opts: &CheckOptions) -> Outcome {
    match command {
        Command::Check {
            prop,
            ring,
            witness_out,
            json,
        } => check(&prop, &ring, &witness_out, json, opts),
        Command::Idempotents { ring, central } => {
            let r = dsl::ring(&ring)?;
            let es = if central {
                central_idempotents(&r, opts)?
            } else {
                idempotents(&r, opts)?
            };
            for e in &es {
                println!("{}", r.fmt_elem(e));
            }
            Ok(true)
        }
        Command::Show { ring } => {
            let r = dsl::ring(&ring)?;
            let size = r.size().map_or("infinite".to_string(), |n| n.to_string());
            println!("{}  size {size}", r.expr());
            Ok(true)
        }
        Command::Witness(WitnessCommand::Replay { file }) => {
            let w = read_witness(&file)?;
            let replay = verify_witness(&w)?;
            for (eq, ok) in &replay.checks {
                println!("{} {eq}", if *ok { "ok  " } else { "FAIL" });
            }
            println!("{}: {}", w.ring, if replay.holds { "replays" } else { "does not replay" });
            Ok(replay.holds)
        }
        Command::Maximal { base, ambient, json } => {
            let report = check_maximal_i_reversible(&dsl::ring(&base)?, &dsl::ring(&ambient)?, opts)?;
            let irev = report.i_reversible_intermediates();
            println!(
                "{} in {}: {} ({} intermediate subrings, {} i-reversible)",
                report.base,
                report.ambient,
                if report.maximal { "maximal" } else { "not maximal" },
                report.subrings.len(),
                irev.len()
            );
            for e in irev {
                println!("  i-reversible intermediate of dimension {}: {}", e.dim, e.basis.join(", "));
            }
            if let Some(path) = json {
                write(&path, &report.to_json())?;
            }
            Ok(report.maximal)
        }
        Command::Iso { src, dst, map } => {
            let report = verify_iso(&named_iso(&map, &dsl::ring(&src)?, &dsl::ring(&dst)?)?)?;
            match &report.violation {
                None => println!("{src} ≅ {dst} via {map}: holds ({} pairs checked)", report.checked_pairs),
                Some((law, inputs)) => println!("{src} → {dst} via {map}: {law} fails at {}", inputs.join(", ")),
            }
            Ok(report.holds)
        }
        Command::Suite {
            filter,
            json,
            witness_dir,
            controls,
        } => {
            let report = if controls {
                suite::run_checks(&suite::negative_controls(), opts)
            } else {
                suite::run_suite(filter.as_deref(), opts)
            };
            if report.claims.is_empty() {
                return Err(Failure(format!("no claim matches `{}`", filter.unwrap_or_default())));
            }
            print!("{}", report.table());
            if let Some(path) = json {
                write(&path, &report.to_json())?;
            }
            if let Some(dir) = witness_dir {
                fs::create_dir_all(&dir)?;
                for c in &report.claims {
                    for (digest, w) in c.witnesses.iter().zip(&c.witness_files) {
                        write(&dir.join(format!("{digest}.json")), &w.to_json())?;
                    }
                }
            }
            if report.count(Status::Error) > 0 {
                return Err(Failure(format!("{} claims could not be checked", report.count(Status::Error))));
            }
            Ok(if controls {
                report.count(Status::Fail) == report.claims.len()
            } else {
                report.pass
            })
        }
        Command::Claims { json } => {
            let claims = suite::list_claims();
            if json {
                println!("{}", serde_json::to_string_pretty(&claims)?);
            } else {
                for c in &claims {
                    let scope = if c.in_scope { c.proxy.as_deref().unwrap_or("-") } else { "out of scope" };
                    println!("{:<9} {:<22} {}", c.claim, scope, c.anchor);
                }
            }
            Ok(true)
        }
    }
}

fn check(prop: &str, ring: &str, witness_out: &Path, json: bool, opts: &CheckOptions) -> Outcome {
    if !PROPERTIES.contains(&prop) {
        return Err(Failure(format!("unknown property `{prop}`; expected one of {}", PROPERTIES.join(", "))));
    }
    let r = dsl::ring(ring)?;
    let v = check_property(prop, &r, opts)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("{prop} {}: {} ({})", v.ring, if v.holds { "holds" } else { "fails" }, v.method);
        if let Some(note) = &v.proxy_note {
            println!("  note: {note}");
        }
    }
    if let Some(w) = &v.witness {
        write(witness_out, &w.to_json())?;
        if !json {
            println!("  witness: {} -> {}", w.elements.join(", "), witness_out.display());
        }
    }
    Ok(v.holds)
}

fn read_witness(path: &Path) -> Result<Witness, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    fs::write(path, body).map_err(|e| Failure(format!("{}: {e}", path.display())))
}
