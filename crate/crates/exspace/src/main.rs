use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use exspace::corpus::{corpus_dir, with_cover};
use exspace::format::{parse_object, Object};
use exspace::script::run_script;
use exspace::show::{homology_line, show, ShowFormat};
use exspace::suites::{report, run_suite, Options, SUITES};
use exspace_core::invariants::cech_nerve;

#[derive(Parser)]
#[command(name = "exspace", version, about = "Finite parametrized spaces and spectra: scripts, suites and file inspection")]
#[command(after_help = "Relative object paths that do not exist are looked up in $EXSPACE_CORPUS, which defaults to the bundled corpus/ directory.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct Common {
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Truncation of sequential spectra.
    #[arg(long, default_value_t = 4)]
    trunc: usize,
    /// Truncation of symmetric spectra.
    #[arg(long, default_value_t = 3)]
    sym_trunc: usize,
    /// Largest horn dimension for fibration checks; `auto` is the source
    /// dimension plus two.
    #[arg(long, default_value = "auto")]
    horn_cap: String,
    /// Samples per lazy check.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

impl Common {
    fn options(&self) -> Result<Options, String> {
        let horn_cap = match self.horn_cap.as_str() {
            "auto" => None,
            s => Some(s.parse().map_err(|_| format!("--horn-cap expects auto or an integer, got {s:?}"))?),
        };
        Ok(Options {
            seed: self.seed,
            trunc: self.trunc,
            sym_trunc: self.sym_trunc,
            horn_cap,
            samples: self.samples,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a construction script.
    Run {
        script: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named verification suite.
    Verify {
        /// One of unstable, global, seq, sym, koszul, homology, all.
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print an interchange file.
    Show {
        path: PathBuf,
        /// summary, full or dot.
        #[arg(long, default_value = "summary")]
        format: String,
    },
    /// Nerve of a cover file, with its rational homology.
    Cech {
        path: PathBuf,
        /// summary, full or dot.
        #[arg(long, default_value = "summary")]
        format: String,
    },
}

fn resolve(p: &Path) -> PathBuf {
    if p.exists() || p.is_absolute() {
        return p.to_path_buf();
    }
    let q = corpus_dir().join(p);
    if q.exists() {
        q
    } else {
        p.to_path_buf()
    }
}

fn load(p: &Path) -> Result<Object, String> {
    let path = resolve(p);
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_object(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn usage_error(msg: String) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { script, common } => {
            let opts = match common.options() {
                Ok(o) => o,
                Err(e) => return usage_error(e),
            };
            let text = match std::fs::read_to_string(&script) {
                Ok(t) => t,
                Err(e) => return usage_error(format!("{}: {e}", script.display())),
            };
            match run_script(&text, script.parent(), &opts) {
                Ok(r) => {
                    print!("{}", r.render(opts.seed));
                    if r.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => usage_error(format!("{}: {e}", script.display())),
            }
        }
        Command::Verify { suite, common } => {
            let opts = match common.options() {
                Ok(o) => o,
                Err(e) => return usage_error(e),
            };
            let Some(verdicts) = run_suite(&suite, &opts) else {
                return usage_error(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", ")));
            };
            print!("{}", report(&suite, &opts, &verdicts));
            if verdicts.iter().all(|v| v.pass) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Show { path, format } => {
            let f: ShowFormat = match format.parse() {
                Ok(f) => f,
                Err(e) => return usage_error(e),
            };
            match load(&path) {
                Ok(o) => {
                    print!("{}", show(&o, f));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Cech { path, format } => {
            let f: ShowFormat = match format.parse() {
                Ok(f) => f,
                Err(e) => return usage_error(e),
            };
            let cover = match load(&path) {
                Ok(Object::Cover(c)) => c,
                Ok(o) => return usage_error(format!("expected a cover file, found a {}", o.kind())),
                Err(e) => return usage_error(e),
            };
            match with_cover(&cover, cech_nerve) {
                Ok(x) => {
                    let x = std::sync::Arc::new(x);
                    print!("{}", show(&Object::SSet(x.clone()), f));
                    if f == ShowFormat::Summary {
                        println!("{}", homology_line(&x));
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    println!("cech\t-\tFAIL\terror: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
