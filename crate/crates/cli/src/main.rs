//! `ewtab`: conversions, enumeration, statistics, sandpile runs and
//! verification suites from the command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ewtableaux::bijections::{
    phi_le, phi_le_inverse, psi, psi_inverse, tree_from_perm, tree_to_perm,
};
use ewtableaux::sandpile::{enumerate_minimal_recurrent, is_recurrent, stabilize, SandpileConfig};
use ewtableaux::verify::{default_size, run_suite, SUITES};
use ewtableaux::{
    convert, enumerate, enumerate_size, parse_any, render, serialize, serialize_line, stats,
    structure_stats, Error, Family, FerrersGraph, FerrersShape, Permutation, Route, Tableau,
};

#[derive(Parser)]
#[command(name = "ewtab", version, about = "EW, NEW, Le and tree-like tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "EW", alias = "ew")]
    Ew,
    #[value(name = "NEW", alias = "new")]
    New,
    #[value(name = "LE", alias = "le")]
    Le,
    #[value(name = "TREE", alias = "tree")]
    Tree,
}

impl From<Kind> for Family {
    fn from(k: Kind) -> Family {
        match k {
            Kind::Ew => Family::Ew,
            Kind::New => Family::New,
            Kind::Le => Family::Le,
            Kind::Tree => Family::Tree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ViaArg {
    Composed,
    Direct,
    Spanning,
}

impl From<ViaArg> for Route {
    fn from(v: ViaArg) -> Route {
        match v {
            ViaArg::Composed => Route::Composed,
            ViaArg::Direct => Route::Direct,
            ViaArg::Spanning => Route::Spanning,
        }
    }
}

#[derive(Args)]
struct Input {
    /// Tableau file; standard input when absent.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a tableau to another family.
    Convert {
        #[arg(long)]
        from: Kind,
        #[arg(long)]
        to: Kind,
        #[arg(long, value_enum, default_value = "composed")]
        via: ViaArg,
        #[command(flatten)]
        input: Input,
    },
    /// Print the permutation of a tableau.
    ToPerm {
        #[command(flatten)]
        input: Input,
    },
    /// Print the tableau of a permutation.
    FromPerm {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        kind: Kind,
    },
    /// List all tableaux of a size or a shape, one per line.
    Enumerate {
        #[arg(long)]
        kind: Kind,
        #[arg(long, conflicts_with = "shape", required_unless_present = "shape")]
        size: Option<usize>,
        /// Row lengths, e.g. "3 2 2".
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        count_only: bool,
    },
    /// Statistics of a permutation, or of a tableau and its permutation.
    Stats {
        #[arg(long, conflicts_with = "file")]
        perm: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Sandpile model on the Ferrers graph of a shape.
    Sandpile {
        #[arg(value_enum)]
        action: SandpileAction,
        /// Row lengths, e.g. "3 3 1".
        #[arg(long)]
        shape: String,
        /// Grains as "vertex:count" pairs; unlisted vertices hold none.
        #[arg(long, default_value = "")]
        config: String,
    },
    /// Run a verification suite (or "all").
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest size checked; the suite's default when absent.
        #[arg(long)]
        max_size: Option<usize>,
        /// Tab-separated lines instead of the table.
        #[arg(long)]
        structured: bool,
    },
    /// Draw a tableau with its border labels.
    Render {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SandpileAction {
    Stabilize,
    Recurrent,
    Minrec,
}

fn read_input(file: Option<&PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    let io_err = |e: io::Error| Error::Parse {
        line: 0,
        message: e.to_string(),
    };
    match file {
        Some(path) => text = fs::read_to_string(path).map_err(io_err)?,
        None => {
            io::stdin().read_to_string(&mut text).map_err(io_err)?;
        }
    }
    Ok(text)
}

fn read_tableau(input: &Input) -> Result<Tableau, Error> {
    parse_any(&read_input(input.file.as_ref())?)
}

fn to_perm(t: &Tableau) -> Result<Permutation, Error> {
    match t.family() {
        Family::Ew | Family::New => psi(t),
        Family::Le => phi_le(t),
        Family::Tree => tree_to_perm(t),
    }
}

fn from_perm(p: &Permutation, family: Family) -> Result<Tableau, Error> {
    match family {
        Family::Ew | Family::New => psi_inverse(p, family),
        Family::Le => phi_le_inverse(p),
        Family::Tree => tree_from_perm(p),
    }
}

/// Runs the command, writing to `out`; `Ok(false)` means a verification
/// failure that should exit with status 1.
fn dispatch(cmd: Command, out: &mut impl Write) -> Result<bool, Error> {
    let w = |out: &mut dyn Write, s: &str| {
        out.write_all(s.as_bytes()).map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })
    };
    match cmd {
        Command::Convert {
            from,
            to,
            via,
            input,
        } => {
            let t = read_tableau(&input)?;
            let from: Family = from.into();
            if t.family() != from {
                return Err(Error::WrongFamily {
                    expected: from.tag(),
                    got: t.family().tag(),
                });
            }
            let u = convert(&t, to.into(), via.into())?;
            w(out, &format!("{}\n", serialize(&u)))?;
        }
        Command::ToPerm { input } => {
            let t = read_tableau(&input)?;
            w(out, &format!("{}\n", to_perm(&t)?))?;
        }
        Command::FromPerm { perm, kind } => {
            let p: Permutation = perm.parse()?;
            w(
                out,
                &format!("{}\n", serialize(&from_perm(&p, kind.into())?)),
            )?;
        }
        Command::Enumerate {
            kind,
            size,
            shape,
            count_only,
        } => {
            let family: Family = kind.into();
            let stream: Box<dyn Iterator<Item = Tableau>> = match (size, shape) {
                (Some(n), _) => Box::new(enumerate_size(n, family)),
                (None, Some(s)) => {
                    let shape: FerrersShape = s.parse()?;
                    shape.check_family(family)?;
                    Box::new(enumerate(&shape, family))
                }
                (None, None) => unreachable!("clap requires one of size and shape"),
            };
            if count_only {
                w(out, &format!("{}\n", stream.count()))?;
            } else {
                for t in stream {
                    w(out, &format!("{}\n", serialize_line(&t)))?;
                }
            }
        }
        Command::Stats { perm, file } => {
            let value = match perm {
                Some(p) => serde_json::to_value(stats(&p.parse()?)),
                None => {
                    let t = parse_any(&read_input(file.as_ref())?)?;
                    let p = to_perm(&t)?;
                    let mut v = serde_json::json!({
                        "kind": t.family().tag(),
                        "permutation": p.to_string(),
                        "permutation_stats": stats(&p),
                    });
                    if matches!(t.family(), Family::Ew | Family::New) {
                        v["structure"] = serde_json::to_value(structure_stats(&t)?)
                            .expect("plain data serializes");
                    }
                    Ok(v)
                }
            }
            .expect("plain data serializes");
            let text = serde_json::to_string_pretty(&value).expect("plain data serializes");
            w(out, &format!("{text}\n"))?;
        }
        Command::Sandpile {
            action,
            shape,
            config,
        } => {
            let shape: FerrersShape = shape.parse()?;
            let g = FerrersGraph::new(&shape)?;
            let c = SandpileConfig::parse(&config, g.n())?;
            match action {
                SandpileAction::Stabilize => {
                    let s = stabilize(&g, &c)?;
                    let odometer = SandpileConfig::new(s.odometer);
                    w(
                        out,
                        &format!("config {}\nodometer {}\n", s.config, odometer),
                    )?;
                }
                SandpileAction::Recurrent => {
                    let r = is_recurrent(&g, &c)?;
                    w(out, if r { "recurrent\n" } else { "not recurrent\n" })?;
                }
                SandpileAction::Minrec => {
                    let all = enumerate_minimal_recurrent(&g)?;
                    for c in &all {
                        w(out, &format!("{c}\n"))?;
                    }
                    w(out, &format!("count {}\n", all.len()))?;
                }
            }
        }
        Command::Verify {
            suite,
            max_size,
            structured,
        } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.iter().map(|&(name, _, _)| name).collect()
            } else {
                vec![suite.as_str()]
            };
            let mut ok = true;
            for name in names {
                let n = match max_size {
                    Some(n) => n,
                    None => default_size(name)?,
                };
                let report = run_suite(name, n)?;
                eprintln!("{name}: {:.2?}", report.elapsed);
                if structured {
                    w(out, &report.structured())?;
                } else {
                    w(out, &report.to_string())?;
                }
                ok &= report.passed();
            }
            return Ok(ok);
        }
        Command::Render { input } => {
            let t = read_tableau(&input)?;
            w(out, &render(&t))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match dispatch(cli.command, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
