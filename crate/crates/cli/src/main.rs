use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use catalan_core::classical::{
    arcs_to_planar, binary_to_tiling, planar_to_arcs, tiling_to_binary,
};
use catalan_core::codec::render::{render, RenderMode};
use catalan_core::codec::parse_shape;
use catalan_core::terms::{enum_terms, eval, term_of, Term};
use catalan_core::verify::{catalan, run_suite, SuiteConfig};
use catalan_core::{ArcTree, Error, Family, RightSweptTree, Shape, StaircaseTiling};

#[derive(Parser)]
#[command(
    name = "catalan",
    version,
    about = "Catalan shape families: counting, enumeration, bijections, rendering, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of size-n shapes (the same for every family).
    Count {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
    /// Print every size-n shape, one literal per line, in term order.
    Enum {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Stop after this many lines.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Map a literal into another family.
    Map {
        #[arg(long)]
        via: Via,
        #[arg(long)]
        from: FamilyArg,
        #[arg(long)]
        to: FamilyArg,
        #[arg(long)]
        input: String,
    },
    /// Print the construction term of a shape.
    Term {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        input: String,
    },
    /// Draw a shape.
    Render {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        input: String,
        #[arg(long)]
        mode: ModeArg,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and print a per-check table.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Worker threads; output is identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print machine-readable CHECK lines instead of the table.
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "terms")]
    Terms,
}

impl FamilyArg {
    fn shape_family(self) -> Option<Family> {
        match self {
            FamilyArg::T => Some(Family::Tree),
            FamilyArg::S => Some(Family::Tiling),
            FamilyArg::A => Some(Family::Arcs),
            FamilyArg::B => Some(Family::Binary),
            FamilyArg::P => Some(Family::Planar),
            FamilyArg::Terms => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Ascii,
    Svg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn usage(message: &str) -> Result<ExitCode, Error> {
    eprintln!("usage error: {message}");
    Ok(ExitCode::from(2))
}

/// The term encoding a shape; binary and planar trees go through their
/// classical companions.
fn term_from_shape(shape: &Shape) -> Result<Term, Error> {
    match shape {
        Shape::Tree(t) => term_of(t),
        Shape::Tiling(s) => term_of(s),
        Shape::Arcs(a) => term_of(a),
        Shape::Binary(b) => term_of(&binary_to_tiling(b)),
        Shape::Planar(p) => term_of(&planar_to_arcs(p)),
    }
}

fn shape_from_term(term: &Term, family: Family) -> Result<Shape, Error> {
    Ok(match family {
        Family::Tree => Shape::Tree(eval(term)?),
        Family::Tiling => Shape::Tiling(eval(term)?),
        Family::Arcs => Shape::Arcs(eval(term)?),
        Family::Binary => {
            let s: StaircaseTiling = eval(term)?;
            Shape::Binary(tiling_to_binary(&s)?)
        }
        Family::Planar => {
            let a: ArcTree = eval(term)?;
            Shape::Planar(arcs_to_planar(&a)?)
        }
    })
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Count { family: _, n } => {
            println!("{}", catalan(n)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enum { family, n, limit } => {
            use std::io::Write;
            let terms = enum_terms(n);
            let take = limit.unwrap_or(terms.len());
            let stdout = std::io::stdout().lock();
            let mut out = std::io::BufWriter::new(stdout);
            let io_err = |e: std::io::Error| Error::Domain(format!("write failed: {e}"));
            match family.shape_family() {
                None => {
                    for term in terms.iter().take(take) {
                        writeln!(out, "{term}").map_err(io_err)?;
                    }
                }
                Some(f) => {
                    for term in terms.iter().take(take) {
                        writeln!(out, "{}", shape_from_term(term, f)?).map_err(io_err)?;
                    }
                }
            }
            out.flush().map_err(io_err)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Map { via, from, to, input } => {
            let (Some(from), Some(to)) = (from.shape_family(), to.shape_family()) else {
                return usage("map works on shape families, not terms");
            };
            match via {
                Via::Alpha => {
                    let shape = parse_shape(from, &input)?;
                    let term = term_from_shape(&shape)?;
                    println!("{}", shape_from_term(&term, to)?);
                }
                Via::Beta => match (from, to) {
                    (Family::Tree, Family::Tiling) => {
                        let t: RightSweptTree = input.parse()?;
                        println!("{}", catalan_core::beta::beta(&t)?);
                    }
                    (Family::Tiling, Family::Tree) => {
                        let s: StaircaseTiling = input.parse()?;
                        println!("{}", catalan_core::beta::beta_inv(&s)?);
                    }
                    _ => return usage("beta maps between T and S only"),
                },
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Term { family, input } => {
            let Some(family) = family.shape_family() else {
                return usage("input is already a term");
            };
            let shape = parse_shape(family, &input)?;
            println!("{}", term_from_shape(&shape)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { family, input, mode, out } => {
            let Some(family) = family.shape_family() else {
                return usage("terms have no drawing; render a shape family");
            };
            let shape = parse_shape(family, &input)?;
            let mode = match mode {
                ModeArg::Ascii => RenderMode::Ascii,
                ModeArg::Svg => RenderMode::Svg,
            };
            let mut drawing = render(&shape, mode);
            match out {
                Some(path) => {
                    if !drawing.ends_with('\n') {
                        drawing.push('\n');
                    }
                    std::fs::write(&path, drawing)
                        .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
                }
                None => match mode {
                    RenderMode::Ascii => println!("{drawing}"),
                    RenderMode::Svg => print!("{drawing}"),
                },
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n, jobs, machine } => {
            let config = SuiteConfig { max_n, oracle_n: max_n.min(8), jobs };
            let report = run_suite(&config);
            if machine {
                print!("{}", report.machine_lines());
            } else {
                print!("{}", report.table());
            }
            if report.all_pass() {
                println!("all {} checks passed", report.results.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "{} of {} checks failed",
                    report.failures(),
                    report.results.len()
                );
                Ok(ExitCode::from(1))
            }
        }
    }
}
