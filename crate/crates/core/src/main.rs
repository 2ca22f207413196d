use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coalgebra_deform::cli::{self, Command, ComplexKind, Report};
use coalgebra_deform::linalg::Field;

/// Exact deformation theory of finite-dimensional coalgebra morphisms.
#[derive(Parser)]
#[command(name = "codef", version)]
struct Args {
    /// Ground field: `rational` or `prime:<p>`. Overrides the file's field.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Write the built-in corpus (fixtures.json, invalid.json) into DIR.
    #[arg(long, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    /// Print the machine-readable report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a coalgebra, morphism, deformation, isomorphism or cocycle.
    Check { file: PathBuf, name: String },
    /// Cohomology of a complex in one degree.
    Cohomology {
        file: PathBuf,
        #[arg(value_parser = parse_complex)]
        complex: ComplexKind,
        name: String,
        degree: usize,
    },
    /// Obstruction to extending a deformation by one order.
    Obstruct { file: PathBuf, name: String },
    /// Integrate a 2-cocycle to a deformation of the given order.
    Integrate {
        file: PathBuf,
        name: String,
        order: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Find a formal isomorphism to the trivial deformation.
    Trivialize {
        file: PathBuf,
        name: String,
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: coalgebra_deform::Error| e.to_string())
}

fn parse_complex(s: &str) -> Result<ComplexKind, String> {
    s.parse().map_err(|e: coalgebra_deform::Error| e.to_string())
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Check { file, name } => Command::Check { file, name },
            Cmd::Cohomology {
                file,
                complex,
                name,
                degree,
            } => Command::Cohomology {
                file,
                complex,
                name,
                degree,
            },
            Cmd::Obstruct { file, name } => Command::Obstruct { file, name },
            Cmd::Integrate {
                file,
                name,
                order,
                out,
            } => Command::Integrate {
                file,
                name,
                order,
                out,
            },
            Cmd::Trivialize { file, name, out } => Command::Trivialize { file, name, out },
        }
    }
}

fn emit(report: &Report, json: bool) {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if args.fixtures.is_none() && args.command.is_none() {
        eprintln!("error: nothing to do; give a subcommand or --fixtures DIR");
        return ExitCode::from(2);
    }
    if let Some(dir) = &args.fixtures {
        match cli::write_fixtures(dir, args.field.unwrap_or_default()) {
            Ok(r) => emit(&r, args.json),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    let Some(cmd) = args.command else {
        return ExitCode::SUCCESS;
    };
    match cli::run(&cmd.into(), args.field) {
        Ok(r) => {
            emit(&r, args.json);
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
