use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use yext::RingSpec;
use yext_cli::{command, laws, parse_workspace, CliError, Format, LawsCfg, Workspace};

/// Extension calculus for finitely presented modules over Z and Z/m.
///
/// Workspaces are small text files binding modules, morphisms, short exact
/// sequences and longer extensions to names; see the README for the grammar.
#[derive(Parser)]
#[command(name = "yext", version, about)]
struct Cli {
    /// Workspace file; `-` reads from standard input.
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    /// Output layout for report lines.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Plain,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant factors of Ext^n(C, A).
    Extgroup { c: String, a: String, n: usize },
    /// Oracle class of a named sequence or extension.
    Class { e: String },
    /// Class of the Baer sum of two extensions with equal ends.
    Sum { e1: String, e2: String },
    /// Class of the pushout action of a morphism on an extension.
    ActLeft { a: String, e: String },
    /// Class of the pullback action of a morphism on an extension.
    ActRight { e: String, c: String },
    /// Class of the Yoneda composition of two extensions.
    Compose { e1: String, e2: String },
    /// Restrict an extension of a biproduct along the canonical injections.
    /// The biproduct decomposition is named by its component modules.
    Psi {
        e: String,
        #[arg(required = true)]
        components: Vec<String>,
    },
    /// Glue a family of sequences with a shared left end into one sequence
    /// over the colimit, and verify the round trip.
    Theta {
        #[arg(required = true)]
        components: Vec<String>,
    },
    /// Inverse of the restriction in degree n, with verification lines.
    PsiInv {
        n: usize,
        #[arg(required = true)]
        components: Vec<String>,
    },
    /// Restrict an extension of a product along the canonical projections.
    Phi {
        e: String,
        #[arg(required = true)]
        components: Vec<String>,
    },
    /// Verify the colimit comparison on a family of monomorphisms.
    Ab4Check {
        #[arg(required = true)]
        morphisms: Vec<String>,
    },
    /// Run a seeded law suite and print one check per line.
    Laws {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 25)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coefficient ring: 0 for Z, otherwise a modulus >= 2.
        #[arg(long, default_value_t = 4)]
        ring: u64,
        #[arg(long, default_value_t = 2)]
        max_gens: usize,
        #[arg(long, default_value_t = 6)]
        max_entry: i64,
    },
}

fn load_workspace(path: &Option<PathBuf>) -> Result<Workspace, CliError> {
    let text = match path {
        None => String::new(),
        Some(p) if p.as_os_str() == "-" => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
        Some(p) => std::fs::read_to_string(p)?,
    };
    parse_workspace(&text)
}

fn run(cli: Cli) -> Result<(Vec<String>, usize), CliError> {
    match cli.command {
        Command::Laws {
            suite,
            cases,
            seed,
            ring,
            max_gens,
            max_entry,
        } => {
            let ring = if ring == 0 {
                RingSpec::integers()
            } else {
                RingSpec::modular(ring)?
            };
            let mut cfg = LawsCfg::new(ring, cases, seed);
            cfg.sample.max_gens = max_gens;
            cfg.sample.max_entry = max_entry;
            let report = laws::run_suite(&suite, &cfg)?;
            let format = match cli.format {
                OutputFormat::Plain => Format::Plain,
                OutputFormat::Tsv => Format::Tsv,
            };
            let failures = report.total() - report.passed();
            let rendered = report.render(format);
            Ok((rendered.lines().map(str::to_string).collect(), failures))
        }
        ref command => {
            let ws = load_workspace(&cli.file)?;
            let outcome = match command {
                Command::Extgroup { c, a, n } => command::ext_group_command(&ws, c, a, *n)?,
                Command::Class { e } => command::class_command(&ws, e)?,
                Command::Sum { e1, e2 } => command::sum_command(&ws, e1, e2)?,
                Command::ActLeft { a, e } => command::act_left_command(&ws, a, e)?,
                Command::ActRight { e, c } => command::act_right_command(&ws, e, c)?,
                Command::Compose { e1, e2 } => command::compose_command(&ws, e1, e2)?,
                Command::Psi { e, components } => command::psi_command(&ws, e, components)?,
                Command::Theta { components } => command::theta_command(&ws, components)?,
                Command::PsiInv { n, components } => {
                    command::psi_inverse_command(&ws, *n, components)?
                }
                Command::Phi { e, components } => command::phi_command(&ws, e, components)?,
                Command::Ab4Check { morphisms } => command::ab4_command(&ws, morphisms)?,
                Command::Laws { .. } => unreachable!("handled above"),
            };
            Ok((outcome.lines, outcome.failures))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((lines, failures)) => {
            for line in lines {
                println!("{line}");
            }
            if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
