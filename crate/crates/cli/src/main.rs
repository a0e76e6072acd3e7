use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tiltlab_cli::commands::{self, ModuleSpec};
use tiltlab_cli::report::{error_json, Report};
use tiltlab_cli::{paper, resolve_seed};

/// Exact computations with two-term tilting complexes over
/// finite-dimensional quiver algebras.
#[derive(Parser)]
#[command(name = "tiltlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArgs {
    /// built-in fixture algebra (a2, a3lin, hkm4)
    #[arg(long)]
    builtin: Option<String>,
    /// algebra file
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// write the JSON report here
    #[arg(long)]
    json: Option<PathBuf>,
    /// seed for the decomposition search (fallback: TILTLAB_SEED)
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct ComplexArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// complex file
    #[arg(long)]
    complex: PathBuf,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Ext-projective generator: module expression (P1, I4+S3+S2, 2*P1)
    /// or @path to a module file
    #[arg(long)]
    x: String,
    /// Ext-injective cogenerator, same syntax
    #[arg(long)]
    y: String,
}

#[derive(Args)]
struct PaperArgs {
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Tilting verdict for a two-term complex
    Check(ComplexArgs),
    /// H^0 and H^{-1}(nu T) with decompositions
    Homology(ComplexArgs),
    /// Annihilator of H^0 and the factor algebra presentation
    Annihilator(ComplexArgs),
    /// Tilting-module verification for H^0 (and the cotilting dual)
    TiltingModule(ComplexArgs),
    /// Endomorphism-ring comparison on both sides
    Endring(ComplexArgs),
    /// Build the complex attached to torsion data (X, Y)
    Construct(ConstructArgs),
    /// Torsion membership table over the builtin catalogue
    Torsion(ComplexArgs),
    /// Reproduce the worked four-vertex example end to end
    PaperExample(PaperArgs),
}

fn module_spec(text: &str) -> ModuleSpec {
    match text.strip_prefix('@') {
        Some(path) => ModuleSpec::File(PathBuf::from(path)),
        None => ModuleSpec::Expr(text.to_string()),
    }
}

fn emit(report: &Report, json: Option<&PathBuf>, extra_stdout: Option<&str>) -> ExitCode {
    if let Some(path) = json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Some(text) = extra_stdout {
        print!("{text}");
    } else {
        println!("{}", report.to_json());
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run() -> Result<ExitCode, tiltlab::Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check(args) => {
            let loaded =
                commands::load_algebra(args.algebra.builtin.as_deref(), args.algebra.algebra.as_ref())?;
            let t = commands::load_complex(&loaded, &args.complex)?;
            let report = commands::cmd_check(&loaded, &t, resolve_seed(args.algebra.seed))?;
            Ok(emit(&report, args.algebra.json.as_ref(), None))
        }
        Command::Homology(args) => {
            let loaded =
                commands::load_algebra(args.algebra.builtin.as_deref(), args.algebra.algebra.as_ref())?;
            let t = commands::load_complex(&loaded, &args.complex)?;
            let report = commands::cmd_homology(&loaded, &t, resolve_seed(args.algebra.seed))?;
            Ok(emit(&report, args.algebra.json.as_ref(), None))
        }
        Command::Annihilator(args) => {
            let loaded =
                commands::load_algebra(args.algebra.builtin.as_deref(), args.algebra.algebra.as_ref())?;
            let t = commands::load_complex(&loaded, &args.complex)?;
            let report = commands::cmd_annihilator(&loaded, &t)?;
            Ok(emit(&report, args.algebra.json.as_ref(), None))
        }
        Command::TiltingModule(args) => {
            let loaded =
                commands::load_algebra(args.algebra.builtin.as_deref(), args.algebra.algebra.as_ref())?;
            let t = commands::load_complex(&loaded, &args.complex)?;
            let report =
                commands::cmd_tilting_module(&loaded, &t, resolve_seed(args.algebra.seed))?;
            Ok(emit(&report, args.algebra.json.as_ref(), None))
        }
        Command::Endring(args) => {
            let loaded =
                commands::load_algebra(args.algebra.builtin.as_deref(), args.algebra.algebra.as_ref())?;
            let t = commands::load_complex(&loaded, &args.complex)?;
            let report = commands::cmd_endring(&loaded, &t, resolve_seed(args.algebra.seed))?;
            Ok(emit(&report, args.algebra.json.as_ref(), None))
        }
        Command::Construct(args) => {
            let loaded =
                commands::load_algebra(args.algebra.builtin.as_deref(), args.algebra.algebra.as_ref())?;
            let (report, complex_text) = commands::cmd_construct(
                &loaded,
                &module_spec(&args.x),
                &module_spec(&args.y),
                resolve_seed(args.algebra.seed),
            )?;
            Ok(emit(&report, args.algebra.json.as_ref(), Some(&complex_text)))
        }
        Command::Torsion(args) => {
            let loaded =
                commands::load_algebra(args.algebra.builtin.as_deref(), args.algebra.algebra.as_ref())?;
            let t = commands::load_complex(&loaded, &args.complex)?;
            let report = commands::cmd_torsion(&loaded, &t)?;
            Ok(emit(&report, args.algebra.json.as_ref(), None))
        }
        Command::PaperExample(args) => {
            let report = paper::paper_example(resolve_seed(args.seed))?;
            Ok(emit(&report, args.json.as_ref(), None))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            println!("{}", error_json(&e));
            ExitCode::FAILURE
        }
    }
}
