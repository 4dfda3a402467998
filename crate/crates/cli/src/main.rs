use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orthoscope::fixtures::{corpus, run_all};
use orthoscope::{emit, parse_expression, parse_system, run, CliError, CliResult, Command, Format, Options};
use orthoscope_core::ResidueClass;

#[derive(Parser)]
#[command(name = "orthoscope", version, about = "Decide orthogonality to the constants for rank-one fibrations and planar systems")]
struct Cli {
    #[command(subcommand)]
    action: Action,
}

#[derive(Subcommand)]
enum Action {
    /// Run the embedded fixture corpus.
    Fixtures {
        #[command(subcommand)]
        what: FixturesAction,
    },
    #[command(flatten)]
    Command(CommandAction),
}

#[derive(Subcommand)]
enum FixturesAction {
    Run {
        /// Print each report as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CommandAction {
    /// Full verdict for a univariate family or, through y = 0, a planar system.
    Classify(RunArgs),
    /// Orthogonality of the base equation x' = f(x).
    Base(RunArgs),
    /// Search for beta with (g − beta)/f a scaled logarithmic derivative.
    BetaLog(RunArgs),
    /// Search for beta with (g − beta)/f a derivative.
    BetaDer(RunArgs),
    /// Poles and residues of a rational function (of dx/f for a family).
    Residues(RunArgs),
    /// Whether a rational function is h'/h, with a witness h.
    IsDlog(RunArgs),
    /// Whether a rational function is h', with a witness h.
    IsDerivative(RunArgs),
    /// Lie bracket with a second field (default ∂y).
    Bracket(RunArgs),
    /// Invariant line y = 0, linearization along it and the tangent cofactor.
    Linearize(RunArgs),
    /// Invariant-line lifting criterion for a planar system.
    Lift(RunArgs),
    /// Logarithmic derivative of h along the system (default h = y).
    DlogSys(RunArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Integer,
    Rational,
}

#[derive(Args)]
struct RunArgs {
    /// System or expression, e.g. "x' = x^3*(x-1); y' = y*x".
    source: Option<String>,
    /// Read the system from a file ("-" for standard input).
    #[arg(long, conflicts_with = "source")]
    input: Option<String>,
    /// Print the report as JSON (schema in schema/report.schema.json).
    #[arg(long)]
    json: bool,
    /// Show the witness together with its verification identity.
    #[arg(long)]
    witness: bool,
    /// Residue class for beta-log and is-dlog.
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    /// Second field for bracket, as "x' = ...; y' = ...".
    #[arg(long = "with")]
    with_field: Option<String>,
    /// Argument of dlog-sys.
    #[arg(long)]
    h: Option<String>,
}

impl CommandAction {
    fn split(self) -> (Command, RunArgs) {
        match self {
            CommandAction::Classify(a) => (Command::Classify, a),
            CommandAction::Base(a) => (Command::Base, a),
            CommandAction::BetaLog(a) => (Command::BetaLog, a),
            CommandAction::BetaDer(a) => (Command::BetaDer, a),
            CommandAction::Residues(a) => (Command::Residues, a),
            CommandAction::IsDlog(a) => (Command::IsDlog, a),
            CommandAction::IsDerivative(a) => (Command::IsDerivative, a),
            CommandAction::Bracket(a) => (Command::Bracket, a),
            CommandAction::Linearize(a) => (Command::Linearize, a),
            CommandAction::Lift(a) => (Command::Lift, a),
            CommandAction::DlogSys(a) => (Command::DlogSys, a),
        }
    }
}

fn read_source(args: &RunArgs) -> CliResult<String> {
    match (&args.source, args.input.as_deref()) {
        (Some(s), _) => Ok(s.clone()),
        (None, Some(path)) if path != "-" => {
            std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn options(args: &RunArgs) -> CliResult<Options> {
    let with_field = match &args.with_field {
        None => None,
        Some(text) => Some(parse_system(text)?.parsed.as_field().ok_or_else(|| {
            CliError::Shape("--with expects a polynomial field x' = P; y' = Q".into())
        })?),
    };
    let h = args.h.as_deref().map(parse_expression).transpose()?;
    Ok(Options {
        class: args.class.map(|c| match c {
            ClassArg::Integer => ResidueClass::Integer,
            ClassArg::Rational => ResidueClass::Rational,
        }),
        with_field,
        h,
    })
}

fn run_command(command: Command, args: RunArgs) -> CliResult<String> {
    let text = read_source(&args)?;
    let source = parse_system(&text)?;
    let opts = options(&args)?;
    let report = run(command, &source, &opts)?;
    let format = if args.json { Format::Json } else { Format::Text };
    emit(&report, format, args.witness)
}

fn run_fixtures(json: bool) -> ExitCode {
    let fixtures = corpus();
    let outcomes = run_all(&fixtures);
    let mut worst = 0u8;
    for o in &outcomes {
        if o.passed() {
            println!("PASS {} [{}]", o.name, o.anchor);
        } else {
            let why = match &o.error {
                Some(e) => e.to_string(),
                None => o.mismatches.join("; "),
            };
            println!("FAIL {} [{}]: {why}", o.name, o.anchor);
            let code = o.error.as_ref().map_or(1, |e| e.exit_code() as u8);
            worst = worst.max(if code == 4 { 4 } else { 1 });
        }
        if json {
            if let Some(r) = &o.report {
                match emit(r, Format::Json, true) {
                    Ok(s) => print!("{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        worst = 4;
                    }
                }
            }
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    println!("{passed}/{} fixtures passed", outcomes.len());
    ExitCode::from(worst)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.action {
        Action::Fixtures {
            what: FixturesAction::Run { json },
        } => run_fixtures(json),
        Action::Command(c) => {
            let (command, args) = c.split();
            match run_command(command, args) {
                Ok(out) => {
                    print!("{out}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
    }
}
