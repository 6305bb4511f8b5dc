//! Command-line front end: parse algebra files and term literals, run the
//! analyses, and emit deterministic reports.
//!
//! Exit codes: 0 on success, 1 when the checked property fails (an axiom
//! counterexample, a non-atomic algebra, a refuted identity, ...), 2 on
//! usage errors such as malformed files.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use calg_core::ada::{ada_closure, atom_bijection, check_ada, FiniteAda};
use calg_core::algebra::FiniteCAlgebra;
use calg_core::annihilator::{ann, closed_sets};
use calg_core::format::{parse_algebra, render_algebra};
use calg_core::ifthenelse::verify_cset_algebraic_budgeted;
use calg_core::order::{atomicity, atoms, first_local_atom};
use calg_core::report::AxiomReport;
use calg_core::term::{decide_quasi_identity, Equation, Mode, Term};
use calg_core::vector::TritVec;

/// Default seed for the randomised sweeps; fixed so runs are reproducible.
const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(name = "calg", version, about = "Finite C-algebra computation engine")]
struct Cli {
    /// Output style: prose or one key=value record per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Seed for randomised sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a C-algebra and verify C1-C7 (and A1-A6
    /// when the universe is closed under down).
    Verify { file: PathBuf },
    /// List every subalgebra of the width-n power.
    Enumerate {
        width: usize,
        /// Write each subalgebra to <dir>/m<i>.alg.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// List the atoms of the algebra in the file.
    Atoms { file: PathBuf },
    /// Decide atomicity and print witness decompositions.
    Atomicity { file: PathBuf },
    /// Is every atom of the algebra an atom of the ambient power?
    Gclosed { file: PathBuf },
    /// Ada analyses.
    Ada {
        #[command(subcommand)]
        command: AdaCommand,
    },
    /// The annihilator of an element within the file's algebra.
    Ann { file: PathBuf, element: String },
    /// The closed sets of the algebra under the double-annihilator
    /// closure, with the Boolean-law report.
    ClosedSets { file: PathBuf },
    /// The partition of the width-n power by annihilator.
    Partition { width: usize },
    /// C-set analyses.
    Cset {
        #[command(subcommand)]
        command: CsetCommand,
    },
    /// Decide an identity (or quasi-identity, via --premise) of the
    /// variety.
    Decide(DecideArgs),
}

#[derive(Subcommand)]
enum AdaCommand {
    /// Is the algebra closed under down, and do A1-A6 hold?
    Check { file: PathBuf },
    /// The closure of the algebra under not/and/or/down.
    Closure {
        file: PathBuf,
        /// Write the closure as an algebra file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The pairing between non-Boolean and Boolean atoms.
    AtomsBijection { file: PathBuf },
}

#[derive(Subcommand)]
enum CsetCommand {
    /// Verify EC1-EC8 for the algebra acting on itself.
    Verify {
        file: PathBuf,
        /// Largest tuple space swept exhaustively; larger spaces are
        /// sampled with the given seed.
        #[arg(long, default_value_t = 600_000)]
        budget: u64,
    },
}

#[derive(Args)]
struct DecideArgs {
    /// Which equational theory to decide against.
    #[arg(long, value_enum, default_value_t = ModeArg::C)]
    mode: ModeArg,
    /// Premise equations "lhs = rhs" turning the query into a
    /// quasi-identity.
    #[arg(long = "premise")]
    premises: Vec<String>,
    lhs: String,
    rhs: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// The (or, and, not) signature.
    C,
    /// The ada signature including down.
    Ada,
}

struct UsageError(String);

impl<E: fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Whether the analysed property failed (exit code 1).
type Outcome = Result<bool, UsageError>;

fn main() -> ExitCode {
    // Die quietly when stdout is closed early (e.g. piped into `head`)
    // instead of panicking on the broken pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    if let Ok(workers) = std::env::var("CALG_WORKERS") {
        if let Ok(n) = workers.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    let format = cli.format;
    let outcome = match cli.command {
        Command::Verify { file } => cmd_verify(&file, format),
        Command::Enumerate { width, emit } => cmd_enumerate(width, emit.as_deref(), format),
        Command::Atoms { file } => cmd_atoms(&file, format),
        Command::Atomicity { file } => cmd_atomicity(&file, format),
        Command::Gclosed { file } => cmd_gclosed(&file, format),
        Command::Ada { command } => match command {
            AdaCommand::Check { file } => cmd_ada_check(&file, format),
            AdaCommand::Closure { file, emit } => cmd_ada_closure(&file, emit.as_deref(), format),
            AdaCommand::AtomsBijection { file } => cmd_ada_bijection(&file, format),
        },
        Command::Ann { file, element } => cmd_ann(&file, &element, format),
        Command::ClosedSets { file } => cmd_closed_sets(&file, format),
        Command::Partition { width } => cmd_partition(width, format),
        Command::Cset { command } => match command {
            CsetCommand::Verify { file, budget } => cmd_cset_verify(&file, budget, cli.seed, format),
        },
        Command::Decide(args) => cmd_decide(&args, format),
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &Path) -> Result<FiniteCAlgebra, UsageError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
    parse_algebra(&text).map_err(|e| UsageError(format!("{}: {e}", file.display())))
}

fn join(elements: &[TritVec], separator: &str) -> String {
    elements
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(separator)
}

fn print_axiom_report(report: &AxiomReport, format: Format) {
    for check in &report.checks {
        match format {
            Format::Human => println!("{check}"),
            Format::Structured => println!(
                "axiom={} holds={} cases={} exhaustive={}{}",
                check.name,
                check.holds,
                check.cases,
                check.exhaustive,
                match &check.counterexample {
                    Some(witness) => format!(" counterexample=\"{witness}\""),
                    None => String::new(),
                }
            ),
        }
    }
}

fn cmd_verify(file: &Path, format: Format) -> Outcome {
    let m = load(file)?;
    if format == Format::Human {
        println!("algebra: width {}, {} elements", m.width(), m.len());
    } else {
        println!("width={}", m.width());
        println!("size={}", m.len());
    }
    let mut failed = false;
    let c_report = m.verify_c_axioms();
    print_axiom_report(&c_report, format);
    failed |= !c_report.all_hold();

    let ada = check_ada(&m);
    match format {
        Format::Human => println!("ada: {}", if ada.closed_under_down { "yes" } else { "no" }),
        Format::Structured => println!("ada={}", ada.closed_under_down),
    }
    if let Some(a_report) = &ada.axioms {
        print_axiom_report(a_report, format);
        failed |= !a_report.all_hold();
    }
    Ok(failed)
}

fn cmd_enumerate(width: usize, emit: Option<&Path>, format: Format) -> Outcome {
    let algebras = FiniteCAlgebra::enumerate_subalgebras(width)?;
    match format {
        Format::Human => {
            println!("subalgebras of 3^{width}: {}", algebras.len());
            for (i, m) in algebras.iter().enumerate() {
                println!("#{i}: {} elements: {}", m.len(), join(m.elements(), " "));
            }
        }
        Format::Structured => {
            println!("count={}", algebras.len());
            for m in &algebras {
                println!("subalgebra={}", join(m.elements(), ","));
            }
        }
    }
    if let Some(dir) = emit {
        std::fs::create_dir_all(dir).map_err(|e| UsageError(format!("{}: {e}", dir.display())))?;
        for (i, m) in algebras.iter().enumerate() {
            let path = dir.join(format!("m{i}.alg"));
            std::fs::write(&path, render_algebra(m))
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(false)
}

fn cmd_atoms(file: &Path, format: Format) -> Outcome {
    let m = load(file)?;
    let found = atoms(&m);
    match format {
        Format::Human => {
            println!("algebra: width {}, {} elements", m.width(), m.len());
            println!("atoms ({}): {}", found.len(), join(&found, " "));
        }
        Format::Structured => {
            for a in &found {
                println!("atom={a}");
            }
        }
    }
    Ok(false)
}

fn cmd_atomicity(file: &Path, format: Format) -> Outcome {
    let m = load(file)?;
    let report = atomicity(&m);
    match format {
        Format::Human => {
            println!("algebra: width {}, {} elements", m.width(), m.len());
            println!("atomic: {}", report.atomic);
            for (element, witness) in &report.decomposition {
                println!("  {element} = {}", join(witness, " + "));
            }
            if let Some(obstruction) = &report.obstruction {
                println!("obstruction: {obstruction}");
            }
        }
        Format::Structured => {
            println!("atomic={}", report.atomic);
            for (element, witness) in &report.decomposition {
                println!("witness.{element}={}", join(witness, ","));
            }
            if let Some(obstruction) = &report.obstruction {
                println!("obstruction={obstruction}");
            }
        }
    }
    Ok(!report.atomic)
}

fn cmd_gclosed(file: &Path, format: Format) -> Outcome {
    let m = load(file)?;
    let local = first_local_atom(&m);
    let closed = local.is_none();
    match format {
        Format::Human => {
            println!("g-closed: {closed}");
            if let Some(atom) = local {
                println!("local atom: {atom} (not an atom of 3^{})", m.width());
            }
        }
        Format::Structured => {
            println!("gclosed={closed}");
            if let Some(atom) = local {
                println!("local_atom={atom}");
            }
        }
    }
    Ok(!closed)
}

fn cmd_ada_check(file: &Path, format: Format) -> Outcome {
    let m = load(file)?;
    let check = check_ada(&m);
    match format {
        Format::Human => {
            println!("ada: {}", check.is_ada());
            if let Some((element, image)) = &check.first_escape {
                println!("escape: down({element}) = {image} is not in the universe");
            }
        }
        Format::Structured => {
            println!("ada={}", check.is_ada());
            if let Some((element, image)) = &check.first_escape {
                println!("escape={element}:{image}");
            }
        }
    }
    if let Some(report) = &check.axioms {
        print_axiom_report(report, format);
    }
    Ok(!check.is_ada())
}

fn cmd_ada_closure(file: &Path, emit: Option<&Path>, format: Format) -> Outcome {
    let m = load(file)?;
    let closed = ada_closure(&m);
    match format {
        Format::Human => {
            println!(
                "closure: {} elements (from {})",
                closed.elements().len(),
                m.len()
            );
            println!("{}", join(closed.elements(), " "));
        }
        Format::Structured => {
            println!("size={}", closed.elements().len());
            for e in closed.elements() {
                println!("element={e}");
            }
        }
    }
    if let Some(path) = emit {
        std::fs::write(path, render_algebra(closed.algebra()))
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    Ok(false)
}

fn cmd_ada_bijection(file: &Path, format: Format) -> Outcome {
    let m = load(file)?;
    let ada = FiniteAda::new(m)?;
    let pairing = atom_bijection(&ada)?;
    match format {
        Format::Human => {
            println!("atom pairing ({} pairs):", pairing.len());
            for (from, to) in &pairing {
                println!("  {from} -> {to}");
            }
        }
        Format::Structured => {
            for (from, to) in &pairing {
                println!("pair={from}:{to}");
            }
        }
    }
    Ok(false)
}

fn cmd_ann(file: &Path, element: &str, format: Format) -> Outcome {
    let m = load(file)?;
    let a = TritVec::parse(element)?;
    let annihilator = ann(&m, &a)?;
    match format {
        Format::Human => {
            println!("Ann({a}) = {{{}}}", join(&annihilator, ", "));
        }
        Format::Structured => {
            for e in &annihilator {
                println!("annihilator={e}");
            }
        }
    }
    Ok(false)
}

fn cmd_closed_sets(file: &Path, format: Format) -> Outcome {
    let m = load(file)?;
    let family = closed_sets(&m);
    let laws = family.verify_boolean_laws();
    match format {
        Format::Human => {
            println!("closed sets: {}", family.len());
            for set in family.sets() {
                println!("  {{{}}}", join(set, ", "));
            }
            println!(
                "boolean laws: {}",
                if laws.all_hold() { "all hold" } else { "FAIL" }
            );
            if let Some(failure) = laws.first_failure() {
                println!("  {failure}");
            }
        }
        Format::Structured => {
            for set in family.sets() {
                println!("closed_set={}", join(set, ","));
            }
            println!("boolean_laws={}", laws.all_hold());
        }
    }
    Ok(!laws.all_hold())
}

fn render_mask(mask: u64, width: usize) -> String {
    let coords: Vec<String> = (0..width)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", coords.join(","))
}

fn cmd_partition(width: usize, format: Format) -> Outcome {
    let classes = calg_core::annihilator::partition_by_annihilator(width)?;
    match format {
        Format::Human => {
            println!("partition of 3^{width} by annihilator: {} classes", classes.len());
            for (mask, class) in &classes {
                println!(
                    "S{} ({}): {}",
                    render_mask(*mask, width),
                    class.len(),
                    join(class, " ")
                );
            }
        }
        Format::Structured => {
            for (mask, class) in &classes {
                println!(
                    "class={} size={} members={}",
                    render_mask(*mask, width),
                    class.len(),
                    join(class, ",")
                );
            }
        }
    }
    Ok(false)
}

fn cmd_cset_verify(file: &Path, budget: u64, seed: u64, format: Format) -> Outcome {
    let m = load(file)?;
    let report = verify_cset_algebraic_budgeted(&m, budget, seed);
    print_axiom_report(&report, format);
    Ok(!report.all_hold())
}

fn parse_equation(text: &str) -> Result<Equation, UsageError> {
    let (lhs, rhs) = text
        .split_once('=')
        .ok_or_else(|| UsageError(format!("premise {text:?} must look like \"lhs = rhs\"")))?;
    Ok(Equation::new(Term::parse(lhs)?, Term::parse(rhs)?))
}

fn cmd_decide(args: &DecideArgs, format: Format) -> Outcome {
    let mode = match args.mode {
        ModeArg::C => Mode::CAlgebra,
        ModeArg::Ada => Mode::Ada,
    };
    let lhs = Term::parse(&args.lhs)?;
    let rhs = Term::parse(&args.rhs)?;
    let premises = args
        .premises
        .iter()
        .map(|p| parse_equation(p))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = decide_quasi_identity(&premises, &Equation::new(lhs, rhs), mode)?;
    match format {
        Format::Human => {
            println!(
                "mode: {}",
                match mode {
                    Mode::CAlgebra => "c-algebra",
                    Mode::Ada => "ada",
                }
            );
            for premise in &args.premises {
                println!("premise: {premise}");
            }
            println!("identity: {} = {}", args.lhs, args.rhs);
            println!("holds: {}", verdict.holds);
            if let Some(witness) = &verdict.counterexample {
                let rendered: Vec<String> = witness
                    .iter()
                    .enumerate()
                    .map(|(i, t)| format!("x{i}={t}"))
                    .collect();
                println!("counterexample: {}", rendered.join(" "));
            }
        }
        Format::Structured => {
            println!("holds={}", verdict.holds);
            if let Some(witness) = &verdict.counterexample {
                let rendered: Vec<String> = witness.iter().map(|t| t.to_string()).collect();
                println!("counterexample={}", rendered.join(","));
            }
        }
    }
    Ok(!verdict.holds)
}
