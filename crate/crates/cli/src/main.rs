mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::{HierarchyEntry, Report};
use transversal_core::analysis::{
    check_conversion_angles, check_mixed, check_two_qubit, classify_with, cross_check, cross_check_2q, decompress,
    irrational_admissibility, two_qubit_family, wedge_conditions_weighted, AnalysisError, Caps, Verdict,
};
use transversal_core::angles::{
    hierarchy_level_1q, hierarchy_level_2q_diagonal, AngleVector, DiagonalGate1Q, DiagonalGate2Q, RationalAngle,
};
use transversal_core::code::{catalog_code, css_view, parse_code, serialize_code, CodeError, StabilizerCode};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Parser)]
#[command(name = "transversal", version, about = "Classify transversal diagonal gates on stabilizer codes")]
struct Cli {
    /// Emit a JSON report on standard output.
    #[arg(long, global = true)]
    json: bool,
    /// Largest n - k enumerated by the group engine.
    #[arg(long, global = true, default_value_t = 22)]
    group_cap: usize,
    /// Largest n - k for the exact oracle; larger codes skip it.
    #[arg(long, global = true, default_value_t = 22)]
    oracle_cap: usize,
    /// Largest qubit count simulated densely.
    #[arg(long, global = true, default_value_t = 15)]
    float_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CodeSource {
    /// Code file.
    file: Option<PathBuf>,
    /// Built-in code: steane7, rm15, fivequbit, c422 or rm<2^m-1>.
    #[arg(long, conflicts_with = "file")]
    catalog: Option<String>,
}

#[derive(Args)]
struct AngleArgs {
    /// Uniform angle `p/q` (units of π) on every qubit.
    #[arg(long, conflicts_with = "thetas", allow_hyphen_values = true)]
    theta: Option<RationalAngle>,
    /// Angle of the |0> entry; only θ - φ matters.
    #[arg(long, requires = "theta")]
    phi: Option<RationalAngle>,
    /// Comma-separated per-qubit angles.
    #[arg(long)]
    thetas: Option<AngleVector>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a code.
    Validate {
        #[command(flatten)]
        code: CodeSource,
    },
    /// Classify admissible Z rotations.
    Analyze {
        #[command(flatten)]
        code: CodeSource,
    },
    /// Check one diagonal gate.
    Check {
        #[command(flatten)]
        code: CodeSource,
        #[command(flatten)]
        angles: AngleArgs,
    },
    /// Check a two-qubit diagonal gate across two blocks of the code.
    TwoQubit {
        #[command(flatten)]
        code: CodeSource,
        /// `t00,t01,t10,t11`.
        #[arg(long)]
        gate: DiagonalGate2Q,
    },
    /// Split one qubit into m copies and print the new code file.
    Decompress {
        #[command(flatten)]
        code: CodeSource,
        #[arg(long)]
        qubit: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        m: u64,
    },
    /// Check whether a diagonal gate maps one codespace into another.
    Convert {
        source: PathBuf,
        target: PathBuf,
        #[command(flatten)]
        angles: AngleArgs,
    },
}

/// Failure that ends the command with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        let code = match &e {
            AnalysisError::Disagreement(_) => EXIT_DISAGREEMENT,
            AnalysisError::Angle(_) | AnalysisError::BadIndex { .. } | AnalysisError::BadMultiplicity(_) => {
                EXIT_USAGE
            }
            _ => EXIT_NEGATIVE,
        };
        Self { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn load_file(path: &PathBuf) -> Result<StabilizerCode, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_code(&text).map_err(|e| match e {
        CodeError::Invalid(vs) => Failure {
            code: EXIT_NEGATIVE,
            message: vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n"),
        },
        other => usage(format!("{}: {other}", path.display())),
    })
}

fn load(src: &CodeSource) -> Result<StabilizerCode, Failure> {
    match (&src.file, &src.catalog) {
        (Some(path), None) => load_file(path),
        (None, Some(name)) => catalog_code(name).ok_or_else(|| usage(format!("unknown catalog code {name:?}"))),
        _ => Err(usage("give a code file or --catalog NAME")),
    }
}

fn angle_vector(args: &AngleArgs, n: usize) -> Result<AngleVector, Failure> {
    match (&args.theta, &args.thetas) {
        (Some(theta), None) => {
            let gate = DiagonalGate1Q::new(args.phi.unwrap_or_default(), *theta);
            Ok(AngleVector::uniform(n, gate.difference()))
        }
        (None, Some(v)) => {
            v.check_len(n).map_err(|e| usage(e.to_string()))?;
            Ok(v.clone())
        }
        _ => Err(usage("give --theta or --thetas")),
    }
}

struct Outcome {
    report: Report,
    exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        group: cli.group_cap,
        oracle: cli.oracle_cap,
        float: cli.float_cap,
        ..Caps::default()
    };
    let result = match &cli.command {
        Command::Validate { code } => return validate(code),
        Command::Decompress { code, qubit, m } => return run_decompress(code, *qubit, *m),
        Command::Analyze { code } => analyze(code, &caps),
        Command::Check { code, angles } => check(code, angles, &caps),
        Command::TwoQubit { code, gate } => two_qubit(code, gate, &caps),
        Command::Convert { source, target, angles } => convert(source, target, angles, &caps),
    };
    match result {
        Ok(Outcome { report, exit }) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("{}", report.render_text());
            }
            let exit = if report.engine_agreement { exit } else { EXIT_DISAGREEMENT };
            ExitCode::from(exit)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn validate(src: &CodeSource) -> ExitCode {
    match load(src) {
        Ok(code) => {
            println!("valid [[{},{}]] {}", code.n, code.k, code.display_name());
            ExitCode::SUCCESS
        }
        Err(f) => {
            if f.code == EXIT_NEGATIVE {
                println!("{}", f.message);
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run_decompress(src: &CodeSource, qubit: usize, m: u64) -> ExitCode {
    let result = load(src).and_then(|code| {
        let zeros = AngleVector::uniform(code.n, RationalAngle::ZERO);
        Ok(decompress(&code, qubit, m, &zeros)?.0)
    });
    match result {
        Ok(code) => {
            print!("{}", serialize_code(&code));
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn analyze(src: &CodeSource, caps: &Caps) -> Result<Outcome, Failure> {
    let code = load(src)?;
    let mut report = Report::new("analyze", code.display_name());
    let class = classify_with(&code, caps)?;
    report.admissible_set = Some(class.admissible_set());
    if let Some(w) = &class.violation_witness_at_k_max_plus_1 {
        report.witnesses.push(w.clone());
    }
    if let Some(k) = class.k_max {
        let gate = DiagonalGate1Q::z(RationalAngle::dyadic(1, k));
        report.hierarchy.push(HierarchyEntry {
            gate: format!("Z({})", gate.theta),
            level: hierarchy_level_1q(&gate),
        });
        for kk in [k, k + 1] {
            let theta = RationalAngle::dyadic(1, kk);
            let check = cross_check(&code, &AngleVector::uniform(code.n, theta), caps)?;
            report.add_cross_check(format!("Z({theta})"), check);
        }
    }
    match two_qubit_family(&code, caps) {
        Ok(f) => report.two_qubit_family = Some(f),
        Err(e) => report.notes.push(format!("two-qubit family: {e}")),
    }
    match irrational_admissibility(&code, caps.irrational) {
        Ok(r) => report.irrational = Some(r),
        Err(e) => report.notes.push(format!("irrational system: {e}")),
    }
    report.notes.push(format!(
        "angles with an odd denominator factor were swept up to q = {}; beyond that the exclusion is not enumerated",
        caps.q_sweep
    ));
    report.classification = Some(class);
    Ok(Outcome { report, exit: 0 })
}

/// Group engine when within its cap, wedge engine otherwise.
fn primary_verdict(code: &StabilizerCode, angles: &AngleVector, caps: &Caps) -> Result<Verdict, Failure> {
    match check_mixed(code, angles, caps.group) {
        Ok(m) => Ok(m.verdict),
        Err(AnalysisError::CapExceeded { .. }) => {
            let view = css_view(code).map_err(|e| Failure {
                code: EXIT_NEGATIVE,
                message: format!("group engine over its cap and no CSS fallback: {e}"),
            })?;
            Ok(wedge_conditions_weighted(&view, angles)?.into_verdict())
        }
        Err(e) => Err(e.into()),
    }
}

fn finish(mut report: Report, verdict: Verdict) -> Outcome {
    let exit = if verdict.preserves_codespace { 0 } else { EXIT_NEGATIVE };
    if let Some(w) = &verdict.witness {
        report.witnesses.push(w.clone());
    }
    report.verdict = Some(verdict);
    Outcome { report, exit }
}

fn check(src: &CodeSource, args: &AngleArgs, caps: &Caps) -> Result<Outcome, Failure> {
    let code = load(src)?;
    let angles = angle_vector(args, code.n)?;
    let mut report = Report::new("check", code.display_name());
    let dropped = angles.identity_qubits();
    if !dropped.is_empty() && args.thetas.is_some() {
        report.notes.push(format!("qubits with angle 0 impose no condition and are dropped: {dropped:?}"));
    }
    let verdict = primary_verdict(&code, &angles, caps)?;
    if let Some(theta) = args.theta {
        let gate = DiagonalGate1Q::new(args.phi.unwrap_or_default(), theta);
        report.hierarchy.push(HierarchyEntry {
            gate: format!("Z({})", gate.difference()),
            level: hierarchy_level_1q(&gate),
        });
    }
    let label = match args.theta {
        Some(t) => format!("Z({t})"),
        None => "per-qubit angles".into(),
    };
    report.add_cross_check(label, cross_check(&code, &angles, caps)?);
    Ok(finish(report, verdict))
}

fn two_qubit(src: &CodeSource, gate: &DiagonalGate2Q, caps: &Caps) -> Result<Outcome, Failure> {
    let code = load(src)?;
    let mut report = Report::new("two-qubit", code.display_name());
    let verdict = match check_two_qubit(&code, gate, caps.pair) {
        Ok(v) => v,
        Err(e @ AnalysisError::CapExceeded { .. }) => {
            return Err(Failure { code: EXIT_NEGATIVE, message: e.to_string() });
        }
        Err(e) => return Err(e.into()),
    };
    match two_qubit_family(&code, caps) {
        Ok(f) => {
            report.in_two_qubit_family = Some(f.contains(gate));
            report.two_qubit_family = Some(f);
        }
        Err(e) => report.notes.push(format!("two-qubit family: {e}")),
    }
    if let Some(p) = &verdict.logical_diagonal {
        if let Ok(arr) = <[RationalAngle; 4]>::try_from(p.clone()) {
            let logical = DiagonalGate2Q::new(arr);
            report.hierarchy.push(HierarchyEntry {
                gate: format!("logical diag({})", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
                level: hierarchy_level_2q_diagonal(&logical),
            });
        } else {
            report.notes.push("hierarchy level is computed for single logical qubits only".into());
        }
    }
    report.add_cross_check("two-block gate".into(), cross_check_2q(&code, gate, caps)?);
    Ok(finish(report, verdict))
}

fn convert(source: &PathBuf, target: &PathBuf, args: &AngleArgs, caps: &Caps) -> Result<Outcome, Failure> {
    let s = load_file(source)?;
    let t = load_file(target)?;
    let angles = angle_vector(args, s.n)?;
    let mut report = Report::new("convert", format!("{} -> {}", s.display_name(), t.display_name()));
    let conv = check_conversion_angles(&s, &t, &angles, caps)?;
    report.oracle = "ran".into();
    let verdict = conv.verdict.clone();
    report.conversion = Some(conv);
    Ok(finish(report, verdict))
}
