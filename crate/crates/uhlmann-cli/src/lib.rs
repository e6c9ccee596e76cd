//! Command-line front end for the quantum-state geometry library.
//!
//! Ten subcommands cover state comparison (`compare`, `fidelity`,
//! `superfidelity`), Bloch-vector conversion (`bloch`, `unbloch`, `extend`,
//! `generators`), and equal-fidelity geometry (`surface`, `section`,
//! `minfid`). Outputs are machine-readable JSON or CSV, written to `--out`
//! or stdout. Identical arguments and seeds always produce byte-identical
//! output.
//!
//! Exit codes: 0 success, 1 domain or validation error (one line on stderr
//! with an `ERROR <kind>:` prefix), 2 usage error.

use serde::Serialize;
use uhlmann::{
    compare, fidelity, min_fidelity_state, su_generators, DensityMatrix, EqualFidelitySurface,
    GeneralizedBlochVector, SurfacePoint,
};

mod args;
pub mod io;

use args::Args;
use io::{PointRecord, StateFile, VectorFile};

pub const USAGE: &str = "\
usage: uhlmann <command> [flags]

state comparison
  compare        --a FILE --b FILE [--out PATH]
  fidelity       --a FILE --b FILE [--out PATH]
  superfidelity  --a FILE --b FILE [--out PATH]

Bloch representations
  bloch          --in STATE [--scale S] [--out PATH]
  unbloch        --in VECTOR [--scale S] [--out PATH]
  extend         --in STATE|VECTOR [--out PATH]
  generators     --dim N [--out PATH]

equal-fidelity geometry (target on the +z axis; --target FILE reduces a
qubit state file to its Bloch length, i.e. the frame rotated so the target
points along +z)
  surface        --lambda L | --target FILE  --fidelity F
                 [--samples N] [--seed S] [--include-spurious] [--out PATH]
  section        --lambda L | --target FILE  --fidelity F
                 [--points N] [--out PATH]
  minfid         --lambda L | --target FILE  [--out PATH]

States are JSON {\"dim\": N, \"re\": [[..]], \"im\": [[..]]}; vectors are
{\"dim\": N, \"components\": [..]}. Numeric flags accept fractions (2/5).
Bloch components use the half-radius convention (qubit pure states at
length 1/2); --scale rescales vector components on output (bloch) or
input (unbloch), e.g. --scale 2 for the radius-1 convention.
Surface CSV columns: x,y,z,fidelity_check,spurious. The fidelity_check
column is recomputed per point from the full matrix-route fidelity.
Defaults: --seed 42, --samples 1000, --points 360, --scale 1.
Exit codes: 0 ok, 1 domain/validation error (ERROR <kind>: ...), 2 usage.
";

/// Errors carried to the process boundary.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Json(String),
    Format(String),
    State(uhlmann::Error),
}

impl CliError {
    /// Stable machine-parsable kind token for the `ERROR <kind>:` prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Json(_) => "json",
            CliError::Format(_) => "format",
            CliError::State(e) => match e {
                uhlmann::Error::DimensionMismatch { .. }
                | uhlmann::Error::DimensionTooSmall { .. } => "dimension",
                uhlmann::Error::NotSquare { .. } | uhlmann::Error::NonFinite { .. } => "format",
                uhlmann::Error::NotHermitian { .. } => "not-hermitian",
                uhlmann::Error::InvalidTrace { .. } => "invalid-trace",
                uhlmann::Error::NotPositiveSemidefinite { .. } => "not-psd",
                uhlmann::Error::InvalidPurity { .. } => "invalid-purity",
                uhlmann::Error::InvalidState { .. } => "invalid-state",
                uhlmann::Error::Domain(_) => "domain",
                uhlmann::Error::NoSolution { .. } => "no-solution",
                uhlmann::Error::NoConvergence { .. } => "no-convergence",
            },
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Json(m) | CliError::Format(m) => {
                m.clone()
            }
            CliError::State(e) => e.to_string(),
        }
    }
}

impl From<uhlmann::Error> for CliError {
    fn from(e: uhlmann::Error) -> Self {
        CliError::State(e)
    }
}

/// Run one invocation; returns the process exit code.
pub fn run(argv: &[String]) -> i32 {
    match dispatch(argv) {
        Ok(()) => 0,
        Err(CliError::Usage(message)) => {
            eprintln!("ERROR usage: {message}");
            eprint!("{USAGE}");
            2
        }
        Err(other) => {
            eprintln!("ERROR {}: {}", other.kind(), other.message());
            1
        }
    }
}

fn dispatch(argv: &[String]) -> Result<(), CliError> {
    let (command, rest) = argv
        .split_first()
        .ok_or_else(|| CliError::Usage("no command given".to_string()))?;
    match command.as_str() {
        "compare" => cmd_compare(rest),
        "fidelity" => cmd_fidelity(rest),
        "superfidelity" => cmd_superfidelity(rest),
        "bloch" => cmd_bloch(rest),
        "unbloch" => cmd_unbloch(rest),
        "extend" => cmd_extend(rest),
        "generators" => cmd_generators(rest),
        "surface" => cmd_surface(rest),
        "section" => cmd_section(rest),
        "minfid" => cmd_minfid(rest),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            Ok(())
        }
        other => Err(CliError::Usage(format!("unknown command '{other}'"))),
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))
}

fn write_output(out: Option<&str>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Io(format!("cannot write {path}: {e}"))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Json(format!("cannot encode output: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn load_state(path: &str) -> Result<DensityMatrix, CliError> {
    let text = read_file(path)?;
    let file: StateFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Json(format!("{path} is not a valid state file: {e}")))?;
    file.to_density()
}

fn load_state_pair(args: &Args) -> Result<(DensityMatrix, DensityMatrix), CliError> {
    let a = load_state(args.require("a")?)?;
    let b = load_state(args.require("b")?)?;
    Ok((a, b))
}

#[derive(Serialize)]
struct ReportFile {
    fidelity: f64,
    super_fidelity: f64,
    d_l: f64,
    bures_distance: f64,
    inner_distance: f64,
    fidelity_raw: f64,
    super_fidelity_raw: f64,
}

fn cmd_compare(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(rest, &["a", "b", "out"], &[])?;
    let (a, b) = load_state_pair(&args)?;
    let r = compare(&a, &b)?;
    let out = ReportFile {
        fidelity: r.fidelity,
        super_fidelity: r.super_fidelity,
        d_l: r.d_l,
        bures_distance: r.bures_distance,
        inner_distance: r.inner_distance,
        fidelity_raw: r.fidelity_raw,
        super_fidelity_raw: r.super_fidelity_raw,
    };
    write_output(args.get("out"), &to_pretty_json(&out)?)
}

fn cmd_fidelity(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(rest, &["a", "b", "out"], &[])?;
    let (a, b) = load_state_pair(&args)?;
    #[derive(Serialize)]
    struct Out {
        fidelity: f64,
    }
    let out = Out {
        fidelity: fidelity(&a, &b)?,
    };
    write_output(args.get("out"), &to_pretty_json(&out)?)
}

fn cmd_superfidelity(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(rest, &["a", "b", "out"], &[])?;
    let (a, b) = load_state_pair(&args)?;
    #[derive(Serialize)]
    struct Out {
        super_fidelity: f64,
    }
    let out = Out {
        super_fidelity: uhlmann::super_fidelity(&a, &b)?,
    };
    write_output(args.get("out"), &to_pretty_json(&out)?)
}

fn scale_factor(args: &Args) -> Result<f64, CliError> {
    match args.get("scale") {
        None => Ok(1.0),
        Some(text) => {
            let s = args::number(text)?;
            if s == 0.0 || !s.is_finite() {
                return Err(CliError::Usage("--scale must be finite and nonzero".into()));
            }
            Ok(s)
        }
    }
}

fn cmd_bloch(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(rest, &["in", "out", "scale"], &[])?;
    let scale = scale_factor(&args)?;
    let rho = load_state(args.require("in")?)?;
    let b = rho.to_bloch();
    let out = VectorFile {
        dim: b.dim(),
        components: b.components().iter().map(|x| x * scale).collect(),
    };
    write_output(args.get("out"), &to_pretty_json(&out)?)
}

fn cmd_unbloch(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(rest, &["in", "out", "scale"], &[])?;
    let scale = scale_factor(&args)?;
    let path = args.require("in")?;
    let text = read_file(path)?;
    let file: VectorFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Json(format!("{path} is not a valid vector file: {e}")))?;
    let components: Vec<f64> = file.components.iter().map(|x| x / scale).collect();
    let b = GeneralizedBlochVector::new(file.dim, components)?;
    let rho = b.to_density()?;
    write_output(
        args.get("out"),
        &to_pretty_json(&StateFile::from_density(&rho))?,
    )
}

fn cmd_extend(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(rest, &["in", "out"], &[])?;
    let path = args.require("in")?;
    let text = read_file(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Json(format!("{path} is not valid JSON: {e}")))?;
    let extended = if value.get("components").is_some() {
        let file: VectorFile = serde_json::from_value(value)
            .map_err(|e| CliError::Json(format!("{path} is not a valid vector file: {e}")))?;
        GeneralizedBlochVector::new(file.dim, file.components)?.extend()?
    } else {
        let file: StateFile = serde_json::from_value(value)
            .map_err(|e| CliError::Json(format!("{path} is not a valid state file: {e}")))?;
        file.to_density()?.extended_bloch()
    };
    let out = VectorFile {
        dim: extended.dim(),
        components: extended.components().to_vec(),
    };
    write_output(args.get("out"), &to_pretty_json(&out)?)
}

#[derive(Serialize)]
struct MatrixParts {
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

fn cmd_generators(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(rest, &["dim", "out"], &[])?;
    let dim = args::unsigned(args.require("dim")?)?;
    let gens = su_generators(dim)?;
    #[derive(Serialize)]
    struct Out {
        dim: usize,
        generators: Vec<MatrixParts>,
    }
    let generators = gens
        .iter()
        .map(|g| {
            let file = StateFile::from_hermitian(g);
            MatrixParts {
                re: file.re,
                im: file.im,
            }
        })
        .collect();
    let out = Out { dim, generators };
    write_output(args.get("out"), &to_pretty_json(&out)?)
}

/// Target Bloch length from either `--lambda` or a qubit `--target` state
/// file (reduced to the frame where the target lies on +z).
fn target_lambda(args: &Args) -> Result<f64, CliError> {
    match (args.get("lambda"), args.get("target")) {
        (Some(text), None) => args::number(text),
        (None, Some(path)) => {
            let rho = load_state(path)?;
            if rho.dim() != 2 {
                return Err(CliError::State(uhlmann::Error::DimensionMismatch {
                    left: 2,
                    right: rho.dim(),
                }));
            }
            Ok(rho.to_bloch().norm())
        }
        (Some(_), Some(_)) => Err(CliError::Usage(
            "--lambda and --target are mutually exclusive".into(),
        )),
        (None, None) => Err(CliError::Usage(
            "one of --lambda or --target is required".into(),
        )),
    }
}

/// Recompute the fidelity of each emitted point against the target through
/// the full matrix route.
fn point_records(lambda: f64, points: &[SurfacePoint]) -> Result<Vec<PointRecord>, CliError> {
    let target = GeneralizedBlochVector::qubit(0.0, 0.0, lambda)?.to_density()?;
    points
        .iter()
        .map(|p| {
            let state =
                GeneralizedBlochVector::qubit(p.bloch[0], p.bloch[1], p.bloch[2])?.to_density()?;
            Ok(PointRecord {
                x: p.bloch[0],
                y: p.bloch[1],
                z: p.bloch[2],
                fidelity_check: fidelity(&target, &state)?,
                spurious: p.spurious,
            })
        })
        .collect()
}

fn cmd_surface(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(
        rest,
        &["lambda", "target", "fidelity", "samples", "seed", "out"],
        &["include-spurious"],
    )?;
    let lambda = target_lambda(&args)?;
    let level = args::number(args.require("fidelity")?)?;
    let samples = match args.get("samples") {
        Some(text) => args::unsigned(text)?,
        None => 1000,
    };
    let seed = match args.get("seed") {
        Some(text) => args::seed(text)?,
        None => 42,
    };
    let surface = EqualFidelitySurface::new(lambda, level)?;
    let points = surface.sample_points(samples, seed, args.switch("include-spurious"));
    let records = point_records(surface.lambda_t(), &points)?;
    write_output(args.get("out"), &io::to_csv(&records))
}

fn cmd_section(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(
        rest,
        &["lambda", "target", "fidelity", "points", "out"],
        &[],
    )?;
    let lambda = target_lambda(&args)?;
    let level = args::number(args.require("fidelity")?)?;
    let points = match args.get("points") {
        Some(text) => args::unsigned(text)?,
        None => 360,
    };
    let surface = EqualFidelitySurface::new(lambda, level)?;
    let section = surface.cross_section_xz(points)?;
    let records = point_records(surface.lambda_t(), &section)?;
    write_output(args.get("out"), &io::to_csv(&records))
}

fn cmd_minfid(rest: &[String]) -> Result<(), CliError> {
    let args = Args::parse(rest, &["lambda", "target", "out"], &[])?;
    let lambda = target_lambda(&args)?;
    let (bloch, min_fidelity) = min_fidelity_state(lambda)?;
    #[derive(Serialize)]
    struct Out {
        lambda_t: f64,
        bloch: [f64; 3],
        min_fidelity: f64,
    }
    let out = Out {
        lambda_t: lambda,
        bloch,
        min_fidelity,
    };
    write_output(args.get("out"), &to_pretty_json(&out)?)
}
