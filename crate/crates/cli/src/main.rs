//! `skewcount`: count, list, cross-check and draw lattice paths in skew shapes.

mod verify;

use std::fmt::Display;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use skewcount::{
    count_paths_dp, enumerate_disjoint_families, enumerate_paths, enumerate_tilings, gv_count, gv_endpoints,
    kreweras_count, lattice_path_to_tiling, parse_shape, region_from_shape, render_svg, Count, LatticePath, PathError,
    Point, Shading, ShapeError, SkewShape, TilingError, DEFAULT_CAP,
};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "skewcount", version, about = "Exact lattice-path counts in skew Young diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct CapArg {
    /// Maximum number of items an enumeration may produce.
    #[arg(long, env = "SKEWCOUNT_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print N(λ/μ) computed by one method.
    Count {
        /// Shape such as `9,7,6,2/3,1`.
        shape: String,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Run every method on a set of shapes and report as JSON lines.
    Verify {
        /// Sweep every λ in an AxB box (A rows, B columns) and every μ ⊊ λ.
        #[arg(long = "box", value_name = "AxB", conflicts_with = "shapes")]
        box_dims: Option<String>,
        #[arg(required_unless_present = "box_dims")]
        shapes: Vec<String>,
        /// Worker threads; 1 keeps canonical order, 0 picks a default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Leave out the per-method timings, so output is byte-reproducible.
        #[arg(long)]
        no_timings: bool,
        #[command(flatten)]
        cap: CapArg,
    },
    /// List paths, tilings or disjoint path families in canonical order.
    Enumerate {
        shape: String,
        what: What,
        /// Show at most this many items.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Draw the region of a shape, optionally with one tiling, as SVG.
    Render {
        shape: String,
        /// Index into the canonical tiling list.
        #[arg(long, conflicts_with = "path")]
        tiling: Option<usize>,
        /// Tiling given by its lattice path, e.g. `NEEN`.
        #[arg(long)]
        path: Option<String>,
        #[arg(long, value_enum, default_value_t = Shade::None)]
        shade: Shade,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        cap: CapArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Det,
    Dp,
    Enum,
    Tilings,
    Gv,
    GvDet,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Paths,
    Tilings,
    Families,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shade {
    None,
    A,
    B,
    Both,
}

impl From<Shade> for Shading {
    fn from(s: Shade) -> Self {
        match s {
            Shade::None => Shading::NONE,
            Shade::A => Shading::A,
            Shade::B => Shading::B,
            Shade::Both => Shading::BOTH,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Shape(#[from] ShapeError),
    #[error("bad box {0:?}, expected AxB")]
    BadBox(String),
    #[error("enumeration exceeded the cap of {0} items")]
    CapExceeded(usize),
    #[error("tiling index {index} out of range, {shape} has {count} tilings")]
    BadIndex { index: usize, shape: String, count: usize },
    #[error("{0}")]
    NotAdmissible(String),
    #[error("{0}")]
    Tiling(TilingError),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("methods disagree on {0}")]
    Disagreement(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Disagreement(_) | CliError::Io(_) | CliError::Tiling(_) => 1,
            CliError::Shape(_) | CliError::BadBox(_) | CliError::BadIndex { .. } | CliError::NotAdmissible(_) => 2,
            CliError::CapExceeded(_) => 3,
        }
    }
}

impl From<PathError> for CliError {
    fn from(e: PathError) -> Self {
        match e {
            PathError::CapExceeded { cap } => CliError::CapExceeded(cap),
            other => CliError::NotAdmissible(other.to_string()),
        }
    }
}

impl From<TilingError> for CliError {
    fn from(e: TilingError) -> Self {
        match e {
            TilingError::CapExceeded { cap } => CliError::CapExceeded(cap),
            e @ TilingError::NotAdmissible { .. } => CliError::NotAdmissible(e.to_string()),
            other => CliError::Tiling(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("skewcount: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Count { shape, method, cap } => {
            let shape = parse_shape(&shape)?;
            println!("{}", count(&shape, method, cap.cap)?);
            Ok(())
        }
        Command::Verify { box_dims, shapes, jobs, no_timings, cap } => {
            let shapes = match box_dims {
                Some(dims) => verify::box_shapes(&dims).ok_or(CliError::BadBox(dims))?,
                None => shapes.iter().map(|s| parse_shape(s)).collect::<Result<_, _>>()?,
            };
            verify::run(&shapes, jobs, cap.cap, !no_timings)
        }
        Command::Enumerate { shape, what, limit, format, cap } => {
            let shape = parse_shape(&shape)?;
            enumerate(&shape, what, limit, format, cap.cap)
        }
        Command::Render { shape, tiling, path, shade, output, cap } => {
            let shape = parse_shape(&shape)?;
            let svg = render(&shape, tiling, path.as_deref(), shade.into(), cap.cap)?;
            match output {
                Some(file) => std::fs::write(file, svg)?,
                None => io::stdout().write_all(svg.as_bytes())?,
            }
            Ok(())
        }
    }
}

fn count(shape: &SkewShape, method: Method, cap: usize) -> Result<Count, CliError> {
    Ok(match method {
        Method::Det => kreweras_count(shape),
        Method::Dp => count_paths_dp(shape),
        Method::Enum => enumerate_paths(shape, cap)?.len().into(),
        Method::Tilings => enumerate_tilings(&region_from_shape(shape), cap)?.len().into(),
        Method::Gv => enumerate_disjoint_families(&gv_endpoints(shape), cap)?.len().into(),
        Method::GvDet => gv_count(&gv_endpoints(shape)),
    })
}

#[derive(Serialize)]
struct PathJson {
    start: Point,
    steps: String,
}

impl From<&LatticePath> for PathJson {
    fn from(p: &LatticePath) -> Self {
        PathJson { start: p.start(), steps: p.to_string() }
    }
}

#[derive(Serialize)]
struct Truncated {
    truncated: bool,
    shown: usize,
}

fn enumerate(shape: &SkewShape, what: What, limit: Option<usize>, format: Format, cap: usize) -> Result<(), CliError> {
    // (text line, json value) per item
    let items: Vec<(String, serde_json::Value)> = match what {
        What::Paths => enumerate_paths(shape, cap)?
            .iter()
            .map(|p| (p.to_string(), serde_json::json!({ "path": p.to_string() })))
            .collect(),
        What::Tilings => enumerate_tilings(&region_from_shape(shape), cap)?
            .iter()
            .map(|t| {
                let text = t
                    .lozenges()
                    .iter()
                    .map(|l| format!("{}({},{})", l.kind.name(), l.a, l.b))
                    .collect::<Vec<_>>()
                    .join(" ");
                (text, serde_json::json!({ "lozenges": t }))
            })
            .collect(),
        What::Families => enumerate_disjoint_families(&gv_endpoints(shape), cap)?
            .iter()
            .map(|f| {
                let text = f.paths.iter().map(word_or_dot).collect::<Vec<_>>().join(" ");
                let paths: Vec<PathJson> = f.paths.iter().map(PathJson::from).collect();
                (text, serde_json::json!({ "paths": paths }))
            })
            .collect(),
    };
    let shown = limit.unwrap_or(usize::MAX).min(items.len());
    let mut out = io::stdout().lock();
    for (index, (text, json)) in items.iter().take(shown).enumerate() {
        match format {
            Format::Text => writeln!(out, "{text}")?,
            Format::Json => {
                let mut obj = json.clone();
                obj["index"] = index.into();
                writeln!(out, "{obj}")?;
            }
        }
    }
    if shown < items.len() {
        match format {
            Format::Text => writeln!(out, "... truncated after {shown} of {} items", items.len())?,
            Format::Json => writeln!(out, "{}", json_line(&Truncated { truncated: true, shown }))?,
        }
    }
    Ok(())
}

// Empty paths would print as nothing; a dot keeps the columns visible.
fn word_or_dot(p: &LatticePath) -> String {
    if p.is_empty() {
        ".".into()
    } else {
        p.to_string()
    }
}

fn json_line(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn render(
    shape: &SkewShape,
    tiling: Option<usize>,
    path: Option<&str>,
    shading: Shading,
    cap: usize,
) -> Result<String, CliError> {
    let region = region_from_shape(shape);
    let chosen = match (tiling, path) {
        (Some(index), _) => {
            let all = enumerate_tilings(&region, cap)?;
            let count = all.len();
            Some(all.into_iter().nth(index).ok_or_else(|| CliError::BadIndex {
                index,
                shape: shape.to_string(),
                count,
            })?)
        }
        (None, Some(word)) => {
            let path = LatticePath::parse_from(Point::ORIGIN, word)?;
            Some(lattice_path_to_tiling(shape, &path)?)
        }
        (None, None) => None,
    };
    Ok(render_svg(&region, chosen.as_ref(), shading))
}

pub(crate) fn print_line(line: impl Display) {
    // One write per line keeps lines whole when several threads print.
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{line}");
}
