//! JSON I/O, bundled examples, and SVG rendering around the core library.
//! The binary in `main.rs` is a thin dispatcher over [`run`].

pub mod convert;
pub mod examples;
pub mod schema;
pub mod svg;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use polyfan::completion::{
    complete_locally_finite, polytopal_completion, zonotopal_completion, CompletionReport,
};
use polyfan::error::{CompletionError, QueryError};
use polyfan::lazy::{boundary_certificate, cells_in_window, locate_point, validate_window};
use polyfan::subdivision::SubdivisionSeed;
use polyfan::toric::ExtendedPoint;

use convert::{
    class_from_str, complex_from_dto, fan_from_dto, point_from_arg, seed_from_dto, seed_to_dto,
    window_from_arg, window_from_dto,
};
use schema::{
    content_hash, CellOutDto, CheckDto, Document, ParseMode, Payload, ReportDto, SchemaError,
};

/// Process exit codes: 0 success, 1 validation failure, 2 usage or parse
/// error, 3 completion not found or budget exceeded.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "polyfan",
    about = "Validate, complete, and query polyhedral complexes with exact rational arithmetic",
    version
)]
pub struct Cli {
    /// Accept and preserve unknown JSON fields and non-canonical rationals.
    #[arg(long, global = true)]
    pub lax: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a complex, fan, or seed document.
    Validate { file: PathBuf },
    /// Complete a complex into a locally finite subdivision seed.
    Complete {
        /// Target fan document (kind: fan).
        #[arg(long)]
        sigma: PathBuf,
        /// Polyhedron class: all | q | zonotopal | gamma:<step> | gamma-vertices:<step>.
        #[arg(long)]
        class: String,
        /// Input complex document.
        complex: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Zonotopal completion of a finite zonotopal complex.
    CompleteZonotopal {
        complex: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Polytopal completion of a finite polytopal complex.
    CompletePolytopal {
        complex: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the cells of a seed meeting a window.
    Query {
        /// Window as comma-separated intervals, e.g. "-3:3,-3:3".
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        seed: PathBuf,
    },
    /// Run the window validation checks on a seed.
    CheckWindow {
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        seed: PathBuf,
    },
    /// Locate the minimal cell containing a point.
    Locate {
        /// Point as comma-separated rationals, e.g. "1/2,3".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        seed: PathBuf,
    },
    /// Cells whose closure in the toric space contains an extended point.
    BoundaryCert {
        /// Content hash of a cone of the seed's target fan.
        #[arg(long)]
        stratum: String,
        /// Coordinates in the stratum's quotient chart.
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
        #[arg(long, default_value_t = 4096)]
        budget: usize,
        seed: PathBuf,
    },
    /// Render the cells of a window to SVG.
    Render {
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        svg: PathBuf,
        /// Drawing plane for ambient dimension above 2, e.g. "0,1".
        #[arg(long)]
        plane: Option<String>,
        seed: PathBuf,
    },
    /// Emit a bundled example input (one | three | square-zonotopal).
    Examples {
        name: String,
        /// Output directory for the generated documents.
        #[arg(short, long, default_value = ".")]
        output: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Schema(#[from] SchemaError),
    #[error("{0}")]
    Io(String),
    #[error("validation failed: {0}")]
    Invalid(String),
    #[error("{0}")]
    NotFound(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(SchemaError::Geometry { .. }) => EXIT_INVALID,
            CliError::Schema(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::NotFound(_) => EXIT_NOT_FOUND,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn completion_error(e: CompletionError) -> CliError {
    match e {
        CompletionError::CompletionNotFound { .. } | CompletionError::NoCenterFound => {
            CliError::NotFound(e.to_string())
        }
        other => CliError::Invalid(other.to_string()),
    }
}

fn query_error(e: QueryError) -> CliError {
    match e {
        QueryError::BudgetExceeded { .. } => CliError::NotFound(e.to_string()),
        other => CliError::Invalid(other.to_string()),
    }
}

fn load_seed(path: &Path, mode: ParseMode) -> Result<SubdivisionSeed, CliError> {
    let doc = Document::from_json(&read(path)?, mode)?;
    match &doc.payload {
        Payload::Seed(dto) => Ok(seed_from_dto(dto, mode)?),
        _ => Err(CliError::Schema(SchemaError::Invalid {
            path: "$.kind".into(),
            message: "expected a seed document".into(),
        })),
    }
}

fn seed_report_output(
    report: CompletionReport<SubdivisionSeed>,
    output: Option<&Path>,
    out: &mut String,
) -> Result<(), CliError> {
    for line in &report.transcript {
        out.push_str(&format!("  {line}\n"));
    }
    out.push_str(&format!(
        "preserved: {}\n",
        if report.preserved { "yes" } else { "no" }
    ));
    let doc = Document::new(Payload::Seed(seed_to_dto(&report.output)));
    match output {
        Some(path) => {
            write_out(path, &doc.to_json())?;
            out.push_str(&format!("seed written to {}\n", path.display()));
        }
        None => out.push_str(&doc.to_json()),
    }
    Ok(())
}

fn cell_out_dto(seed: &SubdivisionSeed, cell: &polyfan::lazy::MaterializedCell) -> CellOutDto {
    CellOutDto {
        id: content_hash(&cell.geometry),
        base: content_hash(&seed.cells()[cell.id.base]),
        chain: cell
            .id
            .chain
            .iter()
            .map(|link| schema::ChainLinkDto {
                cone: content_hash(&seed.ray_choices()[link.cone].cone),
                parent: content_hash(&seed.cells()[link.parent]),
                ladder_index: link.ladder_index,
                extra: Default::default(),
            })
            .collect(),
        hrep: convert::polyhedron_to_dto(&cell.geometry),
        extra: Default::default(),
    }
}

/// Executes one CLI invocation, returning the text to print on stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let mode = if cli.lax { ParseMode::Lax } else { ParseMode::Strict };
    let mut out = String::new();
    match &cli.command {
        Command::Validate { file } => {
            let doc = Document::from_json(&read(file)?, mode)?;
            match &doc.payload {
                Payload::Complex(dto) => {
                    let c = complex_from_dto(dto, mode, "$.payload")?;
                    out.push_str(&format!(
                        "valid complex: {} maximal cells in dimension {}\n",
                        c.maximal_cells().len(),
                        c.ambient_dim()
                    ));
                }
                Payload::Fan(dto) => {
                    let f = fan_from_dto(dto, mode, "$.payload")?;
                    out.push_str(&format!(
                        "valid fan: {} maximal cones in dimension {}{}\n",
                        f.maximal_cones().len(),
                        f.ambient_dim(),
                        if f.is_complete_certificate() {
                            " (complete)"
                        } else {
                            ""
                        }
                    ));
                }
                Payload::Seed(dto) => {
                    let seed =
                        seed_from_dto(dto, mode)?;
                    out.push_str(&format!(
                        "valid seed: {} cells, {} ray choices, class {}\n",
                        seed.cells().len(),
                        seed.ray_choices().len(),
                        seed.class()
                    ));
                    out.push_str("strata of the target fan (hash, cone dim, chart dim):\n");
                    for cone in seed.target_fan().all_cones() {
                        out.push_str(&format!(
                            "  {}  dim {}  chart dim {}\n",
                            content_hash(&cone),
                            cone.dim(),
                            seed.ambient_dim() - cone.dim()
                        ));
                    }
                }
                Payload::Window(dto) => {
                    let w = window_from_dto(dto, mode, "$.payload")?;
                    out.push_str(&format!(
                        "valid window in dimension {}\n",
                        w.region().ambient_dim()
                    ));
                }
                Payload::Report(_) => {
                    out.push_str("valid report document\n");
                }
            }
        }
        Command::Complete {
            sigma,
            class,
            complex,
            output,
        } => {
            let complex_doc = Document::from_json(&read(complex)?, mode)?;
            let Payload::Complex(cdto) = &complex_doc.payload else {
                return Err(CliError::Schema(SchemaError::Invalid {
                    path: "$.kind".into(),
                    message: "expected a complex document".into(),
                }));
            };
            let phi = complex_from_dto(cdto, mode, "$.payload")?;
            let sigma_doc = Document::from_json(&read(sigma)?, mode)?;
            let Payload::Fan(fdto) = &sigma_doc.payload else {
                return Err(CliError::Schema(SchemaError::Invalid {
                    path: "$.kind".into(),
                    message: "expected a fan document".into(),
                }));
            };
            let sigma = fan_from_dto(fdto, mode, "$.payload")?;
            let class = class_from_str(class)?;
            let report =
                complete_locally_finite(&phi, &sigma, &class).map_err(completion_error)?;
            seed_report_output(report, output.as_deref(), &mut out)?;
        }
        Command::CompleteZonotopal { complex, output } => {
            let doc = Document::from_json(&read(complex)?, mode)?;
            let Payload::Complex(cdto) = &doc.payload else {
                return Err(CliError::Schema(SchemaError::Invalid {
                    path: "$.kind".into(),
                    message: "expected a complex document".into(),
                }));
            };
            let phi = complex_from_dto(cdto, mode, "$.payload")?;
            let report = zonotopal_completion(&phi).map_err(completion_error)?;
            seed_report_output(report, output.as_deref(), &mut out)?;
        }
        Command::CompletePolytopal { complex, output } => {
            let doc = Document::from_json(&read(complex)?, mode)?;
            let Payload::Complex(cdto) = &doc.payload else {
                return Err(CliError::Schema(SchemaError::Invalid {
                    path: "$.kind".into(),
                    message: "expected a complex document".into(),
                }));
            };
            let phi = complex_from_dto(cdto, mode, "$.payload")?;
            let report = polytopal_completion(&phi).map_err(completion_error)?;
            seed_report_output(report, output.as_deref(), &mut out)?;
        }
        Command::Query { window, seed } => {
            let seed = load_seed(seed, mode)?;
            let window = window_from_arg(window)?;
            let cells = cells_in_window(&seed, &window).map_err(query_error)?;
            let dto = ReportDto {
                checks: Vec::new(),
                cells: cells.iter().map(|c| cell_out_dto(&seed, c)).collect(),
                transcript: vec![format!("{} cells meet the window", cells.len())],
                point: None,
                extra: Default::default(),
            };
            out.push_str(&Document::new(Payload::Report(dto)).to_json());
            out.push('\n');
        }
        Command::CheckWindow { window, seed } => {
            let seed = load_seed(seed, mode)?;
            let window = window_from_arg(window)?;
            let report = validate_window(&seed, &window).map_err(query_error)?;
            let all_pass = report.all_pass();
            let dto = ReportDto {
                checks: report
                    .checks
                    .iter()
                    .map(|c| CheckDto {
                        name: c.name.to_string(),
                        pass: c.pass,
                        witness: c.witness.clone(),
                        extra: Default::default(),
                    })
                    .collect(),
                cells: report.cells.iter().map(|c| cell_out_dto(&seed, c)).collect(),
                transcript: Vec::new(),
                point: None,
                extra: Default::default(),
            };
            for c in &report.checks {
                out.push_str(&format!(
                    "{}: {}{}\n",
                    c.name,
                    if c.pass { "pass" } else { "FAIL" },
                    c.witness
                        .as_ref()
                        .map(|w| format!(" ({w})"))
                        .unwrap_or_default()
                ));
            }
            out.push_str(&Document::new(Payload::Report(dto)).to_json());
            out.push('\n');
            if !all_pass {
                return Err(CliError::Invalid(format!(
                    "window checks failed\n{out}"
                )));
            }
        }
        Command::Locate { point, seed } => {
            let seed = load_seed(seed, mode)?;
            let x = point_from_arg(point)?;
            let id = locate_point(&seed, &x).map_err(query_error)?;
            let geometry = seed.cell_geometry(&id);
            let cell = polyfan::lazy::MaterializedCell { id, geometry };
            let dto = cell_out_dto(&seed, &cell);
            out.push_str(&serde_json::to_string_pretty(&dto).expect("cell serializes"));
            out.push('\n');
        }
        Command::BoundaryCert {
            stratum,
            coords,
            budget,
            seed,
        } => {
            let seed = load_seed(seed, mode)?;
            let coords = point_from_arg(coords)?;
            let cone = seed
                .target_fan()
                .all_cones()
                .into_iter()
                .find(|c| content_hash(c) == *stratum)
                .ok_or_else(|| {
                    CliError::Invalid(format!("stratum '{stratum}' is not a cone of the target fan"))
                })?;
            let point = ExtendedPoint {
                stratum: cone,
                coords,
            };
            let cells = boundary_certificate(&seed, &point, *budget).map_err(query_error)?;
            let dto = ReportDto {
                checks: Vec::new(),
                cells: cells.iter().map(|c| cell_out_dto(&seed, c)).collect(),
                transcript: vec![format!(
                    "{} cells contain the extended point in their closure (budget {budget})",
                    cells.len()
                )],
                point: Some(schema::ExtendedPointDto {
                    stratum: stratum.clone(),
                    coords: schema::format_vector(&point.coords),
                    extra: Default::default(),
                }),
                extra: Default::default(),
            };
            out.push_str(&Document::new(Payload::Report(dto)).to_json());
            out.push('\n');
        }
        Command::Render {
            window,
            svg: svg_path,
            plane,
            seed,
        } => {
            let seed = load_seed(seed, mode)?;
            let window = window_from_arg(window)?;
            let plane = match plane {
                None => None,
                Some(s) => {
                    let parts: Vec<&str> = s.split(',').collect();
                    if parts.len() != 2 {
                        return Err(CliError::Schema(SchemaError::Invalid {
                            path: "plane".into(),
                            message: "expected i,j".into(),
                        }));
                    }
                    let i: usize = parts[0].trim().parse().map_err(|_| {
                        CliError::Schema(SchemaError::Invalid {
                            path: "plane".into(),
                            message: "bad axis index".into(),
                        })
                    })?;
                    let j: usize = parts[1].trim().parse().map_err(|_| {
                        CliError::Schema(SchemaError::Invalid {
                            path: "plane".into(),
                            message: "bad axis index".into(),
                        })
                    })?;
                    Some((i, j))
                }
            };
            let cells = cells_in_window(&seed, &window).map_err(query_error)?;
            let svg = svg::render_window(&cells, &window, plane)?;
            write_out(svg_path, &svg)?;
            out.push_str(&format!(
                "{} cells rendered to {}\n",
                cells.len(),
                svg_path.display()
            ));
        }
        Command::Examples { name, output } => {
            let Some((complex, class)) = examples::by_name(name) else {
                return Err(CliError::Schema(SchemaError::Invalid {
                    path: "examples".into(),
                    message: format!("unknown example '{name}' (one | three | square-zonotopal)"),
                }));
            };
            fs::create_dir_all(output)
                .map_err(|e| CliError::Io(format!("{}: {e}", output.display())))?;
            let complex_path = output.join(format!("{name}-complex.json"));
            let doc = Document::new(Payload::Complex(convert::complex_to_dto(&complex)));
            write_out(&complex_path, &doc.to_json())?;
            out.push_str(&format!("complex written to {}\n", complex_path.display()));
            let sigma = complex
                .recession_fan()
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let sigma_path = output.join(format!("{name}-sigma.json"));
            let doc = Document::new(Payload::Fan(convert::fan_to_dto(&sigma)));
            write_out(&sigma_path, &doc.to_json())?;
            out.push_str(&format!("recession fan written to {}\n", sigma_path.display()));
            out.push_str(&format!("suggested class: {class}\n"));
        }
    }
    Ok(out)
}
