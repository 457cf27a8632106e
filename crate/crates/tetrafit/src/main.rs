//! `tetrafit` command line: generate solids, run the enclosing
//! constructions, optimize orientations, and print the verification table.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
//! parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tetrafit::constructions::{scene_by_name, CONSTRUCTION_NAMES};
use tetrafit::mesh::write_mesh;
use tetrafit::optimizer::{min_enclosing_regular_tetra, SearchConfig};
use tetrafit::platonic::{unit_solid, SolidKind};
use tetrafit::scenedoc::{fmt_sig12, MeshData, OptimizerDocument, SceneDocument, SCHEMA_VERSION};
use tetrafit::verify;

#[derive(Parser)]
#[command(
    name = "tetrafit",
    version,
    about = "Platonic solids and the regular tetrahedra that enclose them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a unit solid as a text mesh (v/f lines)
    Gen {
        /// tetrahedron | cube | octahedron | icosahedron | dodecahedron
        solid: String,
        /// Output path; stdout when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run a named enclosing construction and write its scene document
    Construct {
        /// One of: right-corner-cube, standard-cube, octa, icosa-insphere,
        /// icosa-golden, dodeca-dual, dodeca-rotated
        name: String,
        /// Output path; stdout when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write solid and enclosure meshes next to the document
        #[arg(long)]
        mesh: bool,
    },
    /// Find the smallest enclosing regular tetrahedron over all orientations
    Optimize {
        /// A solid name or a path to a scene document
        input: String,
        /// RNG seed for the orientation sampling
        #[arg(long)]
        seed: Option<u64>,
        /// Coarse sample count
        #[arg(long)]
        samples: Option<usize>,
        /// Write the document with the optimizer result attached
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compare computed quantities against the reference-value table
    Verify {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

enum CliError {
    Usage(String),
    Io(String),
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen { solid, out } => {
            let kind: SolidKind = solid
                .parse()
                .map_err(|e: String| CliError::Usage(e))?;
            emit(out.as_deref(), &write_mesh(&unit_solid::<f64>(kind)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { name, out, mesh } => {
            let scene = scene_by_name(&name).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown construction '{name}' (expected one of: {})",
                    CONSTRUCTION_NAMES.join(", ")
                ))
            })?;
            let doc = SceneDocument::from_scene(&scene);
            if mesh {
                let base = out.clone().ok_or_else(|| {
                    CliError::Usage("--mesh needs an output path (-o)".to_string())
                })?;
                write_file(&base.with_extension("solid.obj"), &write_mesh(&scene.solid))?;
                write_file(
                    &base.with_extension("enclosure.obj"),
                    &write_mesh(&scene.enclosure),
                )?;
            }
            emit(out.as_deref(), &doc.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Optimize {
            input,
            seed,
            samples,
            out,
        } => {
            let mut cfg = SearchConfig::default();
            if let Some(seed) = seed {
                cfg = cfg.with_seed(seed);
            }
            if let Some(samples) = samples {
                if samples == 0 {
                    return Err(CliError::Usage("--samples must be positive".into()));
                }
                cfg = cfg.with_samples(samples);
            }
            let (mut doc, label, from_scene_file) = load_optimize_input(&input)?;
            let scene = doc
                .to_scene()
                .map_err(|e| CliError::Io(format!("{input}: {e}")))?;
            let result = min_enclosing_regular_tetra(scene.solid.vertices(), &cfg)
                .map_err(|e| CliError::Io(format!("optimizer: {e}")))?;
            println!("input: {label}");
            println!("optimized volume: {}", fmt_sig12(result.volume));
            println!("optimized edge: {}", fmt_sig12(result.edge));
            println!("evaluations: {}", result.evaluations);
            println!("converged: {}", result.converged);
            if from_scene_file {
                println!("claimed volume: {}", fmt_sig12(doc.claimed_volume));
                println!(
                    "gap (claimed - optimized): {}",
                    fmt_sig12(doc.claimed_volume - result.volume)
                );
            }
            doc.optimizer_result = Some(OptimizerDocument::from_result(&result));
            if let Some(path) = out {
                write_file(&path, &doc.to_json())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { format } => {
            let rows = verify::all_rows(&SearchConfig::default());
            let rendered = match format {
                Format::Table => verify::render_table(&rows),
                Format::Json => verify::render_json(&rows),
                Format::Csv => verify::render_csv(&rows),
            };
            print!("{rendered}");
            if verify::all_pass(&rows) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY_FAIL))
            }
        }
    }
}

/// Resolves the `optimize` input: a solid name becomes a fresh document
/// around that unit solid; anything else is read as a scene document.
fn load_optimize_input(input: &str) -> Result<(SceneDocument, String, bool), CliError> {
    if let Ok(kind) = input.parse::<SolidKind>() {
        let solid = unit_solid::<f64>(kind);
        let volume = solid.volume().expect("canonical solid");
        let doc = SceneDocument {
            schema_version: SCHEMA_VERSION,
            label: kind.name().to_string(),
            solid: MeshData::from_polyhedron(&solid),
            enclosure: MeshData::from_polyhedron(&solid),
            enclosure_edge: None,
            claimed_volume: volume,
            trace: Default::default(),
            optimizer_result: None,
        };
        return Ok((doc, format!("unit {}", kind.name()), false));
    }
    let path = Path::new(input);
    if !path.exists() {
        return Err(CliError::Usage(format!(
            "'{input}' is neither a solid name nor an existing scene file"
        )));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{input}: {e}")))?;
    let doc = SceneDocument::from_json(&text)
        .map_err(|e| CliError::Io(format!("{input}: {e}")))?;
    let label = format!("scene '{}'", doc.label);
    Ok((doc, label, true))
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
