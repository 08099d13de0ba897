//! The `cutvor` command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::divisor::{firing_sequence, is_g_admissible, replay, solve_equivalence};
use crate::io::{DivisorFile, FacePosetExport, GraphFile, LoadError, PointsFile, TilingExport};
use crate::lattice::{q_gram_matrix, spanning_tree_count};
use crate::rational::to_strings;
use crate::tiling::{render_svg, TileLocator};
use crate::voronoi::{cut_element, enumerate_bond_sides, face_poset, orientation_correspondence};

#[derive(Parser, Debug)]
#[command(
    name = "cutvor",
    version,
    about = "Cut-lattice Voronoi cells, chip-firing and mixed Voronoi tilings"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Number of random points for the coverage check of `locate`.
    #[arg(long, global = true, default_value_t = 0)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spanning-tree count, Gram matrix of q and bonds.
    Analyze { graph: PathBuf },
    /// Face poset of the Voronoi cell and its comparison with orientations.
    Faces { graph: PathBuf },
    /// Admissibility and linear equivalence of two divisors on the subdivision.
    Admissible {
        graph: PathBuf,
        divisor: PathBuf,
        target: PathBuf,
    },
    /// Tiles of one period and the dual one-skeleton.
    Tiles { graph: PathBuf },
    /// Tiles containing the given points and/or random samples.
    Locate {
        graph: PathBuf,
        points: Option<PathBuf>,
    },
    /// SVG picture of a tiling on three vertices.
    Render { graph: PathBuf },
}

enum Failure {
    Parse(String),
    Domain(String),
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Parse(m) => Failure::Parse(m),
            LoadError::Domain(e) => Failure::Domain(e.to_string()),
        }
    }
}

impl From<crate::error::Error> for Failure {
    fn from(e: crate::error::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<GraphFile, Failure> {
    GraphFile::parse(&read(path)?).map_err(|e| match e {
        LoadError::Parse(m) => Failure::Parse(format!("{}: {m}", path.display())),
        other => other.into(),
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn analyze(file: &GraphFile) -> Result<String, Failure> {
    let g = file.graph()?;
    let bonds: Vec<Value> = enumerate_bond_sides(&g)
        .iter()
        .map(|side| {
            let s: Vec<usize> = (0..side.len()).filter(|&v| side[v]).collect();
            json!({"S": s, "element": to_strings(&cut_element(&g, side).values)})
        })
        .collect();
    Ok(pretty(&json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "spanning_trees": spanning_tree_count(&g) as i64,
        "q_gram_matrix": q_gram_matrix(&g),
        "bonds": bonds,
    })))
}

fn faces(file: &GraphFile, format: Format) -> Result<String, Failure> {
    let g = file.graph()?;
    let export = FacePosetExport::new(&face_poset(&g)?);
    match format {
        Format::Dot => Ok(export.to_dot()),
        Format::Json => {
            let check = orientation_correspondence(&g)?;
            Ok(pretty(&json!({
                "faces": check.faces,
                "cac": check.cac,
                "isomorphic": check.isomorphic,
                "f_vector": check.f_vector,
                "facets_match_bonds": check.facets_match_bonds,
                "face_poset_matches": check.face_poset_matches,
                "poset": export,
            })))
        }
        Format::Svg => Err(Failure::Domain("faces supports json or dot".into())),
    }
}

fn admissible(file: &GraphFile, d1: &Path, d2: &Path) -> Result<String, Failure> {
    let h = file.subdivision()?;
    let a = DivisorFile::parse(&read(d1)?)?.to_divisor(&h)?;
    let b = DivisorFile::parse(&read(d2)?)?.to_divisor(&h)?;
    let admissible = (is_g_admissible(&h, &a)?, is_g_admissible(&h, &b)?);
    let f = solve_equivalence(&h, &a, &b)?;
    let sequence = firing_sequence(&h, &a, &b)?;
    let replayed = match &sequence {
        Some(s) => Some(replay(&h, &a, s)? == b),
        None => None,
    };
    Ok(pretty(&json!({
        "admissible": [admissible.0, admissible.1],
        "equivalent": f.is_some(),
        "f": f,
        "firing_sequence": sequence,
        "replay_verified": replayed,
    })))
}

fn tiles(file: &GraphFile, format: Format) -> Result<String, Failure> {
    let t = file.tiling()?;
    let e = t.enumerate_tiling()?;
    match format {
        Format::Json => Ok(pretty(
            &serde_json::to_value(TilingExport::new(&e)).expect("serializable"),
        )),
        Format::Dot => Ok(e.dual_skeleton_dot()),
        Format::Svg => Ok(render_svg(&t, &e)?),
    }
}

fn locate(
    file: &GraphFile,
    points: Option<&Path>,
    samples: usize,
    seed: u64,
) -> Result<String, Failure> {
    let t = file.tiling()?;
    let e = t.enumerate_tiling()?;
    let locator = TileLocator::new(&t, e.descriptors())?;
    let describe = |hits: &[crate::tiling::Location]| -> Vec<Value> {
        hits.iter()
            .map(|h| json!({"tile": locator.tiles()[h.tile].key(), "index": h.tile, "shift": h.shift}))
            .collect()
    };
    let mut report = serde_json::Map::new();
    if let Some(path) = points {
        let mut rows = Vec::new();
        for p in PointsFile::parse(&read(path)?)?.cochains() {
            let hits = locator.locate(&p)?;
            let interior = locator.interior_hits(&p)?;
            rows.push(json!({
                "point": to_strings(&p.values),
                "tiles": describe(&hits),
                "interior": describe(&interior),
            }));
        }
        report.insert("points".into(), Value::Array(rows));
    }
    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let den = 4 * t.period().max(1) + 1;
        let (mut covered, mut overlaps) = (0usize, 0usize);
        for p in locator.sample(&mut rng, samples, den) {
            covered += usize::from(!locator.locate(&p)?.is_empty());
            overlaps += usize::from(locator.interior_hits(&p)?.len() > 1);
        }
        report.insert(
            "coverage".into(),
            json!({"samples": samples, "seed": seed, "covered": covered, "interior_overlaps": overlaps}),
        );
    }
    Ok(pretty(&Value::Object(report)))
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let fmt = |default| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Analyze { graph } => analyze(&load_graph(graph)?),
        Command::Faces { graph } => faces(&load_graph(graph)?, fmt(Format::Json)),
        Command::Admissible {
            graph,
            divisor,
            target,
        } => admissible(&load_graph(graph)?, divisor, target),
        Command::Tiles { graph } => tiles(&load_graph(graph)?, fmt(Format::Json)),
        Command::Locate { graph, points } => locate(
            &load_graph(graph)?,
            points.as_deref(),
            cli.samples,
            cli.seed,
        ),
        Command::Render { graph } => {
            let file = load_graph(graph)?;
            tiles(&file, Format::Svg)
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code:
/// 0 on success, 1 on a domain error, 2 on a parse error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return 1;
            }
            0
        }
        Err(Failure::Parse(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}
