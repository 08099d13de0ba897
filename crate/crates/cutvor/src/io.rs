//! JSON and DOT file formats.
//!
//! Rationals are written as `"p/q"` strings so that no value passes through a float.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cochain::{Cochain0, Cochain1};
use crate::divisor::{Divisor, Subdivision};
use crate::error::{check_len, Error, Result};
use crate::graph::{Arrow, Multigraph};
use crate::lattice::LengthFunction;
use crate::rational::{from_strings, to_strings, RatStr};
use crate::tiling::{
    MixedTiling, NeighborLink, TileClass, TileDescriptor, TilingEnumeration, Twist,
};
use crate::voronoi::FacePoset;

/// Failure to load an input file: either it does not parse, or it parses into
/// something the library rejects.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Domain(#[from] Error),
}

impl From<serde_json::Error> for LoadError {
    fn from(e: serde_json::Error) -> Self {
        LoadError::Parse(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<i64>>,
}

impl GraphFile {
    pub fn parse(text: &str) -> std::result::Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_tiling(t: &MixedTiling) -> Self {
        let mut file = Self::from_graph(t.graph());
        file.lengths = Some(t.lengths().as_slice().to_vec());
        file.twist = Some(t.twist().as_slice().to_vec());
        file
    }

    pub fn from_graph(g: &Multigraph) -> Self {
        GraphFile {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            lengths: None,
            twist: None,
        }
    }

    pub fn graph(&self) -> Result<Multigraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Multigraph::new(self.vertices, &edges)
    }

    /// Edge lengths, all 1 when absent.
    pub fn lengths(&self, g: &Multigraph) -> Result<LengthFunction> {
        match &self.lengths {
            Some(l) => LengthFunction::new(g, l.clone()),
            None => LengthFunction::uniform(g, 1),
        }
    }

    /// Twist on canonical arrows (lower endpoint to higher), zero when absent.
    /// An edge listed as [v, u] with v > u still carries its twist on u → v.
    pub fn twist(&self, g: &Multigraph) -> Result<Twist> {
        match &self.twist {
            Some(m) => Twist::new(g, m.clone()),
            None => Ok(Twist::zero(g)),
        }
    }

    pub fn tiling(&self) -> Result<MixedTiling> {
        let g = self.graph()?;
        let lengths = self.lengths(&g)?;
        let twist = self.twist(&g)?;
        MixedTiling::new(g, lengths, twist)
    }

    pub fn subdivision(&self) -> Result<Subdivision> {
        let g = self.graph()?;
        let lengths = self.lengths(&g)?;
        Subdivision::new(g, lengths)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InteriorEntry {
    pub edge: usize,
    /// `"+"` counts j from the lower endpoint, `"-"` from the higher one.
    pub dir: String,
    pub j: i64,
    pub coeff: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorFile {
    #[serde(rename = "on_G", default)]
    pub on_g: BTreeMap<usize, i64>,
    #[serde(default)]
    pub interior: Vec<InteriorEntry>,
}

impl DivisorFile {
    pub fn parse(text: &str) -> std::result::Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_divisor(&self, h: &Subdivision) -> Result<Divisor> {
        let g = h.base();
        let mut d = Divisor::zero(h);
        for (&v, &c) in &self.on_g {
            if v >= g.vertex_count() {
                return Err(Error::Invalid(format!(
                    "divisor names vertex {v}, graph has {}",
                    g.vertex_count()
                )));
            }
            d.coeffs[v] += c;
        }
        for entry in &self.interior {
            if entry.edge >= g.edge_count() {
                return Err(Error::Invalid(format!(
                    "divisor names edge {}, graph has {}",
                    entry.edge,
                    g.edge_count()
                )));
            }
            let a = match entry.dir.as_str() {
                "+" => Arrow::forward(entry.edge),
                "-" => Arrow::backward(entry.edge),
                other => {
                    return Err(Error::Invalid(format!(
                        "direction must be \"+\" or \"-\", got {other:?}"
                    )))
                }
            };
            let l = h.lengths().get(entry.edge);
            if !(1..l).contains(&entry.j) {
                return Err(Error::Invalid(format!(
                    "interior position {} on edge {} of length {l} must lie strictly between 0 and {l}",
                    entry.j, entry.edge
                )));
            }
            d.coeffs[h.point(a, entry.j)] += entry.coeff;
        }
        Ok(d)
    }

    /// Canonical form: nonzero entries only, interior points counted along "+".
    pub fn from_divisor(h: &Subdivision, d: &Divisor) -> Result<Self> {
        check_len("divisor", h.vertex_count(), d.coeffs.len())?;
        let n = h.base().vertex_count();
        let mut out = DivisorFile::default();
        for v in 0..n {
            if d.coeffs[v] != 0 {
                out.on_g.insert(v, d.coeffs[v]);
            }
        }
        for x in n..h.vertex_count() {
            if d.coeffs[x] != 0 {
                let (edge, j) = h.locate_interior(x).expect("index past V(G) is interior");
                out.interior.push(InteriorEntry {
                    edge,
                    dir: "+".into(),
                    j,
                    coeff: d.coeffs[x],
                });
            }
        }
        Ok(out)
    }
}

/// A list of points of H_0 with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsFile {
    pub points: Vec<Vec<RatStr>>,
}

impl PointsFile {
    pub fn parse(text: &str) -> std::result::Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn cochains(&self) -> Vec<Cochain0> {
        self.points
            .iter()
            .map(|p| Cochain0 {
                values: from_strings(p),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborExport {
    #[serde(rename = "S")]
    pub side: Vec<usize>,
    pub n: i64,
    pub eta: Vec<RatStr>,
    pub target: usize,
    pub shift: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileExport {
    pub key: String,
    pub f: Vec<i64>,
    pub dm: Vec<RatStr>,
    pub subgraph_edges: Vec<usize>,
    pub center: Vec<RatStr>,
    pub neighbors: Vec<NeighborExport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingExport {
    pub period: i64,
    pub tiles: Vec<TileExport>,
}

impl TilingExport {
    pub fn new(e: &TilingEnumeration) -> Self {
        TilingExport {
            period: e.period,
            tiles: e
                .tiles
                .iter()
                .map(|c| TileExport {
                    key: c.tile.key(),
                    f: c.tile.f.clone(),
                    dm: to_strings(&c.tile.dm.values),
                    subgraph_edges: c.tile.subgraph_edges(),
                    center: to_strings(&c.tile.center.values),
                    neighbors: c
                        .neighbors
                        .iter()
                        .map(|l| NeighborExport {
                            side: l.side.clone(),
                            n: l.n,
                            eta: to_strings(&l.eta.values),
                            target: l.target,
                            shift: l.shift.clone(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> std::result::Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_enumeration(&self) -> TilingEnumeration {
        TilingEnumeration {
            period: self.period,
            tiles: self
                .tiles
                .iter()
                .map(|t| {
                    let dm = Cochain1 {
                        values: from_strings(&t.dm),
                    };
                    let mut subgraph = vec![false; dm.len()];
                    for &e in &t.subgraph_edges {
                        subgraph[e] = true;
                    }
                    TileClass {
                        tile: TileDescriptor {
                            f: t.f.clone(),
                            dm,
                            subgraph,
                            center: Cochain0 {
                                values: from_strings(&t.center),
                            },
                        },
                        neighbors: t
                            .neighbors
                            .iter()
                            .map(|n| NeighborLink {
                                side: n.side.clone(),
                                n: n.n,
                                eta: Cochain1 {
                                    values: from_strings(&n.eta),
                                },
                                target: n.target,
                                shift: n.shift.clone(),
                            })
                            .collect(),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceExport {
    pub codim: usize,
    /// The ordered partition inducing the orientation.
    pub witness: Vec<Vec<usize>>,
    pub vertices: Vec<Vec<RatStr>>,
    pub bonds: Vec<Vec<RatStr>>,
}

/// Faces keyed by their orientation (`"0+,2-"`; the empty key is the whole cell),
/// with the Hasse diagram as (smaller, larger) key pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePosetExport {
    pub faces: BTreeMap<String, FaceExport>,
    pub covers: Vec<[String; 2]>,
}

impl FacePosetExport {
    pub fn new(poset: &FacePoset) -> Self {
        let faces = poset
            .faces
            .iter()
            .map(|f| {
                (
                    f.cao.key(),
                    FaceExport {
                        codim: f.codim,
                        witness: f.cao.witness.clone(),
                        vertices: f.vertices.iter().map(|v| to_strings(&v.values)).collect(),
                        bonds: f
                            .bonds_through
                            .iter()
                            .map(|b| to_strings(&b.values))
                            .collect(),
                    },
                )
            })
            .collect();
        let mut covers: Vec<[String; 2]> = poset
            .covers()
            .into_iter()
            .map(|(i, j)| [poset.faces[i].cao.key(), poset.faces[j].cao.key()])
            .collect();
        covers.sort();
        FacePosetExport { faces, covers }
    }

    pub fn parse(text: &str) -> std::result::Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_dot(&self) -> String {
        let label = |k: &str| {
            if k.is_empty() {
                "cell".to_string()
            } else {
                k.to_string()
            }
        };
        let mut out = String::from("digraph face_poset {\n  rankdir=BT;\n");
        for (key, face) in &self.faces {
            let _ = writeln!(
                out,
                "  \"{}\" [label=\"{}\\ncodim {}\"];",
                label(key),
                label(key),
                face.codim
            );
        }
        for [a, b] in &self.covers {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", label(a), label(b));
        }
        out.push_str("}\n");
        out
    }
}
