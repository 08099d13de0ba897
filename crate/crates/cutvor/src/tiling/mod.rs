//! Mixed and twisted Voronoi tilings of H_{0,ℝ}.
//!
//! A tile is indexed by an integer vertex function f. Its point 𝔡_f records
//! ⌊(f(v) − f(u) + 𝔪_e)/ℓ_e⌋ on every edge, plus ½ when ℓ_e does not divide
//! the numerator; the edges with an integral value form the subgraph G_f, and
//! the tile is d*(𝔡_f) + Vor_{G_f}(O).

mod adjacency;
mod enumerate;
mod fiber;
pub mod flow;
mod locate;
mod render;

pub use adjacency::{Neighbor, SharedFace};
pub use enumerate::{NeighborLink, TileClass, TilingEnumeration};
pub use fiber::{enumerate_interval_system, FiberDescription, FiberFactor, Interval};
pub use locate::{Location, TileLocator};
pub use render::render_svg;

use num_traits::Signed;

use crate::cochain::{adjoint, coboundary_int, Cochain0, Cochain1};
use crate::error::{check_len, Error, Result};
use crate::graph::{Arrow, Multigraph};
use crate::lattice::LengthFunction;
use crate::rational::{floor_div, half, rat, Rational};

/// An integer 1-cochain 𝔪, stored on canonical arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    values: Vec<i64>,
}

impl Twist {
    pub fn new(g: &Multigraph, values: Vec<i64>) -> Result<Self> {
        check_len("twist", g.edge_count(), values.len())?;
        Ok(Twist { values })
    }

    pub fn zero(g: &Multigraph) -> Self {
        Twist {
            values: vec![0; g.edge_count()],
        }
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.values
    }

    pub fn at(&self, a: Arrow) -> i64 {
        self.values[a.edge] * a.sign()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileDescriptor {
    /// Representative with f(0) = 0.
    pub f: Vec<i64>,
    pub dm: Cochain1,
    pub subgraph: Vec<bool>,
    pub center: Cochain0,
}

impl TileDescriptor {
    pub fn subgraph_edges(&self) -> Vec<usize> {
        (0..self.subgraph.len())
            .filter(|&e| self.subgraph[e])
            .collect()
    }

    /// Canonical text key: the coordinates of 𝔡_f.
    pub fn key(&self) -> String {
        self.dm
            .values
            .iter()
            .map(crate::rational::format_rational)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// A graph with edge lengths ℓ and twist 𝔪.
#[derive(Clone, Debug)]
pub struct MixedTiling {
    graph: Multigraph,
    lengths: LengthFunction,
    twist: Twist,
}

impl MixedTiling {
    pub fn new(graph: Multigraph, lengths: LengthFunction, twist: Twist) -> Result<Self> {
        check_len("edge lengths", graph.edge_count(), lengths.as_slice().len())?;
        check_len("twist", graph.edge_count(), twist.as_slice().len())?;
        Ok(MixedTiling {
            graph,
            lengths,
            twist,
        })
    }

    pub fn untwisted(graph: Multigraph, lengths: LengthFunction) -> Result<Self> {
        let twist = Twist::zero(&graph);
        Self::new(graph, lengths, twist)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn lengths(&self) -> &LengthFunction {
        &self.lengths
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn period(&self) -> i64 {
        self.lengths.period()
    }

    fn check_f(&self, f: &[i64]) -> Result<()> {
        check_len("vertex function", self.graph.vertex_count(), f.len())
    }

    /// f(v) − f(u) + 𝔪_e on each canonical arrow.
    fn numerators(&self, f: &[i64]) -> Vec<i64> {
        coboundary_int(&self.graph, f)
            .iter()
            .zip(self.twist.as_slice())
            .map(|(d, m)| d + m)
            .collect()
    }

    pub fn tile_point(&self, f: &[i64]) -> Result<TileDescriptor> {
        self.check_f(f)?;
        let mut dm = Cochain1::zeros(self.graph.edge_count());
        let mut subgraph = vec![false; self.graph.edge_count()];
        for (e, num) in self.numerators(f).into_iter().enumerate() {
            let l = self.lengths.get(e);
            let base = rat(floor_div(num, l));
            if num.rem_euclid(l) == 0 {
                subgraph[e] = true;
                dm.values[e] = base;
            } else {
                dm.values[e] = base + half();
            }
        }
        let center = adjoint(&self.graph, &dm)?;
        let f0 = f[0];
        Ok(TileDescriptor {
            f: f.iter().map(|x| x - f0).collect(),
            dm,
            subgraph,
            center,
        })
    }

    /// Like `tile_point` but requires G_f connected.
    pub fn top_tile(&self, f: &[i64]) -> Result<TileDescriptor> {
        let tile = self.tile_point(f)?;
        if !self.graph.is_connected_with(&tile.subgraph) {
            return Err(Error::DisconnectedTile);
        }
        Ok(tile)
    }

    /// θ on the cube around d(f): 𝔡_f plus the offset x − d(f) kept on G_f only.
    pub fn theta_project(&self, x: &Cochain1, f: &[i64]) -> Result<Cochain1> {
        self.check_f(f)?;
        check_len("edge function", self.graph.edge_count(), x.len())?;
        let df = Cochain1::from_ints(&coboundary_int(&self.graph, f));
        let eps = x - &df;
        if eps.values.iter().any(|v| v.abs() > half()) {
            return Err(Error::OutsideCube);
        }
        let tile = self.tile_point(f)?;
        let mut out = tile.dm;
        for e in 0..out.len() {
            if tile.subgraph[e] {
                out.values[e] += eps.values[e];
            }
        }
        Ok(out)
    }

    /// Translation of the tiling induced by f ↦ f + N·g: d*((N/ℓ)·d(g)).
    pub fn period_translation(&self, shift: &[i64]) -> Cochain0 {
        let n = self.period();
        let dg = coboundary_int(&self.graph, shift);
        let weighted = Cochain1 {
            values: dg
                .iter()
                .enumerate()
                .map(|(e, &x)| rat(x * (n / self.lengths.get(e))))
                .collect(),
        };
        adjoint(&self.graph, &weighted).expect("lengths agree")
    }
}

pub(crate) fn sum_zero(p: &Cochain0) -> bool {
    p.sum() == Rational::from_integer(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn single_edge(l: i64, m: i64) -> MixedTiling {
        let g = Multigraph::new(2, &[(0, 1)]).unwrap();
        let lengths = LengthFunction::new(&g, vec![l]).unwrap();
        let twist = Twist::new(&g, vec![m]).unwrap();
        MixedTiling::new(g, lengths, twist).unwrap()
    }

    #[test]
    fn tile_points() {
        let t = single_edge(2, 0).tile_point(&[0, 1]).unwrap();
        assert_eq!(t.dm.values, vec![half()]);
        assert_eq!(t.subgraph, vec![false]);
        let t = single_edge(2, 1).tile_point(&[0, 0]).unwrap();
        assert_eq!(t.dm.values, vec![half()]);
        assert_eq!(t.subgraph, vec![false]);
        let t = single_edge(3, 0).tile_point(&[5, 1]).unwrap();
        assert_eq!(t.dm.values, vec![frac(-3, 2)]);
        assert_eq!(t.f, vec![0, -4]);
    }

    #[test]
    fn unit_lengths_give_the_coboundary() {
        let g = Multigraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let tiling =
            MixedTiling::untwisted(g.clone(), LengthFunction::uniform(&g, 1).unwrap()).unwrap();
        let t = tiling.tile_point(&[3, -1, 2]).unwrap();
        assert_eq!(t.dm, Cochain1::from_ints(&[-4, -1, 3]));
        assert!(t.subgraph.iter().all(|&b| b));
        let x = Cochain1 {
            values: vec![frac(-9, 2), frac(-2, 3), rat(3)],
        };
        assert_eq!(tiling.theta_project(&x, &[3, -1, 2]).unwrap(), x);
    }

    #[test]
    fn theta_on_the_boundary() {
        let tiling = single_edge(2, 0);
        let x = Cochain1 {
            values: vec![half()],
        };
        assert_eq!(
            tiling.theta_project(&x, &[0, 1]).unwrap().values,
            vec![half()]
        );
        let far = Cochain1 {
            values: vec![rat(2)],
        };
        assert_eq!(tiling.theta_project(&far, &[0, 1]), Err(Error::OutsideCube));
    }
}
