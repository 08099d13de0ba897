//! Facet neighbours and intersections of tiles.

use std::collections::BTreeSet;

use super::MixedTiling;
use crate::cochain::Cochain1;
use crate::error::{check_len, Error, Result};
use crate::graph::Arrow;
use crate::rational::{half, rat};

/// The tile across the facet of a bond of G_f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighbor {
    /// h = f + n·χ_S.
    pub h: Vec<i64>,
    pub n: i64,
    /// ½η_f + ½η_h, equal to 𝔡_h − 𝔡_f.
    pub eta: Cochain1,
}

/// A common face of two tiles, given by the two coherent acyclic orientations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedFace {
    /// Orientation of G_{f1} for the level sets of f2 − f1 in increasing order.
    pub first: Vec<Arrow>,
    /// Orientation of G_{f2} for the same level sets in decreasing order.
    pub second: Vec<Arrow>,
    /// Codimension of the face inside the first tile.
    pub codim: usize,
    /// The common point 𝔡_{f1} + ½χ_{D1} of the two boxes.
    pub point: Cochain1,
}

impl MixedTiling {
    /// d_{G_f}(χ_S) extended by zero: −1 on arrows of G_f leaving S.
    fn cut_on_subgraph(&self, subgraph: &[bool], side: &[bool]) -> Cochain1 {
        let g = self.graph();
        Cochain1::from_ints(
            &g.edges()
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| {
                    if subgraph[e] {
                        side[v] as i64 - side[u] as i64
                    } else {
                        0
                    }
                })
                .collect::<Vec<_>>(),
        )
    }

    pub fn is_bond_of_tile(&self, subgraph: &[bool], side: &[bool]) -> bool {
        let g = self.graph();
        let other: Vec<bool> = side.iter().map(|b| !b).collect();
        side.iter().any(|&b| b)
            && other.iter().any(|&b| b)
            && g.induced_component_count(side, Some(subgraph)) == 1
            && g.induced_component_count(&other, Some(subgraph)) == 1
    }

    /// h = f + n·χ_S for the least n ≥ 1 with G_h connected.
    pub fn neighbor_across(&self, f: &[i64], side: &[bool]) -> Result<Neighbor> {
        check_len("vertex set", self.graph().vertex_count(), side.len())?;
        let tile = self.top_tile(f)?;
        if !self.is_bond_of_tile(&tile.subgraph, side) {
            return Err(Error::NotABond);
        }
        let max_steps = self.lengths().as_slice().iter().copied().max().unwrap_or(1);
        for n in 1..=max_steps {
            let h: Vec<i64> = f.iter().zip(side).map(|(x, &s)| x + n * s as i64).collect();
            let next = self.tile_point(&h)?;
            if self.graph().is_connected_with(&next.subgraph) {
                let eta_f = self.cut_on_subgraph(&tile.subgraph, side);
                let eta_h = self.cut_on_subgraph(&next.subgraph, side);
                let eta = (&eta_f + &eta_h).scale(half());
                return Ok(Neighbor { h, n, eta });
            }
        }
        unreachable!("some edge across the cut becomes integral within max ℓ steps")
    }

    /// Whether the tiles of f1 and f2 meet, and if so along which face.
    pub fn tiles_intersect(&self, f1: &[i64], f2: &[i64]) -> Result<Option<SharedFace>> {
        let t1 = self.top_tile(f1)?;
        let t2 = self.top_tile(f2)?;
        let g = self.graph();
        let diff: Vec<i64> = f2.iter().zip(f1).map(|(a, b)| a - b).collect();
        let values: BTreeSet<i64> = diff.iter().copied().collect();
        let values: Vec<i64> = values.into_iter().collect();
        let level: Vec<usize> = diff
            .iter()
            .map(|x| values.binary_search(x).unwrap())
            .collect();
        let mut first = Vec::new();
        let mut second = Vec::new();
        let mut chi1 = Cochain1::zeros(g.edge_count());
        let mut chi2 = Cochain1::zeros(g.edge_count());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if level[u] == level[v] {
                continue;
            }
            // arrow from the lower level to the higher one
            let up = if level[u] < level[v] {
                Arrow::forward(e)
            } else {
                Arrow::backward(e)
            };
            if t1.subgraph[e] {
                first.push(up);
                chi1.values[e] = rat(up.sign());
            }
            if t2.subgraph[e] {
                second.push(up.reversed());
                chi2.values[e] = rat(-up.sign());
            }
        }
        let p1 = &t1.dm + &chi1.scale(half());
        let p2 = &t2.dm + &chi2.scale(half());
        if p1 != p2 {
            return Ok(None);
        }
        first.sort();
        second.sort();
        let mut rest = t1.subgraph.clone();
        for a in &first {
            rest[a.edge] = false;
        }
        let codim = g.component_labels(&rest).0 - 1;
        Ok(Some(SharedFace {
            first,
            second,
            codim,
            point: p1,
        }))
    }
}
