//! Tiles of one period box and their facet adjacency.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{MixedTiling, TileDescriptor};
use crate::cochain::Cochain1;
use crate::error::Result;
use crate::graph::proper_subsets;

/// A facet neighbour: the tile of `target` translated by the period shift `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborLink {
    /// The vertex set S of the bond.
    pub side: Vec<usize>,
    pub n: i64,
    pub eta: Cochain1,
    pub target: usize,
    /// h = f_target + N·shift, up to an additive constant.
    pub shift: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileClass {
    pub tile: TileDescriptor,
    pub neighbors: Vec<NeighborLink>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingEnumeration {
    pub period: i64,
    pub tiles: Vec<TileClass>,
}

impl TilingEnumeration {
    pub fn descriptors(&self) -> Vec<TileDescriptor> {
        self.tiles.iter().map(|t| t.tile.clone()).collect()
    }

    pub fn position(&self, f: &[i64]) -> Option<usize> {
        self.tiles.iter().position(|t| t.tile.f == f)
    }

    /// The dual one-skeleton in DOT. Each facet appears once; edge labels give
    /// the bond side and the period shift of the far endpoint.
    pub fn dual_skeleton_dot(&self) -> String {
        let mut out = String::from("graph dual_skeleton {\n");
        for (i, t) in self.tiles.iter().enumerate() {
            let _ = writeln!(out, "  t{i} [label=\"{}\"];", t.tile.key());
        }
        for (i, t) in self.tiles.iter().enumerate() {
            for link in &t.neighbors {
                let back: Vec<i64> = link.shift.iter().map(|x| -x).collect();
                if (i, &link.shift) > (link.target, &back) {
                    continue;
                }
                let side: Vec<String> = link.side.iter().map(|v| v.to_string()).collect();
                let shift: Vec<String> = link.shift.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  t{i} -- t{} [label=\"S={{{}}} shift=({})\"];",
                    link.target,
                    side.join(","),
                    shift.join(",")
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

fn box_point(index: u64, n: usize, period: i64) -> Vec<i64> {
    let mut f = vec![0; n];
    let mut rest = index;
    for x in f.iter_mut().skip(1) {
        *x = (rest % period as u64) as i64;
        rest /= period as u64;
    }
    f
}

impl MixedTiling {
    fn box_tiles(&self) -> Vec<TileDescriptor> {
        let n = self.graph().vertex_count();
        let period = self.period();
        let total = (period as u64).pow(n as u32 - 1);
        let visit = |i: u64| {
            let f = box_point(i, n, period);
            self.top_tile(&f).ok()
        };
        #[cfg(feature = "parallel")]
        let tiles: Vec<TileDescriptor> = {
            use rayon::prelude::*;
            (0..total).into_par_iter().filter_map(visit).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let tiles: Vec<TileDescriptor> = (0..total).filter_map(visit).collect();
        tiles
    }

    /// All top-dimensional tiles with f(0) = 0 and f in [0, N)^{V−0}, sorted by
    /// key, with their facet neighbours.
    pub fn enumerate_tiling(&self) -> Result<TilingEnumeration> {
        let mut tiles = self.box_tiles();
        tiles.sort_by(|a, b| a.dm.cmp(&b.dm));
        tiles.dedup_by(|a, b| a.dm == b.dm);
        let index: HashMap<Vec<i64>, usize> = tiles
            .iter()
            .enumerate()
            .map(|(i, t)| (t.f.clone(), i))
            .collect();
        let period = self.period();
        let n = self.graph().vertex_count();
        let mut classes = Vec::with_capacity(tiles.len());
        for tile in tiles {
            let mut neighbors = Vec::new();
            for side in proper_subsets(n) {
                if !self.is_bond_of_tile(&tile.subgraph, &side) {
                    continue;
                }
                let nb = self.neighbor_across(&tile.f, &side)?;
                let h0: Vec<i64> = nb.h.iter().map(|x| x - nb.h[0]).collect();
                let rep: Vec<i64> = h0.iter().map(|x| x.rem_euclid(period)).collect();
                let shift: Vec<i64> = h0.iter().zip(&rep).map(|(h, r)| (h - r) / period).collect();
                let target = index[&rep];
                neighbors.push(NeighborLink {
                    side: (0..n).filter(|&v| side[v]).collect(),
                    n: nb.n,
                    eta: nb.eta,
                    target,
                    shift,
                });
            }
            classes.push(TileClass { tile, neighbors });
        }
        Ok(TilingEnumeration {
            period,
            tiles: classes,
        })
    }
}
