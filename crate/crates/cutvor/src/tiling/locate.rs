//! Point location: membership of a point in a tile, tile vertices, and search
//! over period translates.

use num_traits::Zero;
use rand::Rng;

use super::flow::flow_membership;
use super::{sum_zero, MixedTiling, TileDescriptor};
use crate::cochain::{adjoint, Cochain0, Cochain1};
use crate::error::{check_len, Error, Result};
use crate::graph::Arrow;
use crate::linalg::solve;
use crate::rational::Rational;
use crate::voronoi::{cut_inequalities, total_orientation_vertices};

impl MixedTiling {
    fn offset_in_tile(&self, p: &Cochain0, f: &[i64]) -> Result<(TileDescriptor, Cochain0)> {
        check_len("point", self.graph().vertex_count(), p.len())?;
        if !sum_zero(p) {
            return Err(Error::NonzeroSum);
        }
        let tile = self.top_tile(f)?;
        let offset = p - &tile.center;
        Ok((tile, offset))
    }

    /// p ∈ d*(𝔡_f) + Vor_{G_f}(O), decided by max-flow.
    pub fn tile_contains(&self, p: &Cochain0, f: &[i64]) -> Result<bool> {
        let (tile, offset) = self.offset_in_tile(p, f)?;
        Ok(flow_membership(
            self.graph(),
            &tile.subgraph,
            &offset,
            false,
        ))
    }

    /// p lies in the interior of the tile of f.
    pub fn tile_interior_contains(&self, p: &Cochain0, f: &[i64]) -> Result<bool> {
        let (tile, offset) = self.offset_in_tile(p, f)?;
        Ok(flow_membership(self.graph(), &tile.subgraph, &offset, true))
    }

    /// Same question answered by the 2^|V| − 2 cut inequalities.
    pub fn tile_contains_by_cuts(&self, p: &Cochain0, f: &[i64], strict: bool) -> Result<bool> {
        let (tile, offset) = self.offset_in_tile(p, f)?;
        Ok(cut_inequalities(
            self.graph(),
            Some(&tile.subgraph),
            &offset,
            strict,
        ))
    }

    /// Vertices of the tile of f: the center plus d*(ν^D) for every total acyclic
    /// orientation D of G_f, paired with D in edge indices of G.
    pub fn tile_vertices(&self, f: &[i64]) -> Result<Vec<(Vec<Arrow>, Cochain0)>> {
        let tile = self.top_tile(f)?;
        let (sub, kept) = self.graph().spanning_subgraph(&tile.subgraph)?;
        let m = self.graph().edge_count();
        total_orientation_vertices(&sub)?
            .into_iter()
            .map(|(arrows, nu)| {
                let mut full = Cochain1::zeros(m);
                for (i, &e) in kept.iter().enumerate() {
                    full.values[e] = nu.values[i];
                }
                let mut lifted: Vec<Arrow> = arrows
                    .iter()
                    .map(|a| Arrow {
                        edge: kept[a.edge],
                        forward: a.forward,
                    })
                    .collect();
                lifted.sort();
                let point = &tile.center + &adjoint(self.graph(), &full)?;
                Ok((lifted, point))
            })
            .collect()
    }

    /// Vertices of the face of the tile of f given by a coherent acyclic
    /// orientation of G_f (arrows in edge indices of G).
    pub fn face_vertices(&self, f: &[i64], arrows: &[Arrow]) -> Result<Vec<Cochain0>> {
        let mut out: Vec<Cochain0> = self
            .tile_vertices(f)?
            .into_iter()
            .filter(|(total, _)| arrows.iter().all(|a| total.binary_search(a).is_ok()))
            .map(|(_, p)| p)
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// A tile class together with a period translate: the tile of f + N·shift.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Location {
    pub tile: usize,
    pub shift: Vec<i64>,
}

/// Finds which translates of a list of tile representatives contain a point.
///
/// Points are written in the basis b_v = d*((N/ℓ)·d(χ_v)), v ≠ 0, of the period
/// lattice; each tile's vertices give a bounding box in these coordinates, so
/// only the translates whose box contains the point are tested exactly.
#[derive(Clone, Debug)]
pub struct TileLocator<'a> {
    tiling: &'a MixedTiling,
    tiles: Vec<TileDescriptor>,
    basis_matrix: Vec<Vec<Rational>>,
    boxes: Vec<(Vec<Rational>, Vec<Rational>)>,
}

impl<'a> TileLocator<'a> {
    pub fn new(tiling: &'a MixedTiling, tiles: Vec<TileDescriptor>) -> Result<Self> {
        let n = tiling.graph().vertex_count();
        let basis: Vec<Cochain0> = (1..n)
            .map(|v| {
                let mut shift = vec![0; n];
                shift[v] = 1;
                tiling.period_translation(&shift)
            })
            .collect();
        // rows: coordinates 1..n of the point; columns: basis vectors
        let basis_matrix: Vec<Vec<Rational>> = (1..n)
            .map(|i| basis.iter().map(|b| b.values[i]).collect())
            .collect();
        let mut locator = TileLocator {
            tiling,
            tiles: Vec::new(),
            basis_matrix,
            boxes: Vec::new(),
        };
        for tile in tiles {
            let coords: Vec<Vec<Rational>> = tiling
                .tile_vertices(&tile.f)?
                .iter()
                .map(|(_, p)| locator.coordinates(p))
                .collect();
            let mut lo = coords[0].clone();
            let mut hi = coords[0].clone();
            for c in &coords[1..] {
                for k in 0..c.len() {
                    lo[k] = lo[k].min(c[k]);
                    hi[k] = hi[k].max(c[k]);
                }
            }
            locator.boxes.push((lo, hi));
            locator.tiles.push(tile);
        }
        Ok(locator)
    }

    pub fn tiles(&self) -> &[TileDescriptor] {
        &self.tiles
    }

    /// Coordinates of p in the period basis.
    pub fn coordinates(&self, p: &Cochain0) -> Vec<Rational> {
        let n = self.tiling.graph().vertex_count();
        solve(&self.basis_matrix, &p.values[1..], n - 1)
            .expect("period basis is invertible")
            .0
    }

    pub fn point_at(&self, coords: &[Rational]) -> Cochain0 {
        let n = self.tiling.graph().vertex_count();
        let mut shift_values = vec![Rational::zero(); n];
        shift_values[1..].copy_from_slice(coords);
        let mut out = Cochain0::zeros(n);
        for (v, c) in shift_values.iter().enumerate().skip(1) {
            let mut unit = vec![0; n];
            unit[v] = 1;
            out = &out + &self.tiling.period_translation(&unit).scale(*c);
        }
        out
    }

    /// Translates whose bounding box contains p.
    pub fn candidates(&self, p: &Cochain0) -> Vec<Location> {
        let t = self.coordinates(p);
        let mut out = Vec::new();
        for (i, (lo, hi)) in self.boxes.iter().enumerate() {
            let ranges: Vec<(i64, i64)> = (0..t.len())
                .map(|k| {
                    let a = (t[k] - hi[k]).ceil().to_integer() as i64;
                    let b = (t[k] - lo[k]).floor().to_integer() as i64;
                    (a, b)
                })
                .collect();
            if ranges.iter().any(|(a, b)| a > b) {
                continue;
            }
            let mut current = vec![0i64; t.len()];
            product(&ranges, 0, &mut current, &mut |g| {
                let mut shift = vec![0];
                shift.extend_from_slice(g);
                out.push(Location { tile: i, shift });
            });
        }
        out
    }

    fn test(&self, p: &Cochain0, strict: bool) -> Result<Vec<Location>> {
        let mut hits = Vec::new();
        for loc in self.candidates(p) {
            let moved = p - &self.tiling.period_translation(&loc.shift);
            let f = &self.tiles[loc.tile].f;
            let inside = if strict {
                self.tiling.tile_interior_contains(&moved, f)?
            } else {
                self.tiling.tile_contains(&moved, f)?
            };
            if inside {
                hits.push(loc);
            }
        }
        Ok(hits)
    }

    /// Every translate containing p.
    pub fn locate(&self, p: &Cochain0) -> Result<Vec<Location>> {
        self.test(p, false)
    }

    /// Every translate containing p in its interior.
    pub fn interior_hits(&self, p: &Cochain0) -> Result<Vec<Location>> {
        self.test(p, true)
    }

    /// Random points of the fundamental parallelepiped with coordinates k/den.
    pub fn sample<R: Rng>(&self, rng: &mut R, count: usize, den: i64) -> Vec<Cochain0> {
        let dim = self.tiling.graph().vertex_count() - 1;
        (0..count)
            .map(|_| {
                let coords: Vec<Rational> = (0..dim)
                    .map(|_| Rational::new(rng.gen_range(0..den) as i128, den as i128))
                    .collect();
                self.point_at(&coords)
            })
            .collect()
    }
}

fn product(ranges: &[(i64, i64)], k: usize, current: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if k == ranges.len() {
        emit(current);
        return;
    }
    for x in ranges[k].0..=ranges[k].1 {
        current[k] = x;
        product(ranges, k + 1, current, emit);
    }
}

pub(crate) fn unit_vertex(n: usize, v: usize) -> Vec<i64> {
    let mut out = vec![0; n];
    out[v] = 1;
    out
}
