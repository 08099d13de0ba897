//! The fiber of θ over a tile point: integer functions h with 𝔡_h = 𝔡_f.
//!
//! Writing h = f + η with η constant on each component C_i of G_f, the
//! condition is η(j) − η(i) ∈ I_ij for every pair of components joined in G.

use std::collections::{BTreeMap, VecDeque};

use super::MixedTiling;
use crate::error::Result;
use crate::graph::Arrow;

/// An integer interval; `None` marks an unbounded end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Interval {
    pub fn unbounded() -> Self {
        Interval { lo: None, hi: None }
    }

    pub fn new(lo: i64, hi: i64) -> Self {
        Interval {
            lo: Some(lo),
            hi: Some(hi),
        }
    }

    pub fn is_compact(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo.is_none_or(|l| l <= x) && self.hi.is_none_or(|h| x <= h)
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let pick = |a: Option<i64>, b: Option<i64>, f: fn(i64, i64) -> i64| match (a, b) {
            (Some(x), Some(y)) => Some(f(x, y)),
            (x, None) => x,
            (None, y) => y,
        };
        Interval {
            lo: pick(self.lo, other.lo, i64::max),
            hi: pick(self.hi, other.hi, i64::min),
        }
    }

    pub fn negated(&self) -> Interval {
        Interval {
            lo: self.hi.map(|x| -x),
            hi: self.lo.map(|x| -x),
        }
    }
}

/// Integer solutions on one connected component of the contracted graph,
/// normalized to 0 on its first component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberFactor {
    pub components: Vec<usize>,
    /// One row per solution, aligned with `components`.
    pub points: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberDescription {
    /// Components of G_f, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
    /// I_ij for i < j; unbounded when no edge of G joins C_i and C_j.
    pub intervals: BTreeMap<(usize, usize), Interval>,
    /// Pairs with a compact interval: the edges of K_k[𝓘].
    pub k_edges: Vec<(usize, usize)>,
    /// Whether K_k[𝓘] is connected, so that the fiber is a finite union of cubes.
    pub compact: bool,
    pub factors: Vec<FiberFactor>,
}

impl FiberDescription {
    fn interval(&self, i: usize, j: usize) -> Interval {
        if i < j {
            self.intervals[&(i, j)]
        } else {
            self.intervals[&(j, i)].negated()
        }
    }

    /// All η (one value per component, 0 on the component of vertex 0) when compact.
    pub fn points(&self) -> Option<&[Vec<i64>]> {
        (self.compact && self.factors.len() == 1).then(|| self.factors[0].points.as_slice())
    }

    /// The vertex functions f + η.
    pub fn lifts(&self, f: &[i64]) -> Option<Vec<Vec<i64>>> {
        let mut comp_of = vec![0; f.len()];
        for (i, c) in self.components.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        self.points().map(|pts| {
            pts.iter()
                .map(|eta| {
                    f.iter()
                        .enumerate()
                        .map(|(v, x)| x + eta[comp_of[v]])
                        .collect()
                })
                .collect()
        })
    }

    /// The points of P_{𝓘,ℤ}: η(j) − η(i) on each edge of K_k[𝓘].
    pub fn lattice_points(&self) -> Option<Vec<Vec<i64>>> {
        self.points().map(|pts| {
            pts.iter()
                .map(|eta| self.k_edges.iter().map(|&(i, j)| eta[j] - eta[i]).collect())
                .collect()
        })
    }

    pub fn satisfies(&self, eta: &[i64]) -> bool {
        let k = self.components.len();
        (0..k).all(|i| (i + 1..k).all(|j| self.interval(i, j).contains(eta[j] - eta[i])))
    }
}

/// Solves η(j) − η(i) ∈ I_ij over the integers, one factor per connected
/// component of the graph of compact intervals. Returns (connected, factors).
pub fn enumerate_interval_system(
    k: usize,
    intervals: &BTreeMap<(usize, usize), Interval>,
) -> (bool, Vec<FiberFactor>) {
    let get = |i: usize, j: usize| -> Interval {
        if i < j {
            intervals
                .get(&(i, j))
                .copied()
                .unwrap_or_else(Interval::unbounded)
        } else {
            intervals
                .get(&(j, i))
                .map(|x| x.negated())
                .unwrap_or_else(Interval::unbounded)
        }
    };
    let mut seen = vec![false; k];
    let mut factors = Vec::new();
    for root in 0..k {
        if seen[root] {
            continue;
        }
        let mut order = vec![root];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in 0..k {
                if !seen[j] && i != j && get(i, j).is_compact() {
                    seen[j] = true;
                    order.push(j);
                    queue.push_back(j);
                }
            }
        }
        let mut points = Vec::new();
        let mut values = vec![0i64; order.len()];
        assign(1, &order, &get, &mut values, &mut points);
        factors.push(FiberFactor {
            components: order,
            points,
        });
    }
    (factors.len() <= 1, factors)
}

fn assign(
    pos: usize,
    order: &[usize],
    get: &impl Fn(usize, usize) -> Interval,
    values: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if pos == order.len() {
        out.push(values.clone());
        return;
    }
    let c = order[pos];
    let mut range = Interval::unbounded();
    for (p, &a) in order[..pos].iter().enumerate() {
        let iv = get(a, c);
        let shifted = Interval {
            lo: iv.lo.map(|x| x + values[p]),
            hi: iv.hi.map(|x| x + values[p]),
        };
        range = range.intersect(&shifted);
    }
    let (Some(lo), Some(hi)) = (range.lo, range.hi) else {
        unreachable!("each component after the first has a compact link to an earlier one");
    };
    for x in lo..=hi {
        values[pos] = x;
        assign(pos + 1, order, get, values, out);
    }
}

impl MixedTiling {
    pub fn fiber_over(&self, f: &[i64]) -> Result<FiberDescription> {
        let tile = self.tile_point(f)?;
        let g = self.graph();
        let (k, label) = g.component_labels(&tile.subgraph);
        let mut components = vec![Vec::new(); k];
        for (v, &c) in label.iter().enumerate() {
            components[c].push(v);
        }
        let mut intervals: BTreeMap<(usize, usize), Interval> = BTreeMap::new();
        for i in 0..k {
            for j in i + 1..k {
                intervals.insert((i, j), Interval::unbounded());
            }
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let (i, j) = (label[u], label[v]);
            if i == j {
                continue;
            }
            let a = if i < j {
                Arrow::forward(e)
            } else {
                Arrow::backward(e)
            };
            let l = self.lengths().get(e);
            let dm = tile.dm.at(a);
            let shift = f[g.head(a)] - f[g.tail(a)] + self.twist().at(a);
            let lo = dm.floor().to_integer() as i64 * l - shift + 1;
            let hi = dm.ceil().to_integer() as i64 * l - shift - 1;
            let slot = intervals.get_mut(&(i.min(j), i.max(j))).unwrap();
            *slot = slot.intersect(&Interval::new(lo, hi));
        }
        let k_edges: Vec<(usize, usize)> = intervals
            .iter()
            .filter(|(_, iv)| iv.is_compact())
            .map(|(&p, _)| p)
            .collect();
        let (compact, factors) = enumerate_interval_system(k, &intervals);
        Ok(FiberDescription {
            components,
            intervals,
            k_edges,
            compact,
            factors,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use crate::lattice::LengthFunction;

    #[test]
    fn connected_tile_has_a_single_point() {
        let g = Multigraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let t = MixedTiling::untwisted(g.clone(), LengthFunction::uniform(&g, 1).unwrap()).unwrap();
        let fiber = t.fiber_over(&[0, 2, 5]).unwrap();
        assert_eq!(fiber.components.len(), 1);
        assert_eq!(fiber.points().unwrap(), &[vec![0]]);
    }

    #[test]
    fn single_edge_of_length_three() {
        let g = Multigraph::new(2, &[(0, 1)]).unwrap();
        let t =
            MixedTiling::untwisted(g.clone(), LengthFunction::new(&g, vec![3]).unwrap()).unwrap();
        let fiber = t.fiber_over(&[0, 1]).unwrap();
        assert_eq!(fiber.intervals[&(0, 1)], Interval::new(0, 1));
        assert_eq!(fiber.points().unwrap(), &[vec![0, 0], vec![0, 1]]);
        assert_eq!(fiber.lifts(&[0, 1]).unwrap(), vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(fiber.lattice_points().unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn disconnected_interval_graph_is_reported() {
        let mut intervals = BTreeMap::new();
        intervals.insert((0, 1), Interval::new(-1, 1));
        intervals.insert((0, 2), Interval::unbounded());
        intervals.insert((1, 2), Interval::unbounded());
        let (connected, factors) = enumerate_interval_system(3, &intervals);
        assert!(!connected);
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].points.len(), 3);
        assert_eq!(factors[1].components, vec![2]);
    }

    #[test]
    fn interval_algebra() {
        let a = Interval::new(-2, 3);
        assert_eq!(a.negated(), Interval::new(-3, 2));
        assert_eq!(a.intersect(&Interval::new(0, 9)), Interval::new(0, 3));
        assert!(!Interval {
            lo: Some(1),
            hi: None
        }
        .is_compact());
        assert!(Interval::unbounded().contains(-100));
    }
}
