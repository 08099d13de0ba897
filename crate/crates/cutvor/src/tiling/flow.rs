//! Integer max-flow (Edmonds–Karp) and the flow test for membership in Vor_{G'}(O).

use std::collections::VecDeque;

use num_traits::Zero;

use crate::cochain::Cochain0;
use crate::graph::Multigraph;
use crate::rational::{common_denominator, Rational};

struct Network {
    heads: Vec<usize>,
    caps: Vec<i128>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            heads: Vec::new(),
            caps: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i128) {
        self.adj[from].push(self.heads.len());
        self.heads.push(to);
        self.caps.push(cap);
        self.adj[to].push(self.heads.len());
        self.heads.push(from);
        self.caps.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; self.adj.len()];
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                for &id in &self.adj[x] {
                    let y = self.heads[id];
                    if self.caps[id] > 0 && y != s && via[y] == usize::MAX {
                        via[y] = id;
                        if y == t {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                return total;
            }
            let mut push = i128::MAX;
            let mut y = t;
            while y != s {
                let id = via[y];
                push = push.min(self.caps[id]);
                y = self.heads[id ^ 1];
            }
            let mut y = t;
            while y != s {
                let id = via[y];
                self.caps[id] -= push;
                self.caps[id ^ 1] += push;
                y = self.heads[id ^ 1];
            }
            total += push;
        }
    }
}

/// Maximum flow value on a network given as (from, to, capacity) arcs.
pub fn max_flow(nodes: usize, arcs: &[(usize, usize, i128)], source: usize, sink: usize) -> i128 {
    let mut net = Network::new(nodes);
    for &(a, b, c) in arcs {
        net.add_arc(a, b, c);
    }
    net.max_flow(source, sink)
}

/// Whether p ∈ Vor_{G'}(O) for the spanning subgraph G' of selected edges, i.e.
/// p = d*(μ) for some μ supported on G' with |μ| ≤ ½. With `strict`, whether p
/// is in the interior.
///
/// With h = −p scaled to integers H = 2L·h, the network has an arc source→v of
/// capacity H(v) when H(v) > 0, v→sink of capacity −H(v) when H(v) < 0, and
/// both arrows of each selected edge with capacity L. p is a member iff the
/// flow saturates the source. For the interior every cut inequality
/// |H(C)| ≤ L·c(C) must be strict; since H is integral this is the same as
/// (K+1)·|H(C)| ≤ K·L·c(C) for K = L·|E'|, so the scaled network decides it.
pub fn flow_membership(g: &Multigraph, edge_mask: &[bool], p: &Cochain0, strict: bool) -> bool {
    debug_assert!(p.sum().is_zero());
    let n = g.vertex_count();
    let l = common_denominator(&p.values);
    let big_h: Vec<i128> = p
        .values
        .iter()
        .map(|x| -(x * Rational::from_integer(2 * l)).to_integer())
        .collect();
    let edges = edge_mask.iter().filter(|&&b| b).count() as i128;
    let (point_scale, edge_cap) = if strict {
        let k = l * edges;
        (k + 1, k * l)
    } else {
        (1, l)
    };
    let (s, t) = (n, n + 1);
    let mut arcs = Vec::new();
    let mut supply = 0;
    for (v, &x) in big_h.iter().enumerate() {
        if x > 0 {
            arcs.push((s, v, x * point_scale));
            supply += x * point_scale;
        } else if x < 0 {
            arcs.push((v, t, -x * point_scale));
        }
    }
    if supply == 0 {
        // p = 0 is a member; it is interior unless some cut has no edges
        return !strict || g.is_connected_with(edge_mask);
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if edge_mask[e] {
            arcs.push((u, v, edge_cap));
            arcs.push((v, u, edge_cap));
        }
    }
    max_flow(n + 2, &arcs, s, t) == supply
}
