//! Brute-force oracles and graph generators shared by the integration tests.
//! Nothing here calls the library's solvers; the oracles work from edge lists.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cutvor::divisor::{Divisor, Subdivision};
use cutvor::{LengthFunction, Multigraph, Rational};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n as i128, d as i128)
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::new(n, edges).unwrap()
}

pub fn k3() -> Multigraph {
    graph(3, &[(0, 1), (0, 2), (1, 2)])
}

/// Named small graphs used across the suites.
pub fn catalog() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("K3", k3()),
        ("P3", graph(3, &[(0, 1), (1, 2)])),
        ("C4", graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
        (
            "K4",
            graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ),
        ("theta", graph(2, &[(0, 1), (0, 1), (0, 1)])),
    ]
}

/// A random connected loopless multigraph: a random tree plus extra edges.
pub fn random_graph<R: Rng>(rng: &mut R, max_v: usize, max_e: usize) -> Multigraph {
    let n = rng.gen_range(2..=max_v);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let extra = rng.gen_range(0..=max_e.saturating_sub(n - 1));
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push((a, b));
        }
    }
    graph(n, &edges)
}

pub fn graph_strategy(max_v: usize, max_extra: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_v)
        .prop_flat_map(move |n| {
            let parents: Vec<std::ops::Range<usize>> = (1..n).map(|v| 0..v).collect();
            let extra = prop::collection::vec((0..n, 0..n), 0..=max_extra);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(a, b)| a != b));
            graph(n, &edges)
        })
}

/// A graph with edge lengths whose total is at most `max_total`.
pub fn weighted_strategy(
    max_v: usize,
    max_extra: usize,
    max_total: i64,
) -> impl Strategy<Value = (Multigraph, Vec<i64>)> {
    graph_strategy(max_v, max_extra)
        .prop_filter("room for lengths", move |g| {
            g.edge_count() as i64 <= max_total
        })
        .prop_flat_map(move |g| {
            let m = g.edge_count();
            (Just(g), prop::collection::vec(1..=4i64, m))
        })
        .prop_filter("total length bound", move |(_, l)| {
            l.iter().sum::<i64>() <= max_total
        })
}

pub fn random_lengths<R: Rng>(rng: &mut R, m: usize, max_total: i64) -> Vec<i64> {
    loop {
        let l: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=4)).collect();
        if l.iter().sum::<i64>() <= max_total {
            return l;
        }
    }
}

pub fn subdivision(g: &Multigraph, lengths: &[i64]) -> Subdivision {
    Subdivision::new(g.clone(), LengthFunction::new(g, lengths.to_vec()).unwrap()).unwrap()
}

/// Spanning trees by testing every (n − 1)-subset of edges for acyclicity.
pub fn brute_spanning_trees(n: usize, edges: &[(usize, usize)]) -> u64 {
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let root = find(p, p[x]);
            p[x] = root;
        }
        p[x]
    }
    let m = edges.len();
    let mut count = 0;
    for bits in 0u32..(1 << m) {
        if bits.count_ones() as usize != n - 1 {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        let mut ok = true;
        for (e, &(u, v)) in edges.iter().enumerate() {
            if bits >> e & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    ok = false;
                    break;
                }
                parent[a] = b;
            }
        }
        count += u64::from(ok);
    }
    count
}

/// |Σ_S p| ≤ ½·(edges of the selected subgraph crossing S) for every nonempty
/// proper S; strict when asked.
pub fn cut_oracle(
    n: usize,
    edges: &[(usize, usize)],
    mask: Option<&[bool]>,
    p: &[Rational],
    strict: bool,
) -> bool {
    for bits in 1u32..(1 << n) - 1 {
        let inside = |v: usize| bits >> v & 1 == 1;
        let total: Rational = (0..n).filter(|&v| inside(v)).map(|v| p[v]).sum();
        let crossing = edges
            .iter()
            .enumerate()
            .filter(|(e, &(u, v))| mask.is_none_or(|m| m[*e]) && inside(u) != inside(v))
            .count() as i64;
        let lhs = total.abs() * r(2);
        let ok = if strict {
            lhs < r(crossing)
        } else {
            lhs <= r(crossing)
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Gauss–Jordan elimination over the rationals; one solution with free
/// variables at zero, or `None` when inconsistent.
pub fn gauss_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = Rational::one() / a[row][col];
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        b[row] *= inv;
        for i in 0..rows {
            if i != row && !a[i][col].is_zero() {
                let factor = a[i][col];
                for k in 0..cols {
                    let delta = factor * a[row][k];
                    a[i][k] -= delta;
                }
                let delta = factor * b[row];
                b[i] -= delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    if b[row..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i];
    }
    Some(x)
}

/// Rank of a list of rational row vectors.
pub fn rank_oracle(rows: &[Vec<Rational>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            let factor = a[i][col] / a[rank][col];
            for k in col..cols {
                let delta = factor * a[rank][k];
                a[i][k] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

pub fn laplacian_of(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<Rational>> {
    let mut l = vec![vec![Rational::zero(); n]; n];
    for &(u, v) in edges {
        l[u][u] += r(1);
        l[v][v] += r(1);
        l[u][v] -= r(1);
        l[v][u] -= r(1);
    }
    l
}

/// g with L g = p and g(0) = 0.
pub fn laplacian_potential(
    n: usize,
    edges: &[(usize, usize)],
    p: &[Rational],
) -> Option<Vec<Rational>> {
    let mut a = laplacian_of(n, edges);
    let mut b = p.to_vec();
    let mut pin = vec![Rational::zero(); n];
    pin[0] = r(1);
    a.push(pin);
    b.push(Rational::zero());
    gauss_solve(a, b)
}

/// F on V(H) with F(0) = 0 and D + div(F) = D', if it exists and is integral.
pub fn equivalence_oracle(h: &Subdivision, d: &[i64], d2: &[i64]) -> Option<Vec<i64>> {
    let n = h.vertex_count();
    let diff: Vec<Rational> = d.iter().zip(d2).map(|(a, b)| r(a - b)).collect();
    // div(F) = −L F, so L F = D − D'
    let f = laplacian_potential(n, h.graph().edges(), &diff)?;
    let lap = laplacian_of(n, h.graph().edges());
    let check: Vec<Rational> = lap
        .iter()
        .map(|row| row.iter().zip(&f).map(|(a, b)| a * b).sum())
        .collect();
    if check != diff || f.iter().any(|x| !x.is_integer()) {
        return None;
    }
    Some(f.iter().map(|x| x.to_integer() as i64).collect())
}

/// Interior coefficients 0 or 1, at most one 1 per edge.
pub fn admissible_oracle(h: &Subdivision, d: &[i64]) -> bool {
    (0..h.base().edge_count()).all(|e| {
        let vals: Vec<i64> = h.interior(e).map(|x| d[x]).collect();
        vals.iter().all(|&c| c == 0 || c == 1) && vals.iter().filter(|&&c| c == 1).count() <= 1
    })
}

/// Every admissible divisor of the given degree with coefficients on V(G) in [−bound, bound].
pub fn admissible_divisors(h: &Subdivision, degree: i64, bound: i64) -> Vec<Divisor> {
    let g = h.base();
    let n = g.vertex_count();
    let mut out = Vec::new();
    // interior choices: per edge, none or one position
    let choices: Vec<Vec<Option<usize>>> = (0..g.edge_count())
        .map(|e| {
            std::iter::once(None)
                .chain(h.interior(e).map(Some))
                .collect()
        })
        .collect();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let mut base = vec![0i64; h.vertex_count()];
        for (e, &i) in pick.iter().enumerate() {
            if let Some(x) = choices[e][i] {
                base[x] = 1;
            }
        }
        let interior: i64 = base.iter().sum();
        let mut vals = vec![-bound; n];
        loop {
            if vals.iter().sum::<i64>() + interior == degree {
                let mut d = base.clone();
                d[..n].copy_from_slice(&vals);
                out.push(Divisor { coeffs: d });
            }
            let mut k = 0;
            while k < n && vals[k] == bound {
                vals[k] = -bound;
                k += 1;
            }
            if k == n {
                break;
            }
            vals[k] += 1;
        }
        let mut k = 0;
        while k < pick.len() && pick[k] + 1 == choices[k].len() {
            pick[k] = 0;
            k += 1;
        }
        if k == pick.len() {
            break;
        }
        pick[k] += 1;
    }
    out
}

/// 𝔡_f and the integral-edge mask straight from the floor formula.
pub fn dm_oracle(
    edges: &[(usize, usize)],
    lengths: &[i64],
    twist: &[i64],
    f: &[i64],
) -> (Vec<Rational>, Vec<bool>) {
    let mut dm = Vec::new();
    let mut mask = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        let num = f[v] - f[u] + twist[e];
        let l = lengths[e];
        let fl = num.div_euclid(l);
        if num.rem_euclid(l) == 0 {
            dm.push(r(fl));
            mask.push(true);
        } else {
            dm.push(r(fl) + q(1, 2));
            mask.push(false);
        }
    }
    (dm, mask)
}

pub fn connected_oracle(n: usize, edges: &[(usize, usize)], mask: &[bool]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for (e, &(u, v)) in edges.iter().enumerate() {
            if !mask[e] {
                continue;
            }
            for (a, b) in [(u, v), (v, u)] {
                if a == x && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// d*: (d*μ)(v) = Σ over arrows with head v.
pub fn adjoint_oracle(n: usize, edges: &[(usize, usize)], mu: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        out[v] += mu[e];
        out[u] -= mu[e];
    }
    out
}

/// Coherent acyclic orientations from every weak order of the vertices, as
/// sorted (edge, forward) lists.
pub fn cac_oracle(n: usize, edges: &[(usize, usize)]) -> BTreeSet<Vec<(usize, bool)>> {
    let mut out = BTreeSet::new();
    let mut level = vec![0usize; n];
    loop {
        let orientation: Vec<(usize, bool)> = edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| level[u] != level[v])
            .map(|(e, &(u, v))| (e, level[u] < level[v]))
            .collect();
        out.insert(orientation);
        let mut k = 0;
        while k < n && level[k] + 1 == n {
            level[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        level[k] += 1;
    }
    out
}

/// Codimension of a coherent acyclic orientation: components left after
/// deleting its edges, minus one.
pub fn codim_oracle(n: usize, edges: &[(usize, usize)], orientation: &[(usize, bool)]) -> usize {
    let mask: Vec<bool> = (0..edges.len())
        .map(|e| !orientation.iter().any(|&(f, _)| f == e))
        .collect();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for (e, &(u, v)) in edges.iter().enumerate() {
            if mask[e] && label[u] != label[v] {
                let m = label[u].min(label[v]);
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    label.iter().collect::<BTreeSet<_>>().len() - 1
}

/// d(χ_S) restricted to a subgraph.
pub fn cut_on_mask(edges: &[(usize, usize)], mask: &[bool], side: &[bool]) -> Vec<Rational> {
    edges
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            if mask[e] {
                r(side[v] as i64 - side[u] as i64)
            } else {
                r(0)
            }
        })
        .collect()
}

pub fn induced_connected(n: usize, edges: &[(usize, usize)], mask: &[bool], side: &[bool]) -> bool {
    let verts: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    if verts.is_empty() {
        return false;
    }
    let mut seen = vec![false; n];
    seen[verts[0]] = true;
    let mut stack = vec![verts[0]];
    while let Some(x) = stack.pop() {
        for (e, &(u, v)) in edges.iter().enumerate() {
            if !mask[e] || !side[u] || !side[v] {
                continue;
            }
            for (a, b) in [(u, v), (v, u)] {
                if a == x && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    verts.iter().all(|&v| seen[v])
}

/// Vertex sets S for which S and its complement induce connected subgraphs of the mask.
pub fn bond_sides_oracle(n: usize, edges: &[(usize, usize)], mask: &[bool]) -> Vec<Vec<bool>> {
    (1u32..(1 << n) - 1)
        .map(|bits| (0..n).map(|v| bits >> v & 1 == 1).collect::<Vec<bool>>())
        .filter(|side| {
            let other: Vec<bool> = side.iter().map(|b| !b).collect();
            induced_connected(n, edges, mask, side) && induced_connected(n, edges, mask, &other)
        })
        .collect()
}

/// A random rational point with coordinate sum zero, coordinates k/den with |k| ≤ span·den.
pub fn random_zero_sum<R: Rng>(rng: &mut R, n: usize, den: i64, span: i64) -> Vec<Rational> {
    let mut p: Vec<Rational> = (0..n - 1)
        .map(|_| q(rng.gen_range(-span * den..=span * den), den))
        .collect();
    let s: Rational = p.iter().sum();
    p.push(-s);
    p
}
