//! Cut space, spanning-tree count, the form q, and edge lengths.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::cochain::{laplacian_matrix, Cochain0, Cochain1};
use crate::error::{check_len, Error, Result};
use crate::graph::Multigraph;
use crate::linalg::{bareiss_determinant, solve};
use crate::rational::{lcm_all, rat, Rational};

/// Positive integer edge lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthFunction {
    lengths: Vec<i64>,
}

impl LengthFunction {
    pub fn new(g: &Multigraph, lengths: Vec<i64>) -> Result<Self> {
        check_len("edge lengths", g.edge_count(), lengths.len())?;
        if let Some(e) = lengths.iter().position(|&l| l < 1) {
            return Err(Error::NonPositiveLength(e));
        }
        Ok(LengthFunction { lengths })
    }

    pub fn uniform(g: &Multigraph, l: i64) -> Result<Self> {
        Self::new(g, vec![l; g.edge_count()])
    }

    pub fn get(&self, e: usize) -> i64 {
        self.lengths[e]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.lengths
    }

    /// The period N: lcm of all lengths.
    pub fn period(&self) -> i64 {
        lcm_all(self.lengths.iter().copied())
    }

    pub fn total(&self) -> i64 {
        self.lengths.iter().sum()
    }
}

/// Determinant of the reduced Laplacian.
pub fn spanning_tree_count(g: &Multigraph) -> i128 {
    let l = laplacian_matrix(g);
    let reduced: Vec<Vec<i128>> = l[1..].iter().map(|row| row[1..].to_vec()).collect();
    bareiss_determinant(reduced)
}

/// A potential f with d(f) = μ and f(0) = 0, if μ is in the cut space.
/// The tree is grown by BFS; every non-tree edge is then one fundamental-cycle check.
pub fn potential(g: &Multigraph, mu: &Cochain1) -> Result<Option<Cochain0>> {
    check_len("edge function", g.edge_count(), mu.len())?;
    let n = g.vertex_count();
    let mut f: Vec<Option<Rational>> = vec![None; n];
    f[0] = Some(Rational::zero());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = f[x].unwrap();
        for &a in g.out_arrows(x) {
            let y = g.head(a);
            if f[y].is_none() {
                f[y] = Some(fx + mu.at(a));
                queue.push_back(y);
            }
        }
    }
    let f: Vec<Rational> = f.into_iter().map(Option::unwrap).collect();
    let consistent = g
        .edges()
        .iter()
        .enumerate()
        .all(|(e, &(u, v))| f[v] - f[u] == mu.values[e]);
    Ok(consistent.then_some(Cochain0 { values: f }))
}

pub fn is_in_cut_space(g: &Multigraph, mu: &Cochain1) -> Result<bool> {
    Ok(potential(g, mu)?.is_some())
}

/// Solves Δf = h with f(0) = 0. `h` must have coordinate sum zero.
pub fn solve_laplacian(g: &Multigraph, h: &Cochain0) -> Result<Cochain0> {
    check_len("vertex function", g.vertex_count(), h.len())?;
    if !h.sum().is_zero() {
        return Err(Error::NonzeroSum);
    }
    let n = g.vertex_count();
    let l = laplacian_matrix(g);
    let a: Vec<Vec<Rational>> = l[1..]
        .iter()
        .map(|row| {
            row[1..]
                .iter()
                .map(|&x| Rational::from_integer(x))
                .collect()
        })
        .collect();
    let (x, _) = solve(&a, &h.values[1..], n - 1).expect("reduced Laplacian is invertible");
    let mut values = vec![Rational::zero()];
    values.extend(x);
    Ok(Cochain0 { values })
}

/// q(h) = ⟨f, h⟩ for any f with Δf = h.
pub fn quadratic_form_q(g: &Multigraph, h: &Cochain0) -> Result<Rational> {
    let f = solve_laplacian(g, h)?;
    Ok(f.dot(h))
}

/// Gram matrix of q on the basis Δχ_v (v ≠ 0) of the Laplacian lattice:
/// q(Δχ_u, Δχ_v) = ⟨χ_u, Δχ_v⟩, i.e. the reduced Laplacian.
pub fn q_gram_matrix(g: &Multigraph) -> Vec<Vec<i64>> {
    laplacian_matrix(g)[1..]
        .iter()
        .map(|row| row[1..].iter().map(|&x| x as i64).collect())
        .collect()
}

pub fn vertex_indicator(n: usize, v: usize) -> Cochain0 {
    let mut c = Cochain0::zeros(n);
    c.values[v] = rat(1);
    c
}
