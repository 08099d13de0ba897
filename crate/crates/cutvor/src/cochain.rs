//! Rational functions on vertices and on oriented edges, with d, d* and the Laplacian.

use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{check_len, Result};
use crate::graph::{Arrow, Multigraph};
use crate::rational::{rat, Rational};

/// A function on vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain0 {
    pub values: Vec<Rational>,
}

/// An antisymmetric function on arrows, stored by its value on canonical arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain1 {
    pub values: Vec<Rational>,
}

macro_rules! linear_ops {
    ($t:ident) => {
        impl $t {
            pub fn zeros(len: usize) -> Self {
                $t {
                    values: vec![Rational::zero(); len],
                }
            }

            pub fn from_ints(values: &[i64]) -> Self {
                $t {
                    values: values.iter().map(|&x| rat(x)).collect(),
                }
            }

            pub fn len(&self) -> usize {
                self.values.len()
            }

            pub fn is_empty(&self) -> bool {
                self.values.is_empty()
            }

            pub fn dot(&self, other: &Self) -> Rational {
                self.values
                    .iter()
                    .zip(&other.values)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            }

            pub fn scale(&self, c: Rational) -> Self {
                $t {
                    values: self.values.iter().map(|x| x * c).collect(),
                }
            }

            pub fn is_integral(&self) -> bool {
                self.values.iter().all(|x| x.is_integer())
            }

            pub fn to_ints(&self) -> Option<Vec<i64>> {
                self.values.iter().map(crate::rational::to_i64).collect()
            }

            pub fn max_abs(&self) -> Rational {
                crate::rational::max_abs(&self.values)
            }
        }

        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $t {
                    values: self
                        .values
                        .iter()
                        .zip(&rhs.values)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $t {
                    values: self
                        .values
                        .iter()
                        .zip(&rhs.values)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t {
                    values: self.values.iter().map(|a| -a).collect(),
                }
            }
        }
    };
}

linear_ops!(Cochain0);
linear_ops!(Cochain1);

impl Cochain0 {
    /// Indicator function of a vertex set.
    pub fn indicator(set: &[bool]) -> Self {
        Cochain0 {
            values: set.iter().map(|&b| rat(b as i64)).collect(),
        }
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |a, b| a + b)
    }

    /// Sum of the values over a vertex set.
    pub fn sum_over(&self, set: &[bool]) -> Rational {
        self.values
            .iter()
            .zip(set)
            .filter(|(_, &s)| s)
            .fold(Rational::zero(), |a, (b, _)| a + b)
    }
}

impl Cochain1 {
    pub fn at(&self, a: Arrow) -> Rational {
        let x = self.values[a.edge];
        if a.forward {
            x
        } else {
            -x
        }
    }
}

/// d(f)(uv) = f(v) - f(u) on every canonical arrow.
pub fn coboundary(g: &Multigraph, f: &Cochain0) -> Result<Cochain1> {
    check_len("vertex function", g.vertex_count(), f.len())?;
    Ok(Cochain1 {
        values: g
            .edges()
            .iter()
            .map(|&(u, v)| f.values[v] - f.values[u])
            .collect(),
    })
}

/// Integer coboundary on canonical arrows.
pub fn coboundary_int(g: &Multigraph, f: &[i64]) -> Vec<i64> {
    g.edges().iter().map(|&(u, v)| f[v] - f[u]).collect()
}

/// (d*μ)(v) = sum of μ over arrows with head v.
pub fn adjoint(g: &Multigraph, mu: &Cochain1) -> Result<Cochain0> {
    check_len("edge function", g.edge_count(), mu.len())?;
    let mut out = Cochain0::zeros(g.vertex_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        out.values[v] += mu.values[e];
        out.values[u] -= mu.values[e];
    }
    Ok(out)
}

pub fn laplacian_apply(g: &Multigraph, f: &Cochain0) -> Result<Cochain0> {
    adjoint(g, &coboundary(g, f)?)
}

/// Integer Laplacian matrix, L[v][v] = deg(v), L[u][v] = -#edges(u, v).
pub fn laplacian_matrix(g: &Multigraph) -> Vec<Vec<i128>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0i128; n]; n];
    for &(u, v) in g.edges() {
        m[u][u] += 1;
        m[v][v] += 1;
        m[u][v] -= 1;
        m[v][u] -= 1;
    }
    m
}
