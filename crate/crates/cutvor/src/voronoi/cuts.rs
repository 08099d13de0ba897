//! Generalized cuts, their rank, and bond elements.

use std::collections::BTreeMap;

use num_traits::Signed;

use crate::cochain::{coboundary, Cochain0, Cochain1};
use crate::error::{Error, Result};
use crate::graph::{proper_subsets, Arrow, Multigraph};
use crate::lattice::potential;
use crate::rational::{rat, Rational};

/// An ordered partition V_1, …, V_s (s ≥ 2) whose crossing edges only join
/// consecutive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedCut {
    parts: Vec<Vec<usize>>,
}

impl GeneralizedCut {
    pub fn new(g: &Multigraph, parts: Vec<Vec<usize>>) -> Result<Self> {
        let n = g.vertex_count();
        if parts.len() < 2 {
            return Err(Error::Invalid(
                "a generalized cut needs at least two parts".into(),
            ));
        }
        let mut level = vec![usize::MAX; n];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::Invalid(format!("part {i} is empty")));
            }
            for &v in part {
                if v >= n || level[v] != usize::MAX {
                    return Err(Error::Invalid(format!(
                        "vertex {v} is out of range or repeated"
                    )));
                }
                level[v] = i;
            }
        }
        if let Some(v) = level.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Invalid(format!("vertex {v} is in no part")));
        }
        for &(u, v) in g.edges() {
            if level[u].abs_diff(level[v]) >= 2 {
                return Err(Error::Invalid(format!(
                    "edge {u}-{v} skips a part of the partition"
                )));
            }
        }
        let mut parts = parts;
        for p in &mut parts {
            p.sort_unstable();
        }
        Ok(GeneralizedCut { parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    fn levels(&self, n: usize) -> Vec<i64> {
        let mut level = vec![0; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                level[v] = i as i64;
            }
        }
        level
    }

    /// Arrows from each part to the next one.
    pub fn arrows(&self, g: &Multigraph) -> Vec<Arrow> {
        let level = self.levels(g.vertex_count());
        let mut out: Vec<Arrow> = g
            .arrows()
            .filter(|&a| level[g.head(a)] == level[g.tail(a)] + 1)
            .collect();
        out.sort();
        out
    }

    /// χ_𝔠: 1 on its arrows, −1 on their reverses, 0 elsewhere.
    pub fn element(&self, g: &Multigraph) -> Cochain1 {
        let level = self.levels(g.vertex_count());
        coboundary(g, &Cochain0::from_ints(&level)).expect("lengths agree")
    }

    /// κ = Σ_{i<s} (l_i + r_i − 1), with l_i, r_i the component counts of the
    /// union of the first i parts and of the remaining parts.
    pub fn rank(&self, g: &Multigraph) -> usize {
        let n = g.vertex_count();
        let level = self.levels(n);
        (1..self.parts.len())
            .map(|i| {
                let left: Vec<bool> = level.iter().map(|&l| (l as usize) < i).collect();
                let right: Vec<bool> = left.iter().map(|b| !b).collect();
                g.induced_component_count(&left, None) + g.induced_component_count(&right, None) - 1
            })
            .sum()
    }
}

/// d(χ_C).
pub fn cut_element(g: &Multigraph, set: &[bool]) -> Cochain1 {
    coboundary(g, &Cochain0::indicator(set)).expect("lengths agree")
}

/// Recovers the generalized cut of β if β ∈ F_ℤ and ‖β‖_∞ ≤ 1.
pub fn is_generalized_cut_element(
    g: &Multigraph,
    beta: &Cochain1,
) -> Result<Option<GeneralizedCut>> {
    if !beta.is_integral() || beta.max_abs() > rat(1) {
        return Ok(None);
    }
    let Some(f) = potential(g, beta)? else {
        return Ok(None);
    };
    let mut levels: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (v, x) in f.values.iter().enumerate() {
        levels.entry(*x).or_default().push(v);
    }
    if levels.len() < 2 {
        // β = 0 is the trivial cut of the one-part partition
        return Ok(None);
    }
    let parts: Vec<Vec<usize>> = levels.into_values().collect();
    Ok(GeneralizedCut::new(g, parts).ok())
}

/// Whether Vor_F(β) and Vor_F(λ) meet, i.e. β − λ is a generalized cut element.
pub fn cells_intersect(g: &Multigraph, beta: &Cochain1, lambda: &Cochain1) -> Result<bool> {
    let diff = beta - lambda;
    if diff.values.iter().all(|x| x.abs() == rat(0)) {
        return Ok(true);
    }
    Ok(is_generalized_cut_element(g, &diff)?.is_some())
}

/// Vertex sets C with G[C] and G[V − C] both connected.
pub fn enumerate_bond_sides(g: &Multigraph) -> Vec<Vec<bool>> {
    proper_subsets(g.vertex_count())
        .filter(|s| {
            let comp: Vec<bool> = s.iter().map(|b| !b).collect();
            g.induced_component_count(s, None) == 1 && g.induced_component_count(&comp, None) == 1
        })
        .collect()
}

/// The bond elements d(χ_C), sorted.
pub fn enumerate_bonds(g: &Multigraph) -> Vec<Cochain1> {
    let mut bonds: Vec<Cochain1> = enumerate_bond_sides(g)
        .iter()
        .map(|s| cut_element(g, s))
        .collect();
    bonds.sort();
    bonds
}

/// Splits d(χ_S) into bonds d(χ_R) whose positive supports lie inside that of
/// d(χ_S): for every component T of G[V − S], the components R of G[V − T].
pub fn bond_decomposition(g: &Multigraph, set: &[bool]) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let components = |mask: &[bool]| -> Vec<Vec<bool>> {
        let mut out: Vec<Vec<bool>> = Vec::new();
        let mut seen = vec![false; n];
        for s in 0..n {
            if !mask[s] || seen[s] {
                continue;
            }
            let mut comp = vec![false; n];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                comp[x] = true;
                for &a in g.out_arrows(x) {
                    let y = g.head(a);
                    if mask[y] && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    };
    let outside: Vec<bool> = set.iter().map(|b| !b).collect();
    let mut bonds = Vec::new();
    for t in components(&outside) {
        let rest: Vec<bool> = t.iter().map(|b| !b).collect();
        bonds.extend(components(&rest));
    }
    bonds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn k3() -> Multigraph {
        Multigraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn reconstructs_partitions() {
        let g = k3();
        let beta = cut_element(&g, &[true, false, false]);
        let c = is_generalized_cut_element(&g, &beta).unwrap().unwrap();
        assert_eq!(c.parts(), &[vec![1, 2], vec![0]]);
        assert_eq!(c.element(&g), beta);
        assert!(is_generalized_cut_element(&g, &beta.scale(rat(2)))
            .unwrap()
            .is_none());

        // K4 minus the edge 0-3, three levels 0 < {1,2} < 3
        let g = Multigraph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let beta = coboundary(&g, &Cochain0::from_ints(&[0, 1, 1, 2])).unwrap();
        let c = is_generalized_cut_element(&g, &beta).unwrap().unwrap();
        assert_eq!(c.parts(), &[vec![0], vec![1, 2], vec![3]]);
    }

    #[test]
    fn intersections() {
        let g = k3();
        let beta = cut_element(&g, &[true, false, false]);
        let zero = Cochain1::zeros(3);
        assert!(cells_intersect(&g, &beta, &beta).unwrap());
        assert!(cells_intersect(&g, &beta, &zero).unwrap());
        assert!(!cells_intersect(&g, &beta.scale(rat(2)), &zero).unwrap());
    }

    #[test]
    fn ranks() {
        let c4 = Multigraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = GeneralizedCut::new(&c4, vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(c.rank(&c4), 3);
        let p3 = Multigraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = GeneralizedCut::new(&p3, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(c.rank(&p3), 2);
        let bond = GeneralizedCut::new(&p3, vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(bond.rank(&p3), 1);
        assert!(GeneralizedCut::new(&p3, vec![vec![1], vec![0, 2]]).is_ok());
        assert!(GeneralizedCut::new(&p3, vec![vec![0], vec![2], vec![1]]).is_err());
        assert!(GeneralizedCut::new(&p3, vec![vec![0], vec![1]]).is_err());
        let tri = k3();
        assert!(GeneralizedCut::new(&tri, vec![vec![0], vec![1], vec![2]]).is_err());
    }

    #[test]
    fn bond_counts() {
        assert_eq!(enumerate_bonds(&k3()).len(), 6);
        let tree = Multigraph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(enumerate_bonds(&tree).len(), 8);
        let triple = Multigraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(enumerate_bonds(&triple).len(), 2);
    }

    #[test]
    fn decomposition_of_a_star_cut() {
        // removing the centre of a star leaves three leaves
        let star = Multigraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let set = [false, true, true, true];
        let parts = bond_decomposition(&star, &set);
        assert_eq!(parts.len(), 3);
        let total = parts
            .iter()
            .map(|r| cut_element(&star, r))
            .fold(Cochain1::zeros(3), |acc, b| &acc + &b);
        assert_eq!(total, cut_element(&star, &set));
    }
}
