//! Loopless connected multigraphs with a fixed canonical orientation per edge.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// One of the two orientations of an edge. `forward` is the canonical arrow,
/// from the lower-index endpoint to the higher one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub edge: usize,
    pub forward: bool,
}

impl Arrow {
    pub fn forward(edge: usize) -> Self {
        Arrow {
            edge,
            forward: true,
        }
    }

    pub fn backward(edge: usize) -> Self {
        Arrow {
            edge,
            forward: false,
        }
    }

    pub fn reversed(self) -> Self {
        Arrow {
            edge: self.edge,
            forward: !self.forward,
        }
    }

    /// +1 on the canonical arrow, -1 on its reverse.
    pub fn sign(self) -> i64 {
        if self.forward {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    out_arrows: Vec<Vec<Arrow>>,
}

impl Multigraph {
    /// Builds a graph; every edge is stored as (smaller, larger) endpoint.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let g = Self::unchecked(vertex_count, edges)?;
        if !g.is_connected_with(&vec![true; g.edge_count()]) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    fn unchecked(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        let mut stored = Vec::with_capacity(edges.len());
        let mut out_arrows = vec![Vec::new(); vertex_count];
        for (k, &(a, b)) in edges.iter().enumerate() {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        edge: k,
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::Loop(k));
            }
            let (u, v) = (a.min(b), a.max(b));
            stored.push((u, v));
            out_arrows[u].push(Arrow::forward(k));
            out_arrows[v].push(Arrow::backward(k));
        }
        Ok(Multigraph {
            vertex_count,
            edges: stored,
            out_arrows,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of the canonical arrow of edge `e`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn tail(&self, a: Arrow) -> usize {
        let (u, v) = self.edges[a.edge];
        if a.forward {
            u
        } else {
            v
        }
    }

    pub fn head(&self, a: Arrow) -> usize {
        self.tail(a.reversed())
    }

    /// Arrows whose tail is `v`.
    pub fn out_arrows(&self, v: usize) -> &[Arrow] {
        &self.out_arrows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_arrows[v].len()
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        (0..self.edge_count()).flat_map(|e| [Arrow::forward(e), Arrow::backward(e)])
    }

    /// Component label per vertex for the spanning subgraph with the selected edges.
    pub fn component_labels(&self, edge_mask: &[bool]) -> (usize, Vec<usize>) {
        let n = self.vertex_count;
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &a in &self.out_arrows[x] {
                    if !edge_mask[a.edge] {
                        continue;
                    }
                    let y = self.head(a);
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected_with(&self, edge_mask: &[bool]) -> bool {
        self.component_labels(edge_mask).0 == 1
    }

    /// Number of connected components of the induced subgraph on `vertices`,
    /// optionally restricted to the selected edges.
    pub fn induced_component_count(&self, vertices: &[bool], edge_mask: Option<&[bool]>) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.vertex_count {
            if !vertices[s] || seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &a in &self.out_arrows[x] {
                    if edge_mask.is_some_and(|m| !m[a.edge]) {
                        continue;
                    }
                    let y = self.head(a);
                    if vertices[y] && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// The spanning subgraph on the selected edges, with a map from its edge
    /// indices back to ours. Fails if it is disconnected.
    pub fn spanning_subgraph(&self, edge_mask: &[bool]) -> Result<(Multigraph, Vec<usize>)> {
        let kept: Vec<usize> = (0..self.edge_count()).filter(|&e| edge_mask[e]).collect();
        let pairs: Vec<(usize, usize)> = kept.iter().map(|&e| self.edges[e]).collect();
        let sub = Multigraph::new(self.vertex_count, &pairs)?;
        Ok((sub, kept))
    }

    /// Arrows of the selected edges leaving `set`.
    pub fn boundary_arrows<'a>(
        &'a self,
        set: &'a [bool],
        edge_mask: Option<&'a [bool]>,
    ) -> impl Iterator<Item = Arrow> + 'a {
        self.arrows().filter(move |&a| {
            edge_mask.is_none_or(|m| m[a.edge]) && set[self.tail(a)] && !set[self.head(a)]
        })
    }
}

/// All nonempty proper vertex subsets as boolean masks, in bit order.
pub fn proper_subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    assert!(
        n < 31,
        "subset enumeration is limited to small vertex counts"
    );
    (1u32..(1u32 << n) - 1).map(move |bits| mask_from_bits(bits, n))
}

pub fn mask_from_bits(bits: u32, n: usize) -> Vec<bool> {
    (0..n).map(|i| bits >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_orientation_is_low_to_high() {
        let g = Multigraph::new(3, &[(2, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.endpoints(0), (0, 2));
        assert_eq!(g.tail(Arrow::forward(0)), 0);
        assert_eq!(g.head(Arrow::backward(0)), 0);
        assert_eq!(g.degree(0), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Multigraph::new(2, &[(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(Multigraph::new(3, &[(0, 1)]), Err(Error::Disconnected));
        assert!(matches!(
            Multigraph::new(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert_eq!(Multigraph::new(0, &[]), Err(Error::NoVertices));
        assert!(Multigraph::new(1, &[]).is_ok());
    }

    #[test]
    fn components_of_edge_subsets() {
        let g = Multigraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (count, labels) = g.component_labels(&[true, false, true, false]);
        assert_eq!(count, 2);
        assert_eq!(labels[0], labels[1]);
        assert_ne!(labels[1], labels[2]);
        assert_eq!(
            g.induced_component_count(&[true, false, true, false], None),
            2
        );
    }

    #[test]
    fn proper_subset_count() {
        assert_eq!(proper_subsets(4).count(), 14);
    }
}
