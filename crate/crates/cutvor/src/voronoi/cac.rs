//! Coherent acyclic orientations and their poset.

use std::collections::BTreeMap;

use crate::graph::{Arrow, Multigraph};

/// Sorted arrows, at most one per edge.
pub type OrientedEdgeSet = Vec<Arrow>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentAcyclicOrientation {
    pub arrows: OrientedEdgeSet,
    /// An ordered partition inducing the arrows.
    pub witness: Vec<Vec<usize>>,
}

impl CoherentAcyclicOrientation {
    /// Arrows of the selected edges going from an earlier part to a later one.
    pub fn from_partition(
        g: &Multigraph,
        parts: &[Vec<usize>],
        edge_mask: Option<&[bool]>,
    ) -> Self {
        let mut level = vec![0usize; g.vertex_count()];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                level[v] = i;
            }
        }
        let mut arrows: Vec<Arrow> = g
            .arrows()
            .filter(|&a| edge_mask.is_none_or(|m| m[a.edge]) && level[g.tail(a)] < level[g.head(a)])
            .collect();
        arrows.sort();
        CoherentAcyclicOrientation {
            arrows,
            witness: parts.to_vec(),
        }
    }

    /// (#components of G − E(D)) − 1.
    pub fn codim(&self, g: &Multigraph) -> usize {
        let mut mask = vec![true; g.edge_count()];
        for a in &self.arrows {
            mask[a.edge] = false;
        }
        g.component_labels(&mask).0 - 1
    }

    pub fn is_total(&self, g: &Multigraph) -> bool {
        self.arrows.len() == g.edge_count()
    }

    pub fn contains(&self, a: Arrow) -> bool {
        self.arrows.binary_search(&a).is_ok()
    }

    /// Text key such as `0+,2-`; the empty orientation is the empty string.
    pub fn key(&self) -> String {
        arrow_key(&self.arrows)
    }
}

pub(crate) fn arrow_key(arrows: &[Arrow]) -> String {
    arrows
        .iter()
        .map(|a| format!("{}{}", a.edge, if a.forward { '+' } else { '-' }))
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn is_subset(small: &[Arrow], big: &[Arrow]) -> bool {
    small.iter().all(|a| big.binary_search(a).is_ok())
}

/// All ordered partitions of {0, …, n−1} into nonempty parts.
pub fn ordered_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut set_partitions = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    grow(0, n, &mut blocks, &mut set_partitions);
    let mut out = Vec::new();
    for p in set_partitions {
        for perm in permutations(p.len()) {
            out.push(perm.iter().map(|&i| p[i].clone()).collect());
        }
    }
    out
}

fn grow(v: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if v == n {
        out.push(blocks.clone());
        return;
    }
    for i in 0..blocks.len() {
        blocks[i].push(v);
        grow(v + 1, n, blocks, out);
        blocks[i].pop();
    }
    blocks.push(vec![v]);
    grow(v + 1, n, blocks, out);
    blocks.pop();
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// CAC(G) ordered by reverse inclusion of arrow sets.
#[derive(Clone, Debug)]
pub struct CacPoset {
    pub elements: Vec<CoherentAcyclicOrientation>,
}

impl CacPoset {
    /// D_i ⪯ D_j iff E(D_j) ⊆ E(D_i).
    pub fn leq(&self, i: usize, j: usize) -> bool {
        is_subset(&self.elements[j].arrows, &self.elements[i].arrows)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, arrows: &[Arrow]) -> Option<usize> {
        self.elements.iter().position(|d| d.arrows == arrows)
    }
}

/// Every ordered partition, deduplicated by arrow set, sorted by arrow set.
pub fn enumerate_cac(g: &Multigraph) -> CacPoset {
    let mut seen: BTreeMap<OrientedEdgeSet, CoherentAcyclicOrientation> = BTreeMap::new();
    for parts in ordered_partitions(g.vertex_count()) {
        let d = CoherentAcyclicOrientation::from_partition(g, &parts, None);
        seen.entry(d.arrows.clone()).or_insert(d);
    }
    CacPoset {
        elements: seen.into_values().collect(),
    }
}
