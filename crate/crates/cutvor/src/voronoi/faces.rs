//! Faces of Vor_F(O): vertices ν^D, the face poset indexed by coherent acyclic
//! orientations, and an independent hull-based face lattice to compare with.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use super::cac::{enumerate_cac, is_subset, CacPoset, CoherentAcyclicOrientation};
use super::cuts::{cut_element, enumerate_bond_sides};
use super::voronoi_membership;
use crate::cochain::{coboundary, laplacian_apply, Cochain0, Cochain1};
use crate::error::{Error, Result};
use crate::graph::{Arrow, Multigraph};
use crate::linalg::{rank, solve};
use crate::rational::{rat, Rational};

/// A bond d(χ_C) with the data needed for its facet hyperplane 2⟨x, β⟩ = ‖β‖².
#[derive(Clone, Debug)]
struct Bond {
    element: Cochain1,
    /// Arrows entering C, where β = +1.
    positive: Vec<Arrow>,
    /// Row of 2⟨d(f), β⟩ in the unknowns f(1), …, f(n−1).
    row: Vec<Rational>,
    norm2: Rational,
}

fn bonds_of(g: &Multigraph) -> Vec<Bond> {
    let n = g.vertex_count();
    let mut out: Vec<Bond> = enumerate_bond_sides(g)
        .into_iter()
        .map(|side| {
            let element = cut_element(g, &side);
            let mut positive: Vec<Arrow> =
                g.arrows().filter(|&a| element.at(a) == rat(1)).collect();
            positive.sort();
            let lap = laplacian_apply(g, &Cochain0::indicator(&side)).expect("lengths agree");
            let row = lap.values[1..].iter().map(|x| x * rat(2)).collect();
            Bond {
                norm2: rat(positive.len() as i64),
                element,
                positive,
                row,
            }
        })
        .collect();
    out.sort_by(|a, b| a.element.cmp(&b.element));
    debug_assert!(n == 0 || out.iter().all(|b| b.row.len() == n - 1));
    out
}

fn on_hyperplane(bond: &Bond, x: &Cochain1) -> bool {
    x.dot(&bond.element) * rat(2) == bond.norm2
}

fn point_from_potential(g: &Multigraph, tail: Vec<Rational>) -> Cochain1 {
    let mut values = vec![Rational::zero()];
    values.extend(tail);
    coboundary(g, &Cochain0 { values }).expect("lengths agree")
}

fn check_total_acyclic(g: &Multigraph, arrows: &[Arrow]) -> Result<()> {
    let mut oriented = vec![false; g.edge_count()];
    for a in arrows {
        if oriented[a.edge] {
            return Err(Error::Invalid(format!("edge {} is oriented twice", a.edge)));
        }
        oriented[a.edge] = true;
    }
    if oriented.iter().any(|o| !o) {
        return Err(Error::PartialOrientation);
    }
    let n = g.vertex_count();
    let mut indegree = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &a in arrows {
        indegree[g.head(a)] += 1;
        out[g.tail(a)].push(g.head(a));
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut visited = 0;
    while let Some(v) = queue.pop_front() {
        visited += 1;
        for &w in &out[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    if visited == n {
        Ok(())
    } else {
        Err(Error::CyclicOrientation)
    }
}

fn vertex_with_bonds(g: &Multigraph, bonds: &[Bond], arrows: &[Arrow]) -> Result<Cochain1> {
    let mut sorted = arrows.to_vec();
    sorted.sort();
    check_total_acyclic(g, &sorted)?;
    let n = g.vertex_count();
    let through: Vec<&Bond> = bonds
        .iter()
        .filter(|b| is_subset(&b.positive, &sorted))
        .collect();
    let a: Vec<Vec<Rational>> = through.iter().map(|b| b.row.clone()).collect();
    let rhs: Vec<Rational> = through.iter().map(|b| b.norm2).collect();
    let (f, r) = solve(&a, &rhs, n - 1).ok_or_else(|| {
        Error::Invalid("facet equations of the orientation are inconsistent".into())
    })?;
    if r != n - 1 {
        return Err(Error::Invalid(
            "facet equations do not determine a point".into(),
        ));
    }
    let x = point_from_potential(g, f);
    if !voronoi_membership(g, &x)? {
        return Err(Error::Invalid(
            "computed vertex lies outside the cell".into(),
        ));
    }
    Ok(x)
}

/// ν^D: the vertex of Vor_F(O) cut out by the bonds whose positive support lies in D.
pub fn face_vertex(g: &Multigraph, arrows: &[Arrow]) -> Result<Cochain1> {
    vertex_with_bonds(g, &bonds_of(g), arrows)
}

/// ν^D for every total acyclic orientation D, keyed by the sorted arrows of D.
pub fn total_orientation_vertices(g: &Multigraph) -> Result<Vec<(Vec<Arrow>, Cochain1)>> {
    let bonds = bonds_of(g);
    enumerate_cac(g)
        .elements
        .into_iter()
        .filter(|d| d.is_total(g))
        .map(|d| {
            let x = vertex_with_bonds(g, &bonds, &d.arrows)?;
            Ok((d.arrows, x))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Face {
    pub cao: CoherentAcyclicOrientation,
    pub bonds_through: Vec<Cochain1>,
    /// Sorted, distinct.
    pub vertices: Vec<Cochain1>,
    pub codim: usize,
}

#[derive(Clone, Debug)]
pub struct FacePoset {
    pub faces: Vec<Face>,
}

impl FacePoset {
    /// Face inclusion.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let big = &self.faces[j].vertices;
        self.faces[i]
            .vertices
            .iter()
            .all(|v| big.binary_search(v).is_ok())
    }

    /// Pairs (i, j) with face i a facet of face j.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.faces.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j && self.leq(i, j) && self.faces[i].codim == self.faces[j].codim + 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// One face per coherent acyclic orientation D, spanned by the vertices ν^{D'}
/// of the total acyclic orientations D' ⊇ D.
pub fn face_poset(g: &Multigraph) -> Result<FacePoset> {
    let bonds = bonds_of(g);
    let cac = enumerate_cac(g);
    let mut totals: Vec<(&CoherentAcyclicOrientation, Cochain1)> = Vec::new();
    for d in cac.elements.iter().filter(|d| d.is_total(g)) {
        totals.push((d, vertex_with_bonds(g, &bonds, &d.arrows)?));
    }
    let faces = cac
        .elements
        .iter()
        .map(|d| {
            let mut vertices: Vec<Cochain1> = totals
                .iter()
                .filter(|(t, _)| is_subset(&d.arrows, &t.arrows))
                .map(|(_, x)| x.clone())
                .collect();
            vertices.sort();
            vertices.dedup();
            Face {
                cao: d.clone(),
                bonds_through: bonds
                    .iter()
                    .filter(|b| is_subset(&b.positive, &d.arrows))
                    .map(|b| b.element.clone())
                    .collect(),
                vertices,
                codim: d.codim(g),
            }
        })
        .collect();
    Ok(FacePoset { faces })
}

/// The face lattice of Vor_F(O) computed from its H-description alone.
#[derive(Clone, Debug)]
pub struct GeometricFaces {
    pub vertices: Vec<Cochain1>,
    /// Each face as a sorted list of vertex indices; the full cell included.
    pub faces: Vec<Vec<usize>>,
    pub dims: Vec<usize>,
}

pub(crate) fn affine_dim(points: &[&Cochain1]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| (*p - points[0]).values)
        .collect();
    rank(&rows)
}

fn combinations(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, k, n, cur, out);
            cur.pop();
        }
    }
    rec(0, k, n, &mut cur, &mut out);
    out
}

/// Vertices as intersections of n−1 bond hyperplanes lying in the cell; faces as
/// intersections of facet vertex sets.
pub fn geometric_face_lattice(g: &Multigraph) -> Result<GeometricFaces> {
    let n = g.vertex_count();
    let bonds = bonds_of(g);
    let mut vertex_set: BTreeSet<Cochain1> = BTreeSet::new();
    if n == 1 {
        vertex_set.insert(Cochain1::zeros(g.edge_count()));
    }
    for combo in combinations(n.saturating_sub(1), bonds.len()) {
        if n == 1 {
            break;
        }
        let a: Vec<Vec<Rational>> = combo.iter().map(|&i| bonds[i].row.clone()).collect();
        let b: Vec<Rational> = combo.iter().map(|&i| bonds[i].norm2).collect();
        if let Some((f, r)) = solve(&a, &b, n - 1) {
            if r == n - 1 {
                let x = point_from_potential(g, f);
                if voronoi_membership(g, &x)? {
                    vertex_set.insert(x);
                }
            }
        }
    }
    let vertices: Vec<Cochain1> = vertex_set.into_iter().collect();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for bond in &bonds {
        let on: Vec<usize> = (0..vertices.len())
            .filter(|&i| on_hyperplane(bond, &vertices[i]))
            .collect();
        if !on.is_empty() {
            faces.insert(on);
        }
    }
    loop {
        let current: Vec<Vec<usize>> = faces.iter().cloned().collect();
        let mut added = false;
        for i in 0..current.len() {
            for j in i + 1..current.len() {
                let meet: Vec<usize> = current[i]
                    .iter()
                    .copied()
                    .filter(|x| current[j].binary_search(x).is_ok())
                    .collect();
                if !meet.is_empty() && faces.insert(meet) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    faces.insert((0..vertices.len()).collect());
    let faces: Vec<Vec<usize>> = faces.into_iter().collect();
    let dims = faces
        .iter()
        .map(|f| affine_dim(&f.iter().map(|&i| &vertices[i]).collect::<Vec<_>>()))
        .collect();
    Ok(GeometricFaces {
        vertices,
        faces,
        dims,
    })
}

/// Whether `map` is a bijection onto 0..size_b that preserves and reflects order.
pub fn is_order_isomorphism(
    map: &[usize],
    size_b: usize,
    leq_a: impl Fn(usize, usize) -> bool,
    leq_b: impl Fn(usize, usize) -> bool,
) -> bool {
    if map.len() != size_b {
        return false;
    }
    let mut hit = vec![false; size_b];
    for &m in map {
        if m >= size_b || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    (0..map.len()).all(|i| (0..map.len()).all(|j| leq_a(i, j) == leq_b(map[i], map[j])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationCorrespondence {
    pub faces: usize,
    pub cac: usize,
    pub isomorphic: bool,
    /// Number of faces of each dimension, starting with vertices.
    pub f_vector: Vec<usize>,
    /// Facets are exactly the bond hyperplane sections.
    pub facets_match_bonds: bool,
    /// The orientation-indexed face poset agrees with the geometric faces.
    pub face_poset_matches: bool,
}

impl OrientationCorrespondence {
    pub fn passed(&self) -> bool {
        self.isomorphic && self.facets_match_bonds && self.face_poset_matches
    }
}

/// Compares the hull-derived face lattice with CAC(G) through
/// φ(𝔣) = ∪ supp⁺(β) over the bonds β whose hyperplane contains 𝔣.
pub fn orientation_correspondence(g: &Multigraph) -> Result<OrientationCorrespondence> {
    let n = g.vertex_count();
    let geo = geometric_face_lattice(g)?;
    let bonds = bonds_of(g);
    let cac: CacPoset = enumerate_cac(g);

    let phi: Vec<Vec<Arrow>> = geo
        .faces
        .iter()
        .map(|face| {
            let mut arrows: BTreeSet<Arrow> = BTreeSet::new();
            for b in &bonds {
                if face.iter().all(|&i| on_hyperplane(b, &geo.vertices[i])) {
                    arrows.extend(b.positive.iter().copied());
                }
            }
            arrows.into_iter().collect()
        })
        .collect();
    let map: Option<Vec<usize>> = phi.iter().map(|a| cac.position(a)).collect();
    let subset = |i: usize, j: usize| {
        geo.faces[i]
            .iter()
            .all(|x| geo.faces[j].binary_search(x).is_ok())
    };
    let isomorphic = map
        .as_ref()
        .is_some_and(|m| is_order_isomorphism(m, cac.len(), subset, |a, b| cac.leq(a, b)));

    let mut f_vector = vec![0; n];
    for &d in &geo.dims {
        f_vector[d] += 1;
    }

    let facet_count = geo.dims.iter().filter(|&&d| d + 2 == n).count();
    let facets_match_bonds = n < 2
        || (facet_count == bonds.len()
            && bonds.iter().all(|b| {
                geo.faces
                    .iter()
                    .zip(&phi)
                    .zip(&geo.dims)
                    .any(|((_, p), &d)| d + 2 == n && *p == b.positive)
            }));

    let poset = face_poset(g)?;
    let face_poset_matches = poset.faces.len() == geo.faces.len()
        && poset.faces.iter().all(|face| {
            let Some(k) = phi.iter().position(|p| *p == face.cao.arrows) else {
                return false;
            };
            let points: Vec<&Cochain1> = geo.faces[k].iter().map(|&i| &geo.vertices[i]).collect();
            points.len() == face.vertices.len()
                && points
                    .iter()
                    .all(|p| face.vertices.binary_search(p).is_ok())
                && face.codim + geo.dims[k] + 1 == n
        });

    Ok(OrientationCorrespondence {
        faces: geo.faces.len(),
        cac: cac.len(),
        isomorphic,
        f_vector,
        facets_match_bonds,
        face_poset_matches,
    })
}
