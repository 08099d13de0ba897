//! The Voronoi cell of the origin in the cut lattice.

mod cac;
mod cuts;
mod faces;

pub use cac::{
    enumerate_cac, ordered_partitions, CacPoset, CoherentAcyclicOrientation, OrientedEdgeSet,
};
pub use cuts::{
    bond_decomposition, cells_intersect, cut_element, enumerate_bond_sides, enumerate_bonds,
    is_generalized_cut_element, GeneralizedCut,
};
pub use faces::{
    face_poset, face_vertex, geometric_face_lattice, is_order_isomorphism,
    orientation_correspondence, total_orientation_vertices, Face, FacePoset, GeometricFaces,
    OrientationCorrespondence,
};

use num_traits::Signed;

use crate::cochain::{adjoint, Cochain0, Cochain1};
use crate::error::{Error, Result};
use crate::graph::{proper_subsets, Multigraph};
use crate::lattice::is_in_cut_space;
use crate::rational::{rat, Rational};

/// η ∈ Vor_F(O): for every cut, |Σ η over the arrows leaving S| ≤ ½·#crossing edges.
pub fn voronoi_membership(g: &Multigraph, eta: &Cochain1) -> Result<bool> {
    if !is_in_cut_space(g, eta)? {
        return Err(Error::NotInCutSpace);
    }
    let p = adjoint(g, eta)?;
    Ok(cut_inequalities(g, None, &p, false))
}

/// Cut inequalities in H_0 for a point p = d*(η): |p(S)| ≤ ½ c(S) for every
/// nonempty proper S, where c(S) counts crossing edges of the selected subgraph.
/// With `strict`, every inequality must be strict.
pub fn cut_inequalities(
    g: &Multigraph,
    edge_mask: Option<&[bool]>,
    p: &Cochain0,
    strict: bool,
) -> bool {
    let n = g.vertex_count();
    proper_subsets(n).all(|s| {
        let crossing = g.boundary_arrows(&s, edge_mask).count() as i64;
        let lhs = p.sum_over(&s).abs() * rat(2);
        let rhs = Rational::from_integer(crossing as i128);
        if strict {
            lhs < rhs
        } else {
            lhs <= rhs
        }
    })
}
