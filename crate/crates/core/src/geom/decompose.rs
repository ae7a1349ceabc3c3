use super::polytope::ConvexPolytope;
use crate::error::{Error, Result};

/// Splits a 3D polytope into tetrahedra by coning from vertex 0.
///
/// Facets through the apex contribute nothing; every other facet is fanned
/// from its first vertex. With `v` vertices this yields at most `2v - 7`
/// tetrahedra. Each tetrahedron is returned as four vertex indices.
pub fn tetrahedral_decomposition(p: &ConvexPolytope) -> Result<Vec<[usize; 4]>> {
    if p.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: p.dim() });
    }
    let apex = 0;
    let mut out = Vec::new();
    for f in p.facets() {
        if f.contains(&apex) {
            continue;
        }
        for i in 1..f.len() - 1 {
            out.push([apex, f[0], f[i], f[i + 1]]);
        }
    }
    Ok(out)
}
