use std::collections::HashMap;

use super::{PeriodicMosaic, VertexRef};

/// A face orbit, named by its vertex set translated to a canonical
/// position.
pub(crate) type FaceKey = Vec<VertexRef>;

/// Smallest sorted translate of `face` among those putting one of its
/// vertices at shift zero.
pub(crate) fn canonical(face: &[VertexRef]) -> FaceKey {
    let mut best: Option<FaceKey> = None;
    for e in face {
        let back = [-e.shift[0], -e.shift[1], -e.shift[2]];
        let mut key: FaceKey = face.iter().map(|x| x.moved(&back)).collect();
        key.sort_unstable();
        if best.as_ref().is_none_or(|b| &key < b) {
            best = Some(key);
        }
    }
    best.expect("faces are non-empty")
}

/// Orbits of `k`-faces for `k < d` and, per cell, the orbit of each of its
/// faces.
#[derive(Clone, Debug)]
pub(crate) struct Topology {
    pub orbits: Vec<Vec<FaceKey>>,
    pub cell_faces: Vec<Vec<Vec<usize>>>,
}

impl Topology {
    pub fn new(m: &PeriodicMosaic) -> Self {
        let d = m.dim();
        let mut orbits: Vec<Vec<FaceKey>> = vec![Vec::new(); d];
        let mut ids: Vec<HashMap<FaceKey, usize>> = vec![HashMap::new(); d];
        let mut cell_faces = Vec::with_capacity(m.cells().len());
        for (poly, refs) in m.polytopes().iter().zip(m.cells()) {
            let mut per_k = Vec::with_capacity(d);
            for k in 0..d {
                let faces = poly.faces(k);
                let mut list = Vec::with_capacity(faces.len());
                for face in faces {
                    let set: Vec<VertexRef> = face.iter().map(|&i| refs[i]).collect();
                    let key = canonical(&set);
                    let next = orbits[k].len();
                    let id = *ids[k].entry(key.clone()).or_insert(next);
                    if id == next {
                        orbits[k].push(key);
                    }
                    list.push(id);
                }
                per_k.push(list);
            }
            cell_faces.push(per_k);
        }
        Topology { orbits, cell_faces }
    }
}
