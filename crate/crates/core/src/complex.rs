//! Finite polytopal complexes assembled from explicit cells.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::geom::sat::{self, Contact, IntCell};
use crate::geom::{normality_radii, ConvexPolytope, RationalPoint};
use crate::rational;

/// Cells plus every shared lower-dimensional face, identified by the exact
/// set of nodes it spans.
#[derive(Clone, Debug)]
pub struct CellComplex {
    dim: usize,
    nodes: Vec<RationalPoint>,
    /// `elements[k][i]`: sorted node ids of the `i`-th `k`-face; the last
    /// level holds the cells.
    elements: Vec<Vec<Vec<usize>>>,
    /// `by_node[k][n]`: ids of `k`-faces having node `n` as a vertex.
    by_node: Vec<Vec<Vec<usize>>>,
    cells: Vec<ConvexPolytope>,
    cell_nodes: Vec<Vec<usize>>,
    non_face_to_face: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidityReport {
    pub face_to_face: bool,
    pub normal: bool,
    pub r_min: f64,
    pub r_max: f64,
    pub convex: bool,
    pub euler_ok: bool,
}

pub fn assemble(cells: &[ConvexPolytope]) -> Result<CellComplex> {
    CellComplex::assemble(cells)
}

impl CellComplex {
    pub fn assemble(cells: &[ConvexPolytope]) -> Result<Self> {
        let dim = cells.first().ok_or_else(|| Error::DegenerateInput("empty complex".into()))?.dim();
        if let Some(c) = cells.iter().find(|c| c.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: c.dim() });
        }
        let mut node_ids: BTreeMap<RationalPoint, usize> = BTreeMap::new();
        let mut nodes = Vec::new();
        let cell_nodes: Vec<Vec<usize>> = cells
            .iter()
            .map(|c| {
                c.vertices()
                    .iter()
                    .map(|v| {
                        *node_ids.entry(v.clone()).or_insert_with(|| {
                            nodes.push(v.clone());
                            nodes.len() - 1
                        })
                    })
                    .collect()
            })
            .collect();

        let mut elements: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
        let mut seen: Vec<HashMap<Vec<usize>, usize>> = vec![HashMap::new(); dim];
        for (c, map) in cells.iter().zip(&cell_nodes) {
            for k in 0..dim {
                for face in c.faces(k) {
                    let mut key: Vec<usize> = face.iter().map(|&i| map[i]).collect();
                    key.sort_unstable();
                    seen[k].entry(key.clone()).or_insert_with(|| {
                        elements[k].push(key);
                        elements[k].len() - 1
                    });
                }
            }
            let mut all = map.clone();
            all.sort_unstable();
            elements[dim].push(all);
        }
        let mut by_node = vec![vec![Vec::new(); nodes.len()]; dim + 1];
        for (k, level) in elements.iter().enumerate() {
            for (i, face) in level.iter().enumerate() {
                for &n in face {
                    by_node[k][n].push(i);
                }
            }
        }

        let scale = rational::lcm_denominators(nodes.iter().flat_map(|p| p.coords()));
        let icells = cells.iter().map(|c| IntCell::new(c, &scale)).collect::<Result<Vec<_>>>()?;
        let mut non_face_to_face = Vec::new();
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                match sat::contact(&icells[i], &icells[j]) {
                    Contact::Overlap => return Err(Error::OverlappingCells(i, j)),
                    Contact::Touching { face_to_face: false } => non_face_to_face.push((i, j)),
                    _ => {}
                }
            }
        }
        Ok(CellComplex { dim, nodes, elements, by_node, cells: cells.to_vec(), cell_nodes, non_face_to_face })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nodes(&self) -> &[RationalPoint] {
        &self.nodes
    }

    pub fn cells(&self) -> &[ConvexPolytope] {
        &self.cells
    }

    /// Node ids of the vertices of cell `c`, in the cell's vertex order.
    pub fn cell_nodes(&self, c: usize) -> &[usize] {
        &self.cell_nodes[c]
    }

    /// All `k`-faces as sorted node-id sets.
    pub fn elements(&self, k: usize) -> &[Vec<usize>] {
        &self.elements[k]
    }

    /// `[N_0, N_1, ..., N_d]`.
    pub fn counts(&self) -> Vec<usize> {
        self.elements.iter().map(Vec::len).collect()
    }

    pub fn node_id(&self, p: &RationalPoint) -> Option<usize> {
        self.nodes.iter().position(|n| n == p)
    }

    /// Cell pairs whose intersection is not a common face.
    pub fn non_face_to_face_pairs(&self) -> &[(usize, usize)] {
        &self.non_face_to_face
    }

    /// Ids of the `j`-faces incident to `k`-face `i` (contained in it for
    /// `j < k`, containing it for `j > k`).
    pub fn incident(&self, k: usize, i: usize, j: usize) -> Result<Vec<usize>> {
        let face =
            self.elements.get(k).and_then(|l| l.get(i)).ok_or_else(|| Error::NotFound(format!("{k}-face {i}")))?;
        if j > self.dim {
            return Err(Error::NotFound(format!("dimension {j}")));
        }
        let is_sub = |small: &[usize], big: &[usize]| small.iter().all(|x| big.binary_search(x).is_ok());
        let mut candidates: Vec<usize> = if j < k {
            face.iter().flat_map(|&n| self.by_node[j][n].iter().copied()).collect()
        } else {
            self.by_node[j][face[0]].clone()
        };
        candidates.sort_unstable();
        candidates.dedup();
        Ok(candidates
            .into_iter()
            .filter(|&g| {
                let other = &self.elements[j][g];
                match j.cmp(&k) {
                    std::cmp::Ordering::Less => is_sub(other, face),
                    std::cmp::Ordering::Greater => is_sub(face, other),
                    std::cmp::Ordering::Equal => g == i,
                }
            })
            .collect())
    }

    /// Number of cells having `node` as a vertex.
    pub fn node_degree(&self, node: usize) -> Result<usize> {
        self.by_node[self.dim].get(node).map(Vec::len).ok_or_else(|| Error::NotFound(format!("node {node}")))
    }

    pub fn cell_degree(&self, cell: usize) -> Result<usize> {
        self.cell_nodes.get(cell).map(Vec::len).ok_or_else(|| Error::NotFound(format!("cell {cell}")))
    }

    /// Number of cells containing `node`, as a vertex or otherwise.
    pub fn containing_cells(&self, node: usize) -> Result<usize> {
        let p = self.nodes.get(node).ok_or_else(|| Error::NotFound(format!("node {node}")))?;
        Ok(self.cells.iter().filter(|c| c.contains(p)).count())
    }

    /// A node is regular when it is a vertex of every cell containing it.
    pub fn is_regular_node(&self, node: usize) -> Result<bool> {
        Ok(self.containing_cells(node)? == self.node_degree(node)?)
    }

    pub fn validate(&self) -> ValidityReport {
        let radii: Vec<(f64, f64)> = self.cells.iter().map(normality_radii).collect();
        let r_min = radii.iter().map(|r| r.0).fold(f64::INFINITY, f64::min);
        let r_max = radii.iter().map(|r| r.1).fold(0.0, f64::max);
        let convex = self
            .cells
            .iter()
            .all(|c| ConvexPolytope::hull(c.vertices()).is_ok_and(|h| h.num_vertices() == c.num_vertices()));
        ValidityReport {
            face_to_face: self.non_face_to_face.is_empty(),
            normal: r_min > 0.0 && r_min <= r_max,
            r_min,
            r_max,
            convex,
            euler_ok: self.cells.iter().all(ConvexPolytope::euler_ok),
        }
    }
}
