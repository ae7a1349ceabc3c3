use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::{shifts, PeriodicMosaic};
use crate::error::{Error, Result};
use crate::formulas::harmonic_degree;
use crate::geom::{sphere_measure, RationalPoint};
use crate::rational::{self, qi, Q};

/// Exact per-period statistics.
///
/// `f_bar` is the mean number of facets per cell and `e_bar` the mean
/// number of edges per cell (both equal `v_bar` in 2D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MosaicStats {
    pub dim: usize,
    pub n_bar: Q,
    pub v_bar: Q,
    pub f_bar: Q,
    pub e_bar: Q,
    pub h_bar: Q,
    pub cells: usize,
    pub nodes: usize,
    pub facets: usize,
    pub edges: usize,
    pub incidences: usize,
    /// node degree -> number of node orbits with that degree
    pub node_degrees: BTreeMap<usize, usize>,
    /// cell degree -> number of cell orbits with that degree
    pub cell_degrees: BTreeMap<usize, usize>,
}

/// Averages of the internal, external and total angle over all incident
/// (cell, vertex) pairs, plus the per-node and per-cell tiling sums.
#[derive(Clone, Debug)]
pub struct AngleAverages {
    pub internal: f64,
    pub external: f64,
    pub total: f64,
    /// Sum of internal angles around each node orbit.
    pub node_sums: Vec<f64>,
    /// Sum of external angles over the vertices of each cell.
    pub cell_sums: Vec<f64>,
}

/// Counts in a finite Cartesian window, used to cross-check the exact
/// per-period ratios.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowStats {
    pub cells: usize,
    pub nodes: usize,
    pub incidences: usize,
    pub n_bar: Q,
    pub v_bar: Q,
    pub h_bar: Q,
}

impl PeriodicMosaic {
    pub fn stats(&self) -> MosaicStats {
        let t = self.topology();
        let d = self.dim();
        let cells = self.cells().len();
        let nodes = t.orbits[0].len();
        let mut incid = vec![0usize; self.vertices().len()];
        let mut cell_degrees = BTreeMap::new();
        let mut facet_total = 0;
        let mut edge_total = 0;
        for (refs, faces) in self.cells().iter().zip(&t.cell_faces) {
            for r in refs {
                incid[r.v] += 1;
            }
            *cell_degrees.entry(refs.len()).or_insert(0) += 1;
            facet_total += faces[d - 1].len();
            edge_total += faces[1].len();
        }
        let incidences: usize = incid.iter().sum();
        let mut node_degrees = BTreeMap::new();
        for &k in incid.iter().filter(|&&k| k > 0) {
            *node_degrees.entry(k).or_insert(0) += 1;
        }
        let i = qi(incidences as i64);
        let n_bar = &i / qi(nodes as i64);
        let v_bar = &i / qi(cells as i64);
        let h_bar = harmonic_degree(&n_bar, &v_bar).expect("positive degrees");
        MosaicStats {
            dim: d,
            f_bar: qi(facet_total as i64) / qi(cells as i64),
            e_bar: qi(edge_total as i64) / qi(cells as i64),
            n_bar,
            v_bar,
            h_bar,
            cells,
            nodes,
            facets: t.orbits[d - 1].len(),
            edges: t.orbits[1].len(),
            incidences,
            node_degrees,
            cell_degrees,
        }
    }

    pub fn average_total_angle(&self) -> Result<AngleAverages> {
        if !self.face_to_face() {
            return Err(Error::NotFaceToFace);
        }
        let mut node_sums = vec![0.0; self.vertices().len()];
        let mut cell_sums = Vec::with_capacity(self.cells().len());
        let (mut si, mut se, mut count) = (0.0, 0.0, 0usize);
        for (poly, refs) in self.polytopes().iter().zip(self.cells()) {
            let angles = poly.vertex_angles();
            let mut ext = 0.0;
            for ((a_i, a_e), r) in angles.iter().zip(refs) {
                node_sums[r.v] += a_i;
                si += a_i;
                se += a_e;
                ext += a_e;
                count += 1;
            }
            cell_sums.push(ext);
        }
        let used: BTreeSet<usize> = self.cells().iter().flatten().map(|r| r.v).collect();
        let node_sums = used.into_iter().map(|v| node_sums[v]).collect();
        let n = count as f64;
        Ok(AngleAverages { internal: si / n, external: se / n, total: (si + se) / n, node_sums, cell_sums })
    }

    /// Checks `h_bar * Omega_bar = S_{d-1}` to relative tolerance `tol`.
    pub fn total_angle_identity(&self, tol: f64) -> Result<bool> {
        let a = self.average_total_angle()?;
        let h = rational::to_f64(&self.stats().h_bar);
        let s = sphere_measure(self.dim());
        Ok(((h * a.total - s) / s).abs() <= tol)
    }

    /// Fraction of node orbits that are a vertex of every cell containing
    /// them.
    pub fn regular_node_fraction(&self) -> Q {
        let t = self.topology();
        let (scale, icells, lats) = self.int_cells().expect("validated mosaic fits its frame");
        let d = self.dim();
        let incid = {
            let mut v = vec![0usize; self.vertices().len()];
            for r in self.cells().iter().flatten() {
                v[r.v] += 1;
            }
            v
        };
        let mut regular = 0;
        for key in &t.orbits[0] {
            let v = key[0].v;
            let p = crate::geom::exact::to_int(&self.cartesian(&key[0]), &scale).expect("in frame");
            let mut containing = 0;
            for t in shifts(&vec![(-3, 3); d]) {
                let off = super::lattice_offset(&lats, &t);
                for c in &icells {
                    let q = [p[0] - off[0], p[1] - off[1], p[2] - off[2]];
                    if c.planes.iter().all(|(n, k)| n[0] * q[0] + n[1] * q[1] + n[2] * q[2] <= *k) {
                        containing += 1;
                    }
                }
            }
            if containing == incid[v] {
                regular += 1;
            }
        }
        qi(regular) / qi(t.orbits[0].len() as i64)
    }

    /// Cells whose vertex centroid and nodes that lie in the Cartesian cube
    /// `[0, side)^d`; `n_bar` is estimated as incidences of those cells
    /// over those nodes, so boundary effects decay like `1/side`.
    pub fn window_stats(&self, side: &Q) -> WindowStats {
        let d = self.dim();
        let inside = |p: &RationalPoint| p.coords().iter().all(|x| x >= &Q::zero() && x < side);
        let corners: Vec<Vec<Q>> = shifts(&vec![(0, 1); d])
            .into_iter()
            .map(|c| {
                let x =
                    RationalPoint::new(c[..d].iter().map(|&b| if b == 1 { side.clone() } else { Q::zero() }).collect());
                self.lattice().to_lattice(&x)
            })
            .collect();
        let ranges: Vec<(i64, i64)> = (0..d)
            .map(|k| {
                let lo = corners.iter().map(|c| rational::floor(&c[k])).min().unwrap();
                let hi = corners.iter().map(|c| rational::floor(&c[k])).max().unwrap();
                (i64::try_from(lo).unwrap() - 3, i64::try_from(hi).unwrap() + 3)
            })
            .collect();
        let mut cells = 0;
        let mut incidences = 0;
        let mut nodes: BTreeSet<RationalPoint> = BTreeSet::new();
        let centroids: Vec<RationalPoint> = self.polytopes().iter().map(|p| p.vertex_centroid()).collect();
        for t in shifts(&ranges) {
            let off = self.lattice().translation(&t[..d]);
            for (poly, c) in self.polytopes().iter().zip(&centroids) {
                if inside(&(c + &off)) {
                    cells += 1;
                    incidences += poly.num_vertices();
                }
                for v in poly.vertices() {
                    let p = v + &off;
                    if inside(&p) {
                        nodes.insert(p);
                    }
                }
            }
        }
        let n_bar = qi(incidences as i64) / qi(nodes.len() as i64);
        let v_bar = qi(incidences as i64) / qi(cells as i64);
        WindowStats {
            cells,
            nodes: nodes.len(),
            incidences,
            h_bar: harmonic_degree(&n_bar, &v_bar).expect("positive"),
            n_bar,
            v_bar,
        }
    }
}
