//! Lattice-periodic mosaics described by one cell per translation orbit.
//!
//! Every average over the infinite mosaic equals the corresponding ratio of
//! counts over one fundamental domain, so all statistics here are exact.

mod io;
mod lattice;
mod nij;
mod stats;
mod topology;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use lattice::Lattice;
pub use nij::{dual_nij, measure_nij, nij_from_params, NijMatrix};
pub use stats::{AngleAverages, MosaicStats, WindowStats};

use crate::error::{Error, Result};
use crate::geom::exact::{self, IPoint};
use crate::geom::sat::{self, Contact, IntCell};
use crate::geom::{ConvexPolytope, RationalPoint};
use crate::rational::{self, Q};
use topology::Topology;

/// A cell vertex: vertex orbit `v` translated by `shift` lattice steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexRef {
    pub v: usize,
    pub shift: [i64; 3],
}

impl VertexRef {
    pub fn new(v: usize, shift: [i64; 3]) -> Self {
        VertexRef { v, shift }
    }

    fn moved(&self, by: &[i64; 3]) -> Self {
        VertexRef { v: self.v, shift: [self.shift[0] + by[0], self.shift[1] + by[1], self.shift[2] + by[2]] }
    }
}

#[derive(Clone, Debug)]
pub struct PeriodicMosaic {
    lattice: Lattice,
    /// Fractional lattice coordinates in `[0, 1)^d`.
    vertices: Vec<Vec<Q>>,
    cells: Vec<Vec<VertexRef>>,
    polys: Vec<ConvexPolytope>,
    face_to_face: bool,
    topology: OnceLock<Topology>,
}

impl PeriodicMosaic {
    /// Builds a mosaic from Cartesian cells, one per orbit. Cells are
    /// replaced by their hulls and moved so that their vertex centroid lies
    /// in the half-open unit cell of lattice coordinates.
    pub fn from_cartesian(lattice: Vec<RationalPoint>, cells: Vec<Vec<RationalPoint>>) -> Result<Self> {
        let lattice = Lattice::new(lattice)?;
        let d = lattice.dim();
        let mut index: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
        let mut vertices: Vec<Vec<Q>> = Vec::new();
        let mut refs: Vec<Vec<VertexRef>> = Vec::with_capacity(cells.len());
        for pts in &cells {
            let poly = ConvexPolytope::hull(pts)?;
            let mus: Vec<Vec<Q>> = poly.vertices().iter().map(|p| lattice.to_lattice(p)).collect();
            let n = Q::from_integer(mus.len().into());
            let base: Vec<BigInt> =
                (0..d).map(|k| rational::floor(&(mus.iter().fold(Q::zero(), |s, m| s + &m[k]) / &n))).collect();
            let cell = mus
                .iter()
                .map(|m| {
                    let frac: Vec<Q> = m.iter().map(rational::fract).collect();
                    let mut shift = [0i64; 3];
                    for k in 0..d {
                        let s = rational::floor(&m[k]) - &base[k];
                        shift[k] = i64::try_from(s).map_err(|_| Error::CoordinateOverflow)?;
                    }
                    let next = vertices.len();
                    let v = *index.entry(frac.clone()).or_insert(next);
                    if v == next {
                        vertices.push(frac);
                    }
                    Ok(VertexRef { v, shift })
                })
                .collect::<Result<Vec<_>>>()?;
            refs.push(cell);
        }
        Self::assemble(lattice, vertices, refs, None)
    }

    /// Builds a mosaic from orbit data verbatim. With `declared` set, the
    /// measured face-to-face property must agree with it.
    pub fn from_parts(
        lattice: Vec<RationalPoint>,
        vertices: Vec<Vec<Q>>,
        cells: Vec<Vec<VertexRef>>,
        declared_face_to_face: Option<bool>,
    ) -> Result<Self> {
        Self::assemble(Lattice::new(lattice)?, vertices, cells, declared_face_to_face)
    }

    fn assemble(
        lattice: Lattice,
        vertices: Vec<Vec<Q>>,
        cells: Vec<Vec<VertexRef>>,
        declared: Option<bool>,
    ) -> Result<Self> {
        let d = lattice.dim();
        for f in &vertices {
            if f.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: f.len() });
            }
            if f.iter().any(|x| x < &Q::zero() || x >= &Q::from_integer(1.into())) {
                return Err(Error::InvalidTiling("fractional coordinate outside [0, 1)".into()));
            }
        }
        if cells.is_empty() {
            return Err(Error::InvalidTiling("no cells".into()));
        }
        let mut seen = std::collections::HashSet::new();
        let mut polys = Vec::with_capacity(cells.len());
        for (c, cell) in cells.iter().enumerate() {
            if cell.iter().any(|r| r.v >= vertices.len() || r.shift[d..].iter().any(|&s| s != 0)) {
                return Err(Error::InvalidTiling(format!("cell {c} references a missing vertex")));
            }
            let key = topology::canonical(cell);
            if !seen.insert(key) {
                return Err(Error::InvalidTiling(format!("cell {c} repeats an orbit")));
            }
            let pts: Vec<RationalPoint> = cell.iter().map(|r| cartesian(&lattice, &vertices, r)).collect();
            let (poly, idx) = ConvexPolytope::hull_indexed(&pts)?;
            if idx.len() != pts.len() {
                return Err(Error::InvalidTiling(format!("cell {c} lists a non-extreme vertex")));
            }
            polys.push(poly);
        }
        let total: Q = polys.iter().map(ConvexPolytope::volume).sum();
        if total != lattice.covolume() {
            return Err(Error::InvalidTiling(format!(
                "cell volumes sum to {} per period, lattice covolume is {}",
                rational::display(&total),
                rational::display(&lattice.covolume())
            )));
        }
        let mut m = PeriodicMosaic { lattice, vertices, cells, polys, face_to_face: true, topology: OnceLock::new() };
        let ftf = m.check_contacts()?;
        if let Some(flag) = declared {
            if flag != ftf {
                return Err(Error::InvalidTiling(format!("declared face_to_face = {flag}, measured {ftf}")));
            }
        }
        m.face_to_face = ftf;
        Ok(m)
    }

    /// Checks every pair of translated cells whose bounding boxes meet;
    /// returns whether all contacts are face-to-face.
    ///
    /// Translates of each cell that can reach the base copies are swept in
    /// order of their lowest x coordinate, so each base cell only visits
    /// images within one cell width of it.
    fn check_contacts(&self) -> Result<bool> {
        let d = self.dim();
        let (_, icells, lats) = self.int_cells()?;
        let to_i64 = |x: BigInt| i64::try_from(x).map_err(|_| Error::CoordinateOverflow);
        // integer hull of each cell's range in lattice coordinates
        let bounds: Vec<(Vec<i64>, Vec<i64>)> = self
            .cells
            .iter()
            .map(|cell| {
                let mus: Vec<Vec<Q>> = cell.iter().map(|r| self.lattice_coords(r)).collect();
                let lo = (0..d)
                    .map(|k| to_i64(mus.iter().map(|m| m[k].floor().to_integer()).min().unwrap()))
                    .collect::<Result<_>>()?;
                let hi = (0..d)
                    .map(|k| to_i64(mus.iter().map(|m| m[k].ceil().to_integer()).max().unwrap()))
                    .collect::<Result<_>>()?;
                Ok((lo, hi))
            })
            .collect::<Result<_>>()?;
        let all_lo: Vec<i64> = (0..d).map(|k| bounds.iter().map(|b| b.0[k]).min().unwrap()).collect();
        let all_hi: Vec<i64> = (0..d).map(|k| bounds.iter().map(|b| b.1[k]).max().unwrap()).collect();

        struct Image {
            cell: usize,
            shift: [i64; 3],
            off: IPoint,
            lo: IPoint,
            hi: IPoint,
        }
        let mut images = Vec::new();
        for (b, (lo, hi)) in bounds.iter().enumerate() {
            let ranges: Vec<(i64, i64)> = (0..d).map(|k| (all_lo[k] - hi[k], all_hi[k] - lo[k])).collect();
            for t in shifts(&ranges) {
                let off = lattice_offset(&lats, &t);
                images.push(Image {
                    cell: b,
                    shift: t,
                    lo: exact::add(&icells[b].lo, &off),
                    hi: exact::add(&icells[b].hi, &off),
                    off,
                });
            }
        }
        images.sort_by_key(|im| im.lo[0]);
        let width = icells.iter().map(|c| c.hi[0] - c.lo[0]).max().unwrap_or(0);

        let n = self.cells.len();
        let results: Vec<Result<bool>> = (0..n)
            .into_par_iter()
            .map(|a| {
                let base = &icells[a];
                let mut ftf = true;
                let first = images.partition_point(|im| im.lo[0] < base.lo[0] - width);
                for im in images[first..].iter().take_while(|im| im.lo[0] <= base.hi[0]) {
                    if im.cell < a || (im.cell == a && im.shift <= [0, 0, 0]) {
                        continue;
                    }
                    if (0..3).any(|k| base.lo[k] > im.hi[k] || im.lo[k] > base.hi[k]) {
                        continue;
                    }
                    let moved = icells[im.cell].translated(&im.off)?;
                    match sat::contact(base, &moved) {
                        Contact::Overlap => return Err(Error::OverlappingCells(a, im.cell)),
                        Contact::Touching { face_to_face: false } => ftf = false,
                        _ => {}
                    }
                }
                Ok(ftf)
            })
            .collect();
        let mut all = true;
        for r in results {
            all &= r?;
        }
        Ok(all)
    }

    /// Integer images of all cells and lattice vectors on a shared scale.
    pub(crate) fn int_cells(&self) -> Result<(BigInt, Vec<IntCell>, Vec<IPoint>)> {
        let scale = rational::lcm_denominators(
            self.polys.iter().flat_map(|p| p.vertices()).chain(self.lattice.rows()).flat_map(|p| p.coords()),
        );
        let icells = self.polys.iter().map(|p| IntCell::new(p, &scale)).collect::<Result<Vec<_>>>()?;
        let lats = self.lattice.rows().iter().map(|r| exact::to_int(r, &scale)).collect::<Result<Vec<_>>>()?;
        Ok((scale, icells, lats))
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.vertices
    }

    pub fn cells(&self) -> &[Vec<VertexRef>] {
        &self.cells
    }

    /// Representative cells as polytopes; vertex `i` of polytope `c` is
    /// `cells()[c][i]`.
    pub fn polytopes(&self) -> &[ConvexPolytope] {
        &self.polys
    }

    pub fn face_to_face(&self) -> bool {
        self.face_to_face
    }

    pub fn lattice_coords(&self, r: &VertexRef) -> Vec<Q> {
        self.vertices[r.v].iter().zip(r.shift).map(|(f, s)| f + Q::from_integer(s.into())).collect()
    }

    pub fn cartesian(&self, r: &VertexRef) -> RationalPoint {
        cartesian(&self.lattice, &self.vertices, r)
    }

    /// All cells translated by every shift in `[0, n)^d`.
    pub fn patch(&self, n: i64) -> Vec<ConvexPolytope> {
        let d = self.dim();
        let ranges = vec![(0, n - 1); d];
        let mut out = Vec::new();
        for t in shifts(&ranges) {
            let off = self.lattice.translation(&t[..d]);
            out.extend(self.polys.iter().map(|p| p.translate(&off)));
        }
        out
    }

    pub(crate) fn topology(&self) -> &Topology {
        self.topology.get_or_init(|| Topology::new(self))
    }
}

fn cartesian(lattice: &Lattice, vertices: &[Vec<Q>], r: &VertexRef) -> RationalPoint {
    let mu: Vec<Q> = vertices[r.v].iter().zip(r.shift).map(|(f, s)| f + Q::from_integer(s.into())).collect();
    lattice.to_cartesian(&mu)
}

fn lattice_offset(lats: &[IPoint], t: &[i64; 3]) -> IPoint {
    let mut off = [0i128; 3];
    for (l, &s) in lats.iter().zip(t) {
        for k in 0..3 {
            off[k] += l[k] * s as i128;
        }
    }
    off
}

/// Every integer shift in the given per-axis inclusive ranges, padded to 3.
pub(crate) fn shifts(ranges: &[(i64, i64)]) -> Vec<[i64; 3]> {
    let mut out = vec![[0i64; 3]];
    for (k, &(lo, hi)) in ranges.iter().enumerate() {
        out = out
            .into_iter()
            .flat_map(|t| {
                (lo..=hi).map(move |s| {
                    let mut u = t;
                    u[k] = s;
                    u
                })
            })
            .collect();
    }
    out
}

impl PeriodicMosaic {
    /// Canonical vertex pairs naming each edge orbit.
    pub fn edge_orbits(&self) -> &[Vec<VertexRef>] {
        &self.topology().orbits[1]
    }
}
