//! Monte Carlo statistics of Poisson-Voronoi and Poisson-Delaunay mosaics
//! on the flat torus, and closed-form counts for hyperplane arrangements.

mod delaunay;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formulas::harmonic_degree;
use crate::rational::{self, qi, Q};

pub use delaunay::{circumsphere, periodic_delaunay, snap, PeriodicTriangulation, TorusVertex, GRID_BITS};

/// Uniform points in the unit torus; the count is Poisson distributed.
#[derive(Clone, Debug)]
pub struct PoissonSample {
    pub points: Vec<[f64; 3]>,
    pub intensity: f64,
    pub seed: u64,
    pub stream: u64,
}

impl PoissonSample {
    /// Draws a sample from the ChaCha8 stream `stream` of `seed`.
    pub fn generate(intensity: f64, seed: u64, stream: u64) -> Result<Self> {
        if intensity.is_nan() || intensity <= 0.0 {
            return Err(Error::NonPositiveParameter("intensity"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let count =
            Poisson::new(intensity).map_err(|_| Error::NonPositiveParameter("intensity"))?.sample(&mut rng) as usize;
        let points = (0..count).map(|_| std::array::from_fn(|_| snap(rng.gen::<f64>()))).collect();
        Ok(PoissonSample { points, intensity, seed, stream })
    }
}

/// Exact averages of a single mosaic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degrees {
    pub n_bar: Q,
    pub v_bar: Q,
    pub f_bar: Q,
    pub h_bar: Q,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Replicate {
    pub stream: u64,
    pub points: usize,
    pub tets: usize,
    pub edges: usize,
    pub faces: usize,
    pub voronoi: Degrees,
    pub delaunay: Degrees,
}

/// Mean and standard error over replicates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub std_err: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DegreeEstimates {
    pub n_bar: Estimate,
    pub v_bar: Estimate,
    pub f_bar: Estimate,
    pub h_bar: Estimate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomStats {
    pub seed: u64,
    pub replicates: Vec<Replicate>,
    pub voronoi: DegreeEstimates,
    pub delaunay: DegreeEstimates,
}

/// Degrees of the Voronoi mosaic of the points and of its dual.
///
/// Voronoi nodes are the circumcentres of the `T` tetrahedra, each of
/// degree 4; a Voronoi cell has one node per incident tetrahedron and one
/// facet per incident Delaunay edge.
pub fn replicate_stats(sample: &PoissonSample) -> Result<Replicate> {
    let t = periodic_delaunay(&sample.points)?;
    let n = qi(sample.points.len() as i64);
    let tets = qi(t.num_tets() as i64);
    let edges = qi(t.num_edges() as i64);
    let per_cell = qi(4) * &tets / &n;
    let voronoi = Degrees {
        n_bar: qi(4),
        h_bar: harmonic_degree(&qi(4), &per_cell)?,
        f_bar: qi(2) * edges / &n,
        v_bar: per_cell.clone(),
    };
    let delaunay = Degrees { h_bar: voronoi.h_bar.clone(), n_bar: per_cell, v_bar: qi(4), f_bar: qi(4) };
    Ok(Replicate {
        stream: sample.stream,
        points: sample.points.len(),
        tets: t.num_tets(),
        edges: t.num_edges(),
        faces: t.num_faces(),
        voronoi,
        delaunay,
    })
}

fn estimate(xs: impl Iterator<Item = f64> + Clone) -> Estimate {
    let k = xs.clone().count() as f64;
    let mean = xs.clone().sum::<f64>() / k;
    let var = if k > 1.0 { xs.map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0) } else { 0.0 };
    Estimate { mean, std_err: (var / k).sqrt() }
}

fn summarize(reps: &[Replicate], pick: impl Fn(&Replicate) -> &Degrees) -> DegreeEstimates {
    let col = |f: fn(&Degrees) -> &Q| estimate(reps.iter().map(|r| rational::to_f64(f(pick(r)))));
    DegreeEstimates {
        n_bar: col(|d| &d.n_bar),
        v_bar: col(|d| &d.v_bar),
        f_bar: col(|d| &d.f_bar),
        h_bar: col(|d| &d.h_bar),
    }
}

/// Runs `reps` independent replicates with intensity `n`; replicate `i`
/// uses stream `i` of `seed`, so results do not depend on scheduling.
pub fn voronoi_delaunay_stats(n: usize, reps: usize, seed: u64) -> Result<RandomStats> {
    if n < 100 {
        return Err(Error::TooFewPoints { need: 100, got: n });
    }
    if reps == 0 {
        return Err(Error::NonPositiveParameter("reps"));
    }
    let replicates = (0..reps as u64)
        .into_par_iter()
        .map(|i| replicate_stats(&PoissonSample::generate(n as f64, seed, i)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(RandomStats {
        seed,
        voronoi: summarize(&replicates, |r| &r.voronoi),
        delaunay: summarize(&replicates, |r| &r.delaunay),
        replicates,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementStats {
    pub planes: u64,
    pub cells: u64,
    pub vertices: u64,
    pub incidences: u64,
    pub n_bar: Q,
    pub v_bar: Q,
    pub h_bar: Q,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Counts for `m` planes in general position in space: every vertex lies
/// on exactly three planes and in eight cells.
pub fn hyperplane_arrangement_stats(m: u64) -> Result<ArrangementStats> {
    if m < 3 {
        return Err(Error::TooFewPlanes(m as usize));
    }
    let vertices = binomial(m, 3);
    let cells = 1 + m + binomial(m, 2) + vertices;
    let incidences = 8 * vertices;
    let n_bar = qi(8);
    let v_bar = Q::new(incidences.into(), cells.into());
    Ok(ArrangementStats {
        planes: m,
        cells,
        vertices,
        incidences,
        h_bar: harmonic_degree(&n_bar, &v_bar)?,
        n_bar,
        v_bar,
    })
}
