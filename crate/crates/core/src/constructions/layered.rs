//! Mixing cubic and barycentrically subdivided cubic layers to reach any
//! harmonic degree between 24/7 and 4, and partial dual-foam division
//! below 24/7.
//!
//! Layers are slabs of unit thickness, counted per unit square of the
//! horizontal cross-section:
//!
//! | layer                        | cells | incidences | facets | edges | inner nodes |
//! |------------------------------|-------|------------|--------|-------|-------------|
//! | cubic                        | 1     | 8          | 6      | 12    | 0           |
//! | subdivided                   | 48    | 192        | 192    | 288   | 4           |
//! | partial (one face left bare) | 37    | 149        | 149    | 224   | 4           |
//!
//! A plane between layers carries 1 node if it is left bare and 4 nodes if
//! it is subdivided. The strip `S(k, l)` stacks `k` cubic layers, a
//! reflected partial layer, `l` subdivided layers and a partial layer; it
//! has `k + 1` bare and `l + 1` subdivided planes.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::{foam_map, harmonic_degree};
use crate::rational::{self, q, qi, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LayerRecipe {
    /// Limit of strips with `k / (k + l) -> lambda`.
    Ratio(Q),
    /// A finite nested stack: one copy of the first strip and two copies of
    /// each later one.
    Strips(Vec<(u64, u64)>),
}

/// Exact degree averages of a layered mosaic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixStats {
    pub n_bar: Q,
    pub v_bar: Q,
    pub f_bar: Q,
    pub e_bar: Q,
    pub h_bar: Q,
}

/// Per-period totals `(cells, incidences, nodes, facet total, edge total)`
/// as affine functions `c0 + ck k + cl l`.
const COUNTS: [[i64; 3]; 5] = [
    // cells: k + 2*37 + 48 l
    [74, 1, 48],
    // incidences: 8k + 2*149 + 192 l
    [298, 8, 192],
    // nodes: (k+1) + 4(l+1) + 2*4 + 4l
    [13, 1, 8],
    // facets summed over cells
    [298, 6, 192],
    // edges summed over cells
    [448, 12, 288],
];

fn finish(t: [Q; 5]) -> MixStats {
    let [c, i, n, f, e] = t;
    let n_bar = &i / &n;
    let v_bar = &i / &c;
    MixStats {
        h_bar: harmonic_degree(&n_bar, &v_bar).expect("positive counts"),
        f_bar: f / &c,
        e_bar: e / &c,
        n_bar,
        v_bar,
    }
}

/// Exact statistics of the strip `S(k, l)` repeated periodically.
pub fn strip_stats(k: u64, l: u64) -> MixStats {
    finish(strip_totals(k, l))
}

fn strip_totals(k: u64, l: u64) -> [Q; 5] {
    COUNTS.map(|[c0, ck, cl]| qi(c0 + ck * k as i64 + cl * l as i64))
}

pub fn layered_mix(recipe: &LayerRecipe) -> Result<MixStats> {
    match recipe {
        LayerRecipe::Ratio(lambda) => {
            if lambda < &Q::zero() || lambda > &Q::one() {
                return Err(Error::InvalidRatio(rational::display(lambda)));
            }
            let mu = Q::one() - lambda;
            Ok(finish(COUNTS.map(|[_, ck, cl]| qi(ck) * lambda + qi(cl) * &mu)))
        }
        LayerRecipe::Strips(seq) => {
            if seq.is_empty() || seq.iter().any(|&(k, l)| k == 0 || l == 0) {
                return Err(Error::InvalidRatio("strip sizes must be positive".into()));
            }
            let mut tot: [Q; 5] = std::array::from_fn(|_| Q::zero());
            for (m, &(k, l)) in seq.iter().enumerate() {
                let w = qi(if m == 0 { 1 } else { 2 });
                for (acc, x) in tot.iter_mut().zip(strip_totals(k, l)) {
                    *acc += &w * x;
                }
            }
            Ok(finish(tot))
        }
    }
}

/// Limiting harmonic degree of the layered mix: `(192 - 184 l)/(56 - 54 l)`.
pub fn mix_h(lambda: &Q) -> Q {
    (qi(192) - qi(184) * lambda) / (qi(56) - qi(54) * lambda)
}

/// How to realize a target harmonic degree in `(3, 4]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HarmonicPlan {
    /// Layered mix with cubic fraction `lambda` (targets `>= 24/7`).
    Layered { lambda: Q },
    /// Apply `k` dual-foam steps to the subdivided cubic mosaic, then split
    /// a fraction `sigma` of the cells once more.
    PartialDivision { k: usize, sigma: Q, n_k: Q },
}

impl HarmonicPlan {
    /// Harmonic degree produced by the plan.
    pub fn h_bar(&self) -> Q {
        match self {
            HarmonicPlan::Layered { lambda } => mix_h(lambda),
            HarmonicPlan::PartialDivision { sigma, n_k, .. } => partial_division_h(n_k, sigma),
        }
    }
}

/// Harmonic degree after splitting a fraction `sigma` of the tetrahedra of
/// a simplicial mosaic with node degree `n` into four: per original cell
/// there are `1 + 3 sigma` cells, `4 (1 + 3 sigma)` incidences and
/// `4/n + sigma` nodes.
pub fn partial_division_h(n: &Q, sigma: &Q) -> Q {
    let cells = Q::one() + qi(3) * sigma;
    let nodes = qi(4) / n + sigma;
    qi(4) * &cells / (&cells + nodes)
}

/// Finds a construction with harmonic degree exactly `h_star` in `d = 3`.
pub fn harmonic_target(h_star: &Q, d: u32) -> Result<HarmonicPlan> {
    if d != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: d as usize });
    }
    if h_star <= &qi(3) || h_star > &qi(4) {
        return Err(Error::OutOfRange(rational::display(h_star)));
    }
    let h_prime = q(24, 7);
    if h_star >= &h_prime {
        let lambda = (qi(192) - qi(56) * h_star) / (qi(184) - qi(54) * h_star);
        return Ok(HarmonicPlan::Layered { lambda });
    }
    let h_of = |n: &Q| qi(4) * n / (qi(4) + n);
    let mut n_k = qi(24);
    let mut k = 0;
    loop {
        let next = foam_map(&n_k, 3);
        if &h_of(&next) <= h_star {
            let sigma = (h_star * (Q::one() + qi(4) / &n_k) - qi(4)) / (qi(12) - qi(4) * h_star);
            return Ok(HarmonicPlan::PartialDivision { k, sigma, n_k });
        }
        n_k = next;
        k += 1;
    }
}
