//! The eleven Archimedean plane tilings, realized with rational
//! coordinates. Tilings with hexagonal symmetry use an affine image of the
//! triangular lattice, which preserves all incidences.

use std::fmt;
use std::str::FromStr;

use super::subdivide::truncate;
use crate::error::{Error, Result};
use crate::geom::RationalPoint;
use crate::periodic::PeriodicMosaic;
use crate::rational::q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlanarTilingName {
    Triangular,
    Square,
    Hexagonal,
    Trihexagonal,
    SnubSquare,
    ElongatedTriangular,
    TruncatedSquare,
    TruncatedHexagonal,
    Rhombitrihexagonal,
    TruncatedTrihexagonal,
    SnubHexagonal,
}

impl PlanarTilingName {
    pub const ALL: [PlanarTilingName; 11] = [
        PlanarTilingName::Triangular,
        PlanarTilingName::Square,
        PlanarTilingName::Hexagonal,
        PlanarTilingName::Trihexagonal,
        PlanarTilingName::SnubSquare,
        PlanarTilingName::ElongatedTriangular,
        PlanarTilingName::TruncatedSquare,
        PlanarTilingName::TruncatedHexagonal,
        PlanarTilingName::Rhombitrihexagonal,
        PlanarTilingName::TruncatedTrihexagonal,
        PlanarTilingName::SnubHexagonal,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PlanarTilingName::Triangular => "triangular",
            PlanarTilingName::Square => "square",
            PlanarTilingName::Hexagonal => "hexagonal",
            PlanarTilingName::Trihexagonal => "trihexagonal",
            PlanarTilingName::SnubSquare => "snub_square",
            PlanarTilingName::ElongatedTriangular => "elongated_triangular",
            PlanarTilingName::TruncatedSquare => "truncated_square",
            PlanarTilingName::TruncatedHexagonal => "truncated_hexagonal",
            PlanarTilingName::Rhombitrihexagonal => "rhombitrihexagonal",
            PlanarTilingName::TruncatedTrihexagonal => "truncated_trihexagonal",
            PlanarTilingName::SnubHexagonal => "snub_hexagonal",
        }
    }
}

impl fmt::Display for PlanarTilingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PlanarTilingName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PlanarTilingName::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn p(x: (i64, i64), y: (i64, i64)) -> RationalPoint {
    RationalPoint::from_fracs(&[x, y])
}

fn pi(x: i64, y: i64) -> RationalPoint {
    RationalPoint::from_ints(&[x, y])
}

fn cells(list: &[&[(i64, i64)]]) -> Vec<Vec<RationalPoint>> {
    list.iter().map(|c| c.iter().map(|&(x, y)| pi(x, y)).collect()).collect()
}

fn lattice(a: [i64; 2], b: [i64; 2]) -> Vec<RationalPoint> {
    vec![pi(a[0], a[1]), pi(b[0], b[1])]
}

pub fn planar(name: PlanarTilingName) -> Result<PeriodicMosaic> {
    use PlanarTilingName::*;
    match name {
        Triangular => PeriodicMosaic::from_cartesian(
            lattice([1, 0], [0, 1]),
            cells(&[&[(0, 0), (1, 0), (0, 1)], &[(1, 0), (1, 1), (0, 1)]]),
        ),
        Square => PeriodicMosaic::from_cartesian(lattice([1, 0], [0, 1]), cells(&[&[(0, 0), (1, 0), (1, 1), (0, 1)]])),
        Hexagonal => {
            // Centroids of the six triangles of the triangular tiling around the origin.
            let hex = vec![
                p((1, 3), (1, 3)),
                p((-1, 3), (2, 3)),
                p((-2, 3), (1, 3)),
                p((-1, 3), (-1, 3)),
                p((1, 3), (-2, 3)),
                p((2, 3), (-1, 3)),
            ];
            PeriodicMosaic::from_cartesian(lattice([1, 0], [0, 1]), vec![hex])
        }
        Trihexagonal => PeriodicMosaic::from_cartesian(
            lattice([2, 0], [0, 2]),
            cells(&[
                &[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
                &[(1, 0), (0, 1), (1, 1)],
                &[(1, 0), (1, -1), (2, -1)],
            ]),
        ),
        SnubSquare => {
            let rot = |v: &RationalPoint| {
                let c = v.coords();
                RationalPoint::new(vec![-c[1].clone(), c[0].clone()])
            };
            let a0 = p((3, 4), (1, 4));
            let q0 = p((1, 4), (5, 4));
            let mut a = vec![a0];
            let mut qs = vec![q0];
            for k in 1..4 {
                a.push(rot(&a[k - 1]));
                qs.push(rot(&qs[k - 1]));
            }
            let b = vec![p((5, 4), (7, 4)), p((1, 4), (5, 4)), p((3, 4), (1, 4)), p((7, 4), (3, 4))];
            let mut cs = vec![a.clone(), b];
            for k in 0..4 {
                cs.push(vec![a[k].clone(), a[(k + 1) % 4].clone(), qs[k].clone()]);
            }
            PeriodicMosaic::from_cartesian(lattice([2, 0], [0, 2]), cs)
        }
        ElongatedTriangular => PeriodicMosaic::from_cartesian(
            vec![pi(1, 0), p((1, 2), (2, 1))],
            vec![
                vec![pi(0, 0), pi(1, 0), pi(1, 1), pi(0, 1)],
                vec![pi(0, 1), pi(1, 1), p((1, 2), (2, 1))],
                vec![pi(1, 1), p((3, 2), (2, 1)), p((1, 2), (2, 1))],
            ],
        ),
        TruncatedSquare => truncate(&planar(Square)?, &q(1, 4)),
        TruncatedHexagonal => truncate(&planar(Hexagonal)?, &q(1, 4)),
        Rhombitrihexagonal => truncate(&planar(Trihexagonal)?, &q(1, 2)),
        TruncatedTrihexagonal => truncate(&planar(Trihexagonal)?, &q(1, 4)),
        SnubHexagonal => snub_hexagonal(),
    }
}

/// Triangular tiling with one point out of seven removed; the six triangles
/// around each removed point merge into a hexagon.
fn snub_hexagonal() -> Result<PeriodicMosaic> {
    let lat = lattice([2, 1], [-1, 3]);
    // (x, y) lies on the removed sublattice iff it is an integer
    // combination of (2, 1) and (-1, 3): 3x + y = 0 and -x + 2y = 0 mod 7.
    let removed = |x: i64, y: i64| (3 * x + y).rem_euclid(7) == 0 && (2 * y - x).rem_euclid(7) == 0;
    let mut cs = vec![cells(&[&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]]).remove(0)];
    for k in 0..7 {
        for tri in [[(k, 0), (k + 1, 0), (k, 1)], [(k + 1, 0), (k + 1, 1), (k, 1)]] {
            if tri.iter().all(|&(x, y)| !removed(x, y)) {
                cs.push(tri.iter().map(|&(x, y)| pi(x, y)).collect());
            }
        }
    }
    PeriodicMosaic::from_cartesian(lat, cs)
}
