//! Three-dimensional honeycombs with rational coordinates.

use crate::error::Result;
use crate::geom::RationalPoint;
use crate::periodic::PeriodicMosaic;
use crate::rational::qi;

fn pi(c: [i64; 3]) -> RationalPoint {
    RationalPoint::from_ints(&c)
}

fn box_cell(lo: [i64; 3], size: [i64; 3]) -> Vec<RationalPoint> {
    (0..8).map(|i| pi(std::array::from_fn(|k| lo[k] + if i >> k & 1 == 1 { size[k] } else { 0 }))).collect()
}

fn diag(s: i64) -> Vec<RationalPoint> {
    vec![pi([s, 0, 0]), pi([0, s, 0]), pi([0, 0, s])]
}

/// Unit cubes, or unit squares for `d = 2`.
pub fn cubic(d: usize) -> Result<PeriodicMosaic> {
    if d == 2 {
        return super::planar(super::PlanarTilingName::Square);
    }
    PeriodicMosaic::from_cartesian(diag(1), vec![box_cell([0, 0, 0], [1, 1, 1])])
}

/// Tetrahedra and octahedra on the face-centred cubic points.
pub fn alternated_cubic() -> Result<PeriodicMosaic> {
    let mut cells = Vec::new();
    for c in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]] {
        let mut oct = Vec::new();
        for k in 0..3 {
            for s in [-1, 1] {
                let mut v = c;
                v[k] += s;
                oct.push(pi(v));
            }
        }
        cells.push(oct);
    }
    for a in 0..8 {
        let lo = [a & 1, a >> 1 & 1, a >> 2 & 1];
        let tet: Vec<RationalPoint> = box_cell(lo, [1, 1, 1])
            .into_iter()
            .filter(|p| p.coords().iter().sum::<crate::rational::Q>() % qi(2) == qi(0))
            .collect();
        cells.push(tet);
    }
    PeriodicMosaic::from_cartesian(diag(2), cells)
}

/// Truncated octahedra on the body-centred cubic lattice.
pub fn bitruncated_cubic() -> Result<PeriodicMosaic> {
    let mut pts = Vec::new();
    for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        for s1 in [-1, 1] {
            for s2 in [-1, 1] {
                // Coordinates in halves: (0, s1/2, s2).
                let vals = [(0, 1), (s1, 2), (s2, 1)];
                let mut c = [(0, 1); 3];
                for k in 0..3 {
                    c[perm[k]] = vals[k];
                }
                pts.push(RationalPoint::from_fracs(&c));
            }
        }
    }
    PeriodicMosaic::from_cartesian(vec![pi([1, 1, 1]), pi([1, 1, -1]), pi([1, -1, 1])], vec![pts])
}

/// Parallelepipeds of a sheared lattice: an affine image of the cubic
/// honeycomb, standing in for a hyperplane arrangement in general position.
pub fn hyperplane_generic() -> Result<PeriodicMosaic> {
    let lat = vec![
        pi([1, 0, 0]),
        RationalPoint::from_fracs(&[(1, 2), (1, 1), (0, 1)]),
        RationalPoint::from_fracs(&[(1, 3), (1, 4), (1, 1)]),
    ];
    let cell = (0..8)
        .map(|i| {
            let mut acc = RationalPoint::origin(3);
            for (k, l) in lat.iter().enumerate() {
                if i >> k & 1 == 1 {
                    acc = &acc + l;
                }
            }
            acc
        })
        .collect();
    PeriodicMosaic::from_cartesian(lat, vec![cell])
}

/// Planar mosaic times the unit interval.
pub fn prism(base: &PeriodicMosaic) -> Result<PeriodicMosaic> {
    let lift = |p: &RationalPoint, z: i64| {
        let mut c = p.coords().to_vec();
        c.push(qi(z));
        RationalPoint::new(c)
    };
    let mut lat: Vec<RationalPoint> = base.lattice().rows().iter().map(|r| lift(r, 0)).collect();
    lat.push(pi([0, 0, 1]));
    let cells = base
        .polytopes()
        .iter()
        .map(|poly| poly.vertices().iter().flat_map(|v| [lift(v, 0), lift(v, 1)]).collect())
        .collect();
    PeriodicMosaic::from_cartesian(lat, cells)
}

/// Running-bond bricks `2 x 1`: alternate rows are offset by one unit, so
/// every node is a vertex of exactly two bricks.
pub fn brick_wall_2d() -> Result<PeriodicMosaic> {
    let r = |x: i64, y: i64, w: i64, h: i64| {
        vec![
            RationalPoint::from_ints(&[x, y]),
            RationalPoint::from_ints(&[x + w, y]),
            RationalPoint::from_ints(&[x + w, y + h]),
            RationalPoint::from_ints(&[x, y + h]),
        ]
    };
    PeriodicMosaic::from_cartesian(
        vec![RationalPoint::from_ints(&[2, 0]), RationalPoint::from_ints(&[0, 2])],
        vec![r(0, 0, 2, 1), r(1, 1, 2, 1)],
    )
}

/// Layers of `2 x 1 x 1` bricks laid as a planar brick wall, with every
/// other layer shifted by half a unit in both horizontal directions so that
/// no node is shared between layers.
pub fn brick_wall_3d() -> Result<PeriodicMosaic> {
    let half = |n: i64| (n, 2);
    let brick = |x: (i64, i64), y: (i64, i64), z: i64| -> Vec<RationalPoint> {
        (0..8)
            .map(|i| {
                let dx = if i & 1 == 1 { 2 * x.1 } else { 0 };
                let dy = if i & 2 == 2 { y.1 } else { 0 };
                let dz = if i & 4 == 4 { 1 } else { 0 };
                RationalPoint::from_fracs(&[(x.0 + dx, x.1), (y.0 + dy, y.1), (z + dz, 1)])
            })
            .collect()
    };
    let cells = vec![
        brick((0, 1), (0, 1), 0),
        brick((1, 1), (1, 1), 0),
        brick(half(1), half(1), 1),
        brick(half(3), half(3), 1),
    ];
    PeriodicMosaic::from_cartesian(diag(2), cells)
}
