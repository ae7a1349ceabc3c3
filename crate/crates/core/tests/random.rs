use std::collections::{BTreeSet, HashMap};

use mosaic_core::geom::FloatPolyhedron;
use mosaic_core::random::{
    circumsphere, hyperplane_arrangement_stats, periodic_delaunay, replicate_stats, voronoi_delaunay_stats,
    PoissonSample,
};
use mosaic_core::rational::{q, qi};
use mosaic_core::Q;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use robust::{insphere, orient3d, Coord3D};

fn c(p: &[f64; 3]) -> Coord3D<f64> {
    Coord3D { x: p[0], y: p[1], z: p[2] }
}

fn perturbed_bcc(cells: usize, seed: u64) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = 1.0 / cells as f64;
    let mut pts = Vec::new();
    for i in 0..cells {
        for j in 0..cells {
            for k in 0..cells {
                for off in [0.0, 0.5] {
                    let base = [i as f64, j as f64, k as f64];
                    pts.push(base.map(|x| ((x + off) * h + rng.gen_range(-1e-3..1e-3)).rem_euclid(1.0)));
                }
            }
        }
    }
    pts
}

#[test]
fn small_bcc_samples_close_up_on_the_torus() {
    for cells in [2, 3] {
        let pts = perturbed_bcc(cells, 7);
        let t = periodic_delaunay(&pts).unwrap();
        assert_eq!(t.euler_characteristic(), 0);
        assert_eq!(t.num_faces(), 2 * t.num_tets());
        assert_eq!(t.num_edges(), pts.len() + t.num_tets());
    }
    let eight: Vec<[f64; 3]> = perturbed_bcc(2, 3).into_iter().step_by(2).collect();
    let t = periodic_delaunay(&eight).unwrap();
    assert_eq!(t.euler_characteristic(), 0);
    assert!(periodic_delaunay(&eight[..4]).is_err());
}

fn orbit_ball_is_empty(t: &mosaic_core::random::PeriodicTriangulation, k: usize, p: usize) -> bool {
    let q = t.tets()[k].map(|v| t.coords(&v));
    let (o, a, b, d) = (c(&q[0]), c(&q[1]), c(&q[2]), c(&q[3]));
    let sign = orient3d(o, a, b, d).signum();
    let x = t.points()[p];
    for sx in -2..=2 {
        for sy in -2..=2 {
            for sz in -2..=2 {
                let y = [x[0] + sx as f64, x[1] + sy as f64, x[2] + sz as f64];
                if sign * insphere(o, a, b, d, c(&y)) > 0.0 {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn empty_circumspheres_by_brute_force() {
    let sample = PoissonSample::generate(1000.0, 42, 0).unwrap();
    let t = periodic_delaunay(&sample.points).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let k = rng.gen_range(0..t.num_tets());
        let p = rng.gen_range(0..t.points().len());
        assert!(orbit_ball_is_empty(&t, k, p));
    }
    let small = PoissonSample::generate(150.0, 5, 1).unwrap();
    let t = periodic_delaunay(&small.points).unwrap();
    for k in 0..t.num_tets() {
        for p in 0..t.points().len() {
            assert!(orbit_ball_is_empty(&t, k, p));
        }
    }
}

#[test]
fn voronoi_cells_from_circumcentres() {
    let sample = PoissonSample::generate(400.0, 11, 0).unwrap();
    let t = periodic_delaunay(&sample.points).unwrap();
    // circumcentres of the tetrahedra around each point, in that point's frame
    let mut corners: HashMap<u32, Vec<[f64; 3]>> = HashMap::new();
    let mut neighbours: HashMap<u32, BTreeSet<(u32, [i32; 3])>> = HashMap::new();
    for tet in t.tets() {
        let q = tet.map(|v| t.coords(&v));
        let (centre, _) = circumsphere(&q);
        for a in 0..4 {
            let (p, s) = tet[a];
            if p >= 10 {
                continue;
            }
            let local = std::array::from_fn(|k| centre[k] - s[k] as f64);
            corners.entry(p).or_default().push(local);
            for (b, &(o, so)) in tet.iter().enumerate() {
                if b != a {
                    neighbours.entry(p).or_default().insert((o, [so[0] - s[0], so[1] - s[1], so[2] - s[2]]));
                }
            }
        }
    }
    for p in 0..10u32 {
        let cell = FloatPolyhedron::hull(&corners[&p], 1e-9).unwrap();
        assert_eq!(cell.num_vertices(), corners[&p].len(), "cell {p}");
        assert_eq!(cell.facets().len(), neighbours[&p].len(), "cell {p}");
        assert!(cell.euler_ok());
    }
}

#[test]
fn replicate_identities_and_duality() {
    let s = voronoi_delaunay_stats(300, 4, 2024).unwrap();
    assert_eq!(s.replicates.len(), 4);
    for r in &s.replicates {
        assert_eq!(r.faces, 2 * r.tets);
        assert_eq!(r.edges, r.points + r.tets);
        assert_eq!(r.voronoi.n_bar, qi(4));
        assert_eq!(&r.voronoi.f_bar - &r.voronoi.v_bar / qi(2), qi(2));
        assert_eq!(r.delaunay.n_bar, r.voronoi.v_bar);
        assert_eq!(r.delaunay.v_bar, r.voronoi.n_bar);
        assert_eq!(r.delaunay.h_bar, r.voronoi.h_bar);
    }
    assert_eq!(s.voronoi.v_bar.mean, s.delaunay.n_bar.mean);
    assert!(s.voronoi.v_bar.std_err > 0.0);
}

#[test]
fn seeds_are_deterministic() {
    let a = voronoi_delaunay_stats(200, 3, 9).unwrap();
    let b = voronoi_delaunay_stats(200, 3, 9).unwrap();
    assert_eq!(a, b);
    let c = voronoi_delaunay_stats(200, 3, 10).unwrap();
    assert_ne!(a.replicates[0].tets, c.replicates[0].tets);
    let one = replicate_stats(&PoissonSample::generate(200.0, 9, 1).unwrap()).unwrap();
    assert_eq!(one, a.replicates[1]);
}

#[test]
fn invalid_requests() {
    assert!(voronoi_delaunay_stats(50, 2, 1).is_err());
    assert!(voronoi_delaunay_stats(200, 0, 1).is_err());
    assert!(PoissonSample::generate(0.0, 1, 0).is_err());
}

#[test]
fn hyperplane_closed_forms() {
    let s = hyperplane_arrangement_stats(3).unwrap();
    assert_eq!((s.cells, s.vertices, s.v_bar.clone(), s.n_bar.clone()), (8, 1, qi(1), qi(8)));
    let s = hyperplane_arrangement_stats(10).unwrap();
    assert_eq!(s.v_bar, q(60, 11));
    assert_eq!(s.cells, 176);
    let mut prev = qi(0);
    for m in 3..=200 {
        let v = hyperplane_arrangement_stats(m).unwrap().v_bar;
        assert!(v > prev && v < qi(8));
        prev = v;
    }
    assert!(hyperplane_arrangement_stats(100).unwrap().v_bar > q(15, 2));
    assert!(hyperplane_arrangement_stats(2).is_err());
}

/// Cells of an arrangement of generic planes are pointed, so each one is
/// found as a sign vector next to one of its vertices.
fn census(planes: &[([i64; 3], i64)]) -> (usize, usize, usize) {
    let m = planes.len();
    let det3 = |r: [[Q; 3]; 3]| {
        &r[0][0] * (&r[1][1] * &r[2][2] - &r[1][2] * &r[2][1]) - &r[0][1] * (&r[1][0] * &r[2][2] - &r[1][2] * &r[2][0])
            + &r[0][2] * (&r[1][0] * &r[2][1] - &r[1][1] * &r[2][0])
    };
    let mut cells: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut incid: BTreeSet<(usize, Vec<bool>)> = BTreeSet::new();
    let mut vertices = 0;
    for a in 0..m {
        for b in a + 1..m {
            for cc in b + 1..m {
                let rows = [a, b, cc].map(|i| planes[i].0.map(qi));
                let d = det3(rows.clone());
                assert!(!d.is_zero());
                let x: Vec<Q> = (0..3)
                    .map(|col| {
                        let mut r = rows.clone();
                        for (k, i) in [a, b, cc].iter().enumerate() {
                            r[k][col] = qi(planes[*i].1);
                        }
                        det3(r) / &d
                    })
                    .collect();
                vertices += 1;
                let base: Vec<Q> = planes
                    .iter()
                    .map(|(n, off)| (0..3).map(|k| qi(n[k]) * &x[k]).fold(Q::zero(), |s, t| s + t) - qi(*off))
                    .collect();
                for mask in 0..8 {
                    let sv: Vec<bool> = (0..m)
                        .map(|i| match [a, b, cc].iter().position(|&j| j == i) {
                            Some(k) => mask >> k & 1 == 1,
                            None => {
                                assert!(!base[i].is_zero(), "four planes meet");
                                base[i].is_positive()
                            }
                        })
                        .collect();
                    cells.insert(sv.clone());
                    incid.insert((vertices, sv));
                }
            }
        }
    }
    (cells.len(), vertices, incid.len())
}

#[test]
fn arrangement_census_matches_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for m in [3usize, 5, 10] {
        let planes: Vec<([i64; 3], i64)> = (0..m)
            .map(|_| {
                ([rng.gen_range(-50..=50), rng.gen_range(-50..=50), rng.gen_range(-50..=50)], rng.gen_range(-500..=500))
            })
            .collect();
        let (cells, vertices, incidences) = census(&planes);
        let s = hyperplane_arrangement_stats(m as u64).unwrap();
        assert_eq!((cells as u64, vertices as u64, incidences as u64), (s.cells, s.vertices, s.incidences), "m={m}");
        assert_eq!(Q::new((incidences as i64).into(), (cells as i64).into()), s.v_bar);
    }
}
