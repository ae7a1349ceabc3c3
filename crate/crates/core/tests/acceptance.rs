//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use mosaic_core::constructions::{
    build, default_foam_eps, dual_foam_step, face_to_face_3d_catalog, foam_step, harmonic_target, HarmonicPlan,
};
use mosaic_core::formulas::CurvatureClass;
use mosaic_core::geom::{convex_hull, tet_volume, tetrahedral_decomposition, ConvexPolytope, RationalPoint};
use mosaic_core::periodic::{dual_nij, nij_from_params};
use mosaic_core::random::{hyperplane_arrangement_stats, voronoi_delaunay_stats};
use mosaic_core::rational::{self, q, qi, Q};
use mosaic_core::spherical::{catalog, from_float};
use mosaic_core::tables::{table1, table2, verify_table2};
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn h_of(n: &Q, v: &Q) -> Q {
    n * v / (n + v)
}

fn within(a: &Q, b: &Q, tol: &Q) -> bool {
    (a - b).abs() <= *tol
}

fn d(x: &Q) -> String {
    rational::display(x)
}

/// Rows 1, 7, 11 and 14-23 built geometrically and compared exactly with
/// the stored degrees, plus the 3D brick wall.
fn golden_stats() -> Check {
    let ids: Vec<String> =
        ["1", "7", "11"].into_iter().map(String::from).chain((14..=23).map(|i| i.to_string())).collect();
    let rows = table1();
    for id in &ids {
        let r = rows.iter().find(|r| &r.id == id).ok_or(format!("row {id} missing"))?;
        let name = r.construct.as_deref().ok_or(format!("row {id} has no builder"))?;
        let s = build(name).map_err(|e| format!("{name}: {e}"))?.stats();
        ensure((&s.n_bar, &s.v_bar, &s.f_bar) == (&r.n_bar, &r.v_bar, &r.f_bar), || {
            format!("row {id} {name}: measured ({}, {}, {})", d(&s.n_bar), d(&s.v_bar), d(&s.f_bar))
        })?;
        ensure(s.h_bar == h_of(&r.n_bar, &r.v_bar), || format!("row {id}: h mismatch"))?;
        ensure(within(&s.h_bar, &r.h_printed, &q(1, 200)), || {
            format!("row {id}: h = {} vs printed {}", d(&s.h_bar), d(&r.h_printed))
        })?;
    }
    let m = build("brick_wall_3d").map_err(|e| e.to_string())?;
    let s = m.stats();
    ensure(!m.face_to_face(), || "brick wall reported face-to-face".into())?;
    ensure((s.n_bar, s.v_bar, s.h_bar.clone()) == (qi(2), qi(8), q(8, 5)), || format!("brick wall h = {}", d(&s.h_bar)))
}

/// Measured incidence matrices against the closed form, and the dual swap
/// on every primal/dual pair of stored rows.
fn nij_cross_check() -> Check {
    for name in face_to_face_3d_catalog() {
        let m = build(&name).map_err(|e| format!("{name}: {e}"))?;
        let measured = m.measure_nij().map_err(|e| format!("{name}: {e}"))?;
        let s = m.stats();
        let formula = nij_from_params(&s.v_bar, &s.f_bar, &s.n_bar).map_err(|e| e.to_string())?;
        ensure(measured == formula, || format!("{name}: measured {:?}", measured.rows_text()))?;
    }
    let rows = table1();
    let mut pairs = 0;
    for dual in rows.iter().filter(|r| r.is_dual()) {
        let base = dual.id.trim_end_matches('\'');
        let p = rows.iter().find(|r| r.id == base).ok_or(format!("primal {base} missing"))?;
        let f_dual = (&p.f_bar - qi(2)) * &p.n_bar / &p.v_bar + qi(2);
        let primal = nij_from_params(&p.v_bar, &p.f_bar, &p.n_bar).map_err(|e| e.to_string())?;
        let swapped = nij_from_params(&p.n_bar, &f_dual, &p.v_bar).map_err(|e| e.to_string())?;
        ensure(dual_nij(&primal) == swapped, || format!("row {}: swap identity fails", dual.id))?;
        let tol = q(1, 200);
        ensure(
            within(&dual.n_bar, &p.v_bar, &tol)
                && within(&dual.v_bar, &p.n_bar, &tol)
                && within(&dual.f_bar, &f_dual, &tol),
            || format!("row {}: stored dual degrees disagree", dual.id),
        )?;
        pairs += 1;
    }
    ensure(pairs == 31, || format!("{pairs} dual pairs"))
}

fn total_angles() -> Check {
    let full = 4.0 * PI;
    for name in
        ["cubic", "alternated_cubic", "bitruncated_cubic", "foam:1:bitruncated_cubic", "foam:2:bitruncated_cubic"]
    {
        let m = build(name).map_err(|e| format!("{name}: {e}"))?;
        let a = m.average_total_angle().map_err(|e| e.to_string())?;
        let h = rational::to_f64(&m.stats().h_bar);
        let rel = ((h * a.total - full) / full).abs();
        ensure(rel <= 1e-7, || format!("{name}: relative error {rel:e}"))?;
        for (kind, sums) in [("node", &a.node_sums), ("cell", &a.cell_sums)] {
            let worst = sums.iter().map(|x| (x - full).abs()).fold(0.0, f64::max);
            ensure(worst <= 1e-9, || format!("{name}: {kind} sum off by {worst:e}"))?;
        }
    }
    Ok(())
}

fn foam_recursions() -> Check {
    let step = |x: &Q| qi(16) * x / (qi(4) + x);
    let mut m = build("bitruncated_cubic").map_err(|e| e.to_string())?;
    let mut expected = qi(24);
    let mut got = Vec::new();
    for k in 1..=3 {
        expected = step(&expected);
        m = foam_step(&m, &default_foam_eps()).map_err(|e| e.to_string())?;
        let s = m.stats();
        ensure(s.v_bar == expected, || format!("foam step {k}: v = {}, expected {}", d(&s.v_bar), d(&expected)))?;
        got.push(s.v_bar);
    }
    ensure(got[0] == q(96, 7) && got[1] == q(384, 31), || "printed iterates".into())?;
    let mut m = build("barycentric:cubic").map_err(|e| e.to_string())?;
    let mut expected = qi(24);
    let mut prev_h = qi(4);
    for k in 0..=2 {
        if k > 0 {
            m = dual_foam_step(&m).map_err(|e| e.to_string())?;
        }
        let s = m.stats();
        ensure(s.n_bar == expected, || format!("dual foam step {k}: n = {}, expected {}", d(&s.n_bar), d(&expected)))?;
        ensure(s.v_bar == qi(4), || format!("dual foam step {k}: not simplicial"))?;
        ensure(s.n_bar > qi(12) && s.h_bar > qi(3) && s.h_bar < prev_h, || {
            format!("dual foam step {k}: h = {} not approaching 3 from above", d(&s.h_bar))
        })?;
        prev_h = s.h_bar;
        expected = step(&expected);
    }
    Ok(())
}

fn barycentric() -> Check {
    let s = build("barycentric:cubic").map_err(|e| e.to_string())?.stats();
    // (d+1)! and d+1 for d = 3
    ensure(s.n_bar == qi(24) && s.v_bar == qi(4), || format!("n = {}, v = {}", d(&s.n_bar), d(&s.v_bar)))?;
    ensure(s.h_bar == q(24, 7) && s.h_bar == h_of(&qi(24), &qi(4)), || format!("h = {}", d(&s.h_bar)))
}

/// Limiting harmonic degree of a recipe, evaluated from per-period counts:
/// a cubic layer has 1 cell, 8 incidences and 1 node; a subdivided layer
/// 48 cells, 192 incidences and 8 nodes.
fn recipe_h(plan: &HarmonicPlan) -> Q {
    match plan {
        HarmonicPlan::Layered { lambda } => {
            let mu = Q::one() - lambda;
            let cells = lambda + qi(48) * &mu;
            let inc = qi(8) * lambda + qi(192) * &mu;
            let nodes = lambda + qi(8) * &mu;
            inc / (cells + nodes)
        }
        HarmonicPlan::PartialDivision { sigma, n_k, .. } => {
            let cells = Q::one() + qi(3) * sigma;
            let inc = qi(4) * &cells;
            let nodes = qi(4) / n_k + sigma;
            inc / (cells + nodes)
        }
    }
}

fn harmonic_targets() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let h_prime = q(24, 7);
    let (mut layered, mut divided) = (0, 0);
    let mut targets = vec![qi(4), h_prime.clone()];
    while targets.len() < 20 {
        let den: i64 = rng.gen_range(2..1000);
        let num: i64 = rng.gen_range(1..=den);
        targets.push(qi(3) + q(num, den));
    }
    for h in &targets {
        let plan = harmonic_target(h, 3).map_err(|e| format!("{}: {e}", d(h)))?;
        let got = recipe_h(&plan);
        match &plan {
            HarmonicPlan::Layered { lambda } => {
                layered += 1;
                ensure(h >= &h_prime, || format!("{}: layered below 24/7", d(h)))?;
                ensure(lambda >= &Q::from_integer(0.into()) && lambda <= &Q::one(), || {
                    format!("lambda {}", d(lambda))
                })?;
                ensure(&got == h, || format!("{}: recipe gives {}", d(h), d(&got)))?;
            }
            HarmonicPlan::PartialDivision { k, sigma, n_k } => {
                divided += 1;
                let mut n = qi(24);
                for _ in 0..*k {
                    n = qi(16) * &n / (qi(4) + &n);
                }
                ensure(&n == n_k, || format!("{}: n_k = {}", d(h), d(n_k)))?;
                let next = qi(16) * &n / (qi(4) + &n);
                let (hi, lo) = (h_of(&n, &qi(4)), h_of(&next, &qi(4)));
                ensure(&lo <= h && h <= &hi, || format!("{}: not bracketed by step {k}", d(h)))?;
                ensure(sigma.is_positive() || sigma == &Q::from_integer(0.into()), || "negative sigma".into())?;
                ensure(sigma <= &Q::one(), || "sigma above 1".into())?;
                let err = (rational::to_f64(&got) - rational::to_f64(h)).abs();
                ensure(err <= 1e-6, || format!("{}: recipe gives {}", d(h), d(&got)))?;
            }
        }
    }
    ensure(layered > 0 && divided > 0, || format!("{layered} layered, {divided} divided targets"))
}

fn spherical() -> Check {
    let names = catalog::names();
    ensure(names.len() >= 18, || format!("{} catalog entries", names.len()))?;
    for name in names {
        let m = from_float(&catalog::polyhedron(&name).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let (nc, nv, ne) = m.counts();
        let s = m.stats();
        let mu = q(4, (nc + nv) as i64);
        ensure(s.mu_bar == mu && s.h_bar == qi(2) - &mu, || format!("{name}: h = {}", d(&s.h_bar)))?;
        ensure(s.h_bar == h_of(&q(2 * ne as i64, nv as i64), &q(2 * ne as i64, nc as i64)), || format!("{name}: h"))?;
        ensure(s.h_bar < qi(2), || format!("{name}: h >= 2"))?;
        ensure(qi(2 * nv as i64) == &s.v_bar * qi(nc as i64) - qi(2 * nc as i64) + qi(4), || {
            format!("{name}: angle-sum identity")
        })?;
        ensure((s.area_sum - 4.0 * PI).abs() <= 1e-9, || format!("{name}: area sum {}", s.area_sum))?;
    }
    Ok(())
}

/// Counts of `{p, q}` from `V = 4p / (4 - (p-2)(q-2))`, `F = 4q / (...)`.
fn platonic(p: i64, q_: i64) -> (i64, i64) {
    let den = 4 - (p - 2) * (q_ - 2);
    (4 * p / den, 4 * q_ / den)
}

/// Space form of `{p, q, r}` from the dihedral angle of the cell `{p, q}`:
/// `r` copies around an edge exceed, fill or fall short of a full turn.
fn space_form(p: u32, q_: u32, r: u32) -> CurvatureClass {
    let half = ((PI / q_ as f64).cos() / (PI / p as f64).sin()).asin();
    let around = r as f64 * 2.0 * half;
    if (around - 2.0 * PI).abs() < 1e-12 {
        CurvatureClass::Euclidean
    } else if around < 2.0 * PI {
        CurvatureClass::Spherical
    } else {
        CurvatureClass::Hyperbolic
    }
}

fn table2_rows() -> Check {
    let rows = table2();
    ensure(rows.len() == 11, || format!("{} rows", rows.len()))?;
    for r in &rows {
        let (p, q_, s) = r.schlafli;
        let (v, _) = platonic(p as i64, q_ as i64);
        let (_, n) = platonic(q_ as i64, s as i64);
        let h = h_of(&qi(n), &qi(v));
        ensure((v, n) == (r.printed_first as i64, r.printed_second as i64), || {
            format!("row {}: (v, n) = ({v}, {n})", r.id)
        })?;
        ensure(space_form(p, q_, s) == r.space, || format!("row {}: space form", r.id))?;
        ensure(within(&h.recip(), &r.printed_inv_h, &q(1, 2000)), || {
            format!("row {}: 1/h = {:.4} vs printed {}", r.id, rational::to_f64(&h.recip()), d(&r.printed_inv_h))
        })?;
    }
    let lib = verify_table2();
    ensure(lib.iter().all(|c| c.ok), || "library verifier disagrees".into())
}

fn monte_carlo() -> Check {
    let r = voronoi_delaunay_stats(20_000, 10, 42).map_err(|e| e.to_string())?;
    for rep in &r.replicates {
        let v = &rep.voronoi;
        ensure(v.n_bar == qi(4), || format!("replicate {}: n = {}", rep.stream, d(&v.n_bar)))?;
        ensure(v.f_bar == qi(2) + &v.v_bar / qi(2), || format!("replicate {}: f != 2 + v/2", rep.stream))?;
        let dl = &rep.delaunay;
        ensure(dl.n_bar == v.v_bar && dl.v_bar == qi(4) && dl.f_bar == qi(4) && dl.h_bar == v.h_bar, || {
            format!("replicate {}: Delaunay degrees do not swap", rep.stream)
        })?;
    }
    let v = r.voronoi.v_bar.mean;
    let f = r.voronoi.f_bar.mean;
    ensure((v - 27.07).abs() <= 0.02 * 27.07, || format!("v = {v}"))?;
    ensure((15.51 * 0.995..=15.54 * 1.005).contains(&f), || format!("f = {f}"))?;
    ensure((r.delaunay.n_bar.mean - v).abs() < 1e-12, || "Delaunay mean n".into())?;
    let mut prev = qi(0);
    for m in 3..=100u64 {
        let a = hyperplane_arrangement_stats(m).map_err(|e| e.to_string())?;
        let c3 = (m * (m - 1) * (m - 2) / 6) as i64;
        let c2 = (m * (m - 1) / 2) as i64;
        let v_bar = q(8 * c3, 1 + m as i64 + c2 + c3);
        ensure(a.v_bar == v_bar && a.n_bar == qi(8), || format!("m = {m}: v = {}", d(&a.v_bar)))?;
        ensure(v_bar > prev && v_bar < qi(8), || format!("m = {m}: not increasing below 8"))?;
        prev = v_bar;
    }
    ensure(prev > q(15, 2), || format!("v(100) = {}", d(&prev)))?;
    eprintln!(
        "    Poisson-Voronoi: v = {v:.4} +- {:.4}, f = {f:.4}, h = {:.4}",
        r.voronoi.v_bar.std_err, r.voronoi.h_bar.mean
    );
    Ok(())
}

fn pts(c: &[[i64; 3]]) -> Vec<RationalPoint> {
    c.iter().map(|x| RationalPoint::from_ints(x)).collect()
}

/// Pyritohedron: a dodecahedron with rational vertices.
fn dodecahedron() -> ConvexPolytope {
    let mut v = Vec::new();
    for s in 0..8 {
        let sg = |b: i64| if s >> b & 1 == 1 { -2 } else { 2 };
        v.push(RationalPoint::from_ints(&[sg(0), sg(1), sg(2)]));
    }
    for s in 0..4 {
        let a = if s & 1 == 1 { -3 } else { 3 };
        let b = if s & 2 == 2 { -3 } else { 3 };
        let base = [(0, 1), (a, 1), (b, 2)];
        for r in 0..3 {
            let c: Vec<(i64, i64)> = (0..3).map(|k| base[(k + 3 - r) % 3]).collect();
            v.push(RationalPoint::from_fracs(&c));
        }
    }
    convex_hull(&v).unwrap()
}

fn bounds_and_predicates() -> Check {
    for name in face_to_face_3d_catalog() {
        let s = build(&name).map_err(|e| format!("{name}: {e}"))?.stats();
        let two_v = qi(2) * &s.v_bar;
        let bound = std::cmp::max(qi(4), &two_v / (&two_v - qi(7)));
        ensure(s.h_bar >= q(28, 13), || format!("{name}: h = {}", d(&s.h_bar)))?;
        ensure(s.n_bar >= bound, || format!("{name}: n = {} below {}", d(&s.n_bar), d(&bound)))?;
        ensure(s.h_bar > qi(3) && s.h_bar <= qi(4), || format!("{name}: h = {} outside (3, 4]", d(&s.h_bar)))?;
    }
    let mut cube = Vec::new();
    for i in 0..8 {
        cube.push([i & 1, (i >> 1) & 1, (i >> 2) & 1]);
    }
    let solids = [
        ("cube", convex_hull(&pts(&cube)).unwrap()),
        (
            "octahedron",
            convex_hull(&pts(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]])).unwrap(),
        ),
        ("dodecahedron", dodecahedron()),
    ];
    for (name, p) in solids {
        let tets = tetrahedral_decomposition(&p).map_err(|e| e.to_string())?;
        let v = p.num_vertices();
        ensure(tets.len() <= 2 * v - 7, || format!("{name}: {} tetrahedra for {v} vertices", tets.len()))?;
        let total: Q =
            tets.iter().map(|t| tet_volume(p.vertex(t[0]), p.vertex(t[1]), p.vertex(t[2]), p.vertex(t[3]))).sum();
        ensure(total == p.volume(), || format!("{name}: volume {} vs {}", d(&total), d(&p.volume())))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Option<Duration>, fn() -> Check); 10] = [
        ("exact golden stats", Some(Duration::from_secs(1)), golden_stats),
        ("incidence matrix cross-check", Some(Duration::from_secs(5)), nij_cross_check),
        ("total angle identity", Some(Duration::from_secs(30)), total_angles),
        ("foam recursions", Some(Duration::from_secs(10)), foam_recursions),
        ("barycentric subdivision", None, barycentric),
        ("harmonic degree targets", None, harmonic_targets),
        ("spherical identities", Some(Duration::from_secs(1)), spherical),
        ("regular honeycombs", None, table2_rows),
        ("Monte Carlo degrees", None, monte_carlo),
        ("bounds and predicates", None, bounds_and_predicates),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = run();
        let took = start.elapsed();
        if let (Ok(()), Some(b)) = (&result, budget) {
            if took > *b {
                result = Err(format!("took {took:.2?}, budget {b:?}"));
            }
        }
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {e}", i + 1);
            }
        }
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
