//! Command implementations behind the `mosaic` binary. Each command returns
//! its report text and whether every check passed.

pub mod plane;

use std::fmt::Write;
use std::path::Path;

use mosaic_core::constructions::{
    build, default_foam_eps, dual_foam_step, face_to_face_3d_catalog, foam_step, harmonic_target, layered_mix,
    HarmonicPlan, LayerRecipe,
};
use mosaic_core::formulas::{conjecture_predicate, foam_map, refined_3d_bound, refined_h_floor_3d};
use mosaic_core::periodic::nij_from_params;
use mosaic_core::random::voronoi_delaunay_stats;
use mosaic_core::rational::{self, Q};
use mosaic_core::spherical::{self, catalog};
use mosaic_core::tables::{verify_table1_arithmetic, verify_table1_geometric, verify_table2, RowCheck};
use mosaic_core::{Error, PeriodicMosaic, Result};

use crate::plane::{Axes, RowSet};

#[derive(Debug, Default)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn pass(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

/// Exit status for an error: 2 for bad names or unparsable input, 1 otherwise.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::UnknownName(_) | Error::Parse(_) => 2,
        _ => 1,
    }
}

/// Builds a catalog mosaic, or reads one from a JSON file when `spec`
/// names an existing path.
pub fn load_mosaic(spec: &str) -> Result<PeriodicMosaic> {
    if Path::new(spec).is_file() {
        PeriodicMosaic::from_json(&std::fs::read_to_string(spec)?)
    } else {
        build(spec)
    }
}

/// Up to six decimals with trailing zeros removed.
pub fn short(x: &Q) -> String {
    let s = format!("{:.6}", rational::to_f64(x));
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

pub fn construct(name: &str, out: Option<&Path>) -> Result<Outcome> {
    let m = build(name)?;
    let json = m.to_json();
    let mut text = String::new();
    match out {
        Some(p) => {
            std::fs::write(p, &json)?;
            let _ = writeln!(text, "wrote {}", p.display());
        }
        None => text.push_str(&json),
    }
    let _ = writeln!(text, "dim: {}", m.dim());
    let _ = writeln!(text, "cells per period: {}", m.cells().len());
    let _ = writeln!(text, "face_to_face: {}", m.face_to_face());
    Ok(Outcome::pass(text))
}

pub fn stats(spec: &str, exact: bool) -> Result<Outcome> {
    let m = load_mosaic(spec)?;
    let s = m.stats();
    let fmt = |x: &Q| if exact { rational::display(x) } else { short(x) };
    let mut text = String::new();
    let _ = writeln!(text, "{} {} {} {}", fmt(&s.n_bar), fmt(&s.v_bar), fmt(&s.f_bar), fmt(&s.h_bar));
    let _ = writeln!(text, "n_bar: {}", rational::display(&s.n_bar));
    let _ = writeln!(text, "v_bar: {}", rational::display(&s.v_bar));
    let _ = writeln!(text, "f_bar: {}", rational::display(&s.f_bar));
    let _ = writeln!(text, "e_bar: {}", rational::display(&s.e_bar));
    let _ = writeln!(text, "h_bar: {}", rational::display(&s.h_bar));
    let _ = writeln!(
        text,
        "per period: {} cells, {} nodes, {} facets, {} edges, {} incidences",
        s.cells, s.nodes, s.facets, s.edges, s.incidences
    );
    let _ = writeln!(text, "face_to_face: {}", m.face_to_face());
    Ok(Outcome::pass(text))
}

fn matrix_text(title: &str, rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut s = format!("{title}\n");
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
    s
}

pub fn nij(spec: &str, check: bool) -> Result<Outcome> {
    let m = load_mosaic(spec)?;
    let measured = m.measure_nij()?;
    let (v, f, n) = measured.params();
    let formula = nij_from_params(&v, &f, &n)?;
    let diff: Vec<Vec<String>> = (0..4)
        .map(|i| (0..4).map(|j| rational::display(&(measured.get(i, j) - formula.get(i, j)))).collect())
        .collect();
    let zero = measured == formula;
    let mut text = matrix_text("measured", &measured.rows_text());
    text.push_str(&matrix_text("formula", &formula.rows_text()));
    text.push_str(&matrix_text("difference", &diff));
    let _ = writeln!(text, "{}", if zero { "zero difference" } else { "MISMATCH" });
    Ok(Outcome { text, ok: zero || !check })
}

fn report_checks(title: &str, checks: &[RowCheck]) -> Outcome {
    let mut text = String::new();
    let passed = checks.iter().filter(|c| c.ok).count();
    for c in checks.iter().filter(|c| !c.ok) {
        let _ = writeln!(text, "FAIL {} {}: {}", c.id, c.name, c.detail);
    }
    let _ = writeln!(text, "{title}: {passed}/{} rows pass", checks.len());
    Outcome { text, ok: passed == checks.len() }
}

pub fn verify_table1(arithmetic: bool) -> Outcome {
    if arithmetic {
        report_checks("table1 arithmetic", &verify_table1_arithmetic())
    } else {
        report_checks("table1 geometric", &verify_table1_geometric())
    }
}

pub fn verify_table2_cmd() -> Outcome {
    report_checks("table2", &verify_table2())
}

/// The conjectured range and the lower bounds on every built-in
/// face-to-face 3D mosaic.
pub fn verify_conjecture() -> Result<Outcome> {
    let mut checks = Vec::new();
    for name in face_to_face_3d_catalog() {
        let s = build(&name)?.stats();
        let conj = conjecture_predicate(&s, 3);
        let floor = s.h_bar >= refined_h_floor_3d();
        let nb = s.n_bar >= refined_3d_bound(&s.v_bar);
        checks.push(RowCheck {
            id: name.clone(),
            name: format!("h = {}", rational::display(&s.h_bar)),
            ok: conj && floor && nb,
            detail: format!("range {conj}, h floor {floor}, node bound {nb}"),
        });
    }
    Ok(report_checks("conjecture", &checks))
}

pub fn verify_angles(spec: &str, tol: f64) -> Result<Outcome> {
    let m = load_mosaic(spec)?;
    let a = m.average_total_angle()?;
    let h = rational::to_f64(&m.stats().h_bar);
    let s = mosaic_core::geom::sphere_measure(m.dim());
    let rel = ((h * a.total - s) / s).abs();
    let ok = rel <= tol;
    let text = format!(
        "h_bar * Omega_bar = {:.12}, full sphere = {:.12}, relative error {:.3e}: {}\n",
        h * a.total,
        s,
        rel,
        if ok { "pass" } else { "FAIL" }
    );
    Ok(Outcome { text, ok })
}

pub fn plane(set: RowSet, csv: &Path, svg: Option<&Path>, axes: Axes) -> Result<Outcome> {
    let rows = plane::rows(set)?;
    std::fs::write(csv, plane::to_csv(&rows))?;
    let mut text = format!("wrote {} rows to {}\n", rows.len(), csv.display());
    if let Some(p) = svg {
        std::fs::write(p, plane::to_svg(&rows, axes))?;
        let _ = writeln!(text, "wrote {}", p.display());
    }
    Ok(Outcome::pass(text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FoamKind {
    Foam,
    Dualfoam,
}

/// Applies `k` steps and compares the tracked degree with the recursion
/// `x -> 16x/(4+x)`: `v_bar` for foam steps, `n_bar` for dual-foam steps.
pub fn iterate(kind: FoamKind, name: &str, k: usize) -> Result<Outcome> {
    let mut m = load_mosaic(name)?;
    let pick = |m: &PeriodicMosaic| {
        let s = m.stats();
        match kind {
            FoamKind::Foam => s.v_bar,
            FoamKind::Dualfoam => s.n_bar,
        }
    };
    let label = match kind {
        FoamKind::Foam => "v_bar",
        FoamKind::Dualfoam => "n_bar",
    };
    let d = m.dim() as u32;
    let mut x = pick(&m);
    let mut text = format!("step predicted measured {label}\n");
    let _ = writeln!(text, "0 {} {}", rational::display(&x), rational::display(&x));
    let mut ok = true;
    for step in 1..=k {
        m = match kind {
            FoamKind::Foam => foam_step(&m, &default_foam_eps())?,
            FoamKind::Dualfoam => dual_foam_step(&m)?,
        };
        let predicted = foam_map(&x, d);
        let measured = pick(&m);
        let hit = predicted == measured;
        ok &= hit;
        let _ = writeln!(
            text,
            "{step} {} {} {}",
            rational::display(&predicted),
            rational::display(&measured),
            if hit { "ok" } else { "MISMATCH" }
        );
        x = measured;
    }
    Ok(Outcome { text, ok })
}

pub fn mix(lambda: Option<&str>, target: Option<&str>) -> Result<Outcome> {
    let mut text = String::new();
    if let Some(l) = lambda {
        let s = layered_mix(&LayerRecipe::Ratio(rational::parse(l)?))?;
        let _ = writeln!(
            text,
            "n_bar = {}, v_bar = {}, f_bar = {}, h_bar = {}",
            rational::display(&s.n_bar),
            rational::display(&s.v_bar),
            rational::display(&s.f_bar),
            rational::display(&s.h_bar)
        );
    }
    if let Some(t) = target {
        let h = rational::parse(t)?;
        let plan = harmonic_target(&h, 3)?;
        match &plan {
            HarmonicPlan::Layered { lambda } => {
                let _ = writeln!(text, "layered mix with lambda = {}", rational::display(lambda));
            }
            HarmonicPlan::PartialDivision { k, sigma, n_k } => {
                let _ = writeln!(
                    text,
                    "{k} dual-foam steps (n_bar = {}), then split sigma = {} ({})",
                    rational::display(n_k),
                    rational::display(sigma),
                    short(sigma)
                );
            }
        }
        let _ = writeln!(text, "h_bar = {}", rational::display(&plan.h_bar()));
    }
    if lambda.is_none() && target.is_none() {
        return Err(Error::Parse("mix needs --lambda or --target".into()));
    }
    Ok(Outcome::pass(text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RandomKind {
    Voronoi,
    Delaunay,
}

/// CSV with one row per replicate followed by a `mean` and a `std_err` row.
pub fn random(kind: RandomKind, points: usize, reps: usize, seed: u64) -> Result<Outcome> {
    let r = voronoi_delaunay_stats(points, reps, seed)?;
    let mut text = String::from("replicate,points,tets,n_bar,v_bar,f_bar,h_bar\n");
    for rep in &r.replicates {
        let d = match kind {
            RandomKind::Voronoi => &rep.voronoi,
            RandomKind::Delaunay => &rep.delaunay,
        };
        let _ = writeln!(
            text,
            "{},{},{},{},{},{},{}",
            rep.stream,
            rep.points,
            rep.tets,
            plane::decimal(&d.n_bar),
            plane::decimal(&d.v_bar),
            plane::decimal(&d.f_bar),
            plane::decimal(&d.h_bar)
        );
    }
    let e = match kind {
        RandomKind::Voronoi => r.voronoi,
        RandomKind::Delaunay => r.delaunay,
    };
    let _ = writeln!(text, "mean,,,{:.6},{:.6},{:.6},{:.6}", e.n_bar.mean, e.v_bar.mean, e.f_bar.mean, e.h_bar.mean);
    let _ = writeln!(
        text,
        "std_err,,,{:.6},{:.6},{:.6},{:.6}",
        e.n_bar.std_err, e.v_bar.std_err, e.f_bar.std_err, e.h_bar.std_err
    );
    Ok(Outcome::pass(text))
}

/// Accepts a catalog polyhedron name or an OFF file.
pub fn sphere(spec: &str) -> Result<Outcome> {
    let poly = if Path::new(spec).is_file() {
        spherical::parse_off(&std::fs::read_to_string(spec)?)?
    } else {
        catalog::polyhedron(spec)?
    };
    let s = spherical::from_float(&poly)?.stats();
    let ok = s.h_bar == mosaic_core::rational::qi(2) - &s.mu_bar;
    let mut text = String::new();
    let _ = writeln!(text, "cells {}, nodes {}, edges {}", s.cells, s.nodes, s.edges);
    let _ = writeln!(text, "n_bar = {}, v_bar = {}", rational::display(&s.n_bar), rational::display(&s.v_bar));
    let _ = writeln!(text, "mu_bar = {}", rational::display(&s.mu_bar));
    let _ = writeln!(text, "h̄ = {} = 2 − μ̄", rational::display(&s.h_bar));
    let _ = writeln!(
        text,
        "2 pi / Omega_bar = {:.12}, area sum = {:.12}",
        2.0 * std::f64::consts::PI / s.omega_bar,
        s.area_sum
    );
    Ok(Outcome { text, ok })
}
