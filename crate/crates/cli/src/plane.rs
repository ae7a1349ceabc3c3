//! Rows of the symbolic plane and their CSV and SVG renderings.

use std::fmt::Write;

use mosaic_core::constructions::{build, face_to_face_3d_catalog};
use mosaic_core::formulas::harmonic_degree;
use mosaic_core::rational::{self, Q};
use mosaic_core::tables::{table1, Source};
use mosaic_core::Result;

pub const CSV_HEADER: &str = "id,name,n_bar,v_bar,f_bar,h_bar,n_bar_exact,v_bar_exact,source";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneRow {
    pub id: String,
    pub name: String,
    pub n_bar: Q,
    pub v_bar: Q,
    pub f_bar: Q,
    pub h_bar: Q,
    pub source: Source,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RowSet {
    Table1,
    Catalog,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Axes {
    Nv,
    Fv,
}

pub fn table1_rows() -> Vec<PlaneRow> {
    table1()
        .into_iter()
        .map(|r| PlaneRow {
            h_bar: r.h_bar(),
            source: r.source(),
            id: r.id,
            name: r.name,
            n_bar: r.n_bar,
            v_bar: r.v_bar,
            f_bar: r.f_bar,
        })
        .collect()
}

/// Measured rows for every built-in face-to-face 3D mosaic.
pub fn catalog_rows() -> Result<Vec<PlaneRow>> {
    face_to_face_3d_catalog()
        .into_iter()
        .enumerate()
        .map(|(i, name)| {
            let s = build(&name)?.stats();
            Ok(PlaneRow {
                id: format!("c{}", i + 1),
                name,
                n_bar: s.n_bar,
                v_bar: s.v_bar,
                f_bar: s.f_bar,
                h_bar: s.h_bar,
                source: Source::Constructed,
            })
        })
        .collect()
}

pub fn rows(set: RowSet) -> Result<Vec<PlaneRow>> {
    Ok(match set {
        RowSet::Table1 => table1_rows(),
        RowSet::Catalog => catalog_rows()?,
        RowSet::All => {
            let mut r = table1_rows();
            r.extend(catalog_rows()?);
            r
        }
    })
}

pub fn decimal(x: &Q) -> String {
    format!("{:.6}", rational::to_f64(x))
}

pub fn to_csv(rows: &[PlaneRow]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in rows {
        let h = harmonic_degree(&r.n_bar, &r.v_bar).expect("positive degrees");
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.id,
            r.name,
            decimal(&r.n_bar),
            decimal(&r.v_bar),
            decimal(&r.f_bar),
            decimal(&h),
            rational::to_string(&r.n_bar),
            rational::to_string(&r.v_bar),
            r.source
        );
    }
    s
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 60.0;

struct Frame {
    x_max: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, v: f64) -> f64 {
        MARGIN + v / self.x_max * (WIDTH - 2.0 * MARGIN)
    }
    fn y(&self, v: f64) -> f64 {
        HEIGHT - MARGIN - v / self.y_max * (HEIGHT - 2.0 * MARGIN)
    }
}

fn polyline(out: &mut String, frame: &Frame, pts: &[(f64, f64)], style: &str) {
    let coords: Vec<String> = pts
        .iter()
        .filter(|(x, y)| *x >= 0.0 && *x <= frame.x_max && *y >= 0.0 && *y <= frame.y_max)
        .map(|&(x, y)| format!("{:.2},{:.2}", frame.x(x), frame.y(y)))
        .collect();
    if coords.len() > 1 {
        let _ = writeln!(out, r#"<polyline fill="none" {style} points="{}"/>"#, coords.join(" "));
    }
}

/// Scatter plot with the `h = 3` and `h = 4` curves (nv axes) or the
/// simple and simplicial lines `f = v/2 + 2` and `f = 2v - 4` (fv axes).
pub fn to_svg(rows: &[PlaneRow], axes: Axes) -> String {
    let (frame, x_label, y_label) = match axes {
        Axes::Nv => (Frame { x_max: 30.0, y_max: 30.0 }, "n", "v"),
        Axes::Fv => (Frame { x_max: 20.0, y_max: 30.0 }, "f", "v"),
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let (x0, y0) = (frame.x(0.0), frame.y(0.0));
    let _ = writeln!(
        s,
        r#"<path d="M{x0:.2},{y0:.2} H{:.2} M{x0:.2},{y0:.2} V{:.2}" stroke="black" fill="none"/>"#,
        frame.x(frame.x_max),
        frame.y(frame.y_max)
    );
    let step = 5;
    for t in (0..=frame.x_max as i32).step_by(step) {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle">{t}</text>"#,
            frame.x(t as f64),
            y0 + 18.0
        );
    }
    for t in (0..=frame.y_max as i32).step_by(step) {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="end">{t}</text>"#,
            x0 - 8.0,
            frame.y(t as f64) + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="14" text-anchor="middle">{x_label}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(s, r#"<text x="15" y="{:.2}" font-size="14">{y_label}</text>"#, HEIGHT / 2.0);
    let samples = |f: &dyn Fn(f64) -> Option<(f64, f64)>| -> Vec<(f64, f64)> {
        (0..=600).filter_map(|i| f(frame.x_max * i as f64 / 600.0)).collect()
    };
    match axes {
        Axes::Nv => {
            for h in [3.0, 4.0] {
                let pts = samples(&|n| (n > h + 1e-9).then(|| (n, h * n / (n - h))));
                polyline(&mut s, &frame, &pts, r#"stroke="gray" stroke-dasharray="4 4""#);
            }
        }
        Axes::Fv => {
            // simple polyhedra: f = v/2 + 2, simplicial: f = 2v - 4
            let simple = samples(&|f| Some((f, 2.0 * f - 4.0)));
            let simplicial = samples(&|f| Some((f, (f + 4.0) / 2.0)));
            polyline(&mut s, &frame, &simple, r#"stroke="gray""#);
            polyline(&mut s, &frame, &simplicial, r#"stroke="gray""#);
        }
    }
    for r in rows {
        let x = match axes {
            Axes::Nv => rational::to_f64(&r.n_bar),
            Axes::Fv => rational::to_f64(&r.f_bar),
        };
        let y = rational::to_f64(&r.v_bar);
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="black"><title>{} {}</title></circle>"#,
            frame.x(x),
            frame.y(y),
            r.id,
            r.name
        );
    }
    s.push_str("</svg>\n");
    s
}
