//! Reference data for uniform honeycombs and regular honeycombs, with
//! checks against construction and against closed-form arithmetic.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::constructions::build;
use crate::error::{Error, Result};
use crate::formulas::{harmonic_degree, regular_honeycomb_stats, CurvatureClass};
use crate::rational::{self, q, qi, Q};

const TABLE1_CSV: &str = include_str!("../data/table1.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Constructed,
    Arithmetic,
    MonteCarlo,
}

impl Source {
    pub fn as_str(&self) -> &'static str {
        match self {
            Source::Constructed => "constructed",
            Source::Arithmetic => "arithmetic",
            Source::MonteCarlo => "monte-carlo",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    /// `"7"` for a honeycomb, `"7'"` for its dual.
    pub id: String,
    pub name: String,
    pub n_bar: Q,
    pub v_bar: Q,
    pub f_bar: Q,
    /// Harmonic degree as printed, two decimals.
    pub h_printed: Q,
    /// Builder name when the mosaic can be constructed.
    pub construct: Option<String>,
}

impl Table1Row {
    pub fn is_dual(&self) -> bool {
        self.id.ends_with('\'')
    }

    pub fn h_bar(&self) -> Q {
        harmonic_degree(&self.n_bar, &self.v_bar).expect("table degrees are positive")
    }

    pub fn source(&self) -> Source {
        if self.name.contains("Poisson") {
            Source::MonteCarlo
        } else if self.construct.is_some() {
            Source::Constructed
        } else {
            Source::Arithmetic
        }
    }
}

pub fn table1() -> Vec<Table1Row> {
    parse_table1(TABLE1_CSV).expect("bundled table parses")
}

fn parse_table1(text: &str) -> Result<Vec<Table1Row>> {
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let cols: Vec<&str> = line.split(',').collect();
            if cols.len() != 7 {
                return Err(Error::Parse(format!("table row `{line}`")));
            }
            Ok(Table1Row {
                id: cols[0].to_string(),
                name: cols[1].to_string(),
                n_bar: rational::parse(cols[2])?,
                v_bar: rational::parse(cols[3])?,
                f_bar: rational::parse(cols[4])?,
                h_printed: rational::parse(cols[5])?,
                construct: (!cols[6].is_empty()).then(|| cols[6].to_string()),
            })
        })
        .collect()
}

/// Tolerance for values printed with two decimals.
pub fn two_decimal_tol() -> Q {
    q(1, 200)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub id: String,
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn close(a: &Q, b: &Q, tol: &Q) -> bool {
    (a - b).abs() <= *tol
}

/// Recomputes `h` from each row's `(n, v)` and checks every dual row
/// against its primal: `n' = v`, `v' = n`, `f' = (f - 2) n / v + 2`.
pub fn verify_table1_arithmetic() -> Vec<RowCheck> {
    let rows = table1();
    let tol = two_decimal_tol();
    rows.iter()
        .map(|r| {
            let h = r.h_bar();
            let mut ok = close(&h, &r.h_printed, &tol);
            let mut detail = format!("h = {:.4} (printed {})", rational::to_f64(&h), rational::display(&r.h_printed));
            if r.is_dual() {
                let base = r.id.trim_end_matches('\'');
                match rows.iter().find(|p| p.id == base) {
                    Some(p) => {
                        let f_dual = (&p.f_bar - qi(2)) * &p.n_bar / &p.v_bar + qi(2);
                        let dual_ok = close(&r.n_bar, &p.v_bar, &tol)
                            && close(&r.v_bar, &p.n_bar, &tol)
                            && close(&r.f_bar, &f_dual, &tol);
                        ok &= dual_ok;
                        detail.push_str(&format!("; dual of {base}: f' = {:.4}", rational::to_f64(&f_dual)));
                    }
                    None => {
                        ok = false;
                        detail.push_str("; primal row missing");
                    }
                }
            }
            RowCheck { id: r.id.clone(), name: r.name.clone(), ok, detail }
        })
        .collect()
}

/// Builds every constructible row and compares measured `(n, v, f)` with
/// the stored values exactly.
pub fn verify_table1_geometric() -> Vec<RowCheck> {
    table1()
        .into_iter()
        .filter_map(|r| {
            let name = r.construct.clone()?;
            let check = match build(&name) {
                Ok(m) => {
                    let s = m.stats();
                    let ok = s.n_bar == r.n_bar
                        && s.v_bar == r.v_bar
                        && s.f_bar == r.f_bar
                        && close(&s.h_bar, &r.h_printed, &two_decimal_tol());
                    let detail = format!(
                        "{name}: n = {}, v = {}, f = {}, h = {}",
                        rational::display(&s.n_bar),
                        rational::display(&s.v_bar),
                        rational::display(&s.f_bar),
                        rational::display(&s.h_bar)
                    );
                    RowCheck { id: r.id.clone(), name: r.name.clone(), ok, detail }
                }
                Err(e) => RowCheck { id: r.id.clone(), name: r.name.clone(), ok: false, detail: e.to_string() },
            };
            Some(check)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table2Row {
    pub id: u32,
    pub cell: &'static str,
    pub node: &'static str,
    pub space: CurvatureClass,
    /// First printed degree column; it holds the cell degree.
    pub printed_first: u32,
    /// Second printed degree column; it holds the node degree.
    pub printed_second: u32,
    /// Printed three-decimal value, which equals `1/h`.
    pub printed_inv_h: Q,
    pub schlafli: (u32, u32, u32),
}

pub fn table2() -> Vec<Table2Row> {
    use CurvatureClass::*;
    let rows: [(u32, &str, &str, CurvatureClass, u32, u32, i64, (u32, u32, u32)); 11] = [
        (1, "cube", "octahedron", Euclidean, 8, 8, 250, (4, 3, 4)),
        (2, "icosahedron", "dodecahedron", Hyperbolic, 12, 12, 167, (3, 5, 3)),
        (3, "dodecahedron", "icosahedron", Hyperbolic, 20, 20, 100, (5, 3, 5)),
        (4, "cube", "icosahedron", Hyperbolic, 8, 20, 175, (4, 3, 5)),
        (5, "dodecahedron", "octahedron", Hyperbolic, 20, 8, 175, (5, 3, 4)),
        (6, "tetrahedron", "tetrahedron", Spherical, 4, 4, 500, (3, 3, 3)),
        (7, "octahedron", "cube", Spherical, 6, 6, 333, (3, 4, 3)),
        (8, "cube", "octahedron", Spherical, 8, 4, 375, (4, 3, 3)),
        (9, "tetrahedron", "octahedron", Spherical, 4, 8, 375, (3, 3, 4)),
        (10, "dodecahedron", "tetrahedron", Spherical, 20, 4, 300, (5, 3, 3)),
        (11, "tetrahedron", "icosahedron", Spherical, 4, 20, 300, (3, 3, 5)),
    ];
    rows.into_iter()
        .map(|(id, cell, node, space, a, b, inv, schlafli)| Table2Row {
            id,
            cell,
            node,
            space,
            printed_first: a,
            printed_second: b,
            printed_inv_h: q(inv, 1000),
            schlafli,
        })
        .collect()
}

/// Recomputes every regular honeycomb from its Schläfli symbol. The
/// printed degree columns are read as `(v, n)` and the printed harmonic
/// column as `1/h`.
pub fn verify_table2() -> Vec<RowCheck> {
    table2()
        .into_iter()
        .map(|r| {
            let (p, q_, s) = r.schlafli;
            let name = format!("{{{p},{q_},{s}}}");
            match regular_honeycomb_stats(p, q_, s) {
                Ok(st) => {
                    let inv = if st.h_bar.is_zero() { Q::zero() } else { st.h_bar.recip() };
                    let ok = st.v_bar == qi(r.printed_first as i64)
                        && st.n_bar == qi(r.printed_second as i64)
                        && st.curvature == r.space
                        && close(&inv, &r.printed_inv_h, &q(1, 2000));
                    let detail = format!(
                        "n = {}, v = {}, h = {}, 1/h = {:.4}, {}",
                        rational::display(&st.n_bar),
                        rational::display(&st.v_bar),
                        rational::display(&st.h_bar),
                        rational::to_f64(&inv),
                        st.curvature.name()
                    );
                    RowCheck { id: r.id.to_string(), name, ok, detail }
                }
                Err(e) => RowCheck { id: r.id.to_string(), name, ok: false, detail: e.to_string() },
            }
        })
        .collect()
}
