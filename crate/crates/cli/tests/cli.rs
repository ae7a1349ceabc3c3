use std::process::{Command, Output};

use mosaic_cli::plane::{to_csv, to_svg, Axes, PlaneRow, CSV_HEADER};
use mosaic_core::rational::{self, q, qi};
use mosaic_core::tables::Source;

fn mosaic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mosaic")).args(args).env_remove("MOSAIC_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stats_cubic_first_line() {
    let o = mosaic(&["stats", "cubic"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("8 8 6 4"));
}

#[test]
fn stats_snub_square_prism_exact() {
    let o = mosaic(&["stats", "prism:snub_square", "--exact"]);
    assert_eq!(stdout(&o).lines().next(), Some("10 20/3 16/3 4"));
}

#[test]
fn construct_round_trips_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic.json");
    let p = path.to_str().unwrap();
    let o = mosaic(&["construct", "cubic", "--out", p]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("cells per period: 1"));
    let s = mosaic(&["stats", p]);
    assert_eq!(stdout(&s).lines().next(), Some("8 8 6 4"));
}

#[test]
fn construct_records_face_to_face_flag() {
    let o = mosaic(&["construct", "alternated_cubic", "--out", "/dev/null"]);
    assert!(stdout(&o).contains("face_to_face: true"));
    let o = mosaic(&["construct", "brick_wall_3d", "--out", "/dev/null"]);
    assert!(stdout(&o).contains("face_to_face: false"));
}

#[test]
fn nij_check_has_zero_difference() {
    for name in ["cubic", "alternated_cubic", "bitruncated_cubic"] {
        let o = mosaic(&["nij", name, "--check"]);
        assert!(o.status.success(), "{name}");
        assert!(stdout(&o).contains("zero difference"));
    }
}

#[test]
fn verify_commands_exit_zero() {
    for args in [
        vec!["verify", "table1", "--arithmetic"],
        vec!["verify", "table1"],
        vec!["verify", "table2"],
        vec!["verify", "angles", "cubic", "--tol", "1e-9"],
    ] {
        let o = mosaic(&args);
        assert!(o.status.success(), "{args:?}: {}", stdout(&o));
    }
    assert!(stdout(&mosaic(&["verify", "table1", "--arithmetic"])).contains("62/62"));
    assert!(stdout(&mosaic(&["verify", "table2"])).contains("11/11"));
}

#[test]
fn verify_is_idempotent() {
    let a = mosaic(&["verify", "table2"]);
    let b = mosaic(&["verify", "table2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mosaic(&["stats", "no_such_mosaic"]).status.code(), Some(2));
    assert_eq!(mosaic(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mosaic(&["mix", "--lambda", "x/y"]).status.code(), Some(2));
}

#[test]
fn out_of_range_mix_fails() {
    assert_eq!(mosaic(&["mix", "--lambda", "3/2"]).status.code(), Some(1));
    assert_eq!(mosaic(&["mix", "--target", "5"]).status.code(), Some(1));
}

#[test]
fn mix_unit_lambda_is_cubic() {
    let o = mosaic(&["mix", "--lambda", "1"]);
    assert!(stdout(&o).contains("h_bar = 4"));
}

#[test]
fn iterate_foam_matches_recursion() {
    let o = mosaic(&["iterate", "foam", "bitruncated_cubic", "-k", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let measured: Vec<&str> = text.lines().skip(1).map(|l| l.split(' ').nth(2).unwrap()).collect();
    assert_eq!(measured, ["24", "96/7", "384/31"]);
}

#[test]
fn sphere_cube_identity() {
    let o = mosaic(&["sphere", "cube"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("h̄ = 12/7 = 2 − μ̄"));
}

#[test]
fn sphere_reads_off_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tet.off");
    std::fs::write(&path, "OFF\n4 4 6\n1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n3 0 1 2\n3 0 3 1\n3 0 2 3\n3 1 3 2\n")
        .unwrap();
    let o = mosaic(&["sphere", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // 4 cells, 4 nodes: mu = 4/8
    assert!(stdout(&o).contains("h̄ = 3/2 = 2 − μ̄"));
}

#[test]
fn random_seed_env_overrides_flag() {
    let run = |env: Option<&str>, seed: &str| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_mosaic"));
        c.args(["random", "voronoi", "--points", "200", "--reps", "2", "--seed", seed]);
        match env {
            Some(v) => c.env("MOSAIC_SEED", v),
            None => c.env_remove("MOSAIC_SEED"),
        };
        c.output().unwrap().stdout
    };
    assert_eq!(run(Some("5"), "9"), run(None, "5"));
    assert_ne!(run(None, "9"), run(None, "5"));
    let text = String::from_utf8(run(None, "3")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 2 + 2);
    assert!(lines[3].starts_with("mean,"));
    for l in &lines[1..3] {
        assert_eq!(l.split(',').nth(3), Some("4.000000"));
    }
}

#[test]
fn plane_csv_h_column_identity() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("plane.csv");
    let o = mosaic(&["plane", "--set", "all", "--csv", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let mut rows = 0;
    for l in lines {
        let f: Vec<&str> = l.split(',').collect();
        assert_eq!(f.len(), 9, "{l}");
        let n = rational::parse(f[6]).unwrap();
        let v = rational::parse(f[7]).unwrap();
        let h = &n * &v / (&n + &v);
        assert_eq!(f[5], format!("{:.6}", rational::to_f64(&h)), "{l}");
        assert_eq!(f[2], format!("{:.6}", rational::to_f64(&n)));
        rows += 1;
    }
    assert!(rows >= 62);
}

#[test]
fn empty_set_gives_header_only_csv() {
    assert_eq!(to_csv(&[]), format!("{CSV_HEADER}\n"));
}

#[test]
fn svg_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let csv = dir.path().join(format!("{name}.csv"));
        let svg = dir.path().join(format!("{name}.svg"));
        let o = mosaic(&["plane", "--set", "table1", "--csv", csv.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
        assert!(o.status.success());
        std::fs::read(svg).unwrap()
    };
    let a = run("a");
    assert_eq!(a, run("b"));
    let s = String::from_utf8(a).unwrap();
    assert!(s.contains(r#"viewBox="0 0 800 600""#));
    assert_eq!(s.matches("<circle").count(), 62);
    assert_eq!(s.matches("stroke-dasharray").count(), 2);
}

fn polylines(svg: &str) -> Vec<Vec<(f64, f64)>> {
    svg.lines()
        .filter(|l| l.starts_with("<polyline"))
        .map(|l| {
            let pts = l.split("points=\"").nth(1).unwrap().trim_end_matches("\"/>");
            pts.split(' ')
                .map(|p| {
                    let (x, y) = p.split_once(',').unwrap();
                    (x.parse().unwrap(), y.parse().unwrap())
                })
                .collect()
        })
        .collect()
}

fn row(f: i64, v: i64) -> PlaneRow {
    PlaneRow {
        id: "t".into(),
        name: "t".into(),
        n_bar: qi(3),
        v_bar: qi(v),
        f_bar: qi(f),
        h_bar: q(3 * v, 3 + v),
        source: Source::Constructed,
    }
}

fn circles(svg: &str) -> Vec<(f64, f64)> {
    svg.lines()
        .filter(|l| l.starts_with("<circle"))
        .map(|l| {
            let attr = |k: &str| -> f64 {
                l.split(&format!("{k}=\"")).nth(1).unwrap().split('"').next().unwrap().parse().unwrap()
            };
            (attr("cx"), attr("cy"))
        })
        .collect()
}

/// Distance in pixels from `p` to the polyline through `line`.
fn dist(line: &[(f64, f64)], p: (f64, f64)) -> f64 {
    line.windows(2)
        .map(|w| {
            let ((ax, ay), (bx, by)) = (w[0], w[1]);
            let (dx, dy) = (bx - ax, by - ay);
            let t = (((p.0 - ax) * dx + (p.1 - ay) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
            ((ax + t * dx - p.0).powi(2) + (ay + t * dy - p.1).powi(2)).sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn fv_lines_pass_through_cube_and_tetrahedron() {
    // cube: f = 6, v = 8 is simple; tetrahedron: f = v = 4 is both
    let svg = to_svg(&[row(6, 8), row(4, 4), row(8, 6)], Axes::Fv);
    let lines = polylines(&svg);
    assert_eq!(lines.len(), 2);
    let pts = circles(&svg);
    let (cube, tet, octa) = (pts[0], pts[1], pts[2]);
    assert!(dist(&lines[0], cube) < 0.05);
    assert!(dist(&lines[0], tet) < 0.05 && dist(&lines[1], tet) < 0.05);
    // octahedron: f = 8, v = 6 is simplicial
    assert!(dist(&lines[1], octa) < 0.05);
    assert!(dist(&lines[1], cube) > 1.0);
}

#[test]
fn nv_iso_curves_pass_through_known_points() {
    // h = 4 at (8, 8); h = 3 at (6, 6) and (4, 12)
    let svg = to_svg(&[row(0, 8), row(0, 6), row(0, 12)], Axes::Nv);
    let mut r = [row(0, 8), row(0, 6), row(0, 12)];
    r[0].n_bar = qi(8);
    r[1].n_bar = qi(6);
    r[2].n_bar = qi(4);
    let svg2 = to_svg(&r, Axes::Nv);
    assert_ne!(svg, svg2);
    let lines = polylines(&svg2);
    assert_eq!(lines.len(), 2);
    let pts = circles(&svg2);
    assert!(dist(&lines[1], pts[0]) < 0.05);
    assert!(dist(&lines[0], pts[1]) < 0.05);
    assert!(dist(&lines[0], pts[2]) < 0.05);
}
