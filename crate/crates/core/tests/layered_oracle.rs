//! Builds layered strips and partially divided mosaics cell by cell and
//! measures them with the generic periodic statistics.

use mosaic_core::constructions::{build, partial_division_h, strip_stats};
use mosaic_core::rational::{q, qi};
use mosaic_core::{PeriodicMosaic, RationalPoint, Q};

/// A face of the unit cube `[0,1]^2 x [z, z+1]`: `None` marks a free axis.
type Face = [Option<i64>; 3];

fn face_vertices(f: &Face, z: i64) -> Vec<RationalPoint> {
    let mut out = vec![vec![]];
    for (axis, fix) in f.iter().enumerate() {
        let off = if axis == 2 { z } else { 0 };
        let choices: Vec<i64> = match fix {
            Some(c) => vec![*c],
            None => vec![0, 1],
        };
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                choices.iter().map(move |&c| {
                    let mut p = p.clone();
                    p.push(c + off);
                    p
                })
            })
            .collect();
    }
    out.iter().map(|p| RationalPoint::from_ints(p)).collect()
}

/// Subdivides `f` by centroids of all faces except those for which `bare`
/// holds.
fn subdivide(f: &Face, z: i64, bare: &dyn Fn(&Face) -> bool) -> Vec<Vec<RationalPoint>> {
    let verts = face_vertices(f, z);
    if bare(f) || verts.len() == 1 {
        return vec![verts];
    }
    let c = RationalPoint::centroid(&verts);
    let mut out = Vec::new();
    for axis in 0..3 {
        if f[axis].is_some() {
            continue;
        }
        for side in [0, 1] {
            let mut g = *f;
            g[axis] = Some(side);
            for mut piece in subdivide(&g, z, bare) {
                piece.push(c.clone());
                out.push(piece);
            }
        }
    }
    out
}

/// Layer kinds: 1 cubic, 2 subdivided, 3 top face bare, 4 bottom face bare.
fn layer(kind: u8, z: i64) -> Vec<Vec<RationalPoint>> {
    let cube: Face = [None, None, None];
    let bare = move |f: &Face| match kind {
        1 => true,
        2 => false,
        3 => f[2] == Some(1),
        _ => f[2] == Some(0),
    };
    subdivide(&cube, z, &bare)
}

fn strip(k: u64, l: u64) -> PeriodicMosaic {
    let mut kinds = vec![1u8; k as usize];
    kinds.push(4);
    kinds.extend(std::iter::repeat_n(2, l as usize));
    kinds.push(3);
    let cells: Vec<_> = kinds.iter().enumerate().flat_map(|(z, &t)| layer(t, z as i64)).collect();
    let lattice = vec![
        RationalPoint::from_ints(&[1, 0, 0]),
        RationalPoint::from_ints(&[0, 1, 0]),
        RationalPoint::from_ints(&[0, 0, kinds.len() as i64]),
    ];
    PeriodicMosaic::from_cartesian(lattice, cells).unwrap()
}

#[test]
fn layer_cell_counts() {
    assert_eq!(layer(1, 0).len(), 1);
    assert_eq!(layer(2, 0).len(), 48);
    assert_eq!(layer(3, 0).len(), 37);
    assert_eq!(layer(4, 0).len(), 37);
}

#[test]
fn geometric_strips_match_closed_form() {
    for (k, l) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
        let m = strip(k, l);
        assert!(m.face_to_face(), "S({k},{l})");
        let s = m.stats();
        let c = strip_stats(k, l);
        assert_eq!(s.n_bar, c.n_bar, "S({k},{l})");
        assert_eq!(s.v_bar, c.v_bar, "S({k},{l})");
        assert_eq!(s.f_bar, c.f_bar, "S({k},{l})");
        assert_eq!(s.e_bar, c.e_bar, "S({k},{l})");
        assert_eq!(s.h_bar, c.h_bar, "S({k},{l})");
    }
}

fn divide_some(m: &PeriodicMosaic, count: usize) -> PeriodicMosaic {
    let mut cells = Vec::new();
    for (i, p) in m.polytopes().iter().enumerate() {
        let v = p.vertices();
        if i < count {
            let c = RationalPoint::centroid(v);
            for skip in 0..v.len() {
                let mut t: Vec<_> = v.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, x)| x.clone()).collect();
                t.push(c.clone());
                cells.push(t);
            }
        } else {
            cells.push(v.to_vec());
        }
    }
    PeriodicMosaic::from_cartesian(m.lattice().rows().to_vec(), cells).unwrap()
}

#[test]
fn partial_division_matches_formula() {
    let base = build("barycentric:cubic").unwrap();
    for j in [0usize, 1, 12, 30, 48] {
        let m = divide_some(&base, j);
        assert!(m.face_to_face());
        let sigma: Q = q(j as i64, 48);
        assert_eq!(m.stats().h_bar, partial_division_h(&qi(24), &sigma), "j={j}");
    }
}
