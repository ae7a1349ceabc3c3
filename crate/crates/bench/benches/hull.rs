use criterion::{black_box, criterion_group, criterion_main, Criterion};
use mosaic_core::geom::tetrahedral_decomposition;
use mosaic_core::rational::qi;
use mosaic_core::{ConvexPolytope, RationalPoint};

/// Vertices of the truncated octahedron: permutations of `(0, +-1, +-2)`.
fn truncated_octahedron() -> Vec<RationalPoint> {
    let mut pts = Vec::new();
    for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        for s1 in [-1, 1] {
            for s2 in [-1, 1] {
                let base = [0, s1, 2 * s2];
                pts.push(RationalPoint::new(perm.iter().map(|&i| qi(base[i])).collect()));
            }
        }
    }
    pts
}

fn bench(c: &mut Criterion) {
    let pts = truncated_octahedron();
    c.bench_function("exact hull, truncated octahedron", |b| b.iter(|| ConvexPolytope::hull(black_box(&pts)).unwrap()));
    let p = ConvexPolytope::hull(&pts).unwrap();
    c.bench_function("tetrahedral decomposition, truncated octahedron", |b| {
        b.iter(|| tetrahedral_decomposition(black_box(&p)).unwrap())
    });
}

criterion_group!(benches, bench);
criterion_main!(benches);
