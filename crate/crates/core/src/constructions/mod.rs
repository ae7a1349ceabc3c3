//! Generators for periodic mosaics and the iterative constructions.
//!
//! [`build`] accepts these names:
//!
//! * `cubic`, `alternated_cubic`, `bitruncated_cubic`, `hyperplane_generic`,
//!   `brick_wall_3d`, `brick_wall_2d`
//! * any planar tiling name (`square`, `hexagonal`, ...)
//! * `prism:<planar>`
//! * `barycentric:<name>`
//! * `foam:<k>:<name>` and `dualfoam:<k>:<name>` for `k` iterations

mod layered;
mod planar;
mod solid;
mod subdivide;

pub use layered::{
    harmonic_target, layered_mix, mix_h, partial_division_h, strip_stats, HarmonicPlan, LayerRecipe, MixStats,
};
pub use planar::{planar, PlanarTilingName};
pub use solid::{alternated_cubic, bitruncated_cubic, brick_wall_2d, brick_wall_3d, cubic, hyperplane_generic, prism};
pub use subdivide::{barycentric_subdivision, default_foam_eps, dual_foam_step, foam_step};

use crate::error::{Error, Result};
use crate::periodic::PeriodicMosaic;

pub fn build(name: &str) -> Result<PeriodicMosaic> {
    let unknown = || Error::UnknownName(name.to_string());
    if let Some(rest) = name.strip_prefix("prism:") {
        return prism(&planar(rest.parse()?)?);
    }
    if let Some(rest) = name.strip_prefix("barycentric:") {
        return barycentric_subdivision(&build(rest)?);
    }
    for (prefix, dual) in [("foam:", false), ("dualfoam:", true)] {
        if let Some(rest) = name.strip_prefix(prefix) {
            let (k, inner) = rest.split_once(':').ok_or_else(unknown)?;
            let k: usize = k.parse().map_err(|_| unknown())?;
            let mut m = build(inner)?;
            for _ in 0..k {
                m = if dual { dual_foam_step(&m)? } else { foam_step(&m, &default_foam_eps())? };
            }
            return Ok(m);
        }
    }
    match name {
        "cubic" => cubic(3),
        "alternated_cubic" => alternated_cubic(),
        "bitruncated_cubic" => bitruncated_cubic(),
        "hyperplane_generic" => hyperplane_generic(),
        "brick_wall_3d" => brick_wall_3d(),
        "brick_wall_2d" => brick_wall_2d(),
        other => planar(other.parse().map_err(|_| unknown())?),
    }
}

/// Names of the built-in 3D mosaics that are face-to-face.
pub fn face_to_face_3d_catalog() -> Vec<String> {
    let mut out: Vec<String> = ["cubic", "alternated_cubic", "bitruncated_cubic", "hyperplane_generic"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    out.extend(PlanarTilingName::ALL.iter().map(|p| format!("prism:{p}")));
    out.extend([
        "barycentric:cubic".to_string(),
        "foam:1:bitruncated_cubic".to_string(),
        "foam:2:bitruncated_cubic".to_string(),
        "dualfoam:1:barycentric:cubic".to_string(),
    ]);
    out
}
