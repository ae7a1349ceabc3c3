//! JSON interchange: rationals are written as `"p/q"` strings so that a
//! round trip is bit-exact.

use serde::{Deserialize, Serialize};

use super::{PeriodicMosaic, VertexRef};
use crate::error::{Error, Result};
use crate::geom::RationalPoint;
use crate::rational;

#[derive(Serialize, Deserialize)]
struct Doc {
    dimension: usize,
    lattice: Vec<Vec<String>>,
    vertices: Vec<Vec<String>>,
    cells: Vec<Vec<Ref>>,
    face_to_face: bool,
}

#[derive(Serialize, Deserialize)]
struct Ref {
    v: usize,
    shift: Vec<i64>,
}

impl PeriodicMosaic {
    pub fn to_json(&self) -> String {
        let d = self.dim();
        let doc = Doc {
            dimension: d,
            lattice: self
                .lattice()
                .rows()
                .iter()
                .map(|r| r.coords().iter().map(rational::to_string).collect())
                .collect(),
            vertices: self.vertices().iter().map(|v| v.iter().map(rational::to_string).collect()).collect(),
            cells: self
                .cells()
                .iter()
                .map(|c| c.iter().map(|r| Ref { v: r.v, shift: r.shift[..d].to_vec() }).collect())
                .collect(),
            face_to_face: self.face_to_face(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let d = doc.dimension;
        let parse_row = |row: &Vec<String>| -> Result<Vec<rational::Q>> {
            if row.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: row.len() });
            }
            row.iter().map(|s| rational::parse(s)).collect()
        };
        let lattice = doc.lattice.iter().map(|r| parse_row(r).map(RationalPoint::new)).collect::<Result<Vec<_>>>()?;
        let vertices = doc.vertices.iter().map(parse_row).collect::<Result<Vec<_>>>()?;
        let cells = doc
            .cells
            .iter()
            .map(|c| {
                c.iter()
                    .map(|r| {
                        if r.shift.len() != d {
                            return Err(Error::DimensionMismatch { expected: d, got: r.shift.len() });
                        }
                        let mut shift = [0; 3];
                        shift[..d].copy_from_slice(&r.shift);
                        Ok(VertexRef { v: r.v, shift })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PeriodicMosaic::from_parts(lattice, vertices, cells, Some(doc.face_to_face))
    }
}
