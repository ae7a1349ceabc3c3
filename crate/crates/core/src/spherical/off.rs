//! OFF text: an optional `OFF` header, a line `V F E`, `V` coordinate lines
//! and `F` facet lines `k i_1 ... i_k`. `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geom::FloatPolyhedron;

pub fn parse_off(text: &str) -> Result<FloatPolyhedron> {
    let mut tokens = text.lines().map(|l| l.split('#').next().unwrap_or("")).flat_map(str::split_whitespace).peekable();
    if tokens.peek() == Some(&"OFF") {
        tokens.next();
    }
    let mut next = |what: &str| tokens.next().ok_or_else(|| Error::Parse(format!("OFF: missing {what}")));
    let int = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("OFF: bad count `{s}`")));
    let nv = int(next("vertex count")?)?;
    let nf = int(next("facet count")?)?;
    int(next("edge count")?)?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let mut p = [0.0; 3];
        for c in &mut p {
            let s = next("coordinate")?;
            *c = s.parse().map_err(|_| Error::Parse(format!("OFF: bad coordinate `{s}`")))?;
        }
        vertices.push(p);
    }
    let mut facets = Vec::with_capacity(nf);
    for _ in 0..nf {
        let k = int(next("facet size")?)?;
        if k < 3 {
            return Err(Error::Parse("OFF: facet with fewer than 3 vertices".into()));
        }
        let mut f = Vec::with_capacity(k);
        for _ in 0..k {
            let i = int(next("facet index")?)?;
            if i >= nv {
                return Err(Error::Parse(format!("OFF: vertex index {i} out of range")));
            }
            f.push(i);
        }
        facets.push(f);
    }
    let p = FloatPolyhedron::from_faces(vertices, facets);
    let mut uses: BTreeMap<[usize; 2], usize> = BTreeMap::new();
    for f in p.facets() {
        for (k, &a) in f.iter().enumerate() {
            let b = f[(k + 1) % f.len()];
            *uses.entry([a.min(b), a.max(b)]).or_default() += 1;
        }
    }
    if uses.values().any(|&u| u != 2) || !p.euler_ok() {
        return Err(Error::Parse("OFF: facets do not bound a polyhedron".into()));
    }
    Ok(p)
}

pub fn to_off(p: &FloatPolyhedron) -> String {
    let mut s = String::from("OFF\n");
    let _ = writeln!(s, "{} {} {}", p.num_vertices(), p.facets().len(), p.edges().len());
    for v in p.vertices() {
        let _ = writeln!(s, "{} {} {}", v[0], v[1], v[2]);
    }
    for f in p.facets() {
        let idx: Vec<String> = f.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{} {}", f.len(), idx.join(" "));
    }
    s
}
