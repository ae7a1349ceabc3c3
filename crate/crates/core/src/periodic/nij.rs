use num_traits::{One, Signed, Zero};

use super::PeriodicMosaic;
use crate::error::{Error, Result};
use crate::rational::{self, qi, Q};

/// `entries[i][j]`: average number of `j`-faces incident to an `i`-face of
/// a 3D mosaic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijMatrix {
    pub entries: [[Q; 4]; 4],
}

impl NijMatrix {
    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i][j]
    }

    /// `(v, f, n) = (n_30, n_32, n_03)`.
    pub fn params(&self) -> (Q, Q, Q) {
        (self.entries[3][0].clone(), self.entries[3][2].clone(), self.entries[0][3].clone())
    }

    pub fn dual(&self) -> NijMatrix {
        dual_nij(self)
    }

    /// Rows rendered as `p/q` text.
    pub fn rows_text(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(rational::display).collect()).collect()
    }
}

/// The incidence matrix of a 3D mosaic as a function of its cell degree
/// `v`, average facet count `f` and node degree `n`.
pub fn nij_from_params(v: &Q, f: &Q, n: &Q) -> Result<NijMatrix> {
    for (name, x) in [("v", v), ("f", f), ("n", n)] {
        if !x.is_positive() {
            return Err(Error::NonPositiveParameter(name));
        }
    }
    let one = Q::one();
    let two = qi(2);
    let fm2 = f - &two;
    let n01 = &fm2 * n / v + &two;
    let n02 = &fm2 * n / v + n;
    let denom = &fm2 * n + &two * v;
    if denom.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let n12 = &two * (v + f - &two) * n / denom;
    let n20 = &two * (v - &two) / f + &two;
    let n31 = v + f - &two;
    Ok(NijMatrix {
        entries: [
            [one.clone(), n01, n02, n.clone()],
            [two.clone(), one.clone(), n12.clone(), n12],
            [n20.clone(), n20, one.clone(), two],
            [v.clone(), n31, f.clone(), one],
        ],
    })
}

/// Matrix of the dual mosaic: `n_ij -> n_(3-i)(3-j)`.
pub fn dual_nij(a: &NijMatrix) -> NijMatrix {
    NijMatrix { entries: std::array::from_fn(|i| std::array::from_fn(|j| a.entries[3 - i][3 - j].clone())) }
}

impl PeriodicMosaic {
    /// Counts `n_ij` over one period: for `i < j` the incidences between
    /// `i`- and `j`-face orbits divided by the number of `i`-orbits, and
    /// symmetrically below the diagonal.
    pub fn measure_nij(&self) -> Result<NijMatrix> {
        if self.dim() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: self.dim() });
        }
        if !self.face_to_face() {
            return Err(Error::NotFaceToFace);
        }
        let t = self.topology();
        let counts: [Q; 4] = [
            qi(t.orbits[0].len() as i64),
            qi(t.orbits[1].len() as i64),
            qi(t.orbits[2].len() as i64),
            qi(self.cells().len() as i64),
        ];
        // inc[i][j] for i < j: incidences between i-faces and j-faces per period.
        let mut inc = [[0usize; 4]; 4];
        inc[0][1] = 2 * t.orbits[1].len();
        inc[0][2] = t.orbits[2].iter().map(Vec::len).sum();
        inc[1][2] = inc[0][2];
        for faces in &t.cell_faces {
            for i in 0..3 {
                inc[i][3] += faces[i].len();
            }
        }
        let mut e: [[Q; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| Q::one()));
        for i in 0..4 {
            for j in i + 1..4 {
                let x = qi(inc[i][j] as i64);
                e[i][j] = &x / &counts[i];
                e[j][i] = &x / &counts[j];
            }
        }
        Ok(NijMatrix { entries: e })
    }
}

pub fn measure_nij(m: &PeriodicMosaic) -> Result<NijMatrix> {
    m.measure_nij()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn formula_examples() {
        let m = nij_from_params(&qi(8), &qi(6), &qi(8)).unwrap();
        assert_eq!(m.entries[1][2], qi(4));
        assert_eq!(m.entries[0], [qi(1), qi(6), qi(12), qi(8)]);
        assert_eq!(m.entries[1], [qi(2), qi(1), qi(4), qi(4)]);
        assert_eq!(m.entries[3], [qi(8), qi(12), qi(6), qi(1)]);
        let t = nij_from_params(&qi(4), &qi(4), &qi(20)).unwrap();
        assert_eq!(t.entries[2][0], qi(3));
        let a = nij_from_params(&q(14, 3), &q(16, 3), &qi(14)).unwrap();
        assert_eq!(a.entries[2][1], qi(3));
        assert_eq!(a.entries[0][1], qi(12));
        assert_eq!(dual_nij(&dual_nij(&a)), a);
        assert!(nij_from_params(&qi(0), &qi(4), &qi(4)).is_err());
    }
}
