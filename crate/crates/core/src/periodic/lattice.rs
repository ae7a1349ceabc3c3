use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::RationalPoint;
use crate::rational::Q;

/// Translation lattice spanned by the rows `L_1..L_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    rows: Vec<RationalPoint>,
    inv: Vec<Vec<Q>>,
    det: Q,
}

impl Lattice {
    pub fn new(rows: Vec<RationalPoint>) -> Result<Self> {
        let d = rows.len();
        if !(2..=3).contains(&d) || rows.iter().any(|r| r.dim() != d) {
            return Err(Error::InvalidTiling("lattice must be d vectors of length d, d = 2 or 3".into()));
        }
        let m: Vec<Vec<Q>> = rows.iter().map(|r| r.coords().to_vec()).collect();
        let (inv, det) = invert(&m).ok_or_else(|| Error::InvalidTiling("lattice vectors are dependent".into()))?;
        Ok(Lattice { rows, inv, det })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[RationalPoint] {
        &self.rows
    }

    /// Volume of the fundamental parallelepiped.
    pub fn covolume(&self) -> Q {
        self.det.abs()
    }

    /// Lattice coordinates `mu` with `x = sum mu_i L_i`.
    pub fn to_lattice(&self, x: &RationalPoint) -> Vec<Q> {
        let d = self.dim();
        (0..d).map(|j| (0..d).fold(Q::zero(), |s, i| s + &x.coords()[i] * &self.inv[i][j])).collect()
    }

    pub fn to_cartesian(&self, mu: &[Q]) -> RationalPoint {
        let d = self.dim();
        RationalPoint::new(
            (0..d).map(|j| (0..d).fold(Q::zero(), |s, i| s + &mu[i] * &self.rows[i].coords()[j])).collect(),
        )
    }

    pub fn translation(&self, shift: &[i64]) -> RationalPoint {
        let mu: Vec<Q> = shift.iter().map(|&s| Q::from_integer(s.into())).collect();
        self.to_cartesian(&mu)
    }
}

/// Inverse and determinant of a small rational matrix.
fn invert(m: &[Vec<Q>]) -> Option<(Vec<Vec<Q>>, Q)> {
    let d = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..d).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let mut det = Q::one();
    for col in 0..d {
        let p = (col..d).find(|&r| !a[r][col].is_zero())?;
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for x in a[col].iter_mut() {
            *x /= &pv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some((a.into_iter().map(|r| r[d..].to_vec()).collect(), det))
}
