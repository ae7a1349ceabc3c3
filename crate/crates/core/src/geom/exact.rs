//! Exact integer predicates.
//!
//! Rational coordinates are brought to a common denominator and handled as
//! integer vectors. Determinants run in checked `i128` and fall back to
//! `BigInt` on overflow, so every sign returned here is exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::point::RationalPoint;
use crate::error::{Error, Result};
use crate::rational;

pub type IPoint = [i128; 3];

/// Integer image of a rational point set under a common scale.
#[derive(Clone, Debug)]
pub struct IntFrame {
    pub scale: BigInt,
    pub points: Vec<IPoint>,
}

// Keeps every dot product of a cross-product normal with a point inside i128.
pub const COORD_LIMIT: i128 = 1 << 40;

impl IntFrame {
    pub fn new(points: &[RationalPoint]) -> Result<Self> {
        let scale = rational::lcm_denominators(points.iter().flat_map(|p| p.coords()));
        Self::with_scale(points, scale)
    }

    pub fn with_scale(points: &[RationalPoint], scale: BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(points.len());
        for p in points {
            out.push(to_int(p, &scale)?);
        }
        Ok(IntFrame { scale, points: out })
    }

    pub fn to_f64(&self, p: &IPoint) -> [f64; 3] {
        let s = self.scale.to_f64().unwrap_or(f64::NAN);
        [p[0] as f64 / s, p[1] as f64 / s, p[2] as f64 / s]
    }
}

/// Scales `p` by `scale` and returns the integer vector (padded with zeros).
pub fn to_int(p: &RationalPoint, scale: &BigInt) -> Result<IPoint> {
    let mut out = [0i128; 3];
    for (o, c) in out.iter_mut().zip(p.coords()) {
        let v = c * rational::Q::from_integer(scale.clone());
        if !v.is_integer() {
            return Err(Error::InvalidTiling("coordinate not on the integer frame".into()));
        }
        let v = v.to_integer();
        let v = v.to_i128().ok_or(Error::CoordinateOverflow)?;
        if v.abs() >= COORD_LIMIT {
            return Err(Error::CoordinateOverflow);
        }
        *o = v;
    }
    Ok(out)
}

pub fn sub(a: &IPoint, b: &IPoint) -> IPoint {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn add(a: &IPoint, b: &IPoint) -> IPoint {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn big(v: &IPoint) -> [BigInt; 3] {
    [BigInt::from(v[0]), BigInt::from(v[1]), BigInt::from(v[2])]
}

fn cross_checked(u: &IPoint, v: &IPoint) -> Option<IPoint> {
    let c = |a: i128, b: i128, c: i128, d: i128| a.checked_mul(b)?.checked_sub(c.checked_mul(d)?);
    Some([c(u[1], v[2], u[2], v[1])?, c(u[2], v[0], u[0], v[2])?, c(u[0], v[1], u[1], v[0])?])
}

fn dot_checked(u: &IPoint, v: &IPoint) -> Option<i128> {
    u[0].checked_mul(v[0])?.checked_add(u[1].checked_mul(v[1])?)?.checked_add(u[2].checked_mul(v[2])?)
}

fn cross_big(u: &[BigInt; 3], v: &[BigInt; 3]) -> [BigInt; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

fn dot_big(u: &[BigInt; 3], v: &[BigInt; 3]) -> BigInt {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

/// Sign of `det[u, v, w]`.
pub fn det3_sign(u: &IPoint, v: &IPoint, w: &IPoint) -> Ordering {
    if let Some(d) = cross_checked(u, v).and_then(|c| dot_checked(&c, w)) {
        return d.cmp(&0);
    }
    let d = dot_big(&cross_big(&big(u), &big(v)), &big(w));
    d.sign_cmp()
}

/// Sign of the volume of `(b-a, c-a, d-a)`; positive when `d` lies on the
/// side of plane `abc` that the right-hand normal points to.
pub fn orient3(a: &IPoint, b: &IPoint, c: &IPoint, d: &IPoint) -> Ordering {
    det3_sign(&sub(b, a), &sub(c, a), &sub(d, a))
}

/// Sign of the z-component of `(b-a) x (c-a)`.
pub fn orient2(a: &IPoint, b: &IPoint, c: &IPoint) -> Ordering {
    let u = sub(b, a);
    let v = sub(c, a);
    match u[0].checked_mul(v[1]).zip(u[1].checked_mul(v[0])) {
        Some((x, y)) => match x.checked_sub(y) {
            Some(z) => z.cmp(&0),
            None => x.cmp(&y),
        },
        None => {
            let z = BigInt::from(u[0]) * BigInt::from(v[1]) - BigInt::from(u[1]) * BigInt::from(v[0]);
            z.sign_cmp()
        }
    }
}

pub fn collinear(a: &IPoint, b: &IPoint, c: &IPoint) -> bool {
    let u = sub(b, a);
    let v = sub(c, a);
    match cross_checked(&u, &v) {
        Some(x) => x == [0, 0, 0],
        None => cross_big(&big(&u), &big(&v)).iter().all(|x| x.is_zero()),
    }
}

/// Normal of plane `abc` reduced by the gcd of its components, with
/// `offset = normal . a`. Returns `None` for collinear input or when the
/// reduced normal does not fit `i128` comfortably.
pub fn plane(a: &IPoint, b: &IPoint, c: &IPoint) -> Option<(IPoint, i128)> {
    let n = match cross_checked(&sub(b, a), &sub(c, a)) {
        Some(n) => n,
        None => {
            let nb = cross_big(&big(&sub(b, a)), &big(&sub(c, a)));
            let g = num_integer::Integer::gcd(&num_integer::Integer::gcd(&nb[0], &nb[1]), &nb[2]);
            if g.is_zero() {
                return None;
            }
            [(&nb[0] / &g).to_i128()?, (&nb[1] / &g).to_i128()?, (&nb[2] / &g).to_i128()?]
        }
    };
    if n == [0, 0, 0] {
        return None;
    }
    let g = gcd3(n);
    let n = [n[0] / g, n[1] / g, n[2] / g];
    let off = dot_checked(&n, a)?;
    Some((n, off))
}

pub fn gcd3(n: IPoint) -> i128 {
    let g = num_integer::Integer::gcd(&num_integer::Integer::gcd(&n[0], &n[1]), &n[2]);
    g.max(1)
}

/// `n . p` as a wide integer comparison against `off`.
pub fn side(n: &IPoint, off: i128, p: &IPoint) -> Ordering {
    match dot_checked(n, p) {
        Some(v) => v.cmp(&off),
        None => dot_big(&big(n), &big(p)).cmp(&BigInt::from(off)),
    }
}

pub fn dot_wide(n: &IPoint, p: &IPoint) -> BigInt {
    match dot_checked(n, p) {
        Some(v) => BigInt::from(v),
        None => dot_big(&big(n), &big(p)),
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orient_signs() {
        let o = [0, 0, 0];
        let x = [1, 0, 0];
        let y = [0, 1, 0];
        assert_eq!(orient3(&o, &x, &y, &[0, 0, 1]), Ordering::Greater);
        assert_eq!(orient3(&o, &x, &y, &[0, 0, -1]), Ordering::Less);
        assert_eq!(orient3(&o, &x, &y, &[5, 7, 0]), Ordering::Equal);
        assert_eq!(orient2(&o, &x, &y), Ordering::Greater);
    }

    #[test]
    fn big_fallback_agrees() {
        let m = 1i128 << 100;
        let a = [0, 0, 0];
        let b = [m, 1, 0];
        let c = [1, m, 0];
        let d = [0, 0, m];
        assert_eq!(orient3(&a, &b, &c, &d), Ordering::Greater);
        assert!(collinear(&a, &[m, m, m], &[2, 2, 2]));
    }

    #[test]
    fn plane_is_reduced() {
        let (n, off) = plane(&[0, 0, 2], &[2, 0, 2], &[0, 2, 2]).unwrap();
        assert_eq!(n, [0, 0, 1]);
        assert_eq!(off, 2);
    }
}
