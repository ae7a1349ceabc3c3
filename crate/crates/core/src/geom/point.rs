use std::fmt;
use std::ops::{Add, Sub};

use num_traits::Zero;

use crate::rational::{self, Q};

/// A point with exact rational coordinates in `d = 2` or `d = 3` dimensions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    coords: Vec<Q>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Q>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        RationalPoint::new(c.iter().map(|&x| rational::qi(x)).collect())
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_fracs(c: &[(i64, i64)]) -> Self {
        RationalPoint::new(c.iter().map(|&(n, d)| rational::q(n, d)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        RationalPoint::new(vec![Q::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn scale(&self, s: &Q) -> Self {
        RationalPoint::new(self.coords.iter().map(|x| x * s).collect())
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Self, t: &Q) -> Self {
        RationalPoint::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + (b - a) * t).collect())
    }

    pub fn centroid<'a>(points: impl IntoIterator<Item = &'a RationalPoint>) -> Self {
        let mut it = points.into_iter();
        let first = it.next().expect("centroid of an empty point set").clone();
        let mut n = 1i64;
        let sum = it.fold(first, |acc, p| {
            n += 1;
            &acc + p
        });
        sum.scale(&rational::q(1, n))
    }

    pub fn dot(&self, other: &Self) -> Q {
        self.coords.iter().zip(&other.coords).fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Padded to three `f64` components.
    pub fn to_f64(&self) -> [f64; 3] {
        let mut out = [0.0; 3];
        for (o, c) in out.iter_mut().zip(&self.coords) {
            *o = rational::to_f64(c);
        }
        out
    }
}

impl<'a> Add<&'a RationalPoint> for &'a RationalPoint {
    type Output = RationalPoint;
    fn add(self, rhs: &RationalPoint) -> RationalPoint {
        RationalPoint::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a RationalPoint> for &'a RationalPoint {
    type Output = RationalPoint;
    fn sub(self, rhs: &RationalPoint) -> RationalPoint {
        RationalPoint::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rational::display).collect();
        write!(f, "({})", parts.join(", "))
    }
}
