//! Half-integer quantum numbers stored exactly as twice-values.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A half-integer spin quantum number `F` or projection `m`, stored as `2F`
/// so that half-integer values never touch floating point. All loops over
/// magnetic quantum numbers in this crate run over twice-values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    /// From a twice-value: `HalfInt::from_twice(3)` is `3/2`.
    pub const fn from_twice(twice: i32) -> Self {
        Self { twice }
    }

    /// From an integer value.
    pub const fn from_int(value: i32) -> Self {
        Self { twice: 2 * value }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Dimension `2F + 1` of the spin-`F` manifold. Panics on negative `F`.
    pub fn dim(self) -> usize {
        assert!(self.twice >= 0, "manifold dimension needs F >= 0");
        (self.twice + 1) as usize
    }

    /// Basis index of projection `m` under the fixed ordering
    /// `m = +F, +F-1, ..., -F`. Returns `None` when `m` is out of range or
    /// has the wrong parity for this manifold.
    pub fn index_of_m(self, m: HalfInt) -> Option<usize> {
        let d = self.twice - m.twice;
        if d < 0 || m.twice < -self.twice || d % 2 != 0 {
            return None;
        }
        Some((d / 2) as usize)
    }

    /// Projection `m` sitting at basis index `i`, inverse of [`Self::index_of_m`].
    pub fn m_at_index(self, i: usize) -> HalfInt {
        assert!(i < self.dim());
        HalfInt::from_twice(self.twice - 2 * i as i32)
    }

    /// Iterator over projections `m = +F ... -F` in basis order.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        let twice = self.twice;
        (0..self.dim()).map(move |i| HalfInt::from_twice(twice - 2 * i as i32))
    }

    pub fn abs(self) -> Self {
        Self { twice: self.twice.abs() }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}
