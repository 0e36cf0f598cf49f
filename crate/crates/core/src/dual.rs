//! Dual numbers `a + bε` with `ε² = 0`, their total order, absolute value,
//! square root and inverse.
//!
//! Arithmetic is exact in ε: every product drops second-order terms. The
//! ordering is lexicographic on `(std, inf)` and uses no tolerance, so it
//! stays a genuine total order; tolerances only enter when deciding whether a
//! value is appreciable.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default threshold on `|std|` below which a value counts as infinitesimal.
pub const APPRECIABLE_TOL: f64 = 1e-12;

/// A dual number `std + inf·ε`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DualNumber {
    /// Standard part.
    pub std: f64,
    /// Infinitesimal part.
    pub inf: f64,
}

impl DualNumber {
    pub const ZERO: Self = Self { std: 0.0, inf: 0.0 };
    pub const ONE: Self = Self { std: 1.0, inf: 0.0 };
    /// The infinitesimal unit ε.
    pub const EPSILON: Self = Self { std: 0.0, inf: 1.0 };

    #[inline]
    pub const fn new(std: f64, inf: f64) -> Self {
        Self { std, inf }
    }

    #[inline]
    pub const fn real(std: f64) -> Self {
        Self { std, inf: 0.0 }
    }

    #[inline]
    pub fn is_appreciable(self) -> bool {
        self.is_appreciable_with(APPRECIABLE_TOL)
    }

    #[inline]
    pub fn is_appreciable_with(self, tol: f64) -> bool {
        self.std.abs() > tol
    }

    #[inline]
    pub fn is_infinitesimal(self) -> bool {
        !self.is_appreciable()
    }

    /// `self^k` for an integer `k`: `std^k + k·std^(k-1)·inf·ε`.
    ///
    /// Negative powers require an appreciable base.
    pub fn powi(self, k: i32) -> Result<Self> {
        if k < 0 && !self.is_appreciable() {
            return Err(Error::NonInvertible("negative power of an infinitesimal dual number"));
        }
        if k == 0 {
            return Ok(Self::ONE);
        }
        let lead = self.std.powi(k - 1);
        Ok(Self::new(lead * self.std, f64::from(k) * lead * self.inf))
    }

    /// Absolute value: `|std| + sgn(std)·inf·ε`, or `|inf|·ε` when `std = 0`.
    pub fn abs(self) -> Self {
        if self.std != 0.0 {
            Self::new(self.std.abs(), self.std.signum() * self.inf)
        } else {
            Self::new(0.0, self.inf.abs())
        }
    }

    /// Square root of a nonnegative dual number.
    ///
    /// Defined for appreciable positive values and for exact zero. A nonzero
    /// infinitesimal has no dual square root and is rejected.
    pub fn sqrt(self) -> Result<Self> {
        if self.std == 0.0 && self.inf == 0.0 {
            return Ok(Self::ZERO);
        }
        if self.compare(Self::ZERO) == Ordering::Less {
            return Err(Error::DomainError("square root of a negative dual number"));
        }
        if !self.is_appreciable() {
            return Err(Error::NonInvertible("square root of a nonzero infinitesimal dual number"));
        }
        let root = self.std.sqrt();
        Ok(Self::new(root, self.inf / (2.0 * root)))
    }

    /// Multiplicative inverse `1/std - (inf/std²)·ε`.
    pub fn inverse(self) -> Result<Self> {
        if !self.is_appreciable() {
            return Err(Error::NonInvertible("infinitesimal dual number"));
        }
        let r = 1.0 / self.std;
        Ok(Self::new(r, -r * self.inf * r))
    }

    /// Lexicographic total order on `(std, inf)`, with no tolerance.
    ///
    /// NaN parts are ordered with `f64::total_cmp`, which keeps the relation
    /// total even on garbage input.
    pub fn compare(self, other: Self) -> Ordering {
        match self.std.partial_cmp(&other.std) {
            Some(Ordering::Equal) => self.inf.partial_cmp(&other.inf).unwrap_or_else(|| self.inf.total_cmp(&other.inf)),
            Some(o) => o,
            None => self.std.total_cmp(&other.std),
        }
    }

    /// `self ≥ 0` in the total order.
    pub fn is_nonnegative(self) -> bool {
        self.compare(Self::ZERO) != Ordering::Less
    }

    /// `self > 0` in the total order.
    pub fn is_positive(self) -> bool {
        self.compare(Self::ZERO) == Ordering::Greater
    }

    /// `self ≥ other` where each part may fall short by at most `slack`.
    ///
    /// Used by numerical checks of order inequalities: the standard parts are
    /// compared with slack, and only when they agree within slack do the
    /// infinitesimal parts decide.
    pub fn ge_with_slack(self, other: Self, slack: f64) -> bool {
        let d = self - other;
        if d.std > slack {
            true
        } else if d.std < -slack {
            false
        } else {
            d.inf >= -slack
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self.compare(other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self.compare(other) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.std * s, self.inf * s)
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inf < 0.0 {
            write!(f, "{} - {}ε", self.std + 0.0, -self.inf)
        } else {
            write!(f, "{} + {}ε", self.std + 0.0, self.inf + 0.0)
        }
    }
}

impl From<f64> for DualNumber {
    fn from(v: f64) -> Self {
        Self::real(v)
    }
}

impl Add for DualNumber {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.std + rhs.std, self.inf + rhs.inf)
    }
}

impl Sub for DualNumber {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.std - rhs.std, self.inf - rhs.inf)
    }
}

impl Mul for DualNumber {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.std * rhs.std, self.std * rhs.inf + self.inf * rhs.std)
    }
}

impl Mul<f64> for DualNumber {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

/// Division by an appreciable dual number.
///
/// # Panics
/// Panics if `rhs` is infinitesimal; use [`DualNumber::inverse`] to handle
/// that case.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for DualNumber {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by an infinitesimal dual number")
    }
}

impl Neg for DualNumber {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.std, -self.inf)
    }
}

impl AddAssign for DualNumber {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for DualNumber {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for DualNumber {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for DualNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}
