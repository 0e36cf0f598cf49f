//! Dual quaternions `q_st + q_I·ε`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::dual::{DualNumber, APPRECIABLE_TOL};
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Imaginary residue allowed in the ε-coefficient of [`DualQuaternion::magnitude`].
const MAGNITUDE_RESIDUE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DualQuaternion {
    pub std: Quaternion,
    pub inf: Quaternion,
}

impl DualQuaternion {
    pub const ZERO: Self = Self::new(Quaternion::ZERO, Quaternion::ZERO);
    pub const ONE: Self = Self::new(Quaternion::ONE, Quaternion::ZERO);

    #[inline]
    pub const fn new(std: Quaternion, inf: Quaternion) -> Self {
        Self { std, inf }
    }

    /// A quaternion with zero infinitesimal part.
    #[inline]
    pub const fn from_std(std: Quaternion) -> Self {
        Self::new(std, Quaternion::ZERO)
    }

    /// A purely infinitesimal value `q·ε`.
    #[inline]
    pub const fn from_inf(inf: Quaternion) -> Self {
        Self::new(Quaternion::ZERO, inf)
    }

    pub fn from_dual(d: DualNumber) -> Self {
        Self::new(Quaternion::real(d.std), Quaternion::real(d.inf))
    }

    pub fn is_appreciable(self) -> bool {
        self.std.norm() > APPRECIABLE_TOL
    }

    pub fn conj(self) -> Self {
        Self::new(self.std.conj(), self.inf.conj())
    }

    /// Real part as a dual number `(Re q_st) + (Re q_I)ε`.
    pub fn re(self) -> DualNumber {
        DualNumber::new(self.std.w, self.inf.w)
    }

    /// Dual-number magnitude.
    ///
    /// For appreciable `q` this is `|q_st| + Re(q_st·conj(q_I))/|q_st|·ε`,
    /// otherwise `|q_I|·ε`. The ε-coefficient `(q_st q̄_I + q_I q̄_st)/(2|q_st|)`
    /// is real by construction; its imaginary residue is checked in debug builds.
    pub fn magnitude(self) -> DualNumber {
        let n = self.std.norm();
        if n != 0.0 {
            let cross = self.std * self.inf.conj();
            debug_assert!(
                (cross + self.inf * self.std.conj()).im().norm() <= MAGNITUDE_RESIDUE_TOL * (1.0 + cross.norm()),
                "imaginary residue in magnitude"
            );
            DualNumber::new(n, cross.w / n)
        } else {
            DualNumber::new(0.0, self.inf.norm())
        }
    }

    /// `q⁻¹ = q_st⁻¹ - q_st⁻¹ q_I q_st⁻¹ ε`.
    pub fn inverse(self) -> Result<Self> {
        if !self.is_appreciable() {
            return Err(Error::NonInvertible("infinitesimal dual quaternion"));
        }
        let s = self.std.inverse()?;
        Ok(Self::new(s, -(s * self.inf * s)))
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.std.scale(s), self.inf.scale(s))
    }

    /// Multiplication by a dual number (which commutes with everything).
    pub fn scale_dual(self, d: DualNumber) -> Self {
        Self::new(self.std.scale(d.std), self.inf.scale(d.std) + self.std.scale(d.inf))
    }

    pub fn is_finite(self) -> bool {
        self.std.is_finite() && self.inf.is_finite()
    }
}

impl fmt::Display for DualQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})ε", self.std, self.inf)
    }
}

impl From<Quaternion> for DualQuaternion {
    fn from(q: Quaternion) -> Self {
        Self::from_std(q)
    }
}

impl From<DualNumber> for DualQuaternion {
    fn from(d: DualNumber) -> Self {
        Self::from_dual(d)
    }
}

impl Add for DualQuaternion {
    type Output = Self;
    #[inline]
    fn add(self, r: Self) -> Self {
        Self::new(self.std + r.std, self.inf + r.inf)
    }
}

impl Sub for DualQuaternion {
    type Output = Self;
    #[inline]
    fn sub(self, r: Self) -> Self {
        Self::new(self.std - r.std, self.inf - r.inf)
    }
}

impl Neg for DualQuaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.std, -self.inf)
    }
}

impl Mul for DualQuaternion {
    type Output = Self;
    #[inline]
    fn mul(self, r: Self) -> Self {
        Self::new(self.std * r.std, self.std * r.inf + self.inf * r.std)
    }
}

impl AddAssign for DualQuaternion {
    fn add_assign(&mut self, r: Self) {
        *self = *self + r;
    }
}

impl SubAssign for DualQuaternion {
    fn sub_assign(&mut self, r: Self) {
        *self = *self - r;
    }
}

impl std::iter::Sum for DualQuaternion {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}
