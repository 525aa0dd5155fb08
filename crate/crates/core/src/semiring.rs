//! Idempotent semifields.
//!
//! A semifield here is a commutative semiring `(X, 𝟘, 𝟙, ⊕, ⊗)` with
//! idempotent addition and a multiplicative inverse for every element other
//! than `𝟘`. Addition induces the order `a ≤ b ⇔ a ⊕ b = b`, which every
//! instance in this crate makes total.
//!
//! | Type | ⊕ | ⊗ | 𝟘 | 𝟙 |
//! |------|---|---|---|---|
//! | [`MaxPlus`] | max | + | −∞ | 0 |
//! | [`MinPlus`] | min | + | +∞ | 0 |
//! | [`MaxTimes`] | max | × | 0 | 1 |
//!
//! All carriers are `f64`. Values built from integers of magnitude below
//! 2⁵³ stay exact under ⊕ and ⊗ for the additive instances, so integer
//! examples reproduce bit for bit.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub trait Semifield: Copy + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, rhs: Self) -> Self;
    fn mul(self, rhs: Self) -> Self;

    /// Multiplicative inverse; fails only for `𝟘`.
    fn inv(self) -> Result<Self>;

    /// False for values outside the carrier (overflow to the missing top
    /// element, NaN).
    fn is_carrier(&self) -> bool;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// `a ≤ b` in the order induced by addition.
    fn leq(self, rhs: Self) -> bool {
        self.add(rhs) == rhs
    }

    fn lt(self, rhs: Self) -> bool {
        self != rhs && self.leq(rhs)
    }

    fn order(self, rhs: Self) -> Ordering {
        if self == rhs {
            Ordering::Equal
        } else if self.leq(rhs) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// `a ⊗ b⁻¹`.
    fn div(self, rhs: Self) -> Result<Self> {
        Ok(self.mul(rhs.inv()?))
    }

    /// `⊗` that reports results falling outside the carrier.
    fn checked_mul(self, rhs: Self) -> Result<Self> {
        let out = self.mul(rhs);
        if out.is_carrier() {
            Ok(out)
        } else {
            Err(Error::Overflow)
        }
    }

    /// ⊕-sum of an iterator; `𝟘` when empty.
    fn sum<I: IntoIterator<Item = Self>>(iter: I) -> Self {
        iter.into_iter().fold(Self::zero(), Self::add)
    }
}

fn fmt_real(v: f64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if v.fract() == 0.0 && v.abs() < 9.007_199_254_740_992e15 {
        write!(f, "{}", v as i64)
    } else {
        write!(f, "{v}")
    }
}

/// The max-plus semifield `ℝ ∪ {−∞}` with `⊕ = max` and `⊗ = +`.
#[derive(Clone, Copy, PartialEq, PartialOrd)]
pub struct MaxPlus(f64);

impl MaxPlus {
    pub const ZERO: MaxPlus = MaxPlus(f64::NEG_INFINITY);
    pub const ONE: MaxPlus = MaxPlus(0.0);

    /// Builds a carrier element. `−∞` maps to `𝟘`; `+∞` and NaN are rejected.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value == f64::INFINITY {
            return Err(Error::NotInCarrier(value.to_string()));
        }
        // collapse -0.0 so that 𝟙 has a single representation
        Ok(MaxPlus(value + 0.0))
    }

    pub fn finite(value: i64) -> Self {
        MaxPlus(value as f64)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The finite integer value, if this element has one.
    pub fn as_integer(self) -> Option<i64> {
        let v = self.0;
        (v.is_finite() && v.fract() == 0.0 && v.abs() < 9.007_199_254_740_992e15).then_some(v as i64)
    }
}

impl From<i64> for MaxPlus {
    fn from(v: i64) -> Self {
        MaxPlus::finite(v)
    }
}

impl fmt::Debug for MaxPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MaxPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == f64::NEG_INFINITY {
            f.write_str("-inf")
        } else {
            fmt_real(self.0, f)
        }
    }
}

impl Semifield for MaxPlus {
    fn zero() -> Self {
        Self::ZERO
    }
    fn one() -> Self {
        Self::ONE
    }
    fn add(self, rhs: Self) -> Self {
        if rhs.0 > self.0 {
            rhs
        } else {
            self
        }
    }
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            Self::ZERO
        } else {
            MaxPlus(self.0 + rhs.0)
        }
    }
    fn inv(self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::InversionOfZero)
        } else {
            Ok(MaxPlus(0.0 - self.0))
        }
    }
    fn is_carrier(&self) -> bool {
        !self.0.is_nan() && self.0 != f64::INFINITY
    }
    fn leq(self, rhs: Self) -> bool {
        self.0 <= rhs.0
    }
}

/// The min-plus semifield `ℝ ∪ {+∞}` with `⊕ = min` and `⊗ = +`.
///
/// Its induced order is the reverse of the numeric one.
#[derive(Clone, Copy, PartialEq)]
pub struct MinPlus(f64);

impl MinPlus {
    pub const ZERO: MinPlus = MinPlus(f64::INFINITY);
    pub const ONE: MinPlus = MinPlus(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value == f64::NEG_INFINITY {
            return Err(Error::NotInCarrier(value.to_string()));
        }
        Ok(MinPlus(value + 0.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Debug for MinPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MinPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == f64::INFINITY {
            f.write_str("+inf")
        } else {
            fmt_real(self.0, f)
        }
    }
}

impl Semifield for MinPlus {
    fn zero() -> Self {
        Self::ZERO
    }
    fn one() -> Self {
        Self::ONE
    }
    fn add(self, rhs: Self) -> Self {
        if rhs.0 < self.0 {
            rhs
        } else {
            self
        }
    }
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            Self::ZERO
        } else {
            MinPlus(self.0 + rhs.0)
        }
    }
    fn inv(self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::InversionOfZero)
        } else {
            Ok(MinPlus(0.0 - self.0))
        }
    }
    fn is_carrier(&self) -> bool {
        !self.0.is_nan() && self.0 != f64::NEG_INFINITY
    }
}

/// The max-times semifield `ℝ≥0` with `⊕ = max` and `⊗ = ×`.
#[derive(Clone, Copy, PartialEq)]
pub struct MaxTimes(f64);

impl MaxTimes {
    pub const ZERO: MaxTimes = MaxTimes(0.0);
    pub const ONE: MaxTimes = MaxTimes(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::NotInCarrier(value.to_string()));
        }
        Ok(MaxTimes(value + 0.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Debug for MaxTimes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MaxTimes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_real(self.0, f)
    }
}

impl Semifield for MaxTimes {
    fn zero() -> Self {
        Self::ZERO
    }
    fn one() -> Self {
        Self::ONE
    }
    fn add(self, rhs: Self) -> Self {
        if rhs.0 > self.0 {
            rhs
        } else {
            self
        }
    }
    fn mul(self, rhs: Self) -> Self {
        MaxTimes(self.0 * rhs.0)
    }
    fn inv(self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::InversionOfZero)
        } else {
            Ok(MaxTimes(1.0 / self.0))
        }
    }
    fn is_carrier(&self) -> bool {
        self.0.is_finite() && self.0 >= 0.0
    }
}
