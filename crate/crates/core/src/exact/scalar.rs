use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::dual::Dual;
use super::rational::{int, sqrt_exact, to_f64, Rational};

/// The number types geometry code is generic over: exact rationals, dual
/// numbers for exact first derivatives, and `f64` for float mode.
///
/// Division by a value whose primal part is zero panics for the exact types;
/// callers check with [`Scalar::is_zero_value`] first.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    /// Sign of the primal part.
    fn sign(&self) -> Ordering;

    /// Square root of a non-negative primal part, if representable.
    fn sqrt(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    fn is_zero_value(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    fn is_positive_value(&self) -> bool {
        self.sign() == Ordering::Greater
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn sqrt(&self) -> Option<Self> {
        sqrt_exact(self)
    }
}

impl Scalar for Dual {
    fn from_rational(q: &Rational) -> Self {
        Dual::constant(q.clone())
    }

    fn sign(&self) -> Ordering {
        self.value.sign()
    }

    /// d√u = du / (2√u); needs a positive, perfect-square primal part.
    fn sqrt(&self) -> Option<Self> {
        let s = sqrt_exact(&self.value)?;
        if s.is_zero() {
            return None;
        }
        let d = &self.derivative / (&s * int(2));
        Some(Dual::new(s, d))
    }
}

impl Scalar for f64 {
    fn from_rational(q: &Rational) -> Self {
        to_f64(q)
    }

    fn sign(&self) -> Ordering {
        self.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
    }

    fn sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| f64::sqrt(*self))
    }
}
