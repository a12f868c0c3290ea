//! Dual numbers `a + bε`, `ε² = 0`, over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual {
    pub value: Rational,
    pub derivative: Rational,
}

impl Dual {
    pub fn new(value: Rational, derivative: Rational) -> Self {
        Self { value, derivative }
    }

    pub fn constant(value: Rational) -> Self {
        Self { value, derivative: Rational::zero() }
    }

    /// Panics when the value part is zero.
    pub fn recip(&self) -> Self {
        let inv = self.value.recip();
        let d = -(&self.derivative * &inv * &inv);
        Self { value: inv, derivative: d }
    }
}

/// Seed a variable: `x + seed·ε`.
pub fn dual_lift(x: Rational, seed: Rational) -> Dual {
    Dual::new(x, seed)
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.value, self.derivative)
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, rhs: Dual) -> Dual {
        Dual::new(self.value + rhs.value, self.derivative + rhs.derivative)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, rhs: Dual) -> Dual {
        Dual::new(self.value - rhs.value, self.derivative - rhs.derivative)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, rhs: Dual) -> Dual {
        let d = &self.value * &rhs.derivative + &self.derivative * &rhs.value;
        Dual::new(self.value * rhs.value, d)
    }
}

impl Div for Dual {
    type Output = Dual;
    fn div(self, rhs: Dual) -> Dual {
        // (a + bε)/(c + dε) = a/c + (bc - ad)/c² ε
        let c2 = &rhs.value * &rhs.value;
        let d = (&self.derivative * &rhs.value - &self.value * &rhs.derivative) / c2;
        Dual::new(self.value / rhs.value, d)
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.value, -self.derivative)
    }
}

impl Zero for Dual {
    fn zero() -> Self {
        Dual::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.derivative.is_zero()
    }
}

impl One for Dual {
    fn one() -> Self {
        Dual::constant(Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn lift_examples() {
        let x = dual_lift(int(3), int(1));
        let sq = x.clone() * x;
        assert_eq!(sq, Dual::new(int(9), int(6)));

        let c = dual_lift(int(2), int(0));
        let y = c.clone() * c.clone() + c.clone() / (c - Dual::one());
        assert!(y.derivative.is_zero());

        let h = dual_lift(rat(1, 2), int(1));
        assert_eq!(h.recip(), Dual::new(int(2), int(-4)));
        assert_eq!(Dual::one() / dual_lift(rat(1, 2), int(1)), Dual::new(int(2), int(-4)));
    }
}
