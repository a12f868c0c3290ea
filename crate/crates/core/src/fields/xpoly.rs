use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exact::{int, LambdaPoly, LambdaRat, Rational};

/// Exponent vector of a monomial in x⁰..x³.
///
/// Ordered graded-lexicographically: lower total degree first, then by
/// exponent of x⁰, x¹, … with higher powers first (x0*x0 < x0*x1 < x1*x1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u8; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn eval(&self, x: &[Rational; 4]) -> Rational {
        let mut acc = Rational::one();
        for (xi, &e) in x.iter().zip(&self.0) {
            for _ in 0..e {
                acc *= xi;
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                if !first {
                    write!(f, "*")?;
                }
                write!(f, "x{i}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Polynomial in x⁰..x³ with coefficients rational in λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    terms: BTreeMap<Monomial, LambdaRat>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<LambdaRat>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), LambdaRat::one())
    }

    pub fn term(m: Monomial, c: impl Into<LambdaRat>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &LambdaRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> LambdaRat {
        self.terms.get(m).cloned().unwrap_or_else(LambdaRat::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: &LambdaRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = &*existing + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &LambdaRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a.scale(c))).collect() }
    }

    /// ∂/∂x^i.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = *m;
            d.0[i] -= 1;
            out.add_term(d, &c.scale(&int(i64::from(e))));
        }
        out
    }

    /// Exact value at a point for a numeric λ.
    pub fn eval(&self, x: &[Rational; 4], lam: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c.eval(lam)? * m.eval(x);
        }
        Ok(acc)
    }

    /// Substitute a numeric λ, leaving a polynomial with constant coefficients.
    pub fn specialize(&self, lam: &Rational) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &LambdaRat::from(c.eval(lam)?));
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(&Monomial, &LambdaRat)> {
        self.terms.iter().next_back()
    }

    /// Multivariate division by a single polynomial in graded-lex order.
    /// The remainder vanishes exactly when `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &XPoly) -> Option<(XPoly, XPoly)> {
        let (dm, dc) = divisor.leading()?;
        let (dm, dc) = (*dm, dc.clone());
        let mut quotient = Self::zero();
        let mut remainder = Self::zero();
        let mut rest = self.clone();
        while let Some((m, c)) = rest.leading().map(|(m, c)| (*m, c.clone())) {
            if (0..4).all(|i| m.0[i] >= dm.0[i]) {
                let qm = Monomial(std::array::from_fn(|i| m.0[i] - dm.0[i]));
                let t = XPoly::term(qm, &c / &dc);
                rest = &rest - &(&t * divisor);
                quotient = &quotient + &t;
            } else {
                remainder.add_term(m, &c);
                rest.terms.remove(&m);
            }
        }
        Some((quotient, remainder))
    }

    /// Sign and magnitude of a single-term coefficient, for rendering.
    fn split_sign(c: &LambdaRat) -> (bool, LambdaRat) {
        if c.is_compound() {
            return (false, c.clone());
        }
        let neg = c.num().terms().next().is_some_and(|(_, q)| q.is_negative());
        if neg {
            (true, -c)
        } else {
            (false, c.clone())
        }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = Self::split_sign(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let compound = mag.is_compound();
            if m.degree() == 0 {
                if compound && self.terms.len() > 1 {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            } else if mag == LambdaRat::one() {
                write!(f, "{m}")?;
            } else if compound {
                write!(f, "({mag})*{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl From<LambdaPoly> for XPoly {
    fn from(p: LambdaPoly) -> Self {
        XPoly::constant(LambdaRat::from(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn graded_lex_order() {
        let mut ms = vec![
            Monomial([0, 1, 0, 0]),
            Monomial([2, 0, 0, 0]),
            Monomial([0, 0, 0, 0]),
            Monomial([1, 1, 0, 0]),
            Monomial([1, 0, 0, 0]),
            Monomial([0, 2, 0, 0]),
        ];
        ms.sort();
        let shown: Vec<String> = ms.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["1", "x0", "x1", "x0*x0", "x0*x1", "x1*x1"]);
    }

    #[test]
    fn derivative_and_eval() {
        // p = 3 x0² x1 - λ x2
        let p = &XPoly::term(Monomial([2, 1, 0, 0]), rat(3, 1))
            - &XPoly::term(Monomial::var(2), LambdaRat::lambda());
        assert_eq!(p.derivative(0), XPoly::term(Monomial([1, 1, 0, 0]), rat(6, 1)));
        let x = [rat(1, 2), rat(2, 1), rat(5, 1), rat(0, 1)];
        assert_eq!(p.eval(&x, &rat(1, 5)).unwrap(), rat(3, 2) - rat(1, 1));
    }

    #[test]
    fn division_by_quadratic_form() {
        let q = (1..4).fold(&XPoly::var(0) * &XPoly::var(0), |acc, i| &acc - &(&XPoly::var(i) * &XPoly::var(i)));
        let f = &XPoly::term(Monomial::var(1), LambdaRat::lambda()) + &XPoly::constant(rat(2, 3));
        let (quot, rem) = (&f * &q).div_rem(&q).unwrap();
        assert_eq!(quot, f);
        assert!(rem.is_zero());
        let (_, rem) = (&(&f * &q) + &XPoly::var(2)).div_rem(&q).unwrap();
        assert_eq!(rem, XPoly::var(2));
        assert!(f.div_rem(&XPoly::zero()).is_none());
    }

    #[test]
    fn rendering() {
        let p = &XPoly::constant(rat(1, 1)) - &XPoly::term(Monomial([2, 0, 0, 0]), LambdaRat::lambda());
        assert_eq!(p.to_string(), "1 - λ*x0*x0");
        let q = XPoly::term(Monomial([1, 1, 0, 0]), -LambdaRat::lambda());
        assert_eq!(q.to_string(), "-λ*x0*x1");
        assert_eq!(XPoly::zero().to_string(), "0");
    }
}
