//! Polynomials and rational functions in the formal curvature symbol λ = l⁻².

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Polynomial in λ with rational coefficients.
///
/// Stored densely in ascending order with no trailing zeros, so the zero
/// polynomial is the empty vector and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c·λ^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Non-zero `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, lam: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * lam + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn fmt_term(f: &mut fmt::Formatter<'_>, c: &Rational, k: usize, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        match k {
            0 => write!(f, "{}", format_rational(&mag)),
            _ => {
                if !mag.is_one() {
                    write!(f, "{}", format_rational(&mag))?;
                }
                if k == 1 {
                    write!(f, "λ")
                } else {
                    write!(f, "λ^{k}")
                }
            }
        }
    }

    /// Whether the rendering has more than one term (and so needs parentheses
    /// when used as a factor).
    pub fn is_compound(&self) -> bool {
        self.terms().count() > 1
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            Self::fmt_term(f, c, k, i == 0)?;
        }
        Ok(())
    }
}

impl Serialize for LambdaPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(None)?;
        for (k, c) in self.terms() {
            seq.serialize_element(&(format_rational(c), k))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LambdaPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(String, usize)> = Vec::deserialize(d)?;
        let mut p = LambdaPoly::zero();
        for (c, k) in pairs {
            let c = parse_rational(&c).map_err(serde::de::Error::custom)?;
            p = &p + &LambdaPoly::monomial(c, k);
        }
        Ok(p)
    }
}

impl Add for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LambdaPoly::from_coeffs(out)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Reduced rational function `num/den` in λ.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, and `den = 1` for the
/// zero function, so `==` is equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaRat {
    num: LambdaPoly,
    den: LambdaPoly,
}

impl LambdaRat {
    pub fn new(num: LambdaPoly, den: LambdaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LambdaPoly, den: LambdaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() == Some(0) {
            let inv = den.coeffs[0].recip();
            return Self { num: num.scale(&inv), den: LambdaPoly::one() };
        }
        let g = LambdaPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().expect("nonzero denominator").recip();
        Self { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn zero() -> Self {
        Self { num: LambdaPoly::zero(), den: LambdaPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(Rational::one())
    }

    pub fn lambda() -> Self {
        Self::from(LambdaPoly::lambda())
    }

    pub fn num(&self) -> &LambdaPoly {
        &self.num
    }

    pub fn den(&self) -> &LambdaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Exact evaluation; fails when the denominator vanishes at `lam`.
    pub fn eval(&self, lam: &Rational) -> Result<Rational> {
        let d = self.den.eval(lam);
        if d.is_zero() {
            return Err(Error::Pole { denominator: self.den.to_string(), lambda: lam.to_string() });
        }
        Ok(self.num.eval(lam) / d)
    }

    /// True when printing this value as a factor needs parentheses.
    pub fn is_compound(&self) -> bool {
        !self.is_polynomial() || self.num.is_compound()
    }
}

/// Exact evaluation of a rational function in λ.
pub fn lambda_eval(p: &LambdaRat, lam: &Rational) -> Result<Rational> {
    p.eval(lam)
}

impl From<Rational> for LambdaRat {
    fn from(c: Rational) -> Self {
        Self { num: LambdaPoly::constant(c), den: LambdaPoly::one() }
    }
}

impl From<LambdaPoly> for LambdaRat {
    fn from(p: LambdaPoly) -> Self {
        Self { num: p, den: LambdaPoly::one() }
    }
}

impl fmt::Display for LambdaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct LambdaRatRepr {
    num: LambdaPoly,
    den: LambdaPoly,
}

impl Serialize for LambdaRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LambdaRatRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LambdaRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = LambdaRatRepr::deserialize(d)?;
        LambdaRat::new(r.num, r.den).map_err(serde::de::Error::custom)
    }
}

impl Add for &LambdaRat {
    type Output = LambdaRat;
    fn add(self, rhs: &LambdaRat) -> LambdaRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return LambdaRat::reduce(&self.num + &rhs.num, self.den.clone());
        }
        LambdaRat::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &LambdaRat {
    type Output = LambdaRat;
    fn sub(self, rhs: &LambdaRat) -> LambdaRat {
        self + &(-rhs)
    }
}

impl Mul for &LambdaRat {
    type Output = LambdaRat;
    fn mul(self, rhs: &LambdaRat) -> LambdaRat {
        if self.is_zero() || rhs.is_zero() {
            return LambdaRat::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return LambdaRat { num: &self.num * &rhs.num, den: LambdaPoly::one() };
        }
        LambdaRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero, like the primitive numeric types.
impl Div for &LambdaRat {
    type Output = LambdaRat;
    fn div(self, rhs: &LambdaRat) -> LambdaRat {
        assert!(!rhs.is_zero(), "division of rational functions by zero");
        LambdaRat::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &LambdaRat {
    type Output = LambdaRat;
    fn neg(self) -> LambdaRat {
        LambdaRat { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($t:ty; $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(LambdaPoly; Add add, Sub sub, Mul mul);
forward_owned!(LambdaRat; Add add, Sub sub, Mul mul, Div div);

impl Neg for LambdaRat {
    type Output = LambdaRat;
    fn neg(self) -> LambdaRat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn poly(cs: &[i64]) -> LambdaPoly {
        LambdaPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(lambda_eval(&LambdaRat::lambda(), &rat(1, 25)).unwrap(), rat(1, 25));
        let two_lam_sq = LambdaRat::from(LambdaPoly::monomial(int(2), 2));
        assert_eq!(lambda_eval(&two_lam_sq, &rat(1, 2)).unwrap(), rat(1, 2));
        let inv = LambdaRat::lambda().recip().unwrap();
        assert!(matches!(lambda_eval(&inv, &int(0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn reduces_common_factors() {
        // (λ² - 1)/(2λ - 2) = (λ + 1)/2
        let r = LambdaRat::new(poly(&[-1, 0, 1]), poly(&[-2, 2])).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &LambdaPoly::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
        // denominator becomes monic
        let r = LambdaRat::new(poly(&[1]), poly(&[0, 3])).unwrap();
        assert_eq!(r.den(), &LambdaPoly::lambda());
        assert_eq!(r.num(), &LambdaPoly::constant(rat(1, 3)));
        assert_eq!(LambdaRat::new(poly(&[1]), LambdaPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn division_and_gcd() {
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, poly(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(LambdaPoly::gcd(&a, &poly(&[2, 2])), poly(&[1, 1]));
    }

    #[test]
    fn rendering() {
        assert_eq!(LambdaRat::lambda().scale(&int(2)).to_string(), "2λ");
        assert_eq!((-LambdaRat::lambda()).to_string(), "-λ");
        assert_eq!(LambdaRat::from(rat(1, 2)).to_string(), "1/2");
        assert_eq!(LambdaRat::from(poly(&[1, -3, 2])).to_string(), "1 - 3λ + 2λ^2");
        let r = LambdaRat::new(poly(&[1]), poly(&[1, 1])).unwrap();
        assert_eq!(r.to_string(), "(1)/(1 + λ)");
    }

    #[test]
    fn json_shape() {
        let v = LambdaRat::lambda().scale(&int(-1));
        let j = serde_json::to_string(&v).unwrap();
        assert_eq!(j, r#"{"num":[["-1",1]],"den":[["1",0]]}"#);
        let back: LambdaRat = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
    }
}
