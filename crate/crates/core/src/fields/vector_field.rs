use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::xpoly::XPoly;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, LambdaRat, Rational};

/// An event `(x⁰, x¹, x², x³)` with `x⁰ = ct`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point(#[serde(with = "point_serde")] pub [Rational; 4]);

mod point_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::exact::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(p: &[Rational; 4], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = p.iter().map(ToString::to_string).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rational; 4], D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let v: Vec<Rational> = v
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<_, _>>()
            .map_err(serde::de::Error::custom)?;
        v.try_into().map_err(|_| serde::de::Error::custom("a point has four coordinates"))
    }
}

impl Point {
    pub fn new(coords: [Rational; 4]) -> Self {
        Self(coords)
    }

    pub fn origin() -> Self {
        Self(std::array::from_fn(|_| Rational::from_integer(0.into())))
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Self(c.map(crate::exact::int))
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.0
    }
}

impl FromStr for Point {
    type Err = Error;

    /// `"3,0,0,0"` or `"3/5,0,0,1/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected 4 comma-separated coordinates, got '{s}'")));
        }
        let v = parts.iter().map(|p| parse_rational(p)).collect::<Result<Vec<_>>>()?;
        Ok(Point(v.try_into().expect("length checked")))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", v.join(","))
    }
}

/// Polynomial vector field `X^μ ∂_μ` on the four-coordinate chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VectorField {
    components: [XPoly; 4],
}

impl VectorField {
    pub fn new(components: [XPoly; 4]) -> Self {
        Self { components }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `∂_i`.
    pub fn partial(i: usize) -> Self {
        let mut c: [XPoly; 4] = Default::default();
        c[i] = XPoly::constant(LambdaRat::one());
        Self::new(c)
    }

    /// The Euler field `Σ_κ x^κ ∂_κ`.
    pub fn euler() -> Self {
        Self::new(std::array::from_fn(XPoly::var))
    }

    pub fn components(&self) -> &[XPoly; 4] {
        &self.components
    }

    pub fn component(&self, mu: usize) -> &XPoly {
        &self.components[mu]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(XPoly::is_zero)
    }

    pub fn scale(&self, c: &LambdaRat) -> Self {
        Self::new(std::array::from_fn(|i| self.components[i].scale(c)))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        Self::new(std::array::from_fn(|i| self.components[i].scale_rational(c)))
    }

    /// Multiply every component by a polynomial function.
    pub fn times(&self, f: &XPoly) -> Self {
        Self::new(std::array::from_fn(|i| &self.components[i] * f))
    }

    /// Derivation action `X(f) = X^μ ∂_μ f`.
    pub fn apply(&self, f: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for (mu, xm) in self.components.iter().enumerate() {
            if xm.is_zero() {
                continue;
            }
            let d = f.derivative(mu);
            if !d.is_zero() {
                out = &out + &(xm * &d);
            }
        }
        out
    }

    /// Lie bracket `[X,Y]^μ = X(Y^μ) − Y(X^μ)`.
    pub fn bracket(&self, other: &VectorField) -> VectorField {
        VectorField::new(std::array::from_fn(|mu| {
            &self.apply(&other.components[mu]) - &other.apply(&self.components[mu])
        }))
    }

    pub fn eval(&self, p: &Point, lam: &Rational) -> Result<[Rational; 4]> {
        let v = self
            .components
            .iter()
            .map(|c| c.eval(&p.0, lam))
            .collect::<Result<Vec<_>>>()?;
        Ok(v.try_into().expect("four components"))
    }

    pub fn specialize(&self, lam: &Rational) -> Result<Self> {
        let c = self
            .components
            .iter()
            .map(|c| c.specialize(lam))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(c.try_into().expect("four components")))
    }

    /// Largest polynomial degree among the components.
    pub fn degree(&self) -> Option<u32> {
        self.components.iter().filter_map(XPoly::degree).max()
    }
}

/// Free-function forms of the methods above.
pub fn apply(x: &VectorField, f: &XPoly) -> XPoly {
    x.apply(f)
}

pub fn bracket(x: &VectorField, y: &VectorField) -> VectorField {
    x.bracket(y)
}

pub fn eval_field(x: &VectorField, p: &Point, lam: &Rational) -> Result<[Rational; 4]> {
    x.eval(p, lam)
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})∂{mu}")?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        VectorField::new(std::array::from_fn(|i| &self.components[i] + &rhs.components[i]))
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        VectorField::new(std::array::from_fn(|i| &self.components[i] - &rhs.components[i]))
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField::new(std::array::from_fn(|i| -&self.components[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::fields::xpoly::Monomial;

    fn x(i: usize) -> XPoly {
        XPoly::var(i)
    }

    #[test]
    fn apply_examples() {
        let f = &x(0) * &x(1);
        assert_eq!(VectorField::partial(0).apply(&f), x(1));

        let mut c: [XPoly; 4] = Default::default();
        c[1] = x(0);
        assert_eq!(VectorField::new(c).apply(&x(1)), x(0));

        let sq = &x(0) * &x(0);
        assert_eq!(VectorField::euler().apply(&sq), sq.scale_rational(&int(2)));
    }

    #[test]
    fn bracket_examples() {
        assert!(bracket(&VectorField::partial(0), &VectorField::partial(1)).is_zero());

        // x_0∂_1 − x_1∂_0 = x⁰∂_1 + x¹∂_0 against ∂_1 gives −∂_0
        let mut c: [XPoly; 4] = Default::default();
        c[0] = x(1);
        c[1] = x(0);
        let l01 = VectorField::new(c);
        assert_eq!(bracket(&l01, &VectorField::partial(1)), -&VectorField::partial(0));
        assert!(bracket(&l01, &l01).is_zero());
    }

    #[test]
    fn eval_examples() {
        let p = Point::from_ints([1, 2, 3, 4]);
        let v = eval_field(&VectorField::partial(2), &p, &int(1)).unwrap();
        assert_eq!(v, [int(0), int(0), int(1), int(0)]);
        let v = eval_field(&VectorField::euler(), &p, &int(1)).unwrap();
        assert_eq!(v, [int(1), int(2), int(3), int(4)]);
    }

    #[test]
    fn point_parsing() {
        let p: Point = "3/5,0,0,1/2".parse().unwrap();
        assert_eq!(p.0[0], rat(3, 5));
        assert_eq!(p.to_string(), "3/5,0,0,1/2");
        assert!("1,2,3".parse::<Point>().is_err());
    }

    #[test]
    fn rendering() {
        let mut c: [XPoly; 4] = Default::default();
        c[0] = &XPoly::constant(int(1)) - &XPoly::term(Monomial([2, 0, 0, 0]), LambdaRat::lambda());
        c[1] = XPoly::term(Monomial([1, 1, 0, 0]), -LambdaRat::lambda());
        assert_eq!(VectorField::new(c).to_string(), "(1 - λ*x0*x0)∂0 + (-λ*x0*x1)∂1");
    }
}
