use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, rat, LambdaRat, Rational};
use crate::fields::{Monomial, VectorField, XPoly};

/// Minkowski metric diagonal, `η = diag(1, −1, −1, −1)`.
pub const ETA: [i64; 4] = [1, -1, -1, -1];

pub fn eta(mu: usize) -> i64 {
    ETA[mu]
}

/// `x_μ = η_μν x^ν` as a polynomial.
pub fn x_lower(mu: usize) -> XPoly {
    XPoly::var(mu).scale_rational(&int(eta(mu)))
}

/// Names one generator of im_L(4), or one of the two derived translation sets.
///
/// `L` and `R` always carry `μ < ν`. `P` and `PPrime` are linear
/// combinations of `PPlus`/`PMinus` and are not part of the 24-basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorId {
    PPlus(u8),
    PMinus(u8),
    L(u8, u8),
    R(u8, u8),
    M(u8),
    P(u8),
    PPrime(u8),
}

/// A generator with a sign, produced when user input writes `L10` for `−L01`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedGenerator {
    pub sign: i8,
    pub id: GeneratorId,
}

fn check_index(i: u8) -> Result<u8> {
    if i < 4 {
        Ok(i)
    } else {
        Err(Error::InvalidGenerator(format!("index {i} out of range 0..=3")))
    }
}

impl GeneratorId {
    /// Validate indices and canonicalize `L`/`R` pairs. `L(ν,μ)` becomes
    /// `−L(μ,ν)`; `R` is symmetric. Equal indices are rejected.
    pub fn signed(self) -> Result<SignedGenerator> {
        use GeneratorId::*;
        let (sign, id) = match self {
            PPlus(m) => (1, PPlus(check_index(m)?)),
            PMinus(m) => (1, PMinus(check_index(m)?)),
            M(m) => (1, M(check_index(m)?)),
            P(m) => (1, P(check_index(m)?)),
            PPrime(m) => (1, PPrime(check_index(m)?)),
            L(m, n) | R(m, n) => {
                check_index(m)?;
                check_index(n)?;
                if m == n {
                    return Err(Error::InvalidGenerator(format!("{self:?} needs distinct indices")));
                }
                let (lo, hi) = (m.min(n), m.max(n));
                match self {
                    L(..) => (if m < n { 1 } else { -1 }, L(lo, hi)),
                    _ => (1, R(lo, hi)),
                }
            }
        };
        Ok(SignedGenerator { sign, id })
    }

    /// Validate, requiring canonical form already.
    pub fn validated(self) -> Result<Self> {
        let s = self.signed()?;
        if s.id != self {
            return Err(Error::InvalidGenerator(format!("{self:?} is not in canonical μ<ν form")));
        }
        Ok(self)
    }

    pub fn is_derived(&self) -> bool {
        matches!(self, GeneratorId::P(_) | GeneratorId::PPrime(_))
    }

    /// Express a derived id in terms of the 24-basis; basis ids map to themselves.
    pub fn resolve(&self) -> Vec<(GeneratorId, Rational)> {
        let half = rat(1, 2);
        match *self {
            GeneratorId::P(m) => vec![(GeneratorId::PPlus(m), half.clone()), (GeneratorId::PMinus(m), half)],
            GeneratorId::PPrime(m) => {
                vec![(GeneratorId::PPlus(m), half.clone()), (GeneratorId::PMinus(m), -half)]
            }
            id => vec![(id, Rational::one())],
        }
    }

    /// Parse `"P+0"`, `"P-3"`, `"L01"`, `"R12"`, `"M2"`, `"P0"`, `"P'1"`,
    /// accepting `μ > ν` for `L`/`R`.
    pub fn parse_signed(s: &str) -> Result<SignedGenerator> {
        let bad = || Error::InvalidGenerator(format!("unknown generator name '{s}'"));
        let digit = |c: char| c.to_digit(10).map(|d| d as u8).ok_or_else(bad);
        let chars: Vec<char> = s.trim().chars().collect();
        let id = match chars.as_slice() {
            ['P', '+', d] => GeneratorId::PPlus(digit(*d)?),
            ['P', '-', d] => GeneratorId::PMinus(digit(*d)?),
            ['P', '\'', d] => GeneratorId::PPrime(digit(*d)?),
            ['P', d] => GeneratorId::P(digit(*d)?),
            ['M', d] => GeneratorId::M(digit(*d)?),
            ['L', a, b] => GeneratorId::L(digit(*a)?, digit(*b)?),
            ['R', a, b] => GeneratorId::R(digit(*a)?, digit(*b)?),
            _ => return Err(bad()),
        };
        id.signed()
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::PPlus(m) => write!(f, "P+{m}"),
            GeneratorId::PMinus(m) => write!(f, "P-{m}"),
            GeneratorId::L(m, n) => write!(f, "L{m}{n}"),
            GeneratorId::R(m, n) => write!(f, "R{m}{n}"),
            GeneratorId::M(m) => write!(f, "M{m}"),
            GeneratorId::P(m) => write!(f, "P{m}"),
            GeneratorId::PPrime(m) => write!(f, "P'{m}"),
        }
    }
}

impl FromStr for GeneratorId {
    type Err = Error;

    /// Canonical names only; `L10` is rejected here (use `parse_signed`),
    /// `R10` is accepted as `R01`.
    fn from_str(s: &str) -> Result<Self> {
        let sg = GeneratorId::parse_signed(s)?;
        if sg.sign < 0 {
            return Err(Error::InvalidGenerator(format!("'{s}' is minus a basis generator")));
        }
        Ok(sg.id)
    }
}

impl Serialize for GeneratorId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GeneratorId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `P±_μ = (δ_μ^ν ∓ λ x_μ x^ν) ∂_ν`, with `sign = +1` for P⁺.
fn translation(mu: usize, sign: i64) -> VectorField {
    let coeff = LambdaRat::lambda().scale(&int(-sign));
    let xl = x_lower(mu).scale(&coeff);
    VectorField::new(std::array::from_fn(|nu| {
        let quad = &xl * &XPoly::var(nu);
        if nu == mu {
            &XPoly::constant(int(1)) + &quad
        } else {
            quad
        }
    }))
}

fn lorentz_like(m: usize, n: usize, sym: i64) -> VectorField {
    let mut c: [XPoly; 4] = Default::default();
    c[n] = x_lower(m);
    c[m] = x_lower(n).scale_rational(&int(sym));
    VectorField::new(c)
}

/// The vector field of a generator, built directly from its defining formula.
pub fn generator(id: GeneratorId) -> Result<VectorField> {
    let id = id.validated()?;
    Ok(match id {
        GeneratorId::PPlus(m) => translation(m.into(), 1),
        GeneratorId::PMinus(m) => translation(m.into(), -1),
        // x_μ∂_ν − x_ν∂_μ
        GeneratorId::L(m, n) => lorentz_like(m.into(), n.into(), -1),
        // x_μ∂_ν + x_ν∂_μ
        GeneratorId::R(m, n) => lorentz_like(m.into(), n.into(), 1),
        // −(x^μ∂_μ + Σ_κ x^κ∂_κ), no sum in the first term
        GeneratorId::M(m) => {
            let m = usize::from(m);
            let mut c: [XPoly; 4] = std::array::from_fn(|k| -&XPoly::var(k));
            c[m] = XPoly::term(Monomial::var(m), int(-2));
            VectorField::new(c)
        }
        GeneratorId::P(_) | GeneratorId::PPrime(_) => id
            .resolve()
            .into_iter()
            .map(|(g, c)| generator(g).map(|f| f.scale_rational(&c)))
            .try_fold(VectorField::zero(), |acc, f| f.map(|f| &acc + &f))?,
    })
}

/// Vector field for a signed generator.
pub fn signed_field(g: SignedGenerator) -> Result<VectorField> {
    let f = generator(g.id)?;
    Ok(if g.sign < 0 { -&f } else { f })
}

fn pairs() -> impl Iterator<Item = (u8, u8)> {
    (0..4u8).flat_map(|m| (m + 1..4).map(move |n| (m, n)))
}

pub fn translations_plus() -> Vec<GeneratorId> {
    (0..4).map(GeneratorId::PPlus).collect()
}

pub fn translations_minus() -> Vec<GeneratorId> {
    (0..4).map(GeneratorId::PMinus).collect()
}

pub fn translations() -> Vec<GeneratorId> {
    (0..4).map(GeneratorId::P).collect()
}

pub fn translations_prime() -> Vec<GeneratorId> {
    (0..4).map(GeneratorId::PPrime).collect()
}

pub fn lorentz() -> Vec<GeneratorId> {
    pairs().map(|(m, n)| GeneratorId::L(m, n)).collect()
}

pub fn r_generators() -> Vec<GeneratorId> {
    pairs().map(|(m, n)| GeneratorId::R(m, n)).collect()
}

pub fn cartan() -> Vec<GeneratorId> {
    (0..4).map(GeneratorId::M).collect()
}

/// The 24-basis: P+0..P+3, P-0..P-3, L01..L23, R01..R23, M0..M3.
pub fn basis24() -> Vec<GeneratorId> {
    [translations_plus(), translations_minus(), lorentz(), r_generators(), cartan()].concat()
}

/// An equivalent basis with the Poincaré translations in place of P±:
/// P0..P3, P'0..P'3, L, R, M.
pub fn triple_basis() -> Vec<GeneratorId> {
    [translations(), translations_prime(), lorentz(), r_generators(), cartan()].concat()
}
