//! σ-forms, the dS/AdS fractional transformations in Beltrami coordinates,
//! the hyperboloid embedding, and light-cone classification.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, RatMatrix, Rational, Scalar};
use crate::fields::Point;

/// The two curved signs: `s = +1` for dS (σ₊), `s = −1` for AdS (σ₋).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Signature {
    DS,
    AdS,
}

impl Signature {
    pub fn sign(self) -> i64 {
        match self {
            Signature::DS => 1,
            Signature::AdS => -1,
        }
    }
}

/// Flat or curved spacetime, as used by metrics and classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    Mink,
    #[serde(rename = "ds")]
    DS,
    #[serde(rename = "ads")]
    AdS,
}

impl MetricKind {
    pub const ALL: [MetricKind; 3] = [MetricKind::Mink, MetricKind::DS, MetricKind::AdS];

    pub fn signature(self) -> Option<Signature> {
        match self {
            MetricKind::Mink => None,
            MetricKind::DS => Some(Signature::DS),
            MetricKind::AdS => Some(Signature::AdS),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MetricKind::Mink => "mink",
            MetricKind::DS => "ds",
            MetricKind::AdS => "ads",
        }
    }
}

impl From<Signature> for MetricKind {
    fn from(s: Signature) -> Self {
        match s {
            Signature::DS => MetricKind::DS,
            Signature::AdS => MetricKind::AdS,
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mink" | "minkowski" => Ok(MetricKind::Mink),
            "ds" => Ok(MetricKind::DS),
            "ads" => Ok(MetricKind::AdS),
            _ => Err(Error::Parse(format!("unknown kind '{s}' (expected mink, ds or ads)"))),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        MetricKind::from(*self).fmt(f)
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MetricKind::from_str(s)?
            .signature()
            .ok_or_else(|| Error::Parse(format!("'{s}' is not a curved signature (expected ds or ads)")))
    }
}

/// η(a, b) with η = diag(1, −1, −1, −1).
pub fn minkowski_dot<S: Scalar>(a: &[S; 4], b: &[S; 4]) -> S {
    let mut acc = a[0].clone() * b[0].clone();
    for i in 1..4 {
        acc = acc - a[i].clone() * b[i].clone();
    }
    acc
}

fn sigma_scalar<S: Scalar>(s: Signature, a: &[S; 4], x: &[S; 4], lam: &Rational) -> S {
    S::from_int(1) - S::from_rational(&(int(s.sign()) * lam)) * minkowski_dot(a, x)
}

/// σ_s(a, x) = 1 − sλ η(a, x); `sigma(s, x, x, λ)` is the one-point form.
pub fn sigma(s: Signature, a: &Point, x: &Point, lam: &Rational) -> Rational {
    sigma_scalar(s, &a.0, &x.0, lam)
}

pub fn in_domain(s: Signature, x: &Point, lam: &Rational) -> bool {
    sigma(s, x, x, lam).is_positive()
}

/// A 4×4 rational matrix with `η = LᵀηL` and determinant one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorentzMatrix(RatMatrix);

impl LorentzMatrix {
    pub fn new(m: RatMatrix) -> Result<Self> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::NotLorentz(format!("expected 4×4, got {}×{}", m.rows(), m.cols())));
        }
        let eta = RatMatrix::diagonal(&[int(1), int(-1), int(-1), int(-1)]);
        if &(&m.transpose() * &eta) * &m != eta {
            return Err(Error::NotLorentz("LᵀηL ≠ η".into()));
        }
        if !m.det().is_one() {
            return Err(Error::NotLorentz("determinant is not 1".into()));
        }
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        Self(RatMatrix::identity(4))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn apply(&self, x: &Point) -> Point {
        Point(self.0.mul_vec(&x.0).try_into().expect("length 4"))
    }
}

/// Overall sign of the transformation's square-root prefactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Branch {
    /// Continuous with the identity at `a = 0`.
    #[default]
    Principal,
    Antipodal,
}

/// The dS/AdS map sending `a` to the origin, over any scalar type:
/// `x′ = √σ(a) σ(a,x)⁻¹ D(x − a)`, `D = L(I + sλ a (ηa)ᵀ / (σ(a) + √σ(a)))`.
pub fn ds_ads_transform_scalar<S: Scalar>(
    s: Signature,
    a: &[S; 4],
    l: &LorentzMatrix,
    x: &[S; 4],
    lam: &Rational,
    branch: Branch,
) -> Result<[S; 4]> {
    let sig_a = sigma_scalar(s, a, a, lam);
    let sig_x = sigma_scalar(s, x, x, lam);
    if !sig_a.is_positive_value() {
        return Err(Error::OutOfDomain(format!("σ(a) = {sig_a} is not positive")));
    }
    if !sig_x.is_positive_value() {
        return Err(Error::OutOfDomain(format!("σ(x) = {sig_x} is not positive")));
    }
    let sig_ax = sigma_scalar(s, a, x, lam);
    if sig_ax.is_zero_value() {
        return Err(Error::DenominatorZero);
    }
    let root = sig_a
        .sqrt()
        .ok_or_else(|| Error::NotPerfectSquare(format!("σ(a) = {sig_a}")))?;

    let d: [S; 4] = std::array::from_fn(|i| x[i].clone() - a[i].clone());
    let eta_a: [S; 4] = std::array::from_fn(|i| if i == 0 { a[0].clone() } else { -a[i].clone() });
    let eta_a_d = (0..4).fold(S::from_int(0), |acc, i| acc + eta_a[i].clone() * d[i].clone());
    let k = S::from_rational(&(int(s.sign()) * lam)) / (sig_a + root.clone());
    let inner: [S; 4] = std::array::from_fn(|i| d[i].clone() + k.clone() * a[i].clone() * eta_a_d.clone());
    let mut prefactor = root / sig_ax;
    if branch == Branch::Antipodal {
        prefactor = -prefactor;
    }
    let m = l.matrix();
    Ok(std::array::from_fn(|mu| {
        let row = (0..4).fold(S::from_int(0), |acc, nu| acc + S::from_rational(&m[(mu, nu)]) * inner[nu].clone());
        prefactor.clone() * row
    }))
}

/// Exact transform on the principal branch.
pub fn ds_ads_transform(s: Signature, a: &Point, l: &LorentzMatrix, x: &Point, lam: &Rational) -> Result<Point> {
    ds_ads_transform_scalar(s, &a.0, l, &x.0, lam, Branch::Principal).map(Point)
}

pub fn ds_ads_transform_f64(s: Signature, a: &Point, l: &LorentzMatrix, x: &Point, lam: &Rational) -> Result<[f64; 4]> {
    let af = a.0.clone().map(|c| f64::from_rational(&c));
    let xf = x.0.clone().map(|c| f64::from_rational(&c));
    ds_ads_transform_scalar(s, &af, l, &xf, lam, Branch::Principal)
}

/// Point `(ξ⁰..ξ³, ξ⁴)` in the five-dimensional embedding space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingPoint {
    #[serde(with = "xi_serde")]
    pub xi: [Rational; 5],
}

mod xi_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exact::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(xi: &[Rational; 5], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xi.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rational; 5], D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let q = v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>().map_err(serde::de::Error::custom)?;
        q.try_into().map_err(|_| serde::de::Error::custom("expected 5 entries"))
    }
}

impl EmbeddingPoint {
    /// η_μν ξ^μ ξ^ν − s (ξ⁴)²; equals −s·l² on the hyperboloid.
    pub fn hyperboloid_form(&self, s: Signature) -> Rational {
        let head: [Rational; 4] = std::array::from_fn(|i| self.xi[i].clone());
        minkowski_dot(&head, &head) - int(s.sign()) * &self.xi[4] * &self.xi[4]
    }
}

impl fmt::Display for EmbeddingPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = &self.xi;
        write!(f, "{a},{b},{c},{d};{e}")
    }
}

/// ξ^μ = x^μ/√σ(x), ξ⁴ = l/√σ(x).
pub fn embed(s: Signature, x: &Point, l: &Rational) -> Result<EmbeddingPoint> {
    let lam = (l * l).recip();
    let sig = sigma(s, x, x, &lam);
    if !sig.is_positive() {
        return Err(Error::OutOfDomain(format!("σ(x) = {sig} is not positive")));
    }
    let root = sig
        .sqrt()
        .ok_or_else(|| Error::NotPerfectSquare(format!("σ(x) = {sig}")))?;
    let inv = root.recip();
    Ok(EmbeddingPoint { xi: std::array::from_fn(|i| if i < 4 { &x.0[i] * &inv } else { l * &inv }) })
}

/// x^μ = l ξ^μ / ξ⁴.
pub fn project(xi: &EmbeddingPoint, l: &Rational) -> Result<Point> {
    if !xi.xi[4].is_positive() {
        return Err(Error::ChartBoundary(format!("ξ⁴ = {} is not positive", xi.xi[4])));
    }
    let k = l / &xi.xi[4];
    Ok(Point(std::array::from_fn(|i| &xi.xi[i] * &k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interval {
    Timelike,
    Null,
    Spacelike,
}

impl Interval {
    pub fn as_str(self) -> &'static str {
        match self {
            Interval::Timelike => "timelike",
            Interval::Null => "null",
            Interval::Spacelike => "spacelike",
        }
    }

    fn from_sign(o: Ordering) -> Self {
        match o {
            Ordering::Greater => Interval::Timelike,
            Ordering::Equal => Interval::Null,
            Ordering::Less => Interval::Spacelike,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Causal type of the separation between `a` and `x`.
///
/// Curved kinds use the cone function `F = σ(a,x) − √(σ(a)σ(x))`, whose sign
/// is decided without roots: `F < 0` when `σ(a,x) ≤ 0`, otherwise
/// `sign F = sign(σ(a,x)² − σ(a)σ(x))`. Timelike is `F > 0` for dS and
/// `F < 0` for AdS, which reduces to the sign of η(x,x) at `a = 0`.
pub fn classify_interval(kind: MetricKind, a: &Point, x: &Point, lam: &Rational) -> Result<Interval> {
    let Some(s) = kind.signature() else {
        let d: [Rational; 4] = std::array::from_fn(|i| &x.0[i] - &a.0[i]);
        return Ok(Interval::from_sign(minkowski_dot(&d, &d).sign()));
    };
    let sig_a = sigma(s, a, a, lam);
    let sig_x = sigma(s, x, x, lam);
    if !sig_a.is_positive() || !sig_x.is_positive() {
        return Err(Error::OutOfDomain("both points need σ > 0".into()));
    }
    let sig_ax = sigma(s, a, x, lam);
    let f_sign = if sig_ax.is_positive() {
        (&sig_ax * &sig_ax - sig_a * sig_x).sign()
    } else {
        Ordering::Less
    };
    Ok(Interval::from_sign(match s {
        Signature::DS => f_sign,
        Signature::AdS => f_sign.reverse(),
    }))
}

/// η_s = diag(1, −1, −1, −1, −s).
pub fn embedding_metric(s: Signature) -> RatMatrix {
    RatMatrix::diagonal(&[int(1), int(-1), int(-1), int(-1), int(-s.sign())])
}

/// The embedding-space matrix realizing the transform: `B = diag(L, 1)·T`,
/// where `T` is the η_s-orthogonal transvection carrying the unit vector
/// `u ∝ embed(a)` to `n = e₄`.
pub fn boost_matrix(s: Signature, a: &Point, l_mat: &LorentzMatrix, l: &Rational) -> Result<RatMatrix> {
    let lam = (l * l).recip();
    let sig = sigma(s, a, a, &lam);
    if !sig.is_positive() {
        return Err(Error::OutOfDomain(format!("σ(a) = {sig} is not positive")));
    }
    let root = sig
        .sqrt()
        .ok_or_else(|| Error::NotPerfectSquare(format!("σ(a) = {sig}")))?;
    let eta = embedding_metric(s);
    let u: Vec<Rational> = (0..5).map(|i| if i < 4 { &a.0[i] / (l * &root) } else { root.recip() }).collect();
    let n: Vec<Rational> = (0..5).map(|i| if i == 4 { int(1) } else { int(0) }).collect();
    let dot = |v: &[Rational], w: &[Rational]| -> Rational { (0..5).map(|i| &eta[(i, i)] * &v[i] * &w[i]).sum() };
    let q = dot(&u, &u);
    let w: Vec<Rational> = (0..5).map(|i| &u[i] + &n[i]).collect();
    let wn = &q + dot(&u, &n);
    let t = RatMatrix::from_fn(5, 5, |i, j| {
        let id = if i == j { int(1) } else { int(0) };
        id - &w[i] * &eta[(j, j)] * &w[j] / &wn + int(2) * &n[i] * &eta[(j, j)] * &u[j] / &q
    });
    Ok(&l_mat.matrix().extend_identity() * &t)
}

/// Apply a 5×5 matrix to an embedding point.
pub fn act_embedding(b: &RatMatrix, xi: &EmbeddingPoint) -> EmbeddingPoint {
    EmbeddingPoint { xi: b.mul_vec(&xi.xi).try_into().expect("length 5") }
}

/// `project(B·embed(x))` computed on the homogeneous vector `(x, l)`, which is
/// a positive multiple of `embed(x)`; no square root of σ(x) is needed.
pub fn boost_action(b: &RatMatrix, x: &Point, l: &Rational) -> Result<Point> {
    let v: Vec<Rational> = x.0.iter().cloned().chain([l.clone()]).collect();
    let w = b.mul_vec(&v);
    if !w[4].is_positive() {
        return Err(Error::ChartBoundary(format!("image has ξ⁴ = {}", w[4])));
    }
    Ok(Point(std::array::from_fn(|i| l * &w[i] / &w[4])))
}

/// `BᵀηₛB = ηₛ`.
pub fn is_pseudo_orthogonal(s: Signature, b: &RatMatrix) -> bool {
    let eta = embedding_metric(s);
    &(&b.transpose() * &eta) * b == eta
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Dual};
    use crate::sampling::Sampler;

    fn p(c: [i64; 4]) -> Point {
        Point::from_ints(c)
    }

    #[test]
    fn sigma_examples() {
        let l = rat(1, 25);
        assert_eq!(sigma(Signature::DS, &p([3, 0, 0, 0]), &p([3, 0, 0, 0]), &l), rat(16, 25));
        assert_eq!(sigma(Signature::AdS, &p([3, 0, 0, 0]), &p([3, 0, 0, 0]), &l), rat(34, 25));
        assert_eq!(sigma(Signature::DS, &p([3, 0, 0, 0]), &p([0, 4, 0, 0]), &l), int(1));
    }

    #[test]
    fn transform_examples() {
        let lam = rat(1, 25);
        let id = LorentzMatrix::identity();
        let a = p([3, 0, 0, 0]);
        for s in [Signature::DS, Signature::AdS] {
            let sa = sigma(s, &a, &a, &lam);
            if sa.sqrt().is_some() {
                assert_eq!(ds_ads_transform(s, &a, &id, &a, &lam).unwrap(), Point::origin());
            }
            let x = Point(std::array::from_fn(|i| rat(i as i64 + 1, 7)));
            assert_eq!(ds_ads_transform(s, &Point::origin(), &id, &x, &lam).unwrap(), x);
        }
        let x = ds_ads_transform(Signature::DS, &a, &id, &p([0, 4, 0, 0]), &lam).unwrap();
        assert_eq!(x, Point([int(-3), rat(16, 5), int(0), int(0)]));
        assert!(matches!(
            ds_ads_transform(Signature::AdS, &a, &id, &p([0, 4, 0, 0]), &lam),
            Err(Error::NotPerfectSquare(_))
        ));
        assert!(matches!(
            ds_ads_transform(Signature::DS, &p([5, 0, 0, 0]), &id, &p([0, 0, 0, 0]), &lam),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn golden_value_satisfies_sigma_relation() {
        // σ(x′) = σ(a)σ(x)/σ(a,x)² for the image of x under the map centred at a
        let (lam, a, x) = (rat(1, 25), p([3, 0, 0, 0]), p([0, 4, 0, 0]));
        let img = Point([int(-3), rat(16, 5), int(0), int(0)]);
        let s = Signature::DS;
        let expected = sigma(s, &a, &a, &lam) * sigma(s, &x, &x, &lam) / (sigma(s, &a, &x, &lam) * sigma(s, &a, &x, &lam));
        assert_eq!(sigma(s, &img, &img, &lam), expected);
        assert_eq!(expected, rat(656, 625));
    }

    #[test]
    fn float_mode_tracks_exact() {
        let lam = rat(1, 25);
        let a = p([3, 0, 0, 0]);
        let x = p([0, 4, 0, 0]);
        let exact = ds_ads_transform(Signature::DS, &a, &LorentzMatrix::identity(), &x, &lam).unwrap();
        let float = ds_ads_transform_f64(Signature::DS, &a, &LorentzMatrix::identity(), &x, &lam).unwrap();
        for i in 0..4 {
            assert!((float[i] - crate::exact::rational::to_f64(&exact.0[i])).abs() < 1e-12);
        }
        let irrational = ds_ads_transform_f64(Signature::AdS, &a, &LorentzMatrix::identity(), &x, &lam);
        assert!(irrational.is_ok());
    }

    #[test]
    fn antipodal_branch_negates() {
        let lam = rat(1, 25);
        let a = p([3, 0, 0, 0]).0;
        let x = p([0, 4, 0, 0]).0;
        let id = LorentzMatrix::identity();
        let pr = ds_ads_transform_scalar(Signature::DS, &a, &id, &x, &lam, Branch::Principal).unwrap();
        let an = ds_ads_transform_scalar(Signature::DS, &a, &id, &x, &lam, Branch::Antipodal).unwrap();
        for i in 0..4 {
            assert_eq!(pr[i], -an[i].clone());
        }
    }

    #[test]
    fn embed_project_examples() {
        let xi = embed(Signature::DS, &p([3, 0, 0, 0]), &int(5)).unwrap();
        assert_eq!(xi.xi, [rat(15, 4), int(0), int(0), int(0), rat(25, 4)]);
        assert_eq!(xi.hyperboloid_form(Signature::DS), int(-25));
        assert_eq!(embed(Signature::AdS, &Point::origin(), &int(5)).unwrap().xi[4], int(5));
        assert_eq!(project(&xi, &int(5)).unwrap(), p([3, 0, 0, 0]));
        let far = EmbeddingPoint { xi: [int(0), int(0), int(0), int(0), int(7)] };
        assert_eq!(project(&far, &int(5)).unwrap(), Point::origin());
        let horizon = EmbeddingPoint { xi: [int(1), int(0), int(0), int(0), int(0)] };
        assert!(matches!(project(&horizon, &int(5)), Err(Error::ChartBoundary(_))));
    }

    #[test]
    fn classify_examples() {
        let o = Point::origin();
        assert_eq!(classify_interval(MetricKind::Mink, &o, &p([1, 0, 0, 0]), &int(1)).unwrap(), Interval::Timelike);
        assert_eq!(classify_interval(MetricKind::Mink, &o, &p([1, 1, 0, 0]), &int(1)).unwrap(), Interval::Null);
        assert_eq!(
            classify_interval(MetricKind::DS, &p([3, 0, 0, 0]), &p([0, 4, 0, 0]), &rat(1, 25)).unwrap(),
            Interval::Spacelike
        );
        for kind in [MetricKind::DS, MetricKind::AdS] {
            let lam = rat(1, 100);
            assert_eq!(classify_interval(kind, &o, &p([1, 0, 0, 0]), &lam).unwrap(), Interval::Timelike);
            assert_eq!(classify_interval(kind, &o, &p([1, 1, 0, 0]), &lam).unwrap(), Interval::Null);
            assert_eq!(classify_interval(kind, &o, &p([0, 1, 0, 0]), &lam).unwrap(), Interval::Spacelike);
        }
    }

    #[test]
    fn domain_examples() {
        let lam = rat(1, 25);
        assert!(in_domain(Signature::DS, &p([3, 0, 0, 0]), &lam));
        assert!(!in_domain(Signature::DS, &p([5, 0, 0, 0]), &lam));
        assert!(in_domain(Signature::AdS, &p([7, 1, 2, 0]), &lam));
    }

    #[test]
    fn boost_examples() {
        assert_eq!(
            boost_matrix(Signature::DS, &Point::origin(), &LorentzMatrix::identity(), &int(5)).unwrap(),
            RatMatrix::identity(5)
        );
        let b = boost_matrix(Signature::DS, &p([3, 0, 0, 0]), &LorentzMatrix::identity(), &int(5)).unwrap();
        assert!(is_pseudo_orthogonal(Signature::DS, &b));
        let mut s = Sampler::new(42);
        let lam = rat(1, 25);
        for _ in 0..50 {
            let x = s.domain_point(Signature::DS, &lam);
            let Ok(xi) = embed(Signature::DS, &x, &int(5)) else { continue };
            let img = act_embedding(&b, &xi);
            if !img.xi[4].is_positive() {
                continue;
            }
            let direct = ds_ads_transform(Signature::DS, &p([3, 0, 0, 0]), &LorentzMatrix::identity(), &x, &lam).unwrap();
            assert_eq!(project(&img, &int(5)).unwrap(), direct);
        }
    }

    #[test]
    fn lorentz_validation() {
        assert!(LorentzMatrix::new(RatMatrix::identity(4).scale(&int(2))).is_err());
        let mut flip = RatMatrix::identity(4);
        flip[(1, 1)] = int(-1);
        assert!(LorentzMatrix::new(flip).is_err());
    }

    #[test]
    fn translation_derivative_is_minus_p_sign() {
        use crate::catalog::{generator, GeneratorId};
        let lam = rat(1, 4);
        let x = Point([rat(1, 3), rat(-1, 5), rat(1, 7), rat(2, 9)]);
        for s in [Signature::DS, Signature::AdS] {
            for nu in 0..4u8 {
                let a: [Dual; 4] = std::array::from_fn(|i| Dual::new(int(0), if i == usize::from(nu) { int(1) } else { int(0) }));
                let xd = x.0.clone().map(Dual::constant);
                let img = ds_ads_transform_scalar(s, &a, &LorentzMatrix::identity(), &xd, &lam, Branch::Principal).unwrap();
                let id = match s {
                    Signature::DS => GeneratorId::PPlus(nu),
                    Signature::AdS => GeneratorId::PMinus(nu),
                };
                let field = generator(id).unwrap().eval(&x, &lam).unwrap();
                for mu in 0..4 {
                    assert_eq!(img[mu].derivative, -field[mu].clone());
                }
            }
        }
    }
}
