//! Minkowski and Beltrami metrics, exact pullbacks and Lie derivatives.

use std::fmt;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::beltrami::{ds_ads_transform_scalar, minkowski_dot, Branch, LorentzMatrix, MetricKind, Signature};
use crate::catalog::{generator, GeneratorId, ETA};
use crate::error::{Error, Result};
use crate::exact::{int, Dual, RatMatrix, Rational, Scalar};
use crate::fields::{Point, VectorField};
use crate::lft::{act_scalar, ProjectiveMatrix};
use crate::sampling::Sampler;

/// Symmetric 4×4 metric components at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricValue(pub [[Rational; 4]; 4]);

impl MetricValue {
    pub fn eta() -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| if i == j { int(ETA[i]) } else { int(0) })))
    }

    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| std::array::from_fn(|_| int(0))))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.0[i][j] == self.0[j][i]))
    }

    pub fn to_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(4, 4, |i, j| self.0[i][j].clone())
    }

    /// `(positive, negative)` eigenvalue counts from the leading principal
    /// minors; `None` when a minor vanishes and the test is inconclusive.
    pub fn inertia(&self) -> Option<(usize, usize)> {
        let m = self.to_matrix();
        let mut prev = int(1);
        let (mut pos, mut neg) = (0, 0);
        for k in 1..=4 {
            let minor = RatMatrix::from_fn(k, k, |i, j| m[(i, j)].clone()).det();
            if minor.is_zero() {
                return None;
            }
            if (&minor * &prev).is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            prev = minor;
        }
        Some((pos, neg))
    }
}

impl Serialize for MetricValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.0.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        rows.serialize(s)
    }
}

impl fmt::Display for MetricValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join("\t"))?;
        }
        Ok(())
    }
}

/// `g = η/σ + sλ (ηx)(ηx)ᵀ/σ²`, or `η` for Minkowski.
pub fn metric_scalar<S: Scalar>(kind: MetricKind, x: &[S; 4], lam: &Rational) -> Result<[[S; 4]; 4]> {
    let eta = |i: usize, j: usize| if i == j { S::from_int(ETA[i]) } else { S::from_int(0) };
    let Some(s) = kind.signature() else {
        return Ok(std::array::from_fn(|i| std::array::from_fn(|j| eta(i, j))));
    };
    let slam = S::from_rational(&(int(s.sign()) * lam));
    let sig = S::from_int(1) - slam.clone() * minkowski_dot(x, x);
    if !sig.is_positive_value() {
        return Err(Error::OutOfDomain(format!("σ(x) = {sig} is not positive")));
    }
    let inv = S::from_int(1) / sig;
    let k = slam * inv.clone() * inv.clone();
    let lower: [S; 4] = std::array::from_fn(|i| S::from_int(ETA[i]) * x[i].clone());
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| eta(i, j) * inv.clone() + k.clone() * lower[i].clone() * lower[j].clone())
    }))
}

pub fn metric_eval(kind: MetricKind, x: &Point, lam: &Rational) -> Result<MetricValue> {
    metric_scalar(kind, &x.0, lam).map(MetricValue)
}

/// A map of the chart that can be evaluated over any [`Scalar`], so that its
/// Jacobian comes out exactly from dual numbers.
pub trait PointMap: Sync {
    fn apply<S: Scalar>(&self, x: &[S; 4]) -> Result<[S; 4]>;
}

pub struct IdentityMap;

impl PointMap for IdentityMap {
    fn apply<S: Scalar>(&self, x: &[S; 4]) -> Result<[S; 4]> {
        Ok(x.clone())
    }
}

impl PointMap for LorentzMatrix {
    fn apply<S: Scalar>(&self, x: &[S; 4]) -> Result<[S; 4]> {
        let m = self.matrix();
        Ok(std::array::from_fn(|i| {
            (0..4).fold(S::from_int(0), |acc, j| acc + S::from_rational(&m[(i, j)]) * x[j].clone())
        }))
    }
}

/// The dS/AdS map sending `a` to the origin, followed by `L`.
pub struct BeltramiMap {
    pub signature: Signature,
    pub a: Point,
    pub lorentz: LorentzMatrix,
    pub lam: Rational,
}

impl PointMap for BeltramiMap {
    fn apply<S: Scalar>(&self, x: &[S; 4]) -> Result<[S; 4]> {
        let a = self.a.0.clone().map(|c| S::from_rational(&c));
        ds_ads_transform_scalar(self.signature, &a, &self.lorentz, x, &self.lam, Branch::Principal)
    }
}

/// A projective matrix acting on the chart of radius `l`.
pub struct ProjectiveMap {
    pub matrix: ProjectiveMatrix,
    pub l: Rational,
}

impl PointMap for ProjectiveMap {
    fn apply<S: Scalar>(&self, x: &[S; 4]) -> Result<[S; 4]> {
        let rows: Vec<Vec<S>> = self
            .matrix
            .matrix()
            .to_rows()
            .iter()
            .map(|r| r.iter().map(S::from_rational).collect())
            .collect();
        act_scalar(&rows, x, &self.l)
    }
}

/// Image point and exact Jacobian `J[i][j] = ∂f^i/∂x^j`.
pub fn jacobian<M: PointMap>(map: &M, x: &Point) -> Result<(Point, [[Rational; 4]; 4])> {
    let mut image = None;
    let mut jac: [[Rational; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| int(0)));
    for j in 0..4 {
        let xd: [Dual; 4] = std::array::from_fn(|i| Dual::new(x.0[i].clone(), if i == j { int(1) } else { int(0) }));
        let y = map.apply(&xd)?;
        for i in 0..4 {
            jac[i][j] = y[i].derivative.clone();
        }
        image.get_or_insert_with(|| Point(y.map(|d| d.value)));
    }
    Ok((image.expect("four columns"), jac))
}

/// `(f*g)(x) = Jᵀ g(f(x)) J`.
pub fn pullback<M: PointMap>(map: &M, kind: MetricKind, x: &Point, lam: &Rational) -> Result<MetricValue> {
    let (y, j) = jacobian(map, x)?;
    let g = metric_eval(kind, &y, lam)?;
    let gj: [[Rational; 4]; 4] =
        std::array::from_fn(|a| std::array::from_fn(|n| (0..4).map(|b| &g.0[a][b] * &j[b][n]).sum()));
    Ok(MetricValue(std::array::from_fn(|m| {
        std::array::from_fn(|n| (0..4).map(|a| &j[a][m] * &gj[a][n]).sum())
    })))
}

/// `(L_X g)_μν = X^α ∂_α g_μν + g_αν ∂_μ X^α + g_μα ∂_ν X^α`.
pub fn lie_derivative_metric(x_field: &VectorField, kind: MetricKind, x: &Point, lam: &Rational) -> Result<MetricValue> {
    let g = metric_eval(kind, x, lam)?;
    let xv = x_field.eval(x, lam)?;
    let mut dx: [[Rational; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| int(0)));
    for (alpha, row) in dx.iter_mut().enumerate() {
        for (mu, v) in row.iter_mut().enumerate() {
            *v = x_field.component(alpha).derivative(mu).eval(&x.0, lam)?;
        }
    }
    let mut out = MetricValue::zero();
    for (alpha, xa) in xv.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        let xd: [Dual; 4] = std::array::from_fn(|i| Dual::new(x.0[i].clone(), if i == alpha { int(1) } else { int(0) }));
        let dg = metric_scalar(kind, &xd, lam)?;
        for m in 0..4 {
            for n in 0..4 {
                out.0[m][n] += xa * &dg[m][n].derivative;
            }
        }
    }
    for m in 0..4 {
        for n in 0..4 {
            for a in 0..4 {
                out.0[m][n] += &g.0[a][n] * &dx[a][m] + &g.0[m][a] * &dx[a][n];
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KillingFailure {
    pub point: Point,
    #[serde(rename = "lieDerivative")]
    pub lie_derivative: MetricValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KillingReport {
    pub kind: MetricKind,
    pub generator: GeneratorId,
    pub samples: usize,
    pub zero: bool,
    #[serde(rename = "firstFailure")]
    pub first_failure: Option<KillingFailure>,
}

/// Seeded chart points inside the domain of `kind`.
pub fn sample_points(kind: MetricKind, samples: usize, seed: u64, lam: &Rational) -> Vec<Point> {
    let mut s = Sampler::new(seed);
    (0..samples)
        .map(|_| match kind.signature() {
            Some(sig) => s.domain_point(sig, lam),
            None => s.point(9, 10),
        })
        .collect()
}

/// Per-generator verdict: Killing iff the Lie derivative of the metric is
/// exactly zero at every sampled point. Fails only on an invalid generator id.
pub fn killing_check(
    gens: &[GeneratorId],
    kind: MetricKind,
    samples: usize,
    seed: u64,
    lam: &Rational,
) -> Result<Vec<KillingReport>> {
    let fields = gens.iter().map(|&id| generator(id)).collect::<Result<Vec<_>>>()?;
    let points = sample_points(kind, samples, seed, lam);
    gens.par_iter()
        .zip(fields.par_iter())
        .map(|(&id, field)| {
            let mut first_failure = None;
            for p in &points {
                let lie = lie_derivative_metric(field, kind, p, lam)?;
                if !lie.is_zero() {
                    first_failure = Some(KillingFailure { point: p.clone(), lie_derivative: lie });
                    break;
                }
            }
            Ok(KillingReport { kind, generator: id, samples: points.len(), zero: first_failure.is_none(), first_failure })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{lorentz, translations, translations_minus, translations_plus};
    use crate::exact::rat;

    #[test]
    fn metric_examples() {
        for kind in MetricKind::ALL {
            assert_eq!(metric_eval(kind, &Point::origin(), &rat(1, 9)).unwrap(), MetricValue::eta());
        }
        let g = metric_eval(MetricKind::DS, &Point([rat(1, 2), int(0), int(0), int(0)]), &int(1)).unwrap();
        assert_eq!(g.0[0][0], rat(16, 9));
        assert_eq!(g.0[1][1], rat(-4, 3));
        assert!(g.is_symmetric());
        assert_eq!(g.inertia(), Some((1, 3)));
        assert_eq!(metric_eval(MetricKind::Mink, &Point::from_ints([5, 1, 2, 3]), &int(1)).unwrap(), MetricValue::eta());
        assert!(metric_eval(MetricKind::DS, &Point::from_ints([2, 0, 0, 0]), &int(1)).is_err());
    }

    #[test]
    fn pullback_examples() {
        let lam = rat(1, 25);
        let x = Point([rat(1, 2), rat(1, 3), int(-1), rat(2, 7)]);
        assert_eq!(pullback(&IdentityMap, MetricKind::DS, &x, &lam).unwrap(), metric_eval(MetricKind::DS, &x, &lam).unwrap());
        let map = BeltramiMap { signature: Signature::DS, a: Point::from_ints([3, 0, 0, 0]), lorentz: LorentzMatrix::identity(), lam: lam.clone() };
        for p in sample_points(MetricKind::DS, 20, 42, &lam) {
            assert_eq!(pullback(&map, MetricKind::DS, &p, &lam).unwrap(), metric_eval(MetricKind::DS, &p, &lam).unwrap());
        }
        let mut s = Sampler::new(5);
        let l = s.lorentz();
        assert_eq!(pullback(&l, MetricKind::Mink, &x, &lam).unwrap(), MetricValue::eta());
    }

    #[test]
    fn lie_derivative_examples() {
        let x = Point([rat(1, 2), rat(1, 5), int(0), rat(-1, 3)]);
        let f = generator(GeneratorId::L(0, 1)).unwrap();
        assert!(lie_derivative_metric(&f, MetricKind::Mink, &x, &int(1)).unwrap().is_zero());
        let m0 = generator(GeneratorId::M(0)).unwrap();
        let half = Point([rat(1, 2), int(0), int(0), int(0)]);
        assert!(!lie_derivative_metric(&m0, MetricKind::DS, &half, &int(1)).unwrap().is_zero());
    }

    #[test]
    fn killing_examples() {
        let lam = int(1);
        let mut ds = translations_plus();
        ds.extend(lorentz());
        assert!(killing_check(&ds, MetricKind::DS, 25, 42, &lam).unwrap().iter().all(|r| r.zero));
        let mut flat = translations();
        flat.extend(lorentz());
        assert!(killing_check(&flat, MetricKind::Mink, 25, 42, &lam).unwrap().iter().all(|r| r.zero));
        assert!(killing_check(&translations_minus(), MetricKind::DS, 25, 42, &lam).unwrap().iter().all(|r| !r.zero));
    }

    #[test]
    fn killing_report_json() {
        let r = &killing_check(&[GeneratorId::PPlus(2)], MetricKind::DS, 100, 42, &int(1)).unwrap()[0];
        assert_eq!(
            serde_json::to_string(r).unwrap(),
            r#"{"kind":"ds","generator":"P+2","samples":100,"zero":true,"firstFailure":null}"#
        );
    }
}
