//! Fractional linear transformations of the chart as 5×5 projective matrices.
//!
//! A point `x` is lifted to homogeneous coordinates `ξ = (x/l, 1)`; a matrix
//! `T = [[A, b], [c, d]]` acts by `x′ = l·(A x/l + b)/(c·x/l + d)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::{generator, GeneratorId};
use crate::error::{Error, Result};
use crate::exact::rational::fifth_root_exact;
use crate::exact::{int, parse_rational, RatMatrix, Rational, Scalar};
use crate::fields::{Monomial, Point, VectorField, XPoly};

/// Sign relating matrix commutators to field brackets:
/// `induced_field([A, B]) = COMMUTATOR_SIGN · [induced_field(A), induced_field(B)]`.
///
/// The induced-field map is an anti-homomorphism for the left action.
pub const COMMUTATOR_SIGN: i64 = -1;

/// A determinant-one 5×5 rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveMatrix {
    m: RatMatrix,
}

impl ProjectiveMatrix {
    pub fn new(m: RatMatrix) -> Result<Self> {
        if m.rows() != 5 || m.cols() != 5 {
            return Err(Error::Parse(format!("expected a 5×5 matrix, got {}×{}", m.rows(), m.cols())));
        }
        let det = m.det();
        if !det.is_one() {
            return Err(Error::DeterminantNotOne(det.to_string()));
        }
        Ok(Self { m })
    }

    /// Rescale by the real fifth root of the determinant, when it is rational.
    pub fn normalized(m: RatMatrix) -> Result<Self> {
        if m.rows() != 5 || m.cols() != 5 {
            return Err(Error::Parse(format!("expected a 5×5 matrix, got {}×{}", m.rows(), m.cols())));
        }
        let det = m.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let root = fifth_root_exact(&det).ok_or_else(|| Error::DeterminantNotOne(det.to_string()))?;
        Self::new(m.scale(&root.recip()))
    }

    pub fn identity() -> Self {
        Self { m: RatMatrix::identity(5) }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.m
    }

    pub fn inverse(&self) -> Self {
        Self { m: self.m.inverse().expect("determinant one") }
    }

    /// Parse a row-major 5×5 JSON array of rational strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let rows: Vec<Vec<String>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(RatMatrix::from_rows(rows)?)
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .m
            .to_rows()
            .into_iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        serde_json::to_string(&rows).expect("string matrix serializes")
    }

    pub fn act(&self, p: &Point, l: &Rational) -> Result<Point> {
        let x = act_scalar(&to_scalar_rows(&self.m), &p.0, l)?;
        Ok(Point(x))
    }
}

/// Group law: the matrix product. Determinant one is preserved.
pub fn compose(t1: &ProjectiveMatrix, t2: &ProjectiveMatrix) -> ProjectiveMatrix {
    ProjectiveMatrix { m: t1.matrix() * t2.matrix() }
}

pub fn act(t: &ProjectiveMatrix, p: &Point, l: &Rational) -> Result<Point> {
    t.act(p, l)
}

fn to_scalar_rows<S: Scalar>(m: &RatMatrix) -> Vec<Vec<S>> {
    m.to_rows().iter().map(|r| r.iter().map(S::from_rational).collect()).collect()
}

/// The fractional action over any scalar type (dual numbers for derivatives,
/// `f64` for float mode).
pub fn act_scalar<S: Scalar>(m: &[Vec<S>], x: &[S; 4], l: &Rational) -> Result<[S; 4]> {
    let l = S::from_rational(l);
    let xi: Vec<S> = x.iter().map(|v| v.clone() / l.clone()).chain([S::from_int(1)]).collect();
    let image: Vec<S> = m
        .iter()
        .map(|row| {
            row.iter()
                .zip(&xi)
                .fold(S::from_int(0), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect();
    if image[4].is_zero_value() {
        return Err(Error::OnProjectiveHorizon);
    }
    Ok(std::array::from_fn(|mu| l.clone() * image[mu].clone() / image[4].clone()))
}

/// A uniform straight-line motion `x(t) = base + t·direction`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub base: Point,
    pub direction: Point,
}

impl Line {
    pub fn new(base: Point, direction: Point) -> Result<Self> {
        if direction.0.iter().all(Zero::is_zero) {
            return Err(Error::Parse("line direction must be nonzero".into()));
        }
        Ok(Self { base, direction })
    }

    pub fn at(&self, t: &Rational) -> Point {
        Point(std::array::from_fn(|i| &self.base.0[i] + t * &self.direction.0[i]))
    }
}

/// True iff the difference vectors from the first point have rank ≤ 1.
pub fn collinear(points: &[Point]) -> bool {
    let Some((first, rest)) = points.split_first() else {
        return true;
    };
    if rest.is_empty() {
        return true;
    }
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| (0..4).map(|i| &p.0[i] - &first.0[i]).collect())
        .collect();
    RatMatrix::from_rows(diffs).expect("rectangular").rank() <= 1
}

/// The differential of the projective action of `m` on the chart:
/// `X^μ(x) = l·[(Mξ)^μ − (x^μ/l)(Mξ)^4]` with `ξ = (x/l, 1)`.
pub fn induced_field(m: &RatMatrix, l: &Rational) -> VectorField {
    assert!(m.rows() == 5 && m.cols() == 5, "induced_field needs a 5×5 matrix");
    let inv_l = l.recip();
    let mut denominator_part = XPoly::constant(m[(4, 4)].clone());
    for nu in 0..4 {
        denominator_part = &denominator_part + &XPoly::var(nu).scale_rational(&(&m[(4, nu)] * &inv_l));
    }
    VectorField::new(std::array::from_fn(|mu| {
        let mut c = XPoly::constant(l * &m[(mu, 4)]);
        for nu in 0..4 {
            c = &c + &XPoly::var(nu).scale_rational(&m[(mu, nu)]);
        }
        &c - &(&XPoly::var(mu) * &denominator_part)
    }))
}

/// Traceless matrix whose induced field at `l = 1` is `field` at `λ = 1`.
pub fn linearize_field(field: &VectorField) -> Result<RatMatrix> {
    let one = Rational::one();
    let f = field.specialize(&one)?;
    let coeff = |mu: usize, m: Monomial| -> Rational {
        f.component(mu).coeff(&m).as_constant().expect("specialized coefficients are constants")
    };
    let mut a = RatMatrix::zeros(5, 5);
    for mu in 0..4 {
        a[(mu, 4)] = coeff(mu, Monomial::ONE);
        for nu in 0..4 {
            a[(mu, nu)] = coeff(mu, Monomial::var(nu));
        }
        a[(4, mu)] = -coeff(0, Monomial::var(0).mul(&Monomial::var(mu)));
    }
    let shift = -(a.trace() / int(5));
    for i in 0..5 {
        a[(i, i)] += &shift;
    }
    if induced_field(&a, &one) != f {
        return Err(Error::InvalidGenerator(format!("{field} is not the field of a projective transformation")));
    }
    Ok(a)
}

pub fn linearize(id: GeneratorId) -> Result<RatMatrix> {
    linearize_field(&generator(id)?)
}

fn factorial_series<S: Scalar>(m: &RatMatrix, t: S) -> Result<Vec<Vec<S>>> {
    if !m.pow(5).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let mut sum: Vec<Vec<S>> = to_scalar_rows(&RatMatrix::identity(5));
    let mut power = RatMatrix::identity(5);
    let mut tk = S::from_int(1);
    let mut fact = Rational::one();
    for k in 1..5 {
        power = &power * m;
        tk = tk * t.clone();
        fact *= int(k);
        let scale = fact.recip();
        for (i, row) in sum.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                let term = S::from_rational(&(&power[(i, j)] * &scale)) * tk.clone();
                *v = v.clone() + term;
            }
        }
    }
    Ok(sum)
}

/// `exp(tM) = Σ_{k<5} t^k M^k / k!` for nilpotent `M`.
pub fn exp_nilpotent(m: &RatMatrix, t: &Rational) -> Result<ProjectiveMatrix> {
    let rows = factorial_series(m, t.clone())?;
    ProjectiveMatrix::new(RatMatrix::from_rows(rows)?)
}

/// `exp(tM)` entries over a generic scalar, e.g. a dual-number `t`.
pub fn exp_nilpotent_scalar<S: Scalar>(m: &RatMatrix, t: S) -> Result<Vec<Vec<S>>> {
    factorial_series(m, t)
}

/// Float-mode matrix exponential by scaling and squaring of a Taylor series.
/// Works for any matrix; not used by the exact suites.
pub fn expm_f64(m: &[[f64; 5]; 5], t: f64) -> [[f64; 5]; 5] {
    type M5 = [[f64; 5]; 5];
    fn mul(a: &M5, b: &M5) -> M5 {
        let mut out = [[0.0; 5]; 5];
        for i in 0..5 {
            for k in 0..5 {
                for j in 0..5 {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        out
    }
    let norm = m.iter().map(|r| r.iter().map(|v| (v * t).abs()).sum::<f64>()).fold(0.0, f64::max);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scale = t / f64::from(2u32.pow(squarings));
    let a: M5 = std::array::from_fn(|i| std::array::from_fn(|j| m[i][j] * scale));
    let mut sum: M5 = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 }));
    let mut term = sum;
    for k in 1..20 {
        term = mul(&term, &a);
        for row in term.iter_mut() {
            for v in row.iter_mut() {
                *v /= f64::from(k);
            }
        }
        for i in 0..5 {
            for j in 0..5 {
                sum[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        sum = mul(&sum, &sum);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::basis24;
    use crate::exact::{rat, Dual};

    #[test]
    fn act_examples() {
        let p = Point::from_ints([1, 2, -3, 4]);
        assert_eq!(ProjectiveMatrix::identity().act(&p, &int(7)).unwrap(), p);

        let t = exp_nilpotent(&linearize(GeneratorId::P(0)).unwrap(), &int(2)).unwrap();
        assert_eq!(t.act(&Point::from_ints([1, 0, 0, 0]), &int(1)).unwrap(), Point::from_ints([3, 0, 0, 0]));

        // c = (1,0,0,0), d = 0: a block permutation keeps det = 1
        let mut m = RatMatrix::zeros(5, 5);
        m[(0, 4)] = int(1);
        m[(4, 0)] = int(1);
        m[(1, 1)] = int(-1);
        m[(2, 2)] = int(1);
        m[(3, 3)] = int(1);
        let t = ProjectiveMatrix::new(m).unwrap();
        assert_eq!(t.act(&Point::from_ints([0, 1, 1, 1]), &int(1)), Err(Error::OnProjectiveHorizon));
    }

    #[test]
    fn compose_examples() {
        let t = exp_nilpotent(&linearize(GeneratorId::PPrime(2)).unwrap(), &rat(3, 7)).unwrap();
        assert_eq!(compose(&t, &ProjectiveMatrix::identity()), t);
        assert_eq!(compose(&t, &t.inverse()), ProjectiveMatrix::identity());

        let a = exp_nilpotent(&linearize(GeneratorId::P(1)).unwrap(), &int(2)).unwrap();
        let b = exp_nilpotent(&linearize(GeneratorId::P(1)).unwrap(), &int(5)).unwrap();
        let c = exp_nilpotent(&linearize(GeneratorId::P(1)).unwrap(), &int(7)).unwrap();
        assert_eq!(compose(&a, &b), c);
    }

    #[test]
    fn normalization_by_fifth_root() {
        let m = RatMatrix::identity(5).scale(&int(2));
        assert_eq!(ProjectiveMatrix::normalized(m).unwrap(), ProjectiveMatrix::identity());
        let mut m = RatMatrix::identity(5);
        m[(0, 0)] = int(2);
        assert!(ProjectiveMatrix::normalized(m.clone()).is_err());
        assert!(matches!(ProjectiveMatrix::new(m), Err(Error::DeterminantNotOne(_))));
    }

    #[test]
    fn linearize_examples() {
        let p0 = linearize(GeneratorId::P(0)).unwrap();
        let mut expected = RatMatrix::zeros(5, 5);
        expected[(0, 4)] = int(1);
        assert_eq!(p0, expected);

        let l01 = linearize(GeneratorId::L(0, 1)).unwrap();
        // η·A antisymmetric inside the A block, nothing outside it
        for i in 0..4 {
            assert!(l01[(i, 4)].is_zero() && l01[(4, i)].is_zero());
            for j in 0..4 {
                let lhs = &l01[(i, j)] * int(crate::catalog::eta(i));
                let rhs = &l01[(j, i)] * int(crate::catalog::eta(j));
                assert_eq!(lhs, -rhs);
            }
        }
        for g in basis24() {
            assert!(linearize(g).unwrap().trace().is_zero(), "{g}");
        }
    }

    #[test]
    fn induced_field_examples() {
        assert_eq!(induced_field(&linearize(GeneratorId::P(0)).unwrap(), &int(1)), VectorField::partial(0));
        assert!(induced_field(&RatMatrix::zeros(5, 5), &int(3)).is_zero());
        assert!(induced_field(&RatMatrix::identity(5), &int(3)).is_zero());
    }

    #[test]
    fn exp_examples() {
        for mu in 0..4u8 {
            let t = exp_nilpotent(&linearize(GeneratorId::P(mu)).unwrap(), &rat(5, 3)).unwrap();
            let p = Point::from_ints([1, -2, 3, 4]);
            let mut q = p.clone();
            q.0[usize::from(mu)] += rat(5, 3);
            assert_eq!(t.act(&p, &int(1)).unwrap(), q);
        }
        let m = linearize(GeneratorId::P(3)).unwrap();
        assert_eq!(exp_nilpotent(&m, &int(0)).unwrap(), ProjectiveMatrix::identity());
        assert_eq!(exp_nilpotent(&linearize(GeneratorId::L(0, 1)).unwrap(), &int(1)), Err(Error::NotNilpotent));
    }

    #[test]
    fn commutator_sign() {
        let ids = basis24();
        for a in &ids {
            for b in &ids {
                let (ma, mb) = (linearize(*a).unwrap(), linearize(*b).unwrap());
                let lhs = induced_field(&ma.commutator(&mb), &int(1));
                let fa = generator(*a).unwrap().specialize(&int(1)).unwrap();
                let fb = generator(*b).unwrap().specialize(&int(1)).unwrap();
                let rhs = fa.bracket(&fb).scale_rational(&int(COMMUTATOR_SIGN));
                assert_eq!(lhs, rhs, "{a} {b}");
            }
        }
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&[Point::from_ints([0, 0, 0, 0]), Point::from_ints([1, 1, 0, 0]), Point::from_ints([2, 2, 0, 0])]));
        assert!(!collinear(&[Point::from_ints([0, 0, 0, 0]), Point::from_ints([1, 0, 0, 0]), Point::from_ints([0, 1, 0, 0])]));
    }

    #[test]
    fn exp_derivative_is_the_field() {
        let p = Point(std::array::from_fn(|i| rat(i as i64 + 1, 3)));
        for mu in 0..4u8 {
            let m = linearize(GeneratorId::P(mu)).unwrap();
            let rows = exp_nilpotent_scalar(&m, Dual::new(int(0), int(1))).unwrap();
            let x = p.0.clone().map(Dual::constant);
            let img = act_scalar(&rows, &x, &int(1)).unwrap();
            let d: Vec<Rational> = img.iter().map(|v| v.derivative.clone()).collect();
            let field = generator(GeneratorId::P(mu)).unwrap().eval(&p, &int(1)).unwrap();
            assert_eq!(d, field.to_vec());
        }
    }

    #[test]
    fn float_expm_matches_nilpotent_series() {
        let m = linearize(GeneratorId::PPrime(1)).unwrap();
        let f: [[f64; 5]; 5] = std::array::from_fn(|i| std::array::from_fn(|j| crate::exact::rational::to_f64(&m[(i, j)])));
        let e = expm_f64(&f, 0.75);
        let exact = exp_nilpotent(&m, &rat(3, 4)).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let v = crate::exact::rational::to_f64(&exact.matrix()[(i, j)]);
                assert!((e[i][j] - v).abs() < 1e-12);
            }
        }
    }
}
