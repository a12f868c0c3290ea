//! Seeded generators for rational test data: points, domain points,
//! perfect-square boost parameters and Lorentz matrices.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::beltrami::{in_domain, minkowski_dot, sigma, LorentzMatrix, Signature};
use crate::exact::{int, rat, RatMatrix, Rational};
use crate::fields::Point;

/// Deterministic source of small rationals.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `p/q` with `|p| ≤ num_bound`, `1 ≤ q ≤ den_bound`.
    pub fn rational(&mut self, num_bound: i64, den_bound: i64) -> Rational {
        let p = self.rng.random_range(-num_bound..=num_bound);
        let q = self.rng.random_range(1..=den_bound);
        rat(p, q)
    }

    pub fn point(&mut self, num_bound: i64, den_bound: i64) -> Point {
        Point(std::array::from_fn(|_| self.rational(num_bound, den_bound)))
    }

    /// A point with σ_s(x) > 0, coordinates scaled to the radius `1/√λ`.
    pub fn domain_point(&mut self, s: Signature, lam: &Rational) -> Point {
        let scale = radius_scale(lam);
        loop {
            let mut p = self.point(9, 10);
            for c in p.0.iter_mut() {
                *c = &*c * &scale / int(10);
            }
            if in_domain(s, &p, lam) {
                return p;
            }
        }
    }

    /// A parameter `a` with σ_s(a) the square of a nonzero rational.
    ///
    /// Parametrizes the conic `1 − k t² = w²` along a random direction `v`,
    /// `k = sλ η(v, v)`, through `(t, w) = (0, 1)`.
    pub fn perfect_square_point(&mut self, s: Signature, lam: &Rational) -> Point {
        let scale = radius_scale(lam);
        loop {
            let v = self.point(4, 4);
            let k = int(s.sign()) * lam * minkowski_dot(&v.0, &v.0);
            let m = self.rational(6, 5);
            let denom = &k + &m * &m;
            if k.is_zero() || denom.is_zero() {
                continue;
            }
            let t = -(int(2) * &m) / denom;
            let a = Point(std::array::from_fn(|i| &t * &v.0[i]));
            let w = Rational::one() + &m * &t;
            if w.is_zero() || a.0.iter().any(|c| c.abs() > &scale * int(4)) {
                continue;
            }
            debug_assert_eq!(sigma(s, &a, &a, lam), &w * &w);
            return a;
        }
    }

    /// A proper orthochronous Lorentz matrix from the Cayley transform
    /// `L = (I + K)(I − K)⁻¹`, `K = ηA`, `A` antisymmetric.
    pub fn lorentz(&mut self) -> LorentzMatrix {
        loop {
            let mut a = RatMatrix::zeros(4, 4);
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let v = self.rational(1, 3);
                    a[(j, i)] = -v.clone();
                    a[(i, j)] = v;
                }
            }
            let k = &RatMatrix::diagonal(&[int(1), int(-1), int(-1), int(-1)]) * &a;
            let id = RatMatrix::identity(4);
            let Ok(inv) = (&id - &k).inverse() else { continue };
            let l = &(&id + &k) * &inv;
            if l[(0, 0)].is_positive() {
                if let Ok(l) = LorentzMatrix::new(l) {
                    return l;
                }
            }
        }
    }

    /// A 5×5 integer matrix with determinant one, built from unit triangular factors.
    pub fn unimodular(&mut self) -> RatMatrix {
        let mut lower = RatMatrix::identity(5);
        let mut upper = RatMatrix::identity(5);
        for i in 0..5 {
            for j in 0..i {
                lower[(i, j)] = int(self.rng.random_range(-2..=2));
                upper[(j, i)] = int(self.rng.random_range(-2..=2));
            }
        }
        &lower * &upper
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}

/// A rational close to `1/√λ`, used to keep samples at the curvature scale.
fn radius_scale(lam: &Rational) -> Rational {
    if !lam.is_positive() {
        return int(1);
    }
    let approx = (1.0 / crate::exact::rational::to_f64(lam).sqrt() * 64.0).round() as i64;
    rat(approx.max(1), 64)
}
