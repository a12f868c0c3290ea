//! Exact arithmetic kernel: rationals, polynomials and rational functions in
//! λ = l⁻², dual numbers, and small rational matrices.
//!
//! The speed of light is fixed to 1 throughout (x⁰ = ct), and the length `l`
//! enters only through λ.

pub mod dual;
pub mod lambda;
pub mod matrix;
pub mod rational;
pub mod scalar;

pub use dual::{dual_lift, Dual};
pub use lambda::{lambda_eval, LambdaPoly, LambdaRat};
pub use matrix::RatMatrix;
pub use rational::{int, parse_rational, rat, rat_normalize, sqrt_exact, Rational};
pub use scalar::Scalar;

/// λ = l⁻² for a numeric length.
pub fn lambda_from_length(l: &Rational) -> crate::Result<Rational> {
    use num_traits::Zero;
    if l.is_zero() {
        return Err(crate::Error::ZeroDenominator);
    }
    Ok((l * l).recip())
}
