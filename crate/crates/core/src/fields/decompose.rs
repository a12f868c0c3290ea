//! Exact linear decomposition of vector fields over the field ℚ(λ).
//!
//! Each basis field is flattened to its coefficients on `(component,
//! monomial)` pairs. A one-time elimination picks a nonsingular square
//! submatrix; solving against it and then checking the full residual gives
//! either exact coefficients or a concrete stray term.

use std::collections::BTreeSet;
use std::fmt;

use super::vector_field::VectorField;
use super::xpoly::Monomial;
use crate::error::Error;
use crate::exact::LambdaRat;

/// The first term (component order, then graded-lex) left over after
/// subtracting the best combination of basis fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotInSpan {
    pub component: usize,
    pub monomial: Monomial,
    pub coeff: LambdaRat,
}

impl fmt::Display for NotInSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*{}∂{}", self.coeff, self.monomial, self.component)
    }
}

impl From<NotInSpan> for Error {
    fn from(w: NotInSpan) -> Self {
        Error::NotInSpan { witness: w.to_string() }
    }
}

#[derive(Clone, Debug)]
pub struct Decomposer {
    basis: Vec<VectorField>,
    pivot_cols: Vec<usize>,
    pivot_rows: Vec<(usize, Monomial)>,
    inverse: Vec<Vec<LambdaRat>>,
}

impl Decomposer {
    pub fn new(basis: Vec<VectorField>) -> Self {
        let rows: Vec<(usize, Monomial)> = basis
            .iter()
            .flat_map(|b| {
                b.components()
                    .iter()
                    .enumerate()
                    .flat_map(|(mu, c)| c.terms().map(move |(m, _)| (mu, *m)))
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let n = basis.len();
        let mut a: Vec<Vec<LambdaRat>> = rows
            .iter()
            .map(|(mu, m)| basis.iter().map(|b| b.component(*mu).coeff(m)).collect())
            .collect();
        let mut order: Vec<usize> = (0..rows.len()).collect();

        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for c in 0..n {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            order.swap(p, rank);
            let piv = a[rank][c].clone();
            for r in rank + 1..a.len() {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &piv;
                for j in c..n {
                    let d = &f * &a[rank][j];
                    a[r][j] = &a[r][j] - &d;
                }
            }
            pivot_cols.push(c);
            rank += 1;
        }

        let pivot_rows: Vec<(usize, Monomial)> = order[..rank].iter().map(|&i| rows[i]).collect();
        let square: Vec<Vec<LambdaRat>> = pivot_rows
            .iter()
            .map(|(mu, m)| pivot_cols.iter().map(|&c| basis[c].component(*mu).coeff(m)).collect())
            .collect();
        let inverse = invert(square);
        Self { basis, pivot_cols, pivot_rows, inverse }
    }

    pub fn basis(&self) -> &[VectorField] {
        &self.basis
    }

    /// Rank of the basis over ℚ(λ).
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn is_independent(&self) -> bool {
        self.rank() == self.basis.len()
    }

    /// Coefficients `c_i` with `x = Σ c_i B_i`. For a dependent basis the
    /// non-pivot coefficients are zero.
    pub fn decompose(&self, x: &VectorField) -> Result<Vec<LambdaRat>, NotInSpan> {
        let rhs: Vec<LambdaRat> = self.pivot_rows.iter().map(|(mu, m)| x.component(*mu).coeff(m)).collect();
        let mut coeffs = vec![LambdaRat::zero(); self.basis.len()];
        for (k, &col) in self.pivot_cols.iter().enumerate() {
            let mut acc = LambdaRat::zero();
            for (inv, r) in self.inverse[k].iter().zip(&rhs) {
                if !inv.is_zero() && !r.is_zero() {
                    acc = &acc + &(inv * r);
                }
            }
            coeffs[col] = acc;
        }
        let residual = x - &self.recombine(&coeffs);
        for (mu, comp) in residual.components().iter().enumerate() {
            if let Some((m, c)) = comp.terms().next() {
                return Err(NotInSpan { component: mu, monomial: *m, coeff: c.clone() });
            }
        }
        Ok(coeffs)
    }

    pub fn recombine(&self, coeffs: &[LambdaRat]) -> VectorField {
        recombine(&self.basis, coeffs)
    }
}

pub fn recombine(basis: &[VectorField], coeffs: &[LambdaRat]) -> VectorField {
    basis
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(VectorField::zero(), |acc, (b, c)| &acc + &b.scale(c))
}

/// One-shot decomposition; see [`Decomposer`] for repeated use of one basis.
pub fn decompose(x: &VectorField, basis: &[VectorField]) -> Result<Vec<LambdaRat>, NotInSpan> {
    Decomposer::new(basis.to_vec()).decompose(x)
}

/// Gauss–Jordan over ℚ(λ); the input is nonsingular by construction.
fn invert(mut a: Vec<Vec<LambdaRat>>) -> Vec<Vec<LambdaRat>> {
    let n = a.len();
    let mut inv: Vec<Vec<LambdaRat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { LambdaRat::one() } else { LambdaRat::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("pivot submatrix is nonsingular");
        a.swap(p, c);
        inv.swap(p, c);
        let piv = a[c][c].recip().expect("nonzero pivot");
        for j in 0..n {
            a[c][j] = &a[c][j] * &piv;
            inv[c][j] = &inv[c][j] * &piv;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for j in 0..n {
                if !a[c][j].is_zero() {
                    a[r][j] = &a[r][j] - &(&f * &a[c][j]);
                }
                if !inv[c][j].is_zero() {
                    inv[r][j] = &inv[r][j] - &(&f * &inv[c][j]);
                }
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::fields::xpoly::XPoly;

    #[test]
    fn simple_span() {
        let basis = vec![VectorField::partial(0), VectorField::partial(1), VectorField::euler()];
        let target = &(&VectorField::partial(0).scale_rational(&rat(3, 2)) - &VectorField::euler())
            + &VectorField::partial(1);
        let c = decompose(&target, &basis).unwrap();
        assert_eq!(c, vec![LambdaRat::from(rat(3, 2)), LambdaRat::one(), LambdaRat::from(int(-1))]);
    }

    #[test]
    fn stray_term_is_reported() {
        let basis = vec![VectorField::partial(0)];
        let mut c: [XPoly; 4] = Default::default();
        c[2] = XPoly::var(3);
        let err = decompose(&VectorField::new(c), &basis).unwrap_err();
        assert_eq!(err.component, 2);
        assert_eq!(err.monomial, Monomial::var(3));
    }

    #[test]
    fn zero_field_gives_zero_coefficients() {
        let basis = vec![VectorField::partial(0), VectorField::euler()];
        let c = decompose(&VectorField::zero(), &basis).unwrap();
        assert!(c.iter().all(LambdaRat::is_zero));
    }

    #[test]
    fn dependent_basis_rank() {
        let d = Decomposer::new(vec![
            VectorField::partial(0),
            VectorField::partial(0).scale_rational(&int(2)),
        ]);
        assert_eq!(d.rank(), 1);
        assert!(!d.is_independent());
    }
}
