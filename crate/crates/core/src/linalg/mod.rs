//! Numerical and exact linear-algebra kernels.

mod charpoly;
mod jacobi;
mod matrix;
mod poly;
mod roots;

pub use charpoly::{char_poly_exact, CharPolyExact};
pub use jacobi::{symmetric_eigenvalues, MAX_SWEEPS};
pub use matrix::SquareMatrix;
pub use roots::durand_kerner;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Real roots (with multiplicity, descending) of an exact integer polynomial
/// known to be real-rooted.
///
/// The polynomial is split into square-free factors first so that
/// Durand–Kerner only ever sees simple roots. A root whose imaginary part
/// exceeds `10 * tol * max(1, |z|)` is reported as an error.
pub fn real_roots(poly: &CharPolyExact, tol: f64) -> Result<Vec<f64>> {
    let exact = poly::RatPoly::from_integers(poly.coeffs());
    let mut out = Vec::with_capacity(poly.degree());
    for (factor, mult) in poly::square_free_factors(&exact) {
        let coeffs = factor.to_f64();
        for z in durand_kerner(&coeffs, tol)? {
            if z.im.abs() > 10.0 * tol * z.norm().max(1.0) {
                return Err(Error::NonRealEigenvalue { re: z.re, im: z.im });
            }
            let root = newton_polish(&coeffs, z.re);
            out.extend(std::iter::repeat_n(root, mult));
        }
    }
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

/// A few real Newton steps on a simple root; keeps the input if a step
/// would not reduce the residual.
fn newton_polish(coeffs: &[f64], mut x: f64) -> f64 {
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();
    for _ in 0..3 {
        let fx = roots::horner(coeffs, Complex64::new(x, 0.0)).re;
        let dfx = roots::horner(&deriv, Complex64::new(x, 0.0)).re;
        if dfx == 0.0 {
            break;
        }
        let next = x - fx / dfx;
        let fnext = roots::horner(coeffs, Complex64::new(next, 0.0)).re;
        if fnext.abs() >= fx.abs() {
            break;
        }
        x = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(rows: Vec<Vec<i64>>) -> CharPolyExact {
        char_poly_exact(&SquareMatrix::from_rows(rows).unwrap())
    }

    #[test]
    fn repeated_roots_are_recovered_exactly() {
        let id = SquareMatrix::from_fn(4, |i, j| i64::from(i == j));
        let r = real_roots(&char_poly_exact(&id), 1e-12).unwrap();
        assert_eq!(r, vec![1.0; 4]);
    }

    #[test]
    fn complex_roots_are_rejected() {
        // rotation by 90 degrees: x^2 + 1
        let err = real_roots(&cp(vec![vec![0, -1], vec![1, 0]]), 1e-12).unwrap_err();
        assert!(matches!(err, Error::NonRealEigenvalue { .. }));
    }

    #[test]
    fn zero_roots() {
        let r = real_roots(&cp(vec![vec![0, 0], vec![0, 0]]), 1e-12).unwrap();
        assert_eq!(r, vec![0.0, 0.0]);
    }
}
