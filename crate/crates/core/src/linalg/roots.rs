//! Durand–Kerner (Weierstrass) simultaneous root iteration.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 500;

/// All complex roots of the polynomial with coefficients `coeffs`
/// (lowest degree first, leading coefficient nonzero).
///
/// Iterates until every root's relative residual
/// `|p(z)| / sum |c_k| |z|^k` is below `tol`.
pub fn durand_kerner(coeffs: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    let deg = coeffs.len().saturating_sub(1);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[deg];
    if lead == 0.0 || !lead.is_finite() {
        return Err(Error::InvalidParameter(
            "leading coefficient must be finite and nonzero".into(),
        ));
    }
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    if deg == 1 {
        return Ok(vec![Complex64::new(-monic[0], 0.0)]);
    }

    // Cauchy bound on root moduli; start on a circle of that radius with an
    // angular offset so no start is real or symmetric about the real axis.
    let radius = 1.0 + monic[..deg].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / deg as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        residual = max_relative_residual(&monic, &z);
        if residual < tol {
            return Ok(z);
        }
        for k in 0..deg {
            let num = horner(&monic, z[k]);
            let den = (0..deg)
                .filter(|&j| j != k)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[k] - z[j]));
            if den.norm() > 0.0 {
                z[k] -= num / den;
            } else {
                z[k] += Complex64::new(tol.sqrt(), tol.sqrt());
            }
        }
    }
    Err(Error::RootFinding {
        iterations: MAX_ITERATIONS,
        residual,
        tol,
    })
}

pub(crate) fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let scale = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * z.norm() + c.abs());
    horner(coeffs, z).norm() / scale.max(f64::MIN_POSITIVE)
}

fn max_relative_residual(coeffs: &[f64], z: &[Complex64]) -> f64 {
    z.iter()
        .map(|&zk| relative_residual(coeffs, zk))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real_sorted(mut z: Vec<Complex64>) -> Vec<f64> {
        for r in &z {
            assert!(r.im.abs() < 1e-9, "{r}");
        }
        z.sort_by(|a, b| b.re.total_cmp(&a.re));
        z.into_iter().map(|r| r.re).collect()
    }

    #[test]
    fn cubic_with_known_roots() {
        // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
        let r = real_sorted(durand_kerner(&[6.0, -7.0, 0.0, 1.0], 1e-14).unwrap());
        for (g, w) in r.iter().zip([2.0, 1.0, -3.0]) {
            assert!((g - w).abs() < 1e-10);
        }
    }

    #[test]
    fn complex_pair() {
        // x^2 + 1
        let mut z = durand_kerner(&[1.0, 0.0, 1.0], 1e-14).unwrap();
        z.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((z[0] - Complex64::new(0.0, -1.0)).norm() < 1e-10);
        assert!((z[1] - Complex64::new(0.0, 1.0)).norm() < 1e-10);
    }

    #[test]
    fn linear_and_constant() {
        assert!(durand_kerner(&[3.0], 1e-12).unwrap().is_empty());
        let z = durand_kerner(&[4.0, 2.0], 1e-12).unwrap();
        assert_eq!(z, vec![Complex64::new(-2.0, 0.0)]);
        assert!(durand_kerner(&[1.0, 0.0], 1e-12).is_err());
    }

    #[test]
    fn non_monic_input() {
        // 2x^2 - 8
        let r = real_sorted(durand_kerner(&[-8.0, 0.0, 2.0], 1e-14).unwrap());
        assert!((r[0] - 2.0).abs() < 1e-10 && (r[1] + 2.0).abs() < 1e-10);
    }
}
