//! Cyclic Jacobi eigenvalue iteration for real symmetric matrices.

use super::SquareMatrix;
use crate::error::{Error, Result};

/// Sweep budget before giving up.
pub const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a real symmetric matrix, sorted in descending order.
///
/// Plane rotations are applied in cyclic row order until the off-diagonal
/// Frobenius norm drops below `tol * ||mat||_F`. One extra sweep is run once
/// the threshold is met; convergence is quadratic at that stage so it costs
/// little and pushes degenerate eigenvalues well below `tol`.
///
/// Only the lower/upper symmetric structure is used; the caller guarantees
/// symmetry.
pub fn symmetric_eigenvalues(mat: &SquareMatrix<f64>, tol: f64) -> Result<Vec<f64>> {
    // also rejects NaN
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Jacobi tolerance must be positive, got {tol}"
        )));
    }
    let n = mat.order();
    let mut a = mat.clone();
    let norm = frobenius(&a);
    if n <= 1 || norm == 0.0 {
        return Ok(sorted_desc((0..n).map(|i| a[(i, i)]).collect()));
    }
    let threshold = tol * norm;

    let mut polish = false;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off < threshold {
            if polish || off == 0.0 {
                return Ok(sorted_desc((0..n).map(|i| a[(i, i)]).collect()));
            }
            polish = true;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }
    let residual = off_diagonal_norm(&a);
    if residual < threshold {
        return Ok(sorted_desc((0..n).map(|i| a[(i, i)]).collect()));
    }
    Err(Error::NoConvergence {
        sweeps: MAX_SWEEPS,
        residual,
    })
}

/// Annihilates `a[p][q]` with the rotation `A <- P^T A P`.
fn rotate(a: &mut SquareMatrix<f64>, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.order();

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
}

fn frobenius(a: &SquareMatrix<f64>) -> f64 {
    a.as_slice().iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_diagonal_norm(a: &SquareMatrix<f64>) -> f64 {
    let n = a.order();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|x, y| y.total_cmp(x));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: Vec<Vec<f64>>) -> SquareMatrix<f64> {
        SquareMatrix::from_rows(rows).unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < tol, "got {got:?}, want {want:?}");
        }
    }

    #[test]
    fn complete_graph_distance_matrix() {
        let d = SquareMatrix::from_fn(4, |i, j| if i == j { 0.0 } else { 1.0 });
        let ev = symmetric_eigenvalues(&d, 1e-10).unwrap();
        assert_close(&ev, &[3.0, -1.0, -1.0, -1.0], 1e-12);
    }

    #[test]
    fn path_three_distance_matrix() {
        let d = mat(vec![
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 1.0],
            vec![2.0, 1.0, 0.0],
        ]);
        let r3 = 3f64.sqrt();
        let ev = symmetric_eigenvalues(&d, 1e-10).unwrap();
        assert_close(&ev, &[1.0 + r3, 1.0 - r3, -2.0], 1e-12);
    }

    #[test]
    fn four_cycle_distance_matrix() {
        let d = SquareMatrix::from_fn(4, |i, j| {
            let k = (i as i64 - j as i64).rem_euclid(4);
            [0.0, 1.0, 2.0, 1.0][k as usize]
        });
        let ev = symmetric_eigenvalues(&d, 1e-10).unwrap();
        assert_close(&ev, &[4.0, 0.0, -2.0, -2.0], 1e-12);
    }

    #[test]
    fn trivial_inputs() {
        assert!(symmetric_eigenvalues(&SquareMatrix::zeros(0), 1e-10)
            .unwrap()
            .is_empty());
        assert_eq!(
            symmetric_eigenvalues(&mat(vec![vec![7.5]]), 1e-10).unwrap(),
            vec![7.5]
        );
        assert_eq!(
            symmetric_eigenvalues(&SquareMatrix::zeros(3), 1e-10).unwrap(),
            vec![0.0; 3]
        );
        assert!(symmetric_eigenvalues(&mat(vec![vec![1.0]]), 0.0).is_err());
    }

    #[test]
    fn diagonal_input_is_sorted() {
        let d = mat(vec![
            vec![-1.0, 0.0, 0.0],
            vec![0.0, 5.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ]);
        assert_eq!(
            symmetric_eigenvalues(&d, 1e-10).unwrap(),
            vec![5.0, 2.0, -1.0]
        );
    }
}
