//! Exact characteristic polynomials over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SquareMatrix;

/// Coefficients `c_0..c_n` of `det(xI - M) = sum c_k x^k`, lowest degree first.
///
/// Always monic; `c_{n-1} = -trace(M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPolyExact {
    coeffs: Vec<BigInt>,
}

impl CharPolyExact {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients as `f64`, lowest degree first.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Number of sign changes in the coefficient sequence, ignoring zeros.
    /// By Descartes' rule this bounds the count of positive roots.
    pub fn sign_changes(&self) -> usize {
        count_sign_changes(self.coeffs.iter().map(|c| c.signum()))
    }

    /// Sign changes of `p(-x)`; bounds the count of negative roots.
    pub fn sign_changes_negated(&self) -> usize {
        count_sign_changes(self.coeffs.iter().enumerate().map(|(k, c)| {
            if k % 2 == 1 {
                -c.signum()
            } else {
                c.signum()
            }
        }))
    }

    /// Multiplicity of the root `x = 0`.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

fn count_sign_changes(signs: impl Iterator<Item = BigInt>) -> usize {
    let mut last: Option<BigInt> = None;
    let mut changes = 0;
    for s in signs.filter(|s| !s.is_zero()) {
        if let Some(l) = &last {
            if *l != s {
                changes += 1;
            }
        }
        last = Some(s);
    }
    changes
}

impl fmt::Display for CharPolyExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Faddeev–LeVerrier recurrence over exact integers.
///
/// `M_0 = 0`, `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
/// Every division is exact for integer input.
pub fn char_poly_exact(mat: &SquareMatrix<i64>) -> CharPolyExact {
    let n = mat.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // a_m holds A * M_{k-1}; starts as A * 0.
    let mut a_m: SquareMatrix<BigInt> = SquareMatrix::zeros(n);
    for k in 1..=n {
        let mut m_k = a_m;
        for i in 0..n {
            m_k[(i, i)] += &coeffs[n - k + 1];
        }
        a_m = multiply_small(mat, &m_k);
        let trace: BigInt = (0..n).map(|i| &a_m[(i, i)]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        coeffs[n - k] = -q;
    }
    CharPolyExact { coeffs }
}

fn multiply_small(a: &SquareMatrix<i64>, b: &SquareMatrix<BigInt>) -> SquareMatrix<BigInt> {
    let n = a.order();
    let mut out: SquareMatrix<BigInt> = SquareMatrix::zeros(n);
    for i in 0..n {
        for l in 0..n {
            let ail = a[(i, l)];
            if ail == 0 {
                continue;
            }
            let ail = BigInt::from(ail);
            for j in 0..n {
                if !b[(l, j)].is_zero() {
                    out[(i, j)] += &ail * &b[(l, j)];
                }
            }
        }
    }
    out
}
