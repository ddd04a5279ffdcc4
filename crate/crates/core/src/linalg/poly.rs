//! Univariate polynomials over the rationals, just enough for square-free
//! factorisation of small characteristic polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Dense polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RatPoly(Vec<BigRational>);

impl RatPoly {
    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        RatPoly(
            coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        )
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn derivative(&self) -> Self {
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
        .trimmed()
    }

    fn monic(self) -> Self {
        match self.0.last().cloned() {
            Some(lead) => RatPoly(self.0.into_iter().map(|c| c / &lead).collect()),
            None => self,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        RatPoly(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&zero) - other.0.get(k).unwrap_or(&zero))
                .collect(),
        )
        .trimmed()
    }

    /// Quotient and remainder; `div` must be nonzero.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let mut rem = self.0.clone();
        let dd = div.degree();
        let lead = div.0[dd].clone();
        if rem.len() < div.0.len() {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let coef = &rem[k + dd] / &lead;
            if !coef.is_zero() {
                for (j, d) in div.0.iter().enumerate() {
                    rem[k + j] -= &coef * d;
                }
            }
            quot[k] = coef;
        }
        rem.truncate(dd);
        (RatPoly(quot).trimmed(), RatPoly(rem).trimmed())
    }

    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }
}

/// Yun's square-free factorisation: returns `(factor, multiplicity)` pairs
/// with `f = c * prod factor^multiplicity`, each factor square-free and monic.
pub(crate) fn square_free_factors(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let fp = f.derivative();
    let c = f.gcd(&fp);
    let mut w = f.div_exact(&c);
    let mut y = fp.div_exact(&c);
    let mut z = y.sub(&w.derivative());
    let mut mult = 1;
    while !w.is_constant() {
        let g = w.gcd(&z);
        if !g.is_constant() {
            out.push((g.clone().monic(), mult));
        }
        w = w.div_exact(&g);
        y = z.div_exact(&g);
        z = y.sub(&w.derivative());
        mult += 1;
    }
    out
}

impl One for RatPoly {
    fn one() -> Self {
        RatPoly(vec![BigRational::one()])
    }
}

impl std::ops::Mul for RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly(out).trimmed()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_integers(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x-2) and (x-1)(x+3)
        let g = p(&[2, -3, 1]).gcd(&p(&[-3, 2, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn yun_separates_multiplicities() {
        // (x-1)^4
        let f = p(&[1, -4, 6, -4, 1]);
        let fac = square_free_factors(&f);
        assert_eq!(fac, vec![(p(&[-1, 1]), 4)]);

        // (x-2)(x+1)^2
        let f = p(&[-2, -3, 0, 1]);
        let fac = square_free_factors(&f);
        assert_eq!(fac, vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 2)]);
    }

    #[test]
    fn yun_product_reconstructs() {
        // x^2 (x-3)^3 (x+1)
        let f = p(&[0, 1]) * p(&[0, 1]) * p(&[-3, 1]) * p(&[-3, 1]) * p(&[-3, 1]) * p(&[1, 1]);
        let fac = square_free_factors(&f);
        let mut rebuilt = RatPoly::one();
        for (g, m) in &fac {
            for _ in 0..*m {
                rebuilt = rebuilt * g.clone();
            }
        }
        assert_eq!(rebuilt, f);
    }
}
