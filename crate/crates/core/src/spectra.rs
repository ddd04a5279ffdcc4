//! Distance spectra and the quantities derived from them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, DistMatrix, Graph};
use crate::linalg::{
    char_poly_exact, real_roots, symmetric_eigenvalues, CharPolyExact, SquareMatrix,
};
use crate::serde_util;

/// Relative off-diagonal tolerance for the Jacobi solver.
pub const JACOBI_TOL: f64 = 1e-10;
/// Absolute tolerance for grouping multiplicities and for inertia.
pub const GROUP_TOL: f64 = 1e-7;
/// Relative residual target for quotient-matrix roots.
pub const ROOT_TOL: f64 = 1e-12;

/// Real eigenvalues sorted descending, with inertia counted under `tol`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    #[serde(serialize_with = "serde_util::sig12_vec")]
    values: Vec<f64>,
    tol: f64,
    n_plus: usize,
    n_zero: usize,
    n_minus: usize,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let n_plus = values.iter().filter(|&&x| x > tol).count();
        let n_minus = values.iter().filter(|&&x| x < -tol).count();
        let n_zero = values.len() - n_plus - n_minus;
        Spectrum {
            values,
            tol,
            n_plus,
            n_zero,
            n_minus,
        }
    }

    /// Eigenvalues of a symmetric matrix via Jacobi, grouped at [`GROUP_TOL`].
    pub fn of_symmetric(mat: &SquareMatrix<f64>) -> Result<Self> {
        Ok(Self::new(
            symmetric_eigenvalues(mat, JACOBI_TOL)?,
            GROUP_TOL,
        ))
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// `(n_plus, n_zero, n_minus)`.
    pub fn inertia(&self) -> (usize, usize, usize) {
        (self.n_plus, self.n_zero, self.n_minus)
    }

    /// `rho_t`, 1-based.
    pub fn rho(&self, t: usize) -> f64 {
        self.values[t - 1]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    /// Absolute values, non-increasing.
    pub fn abs_sorted(&self) -> Vec<f64> {
        let mut a: Vec<f64> = self.values.iter().map(|x| x.abs()).collect();
        a.sort_by(|x, y| y.total_cmp(x));
        a
    }

    /// Distinct values with multiplicities; neighbours within `tol` merge.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize, f64)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((_, count, last)) if (*last - v).abs() <= self.tol => {
                    *count += 1;
                    *last = v;
                }
                _ => out.push((v, 1, v)),
            }
        }
        out.into_iter().map(|(v, c, _)| (v, c)).collect()
    }

    pub fn has_zero(&self) -> bool {
        self.n_zero > 0
    }
}

/// A graph's distance spectrum together with the distance matrix it came from.
#[derive(Debug, Clone)]
pub struct DistanceSpectrum {
    pub dist: DistMatrix,
    pub spectrum: Spectrum,
}

pub fn d_spectrum(g: &Graph) -> Result<DistanceSpectrum> {
    let dist = bfs_distances(g)?;
    let spectrum = Spectrum::of_symmetric(&dist.matrix().to_f64())?;
    Ok(DistanceSpectrum { dist, spectrum })
}

pub fn d_energy(g: &Graph) -> Result<f64> {
    Ok(d_spectrum(g)?.spectrum.energy())
}

/// `rho_1 - rho_2` of the distance spectrum.
pub fn spectral_gap(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter(
            "spectral gap needs at least two vertices".into(),
        ));
    }
    let s = d_spectrum(g)?.spectrum;
    Ok(s.rho(1) - s.rho(2))
}

/// Exact `sum_ij d(i,j)^2`.
pub fn s_d(g: &Graph) -> Result<u64> {
    Ok(bfs_distances(g)?.sum_of_squares())
}

pub fn distance_laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    let dist = bfs_distances(g)?;
    Spectrum::of_symmetric(&dist.distance_laplacian().to_f64())
}

/// Adjacency spectrum; disconnected graphs are fine.
pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    Spectrum::of_symmetric(&g.adjacency_matrix().to_f64())
}

pub fn distance_char_poly(g: &Graph) -> Result<CharPolyExact> {
    Ok(char_poly_exact(bfs_distances(g)?.matrix()))
}

pub fn adjacency_char_poly(g: &Graph) -> CharPolyExact {
    char_poly_exact(&g.adjacency_matrix())
}

/// Outcome of an exact distance-cospectrality test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CospectralVerdict {
    pub cospectral: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Compares the exact distance characteristic polynomials.
pub fn is_d_cospectral(g1: &Graph, g2: &Graph) -> Result<CospectralVerdict> {
    if g1.order() != g2.order() {
        return Ok(CospectralVerdict {
            cospectral: false,
            reason: Some(format!(
                "different orders: {} vs {}",
                g1.order(),
                g2.order()
            )),
        });
    }
    let p1 = distance_char_poly(g1)?;
    let p2 = distance_char_poly(g2)?;
    if p1 == p2 {
        return Ok(CospectralVerdict {
            cospectral: true,
            reason: None,
        });
    }
    let k = p1
        .coeffs()
        .iter()
        .zip(p2.coeffs())
        .rposition(|(a, b)| a != b)
        .expect("polynomials differ");
    Ok(CospectralVerdict {
        cospectral: false,
        reason: Some(format!(
            "characteristic polynomials differ at x^{k}: {} vs {}",
            p1.coeffs()[k],
            p2.coeffs()[k]
        )),
    })
}

/// Small integer matrix of block row sums under an equitable partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix {
    #[serde(serialize_with = "serde_util::matrix_rows")]
    entries: SquareMatrix<i64>,
}

/// Largest quotient order handled by [`small_real_eigenvalues`].
pub const MAX_QUOTIENT_ORDER: usize = 8;

impl QuotientMatrix {
    pub fn new(entries: SquareMatrix<i64>) -> Self {
        QuotientMatrix { entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Ok(Self::new(SquareMatrix::from_rows(rows)?))
    }

    pub fn entries(&self) -> &SquareMatrix<i64> {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.entries.order()
    }

    pub fn trace(&self) -> i64 {
        self.entries.trace()
    }

    pub fn char_poly(&self) -> CharPolyExact {
        char_poly_exact(&self.entries)
    }
}

/// Eigenvalues of a quotient matrix, descending.
///
/// The characteristic polynomial comes from Faddeev–LeVerrier; its roots
/// from Durand–Kerner run on each square-free factor. Quotients of
/// symmetric matrices under equitable partitions have real spectra, so a
/// root with a non-negligible imaginary part is an error.
pub fn small_real_eigenvalues(q: &QuotientMatrix, tol: f64) -> Result<Vec<f64>> {
    if q.order() > MAX_QUOTIENT_ORDER {
        return Err(Error::InvalidParameter(format!(
            "quotient order {} exceeds {MAX_QUOTIENT_ORDER}",
            q.order()
        )));
    }
    real_roots(&q.char_poly(), tol)
}

/// Whether every value of `sub` can be matched to a distinct value of
/// `full` within `tol`. Both are taken as multisets.
pub fn is_sub_multiset(sub: &[f64], full: &[f64], tol: f64) -> bool {
    let mut used = vec![false; full.len()];
    let mut sorted = sub.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    for v in sorted {
        let best = full
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .min_by(|(_, a), (_, b)| (*a - v).abs().total_cmp(&(*b - v).abs()));
        match best {
            Some((i, w)) if (w - v).abs() <= tol => used[i] = true,
            _ => return false,
        }
    }
    true
}

/// Largest elementwise deviation between two multisets after sorting, or
/// `None` when their sizes differ.
pub fn multiset_deviation(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| x.total_cmp(y));
    b.sort_by(|x, y| x.total_cmp(y));
    Some(
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn distance_spectra_of_small_graphs() {
        let k5 = d_spectrum(&Graph::complete(5).unwrap()).unwrap().spectrum;
        close(k5.values(), &[4.0, -1.0, -1.0, -1.0, -1.0], 1e-10);
        assert_eq!(k5.multiplicities(), vec![(k5.rho(1), 1), (k5.rho(2), 4)]);

        // Circulant oracle for first row [0,1,2,2,1]: 6, (sqrt5-3)/2 twice, -(sqrt5+3)/2 twice.
        let s5 = 5f64.sqrt();
        let c5 = d_spectrum(&Graph::cycle(5).unwrap()).unwrap().spectrum;
        let a = (s5 - 3.0) / 2.0;
        let b = -(s5 + 3.0) / 2.0;
        close(c5.values(), &[6.0, a, a, b, b], 1e-10);
        close(&[a, b], &[-0.381966, -2.618034], 1e-6);

        let r3 = 3f64.sqrt();
        let p3 = d_spectrum(&Graph::path(3).unwrap()).unwrap().spectrum;
        close(p3.values(), &[1.0 + r3, 1.0 - r3, -2.0], 1e-10);
        assert_eq!(p3.inertia(), (1, 0, 2));
    }

    #[test]
    fn energies() {
        assert!((d_energy(&Graph::complete(4).unwrap()).unwrap() - 6.0).abs() < 1e-10);
        let p3 = d_energy(&Graph::path(3).unwrap()).unwrap();
        assert!((p3 - 2.0 * (1.0 + 3f64.sqrt())).abs() < 1e-10);
        assert!((p3 - 5.4641016).abs() < 1e-7);
        assert!((d_energy(&Graph::cycle(4).unwrap()).unwrap() - 8.0).abs() < 1e-10);
    }

    #[test]
    fn gaps() {
        assert!((spectral_gap(&Graph::complete(6).unwrap()).unwrap() - 6.0).abs() < 1e-10);
        let p3 = spectral_gap(&Graph::path(3).unwrap()).unwrap();
        assert!((p3 - 2.0 * 3f64.sqrt()).abs() < 1e-10);
        let c5 = spectral_gap(&Graph::cycle(5).unwrap()).unwrap();
        assert!((c5 - (15.0 - 5f64.sqrt()) / 2.0).abs() < 1e-10);
        assert!(spectral_gap(&Graph::complete(1).unwrap()).is_err());
    }

    #[test]
    fn sum_of_squares_exact() {
        assert_eq!(s_d(&Graph::complete(4).unwrap()).unwrap(), 12);
        assert_eq!(s_d(&Graph::path(3).unwrap()).unwrap(), 12);
        assert_eq!(s_d(&Graph::cycle(4).unwrap()).unwrap(), 24);
    }

    #[test]
    fn distance_laplacian() {
        let k4 = distance_laplacian_spectrum(&Graph::complete(4).unwrap()).unwrap();
        close(k4.values(), &[4.0, 4.0, 4.0, 0.0], 1e-10);
        let c4 = distance_laplacian_spectrum(&Graph::cycle(4).unwrap()).unwrap();
        close(c4.values(), &[6.0, 6.0, 4.0, 0.0], 1e-10);
        let gap = spectral_gap(&Graph::cycle(4).unwrap()).unwrap();
        assert!((c4.rho(3) - gap).abs() < 1e-10);
    }

    #[test]
    fn adjacency_spectra() {
        let c6 = adjacency_spectrum(&Graph::cycle(6).unwrap()).unwrap();
        close(c6.values(), &[2.0, 1.0, 1.0, -1.0, -1.0, -2.0], 1e-10);

        let c3 = Graph::cycle(3).unwrap();
        let u = disjoint_union(&[c3.clone(), c3]).unwrap();
        let s = adjacency_spectrum(&u).unwrap();
        close(s.values(), &[2.0, 2.0, -1.0, -1.0, -1.0, -1.0], 1e-10);

        let (a, b) = (2usize, 3usize);
        let kab = adjacency_spectrum(&Graph::complete_bipartite(a, b).unwrap()).unwrap();
        let r = ((a * b) as f64).sqrt();
        close(kab.values(), &[r, 0.0, 0.0, 0.0, -r], 1e-10);
    }

    #[test]
    fn exact_char_polys() {
        let p = distance_char_poly(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p.to_string(), "x^3 - 6x - 4");
        let k3 = distance_char_poly(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(k3.to_string(), "x^3 - 3x - 2");
        let k2 = distance_char_poly(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.to_string(), "x^2 - 1");
    }

    #[test]
    fn cospectrality() {
        let k4 = Graph::complete(4).unwrap();
        let relabeled =
            Graph::from_edges(4, k4.edges().iter().map(|&(a, b)| (3 - a, 3 - b))).unwrap();
        assert!(is_d_cospectral(&k4, &relabeled).unwrap().cospectral);

        let v = is_d_cospectral(&Graph::path(4).unwrap(), &Graph::star(4).unwrap()).unwrap();
        assert!(!v.cospectral);

        let v = is_d_cospectral(&k4, &Graph::complete(5).unwrap()).unwrap();
        assert!(!v.cospectral);
        assert!(v.reason.unwrap().contains("different orders"));
    }

    #[test]
    fn quotient_roots() {
        let id = QuotientMatrix::new(SquareMatrix::from_fn(4, |i, j| i64::from(i == j)));
        assert_eq!(small_real_eigenvalues(&id, ROOT_TOL).unwrap(), vec![1.0; 4]);

        let q = QuotientMatrix::from_rows(vec![
            vec![2, 1, 6, 12],
            vec![2, 0, 12, 18],
            vec![2, 2, 10, 14],
            vec![4, 3, 14, 16],
        ])
        .unwrap();
        let r = small_real_eigenvalues(&q, ROOT_TOL).unwrap();
        assert_eq!(q.trace(), 28);
        assert!((r.iter().sum::<f64>() - 28.0).abs() < 1e-9);
        // Frozen from numpy.linalg.eigvals on the same matrix.
        close(
            &r,
            &[31.88041486, 1.06237151, -1.40019136, -3.54259501],
            1e-7,
        );

        let big = QuotientMatrix::new(SquareMatrix::zeros(9));
        assert!(small_real_eigenvalues(&big, ROOT_TOL).is_err());
    }

    #[test]
    fn multiset_helpers() {
        assert!(is_sub_multiset(&[1.0, 1.0], &[1.0, 2.0, 1.0], 1e-9));
        assert!(!is_sub_multiset(&[1.0, 1.0], &[1.0, 2.0], 1e-9));
        assert_eq!(multiset_deviation(&[1.0, 2.0], &[2.0, 1.5]), Some(0.5));
        assert_eq!(multiset_deviation(&[1.0], &[]), None);
    }
}
