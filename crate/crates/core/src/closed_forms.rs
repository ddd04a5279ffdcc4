//! Closed-form distance spectra of the subdivision joins of regular graphs,
//! and generators for distance-equienergetic families built from them.
//!
//! Every closed form here is paired with a brute-force route (construct the
//! join, take its distance matrix, run Jacobi) so that disagreements are
//! reported rather than trusted.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{to_graph6, Graph};
use crate::linalg::{char_poly_exact, CharPolyExact, SquareMatrix};
use crate::ops::{
    central_join, cycle_union, partitions_min3, subdivision_join, CentralJoinKind, JoinKind,
};
use crate::serde_util;
use crate::spectra::{
    adjacency_char_poly, adjacency_spectrum, d_spectrum, is_sub_multiset, multiset_deviation,
    small_real_eigenvalues, QuotientMatrix, Spectrum, GROUP_TOL, ROOT_TOL,
};

/// Agreement threshold between a closed form and the brute-force spectrum.
pub const ORACLE_TOL: f64 = 1e-7;
/// Absolute tolerance for equal energies within a family.
pub const ENERGY_TOL: f64 = 1e-8;

/// Which clause of a closed form produced a listed eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    FromG1,
    FromG2,
    ZeroBlock,
    MinusTwoBlock,
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ListedEigenvalue {
    #[serde(serialize_with = "serde_util::sig12")]
    pub value: f64,
    pub multiplicity: usize,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormSpectrum {
    pub kind: JoinKind,
    pub listed: Vec<ListedEigenvalue>,
    pub quotient: QuotientMatrix,
    #[serde(serialize_with = "serde_util::sig12_vec")]
    pub quotient_eigenvalues: Vec<f64>,
}

impl ClosedFormSpectrum {
    /// Listed values expanded by multiplicity, then the quotient roots; descending.
    pub fn values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .listed
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .chain(self.quotient_eigenvalues.iter().copied())
            .collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    pub fn listed_count(&self) -> usize {
        self.listed.iter().map(|e| e.multiplicity).sum()
    }
}

/// A regular operand: order, size, degree and its adjacency eigenvalues
/// with one copy of the degree removed.
struct RegularOperand {
    n: i64,
    m: i64,
    r: i64,
    non_principal: Vec<(f64, usize)>,
}

impl RegularOperand {
    fn new(g: &Graph, which: &str) -> Result<Self> {
        let r = g
            .is_regular()
            .ok_or_else(|| Error::hypothesis(format!("{which} operand is not regular")))?;
        g.require_edges("closed-form spectrum")?;
        let spec = adjacency_spectrum(g)?;
        let rest = spec.values()[1..].to_vec();
        Ok(RegularOperand {
            n: g.order() as i64,
            m: g.size() as i64,
            r: r as i64,
            non_principal: Spectrum::new(rest, GROUP_TOL).multiplicities(),
        })
    }
}

fn quotient(rows: [[i64; 4]; 4]) -> QuotientMatrix {
    QuotientMatrix::new(SquareMatrix::from_fn(4, |i, j| rows[i][j]))
}

/// Distance spectrum of `G1 ∘ G2` for regular operands.
///
/// For a disconnected operand the degree `r` appears more than once in the
/// adjacency spectrum; exactly one copy is treated as principal and the
/// others go through the `-2(λ + r + 1)` clause.
pub fn thm_svv_spectrum(g1: &Graph, g2: &Graph) -> Result<ClosedFormSpectrum> {
    let a = RegularOperand::new(g1, "first")?;
    let b = RegularOperand::new(g2, "second")?;
    let mut listed = Vec::new();
    for (op, prov) in [(&a, Provenance::FromG1), (&b, Provenance::FromG2)] {
        for &(lambda, mult) in &op.non_principal {
            listed.push(ListedEigenvalue {
                value: -2.0 * (lambda + op.r as f64 + 1.0),
                multiplicity: mult,
                provenance: prov,
            });
        }
    }
    for op in [&a, &b] {
        if op.m > 1 {
            listed.push(ListedEigenvalue {
                value: 0.0,
                multiplicity: (op.m - 1) as usize,
                provenance: Provenance::ZeroBlock,
            });
        }
    }
    let q = quotient([
        [2 * (a.n - 1), 3 * a.m - 2 * a.r, b.n, 2 * b.m],
        [3 * a.n - 4, 4 * (a.m - a.r), 2 * b.n, 3 * b.m],
        [a.n, 2 * a.m, 2 * (b.n - 1), 3 * b.m - 2 * b.r],
        [2 * a.n, 3 * a.m, 3 * b.n - 4, 4 * (b.m - b.r)],
    ]);
    finish(JoinKind::VertexVertex, listed, q)
}

/// Distance spectrum of `G1 ⊖ G2` for regular operands with `m_i ≥ n_i`.
pub fn thm_see_spectrum(g1: &Graph, g2: &Graph) -> Result<ClosedFormSpectrum> {
    let mut problems = Vec::new();
    for (g, name) in [(g1, "first"), (g2, "second")] {
        if g.is_regular().is_none() {
            problems.push(format!("{name} operand is not regular"));
        }
        if g.size() < g.order() {
            problems.push(format!(
                "{name} operand has m = {} < n = {}; the -2 block multiplicity m - n would be negative",
                g.size(),
                g.order()
            ));
        }
    }
    if !problems.is_empty() {
        return Err(Error::Hypothesis(problems));
    }
    let a = RegularOperand::new(g1, "first")?;
    let b = RegularOperand::new(g2, "second")?;
    let mut listed = Vec::new();
    for (op, prov) in [(&a, Provenance::FromG1), (&b, Provenance::FromG2)] {
        for &(lambda, mult) in &op.non_principal {
            let rad = (lambda + 1.0).powi(2) + 4.0 * (lambda + op.r as f64);
            if rad < -GROUP_TOL {
                return Err(Error::hypothesis(format!(
                    "negative radicand {rad} for adjacency eigenvalue {lambda}"
                )));
            }
            let root = rad.max(0.0).sqrt();
            for sign in [1.0, -1.0] {
                listed.push(ListedEigenvalue {
                    value: -(lambda + 3.0 + sign * root),
                    multiplicity: mult,
                    provenance: prov,
                });
            }
        }
    }
    for op in [&a, &b] {
        if op.m > op.n {
            listed.push(ListedEigenvalue {
                value: -2.0,
                multiplicity: (op.m - op.n) as usize,
                provenance: Provenance::MinusTwoBlock,
            });
        }
    }
    let q = quotient([
        [4 * (a.n - 1) - 2 * a.r, 3 * a.m - 2 * a.r, 3 * b.n, 2 * b.m],
        [3 * a.n - 4, 2 * (a.m - 1), 2 * b.n, b.m],
        [3 * a.n, 2 * a.m, 4 * (b.n - 1) - 2 * b.r, 3 * b.m - 2 * b.r],
        [2 * a.n, a.m, 3 * b.n - 4, 2 * (b.m - 1)],
    ]);
    finish(JoinKind::EdgeEdge, listed, q)
}

fn finish(
    kind: JoinKind,
    listed: Vec<ListedEigenvalue>,
    q: QuotientMatrix,
) -> Result<ClosedFormSpectrum> {
    let quotient_eigenvalues = small_real_eigenvalues(&q, ROOT_TOL)?;
    Ok(ClosedFormSpectrum {
        kind,
        listed,
        quotient: q,
        quotient_eigenvalues,
    })
}

pub fn closed_form_spectrum(g1: &Graph, g2: &Graph, kind: JoinKind) -> Result<ClosedFormSpectrum> {
    match kind {
        JoinKind::VertexVertex => thm_svv_spectrum(g1, g2),
        JoinKind::EdgeEdge => thm_see_spectrum(g1, g2),
    }
}

/// Closed form next to the brute-force spectrum of the constructed join.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub kind: JoinKind,
    pub join_graph6: String,
    pub order: usize,
    pub diameter: i64,
    pub closed_form: ClosedFormSpectrum,
    #[serde(serialize_with = "serde_util::sig12_vec")]
    pub closed_form_values: Vec<f64>,
    pub brute_force: Spectrum,
    /// `None` when the two multisets differ in size.
    #[serde(serialize_with = "serde_util::sig12_opt")]
    pub max_deviation: Option<f64>,
    pub quotient_in_spectrum: bool,
    pub matches: bool,
}

pub fn verify_closed_form(g1: &Graph, g2: &Graph, kind: JoinKind) -> Result<TheoremCheck> {
    let closed_form = closed_form_spectrum(g1, g2, kind)?;
    let (join, _) = subdivision_join(g1, g2, kind)?;
    let ds = d_spectrum(&join)?;
    let closed_form_values = closed_form.values();
    let max_deviation = multiset_deviation(&closed_form_values, ds.spectrum.values());
    let quotient_in_spectrum = is_sub_multiset(
        &closed_form.quotient_eigenvalues,
        ds.spectrum.values(),
        ORACLE_TOL,
    );
    let matches = max_deviation.is_some_and(|d| d < ORACLE_TOL);
    Ok(TheoremCheck {
        kind,
        join_graph6: to_graph6(&join),
        order: join.order(),
        diameter: ds.dist.diameter(),
        closed_form,
        closed_form_values,
        brute_force: ds.spectrum,
        max_deviation,
        quotient_in_spectrum,
        matches,
    })
}

/// Evidence that joining two A-cospectral regular graphs with the same
/// regular graph gives D-cospectral results.
#[derive(Debug, Clone, Serialize)]
pub struct CospectralCertificate {
    pub kind: JoinKind,
    pub join1_graph6: String,
    pub join2_graph6: String,
    pub d_cospectral: bool,
    #[serde(serialize_with = "serde_util::char_poly")]
    pub distance_char_poly: CharPolyExact,
    /// Set when an isomorphism invariant separates the two joins.
    pub non_isomorphism_hint: Option<String>,
    pub note: String,
}

/// Checks the hypotheses one by one, builds both joins and compares their
/// exact distance characteristic polynomials.
///
/// The operands are gated on exact adjacency cospectrality, which is what
/// the closed forms actually consume.
pub fn cospectral_join_pair(
    g1: &Graph,
    g2: &Graph,
    h: &Graph,
    kind: JoinKind,
) -> Result<CospectralCertificate> {
    let mut problems = Vec::new();
    let regular = |g: &Graph, name: &str, problems: &mut Vec<String>| {
        let r = g.is_regular();
        if r.is_none() {
            problems.push(format!("{name} is not regular"));
        }
        if g.size() == 0 {
            problems.push(format!("{name} has no edges"));
        }
        r
    };
    let r1 = regular(g1, "g1", &mut problems);
    let r2 = regular(g2, "g2", &mut problems);
    regular(h, "h", &mut problems);
    if g1.order() != g2.order() {
        problems.push(format!("orders differ: {} vs {}", g1.order(), g2.order()));
    }
    if g1.size() != g2.size() {
        problems.push(format!("sizes differ: {} vs {}", g1.size(), g2.size()));
    }
    if let (Some(a), Some(b)) = (r1, r2) {
        if a != b {
            problems.push(format!("degrees differ: {a} vs {b}"));
        }
    }
    if g1.order() == g2.order() && adjacency_char_poly(g1) != adjacency_char_poly(g2) {
        problems.push("g1 and g2 are not adjacency-cospectral".into());
    }
    if !problems.is_empty() {
        return Err(Error::Hypothesis(problems));
    }

    let (j1, _) = subdivision_join(g1, h, kind)?;
    let (j2, _) = subdivision_join(g2, h, kind)?;
    let d1 = crate::graph::bfs_distances(&j1)?;
    let d2 = crate::graph::bfs_distances(&j2)?;
    let p1 = char_poly_exact(d1.matrix());
    let p2 = char_poly_exact(d2.matrix());
    let non_isomorphism_hint =
        if j1.degrees().iter().copied().sorted_vec() != j2.degrees().iter().copied().sorted_vec() {
            Some("degree sequences differ".to_string())
        } else if d1.distance_degree_profile() != d2.distance_degree_profile() {
            Some("distance-degree profiles differ".to_string())
        } else {
            (1..=d1.diameter().min(3))
                .find(|&k| d1.sphere_intersection_profile(k) != d2.sphere_intersection_profile(k))
                .map(|k| format!("radius-{k} sphere intersection profiles differ"))
        };
    Ok(CospectralCertificate {
        kind,
        join1_graph6: to_graph6(&j1),
        join2_graph6: to_graph6(&j2),
        d_cospectral: p1 == p2,
        distance_char_poly: p1,
        non_isomorphism_hint,
        note: "operands gated on exact adjacency cospectrality; the closed forms depend only on adjacency spectra".into(),
    })
}

trait SortedVec {
    fn sorted_vec(self) -> Vec<usize>;
}

impl<I: Iterator<Item = usize>> SortedVec for I {
    fn sorted_vec(self) -> Vec<usize> {
        let mut v: Vec<usize> = self.collect();
        v.sort_unstable();
        v
    }
}

/// Sum of `|-2(μ + 3)|` over the non-principal adjacency eigenvalues `μ`
/// of a union of cycles, which must come to `6l - 10`.
#[derive(Debug, Clone, Serialize)]
pub struct CycleEnergyIdentity {
    #[serde(serialize_with = "serde_util::sig12_vec")]
    pub non_principal_values: Vec<f64>,
    #[serde(serialize_with = "serde_util::sig12")]
    pub numeric_sum: f64,
    /// Integer value from the trace of the adjacency matrix, available when
    /// every `-2(μ + 3)` is non-positive.
    pub exact_sum: Option<i64>,
    pub expected: i64,
    pub holds: bool,
}

pub fn cycle_energy_identity(c_p: &Graph) -> Result<CycleEnergyIdentity> {
    let l = c_p.order() as i64;
    let spec = adjacency_spectrum(c_p)?;
    let mus = &spec.values()[1..];
    let non_principal_values: Vec<f64> = mus.iter().map(|mu| -2.0 * (mu + 3.0)).collect();
    let numeric_sum = non_principal_values.iter().map(|v| v.abs()).sum::<f64>();
    let trace = c_p.adjacency_matrix().trace();
    let principal = c_p.is_regular().unwrap_or(0) as i64;
    let all_nonpositive = mus.iter().all(|&mu| mu >= -3.0 + GROUP_TOL);
    let exact_sum = all_nonpositive.then(|| 2 * (trace - principal) + 6 * (l - 1));
    let expected = 6 * l - 10;
    let holds = exact_sum == Some(expected)
        && (numeric_sum - expected as f64).abs() < 1e-9 * expected.max(1) as f64;
    Ok(CycleEnergyIdentity {
        non_principal_values,
        numeric_sum,
        exact_sum,
        expected,
        holds,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyMember {
    pub label: String,
    pub graph6: String,
    pub order: usize,
    pub diameter: i64,
    #[serde(serialize_with = "serde_util::sig12")]
    pub energy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<CycleEnergyIdentity>,
    #[serde(skip)]
    char_poly: Option<CharPolyExact>,
}

/// Energies and pairwise exact cospectrality across a family.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub members: Vec<FamilyMember>,
    #[serde(serialize_with = "serde_util::sig12")]
    pub max_energy_difference: f64,
    pub energies_equal: bool,
    /// `cospectral[i][j]`: members `i` and `j` have equal distance
    /// characteristic polynomials.
    pub cospectral: Vec<Vec<bool>>,
    pub identity_holds: Option<bool>,
    /// Set when the family fails its defining claim.
    pub refuted: bool,
}

impl FamilyReport {
    fn assemble(members: Vec<FamilyMember>, with_identity: bool) -> Self {
        let energies: Vec<f64> = members.iter().map(|m| m.energy).collect();
        let max = energies.iter().copied().fold(f64::MIN, f64::max);
        let min = energies.iter().copied().fold(f64::MAX, f64::min);
        let max_energy_difference = if energies.is_empty() { 0.0 } else { max - min };
        let energies_equal = max_energy_difference < ENERGY_TOL;
        let cospectral = members
            .iter()
            .map(|a| {
                members
                    .iter()
                    .map(|b| a.order == b.order && a.char_poly == b.char_poly)
                    .collect()
            })
            .collect();
        let identity_holds = with_identity.then(|| {
            members
                .iter()
                .all(|m| m.identity.as_ref().is_some_and(|i| i.holds))
        });
        let refuted = !energies_equal || identity_holds == Some(false);
        FamilyReport {
            members,
            max_energy_difference,
            energies_equal,
            cospectral,
            identity_holds,
            refuted,
        }
    }

    /// True when no two distinct members are distance-cospectral.
    pub fn pairwise_non_cospectral(&self) -> bool {
        self.cospectral
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &c)| i == j || !c))
    }
}

fn member(label: String, g: &Graph, identity: Option<CycleEnergyIdentity>) -> Result<FamilyMember> {
    let ds = d_spectrum(g)?;
    Ok(FamilyMember {
        label,
        graph6: to_graph6(g),
        order: g.order(),
        diameter: ds.dist.diameter(),
        energy: ds.spectrum.energy(),
        identity,
        char_poly: Some(char_poly_exact(ds.dist.matrix())),
    })
}

/// `G ∘ C_P` for every partition `P` of `l` into parts of size at least 3.
pub fn equienergetic_family(g: &Graph, l: usize) -> Result<FamilyReport> {
    let mut problems = Vec::new();
    if g.is_regular().is_none() {
        problems.push("g is not regular".to_string());
    }
    if g.size() == 0 {
        problems.push("g has no edges".to_string());
    } else if !g.is_connected() {
        problems.push("g is not connected".to_string());
    }
    if l < 6 {
        problems.push(format!("l = {l} < 6 gives fewer than two partitions"));
    }
    if !problems.is_empty() {
        return Err(Error::Hypothesis(problems));
    }
    let members = partitions_min3(l)?
        .par_iter()
        .map(|p| {
            let c_p = cycle_union(p)?;
            let (join, _) = subdivision_join(g, &c_p, JoinKind::VertexVertex)?;
            member(p.to_string(), &join, Some(cycle_energy_identity(&c_p)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyReport::assemble(members, true))
}

/// `G ∨̇ H` (or `G ⊻ H`) for each `H` in `hs`.
pub fn central_join_family(g: &Graph, hs: &[Graph], kind: CentralJoinKind) -> Result<FamilyReport> {
    let mut problems = Vec::new();
    if !g.is_triangle_free() {
        problems.push("g is not triangle-free".to_string());
    }
    if g.is_regular().is_none() {
        problems.push("g is not regular".to_string());
    }
    if g.size() == 0 {
        problems.push("g has no edges".to_string());
    }
    if hs.is_empty() {
        problems.push("no graphs h given".to_string());
    }
    let reference = hs.first().map(|h| (h.order(), h.is_regular()));
    for (i, h) in hs.iter().enumerate() {
        match h.is_regular() {
            None => problems.push(format!("h[{i}] is not regular")),
            Some(r) => {
                if let Some((n0, Some(r0))) = reference {
                    if h.order() != n0 || r != r0 {
                        problems.push(format!(
                            "h[{i}] has order {} and degree {r}, expected {n0} and {r0}",
                            h.order()
                        ));
                    }
                }
            }
        }
        let least = adjacency_spectrum(h)?
            .values()
            .last()
            .copied()
            .unwrap_or(0.0);
        if least < -2.0 - GROUP_TOL {
            problems.push(format!(
                "h[{i}] has least adjacency eigenvalue {least} < -2"
            ));
        }
    }
    if !problems.is_empty() {
        return Err(Error::Hypothesis(problems));
    }
    let members = hs
        .par_iter()
        .enumerate()
        .map(|(i, h)| member(format!("h[{i}]"), &central_join(g, h, kind)?, None))
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyReport::assemble(members, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn c(n: usize) -> Graph {
        Graph::cycle(n).unwrap()
    }

    #[test]
    fn svv_formula_arithmetic() {
        // λ = -2, r = 2 gives -2(-2 + 2 + 1) = -2
        let cf = thm_svv_spectrum(&c(4), &c(4)).unwrap();
        assert!(cf
            .listed
            .iter()
            .any(|e| e.provenance == Provenance::FromG1 && (e.value + 2.0).abs() < 1e-12));
    }

    #[test]
    fn example_quotient_at_single_edge() {
        let k11 = Graph::complete_bipartite(1, 1).unwrap();
        let cf = thm_svv_spectrum(&k11, &c(6)).unwrap();
        assert_eq!(
            cf.quotient.entries().to_rows(),
            vec![
                vec![2, 1, 6, 12],
                vec![2, 0, 12, 18],
                vec![2, 2, 10, 14],
                vec![4, 3, 14, 16]
            ]
        );
        assert_eq!(cf.listed_count() + 4, 15);
    }

    #[test]
    fn see_formula_arithmetic() {
        // λ = -2, r = 2: -(1 ± 1) = {0, -2};  λ = 0, r = 2: -(3 ± 3) = {0, -6}
        let cf = thm_see_spectrum(&c(4), &c(4)).unwrap();
        let from: Vec<f64> = cf
            .listed
            .iter()
            .filter(|e| e.provenance == Provenance::FromG1)
            .map(|e| e.value)
            .collect();
        let want = [-6.0, 0.0, 0.0, -2.0];
        for w in want {
            assert!(from.iter().any(|v| (v - w).abs() < 1e-12), "{from:?}");
        }
    }

    #[test]
    fn closed_forms_match_brute_force() {
        let k4 = Graph::complete(4).unwrap();
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        for (g1, g2) in [(c(4), c(3)), (c(3), c(3)), (k4, c(4)), (k22, c(5))] {
            for kind in [JoinKind::VertexVertex, JoinKind::EdgeEdge] {
                let check = verify_closed_form(&g1, &g2, kind).unwrap();
                assert!(check.matches, "{kind:?}: {:?}", check.max_deviation);
                assert!(check.quotient_in_spectrum);
                let n = g1.order() + g1.size() + g2.order() + g2.size();
                assert_eq!(check.closed_form.listed_count() + 4, n);
            }
        }
    }

    #[test]
    fn disconnected_operand_consumes_one_principal_copy() {
        let k11 = Graph::complete_bipartite(1, 1).unwrap();
        let c33 = disjoint_union(&[c(3), c(3)]).unwrap();
        let check = verify_closed_form(&k11, &c33, JoinKind::VertexVertex).unwrap();
        assert!(check.matches);
        let from_g2: Vec<f64> = check
            .closed_form
            .listed
            .iter()
            .filter(|e| e.provenance == Provenance::FromG2)
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect();
        let mut sorted = from_g2.clone();
        sorted.sort_by(|a, b| a.total_cmp(b));
        let want = [-10.0, -4.0, -4.0, -4.0, -4.0];
        for (g, w) in sorted.iter().zip(want) {
            assert!((g - w).abs() < 1e-9);
        }
    }

    #[test]
    fn hypothesis_gates() {
        let p3 = Graph::path(3).unwrap();
        assert!(matches!(
            thm_svv_spectrum(&p3, &c(3)),
            Err(Error::Hypothesis(_))
        ));
        // trees have m < n
        let k2 = Graph::complete(2).unwrap();
        let err = thm_see_spectrum(&k2, &c(3)).unwrap_err();
        assert!(err.to_string().contains("m = 1 < n = 2"));
        assert!(thm_svv_spectrum(&Graph::empty(3).unwrap(), &c(3)).is_err());
    }

    #[test]
    fn identity_for_six_cycle_and_two_triangles() {
        let id = cycle_energy_identity(&c(6)).unwrap();
        let mut vals = id.non_principal_values.clone();
        vals.sort_by(|a, b| a.total_cmp(b));
        for (g, w) in vals.iter().zip([-8.0, -8.0, -4.0, -4.0, -2.0]) {
            assert!((g - w).abs() < 1e-9);
        }
        assert_eq!(id.exact_sum, Some(26));
        assert!(id.holds);

        let id = cycle_energy_identity(&disjoint_union(&[c(3), c(3)]).unwrap()).unwrap();
        assert_eq!(id.exact_sum, Some(26));
        assert!(id.holds);
    }

    #[test]
    fn single_edge_family_at_six() {
        let k11 = Graph::complete_bipartite(1, 1).unwrap();
        let fam = equienergetic_family(&k11, 6).unwrap();
        assert_eq!(fam.members.len(), 2);
        assert!(fam.energies_equal, "{}", fam.max_energy_difference);
        assert!(fam.pairwise_non_cospectral());
        assert_eq!(fam.identity_holds, Some(true));
        assert!(!fam.refuted);
        assert!(fam.members.iter().all(|m| m.order == 15 && m.diameter == 4));
    }

    #[test]
    fn family_preconditions() {
        assert!(equienergetic_family(&Graph::path(3).unwrap(), 6).is_err());
        assert!(equienergetic_family(&c(4), 5).is_err());
        let two_c3 = disjoint_union(&[c(3), c(3)]).unwrap();
        assert!(equienergetic_family(&two_c3, 6).is_err());
    }

    #[test]
    fn central_vertex_family() {
        let hs = [c(6), disjoint_union(&[c(3), c(3)]).unwrap()];
        for kind in [CentralJoinKind::Vertex, CentralJoinKind::Edge] {
            let fam = central_join_family(&c(4), &hs, kind).unwrap();
            assert!(fam.energies_equal, "{kind:?} {}", fam.max_energy_difference);
            assert_eq!(fam.identity_holds, None);
        }
        let single = central_join_family(&c(4), &hs[..1], CentralJoinKind::Vertex).unwrap();
        assert!(single.energies_equal && single.members.len() == 1);
    }

    #[test]
    fn central_family_gates() {
        // triangle in g
        let err = central_join_family(&c(3), &[c(6)], CentralJoinKind::Vertex).unwrap_err();
        assert!(err.to_string().contains("triangle"));
        // K_{1,4} is not regular; mismatched order names the index
        let err = central_join_family(
            &c(4),
            &[c(6), Graph::star(5).unwrap(), c(5)],
            CentralJoinKind::Vertex,
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("h[1] is not regular"), "{err}");
        assert!(err.contains("h[2] has order 5"), "{err}");
        // K_5 is 4-regular with least eigenvalue -1; K_{3,3} has -3
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let err = central_join_family(&c(4), &[k33], CentralJoinKind::Edge).unwrap_err();
        assert!(err.to_string().contains("least adjacency eigenvalue"));
    }

    #[test]
    fn cospectral_pair_gates() {
        let err = cospectral_join_pair(&c(6), &c(5), &c(4), JoinKind::VertexVertex).unwrap_err();
        let Error::Hypothesis(list) = err else {
            panic!()
        };
        assert!(list.len() >= 2);

        let c33 = disjoint_union(&[c(3), c(3)]).unwrap();
        let err = cospectral_join_pair(&c(6), &c33, &c(4), JoinKind::VertexVertex).unwrap_err();
        assert!(err.to_string().contains("not adjacency-cospectral"));

        let cert = cospectral_join_pair(&c(5), &c(5), &c(4), JoinKind::EdgeEdge).unwrap();
        assert!(cert.d_cospectral);
    }
}
