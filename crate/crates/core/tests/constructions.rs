use dspectra::closed_forms::{
    central_join_family, cospectral_join_pair, cycle_energy_identity, thm_svv_spectrum,
};
use dspectra::graph::{disjoint_union, from_graph6};
use dspectra::ops::{CentralJoinKind, JoinKind};
use dspectra::spectra::{adjacency_char_poly, small_real_eigenvalues, ROOT_TOL};
use dspectra::Graph;

fn c(n: usize) -> Graph {
    Graph::cycle(n).unwrap()
}

#[test]
fn single_edge_quotient_polynomial_and_roots() {
    let k11 = Graph::complete_bipartite(1, 1).unwrap();
    let cf = thm_svv_spectrum(&k11, &c(6)).unwrap();
    assert_eq!(
        cf.quotient.char_poly().to_string(),
        "x^4 - 28x^3 - 124x^2 + 4x + 168"
    );
    let roots = small_real_eigenvalues(&cf.quotient, ROOT_TOL).unwrap();
    let want = [31.88041486, 1.06237151, -1.40019136, -3.54259501];
    for (r, w) in roots.iter().zip(want) {
        assert!((r - w).abs() < 1e-8, "{roots:?}");
    }
}

#[test]
fn cycle_identity_values_by_partition() {
    // C_6 contributes {-8,-8,-4,-4,-2}; 2C_3 contributes {-10,-4,-4,-4,-4}
    let sorted = |g: &Graph| {
        let mut v = cycle_energy_identity(g).unwrap().non_principal_values;
        v.sort_by(|a, b| a.total_cmp(b));
        v
    };
    let six = sorted(&c(6));
    let two = sorted(&disjoint_union(&[c(3), c(3)]).unwrap());
    for (x, w) in six.iter().zip([-8.0, -8.0, -4.0, -4.0, -2.0]) {
        assert!((x - w).abs() < 1e-9);
    }
    for (x, w) in two.iter().zip([-10.0, -4.0, -4.0, -4.0, -4.0]) {
        assert!((x - w).abs() < 1e-9);
    }
}

#[test]
fn cospectral_regular_pair_on_ten_vertices() {
    let g1 = from_graph6("IdHapYJt?").unwrap();
    let g2 = from_graph6("IDfBRakPo").unwrap();
    assert_eq!((g1.is_regular(), g2.is_regular()), (Some(4), Some(4)));
    assert!(g1.is_connected() && g2.is_connected());
    assert_eq!(
        adjacency_char_poly(&g1).to_string(),
        "x^10 - 20x^8 - 14x^7 + 108x^6 + 104x^5 - 183x^4 - 188x^3 + 80x^2 + 68x - 16"
    );
    assert_eq!(adjacency_char_poly(&g1), adjacency_char_poly(&g2));
    for kind in [JoinKind::VertexVertex, JoinKind::EdgeEdge] {
        let cert = cospectral_join_pair(&g1, &g2, &c(4), kind).unwrap();
        assert!(cert.d_cospectral);
        assert_ne!(cert.join1_graph6, cert.join2_graph6);
        assert!(cert.non_isomorphism_hint.is_some());
    }
}

#[test]
fn central_join_energies() {
    let hs = [c(6), disjoint_union(&[c(3), c(3)]).unwrap()];
    let v = central_join_family(&c(4), &hs, CentralJoinKind::Vertex).unwrap();
    let e = central_join_family(&c(4), &hs, CentralJoinKind::Edge).unwrap();
    for m in &v.members {
        assert!((m.energy - 45.0397678812).abs() < 1e-9);
        assert_eq!(m.diameter, 3);
    }
    for m in &e.members {
        assert!((m.energy - 45.3697937986).abs() < 1e-9);
        assert_eq!(m.diameter, 2);
    }
}
