mod common;

use dgspec::classify::{
    classify_lower_equality, classify_upper_equality, find_splitting, verify_splitting,
    NotEqualityCase,
};
use dgspec::densela::{adjacency, gram_in, gram_out, psd_sqrt, singular_values, sym_eigen, JACOBI_TOL};
use dgspec::energy::{
    adjacent_pair_check, edge_energy, energy_report, mcclelland_bound, vertex_degree_bound_check,
};
use dgspec::hermitian::{double, double_degrees_check, nikiforov_energy, undirected_energy, undirected_randic};
use dgspec::oracle::{check_graph, enumerate_digraphs, sweep};
use dgspec::randic::{bounds_certificate, randic_index};
use dgspec::{DenseMatrix, Digraph};

use common::*;

fn all_small() -> impl Iterator<Item = Digraph> {
    (1..=4).flat_map(|n| enumerate_digraphs(n).unwrap())
}

#[test]
fn enumeration_is_exhaustive_and_duplicate_free() {
    for n in 1..=4 {
        let graphs: Vec<Digraph> = enumerate_digraphs(n).unwrap().collect();
        assert_eq!(graphs.len(), 1 << (n * (n - 1)));
        let unique: std::collections::HashSet<_> = graphs.iter().collect();
        assert_eq!(unique.len(), graphs.len());
    }
}

#[test]
fn linear_algebra_invariants() {
    for g in all_small() {
        let a = adjacency(&g);
        let sv = singular_values(&a).unwrap();
        let sv_t = singular_values(&a.transpose()).unwrap();
        for (x, y) in sv.iter().zip(&sv_t) {
            assert!((x - y).abs() <= 1e-9, "{g:?}");
        }
        let (out, inn) = brute_degrees(&g);
        let go = gram_out(&a);
        let gi = gram_in(&a);
        assert_eq!(go.diagonal(), out.iter().map(|&d| d as f64).collect::<Vec<_>>());
        assert_eq!(gi.diagonal(), inn.iter().map(|&d| d as f64).collect::<Vec<_>>());
        for s in [&go, &gi] {
            let r = psd_sqrt(s).unwrap();
            assert!(r.matmul(&r).max_abs_diff(s) <= 1e-8, "{g:?}");
            for i in 0..g.vertex_count() {
                if s.get(i, i) == 0.0 {
                    assert!(r.row(i).iter().all(|x| x.abs() <= 1e-9));
                }
            }
            let e = sym_eigen(s, JACOBI_TOL).unwrap();
            let q = &e.basis;
            let n = g.vertex_count();
            assert!(q.transpose().matmul(q).max_abs_diff(&DenseMatrix::identity(n)) <= 1e-10);
            assert!(e.reassemble(|l| l).max_abs_diff(s) <= 1e-9);
        }
    }
}

#[test]
fn energy_invariants() {
    for g in all_small() {
        let r = energy_report(&g).unwrap();
        let (out, inn) = brute_degrees(&g);
        assert!((r.trace_out() - r.trace_in()).abs() <= 1e-9);
        assert!((r.total - r.trace_out()).abs() <= 1e-9);
        for v in 0..g.vertex_count() {
            if out[v] == 0 {
                assert!(r.vertex_out[v] <= 1e-9);
            }
            if inn[v] == 0 {
                assert!(r.vertex_in[v] <= 1e-9);
            }
            assert!(r.vertex_out[v] >= -1e-12 && r.vertex_in[v] >= -1e-12);
        }
        for p in adjacent_pair_check(&g, &r) {
            assert!(p.product >= 1.0 - 1e-9 && p.sum >= 2.0 - 1e-9, "{g:?} {p:?}");
        }
        let edge_sum: f64 = g.arcs().iter().map(|&e| edge_energy(&g, &r, e).unwrap()).sum();
        assert!((edge_sum - 2.0 * r.total).abs() <= 1e-8);
        assert!(vertex_degree_bound_check(&g, &r).iter().all(|b| !b.violation));
        assert!(mcclelland_bound(&g).holds_for(r.total, 1e-9));
        let an = (g.arc_count() * g.vertex_count()) as f64;
        assert!(r.total <= an.sqrt() + 1e-9);

        let rev = energy_report(&g.reverse()).unwrap();
        for (x, y) in rev.vertex_out.iter().zip(&r.vertex_in) {
            assert!((x - y).abs() <= 1e-9);
        }
        let n = nikiforov_energy(&adjacency(&g)).unwrap();
        assert!((n - r.total).abs() <= 1e-12);
    }
}

#[test]
fn randic_and_bounds_invariants() {
    for g in all_small() {
        let c = bounds_certificate(&g, 1e-9).unwrap();
        assert!(c.holds(), "{g:?} {c:?}");
        assert!((randic_index(&g) - randic_index(&g.reverse())).abs() <= 1e-12);
        if c.max_deg == 0 {
            assert_eq!((c.randic, c.energy), (0.0, 0.0));
            assert!(c.lower_equal && c.upper_equal);
        }
    }
}

#[test]
fn transfer_invariants() {
    for g in all_small() {
        let b = double(&g);
        let r = energy_report(&g).unwrap();
        assert!((2.0 * r.total - undirected_energy(&b.graph).unwrap()).abs() <= 1e-8);
        assert!((2.0 * randic_index(&g) - undirected_randic(&b.graph)).abs() <= 1e-10);
        assert_eq!(g.degree_profile().max_deg, b.graph.max_degree());
        assert!(double_degrees_check(&g));
        assert_eq!(double(&g.reverse()).graph, b.swap_sides());
    }
}

#[test]
fn classifier_invariants() {
    for g in all_small() {
        let c = bounds_certificate(&g, 1e-9).unwrap();
        let lower = classify_lower_equality(&g);
        let upper = classify_upper_equality(&g);
        assert_eq!(lower.is_ok(), c.lower_slack.abs() <= 1e-8, "{g:?}");
        assert_eq!(upper.is_ok(), c.upper_slack.abs() <= 1e-8, "{g:?}");
        assert_eq!(lower.is_ok(), double_components_complete(&g), "{g:?}");

        match find_splitting(&g) {
            Ok(s) => verify_splitting(&g, &s).unwrap(),
            Err(_) => assert!(matches!(lower, Err(NotEqualityCase::NoSplitting(_)))),
        }
        if let Ok(kinds) = upper {
            assert!(double(&g).graph.degrees().iter().all(|&d| d <= 1));
            assert!(kinds
                .iter()
                .all(|k| !matches!(k, dgspec::ComponentKind::Other(_))));
        }
    }
}

#[test]
fn lower_equality_counts_agree_up_to_three() {
    let s = sweep(3, 1e-9, 2).unwrap();
    let independent = (1..=3)
        .flat_map(|n| enumerate_digraphs(n).unwrap())
        .filter(double_components_complete)
        .count() as u64;
    assert_eq!(s.lower_equal_numeric, independent);
    assert_eq!(s.lower_equal_structural, independent);
}

#[test]
fn check_graph_is_deterministic() {
    for g in [three_vertex_graph(), five_vertex_graph(), transitive_triangle()] {
        let a = serde_json::to_string(&check_graph(&g, 1e-9)).unwrap();
        let b = serde_json::to_string(&check_graph(&g, 1e-9)).unwrap();
        assert_eq!(a, b);
    }
}

mod prop {
    use super::*;
    use dgspec::cli::{parse_edge_list, serialize_edge_list};
    use dgspec::digraph::gen_random;
    use proptest::prelude::*;

    fn digraph() -> impl Strategy<Value = Digraph> {
        (1usize..9, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| gen_random(n, p, seed).unwrap())
    }

    proptest! {
        #[test]
        fn degree_sums_match(g in digraph()) {
            let p = g.degree_profile();
            prop_assert_eq!(p.out_deg.iter().sum::<usize>(), g.arc_count());
            prop_assert_eq!(p.in_deg.iter().sum::<usize>(), g.arc_count());
            let (out, inn) = brute_degrees(&g);
            prop_assert_eq!(p.out_deg, out);
            prop_assert_eq!(p.in_deg, inn);
        }

        #[test]
        fn reverse_is_an_involution(g in digraph()) {
            prop_assert_eq!(g.reverse().reverse(), g.clone());
            prop_assert_eq!(g.reverse().weak_components(), g.weak_components());
        }

        #[test]
        fn edge_list_round_trips(g in digraph()) {
            prop_assert_eq!(parse_edge_list(&serialize_edge_list(&g)).unwrap(), g);
        }

        #[test]
        fn random_generator_is_reproducible(n in 0usize..30, p in 0.0f64..=1.0, seed in any::<u64>()) {
            prop_assert_eq!(gen_random(n, p, seed).unwrap(), gen_random(n, p, seed).unwrap());
        }

        #[test]
        fn bounds_hold_on_random_graphs(g in digraph()) {
            let c = bounds_certificate(&g, 1e-9).unwrap();
            prop_assert!(c.holds());
            prop_assert_eq!(classify_lower_equality(&g).is_ok(), c.lower_slack.abs() <= 1e-8);
            prop_assert_eq!(classify_upper_equality(&g).is_ok(), c.upper_slack.abs() <= 1e-8);
        }

        #[test]
        fn jacobi_reconstructs_symmetric_input(
            n in 1usize..7,
            entries in proptest::collection::vec(-10.0f64..10.0, 49),
        ) {
            let mut s = DenseMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    s.set(i, j, entries[i * 7 + j]);
                    s.set(j, i, entries[i * 7 + j]);
                }
            }
            let e = sym_eigen(&s, JACOBI_TOL).unwrap();
            prop_assert!(e.reassemble(|l| l).max_abs_diff(&s) <= 1e-9);
            prop_assert!(e.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
