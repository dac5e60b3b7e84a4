//! Property tests for the structural invariants: crossing bookkeeping,
//! oracle agreement, relabeling invariance, and partition identities.

use proptest::prelude::*;

use parawick::coefficients::{
    coefficient_bruteforce, coefficient_polynomial, parafermi_bruteforce, parafermi_coefficient,
    set_partitions,
};
use parawick::diagrams::{admissible_matchings, enumerate_matchings};
use parawick::partitions::{generate_partitions, verify_pn_identity};
use parawick::{ChordDiagram, CrossingGraph, FieldKind, FieldPattern, Limits, PPolynomial};

fn limits() -> Limits {
    Limits::default()
}

/// A uniformly random matching: pair the smallest free point with a free
/// point chosen by index, repeatedly.
fn arb_diagram(max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    (1..=max_n).prop_flat_map(|n| {
        let picks: Vec<_> = (0..n).map(|i| 0..(2 * n - 2 * i - 1)).collect();
        picks.prop_map(move |picks| {
            let mut free: Vec<u32> = (1..=2 * n as u32).collect();
            let mut chords = Vec::with_capacity(n);
            for pick in picks {
                let a = free.remove(0);
                let b = free.remove(pick);
                chords.push((a, b));
            }
            ChordDiagram::new(chords).unwrap()
        })
    })
}

/// A random graph on 1..=n vertices from a random edge subset.
fn arb_graph(max_n: usize) -> impl Strategy<Value = CrossingGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .collect();
        let mask = 0u64..(1 << pairs.len());
        mask.prop_map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &e)| e);
            CrossingGraph::new(n, edges)
        })
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn crossing_count_equals_graph_edges(diagram in arb_diagram(5)) {
        let graph = diagram.crossing_graph();
        prop_assert_eq!(diagram.crossing_count(), graph.edge_count());
        prop_assert!(diagram.crossing_count() <= graph.max_edge_count());
        prop_assert_eq!(graph.n(), diagram.n());
    }

    #[test]
    fn polynomial_agrees_with_oracle(diagram in arb_diagram(4), p in 0u32..=4) {
        let graph = diagram.crossing_graph();
        let poly = coefficient_polynomial(&graph, &limits()).unwrap();
        prop_assert_eq!(
            poly.eval_int(p),
            coefficient_bruteforce(&graph, p, &limits()).unwrap()
        );
    }

    #[test]
    fn parafermi_agrees_with_its_oracle(g in arb_graph(4), p in 0u32..=3) {
        let poly = parafermi_coefficient(&g, &limits()).unwrap();
        prop_assert_eq!(
            poly.eval_int(p),
            parafermi_bruteforce(&g, p, &limits()).unwrap()
        );
    }

    #[test]
    fn relabeling_preserves_coefficient_and_canonical_form(
        (g, perm) in arb_graph(6).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_permutation(n))
        })
    ) {
        let relabeled = g.relabeled(&perm);
        prop_assert_eq!(
            coefficient_polynomial(&g, &limits()).unwrap(),
            coefficient_polynomial(&relabeled, &limits()).unwrap()
        );
        prop_assert_eq!(g.canonical_form(), relabeled.canonical_form());
        prop_assert!(g.is_isomorphic_to(&relabeled));
    }

    #[test]
    fn coefficient_structure(g in arb_graph(6)) {
        let poly = coefficient_polynomial(&g, &limits()).unwrap();
        prop_assert_eq!(poly.eval_int(1), 1.into());
        prop_assert_eq!(poly.constant_term(), 0.into());
        prop_assert_eq!(poly.degree(), Some(g.n()));
        let expected_leading = if g.edge_count() % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(poly.leading_coeff(), Some(&expected_leading.into()));
    }

    #[test]
    fn partition_quantities_are_consistent(n in 1u32..=10, p in 0u32..=8) {
        let partitions = generate_partitions(n);
        for partition in &partitions {
            let stats = partition.stats();
            prop_assert_eq!(stats.part_count, partition.part_count());
            prop_assert_eq!(
                stats.equal_pairs + stats.unequal_pairs,
                n as u64 * (n as u64 - 1) / 2
            );
            prop_assert_eq!(stats.configurations.degree(), Some(stats.part_count as usize));
            prop_assert!(stats.set_partition_count >= 1.into());
        }
        prop_assert!(verify_pn_identity(n, p));
        // Shape counts over all partitions of n add up to Bell(n).
        let total_shapes: num_bigint::BigInt = partitions
            .iter()
            .map(|q| q.stats().set_partition_count)
            .sum();
        let bell = num_bigint::BigInt::from(set_partitions(n as usize).count());
        prop_assert_eq!(total_shapes, bell);
    }

    #[test]
    fn charged_matchings_are_a_subset(positions in prop::sample::subsequence((0..8usize).collect::<Vec<_>>(), 4)) {
        let kinds: Vec<FieldKind> = (0..8)
            .map(|i| {
                if positions.contains(&i) {
                    FieldKind::Parafermi
                } else {
                    FieldKind::ParafermiConjugate
                }
            })
            .collect();
        let pattern = FieldPattern::new(kinds).unwrap();
        let admissible = admissible_matchings(&pattern, &limits()).unwrap();
        let all = enumerate_matchings(4, &limits()).unwrap();
        prop_assert_eq!(admissible.len(), 24); // 4! bijections
        for d in &admissible {
            prop_assert!(all.contains(d));
        }
    }

    #[test]
    fn poly_eval_is_a_ring_homomorphism(
        a in prop::collection::vec(-9i64..=9, 0..5),
        b in prop::collection::vec(-9i64..=9, 0..5),
        p in 0u32..=6
    ) {
        let a = PPolynomial::from_coeffs(a);
        let b = PPolynomial::from_coeffs(b);
        let sum = &a + &b;
        let product = &a * &b;
        prop_assert_eq!(sum.eval_int(p), a.eval_int(p) + b.eval_int(p));
        prop_assert_eq!(product.eval_int(p), a.eval_int(p) * b.eval_int(p));
        prop_assert_eq!((&a - &a).degree(), None);
    }
}

#[test]
fn most_saturated_diagram_is_unique() {
    // {(i, i+n)} is the unique diagram attaining m = n(n-1)/2.
    let limits = limits();
    for n in 1..=5u32 {
        let max_m = (n * (n - 1) / 2) as usize;
        let saturated: Vec<ChordDiagram> = enumerate_matchings(n as usize, &limits)
            .unwrap()
            .into_iter()
            .filter(|d| d.crossing_count() == max_m)
            .collect();
        let expected =
            ChordDiagram::new((1..=n).map(|i| (i, i + n)).collect()).unwrap();
        assert_eq!(saturated, vec![expected]);
    }
}
