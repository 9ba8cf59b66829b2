mod common;

use bkcolor::enumeration::{levels, ClassFilter};
use bkcolor::graph::families::*;
use bkcolor::invariants::*;
use bkcolor::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn induced_2k2_matches_brute_force_to_seven() {
    for n in 0..=7 {
        for g in common::all_labeled(n) {
            let got = find_induced_2k2(&g).map(|w| (w.a, w.b, w.c, w.d));
            assert_eq!(got, common::brute_2k2(&g), "{g:?}");
            assert_eq!(is_2k2_free(&g), got.is_none());
        }
    }
}

#[test]
fn p5_witness() {
    let w = find_induced_2k2(&path(5)).unwrap();
    assert_eq!((w.a, w.b, w.c, w.d), (0, 1, 3, 4));
}

#[test]
fn chromatic_matches_subset_dp_exhaustive_to_six() {
    for n in 0..=6 {
        for g in common::all_labeled(n) {
            assert_eq!(chromatic_number(&g), common::dp_chromatic(&g), "{g:?}");
        }
    }
}

#[test]
fn chromatic_matches_subset_dp_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, p);
        let chi = chromatic_number(&g);
        assert_eq!(chi, common::dp_chromatic(&g), "{g:?}");
        let (k, c) = optimal_coloring(&g);
        assert_eq!(k, chi);
        assert!(g.edges().all(|(u, v)| c.get(u) != c.get(v)));
        assert!(is_k_colorable(&g, chi.saturating_sub(1)).is_none() || chi == 0);
    }
}

#[test]
fn max_clique_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3_000 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.2..0.95);
        let g = common::random_graph(&mut rng, n, p);
        let q = max_clique(&g);
        assert_eq!(q.len(), common::brute_omega(&g));
        assert!(q
            .iter()
            .all(|u| q.iter().all(|v| u == v || g.has_edge(u, v))));
    }
}

#[test]
fn no_long_odd_holes_in_2k2_free_graphs() {
    for (_, graphs) in levels(8, ClassFilter::TwoK2Free).unwrap() {
        for g in graphs {
            if clique_number(&g) == 2 {
                if let Some(c) = shortest_odd_cycle(&g) {
                    assert_eq!(c.len(), 5, "{g:?}");
                }
            }
        }
    }
}

#[test]
fn special_values() {
    let w6 = wheel(5);
    assert_eq!(
        (w6.max_degree(), clique_number(&w6), chromatic_number(&w6)),
        (5, 3, 4)
    );
    assert_eq!(classify_special(&w6).tag(), SpecialTag::W6);
    let c5 = cycle(5);
    assert_eq!(chromatic_number(&c5), 3);
    assert_eq!(classify_special(&c5).tag(), SpecialTag::C5);
    assert_eq!(classify_special(&cycle(7)).tag(), SpecialTag::OddCycle);
    assert_eq!(classify_special(&complete(4)).tag(), SpecialTag::Complete);
    assert_eq!(classify_special(&petersen()).tag(), SpecialTag::Other);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn omega_chi_delta_sandwich(g in arb_graph(11)) {
        let (w, x, d) = (clique_number(&g), chromatic_number(&g), g.max_degree());
        prop_assert!(w <= x && x <= d + 1);
    }

    #[test]
    fn two_k2_freeness_is_hereditary(g in arb_graph(12), pick in any::<prop::sample::Index>()) {
        if is_2k2_free(&g) {
            prop_assert!(is_2k2_free(&g.remove_vertex(pick.index(g.n())).unwrap()));
        }
    }
}
