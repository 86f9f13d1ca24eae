use incol_core::class_p::{color_class_p, generate, peel, GadgetKind};
use incol_core::closed_form::complete_graph;
use incol_core::edge_coloring::chromatic_index;
use incol_core::o1p::{chi_o1p, color_o1p, O1pCase};
use incol_core::oracle::chi_exact;
use incol_core::{palette_count, verify, Graph};
use proptest::prelude::*;
use proptest::sample::Index;

fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g.edges().map(|(_, u, v)| (u.index(), v.index())).collect();
    e.sort_unstable();
    e
}

fn gadget_kind() -> impl Strategy<Value = GadgetKind> {
    prop_oneof![
        Just(GadgetKind::G2),
        Just(GadgetKind::G4),
        Just(GadgetKind::G8),
        (1usize..=3).prop_map(GadgetKind::H),
    ]
}

/// A class `P` member with its vertex ids rotated.
fn member() -> impl Strategy<Value = Graph> {
    (
        proptest::collection::vec(gadget_kind(), 0..=4),
        proptest::collection::vec(any::<Index>(), 16),
        any::<u64>(),
    )
        .prop_map(|(plan, picks, shift)| {
            let mut i = 0;
            let g = generate(&plan, &mut |b| {
                i += 1;
                picks[i % picks.len()].index(b)
            })
            .unwrap();
            // rotate vertex names so ids no longer follow the construction
            let n = g.vertex_count();
            let r = (shift % n as u64) as usize;
            Graph::with_edges(n, g.edges().map(|(_, u, v)| ((u.index() + r) % n, (v.index() + r) % n)))
                .unwrap()
        })
}

fn bipartite() -> impl Strategy<Value = Graph> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(a, b)| {
        let pairs: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 0..=len.min(12))
            .prop_map(move |edges| Graph::with_edges(a + b, edges).unwrap())
    })
}

/// Maximal outerplanar graph grown by ears, minus some chords.
fn outerplanar() -> impl Strategy<Value = Graph> {
    (
        proptest::collection::vec(any::<Index>(), 0..=4),
        proptest::collection::vec(any::<bool>(), 16),
    )
        .prop_map(|(ears, drop)| {
            let mut outer = vec![0usize, 1, 2];
            let mut chords = Vec::new();
            let mut n = 3;
            for ear in ears {
                let i = ear.index(outer.len());
                let (a, b) = (outer[i], outer[(i + 1) % outer.len()]);
                chords.push((a.min(b), a.max(b)));
                outer.insert(i + 1, n);
                n += 1;
            }
            let mut edges: Vec<(usize, usize)> = (0..outer.len())
                .map(|i| (outer[i], outer[(i + 1) % outer.len()]))
                .collect();
            edges.extend(chords.iter().zip(&drop).filter(|(_, d)| !**d).map(|(c, _)| *c));
            Graph::with_edges(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn peel_round_trips_and_colors_with_seven(g in member()) {
        let trace = peel(&g).unwrap();
        prop_assert_eq!(sorted_edges(&trace.replay()), sorted_edges(&g));
        let c = color_class_p(&g).unwrap();
        prop_assert!(verify(&g, &c).is_ok());
        prop_assert_eq!(palette_count(&c), 7);
        let twos = g.vertices().filter(|&v| g.degree(v) == 2).count();
        prop_assert_eq!(twos, 1);
        prop_assert!(g.vertices().all(|v| g.degree(v) == 2 || g.degree(v) == 3));
    }

    #[test]
    fn bipartite_graphs_hit_twice_max_degree(g in bipartite()) {
        let delta = g.max_degree();
        prop_assert_eq!(chromatic_index(&g).unwrap(), delta);
        prop_assert_eq!(chi_exact(&g).unwrap().chi, 2 * delta);
    }

    #[test]
    fn dispatcher_matches_oracle_on_outerplanar_graphs(g in outerplanar()) {
        let v = color_o1p(&g).unwrap();
        prop_assert!(verify(&g, &v.coloring).is_ok());
        prop_assert_eq!(palette_count(&v.coloring), v.chi);
        prop_assert_eq!(chi_o1p(&g).unwrap(), v.chi);
        let delta = g.max_degree();
        if v.case == O1pCase::CycleC3 {
            prop_assert_eq!(v.chi, 6);
        } else {
            prop_assert!(v.chi == 2 * delta || v.chi == 2 * delta + 1);
        }
        prop_assert_eq!(chi_exact(&g).unwrap().chi, v.chi);
    }
}

#[test]
fn even_complete_graphs() {
    for n in 1..=3 {
        let g = complete_graph(2 * n);
        assert_eq!(chi_exact(&g).unwrap().chi, 4 * n - 2, "K{}", 2 * n);
    }
}
