use num_rational::Rational64;
use proptest::prelude::*;

use facet_core::choosability::{sdr, Sdr};
use facet_core::discharging::audit;
use facet_core::embedding::generate::random_plane;
use facet_core::embedding::{medial, parse_peg, to_peg, EmbeddedGraph};
use facet_core::facial_coloring::{chromatic_index, verify, ColorSet, SolverOptions};

fn plane() -> impl Strategy<Value = EmbeddedGraph> {
    (any::<u64>(), 0usize..10).prop_map(|(seed, steps)| random_plane(seed, steps))
}

fn euler_holds(g: &EmbeddedGraph) -> bool {
    g.vertex_count() as i64 - g.edge_count() as i64 + g.face_count() as i64 == 1 + g.component_count() as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn facial_distance_is_symmetric(g in plane(), picks in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 20)) {
        let m = g.edge_count();
        for (a, b) in picks {
            let (e, f) = (a.index(m), b.index(m));
            prop_assert_eq!(g.facial_distance(e, f).unwrap(), g.facial_distance(f, e).unwrap());
            prop_assert_eq!(g.facial_distance(e, e).unwrap(), Some(0));
        }
        for walk in g.faces() {
            for &e in walk.edges() {
                for &f in walk.edges() {
                    prop_assert!(g.facial_distance(e, f).unwrap().unwrap() <= walk.len() / 2);
                }
            }
        }
    }

    #[test]
    fn peg_round_trip(g in plane()) {
        let text = to_peg(&g);
        let back = parse_peg(&text).unwrap();
        prop_assert_eq!(to_peg(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn surgeries_keep_euler(g in plane(), pick in any::<prop::sample::Index>(), other in any::<prop::sample::Index>()) {
        prop_assert!(euler_holds(&g));
        let face = pick.index(g.face_count());
        let contracted = g.contract_face(face).unwrap();
        prop_assert!(euler_holds(&contracted.graph));
        let v = other.index(g.vertex_count());
        let deleted = g.delete_vertex(v).unwrap();
        prop_assert!(euler_holds(&deleted.graph));
        prop_assert_eq!(deleted.graph.edge_count(), g.edge_count() - g.degree(v));

        let walk = g.face(face);
        let k = walk.len();
        let vs = walk.vertices();
        let far: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let ends_i = [vs[i], vs[(i + 1) % k]];
                let ends_j = [vs[j], vs[(j + 1) % k]];
                i < j && ends_i.iter().all(|x| !ends_j.contains(x)) && g.facial_distance(walk.edges()[i], walk.edges()[j]).unwrap().unwrap() >= 2
            })
            .collect();
        if let Some(&(i, j)) = far.first() {
            let merged = g.identify_edges(walk.edges()[i], walk.edges()[j], face).unwrap();
            prop_assert!(euler_holds(&merged.graph));
            prop_assert_eq!(merged.graph.edge_count(), g.edge_count() - 1);
        }
    }

    #[test]
    fn medial_is_four_regular(g in plane()) {
        let md = medial(&g).unwrap();
        prop_assert_eq!(md.graph.vertex_count(), g.edge_count());
        prop_assert_eq!(md.graph.edge_count(), 2 * g.edge_count());
        prop_assert!((0..md.graph.vertex_count()).all(|v| md.graph.degree(v) == 4));
        prop_assert!(euler_holds(&md.graph));
    }

    #[test]
    fn charge_is_conserved(g in plane()) {
        let report = audit(&g).unwrap();
        prop_assert_eq!(report.ledger.initial.total(), Rational64::from_integer(-12));
        prop_assert_eq!(report.ledger.finals.total(), Rational64::from_integer(-12));
        prop_assert!(report.all_transfers_positive);
    }

    #[test]
    fn sdr_or_violator(sets in prop::collection::vec(prop::collection::btree_set(1u32..8, 0..4), 1..8)) {
        let sets: Vec<ColorSet> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        match sdr(&sets) {
            Sdr::Representatives(reps) => {
                prop_assert_eq!(reps.len(), sets.len());
                for (i, &c) in reps.iter().enumerate() {
                    prop_assert!(sets[i].contains(c));
                    prop_assert!(reps[..i].iter().all(|&d| d != c));
                }
            }
            Sdr::HallViolator { nodes, neighborhood } => {
                let union = nodes.iter().fold(ColorSet::empty(), |acc, &i| acc.union(sets[i]));
                prop_assert_eq!(union, neighborhood);
                prop_assert!(neighborhood.len() < nodes.len());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn index_grows_with_ell(seed in any::<u64>()) {
        let g = random_plane(seed, 3);
        let options = SolverOptions::default();
        let mut last = 0;
        for ell in 1..=3 {
            let chi = chromatic_index(&g, ell, &options).unwrap();
            let value = chi.exact().unwrap();
            prop_assert!(value >= last);
            last = value;

            // Renaming colors keeps a witness proper.
            let witness = chi.witness().unwrap();
            let renamed: Vec<Option<u32>> = witness.colors.iter().map(|c| c.map(|c| value + 1 - c)).collect();
            prop_assert!(verify(&g, ell, &renamed, true).unwrap().ok);
        }
    }
}
