use proptest::prelude::*;

use semitop::consensus::{check_consensus, continuity_points, find_splitting, Splitting, ValueAssignment};
use semitop::graphs::{straddles, IntersectionGraph, StraddleGraph};
use semitop::io::{parse_frame, parse_space, render_frame, render_space};
use semitop::{fr, PointSet, Semitopology, DEFAULT_OPENS_CAP};

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn arb_space() -> impl Strategy<Value = Semitopology> {
    (0usize..=6).prop_flat_map(|n| {
        let top = 1u128 << n;
        prop::collection::vec(0..top, 0..=6).prop_map(move |masks| {
            let gens = masks.into_iter().map(|m| PointSet::from_mask(n, m));
            Semitopology::from_generator_sets(names(n), gens, DEFAULT_OPENS_CAP).unwrap()
        })
    })
}

fn arb_space_with_set() -> impl Strategy<Value = (Semitopology, PointSet, PointSet)> {
    arb_space().prop_flat_map(|s| {
        let n = s.num_points();
        let top = 1u128 << n;
        (Just(s), 0..top, 0..top).prop_map(move |(s, a, b)| (s, PointSet::from_mask(n, a), PointSet::from_mask(n, b)))
    })
}

fn arb_space_with_values() -> impl Strategy<Value = (Semitopology, Vec<u8>)> {
    arb_space().prop_flat_map(|s| {
        let n = s.num_points();
        (Just(s), prop::collection::vec(0u8..3, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_dual_to_interior((s, a, _) in arb_space_with_set()) {
        let cl = s.closure(&a).unwrap();
        prop_assert_eq!(cl, s.interior(&a.complement()).unwrap().complement());
    }

    #[test]
    fn closure_laws((s, a, b) in arb_space_with_set()) {
        let cl = s.closure(&a).unwrap();
        prop_assert!(a.is_subset(&cl));
        prop_assert!(s.is_closed(&cl));
        prop_assert_eq!(s.closure(&cl).unwrap(), cl);
        prop_assert!(s.closure(&s.empty_set()).unwrap().is_empty());
        let ab = a.union(&b);
        prop_assert!(cl.is_subset(&s.closure(&ab).unwrap()));
        // Closed sets need not be closed under binary unions, so only one
        // inclusion of the finite-union law holds.
        prop_assert!(cl.union(&s.closure(&b).unwrap()).is_subset(&s.closure(&ab).unwrap()));
    }

    #[test]
    fn interior_laws((s, a, _) in arb_space_with_set()) {
        let int = s.interior(&a).unwrap();
        prop_assert!(int.is_subset(&a));
        prop_assert!(s.is_open(&int).unwrap());
        prop_assert_eq!(s.interior(&int).unwrap(), int);
    }

    #[test]
    fn closure_meets_the_same_opens((s, a, _) in arb_space_with_set()) {
        let cl = s.closure(&a).unwrap();
        for o in s.opens() {
            prop_assert_eq!(a.meets(o), cl.meets(o));
        }
    }

    #[test]
    fn rebuilding_from_opens_is_idempotent(s in arb_space()) {
        let again = Semitopology::from_generator_sets(names(s.num_points()), s.opens().to_vec(), DEFAULT_OPENS_CAP).unwrap();
        prop_assert_eq!(again.opens(), s.opens());
    }

    #[test]
    fn documents_round_trip(s in arb_space()) {
        let text = render_space(&s).to_string();
        let back = parse_space(&text, DEFAULT_OPENS_CAP).unwrap();
        prop_assert_eq!(back.opens(), s.opens());
        prop_assert_eq!(render_space(&back), render_space(&s));

        let x = fr(&s);
        let y = parse_frame(&render_frame(&x).to_string()).unwrap();
        prop_assert_eq!(y.elements(), x.elements());
        prop_assert_eq!(y.leq_pairs(), x.leq_pairs());
        prop_assert_eq!(y.compat_pairs(), x.compat_pairs());
    }

    #[test]
    fn opens_semiframe_validates(s in arb_space()) {
        let x = fr(&s);
        prop_assert!(x.validate().is_ok());
        prop_assert_eq!(x.len(), s.opens().len());
    }

    #[test]
    fn intersection_graph_order(s in arb_space()) {
        let g = IntersectionGraph::of(&s);
        let n = g.len();
        for a in 0..n {
            prop_assert!(g.leq(a, a));
            for b in 0..n {
                if g.leq(a, b) {
                    prop_assert!(g.adjacent(a, b));
                    for c in 0..n {
                        if g.leq(b, c) {
                            prop_assert!(g.leq(a, c));
                        }
                    }
                }
                if g.nodes[a].is_subset(&g.nodes[b]) {
                    prop_assert!(g.leq(a, b));
                }
            }
        }
    }

    #[test]
    fn transitive_nodes_are_topens(s in arb_space()) {
        let g = IntersectionGraph::of(&s);
        let from_graph: Vec<PointSet> = g.transitive_nodes().into_iter().map(|i| g.nodes[i]).collect();
        prop_assert_eq!(from_graph, s.topens());
    }

    #[test]
    fn straddling_is_covariant(s in arb_space()) {
        for x in s.opens() {
            for y in s.opens() {
                if !straddles(x, y) {
                    continue;
                }
                for z in s.opens().iter().filter(|z| y.is_subset(z)) {
                    prop_assert!(straddles(x, z));
                }
            }
        }
    }

    #[test]
    fn straddle_graph_recovers_the_frame(s in arb_space()) {
        let x = fr(&s);
        prop_assert!(StraddleGraph::of(&x).recovers(&x));
    }

    #[test]
    fn consensus_on_topens((s, raw) in arb_space_with_values()) {
        let f = ValueAssignment { values: raw.iter().map(|v| format!("v{v}")).collect() };
        prop_assert!(check_consensus(&s, &f).holds());
        let cont = continuity_points(&s, &f);
        for t in s.topens().iter().filter(|t| t.is_subset(&cont)) {
            prop_assert!(f.constant_on(t).is_some());
        }
    }

    #[test]
    fn splittings_verify((s, t, _) in arb_space_with_set()) {
        match find_splitting(&s, &t, &["v", "w"]).unwrap() {
            Splitting::Transitive => prop_assert!(s.is_transitive_set(&t)),
            Splitting::Split { assignment, open, other, p, q } => {
                prop_assert!(!s.is_transitive_set(&t));
                prop_assert!(!open.meets(&other));
                let cont = continuity_points(&s, &assignment);
                prop_assert!(cont.contains(p) && cont.contains(q));
                prop_assert!(t.contains(p) && t.contains(q));
                prop_assert_ne!(assignment.value(p), assignment.value(q));
            }
        }
    }

    #[test]
    fn regular_points_sit_in_their_topen_community(s in arb_space()) {
        for c in s.classify_all() {
            if c.grade.is_regular() {
                prop_assert!(c.community.contains(c.point));
                prop_assert!(s.is_topen(&c.community));
            }
            if c.grade.is_weakly_regular() {
                prop_assert!(c.community.contains(c.point));
            }
        }
    }
}

/// A weakly regular point whose intertwined set is a minimal closed
/// neighbourhood, but whose community is not transitive.
#[test]
fn minimal_closed_intertwined_does_not_force_regularity() {
    let opens: Vec<Vec<&str>> = vec![
        vec!["0", "1"],
        vec!["1", "3"],
        vec!["2", "3"],
        vec!["0", "2", "4"],
        vec!["1", "2", "4"],
    ];
    let s = Semitopology::build(["0", "1", "2", "3", "4"], opens).unwrap();
    assert_eq!(s.opens().len(), 13);
    let k = s.classify(4);
    let i = s.set(["0", "2", "4"]).unwrap();
    assert_eq!(k.intertwined, i);
    assert_eq!(k.community, i);
    assert!(k.grade.is_weakly_regular());
    assert!(!k.grade.is_regular());
    assert!(s.minimal_closed_neighbourhoods().contains(&i));
    assert!(s.intertwined(0).is_subset(&i));
    assert!(s.interior(&s.intertwined(0)).unwrap().is_empty());
}
