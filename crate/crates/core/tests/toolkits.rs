//! Toolkit routines against independent brute-force scans, plus property
//! tests of the LP transforms.

mod common;

use std::collections::BTreeSet;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use vdapprox::lp::{self, ObstructionOracle, PathOracle};
use vdapprox::rational::{frac, q};
use vdapprox::{chordal, dh, io, minor, Graph, Q};

fn small_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 0..=5usize {
        for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            out.push(graph_from_code(n, code));
        }
    }
    out
}

fn random_graphs(count: u64, n_max: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(6..=n_max);
            let p = r.gen_range(0.15..0.7);
            random_graph(n, p, &mut r)
        })
        .collect()
}

#[test]
fn chordality_and_holes() {
    let mut r = rng(1);
    for g in small_graphs().into_iter().chain(random_graphs(300, 9, 2)) {
        let holes = brute_holes(&g);
        assert_eq!(chordal::is_chordal(&g), holes.is_empty());
        match chordal::find_hole(&g) {
            Some(h) => assert!(h.is_hole_in(&g) && holes.contains(&h.sorted_vertices())),
            None => assert!(holes.is_empty()),
        }
        let found: BTreeSet<Vec<usize>> = chordal::enumerate_short_holes(&g, g.n())
            .into_iter()
            .map(|h| h.sorted_vertices())
            .collect();
        assert_eq!(found, holes);
        let x: Vec<Q> = (0..g.n()).map(|_| frac(r.gen_range(0..8), 8)).collect();
        let best = holes.iter().map(|h| h.iter().map(|&v| x[v].clone()).sum::<Q>()).min();
        assert_eq!(chordal::min_weight_hole(&g, &x, 4).map(|(_, v)| v), best);
    }
}

#[test]
fn cliques_and_clique_forests() {
    for g in small_graphs().into_iter().chain(random_graphs(300, 9, 3)) {
        let brute = brute_maximal_cliques(&g);
        let got: BTreeSet<Vec<usize>> = chordal::enumerate_maximal_cliques(&g).into_iter().collect();
        assert_eq!(got, brute);
        if brute_chordal(&g) {
            let f = chordal::build_clique_forest(&g).unwrap();
            f.verify(&g).unwrap();
            let bags: BTreeSet<Vec<usize>> = f.bags.iter().cloned().collect();
            assert_eq!(bags, brute);
        } else {
            assert!(chordal::build_clique_forest(&g).is_err());
        }
    }
}

#[test]
fn distance_hereditary_recognition() {
    for g in small_graphs().into_iter().chain(random_graphs(300, 8, 4)) {
        let want = brute_dh(&g);
        assert_eq!(dh::is_distance_hereditary(&g), want);
        match dh::find_obstruction(&g) {
            Some(o) => {
                assert!(!want);
                assert!(o.is_valid_in(&g));
            }
            None => {
                assert!(want);
                dh::rankwidth1_decomposition(&g).unwrap().verify(&g).unwrap();
            }
        }
    }
}

#[test]
fn maximal_bicliques() {
    for g in small_graphs().into_iter().chain(random_graphs(150, 8, 5)) {
        let got = dh::enumerate_maximal_bicliques(&g);
        assert!(got.iter().all(|b| b.is_valid_in(&g)));
        assert_eq!(biclique_pairs(&got), brute_maximal_bicliques(&g));
    }
}

#[test]
fn minor_tests() {
    let pats = [complete(2), complete(3), complete(4), cycle(4)];
    let mut graphs: Vec<Graph> = small_graphs();
    graphs.extend(random_graphs(120, 7, 6));
    graphs.extend(random_graphs(15, 8, 7));
    for g in &graphs {
        for h in &pats {
            let got = minor::has_minor(g, h).unwrap();
            assert_eq!(got.is_some(), brute_has_minor(g, h), "{:?} in {:?}", h.edges(), g.edges());
            if let Some(m) = got {
                m.verify(g, h).unwrap();
            }
        }
    }
}

#[test]
fn treewidth_of_minor_free_classes() {
    for g in random_graphs(80, 9, 8) {
        let tw = minor::treewidth_exact(&g).unwrap();
        assert_eq!(tw <= 1, !brute_has_minor(&g, &complete(3)));
        if g.n() <= 7 {
            assert_eq!(tw <= 2, !brute_has_minor(&g, &complete(4)));
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(1i64..20, n))
    })
    .prop_map(|(n, bits, ws)| {
        let mut g = Graph::new(n);
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[i] {
                    g.add_edge(u, v).unwrap();
                }
                i += 1;
            }
        }
        g.set_weights(ws.into_iter().map(|w| frac(w, 4)).collect()).unwrap();
        g
    })
}

fn arb_x(n: usize) -> impl Strategy<Value = Vec<Q>> {
    proptest::collection::vec((0i64..40, 1i64..40), n).prop_map(|v| v.into_iter().map(|(a, b)| frac(a, b)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn json_round_trip(g in arb_graph(10)) {
        let text = io::graph_to_json(&g);
        let h = io::graph_from_json(&text).unwrap();
        prop_assert_eq!(h.edges(), g.edges());
        prop_assert_eq!(h.weights(), g.weights());
        prop_assert_eq!(io::graph_to_json(&h), text);
    }

    #[test]
    fn nicify_rounds_to_grid((g, x) in arb_graph(12).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_x(n)) })) {
        let n = g.n();
        let y = lp::nicify(&x, n);
        for (a, b) in x.iter().zip(&y) {
            prop_assert!((b * Q::from_integer(n.into())).is_integer());
            prop_assert!(*b <= a * Q::from_integer(4.into()));
        }
        prop_assert!(lp::weight_of(&g, &y) <= lp::weight_of(&g, &x) * q(4));
    }

    #[test]
    fn strip_accounting((g, x) in arb_graph(12).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_x(n)) }), t in 1i64..10) {
        let thr = frac(1, t);
        let s = lp::strip_high(&g, &x, &thr).unwrap();
        let lhs = lp::weight_of(&s.residual.graph, &s.x) * Q::from_integer(t.into()) + g.weight_of(&s.removed);
        prop_assert!(lhs <= lp::weight_of(&g, &x) * Q::from_integer(t.into()));
        prop_assert!(s.x.iter().all(|v| *v < thr));
    }

    #[test]
    fn nicify_keeps_path_cover_feasible(g in arb_graph(9), seed in 0u64..1000) {
        let n = g.n();
        prop_assume!(n >= 2);
        let mut r = rng(seed);
        let pairs: Vec<(usize, usize)> = (0..3).map(|_| (r.gen_range(0..n), r.gen_range(0..n))).filter(|(a, b)| a != b).collect();
        prop_assume!(!pairs.is_empty());
        let inst = vdapprox::multicut::MulticutInstance::new(g.clone(), pairs.clone()).unwrap();
        let sol = vdapprox::multicut::multicut_lp(&inst, &Default::default()).unwrap();
        let y = lp::nicify(&sol.x, n);
        let mut o = PathOracle { pairs };
        prop_assert!(o.separate(&g, &y, 1).unwrap().is_empty());
        prop_assert!(lp::weight_of(&g, &y) <= sol.value.clone() * q(4));
    }

    #[test]
    fn zero_out_clique_is_zero_on_m(g in arb_graph(8), seed in 0u64..1000) {
        let cliques = chordal::enumerate_maximal_cliques(&g);
        let mut r = rng(seed);
        let m = &cliques[r.gen_range(0..cliques.len())];
        let x: Vec<Q> = (0..g.n()).map(|_| frac(r.gen_range(0..5), 50)).collect();
        let y = lp::zero_out(&g, &x, &lp::ZeroMode::Clique(m)).unwrap();
        let mx = x.iter().max().cloned().unwrap_or_else(Q::zero);
        let scale = Q::from_integer(1.into()) + mx * q(3);
        for v in 0..g.n() {
            if m.contains(&v) { prop_assert!(y[v].is_zero()); } else { prop_assert_eq!(&y[v], &(&x[v] * &scale)); }
        }
    }
}
