//! End-to-end solver checks on small instances against subset brute force.

mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use vdapprox::config::Config;
use vdapprox::harness::bench::solve_instance;
use vdapprox::harness::oracle::{exact_oracle, exact_oracle_by_cardinality, Problem, ProblemKind};
use vdapprox::io::Instance;
use vdapprox::{chordal, dh, Graph};

fn instances(count: usize, n_max: usize, seed: u64, pairs: usize) -> Vec<Instance> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(4..=n_max);
            let mut g = random_graph(n, r.gen_range(0.2..0.6), &mut r);
            random_weights(&mut g, 5, &mut r);
            let ps: Vec<(usize, usize)> = (0..pairs)
                .map(|_| (r.gen_range(0..n), r.gen_range(0..n)))
                .filter(|(a, b)| a != b)
                .collect();
            Instance { graph: g, pairs: ps }
        })
        .collect()
}

fn check(kind: ProblemKind, family: Option<&str>, inst: &Instance) {
    let cfg = Config::default();
    let cert = solve_instance(kind, family, inst, &cfg).unwrap();
    let p = Problem::new(kind, family).unwrap();
    let opt = exact_oracle(&p, inst, 16).unwrap();
    assert!(cert.feasible, "{}", cert.summary());
    assert!(p.feasible(inst, &cert.solution).unwrap());
    assert_eq!(cert.weight, inst.graph.weight_of(&cert.solution));
    assert!(cert.weight >= opt.weight);
    assert!(cert.lp_bound <= opt.weight && cert.hitting_bound <= opt.weight, "{}", cert.summary());
    assert!(cert.clean(), "{} {:?}", cert.summary(), cert.audit.violations);
}

#[test]
fn oracles_agree() {
    for (i, inst) in instances(40, 10, 11, 2).iter().enumerate() {
        let fam = ["k2", "c3", "k4"][i % 3];
        for p in [Problem::Cvd, Problem::Dhvd, Problem::Multicut, Problem::new(ProblemKind::Pmfd, Some(fam)).unwrap()] {
            let a = exact_oracle(&p, inst, 16).unwrap();
            let b = exact_oracle_by_cardinality(&p, inst, 16).unwrap();
            assert_eq!(a.weight, b.weight);
        }
    }
}

#[test]
fn oracle_matches_plain_subset_scan() {
    for inst in instances(20, 9, 12, 0) {
        let a = exact_oracle(&Problem::Cvd, &inst, 16).unwrap();
        assert_eq!(a.weight, brute_min_deletion(&inst.graph, brute_chordal));
        let b = exact_oracle(&Problem::Dhvd, &inst, 16).unwrap();
        assert_eq!(b.weight, brute_min_deletion(&inst.graph, brute_dh));
    }
}

#[test]
fn cvd_small() {
    for inst in instances(40, 11, 13, 0) {
        check(ProblemKind::Cvd, None, &inst);
    }
}

#[test]
fn dhvd_small() {
    for inst in instances(40, 11, 14, 0) {
        check(ProblemKind::Dhvd, None, &inst);
    }
}

#[test]
fn pmfd_small() {
    for (i, inst) in instances(45, 10, 15, 0).iter().enumerate() {
        check(ProblemKind::Pmfd, Some(["k2", "c3", "k4"][i % 3]), inst);
    }
}

#[test]
fn multicut_small() {
    for inst in instances(40, 11, 16, 4) {
        check(ProblemKind::MulticutGeneral, None, &inst);
        if chordal::is_chordal(&inst.graph) {
            check(ProblemKind::MulticutChordal, None, &inst);
        }
    }
}

#[test]
fn multicut_chordal_rejects_holes() {
    let inst = Instance {
        graph: cycle(5),
        pairs: vec![(0, 2)],
    };
    assert!(solve_instance(ProblemKind::MulticutChordal, None, &inst, &Config::default()).is_err());
}

fn arb_instance(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, 0u64..10_000, 0.1f64..0.7).prop_map(|(n, seed, p)| {
        let mut r = rng(seed);
        let mut g = random_graph(n, p, &mut r);
        random_weights(&mut g, 9, &mut r);
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cvd_residual_is_chordal(g in arb_instance(16)) {
        let inst = Instance { graph: g, pairs: Vec::new() };
        let c = solve_instance(ProblemKind::Cvd, None, &inst, &Config::default()).unwrap();
        prop_assert!(chordal::is_chordal(&inst.graph.remove(&c.solution).graph));
        prop_assert!(c.clean());
    }

    #[test]
    fn dhvd_residual_is_dh(g in arb_instance(14)) {
        let inst = Instance { graph: g, pairs: Vec::new() };
        let c = solve_instance(ProblemKind::Dhvd, None, &inst, &Config::default()).unwrap();
        prop_assert!(dh::is_distance_hereditary(&inst.graph.remove(&c.solution).graph));
        prop_assert!(c.clean());
    }

    #[test]
    fn certificates_are_deterministic(g in arb_instance(12)) {
        let inst = Instance { graph: g, pairs: vec![(0, 1)] };
        for kind in [ProblemKind::Cvd, ProblemKind::Dhvd, ProblemKind::MulticutGeneral] {
            let a = solve_instance(kind, None, &inst, &Config::default()).unwrap();
            let b = solve_instance(kind, None, &inst, &Config::default()).unwrap();
            prop_assert_eq!(a.to_json_string(), b.to_json_string());
        }
    }
}
