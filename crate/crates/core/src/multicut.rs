//! Vertex multicut: the path LP, bin rounding on chordal graphs and
//! region-growing rounding on general graphs.

use fixedbitset::FixedBitSet;
use num_traits::{One, Signed, Zero};

use std::collections::BTreeMap;

use crate::cert::{Audit, Certificate};
use crate::chordal;
use crate::error::{Error, Result};
use crate::graph::{scale_costs_big, scale_costs_u128, sssp_multi, Graph, VertexSet};
use crate::lp::{self, LpOptions, LpSolution, PathOracle};
use crate::rational::{self, Q};

/// Graph plus terminal pairs. Terminals may be deleted; deleting one cuts
/// all of its pairs.
#[derive(Clone, Debug)]
pub struct MulticutInstance {
    pub graph: Graph,
    pub pairs: Vec<(usize, usize)>,
}

impl MulticutInstance {
    pub fn new(graph: Graph, pairs: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &pairs {
            if s >= graph.n() {
                return Err(Error::UnknownVertex(s));
            }
            if t >= graph.n() {
                return Err(Error::UnknownVertex(t));
            }
            if s == t {
                return Err(Error::Input(format!("terminal pair ({s}, {s}) has s = t")));
            }
        }
        Ok(MulticutInstance { graph, pairs })
    }
}

/// No pair remains connected in `G - s`.
pub fn verify_multicut(g: &Graph, pairs: &[(usize, usize)], s: &[usize]) -> bool {
    let mut alive = g.full_bits();
    for &v in s {
        alive.set(v, false);
    }
    let lab = g.component_labels(&alive);
    pairs
        .iter()
        .all(|&(a, b)| lab[a] == usize::MAX || lab[b] == usize::MAX || lab[a] != lab[b])
}

pub fn multicut_lp(inst: &MulticutInstance, opts: &LpOptions) -> Result<LpSolution> {
    lp::solve_cover_lp_lenient(
        &inst.graph,
        &mut PathOracle {
            pairs: inst.pairs.clone(),
        },
        opts,
    )
}

/// Bin-rounding constant: strip threshold is `1/C` and the factor is `4C`.
pub const CHORDAL_C: i64 = 8;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ChordalRounding {
    pub solution: VertexSet,
    /// Vertices with nicified value at least `1/C`.
    pub high: VertexSet,
    pub bins: VertexSet,
    /// Weight of the fractional solution that was rounded.
    pub lp_weight: Q,
}

/// Exact vertex-weighted distances from a source set, restricted to `mask`.
pub(crate) fn distances(g: &Graph, x: &[Q], sources: &[usize], mask: Option<&FixedBitSet>) -> Vec<Option<Q>> {
    match scale_costs_u128(x) {
        Some((c, den)) => sssp_multi(g, &c, sources, mask)
            .dist
            .into_iter()
            .map(|d| d.map(|d| Q::new(d.into(), den.clone())))
            .collect(),
        None => {
            let (c, den) = scale_costs_big(x);
            sssp_multi(g, &c, sources, mask)
                .dist
                .into_iter()
                .map(|d| d.map(|d| Q::new(d, den.clone())))
                .collect()
        }
    }
}

/// Rounds a feasible fractional multicut `y` on a chordal graph. The result
/// weighs at most `4C·w(y)`; both that and feasibility are checked.
pub fn round_multicut_chordal(g: &Graph, pairs: &[(usize, usize)], y: &[Q]) -> Result<ChordalRounding> {
    let n = g.n();
    let lp_weight = lp::weight_of(g, y);
    if pairs.is_empty() || n == 0 {
        return Ok(ChordalRounding {
            lp_weight,
            ..Default::default()
        });
    }
    let c = Q::from_integer(CHORDAL_C.into());
    let nice = lp::nicify(y, n);
    let strip = lp::strip_high(g, &nice, &(Q::one() / &c))?;
    let sub = &strip.residual;
    let xr = &strip.x;
    let forest = chordal::build_clique_forest(&sub.graph)?;
    let two = Q::from_integer(2.into());
    let mut bins: VertexSet = Vec::new();
    for tree in forest.trees() {
        let root_bag = &forest.bags[tree[0]];
        let r = *root_bag.iter().min().expect("bags are nonempty");
        let d = distances(&sub.graph, xr, &[r], None);
        let comp: VertexSet = (0..sub.graph.n()).filter(|&v| d[v].is_some()).collect();
        let mut best: Option<(Q, VertexSet)> = None;
        for i in 0..=n {
            let shift = Q::new(i.into(), n.into());
            let bin: VertexSet = comp
                .iter()
                .copied()
                .filter(|&v| {
                    let dv = d[v].as_ref().expect("reachable");
                    let hi = &c * dv - &shift;
                    let lo = &c * (dv - &xr[v]) - &shift;
                    let j = (&hi / &two).floor();
                    !j.is_negative() && &two * j > lo
                })
                .collect();
            let w = sub.graph.weight_of(&bin);
            if best.as_ref().map_or(true, |(bw, _)| w < *bw) {
                best = Some((w, bin));
            }
        }
        let (bw, bin) = best.expect("n >= 1 bins");
        let xw: Q = comp.iter().map(|&v| sub.graph.weight(v) * &xr[v]).sum();
        if bw > &c * &xw {
            return Err(Error::Internal("no bin within c·w(x)".into()));
        }
        bins.extend(sub.map_back(&bin));
    }
    bins.sort_unstable();
    let mut solution = strip.removed.clone();
    solution.extend(bins.iter().copied());
    solution.sort_unstable();
    solution.dedup();
    if !verify_multicut(g, pairs, &solution) {
        return Err(Error::Internal("chordal multicut rounding left a pair connected".into()));
    }
    let factor = Q::from_integer((4 * CHORDAL_C).into());
    if g.weight_of(&solution) > factor * &lp_weight {
        return Err(Error::Internal("chordal multicut exceeds 4c·w(y)".into()));
    }
    Ok(ChordalRounding {
        solution,
        high: strip.removed,
        bins,
        lp_weight,
    })
}

/// Region-growing rounding of a feasible fractional multicut `y` on any
/// graph. Zero-weight vertices are deleted for free first. The result weighs
/// at most `4·ln(k+1)·w(y)` for `k` pairs, which is checked.
pub fn round_multicut_general(g: &Graph, pairs: &[(usize, usize)], y: &[Q]) -> Result<VertexSet> {
    let n = g.n();
    let mut solution: VertexSet = (0..n).filter(|&v| g.weight(v).is_zero()).collect();
    let active: Vec<(usize, usize)> = pairs.to_vec();
    if active.is_empty() {
        return Ok(Vec::new());
    }
    let f = lp::weight_of(g, y);
    let k = active.len();
    let seed = &f / Q::from_integer(k.into());
    let half = Q::new(1.into(), 2.into());
    let mut alive = g.full_bits();
    for &v in &solution {
        alive.set(v, false);
    }
    let mut cut_weight = Q::zero();
    for &(s, t) in &active {
        if !alive.contains(s) || !alive.contains(t) {
            continue;
        }
        let lab = g.component_labels(&alive);
        if lab[s] != lab[t] {
            continue;
        }
        let d = distances(g, y, &[s], Some(&alive));
        let reach: Vec<usize> = alive.ones().filter(|&v| d[v].is_some()).collect();
        let dv = |v: usize| d[v].clone().expect("reachable");
        let mut points: Vec<Q> = vec![Q::zero(), half.clone()];
        for &v in &reach {
            for p in [dv(v) - &y[v], dv(v)] {
                if !p.is_negative() && p < half {
                    points.push(p);
                }
            }
        }
        points.sort();
        points.dedup();
        // piece [a, b): ball = {d <= a}, boundary = {d - y <= a < d}
        let mut best: Option<(Q, Q, usize)> = None;
        for (idx, win) in points.windows(2).enumerate() {
            let (a, b) = (&win[0], &win[1]);
            let mut cost = Q::zero();
            let mut vol = seed.clone();
            for &v in &reach {
                let dvv = dv(v);
                let start = &dvv - &y[v];
                if dvv <= *a {
                    vol += g.weight(v) * &y[v];
                } else if start <= *a {
                    cost += g.weight(v);
                    vol += g.weight(v) * (b - &start);
                }
            }
            let better = match &best {
                None => true,
                Some((bc, bv, _)) => &cost * bv < bc * &vol,
            };
            if better {
                best = Some((cost, vol, idx));
            }
        }
        let (_, _, idx) = best.expect("at least one piece");
        let a = &points[idx];
        for &v in &reach {
            let dvv = dv(v);
            if dvv <= *a {
                alive.set(v, false);
            } else if &dvv - &y[v] <= *a {
                alive.set(v, false);
                cut_weight += g.weight(v);
                solution.push(v);
            }
        }
    }
    solution.sort_unstable();
    if !verify_multicut(g, pairs, &solution) {
        return Err(Error::Internal("region growing left a pair connected".into()));
    }
    let limit = 4.0 * ((k + 1) as f64).ln() * rational::to_f64(&f) * (1.0 + 1e-9);
    if rational::to_f64(&cut_weight) > limit {
        return Err(Error::Internal("region growing exceeds 4·ln(k+1)·w(y)".into()));
    }
    Ok(solution)
}

/// Factor certified by [`round_multicut_general`] for `k` pairs.
pub fn general_factor(k: usize) -> f64 {
    4.0 * ((k + 1) as f64).ln()
}

/// Solution of a standalone multicut run.
#[derive(Clone, Debug)]
pub struct MulticutOutcome {
    pub solution: VertexSet,
    pub weight: Q,
    pub lp: LpSolution,
}

pub fn solve_multicut_chordal(inst: &MulticutInstance, opts: &LpOptions) -> Result<MulticutOutcome> {
    if let Some(h) = chordal::find_hole(&inst.graph) {
        return Err(Error::NotChordal(h));
    }
    let lp = multicut_lp(inst, opts)?;
    let r = round_multicut_chordal(&inst.graph, &inst.pairs, &lp.x)?;
    Ok(MulticutOutcome {
        weight: inst.graph.weight_of(&r.solution),
        solution: r.solution,
        lp,
    })
}

pub fn solve_multicut_general(inst: &MulticutInstance, opts: &LpOptions) -> Result<MulticutOutcome> {
    let lp = multicut_lp(inst, opts)?;
    let s = round_multicut_general(&inst.graph, &inst.pairs, &lp.x)?;
    Ok(MulticutOutcome {
        weight: inst.graph.weight_of(&s),
        solution: s,
        lp,
    })
}

/// Rational upper bound on [`general_factor`].
pub fn general_factor_q(k: usize) -> Q {
    let micro = (general_factor(k) * 1e6).ceil() as i64 + 1;
    Q::new(micro.into(), 1_000_000.into())
}

/// Multicut with certificate. `chordal` selects bin rounding (the graph must
/// then be chordal) over region growing.
pub fn solve_multicut(inst: &MulticutInstance, chordal: bool, opts: &LpOptions) -> Result<Certificate> {
    let out = if chordal {
        solve_multicut_chordal(inst, opts)?
    } else {
        solve_multicut_general(inst, opts)?
    };
    let g = &inst.graph;
    let factor = if chordal {
        Q::from_integer((4 * CHORDAL_C).into())
    } else {
        general_factor_q(inst.pairs.len())
    };
    let mut constants = BTreeMap::new();
    if chordal {
        constants.insert("c".to_string(), CHORDAL_C.to_string());
    }
    constants.insert("pairs".to_string(), inst.pairs.len().to_string());
    let mut audit = Audit::default();
    audit.count("lp_rows", out.lp.rows.len() as u64);
    if !out.lp.complete {
        audit.count("lp_incomplete", 1);
    }
    audit.charge("multicut", &out.weight);
    Ok(Certificate {
        problem: if chordal { "multicut-chordal" } else { "multicut-general" }.to_string(),
        n: g.n(),
        m: g.m(),
        feasible: verify_multicut(g, &inst.pairs, &out.solution),
        bound: &factor * &out.lp.lower_bound,
        lp_bound: out.lp.lower_bound.clone(),
        hitting_bound: Q::zero(),
        exact_opt: None,
        factor,
        hitting_factor: Q::zero(),
        constants,
        audit,
        repairs: 0,
        weight: out.weight,
        solution: out.solution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn inst(n: usize, e: &[(usize, usize)], pairs: &[(usize, usize)]) -> MulticutInstance {
        MulticutInstance::new(Graph::from_edges(n, e).unwrap(), pairs.to_vec()).unwrap()
    }

    #[test]
    fn lp_examples() {
        let o = LpOptions::default();
        assert_eq!(multicut_lp(&inst(3, &[(0, 1), (1, 2)], &[(0, 2)]), &o).unwrap().value, q(1));
        let mut i = inst(2, &[(0, 1)], &[(0, 1)]);
        i.graph.set_weights(vec![q(1), q(3)]).unwrap();
        let s = multicut_lp(&i, &o).unwrap();
        assert_eq!(s.value, q(1));
        assert_eq!(s.x[0], q(1));
        assert!(multicut_lp(&inst(2, &[], &[]), &o).unwrap().x.iter().all(Zero::is_zero));
        assert!(MulticutInstance::new(Graph::new(2), vec![(1, 1)]).is_err());
    }

    #[test]
    fn chordal_examples() {
        let o = LpOptions::default();
        let star = inst(3, &[(0, 1), (0, 2)], &[(1, 2)]);
        let r = solve_multicut_chordal(&star, &o).unwrap();
        assert_eq!(r.weight, q(1));

        let mut p = inst(4, &[(0, 1), (1, 2), (2, 3)], &[(0, 3), (1, 3)]);
        p.graph.set_weights(vec![q(10), q(10), q(1), q(10)]).unwrap();
        let r = solve_multicut_chordal(&p, &o).unwrap();
        assert_eq!(r.solution, vec![2]);
        assert!(solve_multicut_chordal(&inst(3, &[(0, 1)], &[]), &o).unwrap().solution.is_empty());
        let c4 = inst(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[(0, 2)]);
        assert!(matches!(solve_multicut_chordal(&c4, &o), Err(Error::NotChordal(_))));
    }

    #[test]
    fn general_examples() {
        let o = LpOptions::default();
        // any single vertex of the path is optimal since terminals are deletable
        let r = solve_multicut_general(&inst(3, &[(0, 1), (1, 2)], &[(0, 2)]), &o).unwrap();
        assert_eq!(r.weight, q(1));
        let mut p = inst(3, &[(0, 1), (1, 2)], &[(0, 2)]);
        p.graph.set_weights(vec![q(2), q(1), q(2)]).unwrap();
        assert_eq!(solve_multicut_general(&p, &o).unwrap().solution, vec![1]);
        let k4 = inst(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[(0, 1)]);
        let r = solve_multicut_general(&k4, &o).unwrap();
        assert!(verify_multicut(&k4.graph, &k4.pairs, &r.solution));
        assert!(solve_multicut_general(&inst(2, &[(0, 1)], &[]), &o).unwrap().solution.is_empty());
    }

    #[test]
    fn verify_examples() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(verify_multicut(&g, &[(0, 2)], &[1]));
        assert!(!verify_multicut(&g, &[(0, 2)], &[]));
        assert!(verify_multicut(&g, &[(0, 2)], &[2]));
    }
}
