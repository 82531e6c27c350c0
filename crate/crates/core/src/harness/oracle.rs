//! Exact optima by exhaustive subset enumeration.
//!
//! The main enumerator walks subsets in increasing weight order and stops at
//! the first feasible one. The second walks cardinalities `0..=n` and scans
//! every subset of each size, so it shares no ordering logic with the first.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chordal;
use crate::dh;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::Instance;
use crate::minor::MinorFamily;
use crate::multicut::verify_multicut;
use crate::rational::Q;

/// Hard ceiling regardless of configuration.
pub const MAX_ORACLE_N: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemKind {
    Cvd,
    Dhvd,
    Pmfd,
    MulticutChordal,
    MulticutGeneral,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Cvd => "cvd",
            ProblemKind::Dhvd => "dhvd",
            ProblemKind::Pmfd => "pmfd",
            ProblemKind::MulticutChordal => "multicut-chordal",
            ProblemKind::MulticutGeneral => "multicut-general",
        }
    }

    pub fn parse(s: &str) -> Result<ProblemKind> {
        Ok(match s {
            "cvd" => ProblemKind::Cvd,
            "dhvd" => ProblemKind::Dhvd,
            "pmfd" => ProblemKind::Pmfd,
            "multicut" | "multicut-chordal" => ProblemKind::MulticutChordal,
            "multicut-general" => ProblemKind::MulticutGeneral,
            _ => {
                return Err(Error::Input(format!(
                    "unknown problem {s:?} (cvd, dhvd, pmfd, multicut-chordal, multicut-general)"
                )))
            }
        })
    }
}

/// A problem together with what its feasibility test needs.
#[derive(Clone, Debug)]
pub enum Problem {
    Cvd,
    Dhvd,
    Pmfd(MinorFamily),
    Multicut,
}

impl Problem {
    pub fn new(kind: ProblemKind, family: Option<&str>) -> Result<Problem> {
        Ok(match kind {
            ProblemKind::Cvd => Problem::Cvd,
            ProblemKind::Dhvd => Problem::Dhvd,
            ProblemKind::Pmfd => Problem::Pmfd(MinorFamily::builtin(
                family.ok_or_else(|| Error::Input("pmfd needs a family".into()))?,
            )?),
            ProblemKind::MulticutChordal | ProblemKind::MulticutGeneral => Problem::Multicut,
        })
    }

    /// Whether deleting `s` solves the instance.
    pub fn feasible(&self, inst: &Instance, s: &[usize]) -> Result<bool> {
        let g = &inst.graph;
        if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(match self {
            Problem::Cvd => chordal::is_chordal(&g.remove(s).graph),
            Problem::Dhvd => dh::is_distance_hereditary(&g.remove(s).graph),
            Problem::Pmfd(f) => f.is_free(&g.remove(s).graph)?,
            Problem::Multicut => verify_multicut(g, &inst.pairs, s),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub weight: Q,
    pub solution: VertexSet,
    pub checked: usize,
}

fn members(mask: u32, n: usize) -> VertexSet {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn check_size(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_ORACLE_N);
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    Ok(())
}

/// Minimum-weight feasible set by increasing-weight enumeration. Ties go to
/// the smaller set, then the lexicographically smaller one.
pub fn exact_oracle(problem: &Problem, inst: &Instance, limit: usize) -> Result<OracleResult> {
    let g = &inst.graph;
    check_size(g, limit)?;
    let n = g.n();
    let total = 1usize << n;
    let mut w: Vec<Q> = vec![Q::zero(); total];
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        w[mask] = &w[mask & (mask - 1)] + g.weight(low);
    }
    let mut order: Vec<u32> = (0..total as u32).collect();
    let key = |m: u32| members(m, n);
    order.sort_by(|&a, &b| {
        w[a as usize]
            .cmp(&w[b as usize])
            .then(a.count_ones().cmp(&b.count_ones()))
            .then_with(|| key(a).cmp(&key(b)))
    });
    for (i, &mask) in order.iter().enumerate() {
        let s = members(mask, n);
        if problem.feasible(inst, &s)? {
            return Ok(OracleResult {
                weight: w[mask as usize].clone(),
                solution: s,
                checked: i + 1,
            });
        }
    }
    Err(Error::Internal("no feasible subset, not even V".into()))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Independent check of [`exact_oracle`]: every subset, size by size.
pub fn exact_oracle_by_cardinality(problem: &Problem, inst: &Instance, limit: usize) -> Result<OracleResult> {
    let g = &inst.graph;
    check_size(g, limit)?;
    let n = g.n();
    let mut best: Option<(Q, VertexSet)> = None;
    let mut checked = 0;
    for k in 0..=n {
        let mut c: Vec<usize> = (0..k).collect();
        loop {
            checked += 1;
            if problem.feasible(inst, &c)? {
                let wc = g.weight_of(&c);
                if best.as_ref().is_none_or(|(bw, _)| wc < *bw) {
                    best = Some((wc, c.clone()));
                }
            }
            if !next_combination(&mut c, n) {
                break;
            }
        }
    }
    let (weight, solution) = best.ok_or_else(|| Error::Internal("no feasible subset, not even V".into()))?;
    Ok(OracleResult {
        weight,
        solution,
        checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn inst(n: usize, e: &[(usize, usize)], pairs: &[(usize, usize)]) -> Instance {
        Instance {
            graph: Graph::from_edges(n, e).unwrap(),
            pairs: pairs.to_vec(),
        }
    }

    #[test]
    fn examples() {
        let c4 = inst(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[]);
        let r = exact_oracle(&Problem::Cvd, &c4, 16).unwrap();
        assert_eq!(r.weight, q(1));
        assert_eq!(r.solution, vec![0]);
        // house: C4 0-1-2-3 with roof 4 on 2, 3
        let house = inst(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)], &[]);
        assert_eq!(exact_oracle(&Problem::Dhvd, &house, 16).unwrap().weight, q(1));
        let path = inst(3, &[(0, 1), (1, 2)], &[(0, 2)]);
        assert_eq!(exact_oracle(&Problem::Multicut, &path, 16).unwrap().weight, q(1));
        let k4 = inst(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[]);
        let f = Problem::Pmfd(MinorFamily::builtin("c3").unwrap());
        assert_eq!(exact_oracle(&f, &k4, 14).unwrap().weight, q(2));
    }

    #[test]
    fn agreement_and_limits() {
        let mut g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]).unwrap();
        g.set_weights(vec![q(3), q(1), q(2), q(2), q(1), q(5)]).unwrap();
        let i = Instance { graph: g, pairs: vec![(0, 3)] };
        for p in [Problem::Cvd, Problem::Dhvd, Problem::Multicut, Problem::Pmfd(MinorFamily::builtin("k4").unwrap())] {
            let a = exact_oracle(&p, &i, 16).unwrap();
            let b = exact_oracle_by_cardinality(&p, &i, 16).unwrap();
            assert_eq!(a.weight, b.weight, "{p:?}");
            assert!(p.feasible(&i, &a.solution).unwrap());
        }
        assert!(matches!(
            exact_oracle(&Problem::Cvd, &inst(17, &[], &[]), 16),
            Err(Error::TooLarge { n: 17, limit: 16 })
        ));
        assert!(ProblemKind::parse("nope").is_err());
    }
}
