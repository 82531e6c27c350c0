//! Weighted deletion to a minor-closed family with a planar forbidden minor.
//!
//! [`solve_pmfd`] looks for a set `M` of at most `c + 1` vertices whose
//! removal leaves a minor-free graph; the special case is then solved
//! exactly. Otherwise it splits on a bounded set plus a balanced separator,
//! recurses on both sides and finishes with the special case on the sides
//! glued back through `M`.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cert::{Audit, Certificate};
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{union, Graph, VertexSet};
use crate::lp::{self, ListOracle, LpOptions};
use crate::minor::MinorFamily;
use crate::rational::{self, fmt_q, Q};
use crate::separators::{self, SeparatorOptions};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PmfdOptions {
    /// Candidate sets `M` tried when looking for the special case.
    pub candidate_budget: usize,
    /// Candidate sets tried by the bounded-set separator.
    pub separator_candidates: usize,
    /// Node budget of the exact special-case search.
    pub exact_budget: usize,
    /// Certificate constant `d` in `d·log²n`.
    pub d: u32,
    pub n_floor: usize,
}

impl Default for PmfdOptions {
    fn default() -> Self {
        PmfdOptions {
            candidate_budget: 200_000,
            separator_candidates: 2_000,
            exact_budget: 2_000_000,
            d: 48,
            n_floor: 16,
        }
    }
}

impl PmfdOptions {
    pub fn validate(&self) -> Result<()> {
        if self.candidate_budget == 0 || self.separator_candidates == 0 || self.exact_budget == 0 {
            return Err(Error::Input("pmfd budgets must be positive".into()));
        }
        if self.d == 0 || self.n_floor < 2 {
            return Err(Error::Input("pmfd.d must be positive and pmfd.n_floor at least 2".into()));
        }
        Ok(())
    }
}

/// Exact search over minor models. Errors from the minor test end the
/// search and are returned.
fn exact_search(g: &Graph, family: &MinorFamily, budget: usize) -> Result<Option<exact::ExactResult>> {
    let err: RefCell<Option<Error>> = RefCell::new(None);
    let find = |h: &Graph| -> Option<VertexSet> {
        if err.borrow().is_some() {
            return None;
        }
        match family.find_model(h) {
            Ok(m) => m.map(|(_, m)| m.vertices()),
            Err(e) => {
                *err.borrow_mut() = Some(e);
                None
            }
        }
    };
    let r = exact::min_deletion(g, find, budget);
    match err.into_inner() {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

fn check_special(g: &Graph, m: &[usize], family: &MinorFamily) -> Result<()> {
    if m.len() > family.c + 1 {
        return Err(Error::Input(format!(
            "|M| = {} exceeds c + 1 = {}",
            m.len(),
            family.c + 1
        )));
    }
    if let Some(&v) = m.iter().find(|&&v| v >= g.n()) {
        return Err(Error::UnknownVertex(v));
    }
    let rest = g.remove(m);
    if let Some((i, model)) = family.find_model(&rest.graph)? {
        let branch: Vec<VertexSet> = model.branch.iter().map(|b| rest.map_back(b)).collect();
        return Err(Error::Input(format!(
            "G - M contains member {i} of {} as a minor, branch sets {branch:?}",
            family.name
        )));
    }
    Ok(())
}

/// Exact minimum-weight deletion when `g - m` is already minor-free.
pub fn solve_pmfd_special(
    g: &Graph,
    m: &[usize],
    family: &MinorFamily,
    opts: &PmfdOptions,
) -> Result<Certificate> {
    opts.validate()?;
    check_special(g, m, family)?;
    let r = exact_search(g, family, opts.exact_budget)?.ok_or_else(|| {
        Error::Unsupported(format!("exact search exceeded {} nodes", opts.exact_budget))
    })?;
    let mut audit = Audit::default();
    audit.count("exact_nodes", r.nodes as u64);
    let mut constants = BTreeMap::new();
    constants.insert("family".into(), family.name.clone());
    constants.insert("c".into(), family.c.to_string());
    Ok(Certificate {
        problem: "pmfd-special".into(),
        n: g.n(),
        m: g.m(),
        solution: r.solution,
        weight: r.weight.clone(),
        feasible: true,
        lp_bound: Q::zero(),
        hitting_bound: Q::zero(),
        exact_opt: Some(r.weight.clone()),
        bound: r.weight,
        factor: Q::from_integer(1.into()),
        hitting_factor: Q::zero(),
        constants,
        audit,
        repairs: 0,
    })
}

/// Deletes the lightest vertex of some model until none is left.
pub fn greedy_models(g: &Graph, family: &MinorFamily, s: &[usize]) -> Result<(VertexSet, usize)> {
    let mut out = union(&[s]);
    let mut added = 0;
    loop {
        let rest = g.remove(&out);
        let Some((_, model)) = family.find_model(&rest.graph)? else {
            return Ok((out, added));
        };
        let v = model
            .vertices()
            .into_iter()
            .min_by(|&a, &b| rest.graph.weight(a).cmp(rest.graph.weight(b)).then(a.cmp(&b)))
            .expect("models are nonempty");
        out = union(&[&out, &[rest.back[v]]]);
        added += 1;
    }
}

struct Solver<'a> {
    family: &'a MinorFamily,
    opts: &'a PmfdOptions,
    sep: &'a SeparatorOptions,
    audit: Audit,
}

impl Solver<'_> {
    fn general(&mut self, g: &Graph) -> Result<VertexSet> {
        if self.family.is_free(g)? {
            return Ok(Vec::new());
        }
        self.audit.count("gen_calls", 1);
        let k = self.family.c + 1;
        let cands = separators::bounded_sets(g, k, self.opts.candidate_budget, self.sep.seed);
        for m in cands.iter().filter(|m| !m.is_empty()) {
            if self.family.is_free(&g.remove(m).graph)? {
                return self.special(g, m);
            }
        }
        let n = g.n();
        let split = separators::bounded_set_plus_separator(g, k, self.opts.separator_candidates, self.sep);
        let m = split.structure;
        let s = split.separator;
        self.audit.charge("separator", &g.weight_of(&s));
        let rest = g.remove(&union(&[&m, &s]));
        let comps = rest.graph.connected_components();
        let (a1, a2) = separators::pack_components(&comps, n);
        let v1 = rest.map_back(&a1);
        let v2 = rest.map_back(&a2);
        self.audit.check(3 * v1.len() <= 2 * n && 3 * v2.len() <= 2 * n, || {
            format!("gen split of {n} vertices into {} + {} is unbalanced", v1.len(), v2.len())
        });
        if v1.len() == n || v2.len() == n {
            self.audit.check(false, || format!("gen split of {n} vertices makes no progress"));
            return self.fallback(g);
        }
        let g1 = g.induced_subgraph(&v1)?;
        let s1 = g1.map_back(&self.general(&g1.graph)?);
        let g2 = g.induced_subgraph(&v2)?;
        let s2 = g2.map_back(&self.general(&g2.graph)?);
        let gone = g.bits_of(&union(&[&s1, &s2]));
        let j: VertexSet = union(&[&v1, &v2, &m])
            .into_iter()
            .filter(|&v| !gone.contains(v))
            .collect();
        let jg = g.induced_subgraph(&j)?;
        let jm = jg.to_local(&m);
        let sj = jg.map_back(&self.special(&jg.graph, &jm)?);
        Ok(union(&[&s, &s1, &s2, &sj]))
    }

    fn special(&mut self, g: &Graph, m: &[usize]) -> Result<VertexSet> {
        if self.family.is_free(g)? {
            return Ok(Vec::new());
        }
        self.audit.count("special_calls", 1);
        self.audit.max("special_max_n", g.n() as u64);
        check_special(g, m, self.family)?;
        match exact_search(g, self.family, self.opts.exact_budget)? {
            Some(r) => {
                self.audit.count("exact_nodes", r.nodes as u64);
                self.audit.charge("exact", &r.weight);
                Ok(r.solution)
            }
            None => {
                self.audit.check(false, || {
                    format!("exact search on {} vertices exceeded its budget", g.n())
                });
                self.fallback(g)
            }
        }
    }

    fn fallback(&mut self, g: &Graph) -> Result<VertexSet> {
        self.audit.count("fallbacks", 1);
        let (s, _) = greedy_models(g, self.family, &[])?;
        self.audit.charge("fallback", &g.weight_of(&s));
        Ok(s)
    }
}

/// Lower bound from a cover LP over a few minor models of `g`: a greedy
/// vertex-disjoint packing plus, for each solution vertex, a model through
/// it when one exists. Fewer rows only weaken the relaxation.
fn model_lp(g: &Graph, family: &MinorFamily, solution: &[usize], lp_opts: &LpOptions) -> Result<(Q, usize)> {
    let mut rows: Vec<VertexSet> = Vec::new();
    let mut used: VertexSet = Vec::new();
    loop {
        let rest = g.remove(&used);
        let Some((_, model)) = family.find_model(&rest.graph)? else {
            break;
        };
        let vs = rest.map_back(&model.vertices());
        used = union(&[&used, &vs]);
        rows.push(vs);
    }
    for &v in solution {
        let others: VertexSet = solution.iter().copied().filter(|&u| u != v).collect();
        let rest = g.remove(&others);
        if let Some((_, model)) = family.find_model(&rest.graph)? {
            rows.push(rest.map_back(&model.vertices()));
        }
    }
    rows.sort();
    rows.dedup();
    if rows.is_empty() {
        return Ok((Q::zero(), 0));
    }
    let opts = LpOptions {
        row_budget: lp_opts.budget_for(g.n()).max(rows.len()),
        ..lp_opts.clone()
    };
    let count = rows.len();
    let sol = lp::solve_cover_lp(g, &mut ListOracle { rows }, &opts)?;
    Ok((sol.value, count))
}

/// Weighted deletion to `family`-minor-free graphs with certificate.
pub fn solve_pmfd(
    g: &Graph,
    family: &MinorFamily,
    opts: &PmfdOptions,
    lp_opts: &LpOptions,
    sep: &SeparatorOptions,
) -> Result<Certificate> {
    opts.validate()?;
    let mut audit = Audit::default();
    let zeros: VertexSet = (0..g.n()).filter(|&v| g.weight(v).is_zero()).collect();
    audit.count("zero_weight", zeros.len() as u64);
    let g1 = g.remove(&zeros);
    let mut solver = Solver {
        family,
        opts,
        sep,
        audit,
    };
    let inner = solver.general(&g1.graph)?;
    let mut audit = solver.audit;
    let mut solution = union(&[&zeros, &g1.map_back(&inner)]);

    let (fixed, repairs) = greedy_models(g, family, &solution)?;
    if repairs > 0 {
        audit.charge("repair", &(g.weight_of(&fixed) - g.weight_of(&solution)));
        solution = fixed;
    }
    let feasible = family.is_free(&g.remove(&solution).graph)?;

    let sol_pos: VertexSet = g1.to_local(&solution);
    let (lp_bound, rows) = model_lp(&g1.graph, family, &sol_pos, lp_opts)?;
    audit.count("model_rows", rows as u64);

    let n_eff = g.n().max(opts.n_floor);
    let log = rational::log2_q(n_eff);
    let factor = Q::from_integer(opts.d.into()) * &log * &log;
    let bound = &factor * &lp_bound;
    let mut constants = BTreeMap::new();
    constants.insert("family".into(), family.name.clone());
    constants.insert("c".into(), family.c.to_string());
    constants.insert("D".into(), opts.d.to_string());
    constants.insert("n_eff".into(), n_eff.to_string());
    constants.insert("log2_n_eff".into(), fmt_q(&log));
    Ok(Certificate {
        problem: "pmfd".into(),
        n: g.n(),
        m: g.m(),
        weight: g.weight_of(&solution),
        solution,
        feasible,
        lp_bound,
        hitting_bound: Q::zero(),
        exact_opt: None,
        bound,
        factor,
        hitting_factor: Q::zero(),
        constants,
        audit,
        repairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn run(g: &Graph, fam: &str) -> Certificate {
        let f = MinorFamily::builtin(fam).unwrap();
        solve_pmfd(g, &f, &PmfdOptions::default(), &LpOptions::default(), &SeparatorOptions::default()).unwrap()
    }

    #[test]
    fn special_examples() {
        let c3 = MinorFamily::builtin("c3").unwrap();
        let o = PmfdOptions::default();
        let tree = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(solve_pmfd_special(&tree, &[], &c3, &o).unwrap().weight, q(0));
        let tri = complete(3).with_weights(vec![q(3), q(2), q(5)]).unwrap();
        let c = solve_pmfd_special(&tri, &[0, 2], &c3, &o).unwrap();
        assert_eq!(c.weight, q(2));
        let k4 = complete(4).with_weights(vec![q(4), q(1), q(3), q(2)]).unwrap();
        assert_eq!(solve_pmfd_special(&k4, &[0, 1], &c3, &o).unwrap().weight, q(3));
        // K4 - {0} is a triangle, so M = {0} breaks the precondition
        assert!(solve_pmfd_special(&k4, &[0], &c3, &o).is_err());
    }

    #[test]
    fn solve_examples() {
        assert_eq!(run(&complete(3), "c3").weight, q(1));
        let c = run(&complete(4), "c3");
        assert_eq!(c.weight, q(2));
        assert!(c.clean());
        assert_eq!(run(&complete(4), "k4").weight, q(1));
        assert_eq!(run(&complete(4), "k2").weight, q(3));
    }

    #[test]
    fn separator_path() {
        // two K4s joined by a long path need the general recursion for c3
        let mut e: Vec<(usize, usize)> = Vec::new();
        for base in [0, 4] {
            for i in 0..4 {
                for j in i + 1..4 {
                    e.push((base + i, base + j));
                }
            }
        }
        e.push((3, 8));
        e.push((8, 4));
        let g = Graph::from_edges(9, &e).unwrap();
        let c = run(&g, "c3");
        assert!(c.feasible);
        assert_eq!(c.weight, q(4));
        assert!(c.lp_bound > q(0));
    }
}
