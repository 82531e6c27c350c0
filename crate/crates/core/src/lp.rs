//! Covering LPs `min w·x  s.t.  x(R) >= 1 for every obstruction R, x >= 0`
//! solved by cutting planes, plus the fractional transforms used by the
//! rounding schemes.
//!
//! The restricted LP over the rows found so far is solved through its dual,
//! the packing LP `max Σ y_R  s.t.  Σ_{R∋v} y_R <= w(v)`, with an exact
//! revised simplex. New rows are new packing columns, so the previous basis
//! stays feasible and each round warm-starts. The covering solution is the
//! simplex multiplier vector.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chordal;
use crate::dh::{self, Biclique, DhObstruction};
use crate::error::{Error, LpError, Result};
use crate::graph::{self, Graph, Subgraph, VertexSet};
use crate::io::q_to_json;
use crate::rational::{self, Q};

/// Separation oracle for a family of obstructions.
pub trait ObstructionOracle {
    /// Up to `limit` obstructions `R` with `x(R) < 1`, lightest first. Empty
    /// means `x` is feasible.
    fn separate(&mut self, g: &Graph, x: &[Q], limit: usize) -> Result<Vec<VertexSet>>;

    /// Minimum of `x(R)` over all obstructions, `None` if there are none.
    fn min_value(&mut self, g: &Graph, x: &[Q]) -> Result<Option<Q>>;
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LpOptions {
    /// Maximum number of rows; 0 means [`default_row_budget`].
    pub row_budget: usize,
    /// Rows added per separation round.
    pub rows_per_round: usize,
}

impl Default for LpOptions {
    fn default() -> Self {
        LpOptions {
            row_budget: 0,
            rows_per_round: 8,
        }
    }
}

/// `10·n` rows, but never fewer than 256.
pub fn default_row_budget(n: usize) -> usize {
    (10 * n).max(256)
}

impl LpOptions {
    pub fn budget_for(&self, n: usize) -> usize {
        if self.row_budget == 0 {
            default_row_budget(n)
        } else {
            self.row_budget
        }
    }
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub x: Vec<Q>,
    /// `w·x`.
    pub value: Q,
    /// Optimum of the restricted LP; equals `value` when `complete`.
    pub lower_bound: Q,
    pub rows: Vec<VertexSet>,
    pub rounds: usize,
    /// False when the row budget ran out and `x` is a rescaled iterate.
    pub complete: bool,
}

impl LpSolution {
    /// JSON dump of rows and solution.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dump<'a> {
            value: serde_json::Value,
            lower_bound: serde_json::Value,
            complete: bool,
            rounds: usize,
            x: Vec<serde_json::Value>,
            rows: &'a [VertexSet],
        }
        serde_json::to_value(Dump {
            value: q_to_json(&self.value),
            lower_bound: q_to_json(&self.lower_bound),
            complete: self.complete,
            rounds: self.rounds,
            x: self.x.iter().map(q_to_json).collect(),
            rows: &self.rows,
        })
        .expect("plain data serializes")
    }
}

pub fn weight_of(g: &Graph, x: &[Q]) -> Q {
    let mut s = Q::zero();
    for (w, v) in g.weights().iter().zip(x) {
        if !v.is_zero() {
            s += w * v;
        }
    }
    s
}

fn row_value(x: &[Q], r: &[usize]) -> Q {
    rational::sum(r.iter().map(|&v| &x[v]))
}

/// Cutting-plane solve. Fails with [`LpError::BudgetExhausted`] when the row
/// budget runs out before the oracle reports feasibility.
pub fn solve_cover_lp(
    g: &Graph,
    oracle: &mut dyn ObstructionOracle,
    opts: &LpOptions,
) -> Result<LpSolution> {
    let sol = solve_cover_lp_lenient(g, oracle, opts)?;
    if sol.complete {
        Ok(sol)
    } else {
        Err(LpError::BudgetExhausted {
            budget: opts.budget_for(g.n()),
            rounds: sol.rounds,
            best: sol.x,
            lower_bound: sol.lower_bound,
        }
        .into())
    }
}

/// Like [`solve_cover_lp`] but returns the rescaled iterate with
/// `complete = false` instead of failing on budget exhaustion.
pub fn solve_cover_lp_lenient(
    g: &Graph,
    oracle: &mut dyn ObstructionOracle,
    opts: &LpOptions,
) -> Result<LpSolution> {
    let budget = opts.budget_for(g.n());
    let mut lp = Packing::new(g.weights().to_vec());
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut rounds = 0;
    loop {
        lp.optimize()?;
        rounds += 1;
        let x = lp.primal();
        let rows = oracle.separate(g, &x, opts.rows_per_round.max(1))?;
        if rows.is_empty() {
            let value = weight_of(g, &x);
            let lower = lp.objective();
            if value != lower {
                return Err(Error::Internal(format!(
                    "duality gap {} vs {}",
                    rational::fmt_q(&value),
                    rational::fmt_q(&lower)
                )));
            }
            return Ok(LpSolution {
                x,
                value,
                lower_bound: lower,
                rows: lp.cols,
                rounds,
                complete: true,
            });
        }
        let mut added = 0;
        for mut r in rows {
            r.sort_unstable();
            r.dedup();
            if row_value(&x, &r) >= Q::one() || r.is_empty() {
                return Err(LpError::StaleRow.into());
            }
            if !seen.insert(r.clone()) {
                return Err(LpError::StaleRow.into());
            }
            if lp.cols.len() >= budget {
                break;
            }
            lp.add_column(r);
            added += 1;
        }
        if added == 0 {
            let lower = lp.objective();
            let best = match oracle.min_value(g, &x)? {
                Some(m) if m.is_positive() => x.iter().map(|v| v / &m).collect(),
                _ => vec![Q::one(); g.n()],
            };
            return Ok(LpSolution {
                value: weight_of(g, &best),
                x: best,
                lower_bound: lower,
                rows: lp.cols,
                rounds,
                complete: false,
            });
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Slack(usize),
    Col(usize),
}

/// Packing LP in revised form with a dense exact basis inverse. Constraints
/// exist only for vertices that occur in some column.
struct Packing {
    w: Vec<Q>,
    index: Vec<Option<usize>>,
    vertex_of: Vec<usize>,
    cols: Vec<VertexSet>,
    in_basis: Vec<bool>,
    binv: Vec<Vec<Q>>,
    basis: Vec<Var>,
    beta: Vec<Q>,
}

const DEGENERATE_LIMIT: usize = 50;

impl Packing {
    fn new(w: Vec<Q>) -> Self {
        let n = w.len();
        Packing {
            w,
            index: vec![None; n],
            vertex_of: Vec::new(),
            cols: Vec::new(),
            in_basis: Vec::new(),
            binv: Vec::new(),
            basis: Vec::new(),
            beta: Vec::new(),
        }
    }

    fn key(&self, v: Var) -> usize {
        match v {
            Var::Slack(i) => self.vertex_of[i],
            Var::Col(j) => self.w.len() + j,
        }
    }

    fn add_column(&mut self, r: VertexSet) {
        for &v in &r {
            if self.index[v].is_none() {
                // v is in no earlier column, so the basis grows block-diagonally
                let i = self.vertex_of.len();
                self.index[v] = Some(i);
                self.vertex_of.push(v);
                for row in &mut self.binv {
                    row.push(Q::zero());
                }
                let mut row = vec![Q::zero(); i + 1];
                row[i] = Q::one();
                self.binv.push(row);
                self.basis.push(Var::Slack(i));
                self.beta.push(self.w[v].clone());
            }
        }
        self.cols.push(r);
        self.in_basis.push(false);
    }

    fn multipliers(&self) -> Vec<Q> {
        let m = self.vertex_of.len();
        let mut pi = vec![Q::zero(); m];
        for (i, b) in self.basis.iter().enumerate() {
            if let Var::Col(_) = b {
                for (p, e) in pi.iter_mut().zip(&self.binv[i]) {
                    if !e.is_zero() {
                        *p += e;
                    }
                }
            }
        }
        pi
    }

    fn column(&self, v: Var) -> Vec<Q> {
        let m = self.vertex_of.len();
        let mut d = vec![Q::zero(); m];
        let idx: Vec<usize> = match v {
            Var::Slack(i) => vec![i],
            Var::Col(j) => self.cols[j].iter().map(|&u| self.index[u].unwrap()).collect(),
        };
        for (i, di) in d.iter_mut().enumerate() {
            for &k in &idx {
                let e = &self.binv[i][k];
                if !e.is_zero() {
                    *di += e;
                }
            }
        }
        d
    }

    fn optimize(&mut self) -> Result<()> {
        let mut degenerate = 0usize;
        let mut bland = false;
        loop {
            let pi = self.multipliers();
            let mut slack_basic = vec![false; pi.len()];
            for b in &self.basis {
                if let Var::Slack(i) = b {
                    slack_basic[*i] = true;
                }
            }
            // entering variable: positive reduced cost
            let mut best: Option<(Q, usize, Var)> = None;
            let mut consider = |rc: Q, var: Var, key: usize| {
                if !rc.is_positive() {
                    return;
                }
                let better = match &best {
                    None => true,
                    Some((brc, bkey, _)) => {
                        if bland {
                            key < *bkey
                        } else {
                            rc > *brc || (rc == *brc && key < *bkey)
                        }
                    }
                };
                if better {
                    best = Some((rc, key, var));
                }
            };
            for (j, col) in self.cols.iter().enumerate() {
                if self.in_basis[j] {
                    continue;
                }
                let mut rc = Q::one();
                for &u in col {
                    rc -= &pi[self.index[u].unwrap()];
                }
                consider(rc, Var::Col(j), self.w.len() + j);
            }
            for (i, p) in pi.iter().enumerate() {
                if !slack_basic[i] {
                    consider(-p.clone(), Var::Slack(i), self.vertex_of[i]);
                }
            }
            let Some((_, _, enter)) = best else {
                return Ok(());
            };
            let d = self.column(enter);
            let mut leave: Option<(Q, usize, usize)> = None;
            for (i, di) in d.iter().enumerate() {
                if !di.is_positive() {
                    continue;
                }
                let ratio = &self.beta[i] / di;
                let key = self.key(self.basis[i]);
                let better = match &leave {
                    None => true,
                    Some((r, k, _)) => ratio < *r || (ratio == *r && key < *k),
                };
                if better {
                    leave = Some((ratio, key, i));
                }
            }
            let Some((ratio, _, p)) = leave else {
                return Err(Error::Internal("packing LP unbounded".into()));
            };
            if ratio.is_zero() {
                degenerate += 1;
                if degenerate > DEGENERATE_LIMIT {
                    bland = true;
                }
            } else {
                degenerate = 0;
            }
            self.pivot(p, enter, &d, &ratio);
        }
    }

    fn pivot(&mut self, p: usize, enter: Var, d: &[Q], ratio: &Q) {
        let dp = d[p].clone();
        let prow: Vec<Q> = self.binv[p].iter().map(|e| e / &dp).collect();
        for (i, di) in d.iter().enumerate() {
            if i == p || di.is_zero() {
                continue;
            }
            for (e, pe) in self.binv[i].iter_mut().zip(&prow) {
                if !pe.is_zero() {
                    *e -= di * pe;
                }
            }
            self.beta[i] = &self.beta[i] - di * ratio;
        }
        self.binv[p] = prow;
        self.beta[p] = ratio.clone();
        if let Var::Col(j) = self.basis[p] {
            self.in_basis[j] = false;
        }
        if let Var::Col(j) = enter {
            self.in_basis[j] = true;
        }
        self.basis[p] = enter;
    }

    fn primal(&self) -> Vec<Q> {
        let pi = self.multipliers();
        let mut x = vec![Q::zero(); self.w.len()];
        for (i, &v) in self.vertex_of.iter().enumerate() {
            x[v] = pi[i].clone();
        }
        x
    }

    fn objective(&self) -> Q {
        let mut s = Q::zero();
        for (b, v) in self.basis.iter().zip(&self.beta) {
            if let Var::Col(_) = b {
                s += v;
            }
        }
        s
    }
}

/// Holes of length at least `min_len`, separated exactly.
pub struct HoleOracle {
    pub min_len: usize,
}

impl ObstructionOracle for HoleOracle {
    fn separate(&mut self, g: &Graph, x: &[Q], limit: usize) -> Result<Vec<VertexSet>> {
        let res = chordal::lightest_holes(g, x, self.min_len, Some(&Q::one()), limit, usize::MAX);
        Ok(res.holes.into_iter().map(|(h, _)| h.sorted_vertices()).collect())
    }

    fn min_value(&mut self, g: &Graph, x: &[Q]) -> Result<Option<Q>> {
        Ok(chordal::min_weight_hole(g, x, self.min_len).map(|(_, v)| v))
    }
}

/// A fixed, explicitly listed family of rows.
pub struct ListOracle {
    pub rows: Vec<VertexSet>,
}

impl ListOracle {
    fn scored(&self, x: &[Q]) -> Vec<(Q, usize)> {
        let mut s: Vec<(Q, usize)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| (row_value(x, r), i))
            .collect();
        s.sort();
        s
    }
}

impl ObstructionOracle for ListOracle {
    fn separate(&mut self, _g: &Graph, x: &[Q], limit: usize) -> Result<Vec<VertexSet>> {
        Ok(self
            .scored(x)
            .into_iter()
            .take_while(|(v, _)| *v < Q::one())
            .take(limit)
            .map(|(_, i)| self.rows[i].clone())
            .collect())
    }

    fn min_value(&mut self, _g: &Graph, x: &[Q]) -> Result<Option<Q>> {
        Ok(self.scored(x).into_iter().next().map(|(v, _)| v))
    }
}

/// Paths between terminal pairs (vertex multicut).
pub struct PathOracle {
    pub pairs: Vec<(usize, usize)>,
}

impl PathOracle {
    fn paths(&self, g: &Graph, x: &[Q]) -> Result<Vec<(Q, VertexSet)>> {
        let mut out = Vec::new();
        for &(s, t) in &self.pairs {
            if let Some((c, p)) = graph::vertex_weighted_shortest_path(g, x, s, t)? {
                out.push((c, p));
            }
        }
        Ok(out)
    }
}

impl ObstructionOracle for PathOracle {
    fn separate(&mut self, g: &Graph, x: &[Q], limit: usize) -> Result<Vec<VertexSet>> {
        let mut found: Vec<(Q, VertexSet)> = self
            .paths(g, x)?
            .into_iter()
            .filter(|(c, _)| *c < Q::one())
            .map(|(c, mut p)| {
                p.sort_unstable();
                (c, p)
            })
            .collect();
        found.sort();
        found.dedup_by(|a, b| a.1 == b.1);
        Ok(found.into_iter().take(limit).map(|(_, p)| p).collect())
    }

    fn min_value(&mut self, g: &Graph, x: &[Q]) -> Result<Option<Q>> {
        Ok(self.paths(g, x)?.into_iter().map(|(c, _)| c).min())
    }
}

/// Distance-hereditary obstructions: the small patterns are enumerated once,
/// long holes are separated with the exact hole search.
pub struct DhOracle {
    small: Option<Vec<DhObstruction>>,
}

impl DhOracle {
    pub fn new() -> Self {
        DhOracle { small: None }
    }

    fn small(&mut self, g: &Graph) -> &[DhObstruction] {
        // patterns only; holes >= 5 come from the hole search
        self.small.get_or_insert_with(|| {
            dh::enumerate_small_obstructions(g, 6)
                .into_iter()
                .filter(|o| o.kind != dh::DhKind::LongHole)
                .collect()
        })
    }
}

impl Default for DhOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl ObstructionOracle for DhOracle {
    fn separate(&mut self, g: &Graph, x: &[Q], limit: usize) -> Result<Vec<VertexSet>> {
        let mut found: Vec<(Q, VertexSet)> = self
            .small(g)
            .iter()
            .map(|o| (row_value(x, &o.vertices), o.sorted_vertices()))
            .filter(|(v, _)| *v < Q::one())
            .collect();
        let holes = chordal::lightest_holes(g, x, 5, Some(&Q::one()), limit, usize::MAX);
        found.extend(holes.holes.into_iter().map(|(h, v)| (v, h.sorted_vertices())));
        found.sort();
        found.dedup_by(|a, b| a.1 == b.1);
        Ok(found.into_iter().take(limit).map(|(_, r)| r).collect())
    }

    fn min_value(&mut self, g: &Graph, x: &[Q]) -> Result<Option<Q>> {
        let small = self.small(g).iter().map(|o| row_value(x, &o.vertices)).min();
        let hole = chordal::min_weight_hole(g, x, 5).map(|(_, v)| v);
        Ok(match (small, hole) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        })
    }
}

/// Rounds `x` up to multiples of `1/n`: zero below `1/(2n)`, otherwise the
/// smallest `i/n >= 2x(v)`.
pub fn nicify(x: &[Q], n: usize) -> Vec<Q> {
    assert!(n > 0);
    let nq = Q::from_integer(n.into());
    let cut = Q::new(1.into(), (2 * n).into());
    x.iter()
        .map(|v| {
            if *v < cut {
                Q::zero()
            } else {
                let two_n_x = v * &nq * Q::from_integer(2.into());
                Q::new(rational::ceil_int(&two_n_x), n.into())
            }
        })
        .collect()
}

/// Output of [`strip_high`].
#[derive(Clone, Debug)]
pub struct Strip {
    /// `{v : x(v) >= threshold}`, in the input graph's indices.
    pub removed: VertexSet,
    pub residual: Subgraph,
    /// `x` restricted to the residual graph.
    pub x: Vec<Q>,
}

/// Moves every vertex with `x(v) >= threshold` out of the graph. Checks
/// `w(x_res)/t + w(h) <= w(x)/t` exactly.
pub fn strip_high(g: &Graph, x: &[Q], threshold: &Q) -> Result<Strip> {
    if !threshold.is_positive() {
        return Err(Error::Input("strip threshold must be positive".into()));
    }
    let removed: VertexSet = (0..g.n()).filter(|&v| x[v] >= *threshold).collect();
    let residual = g.remove(&removed);
    let xr: Vec<Q> = residual.back.iter().map(|&v| x[v].clone()).collect();
    let inv = Q::one() / threshold;
    let lhs = &inv * weight_of(&residual.graph, &xr) + g.weight_of(&removed);
    let rhs = &inv * weight_of(g, x);
    if lhs > rhs {
        return Err(Error::Internal("strip accounting inequality failed".into()));
    }
    Ok(Strip {
        removed,
        residual,
        x: xr,
    })
}

/// How [`zero_out`] rescales the values outside the structure.
#[derive(Clone, Debug)]
pub enum ZeroMode<'a> {
    /// `m` is a clique; scale `1 + 3·max x`.
    Clique(&'a [usize]),
    /// A biclique; scale `1 + 4/log_n`.
    Biclique(&'a Biclique, Q),
}

/// `x∖M`: zero on the structure, rescaled elsewhere.
pub fn zero_out(g: &Graph, x: &[Q], mode: &ZeroMode<'_>) -> Result<Vec<Q>> {
    let (m, scale): (VertexSet, Q) = match mode {
        ZeroMode::Clique(m) => {
            if !g.is_clique(m) {
                return Err(Error::Input("zero-out set is not a clique".into()));
            }
            let mx = rational::max_q(x.iter());
            (m.to_vec(), Q::one() + Q::from_integer(3.into()) * mx)
        }
        ZeroMode::Biclique(b, log_n) => {
            if !b.is_valid_in(g) {
                return Err(Error::Input("zero-out set is not a biclique".into()));
            }
            if !log_n.is_positive() {
                return Err(Error::Input("log n must be positive".into()));
            }
            (b.vertices(), Q::one() + Q::from_integer(4.into()) / log_n)
        }
    };
    let mut out: Vec<Q> = x.iter().map(|v| v * &scale).collect();
    for &v in &m {
        if v >= g.n() {
            return Err(Error::UnknownVertex(v));
        }
        out[v] = Q::zero();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn cover_lp_examples() {
        let s = solve_cover_lp(&cycle(4), &mut HoleOracle { min_len: 4 }, &LpOptions::default())
            .unwrap();
        assert_eq!(s.value, q(1));
        assert!(s.complete);

        let k = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = solve_cover_lp(&k, &mut HoleOracle { min_len: 4 }, &LpOptions::default()).unwrap();
        assert_eq!(s.value, q(0));
        assert!(s.x.iter().all(Zero::is_zero));

        let two = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        let s = solve_cover_lp(&two, &mut HoleOracle { min_len: 4 }, &LpOptions::default())
            .unwrap();
        assert_eq!(s.value, q(2));
    }

    #[test]
    fn list_lp_matches_hand_solution() {
        // rows {0,1},{1,2},{0,2} with unit weights: x = 1/2 everywhere
        let g = Graph::new(3);
        let mut o = ListOracle {
            rows: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        };
        let s = solve_cover_lp(&g, &mut o, &LpOptions::default()).unwrap();
        assert_eq!(s.value, frac(3, 2));
        // weights (5,1,5): halves everywhere beat the integral 6
        let g = Graph::new(3)
            .with_weights(vec![q(5), q(1), q(5)])
            .unwrap();
        let s = solve_cover_lp(&g, &mut o, &LpOptions::default()).unwrap();
        assert_eq!(s.value, frac(11, 2));
    }

    #[test]
    fn budget_exhaustion_returns_feasible_iterate() {
        let g = Graph::new(4);
        let rows: Vec<VertexSet> = vec![vec![0, 1], vec![2, 3], vec![1, 2], vec![0, 3]];
        let opts = LpOptions {
            row_budget: 1,
            rows_per_round: 1,
        };
        let err = solve_cover_lp(&g, &mut ListOracle { rows: rows.clone() }, &opts).unwrap_err();
        let Error::Lp(LpError::BudgetExhausted { best, lower_bound, .. }) = err else {
            panic!("expected budget error");
        };
        assert!(rows.iter().all(|r| row_value(&best, r) >= q(1)));
        assert!(lower_bound <= q(2));
    }

    #[test]
    fn path_lp() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = solve_cover_lp(
            &g,
            &mut PathOracle { pairs: vec![(0, 2)] },
            &LpOptions::default(),
        )
        .unwrap();
        assert_eq!(s.value, q(1));
    }

    #[test]
    fn dh_lp_on_house() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]).unwrap();
        let s = solve_cover_lp(&g, &mut DhOracle::new(), &LpOptions::default()).unwrap();
        assert_eq!(s.value, q(1));
    }

    #[test]
    fn nicify_examples() {
        assert_eq!(nicify(&[frac(3, 100)], 10), vec![q(0)]);
        assert_eq!(nicify(&[frac(3, 10)], 10), vec![frac(6, 10)]);
        assert_eq!(nicify(&[frac(1, 2)], 4), vec![q(1)]);
        assert_eq!(nicify(&[frac(1, 20)], 10), vec![frac(1, 10)]);
    }

    #[test]
    fn strip_examples() {
        let g = Graph::new(2);
        let s = strip_high(&g, &[frac(1, 5), frac(1, 20)], &frac(1, 8)).unwrap();
        assert_eq!(s.removed, vec![0]);
        assert_eq!(s.x, vec![frac(1, 20)]);
        let s = strip_high(&g, &[q(0), q(0)], &frac(1, 8)).unwrap();
        assert!(s.removed.is_empty());
        let s = strip_high(&g, &[frac(1, 4), frac(24, 100)], &frac(1, 4)).unwrap();
        assert_eq!(s.removed, vec![0]);
        assert!(strip_high(&g, &[q(0), q(0)], &q(0)).is_err());
    }

    #[test]
    fn zero_out_examples() {
        let g = Graph::new(3);
        let x = vec![frac(1, 10); 3];
        let y = zero_out(&g, &x, &ZeroMode::Clique(&[])).unwrap();
        assert_eq!(y, vec![frac(13, 100); 3]);

        let star = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let b = Biclique {
            m1: vec![0],
            m2: vec![1],
        };
        let y = zero_out(&star, &x, &ZeroMode::Biclique(&b, q(4))).unwrap();
        assert_eq!(y, vec![q(0), q(0), frac(2, 10)]);
        assert!(zero_out(&star, &x, &ZeroMode::Clique(&[1, 2])).is_err());
    }

    #[test]
    fn zero_clique_keeps_long_cycle_feasible() {
        let g = cycle(101);
        let x = vec![frac(1, 100); 101];
        let y = zero_out(&g, &x, &ZeroMode::Clique(&[0, 1])).unwrap();
        assert!(rational::sum(y.iter()) >= q(1));
    }
}
