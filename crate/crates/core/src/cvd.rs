//! Weighted chordal vertex deletion.
//!
//! [`solve_cvd`] removes zero-weight vertices, hits all short holes by LP
//! rounding and then runs the divide-and-conquer over clique-plus-separator
//! splits. Every leaf of that recursion is a clique+chordal instance, solved
//! by [`solve_cvd_clique_chordal`]: balance the chordal part by a maximal
//! clique, zero the fractional solution on it, recurse on both sides and cut
//! the cycles that cross the split with chordal multicut.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cert::{Audit, Certificate};
use crate::chordal;
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{union, Graph, Subgraph, VertexSet};
use crate::lp::{self, HoleOracle, ListOracle, LpOptions, ZeroMode};
use crate::multicut::{self, MulticutInstance};
use crate::rational::{self, fmt_q, Q};
use crate::separators::{self, SeparatorOptions};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CvdOptions {
    /// Holes with at most this many vertices are hit up front.
    pub short_hole_len: usize,
    /// Strip threshold is `1/(c·log n)`.
    pub c: u32,
    /// Floor on `n` inside logarithms.
    pub n_floor: usize,
    /// Clique+chordal instances below this size go to the exact search.
    pub exact_below: usize,
    /// Node budget of the exact search; the approximation runs on overflow.
    pub exact_budget: usize,
    /// Certificate constant `D` in `D·log²n`.
    pub d: u32,
    /// Depth constant `q` in `q·log n`.
    pub q: u32,
}

impl Default for CvdOptions {
    fn default() -> Self {
        CvdOptions {
            short_hole_len: 12,
            c: 1,
            n_floor: 64,
            exact_below: 64,
            exact_budget: 20_000,
            d: 48,
            q: 3,
        }
    }
}

impl CvdOptions {
    pub fn validate(&self) -> Result<()> {
        if self.short_hole_len < 4 {
            return Err(Error::Input("cvd.short_hole_len must be at least 4".into()));
        }
        if self.c == 0 || self.d == 0 || self.q == 0 {
            return Err(Error::Input("cvd.c, cvd.d and cvd.q must be positive".into()));
        }
        if self.n_floor < 2 {
            return Err(Error::Input("cvd.n_floor must be at least 2".into()));
        }
        Ok(())
    }

    /// Independence number below which a graph without short holes must be
    /// chordal: a hole longer than `L` has at least `⌊(L+1)/2⌋` independent
    /// vertices.
    pub fn termination_alpha(&self) -> usize {
        (self.short_hole_len + 1) / 2
    }
}

/// Result of short-hole hitting.
#[derive(Clone, Debug)]
pub struct HitResult {
    pub removed: VertexSet,
    pub residual: Subgraph,
    /// Optimum of the short-hole cover LP, a lower bound on the optimum.
    pub lp_value: Q,
    pub holes: usize,
}

/// Hits every hole with at most `max_len` vertices: all `v` with
/// `x(v) >= 1/max_len` in an optimal cover LP, then redundant vertices are
/// dropped heaviest first. Weight is at most `max_len` times the LP value.
pub fn hit_short_holes(g: &Graph, max_len: usize, lp_opts: &LpOptions) -> Result<HitResult> {
    let holes: Vec<VertexSet> = chordal::enumerate_short_holes(g, max_len)
        .into_iter()
        .map(|h| h.sorted_vertices())
        .collect();
    if holes.is_empty() {
        return Ok(HitResult {
            removed: Vec::new(),
            residual: g.remove(&[]),
            lp_value: Q::zero(),
            holes: 0,
        });
    }
    let count = holes.len();
    let opts = LpOptions {
        row_budget: lp_opts.budget_for(g.n()).max(count),
        ..lp_opts.clone()
    };
    let sol = lp::solve_cover_lp(g, &mut ListOracle { rows: holes.clone() }, &opts)?;
    let thr = Q::new(1.into(), max_len.into());
    let mut chosen = FixedBitSet::with_capacity(g.n());
    for v in 0..g.n() {
        if sol.x[v] >= thr {
            chosen.insert(v);
        }
    }
    let mut order: Vec<usize> = chosen.ones().collect();
    order.sort_by(|&a, &b| g.weight(b).cmp(g.weight(a)).then(b.cmp(&a)));
    for v in order {
        chosen.set(v, false);
        let still = holes.iter().all(|h| h.iter().any(|&u| chosen.contains(u)));
        if !still {
            chosen.insert(v);
        }
    }
    let removed: VertexSet = chosen.ones().collect();
    let bound = Q::from_integer(max_len.into()) * &sol.value;
    if g.weight_of(&removed) > bound {
        return Err(Error::Internal("short-hole hitting set exceeds its LP bound".into()));
    }
    Ok(HitResult {
        residual: g.remove(&removed),
        removed,
        lp_value: sol.value,
        holes: count,
    })
}

/// Independence number of a graph that is a clique `c` plus a chordal rest:
/// the larger of `α(H)` and `1 + α(H - N(v))` over `v` in `c`.
pub fn compute_alpha(g: &Graph, c: &[usize]) -> Result<usize> {
    let h = g.remove(c);
    let mut best = chordal::chordal_alpha(&h.graph)?;
    for &v in c {
        let drop: Vec<usize> = g.neighbors(v).iter().copied().chain(c.iter().copied()).collect();
        let rest = g.remove(&drop);
        best = best.max(1 + chordal::chordal_alpha(&rest.graph)?);
    }
    Ok(best)
}

/// A maximal clique of a chordal graph and the two groups of components it
/// leaves, balanced by independence number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancingClique {
    pub clique: VertexSet,
    pub side1: VertexSet,
    pub side2: VertexSet,
    pub alpha: usize,
    pub alpha1: usize,
    pub alpha2: usize,
}

impl BalancingClique {
    /// Both sides have independence number at most `2/3·α`.
    pub fn balanced(&self) -> bool {
        3 * self.alpha1.max(self.alpha2) <= 2 * self.alpha
    }
}

/// Tries every bag of the clique forest and keeps the one with the smallest
/// larger side (by independence number, then by size), first bag on ties.
pub fn find_balancing_clique(h: &Graph) -> Result<BalancingClique> {
    let alpha = chordal::chordal_alpha(h)?;
    let forest = chordal::build_clique_forest(h)?;
    let mut best: Option<((usize, usize), BalancingClique)> = None;
    for bag in &forest.bags {
        let rest = h.remove(bag);
        let comps = rest.graph.connected_components();
        let mut items: Vec<(usize, VertexSet)> = Vec::with_capacity(comps.len());
        for comp in comps {
            let sub = rest.graph.induced_subgraph(&comp)?;
            items.push((chordal::chordal_alpha(&sub.graph)?, rest.map_back(&comp)));
        }
        items.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.len().cmp(&a.1.len())).then(a.1.cmp(&b.1)));
        let mut sides: [(usize, VertexSet); 2] = [(0, Vec::new()), (0, Vec::new())];
        for (a, comp) in items {
            let i = usize::from(
                (sides[1].0, sides[1].1.len()) < (sides[0].0, sides[0].1.len()),
            );
            sides[i].0 += a;
            sides[i].1.extend(comp);
        }
        for s in sides.iter_mut() {
            s.1.sort_unstable();
        }
        let key = (
            sides[0].0.max(sides[1].0),
            sides[0].1.len().max(sides[1].1.len()),
        );
        if best.as_ref().map_or(true, |(k, _)| key < *k) {
            let [(alpha1, side1), (alpha2, side2)] = sides;
            best = Some((
                key,
                BalancingClique {
                    clique: bag.clone(),
                    side1,
                    side2,
                    alpha,
                    alpha1,
                    alpha2,
                },
            ));
        }
    }
    best.map(|(_, b)| b)
        .ok_or_else(|| Error::Input("balancing clique of an empty graph".into()))
}

/// While a hole remains in `g - s`, adds its lightest vertex. Returns the new
/// set and the number of vertices added.
pub fn repair_holes(g: &Graph, s: &[usize]) -> (VertexSet, usize) {
    let mut out: VertexSet = s.to_vec();
    out.sort_unstable();
    out.dedup();
    let mut added = 0;
    loop {
        let rest = g.remove(&out);
        let Some(h) = chordal::find_hole(&rest.graph) else {
            return (out, added);
        };
        let v = h
            .vertices()
            .iter()
            .copied()
            .min_by(|&a, &b| rest.graph.weight(a).cmp(rest.graph.weight(b)).then(a.cmp(&b)))
            .expect("holes are nonempty");
        out.push(rest.back[v]);
        out.sort_unstable();
        added += 1;
    }
}

/// Parameters fixed for one clique+chordal instance.
struct Level {
    thr: Q,
    max_depth: usize,
}

struct Solver<'a> {
    opts: &'a CvdOptions,
    lp: &'a LpOptions,
    sep: &'a SeparatorOptions,
    audit: Audit,
}

impl Solver<'_> {
    /// Divide and conquer over clique-plus-separator splits.
    fn general(&mut self, g: &Graph) -> Result<VertexSet> {
        if chordal::is_chordal(g) {
            return Ok(Vec::new());
        }
        self.audit.count("gen_calls", 1);
        for m in chordal::enumerate_maximal_cliques(g) {
            if chordal::is_chordal(&g.remove(&m).graph) {
                return self.special(g, &m);
            }
        }
        let n = g.n();
        let split = separators::clique_plus_separator(g, self.sep);
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
        let g1 = g.induced_subgraph(&v1)?;
        let s1 = g1.map_back(&self.general(&g1.graph)?);
        let g2 = g.induced_subgraph(&v2)?;
        let s2 = g2.map_back(&self.general(&g2.graph)?);
        let gone: FixedBitSet = g.bits_of(&union(&[&s1, &s2]));
        let j: VertexSet = union(&[&v1, &v2, &m])
            .into_iter()
            .filter(|&v| !gone.contains(v))
            .collect();
        let jg = g.induced_subgraph(&j)?;
        let jm = jg.to_local(&m);
        let sj = jg.map_back(&self.special(&jg.graph, &jm)?);
        Ok(union(&[&s, &s1, &s2, &sj]))
    }

    /// Clique+chordal instance `g` with clique `c`, fresh LP.
    fn special(&mut self, g: &Graph, c: &[usize]) -> Result<VertexSet> {
        if chordal::is_chordal(g) {
            return Ok(Vec::new());
        }
        self.audit.count("special_calls", 1);
        if g.n() < self.opts.exact_below {
            if let Some(r) = exact::exact_cvd(g, self.opts.exact_budget) {
                self.audit.count("exact_calls", 1);
                self.audit.charge("exact", &r.weight);
                return Ok(r.solution);
            }
            self.audit.count("exact_aborted", 1);
        }
        let sol = lp::solve_cover_lp_lenient(g, &mut HoleOracle { min_len: 4 }, self.lp)?;
        if !sol.complete {
            self.audit.count("lp_incomplete", 1);
        }
        self.special_with_x(g, c, &sol.x)
    }

    /// Approximation from a feasible fractional solution `x`.
    fn special_with_x(&mut self, g: &Graph, c: &[usize], x: &[Q]) -> Result<VertexSet> {
        let n_eff = g.n().max(self.opts.n_floor);
        let cl = Q::from_integer(self.opts.c.into()) * rational::log2_q(n_eff);
        let level = Level {
            thr: Q::one() / cl,
            max_depth: (f64::from(self.opts.q) * rational::log2(n_eff)).ceil() as usize,
        };
        let st = lp::strip_high(g, x, &level.thr)?;
        self.audit.charge("strip", &g.weight_of(&st.removed));
        let c1 = st.residual.to_local(c);
        let x0 = lp::zero_out(&st.residual.graph, &st.x, &ZeroMode::Clique(&c1))?;
        let st2 = lp::strip_high(&st.residual.graph, &x0, &level.thr)?;
        self.audit
            .charge("strip", &st.residual.graph.weight_of(&st2.removed));
        let g2 = &st2.residual;
        let c2 = g2.to_local(&c1);
        let inner = self.recurse(&g2.graph, &c2, &st2.x, 1, &level)?;
        let inner = st.residual.map_back(&union(&[&st2.removed, &g2.map_back(&inner)]));
        Ok(union(&[&st.removed, &inner]))
    }

    /// Exact search, greedy repair when the budget runs out.
    fn fallback(&mut self, g: &Graph) -> VertexSet {
        self.audit.count("fallbacks", 1);
        match exact::exact_cvd(g, self.opts.exact_budget) {
            Some(r) => {
                self.audit.charge("exact", &r.weight);
                r.solution
            }
            None => {
                let (s, _) = repair_holes(g, &[]);
                self.audit.charge("fallback", &g.weight_of(&s));
                s
            }
        }
    }

    fn recurse(&mut self, g: &Graph, c: &[usize], x: &[Q], depth: usize, lv: &Level) -> Result<VertexSet> {
        if chordal::is_chordal(g) {
            return Ok(Vec::new());
        }
        self.audit.count("levels", 1);
        self.audit.max("max_depth", depth as u64);
        self.audit.check(c.iter().all(|&v| x[v].is_zero()), || {
            format!("zero-clique invariant fails at depth {depth}")
        });
        self.audit.check(x.iter().all(|v| *v < lv.thr), || {
            format!("low-value invariant fails at depth {depth}")
        });
        if !self.audit.check(depth <= lv.max_depth, || {
            format!("depth {depth} exceeds {}", lv.max_depth)
        }) {
            return Ok(self.fallback(g));
        }
        let alpha = compute_alpha(g, c)?;
        let t = self.opts.termination_alpha();
        self.audit.check(alpha >= t, || {
            format!("non-chordal instance with independence number {alpha} < {t}")
        });

        let h = g.remove(c);
        let bal = find_balancing_clique(&h.graph)?;
        self.audit.check(bal.balanced(), || {
            format!(
                "balancing clique leaves sides with α {} and {} of {}",
                bal.alpha1, bal.alpha2, bal.alpha
            )
        });
        let m = h.map_back(&bal.clique);
        let side1 = h.map_back(&bal.side1);
        let side2 = h.map_back(&bal.side2);

        let xs = lp::zero_out(g, x, &ZeroMode::Clique(&m))?;
        self.audit.check(
            c.iter().chain(&m).all(|&v| xs[v].is_zero()),
            || "x* is not zero on C ∪ M".into(),
        );
        let st = lp::strip_high(g, &xs, &lv.thr)?;
        self.audit.charge("strip", &g.weight_of(&st.removed));
        let gh = &st.residual;
        let xh = &st.x;
        let ch = gh.to_local(c);
        let mh = gh.to_local(&m);

        let mut kids: Vec<Child> = Vec::with_capacity(2);
        for side in [&side1, &side2] {
            let verts = gh.to_local(&union(&[side, c, &m]));
            let sub = gh.graph.induced_subgraph(&verts)?;
            let xi: Vec<Q> = sub.back.iter().map(|&v| xh[v].clone()).collect();
            kids.push(Child {
                cl: sub.to_local(&ch),
                x: xi,
                sub,
                sol: Vec::new(),
            });
        }
        let total = lp::weight_of(&gh.graph, xh);
        let parts = lp::weight_of(&kids[0].sub.graph, &kids[0].x) + lp::weight_of(&kids[1].sub.graph, &kids[1].x);
        self.audit.check(total == parts, || {
            format!("additivity fails: {} != {}", fmt_q(&total), fmt_q(&parts))
        });

        for kid in kids.iter_mut() {
            let ai = compute_alpha(&kid.sub.graph, &kid.cl)?;
            if alpha >= 24 {
                self.audit.check(4 * ai <= 3 * alpha, || {
                    format!("α decays from {alpha} only to {ai}")
                });
            }
            self.audit.check(3 * ai <= 2 * bal.alpha + 6, || {
                format!("child α {ai} above 2/3·{} + 2", bal.alpha)
            });
            let local = if kid.sub.graph.n() == g.n() {
                self.audit.check(false, || format!("no progress at depth {depth}"));
                self.fallback(&kid.sub.graph)
            } else {
                self.recurse(&kid.sub.graph, &kid.cl, &kid.x, depth + 1, lv)?
            };
            kid.sol = local;
        }

        let cut = self.bad_cycles(&gh.graph, &ch, &mh, &kids)?;
        let mut inner: Vec<usize> = cut;
        for kid in &kids {
            inner.extend(kid.sub.map_back(&kid.sol));
        }
        let out = union(&[&st.removed, &gh.map_back(&union(&[&inner]))]);
        self.audit.check(chordal::is_chordal(&g.remove(&out).graph), || {
            format!("cycles survive at depth {depth}")
        });
        Ok(out)
    }

    /// Multicut on both sides for the cycles that cross the split.
    fn bad_cycles(&mut self, g: &Graph, c: &[usize], m: &[usize], kids: &[Child]) -> Result<VertexSet> {
        // per side: the graph G_i - C - M - S_i and, for every v' in C ∪ M,
        // its neighbours there
        let mut hats = Vec::with_capacity(2);
        for kid in kids {
            let drop = union(&[&kid.cl, &kid.sub.to_local(m), &kid.sol]);
            let hat = kid.sub.graph.remove(&drop);
            let two = Q::from_integer(2.into());
            let x2: Vec<Q> = hat.back.iter().map(|&v| &kid.x[v] * &two).collect();
            // hat indices -> g indices
            let to_g: Vec<usize> = hat.back.iter().map(|&v| kid.sub.back[v]).collect();
            let mut pos = vec![usize::MAX; g.n()];
            for (i, &v) in to_g.iter().enumerate() {
                pos[v] = i;
            }
            let nb = |v: usize| -> VertexSet {
                g.neighbors(v).iter().filter(|&&u| pos[u] != usize::MAX).map(|&u| pos[u]).collect()
            };
            let a: BTreeMap<usize, VertexSet> = c.iter().map(|&v| (v, nb(v))).collect();
            let b: BTreeMap<usize, VertexSet> = m.iter().map(|&u| (u, nb(u))).collect();
            let labels = hat.graph.component_labels(&hat.graph.full_bits());
            // dist[v'][u'] = min over a ∈ A(v'), b ∈ B(u') of the 2x-distance
            let mut dist: BTreeMap<(usize, usize), Q> = BTreeMap::new();
            for (&vp, av) in &a {
                if av.is_empty() {
                    continue;
                }
                let d = multicut::distances(&hat.graph, &x2, av, None);
                for (&up, bu) in &b {
                    if let Some(best) = bu.iter().filter_map(|&t| d[t].clone()).min() {
                        dist.insert((vp, up), best);
                    }
                }
            }
            hats.push(Hat {
                graph: hat.graph,
                x2,
                to_g,
                a,
                b,
                labels,
                dist,
            });
        }

        let eligible = |v: usize, u: usize, vp: usize, up: usize| {
            !g.adjacent(up, v) && !g.adjacent(up, vp) && !g.adjacent(vp, u)
        };
        let mut pairs: [BTreeSet<(usize, usize)>; 2] = [BTreeSet::new(), BTreeSet::new()];
        for &v in c {
            for &u in m {
                if g.adjacent(v, u) {
                    continue;
                }
                let elig: Vec<(usize, usize)> = c
                    .iter()
                    .flat_map(|&vp| m.iter().map(move |&up| (vp, up)))
                    .filter(|&(vp, up)| eligible(v, u, vp, up))
                    .collect();
                let mins: Vec<Option<Q>> = hats
                    .iter()
                    .map(|h| elig.iter().filter_map(|k| h.dist.get(k).cloned()).min())
                    .collect();
                let (Some(m0), Some(m1)) = (&mins[0], &mins[1]) else {
                    continue;
                };
                self.audit.count("crossing_pairs", 1);
                let i = if *m0 >= Q::one() {
                    0
                } else if *m1 >= Q::one() {
                    1
                } else {
                    self.audit.check(false, || {
                        format!("pair ({v}, {u}) is short on both sides")
                    });
                    usize::from(m1 > m0)
                };
                let h = &hats[i];
                for &(vp, up) in &elig {
                    if !h.dist.contains_key(&(vp, up)) {
                        continue;
                    }
                    for &p in &h.a[&vp] {
                        for &q in &h.b[&up] {
                            if h.labels[p] == h.labels[q] {
                                pairs[i].insert((p.min(q), p.max(q)));
                            }
                        }
                    }
                }
            }
        }

        let mut out: VertexSet = Vec::new();
        for (h, ps) in hats.iter().zip(pairs) {
            if ps.is_empty() {
                continue;
            }
            self.audit.count("multicut_pairs", ps.len() as u64);
            let forced: VertexSet = union(&[&ps.iter().filter(|p| p.0 == p.1).map(|p| p.0).collect::<Vec<_>>()]);
            let rest = h.graph.remove(&forced);
            let rp: Vec<(usize, usize)> = ps
                .iter()
                .filter(|p| p.0 != p.1)
                .filter_map(|&(s, t)| {
                    let (ls, lt) = (rest.to_local(&[s]), rest.to_local(&[t]));
                    (!ls.is_empty() && !lt.is_empty()).then(|| (ls[0], lt[0]))
                })
                .collect();
            let inst = MulticutInstance::new(rest.graph.clone(), rp)?;
            let res = multicut::solve_multicut_chordal(&inst, self.lp)?;
            let budget = lp::weight_of(&h.graph, &h.x2);
            let used = h.graph.weight_of(&forced) + &res.lp.lower_bound;
            self.audit.check(used <= budget, || {
                format!("multicut LP {} above 2·w(x*) = {}", fmt_q(&used), fmt_q(&budget))
            });
            let sol = union(&[&forced, &rest.map_back(&res.solution)]);
            self.audit.charge("multicut", &h.graph.weight_of(&sol));
            out.extend(sol.iter().map(|&v| h.to_g[v]));
        }
        Ok(union(&[&out]))
    }
}

struct Child {
    sub: Subgraph,
    cl: VertexSet,
    x: Vec<Q>,
    sol: VertexSet,
}

struct Hat {
    graph: Graph,
    x2: Vec<Q>,
    to_g: Vec<usize>,
    a: BTreeMap<usize, VertexSet>,
    b: BTreeMap<usize, VertexSet>,
    labels: Vec<usize>,
    dist: BTreeMap<(usize, usize), Q>,
}

/// Clique+chordal special case: `c` is a clique of `g` and `g - c` is
/// chordal. Solves with a fresh cover LP; violations go to `audit`.
pub fn solve_cvd_clique_chordal(
    g: &Graph,
    c: &[usize],
    opts: &CvdOptions,
    lp_opts: &LpOptions,
    audit: &mut Audit,
) -> Result<VertexSet> {
    if !g.is_clique(c) {
        return Err(Error::Input("C is not a clique".into()));
    }
    if let Some(h) = chordal::find_hole(&g.remove(c).graph) {
        return Err(Error::NotChordal(h));
    }
    let sep = SeparatorOptions::default();
    let mut s = Solver {
        opts,
        lp: lp_opts,
        sep: &sep,
        audit: std::mem::take(audit),
    };
    let out = s.special(g, c);
    *audit = s.audit;
    out
}

/// The special case driven by a given feasible fractional solution `x`
/// instead of a fresh LP, with the exact shortcut off.
pub fn solve_cvd_clique_chordal_with_x(
    g: &Graph,
    c: &[usize],
    x: &[Q],
    opts: &CvdOptions,
    lp_opts: &LpOptions,
    audit: &mut Audit,
) -> Result<VertexSet> {
    if !g.is_clique(c) {
        return Err(Error::Input("C is not a clique".into()));
    }
    if x.len() != g.n() || !x.iter().all(rational::is_nonneg) {
        return Err(Error::Input("x must be a nonnegative vector over V(G)".into()));
    }
    if let Some(h) = chordal::find_hole(&g.remove(c).graph) {
        return Err(Error::NotChordal(h));
    }
    if chordal::is_chordal(g) {
        return Ok(Vec::new());
    }
    let sep = SeparatorOptions::default();
    let mut s = Solver {
        opts,
        lp: lp_opts,
        sep: &sep,
        audit: std::mem::take(audit),
    };
    s.audit.count("special_calls", 1);
    let out = s.special_with_x(g, c, x);
    *audit = s.audit;
    out
}

/// Certificate constants shared by the CVD entry points.
fn constants(opts: &CvdOptions, n_eff: usize) -> BTreeMap<String, String> {
    let mut k = BTreeMap::new();
    k.insert("L".into(), opts.short_hole_len.to_string());
    k.insert("D".into(), opts.d.to_string());
    k.insert("c".into(), opts.c.to_string());
    k.insert("q".into(), opts.q.to_string());
    k.insert("n_eff".into(), n_eff.to_string());
    k.insert("log2_n_eff".into(), fmt_q(&rational::log2_q(n_eff)));
    k.insert("multicut_factor".into(), (4 * multicut::CHORDAL_C).to_string());
    k.insert("exact_below".into(), opts.exact_below.to_string());
    k
}

/// Weighted chordal vertex deletion with certificate. `repair` selects
/// whether a non-chordal residual is repaired (and counted) or reported
/// infeasible.
pub fn solve_cvd(
    g: &Graph,
    opts: &CvdOptions,
    lp_opts: &LpOptions,
    sep: &SeparatorOptions,
) -> Result<Certificate> {
    opts.validate()?;
    let mut audit = Audit::default();
    let zeros: VertexSet = (0..g.n()).filter(|&v| g.weight(v).is_zero()).collect();
    audit.count("zero_weight", zeros.len() as u64);
    let g1 = g.remove(&zeros);

    let hit = hit_short_holes(&g1.graph, opts.short_hole_len, lp_opts)?;
    audit.count("short_holes", hit.holes as u64);
    audit.charge("hitting", &g1.graph.weight_of(&hit.removed));
    let g2 = &hit.residual;

    let main = lp::solve_cover_lp_lenient(&g2.graph, &mut HoleOracle { min_len: 4 }, lp_opts)?;
    if !main.complete {
        audit.count("lp_incomplete", 1);
    }

    let mut solver = Solver {
        opts,
        lp: lp_opts,
        sep,
        audit,
    };
    let inner = solver.general(&g2.graph)?;
    let mut audit = solver.audit;
    let inner = g1.map_back(&union(&[&hit.removed, &g2.map_back(&inner)]));
    let mut solution = union(&[&zeros, &inner]);

    let (fixed, repairs) = repair_holes(g, &solution);
    if repairs > 0 {
        audit.charge("repair", &(g.weight_of(&fixed) - g.weight_of(&solution)));
        solution = fixed;
    }
    let feasible = chordal::is_chordal(&g.remove(&solution).graph);

    let n_eff = g.n().max(opts.n_floor);
    let log = rational::log2_q(n_eff);
    let factor = Q::from_integer(opts.d.into()) * &log * &log;
    let hitting_factor = Q::from_integer(opts.short_hole_len.into());
    let bound = &factor * &main.lower_bound + &hitting_factor * &hit.lp_value;
    Ok(Certificate {
        problem: "cvd".into(),
        n: g.n(),
        m: g.m(),
        weight: g.weight_of(&solution),
        solution,
        feasible,
        lp_bound: main.lower_bound,
        hitting_bound: hit.lp_value,
        exact_opt: None,
        bound,
        factor,
        hitting_factor,
        constants: constants(opts, n_eff),
        audit,
        repairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn run(g: &Graph) -> Certificate {
        solve_cvd(g, &CvdOptions::default(), &LpOptions::default(), &SeparatorOptions::default())
            .unwrap()
    }

    #[test]
    fn hitting_examples() {
        let o = LpOptions::default();
        let r = hit_short_holes(&cycle(4), 48, &o).unwrap();
        assert_eq!(r.removed.len(), 1);
        let k = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(hit_short_holes(&k, 12, &o).unwrap().removed.is_empty());
        let e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let mut all = e.clone();
        all.extend(e.iter().map(|&(a, b)| (a + 5, b + 5)));
        let two = Graph::from_edges(10, &all).unwrap();
        assert_eq!(hit_short_holes(&two, 12, &o).unwrap().removed.len(), 2);
    }

    #[test]
    fn alpha_examples() {
        // C = K2 on {0,1}, three isolated vertices
        let g = Graph::from_edges(5, &[(0, 1)]).unwrap();
        assert_eq!(compute_alpha(&g, &[0, 1]).unwrap(), 4);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(compute_alpha(&k4, &[0]).unwrap(), 1);
        let k5e: Vec<_> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let k5 = Graph::from_edges(5, &k5e).unwrap();
        assert_eq!(compute_alpha(&k5, &[0, 1, 2, 3, 4]).unwrap(), 1);
    }

    #[test]
    fn balancing_clique_examples() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let b = find_balancing_clique(&p5).unwrap();
        assert!(b.balanced());
        assert!(b.clique == vec![1, 2] || b.clique == vec![2, 3]);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let b = find_balancing_clique(&k4).unwrap();
        assert_eq!(b.clique, vec![0, 1, 2, 3]);
        assert!(b.side1.is_empty() && b.side2.is_empty());
        let bow = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let b = find_balancing_clique(&bow).unwrap();
        assert!(b.clique.contains(&2));
    }

    #[test]
    fn repair_examples() {
        let k = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(repair_holes(&k, &[]), (vec![], 0));
        let g = cycle(4).with_weights(vec![q(3), q(2), q(1), q(5)]).unwrap();
        assert_eq!(repair_holes(&g, &[]), (vec![2], 1));
        assert_eq!(repair_holes(&cycle(5), &[0]), (vec![0], 0));
    }

    #[test]
    fn solve_examples() {
        let k = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(run(&k).weight, q(0));
        let c = run(&cycle(4));
        assert_eq!(c.weight, q(1));
        assert!(c.clean());
        let g = cycle(4).with_weights(vec![q(5), q(1), q(1), q(1)]).unwrap();
        let c = run(&g);
        assert_eq!(c.weight, q(1));
        assert!(c.feasible);
    }

    #[test]
    fn special_case_five_cycle() {
        // C = {u, v} = {3, 4}; H = path 0-1-2; u-0 and v-2
        let g = Graph::from_edges(5, &[(3, 4), (0, 1), (1, 2), (3, 0), (4, 2)]).unwrap();
        let mut audit = Audit::default();
        let opts = CvdOptions {
            exact_below: 0,
            ..Default::default()
        };
        let s = solve_cvd_clique_chordal(&g, &[3, 4], &opts, &LpOptions::default(), &mut audit).unwrap();
        assert!(chordal::is_chordal(&g.remove(&s).graph));
        let e = solve_cvd_clique_chordal(&g, &[3, 4], &CvdOptions::default(), &LpOptions::default(), &mut audit)
            .unwrap();
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn long_cycle_through_recursion() {
        // a 20-cycle with a clique attached forces the approximate path
        let n = 20;
        let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        e.push((0, 20));
        e.push((1, 20));
        let g = Graph::from_edges(21, &e).unwrap();
        let opts = CvdOptions {
            exact_below: 0,
            ..Default::default()
        };
        let c = solve_cvd(&g, &opts, &LpOptions::default(), &SeparatorOptions::default()).unwrap();
        assert!(c.feasible);
        assert_eq!(c.repairs, 0);
        assert!(c.within_bound());
    }
}
