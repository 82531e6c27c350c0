//! Weighted distance-hereditary vertex deletion.
//!
//! [`solve_dhvd`] hits every obstruction on at most `obstruction_size`
//! vertices by LP rounding, solves one cover LP on what is left and keeps it:
//! the divide and conquer over biclique-plus-separator splits hands
//! restrictions of that solution to the biclique+DH special case
//! ([`solve_dhvd_biclique_dh`]). The special case cuts the DH part along a
//! balanced rank-width-1 edge, zeroes the solution on the cut biclique,
//! recurses and cuts the cycles crossing the split with general multicut.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cert::{Audit, Certificate};
use crate::chordal;
use crate::dh::{self, Biclique};
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{union, Graph, Subgraph, VertexSet};
use crate::lp::{self, DhOracle, ListOracle, LpOptions, ZeroMode};
use crate::multicut::{self, MulticutInstance};
use crate::rational::{self, fmt_q, Q};
use crate::separators::{self, SeparatorOptions};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DhvdOptions {
    /// Obstructions with at most this many vertices are hit up front.
    pub obstruction_size: usize,
    /// Strip threshold is `1/(c·log n)`.
    pub c: u32,
    /// Floor on `n` inside logarithms.
    pub n_floor: usize,
    /// Special-case instances below this size go to the exact search.
    pub exact_below: usize,
    pub exact_budget: usize,
    /// Certificate constant `D'` in `D'·log³n`.
    pub d: u32,
    /// Depth constant `q` in `q·log n`.
    pub q: u32,
}

impl Default for DhvdOptions {
    fn default() -> Self {
        DhvdOptions {
            obstruction_size: 8,
            c: 3,
            n_floor: 16,
            exact_below: 24,
            exact_budget: 20_000,
            d: 48,
            q: 3,
        }
    }
}

impl DhvdOptions {
    pub fn validate(&self) -> Result<()> {
        if self.obstruction_size < 6 {
            return Err(Error::Input("dhvd.obstruction_size must be at least 6".into()));
        }
        if self.c == 0 || self.d == 0 || self.q == 0 {
            return Err(Error::Input("dhvd.c, dhvd.d and dhvd.q must be positive".into()));
        }
        if self.n_floor < 2 {
            return Err(Error::Input("dhvd.n_floor must be at least 2".into()));
        }
        // the biclique rescaling needs values below 1/12
        if self.threshold(self.n_floor) > Q::new(1.into(), 12.into()) {
            return Err(Error::Input("dhvd: 1/(c·log n_floor) must be at most 1/12".into()));
        }
        Ok(())
    }

    /// `n` used inside logarithms.
    pub fn n_eff(&self, n: usize) -> usize {
        n.max(self.n_floor)
    }

    /// Low-value threshold `1/(c·log n)`.
    pub fn threshold(&self, n: usize) -> Q {
        Q::one() / (Q::from_integer(self.c.into()) * rational::log2_q(self.n_eff(n)))
    }
}

/// Result of small-obstruction hitting.
#[derive(Clone, Debug)]
pub struct HitResult {
    pub removed: VertexSet,
    pub residual: Subgraph,
    /// Optimum of the small-obstruction cover LP.
    pub lp_value: Q,
    pub obstructions: usize,
}

/// Hits every DH-obstruction on at most `max_size` vertices by rounding the
/// cover LP at `1/max_size`, then drops redundant vertices heaviest first.
pub fn hit_small_obstructions(g: &Graph, max_size: usize, lp_opts: &LpOptions) -> Result<HitResult> {
    if max_size < 5 {
        return Err(Error::Input("obstruction size must be at least 5".into()));
    }
    let mut rows: Vec<VertexSet> = dh::enumerate_small_obstructions(g, max_size)
        .into_iter()
        .map(|o| o.sorted_vertices())
        .collect();
    rows.sort();
    rows.dedup();
    if rows.is_empty() {
        return Ok(HitResult {
            removed: Vec::new(),
            residual: g.remove(&[]),
            lp_value: Q::zero(),
            obstructions: 0,
        });
    }
    let count = rows.len();
    let opts = LpOptions {
        row_budget: lp_opts.budget_for(g.n()).max(count),
        ..lp_opts.clone()
    };
    let sol = lp::solve_cover_lp(g, &mut ListOracle { rows: rows.clone() }, &opts)?;
    let thr = Q::new(1.into(), max_size.into());
    let mut chosen = vec![false; g.n()];
    for v in 0..g.n() {
        chosen[v] = sol.x[v] >= thr;
    }
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| chosen[v]).collect();
    order.sort_by(|&a, &b| g.weight(b).cmp(g.weight(a)).then(b.cmp(&a)));
    for v in order {
        chosen[v] = false;
        if !rows.iter().all(|r| r.iter().any(|&u| chosen[u])) {
            chosen[v] = true;
        }
    }
    let removed: VertexSet = (0..g.n()).filter(|&v| chosen[v]).collect();
    if g.weight_of(&removed) > Q::from_integer(max_size.into()) * &sol.value {
        return Err(Error::Internal("obstruction hitting set exceeds its LP bound".into()));
    }
    Ok(HitResult {
        residual: g.remove(&removed),
        removed,
        lp_value: sol.value,
        obstructions: count,
    })
}

/// A biclique `c` of `graph` whose removal leaves a DH graph, with a
/// fractional solution over all of `graph`.
#[derive(Clone, Debug)]
pub struct BicliqueDhInstance {
    pub graph: Graph,
    pub c: Biclique,
    pub x: Vec<Q>,
}

impl BicliqueDhInstance {
    pub fn validate(&self) -> Result<()> {
        if !self.c.is_valid_in(&self.graph) {
            return Err(Error::Input("C is not a biclique".into()));
        }
        if self.x.len() != self.graph.n() || !self.x.iter().all(rational::is_nonneg) {
            return Err(Error::Input("x must be a nonnegative vector over V(G)".into()));
        }
        let h = self.graph.remove(&self.c.vertices());
        if let Some(o) = dh::find_obstruction(&h.graph) {
            return Err(Error::Input(format!(
                "G - C is not distance-hereditary: {:?} on {:?}",
                o.kind,
                h.map_back(&o.vertices)
            )));
        }
        Ok(())
    }

    pub fn alpha(&self) -> usize {
        alpha_dh(&self.x, &self.c.vertices())
    }
}

/// Support size of `x` outside `c`.
pub fn alpha_dh(x: &[Q], c: &[usize]) -> usize {
    (0..x.len())
        .filter(|v| !x[*v].is_zero() && c.binary_search(v).is_err())
        .count()
}

/// While `g - s` is not DH, adds the lightest vertex of some obstruction.
pub fn repair_obstructions(g: &Graph, s: &[usize]) -> (VertexSet, usize) {
    let mut out = union(&[s]);
    let mut added = 0;
    loop {
        let rest = g.remove(&out);
        let Some(o) = dh::find_obstruction(&rest.graph) else {
            return (out, added);
        };
        let v = o
            .vertices
            .iter()
            .copied()
            .min_by(|&a, &b| rest.graph.weight(a).cmp(rest.graph.weight(b)).then(a.cmp(&b)))
            .expect("obstructions are nonempty");
        out = union(&[&out, &[rest.back[v]]]);
        added += 1;
    }
}

/// Checks on `g` that every hole of length at least 5 meeting the biclique
/// `m` can be traded for one meeting `m` in a single vertex, an edge or an
/// induced P3, using only edges of the original hole outside `m`. Returns
/// the first hole without such a replacement. Exhaustive; small graphs only.
pub fn hole_biclique_violation(g: &Graph, m: &Biclique) -> Option<Vec<usize>> {
    let mv = m.vertices();
    let in_m = g.bits_of(&mv);
    let holes: Vec<Vec<usize>> = chordal::enumerate_short_holes(g, g.n())
        .into_iter()
        .filter(|h| h.len() >= 5)
        .map(|h| h.0)
        .collect();
    let outside_edges = |h: &[usize]| -> BTreeSet<(usize, usize)> {
        (0..h.len())
            .map(|i| (h[i], h[(i + 1) % h.len()]))
            .filter(|&(a, b)| !in_m.contains(a) && !in_m.contains(b))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect()
    };
    let good_shape = |h: &[usize]| -> bool {
        let inside: Vec<usize> = h.iter().copied().filter(|&v| in_m.contains(v)).collect();
        match inside.len() {
            1 => true,
            2 => g.adjacent(inside[0], inside[1]),
            3 => {
                let e = (0..3)
                    .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                    .filter(|&(i, j)| g.adjacent(inside[i], inside[j]))
                    .count();
                e == 2
            }
            _ => false,
        }
    };
    for q in &holes {
        if !q.iter().any(|&v| in_m.contains(v)) || good_shape(q) {
            continue;
        }
        let eq = outside_edges(q);
        let found = holes
            .iter()
            .any(|p| p.iter().any(|&v| in_m.contains(v)) && good_shape(p) && outside_edges(p).is_subset(&eq));
        if !found {
            return Some(q.clone());
        }
    }
    None
}

struct Level {
    thr: Q,
    /// `1/thr`, the `log n` handed to the biclique rescaling.
    inv: Q,
    max_depth: usize,
}

struct Solver<'a> {
    opts: &'a DhvdOptions,
    lp: &'a LpOptions,
    sep: &'a SeparatorOptions,
    audit: Audit,
}

struct Child {
    sub: Subgraph,
    c: VertexSet,
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

fn restrict(x: &[Q], back: &[usize]) -> Vec<Q> {
    back.iter().map(|&v| x[v].clone()).collect()
}

fn local_biclique(sub: &Subgraph, b: &Biclique) -> Biclique {
    Biclique {
        m1: sub.to_local(&b.m1),
        m2: sub.to_local(&b.m2),
    }
}

impl Solver<'_> {
    fn level(&self, n: usize) -> Level {
        let n_eff = self.opts.n_eff(n);
        let thr = self.opts.threshold(n);
        Level {
            inv: Q::one() / &thr,
            thr,
            max_depth: (f64::from(self.opts.q) * rational::log2(n_eff)).ceil() as usize,
        }
    }

    /// Divide and conquer over biclique-plus-separator splits; `x` is the
    /// retained fractional solution restricted to `g`.
    fn general(&mut self, g: &Graph, x: &[Q]) -> Result<VertexSet> {
        if dh::is_distance_hereditary(g) {
            return Ok(Vec::new());
        }
        self.audit.count("gen_calls", 1);
        for k in dh::enumerate_maximal_bicliques(g) {
            if dh::is_distance_hereditary(&g.remove(&k.vertices()).graph) {
                return self.special_with_x(g, &k, x);
            }
        }
        let n = g.n();
        let (k, s) = separators::biclique_plus_separator(g, self.sep);
        self.audit.charge("separator", &g.weight_of(&s));
        let kv = k.as_ref().map(Biclique::vertices).unwrap_or_default();
        let rest = g.remove(&union(&[&kv, &s]));
        let comps = rest.graph.connected_components();
        let (a1, a2) = separators::pack_components(&comps, n);
        let v1 = rest.map_back(&a1);
        let v2 = rest.map_back(&a2);
        self.audit.check(3 * v1.len() <= 2 * n && 3 * v2.len() <= 2 * n, || {
            format!("gen split of {n} vertices into {} + {} is unbalanced", v1.len(), v2.len())
        });
        if v1.len() == n || v2.len() == n {
            self.audit.check(false, || format!("gen split of {n} vertices makes no progress"));
            return Ok(self.fallback(g));
        }
        let g1 = g.induced_subgraph(&v1)?;
        let s1 = g1.map_back(&self.general(&g1.graph, &restrict(x, &g1.back))?);
        let g2 = g.induced_subgraph(&v2)?;
        let s2 = g2.map_back(&self.general(&g2.graph, &restrict(x, &g2.back))?);
        let Some(k) = k else {
            return Ok(union(&[&s, &s1, &s2]));
        };
        let gone = g.bits_of(&union(&[&s1, &s2]));
        let j: VertexSet = union(&[&v1, &v2, &kv])
            .into_iter()
            .filter(|&v| !gone.contains(v))
            .collect();
        let jg = g.induced_subgraph(&j)?;
        let jk = local_biclique(&jg, &k);
        let sj = jg.map_back(&self.special_with_x(&jg.graph, &jk, &restrict(x, &jg.back))?);
        Ok(union(&[&s, &s1, &s2, &sj]))
    }

    /// Biclique+DH instance with a feasible fractional solution `x`.
    fn special_with_x(&mut self, g: &Graph, c: &Biclique, x: &[Q]) -> Result<VertexSet> {
        if dh::is_distance_hereditary(g) {
            return Ok(Vec::new());
        }
        self.audit.count("special_calls", 1);
        if g.n() < self.opts.exact_below {
            if let Some(r) = exact::exact_dhvd(g, self.opts.exact_budget) {
                self.audit.count("exact_calls", 1);
                self.audit.charge("exact", &r.weight);
                return Ok(r.solution);
            }
            self.audit.count("exact_aborted", 1);
        }
        let lv = self.level(g.n());
        let st = lp::strip_high(g, x, &lv.thr)?;
        self.audit.charge("strip", &g.weight_of(&st.removed));
        let g1 = &st.residual;
        let c1 = local_biclique(g1, c);
        if c1.m1.is_empty() || c1.m2.is_empty() {
            // stripping ate a side of C: no biclique left to zero out
            self.audit.count("degenerate_c", 1);
            let inner = self.general(&g1.graph, &st.x)?;
            return Ok(union(&[&st.removed, &g1.map_back(&inner)]));
        }
        let x0 = lp::zero_out(&g1.graph, &st.x, &ZeroMode::Biclique(&c1, lv.inv.clone()))?;
        let st2 = lp::strip_high(&g1.graph, &x0, &lv.thr)?;
        self.audit.charge("strip", &g1.graph.weight_of(&st2.removed));
        let g2 = &st2.residual;
        let c2 = g2.to_local(&c1.vertices());
        let inner = self.recurse(&g2.graph, &c2, &st2.x, 1, &lv)?;
        let inner = g1.map_back(&union(&[&st2.removed, &g2.map_back(&inner)]));
        Ok(union(&[&st.removed, &inner]))
    }

    fn fallback(&mut self, g: &Graph) -> VertexSet {
        self.audit.count("fallbacks", 1);
        match exact::exact_dhvd(g, self.opts.exact_budget) {
            Some(r) => {
                self.audit.charge("exact", &r.weight);
                r.solution
            }
            None => {
                let (s, _) = repair_obstructions(g, &[]);
                self.audit.charge("fallback", &g.weight_of(&s));
                s
            }
        }
    }

    fn recurse(&mut self, g: &Graph, c: &[usize], x: &[Q], depth: usize, lv: &Level) -> Result<VertexSet> {
        if dh::is_distance_hereditary(g) {
            return Ok(Vec::new());
        }
        self.audit.count("levels", 1);
        self.audit.max("max_depth", depth as u64);
        self.audit.check(c.iter().all(|&v| x[v].is_zero()), || {
            format!("zero-biclique invariant fails at depth {depth}")
        });
        self.audit.check(x.iter().all(|v| *v < lv.thr), || {
            format!("low-value invariant fails at depth {depth}")
        });
        if !self.audit.check(depth <= lv.max_depth, || {
            format!("depth {depth} exceeds {}", lv.max_depth)
        }) {
            return Ok(self.fallback(g));
        }
        let alpha = alpha_dh(x, c);
        // an obstruction carries value 1 spread over values below thr
        self.audit.check(Q::from_integer(alpha.into()) * &lv.thr > Q::one(), || {
            format!("non-DH instance with support {alpha} at threshold {}", fmt_q(&lv.thr))
        });

        let h = g.remove(c);
        if h.graph.n() < 2 {
            self.audit.check(false, || format!("nothing to split at depth {depth}"));
            return Ok(self.fallback(g));
        }
        let dec = dh::rankwidth1_decomposition(&h.graph)?;
        let support: Vec<usize> = h.back.iter().map(|&v| usize::from(!x[v].is_zero())).collect();
        let cut = dh::balancing_rw1_cut(&h.graph, &dec, Some(&support))?;
        let m1 = h.map_back(&cut.m1);
        let m2 = h.map_back(&cut.m2);
        let m = union(&[&m1, &m2]);
        let side1 = h.map_back(&cut.side1);
        let side2 = h.map_back(&cut.side2);
        if !m.is_empty() {
            self.audit.check(!dh::has_induced_p4(g, &m), || {
                format!("cut biclique induces a P4 at depth {depth}")
            });
        }

        let xs = if m1.is_empty() || m2.is_empty() {
            x.to_vec()
        } else {
            let b = Biclique { m1, m2 };
            lp::zero_out(g, x, &ZeroMode::Biclique(&b, lv.inv.clone()))?
        };
        self.audit.check(c.iter().chain(&m).all(|&v| xs[v].is_zero()), || {
            "x* is not zero on C ∪ M".into()
        });
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
            kids.push(Child {
                c: sub.to_local(&ch),
                x: restrict(xh, &sub.back),
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
            let ai = alpha_dh(&kid.x, &kid.c);
            if alpha >= 9 {
                self.audit.check(4 * ai <= 3 * alpha, || {
                    format!("support decays from {alpha} only to {ai}")
                });
            }
            self.audit.check(3 * ai <= 2 * alpha + 3, || {
                format!("child support {ai} above 2/3·{alpha} + 1")
            });
            kid.sol = if kid.sub.graph.n() == g.n() {
                self.audit.check(false, || format!("no progress at depth {depth}"));
                self.fallback(&kid.sub.graph)
            } else {
                self.recurse(&kid.sub.graph, &kid.c, &kid.x, depth + 1, lv)?
            };
        }

        let mut inner = self.bad_cycles(&gh.graph, &ch, &mh, &kids)?;
        for kid in &kids {
            inner.extend(kid.sub.map_back(&kid.sol));
        }
        let out = union(&[&st.removed, &gh.map_back(&union(&[&inner]))]);
        self.audit.check(dh::is_distance_hereditary(&g.remove(&out).graph), || {
            format!("obstructions survive at depth {depth}")
        });
        Ok(out)
    }

    /// Cycles through both sides: for every non-adjacent `(v, u)` in `C × M`
    /// and every side where the `2x*`-distance between their neighbourhoods
    /// is at least 1, cut all neighbour pairs on that side.
    fn bad_cycles(&mut self, g: &Graph, c: &[usize], m: &[usize], kids: &[Child]) -> Result<VertexSet> {
        let two = Q::from_integer(2.into());
        let mut hats = Vec::with_capacity(2);
        for kid in kids {
            let drop = union(&[&kid.c, &kid.sub.to_local(m), &kid.sol]);
            let hat = kid.sub.graph.remove(&drop);
            let x2: Vec<Q> = hat.back.iter().map(|&v| &kid.x[v] * &two).collect();
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
            let mut dist = BTreeMap::new();
            for (&v, av) in &a {
                if av.is_empty() {
                    continue;
                }
                let d = multicut::distances(&hat.graph, &x2, av, None);
                for (&u, bu) in &b {
                    if let Some(best) = bu.iter().filter_map(|&t| d[t].clone()).min() {
                        dist.insert((v, u), best);
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

        let mut pairs: [BTreeSet<(usize, usize)>; 2] = [BTreeSet::new(), BTreeSet::new()];
        for &v in c {
            for &u in m {
                if g.adjacent(v, u) {
                    continue;
                }
                let ds: Vec<Option<&Q>> = hats.iter().map(|h| h.dist.get(&(v, u))).collect();
                if ds.iter().all(Option::is_some) {
                    self.audit.count("crossing_pairs", 1);
                }
                if ds.iter().all(|d| d.is_some_and(|d| *d < Q::one())) {
                    self.audit.count("short_pairs", 1);
                }
                for (i, h) in hats.iter().enumerate() {
                    if !ds[i].is_some_and(|d| *d >= Q::one()) {
                        continue;
                    }
                    for &p in &h.a[&v] {
                        for &q in &h.b[&u] {
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
            let res = multicut::solve_multicut_general(&inst, self.lp)?;
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

/// Biclique+DH special case driven by the instance's fractional solution.
/// Violations go to `audit`.
pub fn solve_dhvd_biclique_dh(
    inst: &BicliqueDhInstance,
    opts: &DhvdOptions,
    lp_opts: &LpOptions,
    audit: &mut Audit,
) -> Result<VertexSet> {
    opts.validate()?;
    inst.validate()?;
    let sep = SeparatorOptions::default();
    let mut s = Solver {
        opts,
        lp: lp_opts,
        sep: &sep,
        audit: std::mem::take(audit),
    };
    let out = s.special_with_x(&inst.graph, &inst.c, &inst.x);
    *audit = s.audit;
    out
}

fn constants(opts: &DhvdOptions, n_eff: usize) -> BTreeMap<String, String> {
    let mut k = BTreeMap::new();
    k.insert("L".into(), opts.obstruction_size.to_string());
    k.insert("D".into(), opts.d.to_string());
    k.insert("c".into(), opts.c.to_string());
    k.insert("q".into(), opts.q.to_string());
    k.insert("n_eff".into(), n_eff.to_string());
    k.insert("log2_n_eff".into(), fmt_q(&rational::log2_q(n_eff)));
    k.insert("exact_below".into(), opts.exact_below.to_string());
    k
}

/// Weighted distance-hereditary vertex deletion with certificate.
pub fn solve_dhvd(
    g: &Graph,
    opts: &DhvdOptions,
    lp_opts: &LpOptions,
    sep: &SeparatorOptions,
) -> Result<Certificate> {
    opts.validate()?;
    let mut audit = Audit::default();
    let zeros: VertexSet = (0..g.n()).filter(|&v| g.weight(v).is_zero()).collect();
    audit.count("zero_weight", zeros.len() as u64);
    let g1 = g.remove(&zeros);

    let hit = hit_small_obstructions(&g1.graph, opts.obstruction_size, lp_opts)?;
    audit.count("small_obstructions", hit.obstructions as u64);
    audit.charge("hitting", &g1.graph.weight_of(&hit.removed));
    let g2 = &hit.residual;

    let main = lp::solve_cover_lp_lenient(&g2.graph, &mut DhOracle::new(), lp_opts)?;
    if !main.complete {
        audit.count("lp_incomplete", 1);
    }
    let mut solver = Solver {
        opts,
        lp: lp_opts,
        sep,
        audit,
    };
    let inner = solver.general(&g2.graph, &main.x)?;
    let mut audit = solver.audit;
    let inner = g1.map_back(&union(&[&hit.removed, &g2.map_back(&inner)]));
    let mut solution = union(&[&zeros, &inner]);

    let (fixed, repairs) = repair_obstructions(g, &solution);
    if repairs > 0 {
        audit.charge("repair", &(g.weight_of(&fixed) - g.weight_of(&solution)));
        solution = fixed;
    }
    let feasible = dh::is_distance_hereditary_with_witness(&g.remove(&solution).graph).is_dh();

    let n_eff = opts.n_eff(g.n());
    let log = rational::log2_q(n_eff);
    let factor = Q::from_integer(opts.d.into()) * &log * &log * &log;
    let hitting_factor = Q::from_integer(opts.obstruction_size.into());
    let bound = &factor * &main.lower_bound + &hitting_factor * &hit.lp_value;
    Ok(Certificate {
        problem: "dhvd".into(),
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

    fn house() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]).unwrap()
    }

    fn run(g: &Graph) -> Certificate {
        solve_dhvd(g, &DhvdOptions::default(), &LpOptions::default(), &SeparatorOptions::default()).unwrap()
    }

    #[test]
    fn hitting_examples() {
        let o = LpOptions::default();
        let r = hit_small_obstructions(&house(), 8, &o).unwrap();
        assert_eq!(g_weight(&house(), &r.removed), q(1));
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(hit_small_obstructions(&tree, 8, &o).unwrap().removed.is_empty());
        // gem on 0..5, domino on 5..11
        let mut e = vec![(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)];
        e.extend([(5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 5), (6, 9)]);
        let g = Graph::from_edges(11, &e).unwrap();
        assert_eq!(hit_small_obstructions(&g, 8, &o).unwrap().removed.len(), 2);
    }

    fn g_weight(g: &Graph, s: &[usize]) -> Q {
        g.weight_of(s)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_dh(&[q(0), q(0)], &[]), 0);
        let x = vec![q(1), q(0), q(1), q(0), q(1)];
        assert_eq!(alpha_dh(&x, &[]), 3);
        assert_eq!(alpha_dh(&x, &[0, 2, 4]), 0);
    }

    #[test]
    fn solve_examples() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(run(&tree).weight, q(0));
        let c = run(&cycle(5));
        assert_eq!(c.weight, q(1));
        assert!(c.clean());
        let g = house().with_weights(vec![q(1), q(1), q(1), q(1), q(9)]).unwrap();
        let c = run(&g);
        assert_eq!(c.weight, q(1));
        assert!(!c.solution.contains(&4));
    }

    #[test]
    fn special_case_example() {
        // C = {u, v} = {3, 4}; H = path 0-1-2; u-0 and v-2 close a C5
        let g = Graph::from_edges(5, &[(3, 4), (0, 1), (1, 2), (3, 0), (4, 2)]).unwrap();
        let inst = BicliqueDhInstance {
            graph: g.clone(),
            c: Biclique { m1: vec![3], m2: vec![4] },
            x: vec![Q::new(1.into(), 5.into()); 5],
        };
        assert_eq!(inst.alpha(), 3);
        let mut audit = Audit::default();
        let s = solve_dhvd_biclique_dh(&inst, &DhvdOptions::default(), &LpOptions::default(), &mut audit).unwrap();
        assert_eq!(g.weight_of(&s), q(1));
        assert!(dh::is_distance_hereditary(&g.remove(&s).graph));
    }

    #[test]
    fn recursion_on_long_cycle() {
        // a 24-cycle through the edge 0-1 used as C, uniform x = 1/22
        let g = cycle(24);
        let x = vec![Q::new(1.into(), 22.into()); 24];
        let inst = BicliqueDhInstance {
            graph: g.clone(),
            c: Biclique { m1: vec![0], m2: vec![1] },
            x,
        };
        let opts = DhvdOptions {
            exact_below: 0,
            ..Default::default()
        };
        let mut audit = Audit::default();
        let s = solve_dhvd_biclique_dh(&inst, &opts, &LpOptions::default(), &mut audit).unwrap();
        assert!(dh::is_distance_hereditary(&g.remove(&s).graph));
        assert!(audit.violations.is_empty(), "{:?}", audit.violations);
        assert!(audit.counters.get("levels").copied().unwrap_or(0) >= 1);
    }

    #[test]
    fn hole_biclique_small() {
        // a 7-cycle meets the biclique {0} x {1} in an edge
        let g = cycle(7);
        let m = Biclique { m1: vec![0], m2: vec![1] };
        assert_eq!(hole_biclique_violation(&g, &m), None);
    }

    #[test]
    fn validation() {
        let inst = BicliqueDhInstance {
            graph: cycle(5),
            c: Biclique { m1: vec![0], m2: vec![2] },
            x: vec![q(0); 5],
        };
        assert!(inst.validate().is_err());
        let bad = DhvdOptions {
            c: 1,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
