//! Balanced vertex separators and the structure-plus-separator searches that
//! drive the divide-and-conquer solvers.
//!
//! A set `W` is balanced with respect to a reference size `n_ref` when every
//! component of `G - W` has at most `2/3·n_ref` vertices.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chordal;
use crate::dh::{self, Biclique};
use crate::graph::{scale_costs_u128, Graph, VertexSet};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SeparatorOptions {
    /// Graphs with at most this many vertices get an exhaustive search.
    pub exact_threshold: usize,
    /// Vertex pairs tried with max-flow cuts in the heuristic.
    pub flow_samples: usize,
    /// Improvement moves tried per heuristic candidate.
    pub swap_iters: usize,
    pub seed: u64,
}

impl Default for SeparatorOptions {
    fn default() -> Self {
        SeparatorOptions {
            exact_threshold: 14,
            flow_samples: 16,
            swap_iters: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BalancedSeparator {
    pub separator: VertexSet,
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub weight: Q,
}

/// Every component of `g[alive]` has at most `2/3·n_ref` vertices. Single
/// vertices always pass, so a one-vertex graph needs no separator.
pub fn components_balanced(g: &Graph, alive: &FixedBitSet, n_ref: usize) -> bool {
    g.components_within(alive)
        .iter()
        .all(|c| c.len() <= 1 || 3 * c.len() <= 2 * n_ref)
}

pub fn is_balanced(g: &Graph, w: &[usize], n_ref: usize) -> bool {
    let mut alive = g.full_bits();
    for &v in w {
        alive.set(v, false);
    }
    components_balanced(g, &alive, n_ref)
}

/// Packs components into two groups of total size at most `2/3·n_ref` each.
/// Largest first into the smaller group; if that overflows, an item of size
/// at least `n_ref/3` goes alone and otherwise the first group is filled just
/// past `n_ref/3`.
pub fn pack_components(comps: &[VertexSet], n_ref: usize) -> (VertexSet, VertexSet) {
    let mut order: Vec<usize> = (0..comps.len()).collect();
    order.sort_by(|&a, &b| comps[b].len().cmp(&comps[a].len()).then(a.cmp(&b)));
    let fits = |s: usize| 3 * s <= 2 * n_ref;
    let mut groups: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    let mut sizes = [0usize; 2];
    for &i in &order {
        let side = usize::from(sizes[1] < sizes[0]);
        sizes[side] += comps[i].len();
        groups[side].push(i);
    }
    if !(fits(sizes[0]) && fits(sizes[1])) {
        groups = [Vec::new(), Vec::new()];
        if let Some(&big) = order.iter().find(|&&i| 3 * comps[i].len() >= n_ref) {
            groups[0].push(big);
            groups[1] = order.iter().copied().filter(|&i| i != big).collect();
        } else {
            let mut s = 0;
            for &i in &order {
                if 3 * s <= n_ref {
                    s += comps[i].len();
                    groups[0].push(i);
                } else {
                    groups[1].push(i);
                }
            }
        }
    }
    let collect = |g: &[usize]| {
        let mut v: VertexSet = g.iter().flat_map(|&i| comps[i].iter().copied()).collect();
        v.sort_unstable();
        v
    };
    (collect(&groups[0]), collect(&groups[1]))
}

fn finish(g: &Graph, w: VertexSet, n_ref: usize) -> BalancedSeparator {
    let mut alive = g.full_bits();
    for &v in &w {
        alive.set(v, false);
    }
    let comps = g.components_within(&alive);
    let (a1, a2) = pack_components(&comps, n_ref);
    BalancedSeparator {
        weight: g.weight_of(&w),
        separator: w,
        a1,
        a2,
    }
}

fn largest_component(g: &Graph, w: &[usize]) -> usize {
    let mut alive = g.full_bits();
    for &v in w {
        alive.set(v, false);
    }
    g.components_within(&alive).iter().map(Vec::len).max().unwrap_or(0)
}

/// Lighter, then fewer vertices, then a smaller largest component, then
/// lexicographically smaller.
fn better(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    let (wa, wb) = (g.weight_of(a), g.weight_of(b));
    if wa != wb {
        return wa < wb;
    }
    if a.len() != b.len() {
        return a.len() < b.len();
    }
    let (la, lb) = (largest_component(g, a), largest_component(g, b));
    (la, a) < (lb, b)
}

/// Balanced separator of `g` with respect to its own size.
pub fn balanced_vertex_separator(g: &Graph, opts: &SeparatorOptions) -> BalancedSeparator {
    separator_with_reference(g, g.n(), opts)
}

/// Balanced separator of `g` where balance is measured against `n_ref`
/// (which may exceed `g.n()` when `g` is part of a larger graph).
pub fn separator_with_reference(
    g: &Graph,
    n_ref: usize,
    opts: &SeparatorOptions,
) -> BalancedSeparator {
    let w = if is_balanced(g, &[], n_ref) {
        Vec::new()
    } else if g.n() <= opts.exact_threshold {
        exact_separator(g, n_ref)
    } else {
        heuristic_separator(g, n_ref, opts)
    };
    debug_assert!(is_balanced(g, &w, n_ref));
    finish(g, w, n_ref)
}

fn exact_separator(g: &Graph, n_ref: usize) -> VertexSet {
    let n = g.n();
    let mut best: VertexSet = (0..n).collect();
    for mask in 0u32..(1u32 << n) {
        let w: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_balanced(g, &w, n_ref) && better(g, &w, &best) {
            best = w;
        }
    }
    best
}

fn heuristic_separator(g: &Graph, n_ref: usize, opts: &SeparatorOptions) -> VertexSet {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64).wrapping_mul(0x9e37_79b9));
    let mut cands: Vec<VertexSet> = vec![(0..n).collect()];
    // BFS layers and BFS-prefix boundaries
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    starts.truncate(4);
    if n > 0 {
        starts.push(rng.gen_range(0..n));
    }
    for &s in &starts {
        let order = bfs_order(g, s);
        let layer = bfs_layers(g, s);
        for l in 1..=layer.iter().copied().filter(|&d| d != usize::MAX).max().unwrap_or(0) {
            cands.push((0..n).filter(|&v| layer[v] == l).collect());
        }
        for frac in [3usize, 4, 5, 6] {
            let k = n * frac / 9;
            let mut inside = FixedBitSet::with_capacity(n);
            for &v in order.iter().take(k) {
                inside.insert(v);
            }
            let boundary: VertexSet = (0..n)
                .filter(|&v| !inside.contains(v) && g.neighbors(v).iter().any(|&u| inside.contains(u)))
                .collect();
            cands.push(boundary);
        }
    }
    // minimum vertex cuts between sampled nonadjacent pairs
    if let Some((caps, _)) = scale_costs_u128(g.weights()) {
        for _ in 0..opts.flow_samples {
            if n < 2 {
                break;
            }
            let s = rng.gen_range(0..n);
            let t = rng.gen_range(0..n);
            if s == t || g.adjacent(s, t) {
                continue;
            }
            if let Some(cut) = min_vertex_cut(g, &caps, s, t) {
                cands.push(cut);
            }
        }
    }
    let mut pruned: Vec<VertexSet> = Vec::new();
    for mut c in cands {
        c.sort_unstable();
        c.dedup();
        if is_balanced(g, &c, n_ref) {
            prune(g, &mut c, n_ref);
            pruned.push(c);
        }
    }
    pruned.sort_by(|a, b| g.weight_of(a).cmp(&g.weight_of(b)).then((a.len(), a).cmp(&(b.len(), b))));
    pruned.dedup();
    pruned.truncate(3);
    let mut best: Option<VertexSet> = None;
    for c in pruned {
        let c = swap_down(g, c, n_ref, opts.swap_iters, &mut rng);
        if best.as_ref().map_or(true, |b| better(g, &c, b)) {
            best = Some(c);
        }
    }
    best.expect("the full vertex set is balanced")
}

/// Drops vertices, heaviest first, while balance holds.
fn prune(g: &Graph, w: &mut VertexSet, n_ref: usize) {
    let mut order = w.clone();
    order.sort_by(|&a, &b| g.weight(b).cmp(g.weight(a)).then(a.cmp(&b)));
    for v in order {
        let trial: VertexSet = w.iter().copied().filter(|&u| u != v).collect();
        if is_balanced(g, &trial, n_ref) {
            *w = trial;
        }
    }
}

/// Random moves replacing a separator vertex by a no-heavier neighbor,
/// pruning after each accepted move.
fn swap_down(g: &Graph, mut w: VertexSet, n_ref: usize, iters: usize, rng: &mut ChaCha8Rng) -> VertexSet {
    for _ in 0..iters {
        if w.is_empty() {
            break;
        }
        let v = *w.choose(rng).expect("nonempty");
        let nb: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|u| !w.contains(u) && g.weight(*u) <= g.weight(v))
            .collect();
        let Some(&u) = nb.choose(rng) else { continue };
        let mut trial: VertexSet = w.iter().copied().filter(|&x| x != v).collect();
        trial.push(u);
        trial.sort_unstable();
        if is_balanced(g, &trial, n_ref) {
            let before = trial.len();
            prune(g, &mut trial, n_ref);
            if trial.len() < before || !better(g, &w, &trial) {
                w = trial;
            }
        }
    }
    w
}

fn bfs_layers(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n()];
    let mut q = VecDeque::new();
    d[s] = 0;
    q.push_back(s);
    while let Some(v) = q.pop_front() {
        for &u in g.neighbors(v) {
            if d[u] == usize::MAX {
                d[u] = d[v] + 1;
                q.push_back(u);
            }
        }
    }
    d
}

fn bfs_order(g: &Graph, s: usize) -> Vec<usize> {
    let d = bfs_layers(g, s);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (d[v], v));
    order
}

/// Minimum-capacity vertex set separating `s` from `t` (neither deleted).
/// Dinic on the split graph with integer capacities.
pub fn min_vertex_cut(g: &Graph, caps: &[u128], s: usize, t: usize) -> Option<VertexSet> {
    let n = g.n();
    let inf = u128::MAX / 4;
    let mut f = Flow::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { inf } else { caps[v] };
        f.add(2 * v, 2 * v + 1, c);
        for &u in g.neighbors(v) {
            f.add(2 * v + 1, 2 * u, inf);
        }
    }
    let value = f.max_flow(2 * s + 1, 2 * t);
    if value >= inf {
        return None;
    }
    let reach = f.reachable(2 * s + 1);
    Some(
        (0..n)
            .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
            .collect(),
    )
}

struct Flow {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u128>,
}

impl Flow {
    fn new(n: usize) -> Self {
        Flow {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, a: usize, b: usize, c: u128) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut lvl = vec![usize::MAX; self.head.len()];
        let mut q = VecDeque::new();
        lvl[s] = 0;
        q.push_back(s);
        while let Some(v) = q.pop_front() {
            for &e in &self.head[v] {
                let u = self.to[e];
                if self.cap[e] > 0 && lvl[u] == usize::MAX {
                    lvl[u] = lvl[v] + 1;
                    q.push_back(u);
                }
            }
        }
        lvl
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        self.levels(s).iter().map(|&l| l != usize::MAX).collect()
    }

    fn push(&mut self, v: usize, t: usize, f: u128, lvl: &[usize], it: &mut [usize]) -> u128 {
        if v == t {
            return f;
        }
        while it[v] < self.head[v].len() {
            let e = self.head[v][it[v]];
            let u = self.to[e];
            if self.cap[e] > 0 && lvl[u] == lvl[v] + 1 {
                let d = self.push(u, t, f.min(self.cap[e]), lvl, it);
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            it[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u128 {
        let inf = u128::MAX / 4;
        let mut total: u128 = 0;
        loop {
            let lvl = self.levels(s);
            if lvl[t] == usize::MAX {
                return total;
            }
            let mut it = vec![0; self.head.len()];
            loop {
                let f = self.push(s, t, inf, &lvl, &mut it);
                if f == 0 {
                    break;
                }
                total = total.saturating_add(f);
                if total >= inf {
                    return total;
                }
            }
        }
    }
}

/// A structure `M` plus a separator `S` such that `M ∪ S` is balanced.
#[derive(Clone, Debug, PartialEq)]
pub struct StructuredSeparator {
    pub structure: VertexSet,
    pub separator: VertexSet,
}

fn best_structured<I>(g: &Graph, candidates: I, opts: &SeparatorOptions) -> Option<StructuredSeparator>
where
    I: IntoIterator<Item = VertexSet>,
{
    let n = g.n();
    let cands: Vec<VertexSet> = candidates.into_iter().collect();
    for m in &cands {
        if is_balanced(g, m, n) {
            return Some(StructuredSeparator {
                structure: m.clone(),
                separator: Vec::new(),
            });
        }
    }
    let mut best: Option<(Q, StructuredSeparator)> = None;
    for m in cands {
        let rest = g.remove(&m);
        let sep = separator_with_reference(&rest.graph, n, opts);
        let s = rest.map_back(&sep.separator);
        if best.as_ref().map_or(true, |(w, _)| sep.weight < *w) {
            best = Some((
                sep.weight,
                StructuredSeparator {
                    structure: m,
                    separator: s,
                },
            ));
        }
    }
    best.map(|(_, s)| s)
}

/// A maximal clique `M` and a light `S` with `M ∪ S` balanced.
pub fn clique_plus_separator(g: &Graph, opts: &SeparatorOptions) -> StructuredSeparator {
    let cliques = chordal::enumerate_maximal_cliques(g);
    best_structured(g, cliques, opts).unwrap_or(StructuredSeparator {
        structure: Vec::new(),
        separator: Vec::new(),
    })
}

/// A set `M` of at most `k` vertices and a light `S` with `M ∪ S` balanced.
/// All sets of size at most `k` are tried when there are at most `budget` of
/// them; otherwise a degree-biased sample of `budget` sets.
pub fn bounded_set_plus_separator(
    g: &Graph,
    k: usize,
    budget: usize,
    opts: &SeparatorOptions,
) -> StructuredSeparator {
    let cands = bounded_sets(g, k, budget, opts.seed);
    best_structured(g, cands, opts).unwrap_or(StructuredSeparator {
        structure: Vec::new(),
        separator: Vec::new(),
    })
}

/// Candidate sets of size at most `k`, smallest first.
pub fn bounded_sets(g: &Graph, k: usize, budget: usize, seed: u64) -> Vec<VertexSet> {
    let n = g.n();
    let mut count: u128 = 0;
    let mut binom: u128 = 1;
    for i in 0..=k.min(n) {
        if i > 0 {
            binom = binom * (n - i + 1) as u128 / i as u128;
        }
        count += binom;
    }
    if count <= budget as u128 {
        let mut out = Vec::new();
        for size in 0..=k.min(n) {
            let mut cur = Vec::new();
            subsets_of_size(n, size, 0, &mut cur, &mut out);
        }
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut by_deg: Vec<usize> = (0..n).collect();
    by_deg.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut out: Vec<VertexSet> = vec![Vec::new()];
    let mut seen = std::collections::HashSet::new();
    let mut tries = 0;
    while out.len() < budget && tries < 4 * budget {
        tries += 1;
        let size = rng.gen_range(1..=k.min(n).max(1));
        let mut s: VertexSet = Vec::new();
        while s.len() < size {
            // squared bias toward high degree
            let r: f64 = rng.gen();
            let v = by_deg[((r * r) * n as f64) as usize % n];
            if !s.contains(&v) {
                s.push(v);
            }
        }
        s.sort_unstable();
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    out
}

fn subsets_of_size(n: usize, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for v in from..n {
        if n - v < size - cur.len() {
            break;
        }
        cur.push(v);
        subsets_of_size(n, size, v + 1, cur, out);
        cur.pop();
    }
}

/// A maximal biclique (or nothing) and a light `X` with `K ∪ X` balanced.
pub fn biclique_plus_separator(g: &Graph, opts: &SeparatorOptions) -> (Option<Biclique>, VertexSet) {
    let bicliques = dh::enumerate_maximal_bicliques(g);
    let mut cands: Vec<VertexSet> = vec![Vec::new()];
    cands.extend(bicliques.iter().map(Biclique::vertices));
    let best = best_structured(g, cands, opts).expect("empty candidate present");
    let k = if best.structure.is_empty() {
        None
    } else {
        bicliques.into_iter().find(|b| b.vertices() == best.structure)
    };
    (k, best.separator)
}

/// Total weight helper for optional separators.
pub fn weight_or_zero(g: &Graph, s: Option<&[usize]>) -> Q {
    s.map_or_else(Q::zero, |s| g.weight_of(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn separator_examples() {
        let o = SeparatorOptions::default();
        assert_eq!(balanced_vertex_separator(&path(3), &o).separator, vec![1]);
        assert_eq!(balanced_vertex_separator(&complete(4), &o).separator.len(), 2);
        assert!(balanced_vertex_separator(&Graph::new(1), &o).separator.is_empty());
    }

    #[test]
    fn heuristic_is_balanced() {
        let o = SeparatorOptions {
            exact_threshold: 0,
            ..Default::default()
        };
        for n in [5, 20, 41] {
            let s = balanced_vertex_separator(&path(n), &o);
            assert!(is_balanced(&path(n), &s.separator, n));
            assert!(3 * s.a1.len() <= 2 * n && 3 * s.a2.len() <= 2 * n);
        }
        let s = balanced_vertex_separator(&complete(9), &o);
        assert_eq!(s.separator.len(), 3);
    }

    #[test]
    fn flow_cut() {
        let g = path(5);
        let caps = vec![1u128; 5];
        assert_eq!(min_vertex_cut(&g, &caps, 0, 4).unwrap().len(), 1);
        assert!(min_vertex_cut(&complete(3), &caps[..3], 0, 1).is_none());
    }

    #[test]
    fn packing_respects_bound() {
        let comps: Vec<VertexSet> = vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]];
        let (a, b) = pack_components(&comps, 9);
        assert!(3 * a.len() <= 18 && 3 * b.len() <= 18);
        let comps: Vec<VertexSet> = (0..9).map(|i| vec![i]).collect();
        let (a, b) = pack_components(&comps, 9);
        assert_eq!(a.len() + b.len(), 9);
        assert!(3 * a.len() <= 18 && 3 * b.len() <= 18);
    }

    #[test]
    fn structured_examples() {
        let o = SeparatorOptions::default();
        // two triangles sharing vertex 2
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let s = clique_plus_separator(&bowtie, &o);
        assert!(s.structure.contains(&2) && s.separator.is_empty());
        let s = clique_plus_separator(&path(5), &o);
        assert!(s.separator.is_empty());
        assert_eq!(s.structure.len(), 2);

        let c9: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        let c9 = Graph::from_edges(9, &c9).unwrap();
        let s = bounded_set_plus_separator(&c9, 2, 1000, &o);
        assert_eq!(s.structure.len(), 2);
        assert!(s.separator.is_empty());

        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (k, x) = biclique_plus_separator(&star, &o);
        assert!(x.is_empty());
        assert_eq!(k.unwrap().vertices(), vec![0, 1, 2, 3, 4]);

        let mut e: Vec<(usize, usize)> = Vec::new();
        for base in [0, 4] {
            for i in 0..4 {
                for j in i + 1..4 {
                    e.push((base + i, base + j));
                }
            }
        }
        e.push((0, 4));
        let g = Graph::from_edges(8, &e).unwrap();
        let (k, x) = biclique_plus_separator(&g, &o);
        assert!(x.is_empty());
        assert!(k.is_some());
    }
}
