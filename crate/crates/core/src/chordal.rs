//! Chordality with witnesses, clique forests, maximal cliques and holes.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{scale_costs_big, scale_costs_u128, sssp_multi, Cost, Graph, VertexSet};
use crate::rational::{self, Q};

/// Chordless cycle on at least four vertices, in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hole(pub Vec<usize>);

impl Hole {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn sorted_vertices(&self) -> VertexSet {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// Rotation starting at the smallest vertex, oriented towards its smaller neighbor.
    pub fn canonical(&self) -> Hole {
        canonical_cycle(&self.0)
    }

    pub fn map(&self, back: &[usize]) -> Hole {
        Hole(self.0.iter().map(|&v| back[v]).collect())
    }

    /// True iff this is a chordless cycle of length >= 4 in `g`.
    pub fn is_hole_in(&self, g: &Graph) -> bool {
        let k = self.0.len();
        if k < 4 || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if self.0.iter().collect::<HashSet<_>>().len() != k {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.adjacent(self.0[i], self.0[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn canonical_cycle(c: &[usize]) -> Hole {
    let k = c.len();
    if k == 0 {
        return Hole(Vec::new());
    }
    let start = (0..k).min_by_key(|&i| c[i]).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| c[(start + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| c[(start + k - i) % k]).collect();
    Hole(if fwd <= bwd { fwd } else { bwd })
}

#[derive(Clone, Debug)]
pub enum ChordalWitness {
    /// Perfect elimination ordering.
    Chordal(Vec<usize>),
    NotChordal(Hole),
}

impl ChordalWitness {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalWitness::Chordal(_))
    }
}

/// Lexicographic BFS order (first visited first). Ties go to the lowest index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if done[v] {
                continue;
            }
            match best {
                None => best = Some(v),
                Some(b) if labels[v] > labels[b] => best = Some(v),
                _ => {}
            }
        }
        let v = best.unwrap();
        done[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !done[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Checks `peo` as a perfect elimination ordering; on failure returns a vertex
/// with two nonadjacent later neighbors.
fn peo_violation(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        if let Some(&p) = later.iter().min_by_key(|&&u| pos[u]) {
            for &u in &later {
                if u != p && !g.adjacent(u, p) {
                    return Some((v, p, u));
                }
            }
        }
    }
    None
}

/// Hole through `v` using its nonadjacent neighbors `a` and `b`, if any.
fn hole_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Hole> {
    let n = g.n();
    let mut allowed = g.full_bits();
    allowed.set(v, false);
    for &u in g.neighbors(v) {
        allowed.set(u, false);
    }
    allowed.insert(a);
    allowed.insert(b);
    let mut prev = vec![usize::MAX; n];
    let mut seen = FixedBitSet::with_capacity(n);
    seen.insert(a);
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in g.neighbors(x) {
            if allowed.contains(y) && !seen.contains(y) {
                seen.insert(y);
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if !seen.contains(b) {
        return None;
    }
    let mut cyc = vec![v];
    let mut x = b;
    while x != a {
        cyc.push(x);
        x = prev[x];
    }
    cyc.push(a);
    Some(Hole(cyc))
}

/// Any hole of `g`, or `None` when `g` is chordal.
pub fn find_hole(g: &Graph) -> Option<Hole> {
    match is_chordal_with_witness(g) {
        ChordalWitness::Chordal(_) => None,
        ChordalWitness::NotChordal(h) => Some(h),
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    let order = lex_bfs(g);
    let peo: Vec<usize> = order.into_iter().rev().collect();
    peo_violation(g, &peo).is_none()
}

pub fn is_chordal_with_witness(g: &Graph) -> ChordalWitness {
    let order = lex_bfs(g);
    let peo: Vec<usize> = order.into_iter().rev().collect();
    let Some((v, a, b)) = peo_violation(g, &peo) else {
        return ChordalWitness::Chordal(peo);
    };
    if let Some(h) = hole_through(g, v, a, b) {
        return ChordalWitness::NotChordal(h.canonical());
    }
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.adjacent(a, b) {
                    if let Some(h) = hole_through(g, v, a, b) {
                        return ChordalWitness::NotChordal(h.canonical());
                    }
                }
            }
        }
    }
    unreachable!("elimination ordering failed but no hole exists")
}

/// Clique forest: bags are maximal cliques, `edges` index into `bags`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CliqueForest {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl CliqueForest {
    pub fn node_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Node sets of the trees of the forest, each sorted.
    pub fn trees(&self) -> Vec<Vec<usize>> {
        let adj = self.node_adjacency();
        let mut seen = vec![false; self.bags.len()];
        let mut out = Vec::new();
        for s in 0..self.bags.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(a) = stack.pop() {
                comp.push(a);
                for &b in &adj[a] {
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Checks acyclicity, cover, edge and subtree conditions, and that every
    /// bag is a maximal clique of `g`.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let k = self.bags.len();
        let trees = self.trees();
        if self.edges.len() + trees.len() != k {
            return Err("node graph is not a forest".into());
        }
        for (i, bag) in self.bags.iter().enumerate() {
            if bag.iter().any(|&v| v >= g.n()) {
                return Err(format!("bag {i} has unknown vertex"));
            }
            if !g.is_clique(bag) {
                return Err(format!("bag {i} is not a clique"));
            }
            let bits = g.bits_of(bag);
            let extendable = (0..g.n())
                .filter(|v| !bits.contains(*v))
                .any(|v| bag.iter().all(|&u| g.adjacent(u, v)));
            if extendable || bag.is_empty() {
                return Err(format!("bag {i} is not a maximal clique"));
            }
        }
        let mut covered = FixedBitSet::with_capacity(g.n());
        for bag in &self.bags {
            for &v in bag {
                covered.insert(v);
            }
        }
        if covered.count_ones(..) != g.n() {
            return Err("bags do not cover V".into());
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return Err(format!("edge {u}-{v} not in any bag"));
            }
        }
        let adj = self.node_adjacency();
        for v in 0..g.n() {
            let nodes: Vec<usize> = (0..k).filter(|&i| self.bags[i].contains(&v)).collect();
            let mut seen = vec![false; k];
            seen[nodes[0]] = true;
            let mut stack = vec![nodes[0]];
            let mut count = 1;
            while let Some(a) = stack.pop() {
                for &b in &adj[a] {
                    if !seen[b] && self.bags[b].contains(&v) {
                        seen[b] = true;
                        count += 1;
                        stack.push(b);
                    }
                }
            }
            if count != nodes.len() {
                return Err(format!("bags containing {v} are not connected"));
            }
        }
        Ok(())
    }
}

/// Clique forest via PEO cliques and a maximum-weight spanning forest of the
/// clique intersection graph.
pub fn build_clique_forest(g: &Graph) -> Result<CliqueForest> {
    let peo = match is_chordal_with_witness(g) {
        ChordalWitness::Chordal(p) => p,
        ChordalWitness::NotChordal(h) => return Err(Error::NotChordal(h)),
    };
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut cands: Vec<FixedBitSet> = Vec::with_capacity(n);
    for &v in &peo {
        let mut b = FixedBitSet::with_capacity(n);
        b.insert(v);
        for &u in g.neighbors(v) {
            if pos[u] > pos[v] {
                b.insert(u);
            }
        }
        cands.push(b);
    }
    let mut bags: Vec<VertexSet> = Vec::new();
    for (i, c) in cands.iter().enumerate() {
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            bags.push(c.ones().collect());
        }
    }
    bags.sort();
    let k = bags.len();
    let bits: Vec<FixedBitSet> = bags.iter().map(|b| g.bits_of(b)).collect();
    let mut cand_edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let w = bits[i].intersection(&bits[j]).count();
            if w > 0 {
                cand_edges.push((std::cmp::Reverse(w), i, j));
            }
        }
    }
    cand_edges.sort();
    let mut uf: Vec<usize> = (0..k).collect();
    fn find(uf: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut y = x;
        while uf[y] != r {
            let nx = uf[y];
            uf[y] = r;
            y = nx;
        }
        r
    }
    let mut edges = Vec::new();
    for (_, i, j) in cand_edges {
        let (a, b) = (find(&mut uf, i), find(&mut uf, j));
        if a != b {
            uf[a] = b;
            edges.push((i, j));
        }
    }
    Ok(CliqueForest { bags, edges })
}

/// All maximal cliques, each sorted, list sorted. Bron-Kerbosch with pivoting
/// over a degeneracy ordering.
pub fn enumerate_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let order = degeneracy_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let mut p = FixedBitSet::with_capacity(n);
        let mut x = FixedBitSet::with_capacity(n);
        for &u in g.neighbors(v) {
            if pos[u] > pos[v] {
                p.insert(u);
            } else {
                x.insert(u);
            }
        }
        let mut r = vec![v];
        bron_kerbosch(g, &mut r, p, x, &mut out);
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (p.intersection(g.adj_bits(u)).count(), std::cmp::Reverse(u)))
        .unwrap();
    let mut cand = p.clone();
    cand.difference_with(g.adj_bits(pivot));
    for v in cand.ones().collect::<Vec<_>>() {
        let nv = g.adj_bits(v);
        let mut p2 = p.clone();
        p2.intersect_with(nv);
        let mut x2 = x.clone();
        x2.intersect_with(nv);
        r.push(v);
        bron_kerbosch(g, r, p2, x2, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// Smallest-last ordering (ties by index).
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

/// All holes with at most `max_len` vertices, canonical, sorted.
pub fn enumerate_short_holes(g: &Graph, max_len: usize) -> Vec<Hole> {
    let mut out = BTreeSet::new();
    let n = g.n();
    if max_len < 4 {
        return Vec::new();
    }
    for s in 0..n {
        let mut path = vec![s];
        let mut blocked = vec![0u32; n];
        // blocked[u] counts interior path vertices adjacent to u
        grow_holes(g, s, max_len, &mut path, &mut blocked, &mut out);
    }
    out.into_iter().collect()
}

fn grow_holes(
    g: &Graph,
    s: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    blocked: &mut Vec<u32>,
    out: &mut BTreeSet<Hole>,
) {
    let last = *path.last().unwrap();
    let k = path.len();
    for &u in g.neighbors(last) {
        if u <= s || path.contains(&u) {
            continue;
        }
        if k == 1 {
            path.push(u);
            grow_holes(g, s, max_len, path, blocked, out);
            path.pop();
            continue;
        }
        if blocked[u] > 0 {
            continue;
        }
        // u may touch s only when it closes the cycle
        if g.adjacent(u, s) {
            if k >= 3 && path[1] < u {
                let mut c = path.clone();
                c.push(u);
                out.insert(canonical_cycle(&c));
            }
            continue;
        }
        if k + 1 >= max_len {
            continue;
        }
        // everything adjacent to `last` becomes blocked once u is appended
        for &w in g.neighbors(last) {
            blocked[w] += 1;
        }
        path.push(u);
        grow_holes(g, s, max_len, path, blocked, out);
        path.pop();
        for &w in g.neighbors(last) {
            blocked[w] -= 1;
        }
    }
}

/// Result of a hole search. `truncated` means the node budget ran out and the
/// holes are the best found so far.
#[derive(Clone, Debug, Default)]
pub struct HoleSearch {
    pub holes: Vec<(Hole, Q)>,
    pub truncated: bool,
}

/// A hole of length >= `min_len` minimizing `x(V(Q))`, with its value.
pub fn min_weight_hole(g: &Graph, x: &[Q], min_len: usize) -> Option<(Hole, Q)> {
    lightest_holes(g, x, min_len, None, 1, usize::MAX)
        .holes
        .into_iter()
        .next()
}

/// Up to `limit` distinct holes of length >= `min_len` with the smallest
/// x-values, restricted to values strictly below `below` when given. The
/// first entry is always a global minimizer unless the budget (counted in
/// shortest-path runs) was exhausted.
pub fn lightest_holes(
    g: &Graph,
    x: &[Q],
    min_len: usize,
    below: Option<&Q>,
    limit: usize,
    budget: usize,
) -> HoleSearch {
    assert!(min_len >= 4, "holes have at least four vertices");
    assert_eq!(x.len(), g.n());
    match scale_costs_u128(x) {
        Some((c, den)) => hole_kernel(g, x, &c, &den, min_len, below, limit, budget),
        None => {
            let (c, den) = scale_costs_big(x);
            hole_kernel(g, x, &c, &den, min_len, below, limit, budget)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn hole_kernel<C: Cost>(
    g: &Graph,
    x: &[Q],
    cost: &[C],
    den: &BigInt,
    min_len: usize,
    below: Option<&Q>,
    limit: usize,
    budget: usize,
) -> HoleSearch {
    // Every hole of length >= min_len contains an induced path of
    // min_len - 2 vertices (the spine) whose two outer neighbours on the hole
    // see exactly one spine end each; the rest of the hole avoids N[spine].
    let n = g.n();
    let threshold: Option<C> = below.map(|b| {
        let scaled = b * Q::from_integer(den.clone());
        C::from_big_saturating(&rational::ceil_int(&scaled).max(BigInt::from(0)))
    });
    let mut spines = Vec::new();
    for v in 0..n {
        let mut p = vec![v];
        induced_paths(g, min_len - 2, &mut p, &mut spines);
    }
    spines.retain(|s| s[0] < s[s.len() - 1]);
    let mut found: Vec<(C, Hole)> = Vec::new();
    let mut seen: HashSet<Hole> = HashSet::new();
    let keep = limit.max(1);
    let mut runs = 0usize;
    let mut truncated = false;
    let mut offer = |found: &mut Vec<(C, Hole)>, val: C, cyc: Vec<usize>| {
        let hole = canonical_cycle(&cyc);
        if seen.insert(hole.clone()) {
            let at = found.partition_point(|(c, h)| (c, h) < (&val, &hole));
            found.insert(at, (val, hole));
            found.truncate(keep);
        }
    };
    for spine in &spines {
        let first = spine[0];
        let last = spine[spine.len() - 1];
        let mut region = FixedBitSet::with_capacity(n);
        region.insert_range(..);
        for &s in spine {
            region.set(s, false);
            for &u in g.neighbors(s) {
                region.set(u, false);
            }
        }
        let only = |end: usize| -> Vec<usize> {
            g.neighbors(end)
                .iter()
                .copied()
                .filter(|&p| {
                    !spine.contains(&p) && spine.iter().all(|&s| s == end || !g.adjacent(p, s))
                })
                .collect()
        };
        let starts = only(first);
        let ends = only(last);
        if starts.is_empty() || ends.is_empty() {
            continue;
        }
        let mut spine_cost = C::zero();
        for &s in spine {
            spine_cost = spine_cost + &cost[s];
        }
        let cap = |found: &Vec<(C, Hole)>| found.len() >= keep;
        for &pk in &ends {
            for &p1 in starts.iter().filter(|&&p1| g.adjacent(p1, pk)) {
                let val = spine_cost.clone() + &cost[p1] + &cost[pk];
                if threshold.as_ref().is_some_and(|t| val >= *t)
                    || (cap(&found) && val >= found[found.len() - 1].0)
                {
                    continue;
                }
                let mut cyc = spine.clone();
                cyc.push(pk);
                cyc.push(p1);
                offer(&mut found, val, cyc);
            }
        }
        if runs >= budget {
            truncated = true;
            break;
        }
        runs += 1;
        let sp = sssp_multi(g, cost, &starts, Some(&region));
        for &pk in &ends {
            let mut best: Option<(C, usize)> = None;
            for &z in g.neighbors(pk) {
                if !region.contains(z) {
                    continue;
                }
                if let Some(d) = &sp.dist[z] {
                    if best.as_ref().map_or(true, |(b, _)| d < b) {
                        best = Some((d.clone(), z));
                    }
                }
            }
            let Some((d, z)) = best else { continue };
            let val = spine_cost.clone() + &d + &cost[pk];
            if threshold.as_ref().is_some_and(|t| val >= *t)
                || (cap(&found) && val >= found[found.len() - 1].0)
            {
                continue;
            }
            let mut path = sp.path(z);
            path.push(pk);
            let path = shortcut(g, &path);
            let mut cyc = spine.clone();
            cyc.extend(path.iter().rev());
            let mut exact = C::zero();
            for &v in &cyc {
                exact = exact + &cost[v];
            }
            offer(&mut found, exact, cyc);
        }
    }
    let holes = found
        .into_iter()
        .map(|(_, h)| {
            let v = rational::sum(h.0.iter().map(|&u| &x[u]));
            (h, v)
        })
        .collect();
    HoleSearch { holes, truncated }
}

fn induced_paths(g: &Graph, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if path.len() == len {
        out.push(path.clone());
        return;
    }
    let last = *path.last().unwrap();
    for &u in g.neighbors(last) {
        if path.contains(&u) {
            continue;
        }
        if path[..path.len() - 1].iter().any(|&p| g.adjacent(p, u)) {
            continue;
        }
        path.push(u);
        induced_paths(g, len, path, out);
        path.pop();
    }
}

/// Shortcuts chords of a path so it becomes induced; keeps both endpoints.
pub(crate) fn shortcut(g: &Graph, path: &[usize]) -> Vec<usize> {
    let mut out = vec![path[0]];
    let mut i = 0;
    while i + 1 < path.len() {
        let cur = path[i];
        let mut j = path.len() - 1;
        while j > i + 1 && !g.adjacent(cur, path[j]) {
            j -= 1;
        }
        out.push(path[j]);
        i = j;
    }
    out
}

/// Maximum independent set size of a chordal graph, greedy along a PEO.
pub fn chordal_alpha(g: &Graph) -> Result<usize> {
    let peo = match is_chordal_with_witness(g) {
        ChordalWitness::Chordal(p) => p,
        ChordalWitness::NotChordal(h) => return Err(Error::NotChordal(h)),
    };
    let mut taken = FixedBitSet::with_capacity(g.n());
    let mut blocked = FixedBitSet::with_capacity(g.n());
    for v in peo {
        if !blocked.contains(v) {
            taken.insert(v);
            blocked.insert(v);
            for &u in g.neighbors(v) {
                blocked.insert(u);
            }
        }
    }
    Ok(taken.count_ones(..))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn k(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn c6_chord() -> Graph {
        let mut g = cycle(6);
        g.add_edge(0, 3).unwrap();
        g
    }

    #[test]
    fn chordality_examples() {
        match is_chordal_with_witness(&cycle(4)) {
            ChordalWitness::NotChordal(h) => assert_eq!(h.len(), 4),
            _ => panic!(),
        }
        assert!(is_chordal_with_witness(&k(4)).is_chordal());
        match is_chordal_with_witness(&c6_chord()) {
            ChordalWitness::NotChordal(h) => {
                assert_eq!(h.len(), 4);
                assert!(h.is_hole_in(&c6_chord()));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn clique_forest_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let f = build_clique_forest(&p3).unwrap();
        assert_eq!(f.bags, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(f.edges.len(), 1);
        f.verify(&p3).unwrap();

        let f = build_clique_forest(&k(3)).unwrap();
        assert_eq!(f.bags, vec![vec![0, 1, 2]]);

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let f = build_clique_forest(&two).unwrap();
        assert_eq!(f.bags.len(), 2);
        assert!(f.edges.is_empty());
        assert!(matches!(build_clique_forest(&cycle(5)), Err(Error::NotChordal(_))));
    }

    #[test]
    fn maximal_clique_examples() {
        assert_eq!(enumerate_maximal_cliques(&cycle(5)).len(), 5);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            enumerate_maximal_cliques(&diamond),
            vec![vec![0, 1, 2], vec![1, 2, 3]]
        );
        assert_eq!(enumerate_maximal_cliques(&k(4)), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn short_hole_examples() {
        assert_eq!(enumerate_short_holes(&cycle(4), 4).len(), 1);
        assert!(enumerate_short_holes(&k(5), 10).is_empty());
        let h = enumerate_short_holes(&c6_chord(), 4);
        assert_eq!(h, vec![Hole(vec![0, 1, 2, 3]), Hole(vec![0, 3, 4, 5])]);
        assert_eq!(enumerate_short_holes(&c6_chord(), 6).len(), 2);
        assert_eq!(enumerate_short_holes(&cycle(7), 6).len(), 0);
        assert_eq!(enumerate_short_holes(&cycle(7), 7).len(), 1);
    }

    #[test]
    fn min_hole_examples() {
        let x = vec![frac(1, 5); 4];
        let (h, v) = min_weight_hole(&cycle(4), &x, 4).unwrap();
        assert_eq!(h.len(), 4);
        assert_eq!(v, frac(4, 5));
        assert!(min_weight_hole(&k(4), &vec![q(1); 4], 4).is_none());

        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        let mut x = vec![frac(1, 10); 4];
        x.extend(vec![frac(3, 10); 4]);
        let (h, v) = min_weight_hole(&g, &x, 4).unwrap();
        assert_eq!(h, Hole(vec![0, 1, 2, 3]));
        assert_eq!(v, frac(2, 5));
    }

    #[test]
    fn long_holes_only() {
        let x = vec![q(1); 6];
        assert!(min_weight_hole(&c6_chord(), &x, 5).is_none());
        let (h, _) = min_weight_hole(&cycle(6), &x, 5).unwrap();
        assert_eq!(h.len(), 6);
    }

    #[test]
    fn alpha_of_chordal() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(chordal_alpha(&p5).unwrap(), 3);
        assert_eq!(chordal_alpha(&k(4)).unwrap(), 1);
    }
}
