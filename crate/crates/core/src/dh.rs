//! Distance-hereditary graphs: recognition by pruning, obstructions,
//! maximal bicliques and rank-width-1 decompositions.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::chordal;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DhKind {
    House,
    Gem,
    Domino,
    LongHole,
}

/// A forbidden induced subgraph. For the three fixed patterns, `vertices[i]`
/// plays the role of pattern vertex `i`; for holes the order is cyclic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DhObstruction {
    pub kind: DhKind,
    pub vertices: Vec<usize>,
}

const HOUSE: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)];
const GEM: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)];
const DOMINO: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)];

fn pattern(kind: DhKind) -> (usize, &'static [(usize, usize)]) {
    match kind {
        DhKind::House => (5, HOUSE),
        DhKind::Gem => (5, GEM),
        DhKind::Domino => (6, DOMINO),
        DhKind::LongHole => (0, &[]),
    }
}

impl DhObstruction {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn sorted_vertices(&self) -> VertexSet {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    pub fn map(&self, back: &[usize]) -> DhObstruction {
        DhObstruction {
            kind: self.kind,
            vertices: self.vertices.iter().map(|&v| back[v]).collect(),
        }
    }

    /// True iff the listed vertices induce the tagged pattern in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        match self.kind {
            DhKind::LongHole => {
                self.vertices.len() >= 5 && chordal::Hole(self.vertices.clone()).is_hole_in(g)
            }
            k => {
                let (size, edges) = pattern(k);
                if self.vertices.len() != size {
                    return false;
                }
                let distinct: BTreeSet<_> = self.vertices.iter().collect();
                if distinct.len() != size {
                    return false;
                }
                for i in 0..size {
                    for j in i + 1..size {
                        let want = edges.contains(&(i, j)) || edges.contains(&(j, i));
                        if g.adjacent(self.vertices[i], self.vertices[j]) != want {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

/// Identifies a 5- or 6-vertex set as a house, gem or domino, returning the
/// vertices ordered to match the pattern.
pub fn identify_pattern(g: &Graph, set: &[usize]) -> Option<DhObstruction> {
    let kinds: &[DhKind] = match set.len() {
        5 => &[DhKind::House, DhKind::Gem],
        6 => &[DhKind::Domino],
        _ => return None,
    };
    let m = set.len();
    let edge_count = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .filter(|&(i, j)| g.adjacent(set[i], set[j]))
        .count();
    for &kind in kinds {
        let (_, edges) = pattern(kind);
        if edges.len() != edge_count {
            continue;
        }
        let mut perm: Vec<usize> = set.to_vec();
        perm.sort_unstable();
        if let Some(p) = find_embedding(g, &mut perm, 0, edges) {
            return Some(DhObstruction { kind, vertices: p });
        }
    }
    None
}

fn find_embedding(
    g: &Graph,
    perm: &mut Vec<usize>,
    k: usize,
    edges: &[(usize, usize)],
) -> Option<Vec<usize>> {
    // same edge count, so preserving pattern edges is enough
    if k == perm.len() {
        return Some(perm.clone());
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        let ok = edges
            .iter()
            .filter(|&&(a, b)| a.max(b) == k)
            .all(|&(a, b)| g.adjacent(perm[a], perm[b]));
        if ok {
            if let Some(p) = find_embedding(g, perm, k + 1, edges) {
                perm.swap(k, i);
                return Some(p);
            }
        }
        perm.swap(k, i);
    }
    None
}

/// All DH-obstructions on at most `max_size` vertices: houses, gems, dominoes
/// and holes of length 5..=max_size. Sorted by kind, then vertex set.
pub fn enumerate_small_obstructions(g: &Graph, max_size: usize) -> Vec<DhObstruction> {
    let mut out: BTreeSet<(DhKind, VertexSet, Vec<usize>)> = BTreeSet::new();
    let mut push = |o: DhObstruction| {
        out.insert((o.kind, o.sorted_vertices(), o.vertices));
    };
    if max_size < 5 {
        return Vec::new();
    }
    for h in chordal::enumerate_short_holes(g, max_size) {
        if h.len() >= 5 {
            push(DhObstruction {
                kind: DhKind::LongHole,
                vertices: h.0,
            });
        }
    }
    let c4s = chordal::enumerate_short_holes(g, 4);
    // houses: a C4 plus a roof on one of its edges
    for c in &c4s {
        let v = &c.0;
        for i in 0..4 {
            let (a, b) = (v[i], v[(i + 1) % 4]);
            let (c2, d) = (v[(i + 2) % 4], v[(i + 3) % 4]);
            for &e in g.neighbors(a) {
                if g.adjacent(e, b) && !g.adjacent(e, c2) && !g.adjacent(e, d) {
                    push(DhObstruction {
                        kind: DhKind::House,
                        vertices: vec![a, b, c2, d, e],
                    });
                }
            }
        }
    }
    // gems: an induced P4 inside some neighborhood
    for e in 0..g.n() {
        let nb = g.neighbors(e).to_vec();
        if nb.len() < 4 {
            continue;
        }
        let sub = g.induced_subgraph(&nb).expect("in range");
        for p in induced_p4s(&sub.graph) {
            let mut vs: Vec<usize> = p.iter().map(|&i| sub.back[i]).collect();
            vs.push(e);
            push(DhObstruction {
                kind: DhKind::Gem,
                vertices: vs,
            });
        }
    }
    // dominoes: two C4s sharing an edge
    if max_size >= 6 {
        for (i, c) in c4s.iter().enumerate() {
            for d in &c4s[i + 1..] {
                let shared: Vec<usize> = c.0.iter().copied().filter(|v| d.0.contains(v)).collect();
                if shared.len() != 2 {
                    continue;
                }
                let mut set: Vec<usize> = c.0.iter().chain(d.0.iter()).copied().collect();
                set.sort_unstable();
                set.dedup();
                if set.len() == 6 {
                    if let Some(o) = identify_pattern(g, &set) {
                        push(o);
                    }
                }
            }
        }
    }
    out.into_iter()
        .map(|(kind, _, vertices)| DhObstruction { kind, vertices })
        .collect()
}

/// Induced paths on four vertices, each reported once (first < last).
pub fn induced_p4s(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            for &a in g.neighbors(b) {
                if a == c || g.adjacent(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d == b || d == a || g.adjacent(d, b) || g.adjacent(d, a) {
                        continue;
                    }
                    if a < d {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn has_induced_p4(g: &Graph, set: &[usize]) -> bool {
    let sub = g.induced_subgraph(set).expect("in range");
    !induced_p4s(&sub.graph).is_empty()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PruneKind {
    Pendant,
    TrueTwin,
    FalseTwin,
}

/// `v` was removed as a pendant or twin of `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prune {
    pub v: usize,
    pub u: usize,
    pub kind: PruneKind,
}

#[derive(Clone, Debug)]
pub enum DhWitness {
    /// Pruning sequence; `roots` are the survivors, one per component.
    Dh { prunings: Vec<Prune>, roots: Vec<usize> },
    NotDh(DhObstruction),
}

impl DhWitness {
    pub fn is_dh(&self) -> bool {
        matches!(self, DhWitness::Dh { .. })
    }
}

fn prune(g: &Graph) -> (Vec<Prune>, FixedBitSet) {
    let n = g.n();
    let mut alive = g.full_bits();
    let mut nb: Vec<FixedBitSet> = (0..n).map(|v| g.adj_bits(v).clone()).collect();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut seq = Vec::new();
    loop {
        let mut step: Option<Prune> = None;
        for v in alive.ones() {
            if deg[v] == 1 {
                let u = nb[v].ones().next().unwrap();
                // two-vertex component: keep the smaller index
                if deg[u] == 1 && u > v {
                    continue;
                }
                step = Some(Prune {
                    v,
                    u,
                    kind: PruneKind::Pendant,
                });
                break;
            }
        }
        if step.is_none() {
            'twins: for u in alive.ones() {
                if deg[u] == 0 {
                    continue;
                }
                for v in alive.ones().filter(|&v| v > u && deg[v] == deg[u]) {
                    let adj = nb[u].contains(v);
                    let mut a = nb[u].clone();
                    a.set(v, false);
                    let mut b = nb[v].clone();
                    b.set(u, false);
                    if a == b {
                        step = Some(Prune {
                            v,
                            u,
                            kind: if adj {
                                PruneKind::TrueTwin
                            } else {
                                PruneKind::FalseTwin
                            },
                        });
                        break 'twins;
                    }
                }
            }
        }
        let Some(p) = step else { break };
        alive.set(p.v, false);
        for w in nb[p.v].ones().collect::<Vec<_>>() {
            nb[w].set(p.v, false);
            deg[w] -= 1;
        }
        seq.push(p);
    }
    (seq, alive)
}

pub fn is_distance_hereditary(g: &Graph) -> bool {
    let (_, alive) = prune(g);
    alive.ones().all(|v| {
        !g.neighbors(v).iter().any(|&u| alive.contains(u))
    })
}

pub fn is_distance_hereditary_with_witness(g: &Graph) -> DhWitness {
    let (prunings, alive) = prune(g);
    let stuck: Vec<usize> = alive
        .ones()
        .filter(|&v| g.neighbors(v).iter().any(|&u| alive.contains(u)))
        .collect();
    if stuck.is_empty() {
        return DhWitness::Dh {
            prunings,
            roots: alive.ones().collect(),
        };
    }
    let sub = g.induced_subgraph(&stuck).expect("in range");
    let obs = find_obstruction(&sub.graph).expect("a graph without pendants or twins is not DH");
    DhWitness::NotDh(obs.map(&sub.back))
}

/// Some DH-obstruction of `g`, preferring small patterns, or `None` if DH.
pub fn find_obstruction(g: &Graph) -> Option<DhObstruction> {
    if let Some(o) = enumerate_small_obstructions(g, 6).into_iter().next() {
        return Some(o);
    }
    let ones = vec![Q::from_integer(1.into()); g.n()];
    chordal::min_weight_hole(g, &ones, 5).map(|(h, _)| DhObstruction {
        kind: DhKind::LongHole,
        vertices: h.0,
    })
}

/// Biclique with disjoint nonempty parts; parts need not be independent.
/// Canonical form has `m1 < m2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Biclique {
    pub m1: VertexSet,
    pub m2: VertexSet,
}

impl Biclique {
    pub fn vertices(&self) -> VertexSet {
        let mut v: Vec<usize> = self.m1.iter().chain(self.m2.iter()).copied().collect();
        v.sort_unstable();
        v
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        !self.m1.is_empty()
            && !self.m2.is_empty()
            && self.m1.iter().all(|a| !self.m2.contains(a))
            && self
                .m1
                .iter()
                .all(|&a| self.m2.iter().all(|&b| g.adjacent(a, b)))
    }
}

fn common_neighbors(g: &Graph, set: &FixedBitSet) -> FixedBitSet {
    let mut cn = g.full_bits();
    for v in set.ones() {
        cn.intersect_with(g.adj_bits(v));
    }
    cn
}

/// All maximal bicliques, canonical and sorted. Close-by-one enumeration of
/// the fixed points of the common-neighborhood closure.
pub fn enumerate_maximal_bicliques(g: &Graph) -> Vec<Biclique> {
    let n = g.n();
    let mut out = BTreeSet::new();
    if n < 2 {
        return Vec::new();
    }
    let all = g.full_bits();
    let b0 = common_neighbors(g, &all);
    let a0 = common_neighbors(g, &b0);
    cbo(g, a0, b0, 0, &mut out);
    out.into_iter().collect()
}

fn cbo(g: &Graph, a: FixedBitSet, b: FixedBitSet, y: usize, out: &mut BTreeSet<Biclique>) {
    let n = g.n();
    if !a.is_clear() && !b.is_clear() {
        let m1: VertexSet = a.ones().collect();
        let m2: VertexSet = b.ones().collect();
        let (m1, m2) = if m1 <= m2 { (m1, m2) } else { (m2, m1) };
        out.insert(Biclique { m1, m2 });
    }
    for j in y..n {
        if b.contains(j) {
            continue;
        }
        let mut c = a.clone();
        c.intersect_with(g.adj_bits(j));
        let d = common_neighbors(g, &c);
        let canonical = (0..j).all(|i| d.contains(i) == b.contains(i));
        if canonical && d.contains(j) {
            cbo(g, c, d, j + 1, out);
        }
    }
}

/// Subcubic tree whose nodes `0..n` are the leaves for vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rw1Decomposition {
    pub leaves: usize,
    pub adj: Vec<Vec<usize>>,
}

impl Rw1Decomposition {
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for (a, l) in self.adj.iter().enumerate() {
            for &b in l {
                if a < b {
                    e.push((a, b));
                }
            }
        }
        e
    }

    /// Leaves on the `b` side when edge `(a, b)` is removed.
    pub fn side(&self, a: usize, b: usize) -> VertexSet {
        let mut seen = vec![false; self.adj.len()];
        seen[a] = true;
        seen[b] = true;
        let mut stack = vec![b];
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            if x < self.leaves {
                out.push(x);
            }
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Checks tree shape and that every edge cut has rank at most one.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        if self.leaves != n {
            return Err("leaf count differs from vertex count".into());
        }
        let nodes = self.adj.len();
        let edges = self.tree_edges();
        if n == 0 {
            return if nodes == 0 { Ok(()) } else { Err("nodes without vertices".into()) };
        }
        if edges.len() + 1 != nodes {
            return Err("not a tree".into());
        }
        let mut seen = vec![false; nodes];
        seen[0] = true;
        let mut stack = vec![0];
        let mut cnt = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    cnt += 1;
                    stack.push(y);
                }
            }
        }
        if cnt != nodes {
            return Err("tree is disconnected".into());
        }
        for x in 0..nodes {
            let d = self.adj[x].len();
            if x < n && n > 1 && d != 1 {
                return Err(format!("leaf {x} has degree {d}"));
            }
            if x >= n && d != 3 {
                return Err(format!("inner node {x} has degree {d}"));
            }
        }
        for (a, b) in edges {
            let y = self.side(a, b);
            if !cut_rank_le_one(g, &y) {
                return Err(format!("cut at tree edge {a}-{b} has rank > 1"));
            }
        }
        Ok(())
    }
}

/// Cut `(V - y, y)` has GF(2) rank <= 1: all nonempty cross rows coincide.
pub fn cut_rank_le_one(g: &Graph, y: &[usize]) -> bool {
    let ybits = g.bits_of(y);
    let mut row: Option<FixedBitSet> = None;
    for x in (0..g.n()).filter(|v| !ybits.contains(*v)) {
        let mut r = g.adj_bits(x).clone();
        r.intersect_with(&ybits);
        if r.is_clear() {
            continue;
        }
        match &row {
            None => row = Some(r),
            Some(p) if *p != r => return false,
            _ => {}
        }
    }
    true
}

/// Rank-width-1 decomposition replayed from the pruning sequence.
pub fn rankwidth1_decomposition(g: &Graph) -> Result<Rw1Decomposition> {
    let (prunings, roots) = match is_distance_hereditary_with_witness(g) {
        DhWitness::Dh { prunings, roots } => (prunings, roots),
        DhWitness::NotDh(o) => return Err(Error::NotDistanceHereditary(o)),
    };
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    fn remove(adj: &mut [Vec<usize>], a: usize, b: usize) {
        adj[a].retain(|&x| x != b);
        adj[b].retain(|&x| x != a);
    }
    fn link(adj: &mut [Vec<usize>], a: usize, b: usize) {
        adj[a].push(b);
        adj[b].push(a);
    }
    for p in prunings.iter().rev() {
        if adj[p.u].is_empty() {
            link(&mut adj, p.u, p.v);
        } else {
            let q = adj[p.u][0];
            remove(&mut adj, p.u, q);
            let t = adj.len();
            adj.push(Vec::new());
            link(&mut adj, p.u, t);
            link(&mut adj, t, q);
            link(&mut adj, t, p.v);
        }
    }
    // join the component trees
    let mut joined: Option<usize> = None;
    for &r in &roots {
        let Some(j) = joined else {
            joined = Some(r);
            continue;
        };
        let attach = |adj: &mut Vec<Vec<usize>>, x: usize| -> usize {
            if adj[x].is_empty() {
                return x;
            }
            let y = adj[x][0];
            remove(adj, x, y);
            let t = adj.len();
            adj.push(Vec::new());
            link(adj, x, t);
            link(adj, t, y);
            t
        };
        let a = attach(&mut adj, j);
        let b = attach(&mut adj, r);
        link(&mut adj, a, b);
        joined = Some(j);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    Ok(Rw1Decomposition { leaves: n, adj })
}

/// Balanced tree-edge cut of a rank-width-1 decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct Rw1Cut {
    pub edge: (usize, usize),
    pub m1: VertexSet,
    pub m2: VertexSet,
    pub side1: VertexSet,
    pub side2: VertexSet,
}

/// Tree edge minimizing the heavier side, by leaf weight (unit when `None`).
pub fn balancing_rw1_cut(
    g: &Graph,
    dec: &Rw1Decomposition,
    weights: Option<&[usize]>,
) -> Result<Rw1Cut> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Input("balancing cut needs at least two vertices".into()));
    }
    let w = |v: usize| weights.map_or(1, |ws| ws[v]);
    let total: usize = (0..n).map(w).sum();
    let mut best: Option<(usize, (usize, usize), VertexSet)> = None;
    for (a, b) in dec.tree_edges() {
        let y = dec.side(a, b);
        let wy: usize = y.iter().map(|&v| w(v)).sum();
        let heavy = wy.max(total - wy);
        if best.as_ref().map_or(true, |(h, _, _)| heavy < *h) {
            best = Some((heavy, (a, b), y));
        }
    }
    let (_, edge, side2) = best.expect("a tree on >= 2 leaves has an edge");
    let s2 = g.bits_of(&side2);
    let side1: VertexSet = (0..n).filter(|v| !s2.contains(*v)).collect();
    let m1: VertexSet = side1
        .iter()
        .copied()
        .filter(|&x| g.neighbors(x).iter().any(|&y| s2.contains(y)))
        .collect();
    let m2: VertexSet = side2
        .iter()
        .copied()
        .filter(|&y| g.neighbors(y).iter().any(|&x| !s2.contains(x)))
        .collect();
    Ok(Rw1Cut {
        edge,
        m1,
        m2,
        side1,
        side2,
    })
}

/// Brute-force DH test over all vertex subsets. Test oracle, `n <= 12`.
pub fn is_dh_brute(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 12);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 5 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if identify_pattern(g, &set).is_some() {
            return false;
        }
        let sub = g.induced_subgraph(&set).unwrap().graph;
        if sub.m() == k && (0..k).all(|v| sub.degree(v) == 2) && sub.is_connected() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn house() -> Graph {
        g(5, HOUSE)
    }

    fn gem() -> Graph {
        g(5, GEM)
    }

    #[test]
    fn recognition_examples() {
        assert!(is_distance_hereditary_with_witness(&g(4, &[(0, 1), (1, 2), (2, 3)])).is_dh());
        match is_distance_hereditary_with_witness(&cycle(5)) {
            DhWitness::NotDh(o) => {
                assert_eq!(o.kind, DhKind::LongHole);
                assert_eq!(o.len(), 5);
            }
            _ => panic!(),
        }
        match is_distance_hereditary_with_witness(&gem()) {
            DhWitness::NotDh(o) => {
                assert_eq!(o.kind, DhKind::Gem);
                assert!(o.is_valid_in(&gem()));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn obstruction_examples() {
        let o = enumerate_small_obstructions(&house(), 5);
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].kind, DhKind::House);
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(enumerate_small_obstructions(&k4, 10).is_empty());
        let o = enumerate_small_obstructions(&cycle(6), 6);
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].kind, DhKind::LongHole);
        let domino = g(6, DOMINO);
        let o = enumerate_small_obstructions(&domino, 6);
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].kind, DhKind::Domino);
    }

    #[test]
    fn biclique_examples() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            enumerate_maximal_bicliques(&p3),
            vec![Biclique {
                m1: vec![0, 2],
                m2: vec![1]
            }]
        );
        assert_eq!(
            enumerate_maximal_bicliques(&g(2, &[(0, 1)])),
            vec![Biclique {
                m1: vec![0],
                m2: vec![1]
            }]
        );
        assert_eq!(
            enumerate_maximal_bicliques(&cycle(4)),
            vec![Biclique {
                m1: vec![0, 2],
                m2: vec![1, 3]
            }]
        );
    }

    #[test]
    fn rw1_examples() {
        let k2 = g(2, &[(0, 1)]);
        let d = rankwidth1_decomposition(&k2).unwrap();
        d.verify(&k2).unwrap();
        assert_eq!(d.tree_edges().len(), 1);
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let d = rankwidth1_decomposition(&star).unwrap();
        d.verify(&star).unwrap();
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = rankwidth1_decomposition(&p4).unwrap();
        d.verify(&p4).unwrap();
        let cut = balancing_rw1_cut(&p4, &d, None).unwrap();
        assert_eq!(cut.side1.len(), 2);
        assert_eq!(cut.side2.len(), 2);
        assert_eq!(cut.m1.len() + cut.m2.len(), 2);
        let cut = balancing_rw1_cut(&star, &rankwidth1_decomposition(&star).unwrap(), None).unwrap();
        assert_eq!((cut.side1.len(), cut.side2.len()), (2, 2));
        assert!(rankwidth1_decomposition(&cycle(5)).is_err());
    }

    #[test]
    fn disconnected_rw1() {
        let h = g(5, &[(0, 1), (2, 3)]);
        let d = rankwidth1_decomposition(&h).unwrap();
        d.verify(&h).unwrap();
    }

    #[test]
    fn brute_agrees_on_patterns() {
        assert!(!is_dh_brute(&house()));
        assert!(!is_dh_brute(&cycle(5)));
        assert!(is_dh_brute(&cycle(4)));
    }
}
