//! Undirected simple graphs on dense indices with exact rational vertex weights.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt::Debug;
use std::ops::Add;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

/// Sorted, duplicate-free list of vertex indices of one graph.
pub type VertexSet = Vec<usize>;

/// Sorted, deduplicated union.
pub fn union(parts: &[&[usize]]) -> VertexSet {
    let mut out: VertexSet = parts.iter().flat_map(|p| p.iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    nbrs: Vec<Vec<usize>>,
    weights: Vec<Q>,
    /// Identity of each vertex in the root graph it was cut from.
    labels: Vec<usize>,
}

/// An induced subgraph together with the map back to its parent's indices.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub back: Vec<usize>,
}

impl Subgraph {
    pub fn map_back(&self, vs: &[usize]) -> VertexSet {
        let mut out: Vec<usize> = vs.iter().map(|&v| self.back[v]).collect();
        out.sort_unstable();
        out
    }

    /// Local indices of those parent vertices in `vs` that survive here.
    pub fn to_local(&self, vs: &[usize]) -> VertexSet {
        let mut out: VertexSet = vs.iter().filter_map(|v| self.back.binary_search(v).ok()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices with unit weights.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            nbrs: vec![Vec::new(); n],
            weights: vec![Q::one(); n],
            labels: (0..n).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_weights(mut self, weights: Vec<Q>) -> Result<Self> {
        self.set_weights(weights)?;
        Ok(self)
    }

    pub fn set_weights(&mut self, weights: Vec<Q>) -> Result<()> {
        if weights.len() != self.n() {
            return Err(Error::Input(format!(
                "expected {} weights, got {}",
                self.n(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !rational::is_nonneg(w)) {
            return Err(Error::Input(format!("negative weight {w}")));
        }
        self.weights = weights;
        Ok(())
    }

    /// Adds edge `uv`. Self-loops are rejected; repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::Input(format!("self-loop at {u}")));
        }
        if self.adj[u].contains(v) {
            return Ok(());
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        let pu = self.nbrs[u].binary_search(&v).unwrap_err();
        self.nbrs[u].insert(pu, v);
        let pv = self.nbrs[v].binary_search(&u).unwrap_err();
        self.nbrs[v].insert(pv, u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.nbrs.len()
    }

    pub fn m(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn adj_bits(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn weight(&self, v: usize) -> &Q {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Q] {
        &self.weights
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn weight_of(&self, set: &[usize]) -> Q {
        rational::sum(set.iter().map(|&v| &self.weights[v]))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    pub fn bits_of(&self, set: &[usize]) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.n());
        for &v in set {
            b.insert(v);
        }
        b
    }

    pub fn full_bits(&self) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.n());
        b.insert_range(..);
        b
    }

    /// `G[u]`. Labels follow the vertices so root identities survive nesting.
    pub fn induced_subgraph(&self, u: &[usize]) -> Result<Subgraph> {
        let n = self.n();
        let mut pos = vec![usize::MAX; n];
        let mut back: Vec<usize> = Vec::with_capacity(u.len());
        for &v in u {
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if pos[v] == usize::MAX {
                pos[v] = 0;
                back.push(v);
            }
        }
        back.sort_unstable();
        for (i, &v) in back.iter().enumerate() {
            pos[v] = i;
        }
        let k = back.len();
        let mut g = Graph {
            adj: (0..k).map(|_| FixedBitSet::with_capacity(k)).collect(),
            nbrs: vec![Vec::new(); k],
            weights: back.iter().map(|&v| self.weights[v].clone()).collect(),
            labels: back.iter().map(|&v| self.labels[v]).collect(),
        };
        for (i, &v) in back.iter().enumerate() {
            for &w in &self.nbrs[v] {
                let j = pos[w];
                if j != usize::MAX {
                    g.adj[i].insert(j);
                    g.nbrs[i].push(j);
                }
            }
        }
        Ok(Subgraph { graph: g, back })
    }

    /// `G - s`.
    pub fn remove(&self, s: &[usize]) -> Subgraph {
        let gone = self.bits_of(s);
        let keep: Vec<usize> = (0..self.n()).filter(|v| !gone.contains(*v)).collect();
        self.induced_subgraph(&keep).expect("indices in range")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.full_bits())
    }

    /// Components of `G[mask]`.
    pub fn components_within(&self, mask: &FixedBitSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in mask.ones() {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.nbrs[v] {
                    if mask.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component label per vertex inside `mask` (`usize::MAX` outside).
    pub fn component_labels(&self, mask: &FixedBitSet) -> Vec<usize> {
        let mut lab = vec![usize::MAX; self.n()];
        for (i, c) in self.components_within(mask).iter().enumerate() {
            for &v in c {
                lab[v] = i;
            }
        }
        lab
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }
}

/// Integer cost type used by the shortest-path kernels.
pub trait Cost: Ord + Clone + Zero + Debug + for<'a> Add<&'a Self, Output = Self> {
    /// Converts a nonnegative integer, saturating where the type is bounded.
    fn from_big_saturating(b: &BigInt) -> Self;
}

impl Cost for u128 {
    fn from_big_saturating(b: &BigInt) -> Self {
        b.to_u128().unwrap_or(u128::MAX)
    }
}

impl Cost for BigInt {
    fn from_big_saturating(b: &BigInt) -> Self {
        b.clone()
    }
}

/// Scales nonnegative rationals to a common denominator. Returns `None` when
/// the scaled total would not fit comfortably in a `u128`.
pub fn scale_costs_u128(x: &[Q]) -> Option<(Vec<u128>, BigInt)> {
    let (ints, den) = rational::scale_to_integers(x);
    let total: BigInt = ints.iter().sum();
    if total.bits() > 120 {
        return None;
    }
    let small = ints.iter().map(|v| v.to_u128()).collect::<Option<Vec<_>>>()?;
    Some((small, den))
}

pub fn scale_costs_big(x: &[Q]) -> (Vec<BigInt>, BigInt) {
    rational::scale_to_integers(x)
}

/// Single-source result of a vertex-weighted Dijkstra run.
pub struct Sssp<C> {
    pub dist: Vec<Option<C>>,
    pred: Vec<usize>,
}

impl<C> Sssp<C> {
    /// Path from the source to `t`, source first. Empty if unreached.
    pub fn path(&self, t: usize) -> Vec<usize> {
        let mut p = Vec::new();
        if self.dist.get(t).map_or(true, Option::is_none) {
            return p;
        }
        let mut v = t;
        loop {
            p.push(v);
            if self.pred[v] == usize::MAX {
                break;
            }
            v = self.pred[v];
        }
        p.reverse();
        p
    }
}

/// Dijkstra where a path costs the sum of its vertex costs, both endpoints
/// included. Only vertices in `allowed` (plus `src`) are entered.
pub fn sssp<C: Cost>(
    g: &Graph,
    costs: &[C],
    src: usize,
    allowed: Option<&FixedBitSet>,
) -> Sssp<C> {
    sssp_multi(g, costs, &[src], allowed)
}

/// Multi-source variant of [`sssp`]: every source starts at its own cost.
/// Sources need not lie in `allowed`.
pub fn sssp_multi<C: Cost>(
    g: &Graph,
    costs: &[C],
    sources: &[usize],
    allowed: Option<&FixedBitSet>,
) -> Sssp<C> {
    let n = g.n();
    let mut dist: Vec<Option<C>> = vec![None; n];
    let mut pred = vec![usize::MAX; n];
    let mut done = FixedBitSet::with_capacity(n);
    let mut heap = BinaryHeap::new();
    for &src in sources {
        dist[src] = Some(costs[src].clone());
        heap.push(Reverse((costs[src].clone(), src)));
    }
    while let Some(Reverse((d, u))) = heap.pop() {
        if done.contains(u) {
            continue;
        }
        done.insert(u);
        for &v in g.neighbors(u) {
            if done.contains(v) || allowed.is_some_and(|a| !a.contains(v)) {
                continue;
            }
            let nd = d.clone() + &costs[v];
            let better = match &dist[v] {
                None => true,
                Some(old) => nd < *old,
            };
            if better {
                dist[v] = Some(nd.clone());
                pred[v] = u;
                heap.push(Reverse((nd, v)));
            }
        }
    }
    Sssp { dist, pred }
}

/// Minimum of `x(V(P))` over `s`-`t` paths, with one witnessing path.
/// `Ok(None)` when `t` is unreachable from `s`.
pub fn vertex_weighted_shortest_path(
    g: &Graph,
    costs: &[Q],
    s: usize,
    t: usize,
) -> Result<Option<(Q, Vec<usize>)>> {
    if s >= g.n() {
        return Err(Error::UnknownVertex(s));
    }
    if t >= g.n() {
        return Err(Error::UnknownVertex(t));
    }
    if costs.len() != g.n() || costs.iter().any(|c| !rational::is_nonneg(c)) {
        return Err(Error::Input("costs must be nonnegative and cover V(g)".into()));
    }
    let path = match scale_costs_u128(costs) {
        Some((c, _)) => sssp(g, &c, s, None).path(t),
        None => {
            let (c, _) = scale_costs_big(costs);
            sssp(g, &c, s, None).path(t)
        }
    };
    if path.is_empty() {
        return Ok(None);
    }
    let cost = rational::sum(path.iter().map(|&v| &costs[v]));
    Ok(Some((cost, path)))
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
    fn induced_edge_of_c4() {
        let g = cycle(4);
        let s = g.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(s.graph.edges(), vec![(0, 1)]);
        assert_eq!(s.back, vec![0, 1]);
    }

    #[test]
    fn induced_empty_and_nonadjacent() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.induced_subgraph(&[]).unwrap().graph.n(), 0);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = p4.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(s.graph.m(), 0);
        assert_eq!(s.graph.n(), 2);
        assert!(matches!(p4.induced_subgraph(&[9]), Err(Error::UnknownVertex(9))));
    }

    #[test]
    fn labels_survive_nesting() {
        let g = cycle(6);
        let a = g.induced_subgraph(&[1, 2, 3, 4]).unwrap();
        let b = a.graph.induced_subgraph(&[1, 3]).unwrap();
        assert_eq!(b.graph.labels(), &[2, 4]);
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let c = g.connected_components();
        assert_eq!(c, vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(Graph::new(0).connected_components().is_empty());
        assert_eq!(cycle(5).connected_components().len(), 1);
    }

    #[test]
    fn shortest_path_examples() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r = vertex_weighted_shortest_path(&p, &[q(0), q(1), q(0)], 0, 2)
            .unwrap()
            .unwrap();
        assert_eq!(r, (q(1), vec![0, 1, 2]));

        let single = vertex_weighted_shortest_path(&p, &[frac(2, 5), q(0), q(0)], 0, 0)
            .unwrap()
            .unwrap();
        assert_eq!(single, (frac(2, 5), vec![0]));

        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(vertex_weighted_shortest_path(&split, &vec![q(0); 4], 0, 3)
            .unwrap()
            .is_none());

        // C4 s-a-t-b-s
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let costs = [q(0), frac(1, 5), q(0), frac(1, 2)];
        let r = vertex_weighted_shortest_path(&c4, &costs, 0, 2).unwrap().unwrap();
        assert_eq!(r.0, frac(1, 5));
        assert_eq!(r.1, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_bad_input() {
        let mut g = Graph::new(2);
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 5).is_err());
        assert!(vertex_weighted_shortest_path(&g, &[q(0), q(0)], 0, 7).is_err());
        assert!(g.set_weights(vec![q(-1), q(1)]).is_err());
    }
}
