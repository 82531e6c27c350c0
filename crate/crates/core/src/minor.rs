//! Minor testing for small forbidden graphs.
//!
//! `K2`, `C3` and `K4` have dedicated tests (an edge, a cycle, failure of the
//! series-parallel reduction). Models for `K4` come from shrinking the graph
//! to a minimal subdivision. Other patterns fall back to exhaustive
//! branch-set assignment on small hosts.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest pattern accepted by [`has_minor`].
pub const MAX_PATTERN: usize = 6;
/// Largest host for the exhaustive fallback.
pub const MAX_GENERIC_HOST: usize = 10;

/// Branch sets indexed by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch: Vec<VertexSet>,
}

impl MinorModel {
    pub fn vertices(&self) -> VertexSet {
        let mut v: VertexSet = self.branch.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    /// Contracts each branch set of `g` and checks that every edge of `h`
    /// shows up between the contracted vertices.
    pub fn verify(&self, g: &Graph, h: &Graph) -> std::result::Result<(), String> {
        if self.branch.len() != h.n() {
            return Err(format!("{} branch sets for {} pattern vertices", self.branch.len(), h.n()));
        }
        let mut owner = vec![usize::MAX; g.n()];
        for (i, b) in self.branch.iter().enumerate() {
            if b.is_empty() {
                return Err(format!("branch set {i} is empty"));
            }
            for &v in b {
                if v >= g.n() {
                    return Err(format!("vertex {v} out of range"));
                }
                if owner[v] != usize::MAX {
                    return Err(format!("vertex {v} in two branch sets"));
                }
                owner[v] = i;
            }
            let sub = g.induced_subgraph(b).map_err(|e| e.to_string())?;
            if !sub.graph.is_connected() {
                return Err(format!("branch set {i} is not connected"));
            }
        }
        let mut contracted: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (u, v) in g.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != usize::MAX && b != usize::MAX && a != b {
                contracted.insert((a.min(b), a.max(b)));
            }
        }
        for (a, b) in h.edges() {
            if !contracted.contains(&(a.min(b), a.max(b))) {
                return Err(format!("no edge between branch sets {a} and {b}"));
            }
        }
        Ok(())
    }
}

fn complete(n: usize) -> Graph {
    let e: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &e).expect("valid edges")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    K2,
    C3,
    K4,
    Edgeless,
    Other,
}

fn shape(h: &Graph) -> Shape {
    match (h.n(), h.m()) {
        (_, 0) => Shape::Edgeless,
        (2, 1) => Shape::K2,
        (3, 3) => Shape::C3,
        (4, 6) => Shape::K4,
        _ => Shape::Other,
    }
}

/// Some minor model of `h` in `g`, or `None` when `g` is `h`-minor-free.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    if h.n() > MAX_PATTERN {
        return Err(Error::Unsupported(format!(
            "patterns above {MAX_PATTERN} vertices ({} given)",
            h.n()
        )));
    }
    if h.n() > g.n() {
        return Ok(None);
    }
    let model = match shape(h) {
        Shape::Edgeless => Some(MinorModel {
            branch: (0..h.n()).map(|v| vec![v]).collect(),
        }),
        Shape::K2 => g.edges().first().map(|&(u, v)| MinorModel {
            branch: vec![vec![u], vec![v]],
        }),
        Shape::C3 => shortest_cycle(g).map(|c| {
            let k = c.len();
            MinorModel {
                branch: vec![vec![c[0]], vec![c[1]], c[2..k].to_vec()],
            }
        }),
        Shape::K4 => k4_model(g),
        Shape::Other => {
            if g.n() > MAX_GENERIC_HOST {
                return Err(Error::Unsupported(format!(
                    "generic minor search on {} vertices (limit {MAX_GENERIC_HOST})",
                    g.n()
                )));
            }
            has_minor_brute(g, h)
        }
    };
    let model = model.map(|mut m| {
        for b in m.branch.iter_mut() {
            b.sort_unstable();
        }
        m
    });
    if let Some(m) = &model {
        m.verify(g, h)
            .map_err(|e| Error::Internal(format!("minor model failed verification: {e}")))?;
    }
    Ok(model)
}

/// A shortest cycle in cyclic order.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut par = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| 2 * dist[u] + 1 >= b.len()) {
                break;
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    queue.push_back(v);
                } else if v != par[u] {
                    // cycle s..u v..s, unless the two paths share more than s
                    let path = |mut x: usize| {
                        let mut p = vec![x];
                        while x != s {
                            x = par[x];
                            p.push(x);
                        }
                        p
                    };
                    let pu = path(u);
                    let pv = path(v);
                    let su: BTreeSet<usize> = pu.iter().copied().collect();
                    if pv.iter().filter(|x| su.contains(x)).count() != 1 {
                        continue;
                    }
                    let mut cyc: Vec<usize> = pu.into_iter().rev().collect();
                    cyc.extend(pv.into_iter().rev().skip(1).collect::<Vec<_>>().into_iter().rev());
                    if best.as_ref().map_or(true, |b| cyc.len() < b.len()) {
                        best = Some(cyc);
                    }
                }
            }
        }
    }
    best
}

pub fn is_forest(g: &Graph) -> bool {
    g.m() + g.connected_components().len() == g.n()
}

/// Series-parallel reduction on a simple graph given by adjacency sets:
/// drop vertices of degree at most 1, suppress degree-2 vertices, merge
/// parallel edges. A `K4` minor exists iff something survives.
fn reduces_away(adj: &mut [BTreeSet<usize>], alive: &mut [bool]) -> bool {
    let n = adj.len();
    let mut stack: Vec<usize> = (0..n).filter(|&v| alive[v] && adj[v].len() <= 2).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] || adj[v].len() > 2 {
            continue;
        }
        alive[v] = false;
        let nb: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &u in &nb {
            adj[u].remove(&v);
        }
        if nb.len() == 2 {
            let (a, b) = (nb[0], nb[1]);
            adj[a].insert(b);
            adj[b].insert(a);
        }
        for &u in &nb {
            if adj[u].len() <= 2 {
                stack.push(u);
            }
        }
    }
    !alive.iter().any(|&a| a)
}

fn adjacency(g: &Graph, keep: &[bool]) -> Vec<BTreeSet<usize>> {
    (0..g.n())
        .map(|v| {
            if !keep[v] {
                return BTreeSet::new();
            }
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| keep[u])
                .collect()
        })
        .collect()
}

fn k4_in(g: &Graph, keep: &[bool]) -> bool {
    let mut adj = adjacency(g, keep);
    let mut alive = keep.to_vec();
    !reduces_away(&mut adj, &mut alive)
}

pub fn has_k4_minor(g: &Graph) -> bool {
    k4_in(g, &vec![true; g.n()])
}

/// Shrinks `g` to a vertex- and edge-minimal subgraph with a `K4` minor,
/// which is a subdivision of `K4`, and reads the branch sets off it.
fn k4_model(g: &Graph) -> Option<MinorModel> {
    let n = g.n();
    let mut keep = vec![true; n];
    if !k4_in(g, &keep) {
        return None;
    }
    for v in 0..n {
        keep[v] = false;
        if !k4_in(g, &keep) {
            keep[v] = true;
        }
    }
    let mut edges: BTreeSet<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| keep[u] && keep[v])
        .collect();
    for e in edges.clone() {
        let trial = Graph::from_edges(n, &edges.iter().copied().filter(|&f| f != e).collect::<Vec<_>>())
            .expect("valid edges");
        if k4_in(&trial, &keep) {
            edges.remove(&e);
        }
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in &edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let corners: Vec<usize> = adj.iter().filter(|(_, l)| l.len() == 3).map(|(&v, _)| v).collect();
    if corners.len() != 4 {
        return None;
    }
    let idx = |v: usize| corners.iter().position(|&c| c == v);
    let mut branch: Vec<VertexSet> = corners.iter().map(|&c| vec![c]).collect();
    // walk each subdivided edge from its smaller corner; the inner vertices
    // join that corner's branch set
    for (i, &c) in corners.iter().enumerate() {
        for &first in &adj[&c] {
            let mut prev = c;
            let mut cur = first;
            let mut inner = Vec::new();
            while idx(cur).is_none() {
                inner.push(cur);
                let next = adj[&cur].iter().copied().find(|&w| w != prev)?;
                prev = cur;
                cur = next;
            }
            if c < cur {
                branch[i].extend(inner);
            }
        }
    }
    Some(MinorModel { branch })
}

/// Exhaustive assignment of host vertices to branch sets. Test oracle and
/// fallback for small hosts.
pub fn has_minor_brute(g: &Graph, h: &Graph) -> Option<MinorModel> {
    let n = g.n();
    let k = h.n();
    if k == 0 {
        return Some(MinorModel { branch: Vec::new() });
    }
    let mut label = vec![usize::MAX; n];
    fn go(g: &Graph, h: &Graph, label: &mut Vec<usize>, v: usize) -> Option<MinorModel> {
        let n = g.n();
        let k = h.n();
        if v == n {
            let mut branch = vec![Vec::new(); k];
            for (u, &l) in label.iter().enumerate() {
                if l != usize::MAX {
                    branch[l].push(u);
                }
            }
            let m = MinorModel { branch };
            return m.verify(g, h).is_ok().then_some(m);
        }
        // every empty branch set still needs a vertex
        let used: BTreeSet<usize> = label[..v].iter().copied().filter(|&l| l != usize::MAX).collect();
        if k - used.len() > n - v {
            return None;
        }
        for l in (0..k).chain([usize::MAX]) {
            label[v] = l;
            if let Some(m) = go(g, h, label, v + 1) {
                return Some(m);
            }
        }
        label[v] = usize::MAX;
        None
    }
    go(g, h, &mut label, 0)
}

/// Exact treewidth by dynamic programming over vertex subsets.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    const LIMIT: usize = 16;
    let n = g.n();
    if n > LIMIT {
        return Err(Error::TooLarge { n, limit: LIMIT });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &u| a | (1 << u)))
        .collect();
    // q(s, v): vertices outside s ∪ {v} reachable from v through s
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        let mut out = 0u32;
        while let Some(x) = stack.pop() {
            let mut nb = adj[x] & !seen;
            while nb != 0 {
                let y = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << y;
                if s & (1 << y) != 0 {
                    stack.push(y);
                } else {
                    out |= 1 << y;
                }
            }
        }
        out
    };
    let full = (1u32 << n) - 1;
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let val = tw[rest as usize].max(q(rest, v).count_ones() as usize);
            best = best.min(val);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize])
}

/// A finite set of forbidden minors with the treewidth bound `c` of the
/// graphs excluding them.
#[derive(Clone, Debug)]
pub struct MinorFamily {
    pub name: String,
    pub members: Vec<Graph>,
    pub c: usize,
}

impl MinorFamily {
    /// `k2`, `c3` or `k4`.
    pub fn builtin(name: &str) -> Result<MinorFamily> {
        let (members, c) = match name {
            "k2" => (vec![complete(2)], 0),
            "c3" => (vec![complete(3)], 1),
            "k4" => (vec![complete(4)], 2),
            _ => return Err(Error::Input(format!("unknown minor family {name:?} (k2, c3, k4)"))),
        };
        Ok(MinorFamily {
            name: name.to_string(),
            members,
            c,
        })
    }

    pub fn names() -> &'static [&'static str] {
        &["k2", "c3", "k4"]
    }

    /// A model of some member, first member first.
    pub fn find_model(&self, g: &Graph) -> Result<Option<(usize, MinorModel)>> {
        for (i, h) in self.members.iter().enumerate() {
            if let Some(m) = has_minor(g, h)? {
                return Ok(Some((i, m)));
            }
        }
        Ok(None)
    }

    pub fn is_free(&self, g: &Graph) -> Result<bool> {
        Ok(self.find_model(g)?.is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn examples() {
        let c3 = complete(3);
        let m = has_minor(&cycle(5), &c3).unwrap().unwrap();
        assert!(m.verify(&cycle(5), &c3).is_ok());
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(has_minor(&tree, &c3).unwrap().is_none());
        let k4 = complete(4);
        let m = has_minor(&k4, &k4).unwrap().unwrap();
        assert_eq!(m.vertices(), vec![0, 1, 2, 3]);
        assert!(has_minor(&cycle(6), &k4).unwrap().is_none());
        assert!(has_minor(&cycle(3), &complete(7)).is_err());
    }

    #[test]
    fn k4_subdivision() {
        // K4 with every edge subdivided once
        let mut e = Vec::new();
        let mut next = 4;
        for a in 0..4 {
            for b in a + 1..4 {
                e.push((a, next));
                e.push((next, b));
                next += 1;
            }
        }
        let g = Graph::from_edges(next, &e).unwrap();
        assert!(has_k4_minor(&g));
        let m = has_minor(&g, &complete(4)).unwrap().unwrap();
        assert_eq!(m.vertices().len(), 10);
        // wheel W5 has a K4 minor, a fan does not
        let mut w = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        w.extend((0..5).map(|i| (5, i)));
        assert!(has_k4_minor(&Graph::from_edges(6, &w).unwrap()));
        let fan: Vec<_> = vec![(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)];
        assert!(!has_k4_minor(&Graph::from_edges(6, &fan).unwrap()));
    }

    #[test]
    fn shortest_cycles() {
        assert_eq!(shortest_cycle(&cycle(7)).unwrap().len(), 7);
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.push((0, 3));
        let c = shortest_cycle(&Graph::from_edges(6, &e).unwrap()).unwrap();
        assert_eq!(c.len(), 4);
        assert!(shortest_cycle(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()).is_none());
    }

    #[test]
    fn treewidths() {
        assert_eq!(treewidth_exact(&cycle(6)).unwrap(), 2);
        assert_eq!(treewidth_exact(&complete(5)).unwrap(), 4);
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(treewidth_exact(&tree).unwrap(), 1);
        assert_eq!(treewidth_exact(&Graph::new(3)).unwrap(), 0);
    }

    #[test]
    fn generic_pattern() {
        // the 4-cycle is a minor of the 5-cycle, not of K_{1,3}
        let c4 = cycle(4);
        assert!(has_minor(&cycle(5), &c4).unwrap().is_some());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(has_minor(&star, &c4).unwrap().is_none());
    }

    #[test]
    fn registry() {
        let f = MinorFamily::builtin("c3").unwrap();
        assert_eq!(f.c, 1);
        assert!(!f.is_free(&cycle(4)).unwrap());
        assert!(MinorFamily::builtin("k5").is_err());
    }
}
