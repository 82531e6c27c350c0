//! Brute-force reference scans and random graphs shared by the integration
//! tests. Nothing here calls the library's own algorithms.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vdapprox::dh::Biclique;
use vdapprox::{Graph, Q};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(n: usize, p: f64, r: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_weights(g: &mut Graph, max: i64, r: &mut ChaCha8Rng) {
    let w = (0..g.n()).map(|_| Q::from_integer(r.gen_range(1..=max).into())).collect();
    g.set_weights(w).unwrap();
}

/// Graph number `code` on `n` vertices: bit `i` of `code` is the `i`-th pair
/// in lexicographic order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> i & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    g
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

fn connected_on(g: &Graph, set: &[usize]) -> bool {
    if set.is_empty() {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let inside: BTreeSet<usize> = set.iter().copied().collect();
    let mut q = VecDeque::from([set[0]]);
    seen[set[0]] = true;
    let mut count = 1;
    while let Some(u) = q.pop_front() {
        for &v in set {
            if !seen[v] && inside.contains(&v) && g.adjacent(u, v) {
                seen[v] = true;
                count += 1;
                q.push_back(v);
            }
        }
    }
    count == set.len()
}

/// Vertex sets of all holes (induced cycles on at least 4 vertices).
pub fn brute_holes(g: &Graph) -> BTreeSet<Vec<usize>> {
    subsets(g.n())
        .filter(|s| {
            s.len() >= 4
                && s.iter().all(|&u| s.iter().filter(|&&v| g.adjacent(u, v)).count() == 2)
                && connected_on(g, s)
        })
        .collect()
}

pub fn brute_chordal(g: &Graph) -> bool {
    brute_holes(g).is_empty()
}

pub fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.adjacent(u, v)))
}

pub fn brute_maximal_cliques(g: &Graph) -> BTreeSet<Vec<usize>> {
    subsets(g.n())
        .filter(|s| {
            !s.is_empty()
                && is_clique(g, s)
                && (0..g.n()).all(|v| s.contains(&v) || !s.iter().all(|&u| g.adjacent(u, v)))
        })
        .collect()
}

fn bfs_dist(g: &Graph, set: &[usize], s: usize) -> Vec<Option<usize>> {
    let inside: BTreeSet<usize> = set.iter().copied().collect();
    let mut d = vec![None; g.n()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in g.neighbors(u) {
            if inside.contains(&v) && d[v].is_none() {
                d[v] = Some(d[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    d
}

/// Distance-hereditary by definition: every connected induced subgraph keeps
/// the distances of the whole graph.
pub fn brute_dh(g: &Graph) -> bool {
    let all: Vec<usize> = (0..g.n()).collect();
    let full: Vec<Vec<Option<usize>>> = (0..g.n()).map(|s| bfs_dist(g, &all, s)).collect();
    subsets(g.n()).filter(|s| s.len() >= 3 && connected_on(g, s)).all(|s| {
        s.iter().all(|&a| {
            let d = bfs_dist(g, &s, a);
            s.iter().all(|&b| d[b] == full[a][b])
        })
    })
}

/// Maximal bicliques by scanning every assignment of vertices to
/// {outside, part 1, part 2}, canonical with the smaller part list first.
pub fn brute_maximal_bicliques(g: &Graph) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut all: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut c = code;
        for v in 0..n {
            match c % 3 {
                1 => a.push(v),
                2 => b.push(v),
                _ => {}
            }
            c /= 3;
        }
        if a.is_empty() || b.is_empty() || !a.iter().all(|&u| b.iter().all(|&v| g.adjacent(u, v))) {
            continue;
        }
        all.insert(if a <= b { (a, b) } else { (b, a) });
    }
    let sub = |x: &[usize], y: &[usize]| x.iter().all(|v| y.contains(v));
    let contained = |p: &(Vec<usize>, Vec<usize>), q: &(Vec<usize>, Vec<usize>)| {
        p != q && ((sub(&p.0, &q.0) && sub(&p.1, &q.1)) || (sub(&p.0, &q.1) && sub(&p.1, &q.0)))
    };
    all.iter().filter(|p| !all.iter().any(|q| contained(p, q))).cloned().collect()
}

pub fn biclique_pairs(bs: &[Biclique]) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    bs.iter().map(|b| (b.m1.clone(), b.m2.clone())).collect()
}

/// `h` as a minor of `g` by trying every assignment of vertices to branch
/// sets or to "deleted".
pub fn brute_has_minor(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    let k = h.n();
    if k == 0 {
        return true;
    }
    let total = (k + 1).pow(n as u32);
    'outer: for code in 0..total {
        let mut sets = vec![Vec::new(); k];
        let mut c = code;
        for v in 0..n {
            let b = c % (k + 1);
            if b < k {
                sets[b].push(v);
            }
            c /= k + 1;
        }
        for s in &sets {
            if s.is_empty() || !connected_on(g, s) {
                continue 'outer;
            }
        }
        for (a, b) in h.edges() {
            if !sets[a].iter().any(|&u| sets[b].iter().any(|&v| g.adjacent(u, v))) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &e).unwrap()
}

/// Minimum-weight vertex set whose removal makes `ok` true, by scanning all
/// subsets.
pub fn brute_min_deletion(g: &Graph, ok: impl Fn(&Graph) -> bool) -> Q {
    subsets(g.n())
        .filter(|s| ok(&g.remove(s).graph))
        .map(|s| g.weight_of(&s))
        .min()
        .unwrap()
}
