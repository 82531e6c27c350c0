//! Seeded instance generators. The seed alone fixes the instance; the random
//! source is ChaCha8 seeded with `seed_from_u64`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::Instance;
use crate::rational::Q;

/// Name of the random source, written into bench headers.
pub const RNG_NAME: &str = "chacha8-seed_from_u64";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generator {
    /// Random chordal graph grown by simplicial vertices.
    CliqueTree,
    /// Chordal graph plus `k` planted cycles.
    PlantedHoles,
    /// Distance-hereditary graph from a random pruning sequence plus `k`
    /// noise edges.
    Pruning,
    /// `G(n, p)`.
    ErdosRenyi,
    /// A clique on `k` vertices joined to a sparse chordal graph, each
    /// clique-to-rest edge present with probability `p`.
    CliqueChordal,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightDist {
    #[default]
    Unit,
    /// Integers in `1..=w_max`.
    UniformInt,
    /// `(1 + a)·2^k / 16` with `a` uniform in `0..16` and `k` geometric,
    /// capped at 10.
    ExponentialRational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenSpec {
    pub generator: Generator,
    pub n: usize,
    pub seed: u64,
    #[serde(default)]
    pub weights: WeightDist,
    #[serde(default = "default_w_max")]
    pub w_max: u32,
    /// Planted holes or noise edges.
    #[serde(default)]
    pub k: usize,
    /// Terminal pairs to sample.
    #[serde(default)]
    pub pairs: usize,
    /// Edge probability for `erdos-renyi`.
    #[serde(default = "default_p")]
    pub p: f64,
    /// Largest clique grown by `clique-tree`.
    #[serde(default = "default_max_clique")]
    pub max_clique: usize,
    /// Longest planted cycle.
    #[serde(default = "default_hole_max")]
    pub hole_max: usize,
}

fn default_w_max() -> u32 {
    10
}
fn default_p() -> f64 {
    0.1
}
fn default_max_clique() -> usize {
    4
}
fn default_hole_max() -> usize {
    16
}

impl GenSpec {
    pub fn new(generator: Generator, n: usize, seed: u64) -> Self {
        GenSpec {
            generator,
            n,
            seed,
            weights: WeightDist::Unit,
            w_max: default_w_max(),
            k: 0,
            pairs: 0,
            p: default_p(),
            max_clique: default_max_clique(),
            hole_max: default_hole_max(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::Input("p must lie in [0, 1]".into()));
        }
        if self.max_clique < 1 {
            return Err(Error::Input("max_clique must be positive".into()));
        }
        if self.hole_max < 4 {
            return Err(Error::Input("hole_max must be at least 4".into()));
        }
        if self.w_max < 1 {
            return Err(Error::Input("w_max must be positive".into()));
        }
        Ok(())
    }
}

/// Builds the instance described by `spec`.
pub fn gen_instance(spec: &GenSpec) -> Result<Instance> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let mut g = match spec.generator {
        Generator::CliqueTree => clique_tree(n, spec.max_clique, &mut rng),
        Generator::PlantedHoles => planted_holes(n, spec.k, spec.max_clique, spec.hole_max, &mut rng),
        Generator::Pruning => {
            let mut g = pruning(n, &mut rng);
            add_noise(&mut g, spec.k, &mut rng);
            g
        }
        Generator::ErdosRenyi => {
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(spec.p) {
                        g.add_edge(u, v).expect("fresh edge");
                    }
                }
            }
            g
        }
        Generator::CliqueChordal => clique_chordal(n, spec.k, spec.p, &mut rng),
    };
    let w = weights(n, spec.weights, spec.w_max, &mut rng);
    g.set_weights(w)?;
    let pairs = sample_pairs(&g, spec.pairs, &mut rng);
    Ok(Instance { graph: g, pairs })
}

fn clique_tree(n: usize, max_clique: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    let mut bags: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if bags.is_empty() || rng.gen_ratio(1, 12) {
            bags.push(vec![v]);
            continue;
        }
        let bag = bags[rng.gen_range(0..bags.len())].clone();
        let k = rng.gen_range(1..=bag.len().min(max_clique.saturating_sub(1)).max(1));
        let mut s: Vec<usize> = bag.choose_multiple(rng, k).copied().collect();
        s.sort_unstable();
        for &u in &s {
            g.add_edge(u, v).expect("fresh edge");
        }
        s.push(v);
        bags.push(s);
    }
    g
}

fn clique_chordal(n: usize, k: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let k = k.clamp(1, n.max(1));
    let mut g = Graph::new(n);
    for u in 0..k.min(n) {
        for v in u + 1..k.min(n) {
            g.add_edge(u, v).expect("fresh edge");
        }
    }
    if n > k {
        // a path-like tree, so cycles through the clique are long
        for v in k + 1..n {
            let u = rng.gen_range(v.saturating_sub(3).max(k)..v);
            g.add_edge(u, v).expect("fresh edge");
        }
        for c in 0..k {
            for v in k..n {
                if rng.gen_bool(p) {
                    g.add_edge(c, v).expect("fresh edge");
                }
            }
        }
    }
    g
}

fn planted_holes(n: usize, k: usize, max_clique: usize, hole_max: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut lens = Vec::new();
    let mut used = 0;
    for _ in 0..k {
        let l = rng.gen_range(4..=hole_max);
        // keep at least two chordal vertices to attach to
        if used + l - 2 + 2 > n {
            break;
        }
        used += l - 2;
        lens.push(l);
    }
    let base = n - used;
    let mut g = Graph::new(n);
    let c = clique_tree(base, max_clique, rng);
    for (u, v) in c.edges() {
        g.add_edge(u, v).expect("fresh edge");
    }
    let mut next = base;
    for l in lens {
        // a path of l - 2 new vertices closed through two base vertices a, b;
        // a - b adjacent gives a hole of length exactly l
        let a = rng.gen_range(0..base);
        let nb = c.neighbors(a);
        let b = if !nb.is_empty() && rng.gen_bool(0.5) {
            nb[rng.gen_range(0..nb.len())]
        } else {
            let mut b = rng.gen_range(0..base);
            if b == a {
                b = (a + 1) % base;
            }
            b
        };
        let path: Vec<usize> = (next..next + l - 2).collect();
        next += l - 2;
        for w in path.windows(2) {
            g.add_edge(w[0], w[1]).expect("fresh edge");
        }
        g.add_edge(a, path[0]).expect("fresh edge");
        g.add_edge(*path.last().unwrap(), b).expect("fresh edge");
    }
    g
}

fn pruning(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let nb: Vec<usize> = g.neighbors(u).to_vec();
        match rng.gen_range(0..3) {
            0 => g.add_edge(u, v).expect("fresh edge"),
            1 => {
                g.add_edge(u, v).expect("fresh edge");
                for w in nb {
                    g.add_edge(w, v).expect("fresh edge");
                }
            }
            _ => {
                if nb.is_empty() {
                    g.add_edge(u, v).expect("fresh edge");
                }
                for w in nb {
                    g.add_edge(w, v).expect("fresh edge");
                }
            }
        }
    }
    g
}

fn add_noise(g: &mut Graph, k: usize, rng: &mut ChaCha8Rng) {
    let n = g.n();
    if n < 2 {
        return;
    }
    let mut added = 0;
    let mut tries = 0;
    while added < k && tries < 50 * (k + 1) {
        tries += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.adjacent(u, v) {
            g.add_edge(u, v).expect("fresh edge");
            added += 1;
        }
    }
}

fn weights(n: usize, dist: WeightDist, w_max: u32, rng: &mut ChaCha8Rng) -> Vec<Q> {
    (0..n)
        .map(|_| match dist {
            WeightDist::Unit => Q::from_integer(1.into()),
            WeightDist::UniformInt => Q::from_integer(rng.gen_range(1..=w_max).into()),
            WeightDist::ExponentialRational => {
                let a: u32 = rng.gen_range(0..16);
                let k = rng.gen::<u32>().trailing_zeros().min(10);
                Q::new(((1 + a) << k).into(), 16.into())
            }
        })
        .collect()
}

/// Pairs inside one component where possible, distinct vertices, no repeats.
fn sample_pairs(g: &Graph, count: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut out: Vec<(usize, usize)> = Vec::new();
    if n < 2 || count == 0 {
        return out;
    }
    let comps: Vec<Vec<usize>> = g.connected_components().into_iter().filter(|c| c.len() >= 2).collect();
    let mut tries = 0;
    while out.len() < count && tries < 100 * (count + 1) {
        tries += 1;
        let (s, t) = if comps.is_empty() {
            (rng.gen_range(0..n), rng.gen_range(0..n))
        } else {
            let c = &comps[rng.gen_range(0..comps.len())];
            (c[rng.gen_range(0..c.len())], c[rng.gen_range(0..c.len())])
        };
        if s == t {
            continue;
        }
        let p = (s.min(t), s.max(t));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{chordal, dh};

    #[test]
    fn deterministic() {
        let mut s = GenSpec::new(Generator::PlantedHoles, 10, 7);
        s.k = 2;
        let a = gen_instance(&s).unwrap();
        let b = gen_instance(&s).unwrap();
        assert_eq!(a.graph.edges(), b.graph.edges());
        assert_eq!(a.graph.weights(), b.graph.weights());
    }

    #[test]
    fn families_hold() {
        for seed in 0..30 {
            let g = gen_instance(&GenSpec::new(Generator::Pruning, 8, seed)).unwrap().graph;
            assert!(dh::is_distance_hereditary(&g));
            let mut s = GenSpec::new(Generator::CliqueTree, 9, seed);
            s.pairs = 3;
            let i = gen_instance(&s).unwrap();
            assert!(chordal::is_chordal(&i.graph));
            assert!(i.pairs.len() <= 3);
            assert!(i.pairs.iter().all(|&(a, b)| a != b));
        }
    }

    #[test]
    fn weight_dists() {
        let mut s = GenSpec::new(Generator::ErdosRenyi, 20, 1);
        s.weights = WeightDist::ExponentialRational;
        let g = gen_instance(&s).unwrap().graph;
        assert!(g.weights().iter().all(|w| *w > Q::from_integer(0.into())));
        s.weights = WeightDist::UniformInt;
        s.w_max = 3;
        let g = gen_instance(&s).unwrap().graph;
        assert!(g.weights().iter().all(|w| *w >= Q::from_integer(1.into()) && *w <= Q::from_integer(3.into())));
    }
}
