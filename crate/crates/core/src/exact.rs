//! Exact minimum-weight deletion for hereditary families given by an
//! obstruction finder, by branch and bound.
//!
//! The finder sees the current induced subgraph and returns the vertices of
//! some obstruction in it, or `None` when the subgraph is in the family.
//! Obstructions must stay obstructions in supergraphs, which holds for
//! induced-subgraph and minor obstructions alike.

use fixedbitset::FixedBitSet;
use num_traits::Zero;

use crate::chordal;
use crate::dh;
use crate::graph::{Graph, VertexSet};
use crate::rational::Q;

/// Outcome of an exact search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub solution: VertexSet,
    pub weight: Q,
    pub nodes: usize,
}

/// Disjoint obstructions collected per node for the lower bound.
const PACKING_ROUNDS: usize = 16;

struct Search<'a, F> {
    g: &'a Graph,
    find: F,
    budget: usize,
    nodes: usize,
    best: Option<(Q, VertexSet)>,
    deleted: FixedBitSet,
    kept: FixedBitSet,
    aborted: bool,
}

impl<F> Search<'_, F>
where
    F: FnMut(&Graph) -> Option<VertexSet>,
{
    fn obstruction(&mut self, alive: &FixedBitSet) -> Option<VertexSet> {
        let verts: Vec<usize> = alive.ones().collect();
        let sub = self.g.induced_subgraph(&verts).expect("in range");
        (self.find)(&sub.graph).map(|o| {
            let mut o = sub.map_back(&o);
            o.sort_unstable();
            o
        })
    }

    fn run(&mut self, cost: Q) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let mut alive = self.g.full_bits();
        alive.difference_with(&self.deleted);
        let Some(first) = self.obstruction(&alive) else {
            let better = match &self.best {
                None => true,
                Some((b, _)) => cost < *b,
            };
            if better {
                self.best = Some((cost, self.deleted.ones().collect()));
            }
            return;
        };
        // lower bound from vertex-disjoint obstructions
        let mut lb = cost.clone();
        let mut rest = alive.clone();
        let mut obs = Some(first.clone());
        for _ in 0..PACKING_ROUNDS {
            let Some(o) = obs else { break };
            let cheapest = o
                .iter()
                .filter(|&&v| !self.kept.contains(v))
                .map(|&v| self.g.weight(v))
                .min();
            match cheapest {
                None => return,
                Some(c) => lb += c,
            }
            if let Some((b, _)) = &self.best {
                if lb >= *b {
                    return;
                }
            }
            for &v in &o {
                rest.set(v, false);
            }
            obs = self.obstruction(&rest);
        }
        let mut branch: Vec<usize> = first
            .iter()
            .copied()
            .filter(|&v| !self.kept.contains(v))
            .collect();
        branch.sort_by(|&a, &b| self.g.weight(a).cmp(self.g.weight(b)).then(a.cmp(&b)));
        let mut newly_kept = Vec::new();
        for v in branch {
            self.deleted.insert(v);
            self.run(&cost + self.g.weight(v));
            self.deleted.set(v, false);
            if self.aborted {
                break;
            }
            // later branches keep v
            self.kept.insert(v);
            newly_kept.push(v);
        }
        for v in newly_kept {
            self.kept.set(v, false);
        }
    }
}

/// Minimum-weight vertex set whose removal leaves no obstruction. `None` when
/// more than `budget` search nodes would be needed.
pub fn min_deletion<F>(g: &Graph, find: F, budget: usize) -> Option<ExactResult>
where
    F: FnMut(&Graph) -> Option<VertexSet>,
{
    let mut s = Search {
        g,
        find,
        budget,
        nodes: 0,
        best: None,
        deleted: FixedBitSet::with_capacity(g.n()),
        kept: FixedBitSet::with_capacity(g.n()),
        aborted: false,
    };
    s.run(Q::zero());
    if s.aborted {
        return None;
    }
    let (weight, solution) = s.best.expect("deleting everything is feasible");
    Some(ExactResult {
        solution,
        weight,
        nodes: s.nodes,
    })
}

/// Shortest hole, or `None` for chordal graphs.
pub fn shortest_hole(g: &Graph) -> Option<VertexSet> {
    let ones = vec![Q::from_integer(1.into()); g.n()];
    chordal::min_weight_hole(g, &ones, 4).map(|(h, _)| h.sorted_vertices())
}

/// Some DH obstruction, small patterns first, or `None` for DH graphs.
pub fn small_dh_obstruction(g: &Graph) -> Option<VertexSet> {
    if dh::is_distance_hereditary(g) {
        return None;
    }
    if let Some(o) = dh::enumerate_small_obstructions(g, 6).into_iter().next() {
        return Some(o.sorted_vertices());
    }
    let ones = vec![Q::from_integer(1.into()); g.n()];
    chordal::min_weight_hole(g, &ones, 5).map(|(h, _)| h.sorted_vertices())
}

pub fn exact_cvd(g: &Graph, budget: usize) -> Option<ExactResult> {
    min_deletion(g, shortest_hole, budget)
}

pub fn exact_dhvd(g: &Graph, budget: usize) -> Option<ExactResult> {
    min_deletion(g, small_dh_obstruction, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn cvd_examples() {
        let r = exact_cvd(&cycle(4), 1000).unwrap();
        assert_eq!(r.weight, q(1));
        let g = cycle(4).with_weights(vec![q(5), q(1), q(1), q(1)]).unwrap();
        let r = exact_cvd(&g, 1000).unwrap();
        assert_eq!(r.weight, q(1));
        assert!(!r.solution.contains(&0));
        let k = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(exact_cvd(&k, 10).unwrap().solution, Vec::<usize>::new());
    }

    #[test]
    fn dhvd_examples() {
        let house = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]).unwrap();
        assert_eq!(exact_dhvd(&house, 1000).unwrap().weight, q(1));
        assert_eq!(exact_dhvd(&cycle(5), 1000).unwrap().weight, q(1));
        assert_eq!(exact_dhvd(&cycle(4), 1000).unwrap().weight, q(0));
    }

    #[test]
    fn budget_abort() {
        let e: Vec<_> = (0..8).flat_map(|i| [(i, (i + 1) % 8)]).collect();
        let g = Graph::from_edges(8, &e).unwrap();
        assert!(exact_cvd(&g, 1).is_none());
    }
}
