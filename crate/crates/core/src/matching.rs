//! Maximum-cardinality matching in general graphs.
//!
//! A greedy maximal matching seeds the search; each still-free vertex then gets
//! one alternating-tree search with blossom contraction (Edmonds). A vertex whose
//! search fails can never be matched later, so one pass over the free vertices
//! yields a maximum matching.

use std::collections::VecDeque;

use crate::graph::{Graph, GraphId};
use crate::{Error, Result};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub host: GraphId,
    /// Pairs `(u, v)` with `u < v`, sorted by `u`.
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks that every pair is an edge of `g` and pairs are vertex-disjoint.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.host == g.id()
            && self.pairs.iter().all(|&(u, v)| {
                g.has_edge(u, v)
                    && !std::mem::replace(&mut used[u], true)
                    && !std::mem::replace(&mut used[v], true)
            })
    }
}

struct Search<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    seen: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Search {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            seen: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn greedy_seed(&mut self) {
        for u in 0..self.g.n() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(v) = self.g.neighbors(u).find(|&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        let seen = &mut self.seen;
        seen.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Alternating-tree search from a free `root`; returns the free endpoint of
    /// an augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            let g = self.g;
            for to in g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        self.greedy_seed();
        if self.mate.iter().filter(|&&m| m == NONE).count() < 2 {
            return self.mate;
        }
        for root in 0..self.g.n() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = Search::new(g).run();
    let pairs = mate
        .iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| (u, v))
        .collect();
    let m = Matching {
        host: g.id(),
        pairs,
    };
    debug_assert!(m.validate(g));
    m
}

/// A matching with exactly `k` pairs: the `k` pairs of a maximum matching with
/// the smallest lower endpoints.
pub fn matching_of_size(g: &Graph, k: usize) -> Result<Matching> {
    let mut m = maximum_matching(g);
    if m.len() < k {
        return Err(Error::InsufficientMatching {
            needed: k,
            found: m.len(),
        });
    }
    m.pairs.truncate(k);
    Ok(m)
}
