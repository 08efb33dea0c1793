//! Simple undirected graphs on dense vertex indices with bitset adjacency rows.
//!
//! Every row has `ceil(n / 64)` words, so complementation and induced-subgraph
//! queries are word-parallel. A graph is immutable once built.

use std::fmt;

use crate::bitset::{words_for, Ones, VertexSet, WORD_BITS};
use crate::{Error, Result};

/// Content fingerprint of a graph, used to tie witnesses to their host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphId(pub u64);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub n: usize,
    pub delta_min: usize,
    pub delta_max: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        complement(&Graph::empty(n))
    }

    /// Builds a graph from unordered pairs; duplicates collapse.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.set(u, v);
        self.set(v, u);
        Ok(())
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Number of edges of the subgraph induced by `s`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|u| s.intersection_count(self.row(u)))
            .sum::<usize>()
            / 2
    }

    /// Degree of `v` inside the subgraph induced by `s`.
    pub fn induced_degree(&self, v: usize, s: &VertexSet) -> usize {
        s.intersection_count(self.row(v))
    }

    pub fn id(&self) -> GraphId {
        // FNV-1a style mixing over whole words, finished with a murmur3 avalanche.
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ self.n as u64;
        for &word in &self.rows {
            h = (h ^ word).wrapping_mul(PRIME).rotate_left(29);
        }
        h ^= h >> 33;
        h = h.wrapping_mul(0xff51_afd7_ed55_8ccd);
        h ^= h >> 33;
        GraphId(h)
    }

    /// Builds a graph on at most 64 vertices from single-word adjacency rows.
    pub(crate) fn from_small_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= WORD_BITS);
        Graph {
            n: rows.len(),
            words: words_for(rows.len()),
            rows: if rows.is_empty() { Vec::new() } else { rows },
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// The complement graph: same vertices, edges exactly the non-edges of `g`.
pub fn complement(g: &Graph) -> Graph {
    let mut out = Graph {
        n: g.n,
        words: g.words,
        rows: g.rows.iter().map(|w| !w).collect(),
    };
    let rem = g.n % WORD_BITS;
    let tail_mask = if rem == 0 { !0 } else { (1u64 << rem) - 1 };
    for v in 0..g.n {
        let start = v * g.words;
        if g.words > 0 {
            out.rows[start + g.words - 1] &= tail_mask;
        }
        out.rows[start + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }
    out
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats> {
    if g.n == 0 {
        return Err(Error::EmptyGraph);
    }
    let (mut lo, mut hi) = (usize::MAX, 0);
    for v in 0..g.n {
        let d = g.degree(v);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    Ok(DegreeStats {
        n: g.n,
        delta_min: lo,
        delta_max: hi,
    })
}

/// Connected components, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, &VertexSet::full(g.n))
}

/// Connected components of the subgraph induced by `s`, ordered by smallest member.
pub fn components_within(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let mut unvisited = s.clone();
    let mut out = Vec::new();
    while let Some(root) = unvisited.first() {
        let mut comp = VertexSet::empty(g.n);
        let mut stack = vec![root];
        unvisited.remove(root);
        comp.insert(root);
        while let Some(u) = stack.pop() {
            let row = g.row(u);
            let fresh: Vec<usize> = Ones::new(row).filter(|&w| unvisited.contains(w)).collect();
            for w in fresh {
                unvisited.remove(w);
                comp.insert(w);
                stack.push(w);
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n > 0 && components(g).len() == 1
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns false if `a` and `b` were already in one set.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// True iff the subgraph induced by `s` is acyclic.
pub fn induces_forest(g: &Graph, s: &VertexSet) -> bool {
    let mut dsu = DisjointSets::new(g.n);
    for u in s.iter() {
        for v in g.neighbors(u) {
            if v > u && s.contains(v) && !dsu.union(u, v) {
                return false;
            }
        }
    }
    true
}

/// True iff the subgraph induced by `s` is a disjoint union of paths.
pub fn induces_linear_forest(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.induced_degree(v, s) <= 2) && induces_forest(g, s)
}
