//! Seeded graph builders and brute-force reference computations shared by
//! the integration tests. Nothing here calls into the matching, path or
//! construction code under test.
#![allow(dead_code)]

use arbor_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edge_list(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(10, e).unwrap()
}

/// Two triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
pub fn bowtie_bridge() -> Graph {
    Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
}

/// Vertex-disjoint union, relabeling each part after the previous ones.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut edges = Vec::new();
    let mut off = 0;
    for g in parts {
        edges.extend(g.edges().map(|(u, v)| (u + off, v + off)));
        off += g.n();
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// A Hamiltonian cycle in random vertex order plus each other pair with
/// probability `p`.
pub fn hamiltonian_plus(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// Random graph whose maximum degree is exactly `delta`: a star on `delta`
/// random leaves, then random edges between vertices still below `delta`.
pub fn with_max_degree(rng: &mut ChaCha8Rng, n: usize, delta: usize, p: f64) -> Graph {
    assert!(delta < n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let hub = order[0];
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for &v in &order[1..=delta] {
        edges.push((hub, v));
        deg[hub] += 1;
        deg[v] += 1;
    }
    for u in 0..n {
        for v in u + 1..n {
            if u == hub || v == hub || deg[u] >= delta || deg[v] >= delta {
                continue;
            }
            if rng.random_bool(p) {
                edges.push((u, v));
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// Adjacency rows as bitmasks, for graphs on at most 64 vertices.
pub fn small_rows(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect()
}

/// Maximum matching size by branching on the lowest remaining vertex:
/// either it stays unmatched or it is matched to one of its neighbors.
pub fn brute_matching(rows: &[u64]) -> usize {
    fn go(rows: &[u64], avail: u64) -> usize {
        if avail.count_ones() < 2 {
            return 0;
        }
        let v = avail.trailing_zeros() as usize;
        let rest = avail & !(1 << v);
        let cap = (avail.count_ones() / 2) as usize;
        let mut best = go(rows, rest);
        let mut nb = rows[v] & rest;
        while nb != 0 && best < cap {
            let u = nb.trailing_zeros();
            nb &= nb - 1;
            best = best.max(1 + go(rows, rest & !(1 << u)));
        }
        best
    }
    let all = if rows.len() == 64 {
        u64::MAX
    } else {
        (1u64 << rows.len()) - 1
    };
    go(rows, all)
}

/// Length of every simple cycle, each counted once per (start, direction);
/// only the set of lengths is meaningful.
pub fn cycle_lengths(g: &Graph) -> Vec<usize> {
    fn dfs(
        g: &Graph,
        start: usize,
        v: usize,
        seen: &mut Vec<bool>,
        len: usize,
        out: &mut Vec<usize>,
    ) {
        for u in g.neighbors(v) {
            if u == start && len >= 3 {
                out.push(len);
            } else if u > start && !seen[u] {
                seen[u] = true;
                dfs(g, start, u, seen, len + 1, out);
                seen[u] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        dfs(g, s, s, &mut seen, 1, &mut out);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Edge count of a longest simple path, by exhaustive search.
pub fn longest_path_edges(g: &Graph) -> usize {
    fn dfs(g: &Graph, v: usize, seen: &mut Vec<bool>, len: usize) -> usize {
        let mut best = len;
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                best = best.max(dfs(g, u, seen, len + 1));
                seen[u] = false;
            }
        }
        best
    }
    (0..g.n())
        .map(|s| {
            let mut seen = vec![false; g.n()];
            seen[s] = true;
            dfs(g, s, &mut seen, 0)
        })
        .max()
        .unwrap_or(0)
}

/// Whether the subgraph induced by `set` (a bitmask) has a cycle, by DFS
/// looking for a non-tree edge.
pub fn has_cycle_within(rows: &[u64], set: u64) -> bool {
    let mut visited = 0u64;
    let mut rest = set;
    while rest != 0 {
        let root = rest.trailing_zeros() as usize;
        let mut stack = vec![(root, usize::MAX)];
        visited |= 1 << root;
        while let Some((v, parent)) = stack.pop() {
            let mut nb = rows[v] & set;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if u == parent {
                    continue;
                }
                if visited >> u & 1 == 1 {
                    return true;
                }
                visited |= 1 << u;
                stack.push((u, v));
            }
        }
        rest &= !visited;
    }
    false
}

/// Whether every vertex of `set` has at most two neighbors inside it and
/// the induced subgraph is acyclic.
pub fn is_linear_forest_within(rows: &[u64], set: u64) -> bool {
    let mut s = set;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        if (rows[v] & set).count_ones() > 2 {
            return false;
        }
    }
    !has_cycle_within(rows, set)
}

pub fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Disjoint union of `a` and `b` plus every edge between them, so the
/// complement is the disjoint union of the two complements.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let u = disjoint_union(&[a.clone(), b.clone()]);
    let mut edges: Vec<(usize, usize)> = u.edges().collect();
    for x in 0..a.n() {
        for y in 0..b.n() {
            edges.push((x, a.n() + y));
        }
    }
    Graph::from_edge_list(u.n(), edges).unwrap()
}

/// A random graph on `n ≥ 2` vertices with Δ ≥ n/2, drawn from one of three
/// shapes so every degree window and both complement connectivities show up.
pub fn in_regime(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    match rng.random_range(0..3) {
        0 => {
            let delta = rng.random_range(n.div_ceil(2)..n);
            let p = rng.random_range(0.0..1.0f64).powi(2);
            with_max_degree(rng, n, delta, p)
        }
        1 => {
            let a = rng.random_range(n / 3..=n / 2).max(1);
            let (pa, pb) = (rng.random_range(0.0..0.3), rng.random_range(0.0..0.3));
            let ga = gnp(rng, a, pa);
            let gb = gnp(rng, n - a, pb);
            join(&ga, &gb)
        }
        _ => {
            let p = rng.random_range(0.1..0.9);
            let g = gnp(rng, n, p);
            let hub = (0..n).max_by_key(|&v| g.degree(v)).unwrap();
            let mut edges: Vec<(usize, usize)> = g.edges().collect();
            let mut missing: Vec<usize> = (0..n)
                .filter(|&v| v != hub && !g.has_edge(hub, v))
                .collect();
            missing.shuffle(rng);
            let need = n.div_ceil(2).saturating_sub(g.degree(hub));
            edges.extend(missing[..need].iter().map(|&v| (hub, v)));
            Graph::from_edge_list(n, edges).unwrap()
        }
    }
}
