//! Path and cycle witnesses.
//!
//! All searches scan neighbors in ascending index order, so the returned
//! witnesses are deterministic functions of the input graph.

use crate::bitset::VertexSet;
use crate::graph::{components_within, degree_stats, is_connected, Graph, GraphId};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub host: GraphId,
    pub seq: Vec<usize>,
}

impl PathWitness {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.seq.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> bool {
        self.host == g.id()
            && !self.seq.is_empty()
            && distinct(g.n(), &self.seq)
            && self.seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// A cycle through `seq` in order; the closing edge `seq[last] ~ seq[0]` is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub host: GraphId,
    pub seq: Vec<usize>,
}

impl CycleWitness {
    /// Number of edges, which equals the number of vertices.
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> bool {
        self.host == g.id()
            && self.seq.len() >= 3
            && distinct(g.n(), &self.seq)
            && self.seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && g.has_edge(self.seq[self.seq.len() - 1], self.seq[0])
    }
}

fn distinct(n: usize, seq: &[usize]) -> bool {
    let mut seen = vec![false; n];
    seq.iter()
        .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// Smallest neighbor of `v` inside `allowed` and outside `on_path`.
fn free_neighbor(g: &Graph, v: usize, allowed: &VertexSet, on_path: &VertexSet) -> Option<usize> {
    g.row(v)
        .iter()
        .zip(allowed.words().iter().zip(on_path.words()))
        .enumerate()
        .find_map(|(i, (&r, (&a, &p)))| {
            let w = r & a & !p;
            (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
        })
}

/// Greedily extends `seq` at both ends within `allowed` until neither end has a
/// neighbor off the path.
fn extend_both_ends(g: &Graph, seq: &mut Vec<usize>, allowed: &VertexSet, on_path: &mut VertexSet) {
    while let Some(w) = free_neighbor(g, *seq.last().unwrap(), allowed, on_path) {
        on_path.insert(w);
        seq.push(w);
    }
    let mut front = Vec::new();
    while let Some(w) = free_neighbor(g, *front.last().unwrap_or(&seq[0]), allowed, on_path) {
        on_path.insert(w);
        front.push(w);
    }
    if !front.is_empty() {
        front.reverse();
        front.append(seq);
        *seq = front;
    }
}

fn inextensible_within(g: &Graph, start: usize, allowed: &VertexSet) -> Vec<usize> {
    let mut seq = vec![start];
    let mut on_path = VertexSet::empty(g.n());
    on_path.insert(start);
    extend_both_ends(g, &mut seq, allowed, &mut on_path);
    seq
}

/// A path through `start` that neither end can extend.
pub fn inextensible_path(g: &Graph, start: usize) -> Result<PathWitness> {
    if start >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: start,
            n: g.n(),
        });
    }
    let seq = inextensible_within(g, start, &VertexSet::full(g.n()));
    let p = PathWitness { host: g.id(), seq };
    debug_assert!(p.validate(g));
    Ok(p)
}

/// A cycle inside `comp` with at least `δ(g[comp]) + 1` vertices.
///
/// Takes an inextensible path `v0 .. vk` in `g[comp]`; every neighbor of `v0`
/// lies on the path, so closing at the farthest one gives the cycle.
pub fn long_cycle(g: &Graph, comp: &VertexSet) -> Result<CycleWitness> {
    let start = comp.first().ok_or(Error::NotConnected)?;
    let mut min_degree = usize::MAX;
    for v in comp.iter() {
        let d = g.induced_degree(v, comp);
        if d < 2 {
            return Err(Error::DegreeTooLow {
                vertex: v,
                degree: d,
            });
        }
        min_degree = min_degree.min(d);
    }
    if components_within(g, comp).len() != 1 {
        return Err(Error::NotConnected);
    }
    let path = inextensible_within(g, start, comp);
    let v0 = path[0];
    let far = path
        .iter()
        .rposition(|&v| g.has_edge(v0, v))
        .expect("path endpoint has a neighbor on the path");
    let c = CycleWitness {
        host: g.id(),
        seq: path[..=far].to_vec(),
    };
    debug_assert!(c.validate(g));
    if c.len() < min_degree + 1 {
        return Err(Error::ConstructionFailed(format!(
            "cycle of length {} below induced minimum degree {} + 1",
            c.len(),
            min_degree
        )));
    }
    Ok(c)
}

/// Rearranges a saturated path `x0 .. xm` into a cycle through all its vertices.
fn close_path(g: &Graph, seq: &[usize]) -> Option<Vec<usize>> {
    let m = seq.len() - 1;
    let (first, last) = (seq[0], seq[m]);
    if g.has_edge(first, last) {
        return Some(seq.to_vec());
    }
    // Crossing pair: x0 ~ x(i+1) and xm ~ xi gives x0..xi, xm..x(i+1), x0.
    (0..m)
        .find(|&i| g.has_edge(first, seq[i + 1]) && g.has_edge(last, seq[i]))
        .map(|i| {
            let mut cycle = seq[..=i].to_vec();
            cycle.extend(seq[i + 1..].iter().rev());
            cycle
        })
}

/// A path with at least `target` edges in a connected graph with more than
/// `2δ(g)` vertices, for any `target ≤ 2δ(g)`.
///
/// Rotation–extension: extend greedily; when stuck below the target, the
/// endpoint degrees force a cycle through every path vertex, and connectivity
/// then yields an outside vertex that opens the cycle into a longer path.
pub fn long_path(g: &Graph, target: usize) -> Result<PathWitness> {
    let stats = degree_stats(g)?;
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    if g.n() <= 2 * stats.delta_min {
        return Err(Error::Precondition(format!(
            "long_path needs n > 2δ, got n={} δ={}",
            g.n(),
            stats.delta_min
        )));
    }
    if target > 2 * stats.delta_min {
        return Err(Error::Precondition(format!(
            "target {target} exceeds 2δ = {}",
            2 * stats.delta_min
        )));
    }

    let all = VertexSet::full(g.n());
    let mut on_path = VertexSet::empty(g.n());
    on_path.insert(0);
    let mut seq = vec![0];
    loop {
        extend_both_ends(g, &mut seq, &all, &mut on_path);
        let reached = seq.len() - 1;
        if reached >= target {
            break;
        }
        let stalled = Error::TargetUnreachable { target, reached };
        let cycle = close_path(g, &seq).ok_or(stalled.clone())?;
        // Find an outside vertex next to the cycle and open the cycle there.
        let (pos, outside) = cycle
            .iter()
            .enumerate()
            .find_map(|(i, &c)| {
                g.neighbors(c)
                    .find(|&w| !on_path.contains(w))
                    .map(|w| (i, w))
            })
            .ok_or(stalled)?;
        seq = Vec::with_capacity(cycle.len() + 1);
        seq.push(outside);
        seq.extend(cycle[pos..].iter().chain(&cycle[..pos]));
        on_path.insert(outside);
    }
    let p = PathWitness { host: g.id(), seq };
    debug_assert!(p.validate(g));
    Ok(p)
}
