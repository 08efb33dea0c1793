use crate::bitset::VertexSet;
use crate::coloring::{Route, TreeColoring};
use crate::construct::{checked, classify_regime, Regime, RegimePlan};
use crate::graph::{complement, components, Graph};
use crate::matching::{matching_of_size, Matching};
use crate::paths::{long_cycle, long_path, CycleWitness};
use crate::{Error, Result};

fn precondition(plan: &RegimePlan, wanted: &str) -> Error {
    Error::Precondition(format!(
        "n={} Δ={} classifies as {:?}, not {wanted}",
        plan.n, plan.delta_max, plan.regime
    ))
}

/// Hands out unused vertices in ascending index order.
struct Pool {
    used: VertexSet,
    cursor: usize,
}

impl Pool {
    fn new(n: usize) -> Self {
        Pool {
            used: VertexSet::empty(n),
            cursor: 0,
        }
    }

    fn take_all(&mut self, vs: &[usize]) {
        vs.iter().for_each(|&v| self.used.insert(v));
    }

    /// Smallest vertex not yet used and not in `exclude`.
    fn next_excluding(&mut self, exclude: &VertexSet) -> Option<usize> {
        let n = self.used.universe();
        while self.cursor < n && self.used.contains(self.cursor) {
            self.cursor += 1;
        }
        let v = (self.cursor..n).find(|&v| !self.used.contains(v) && !exclude.contains(v))?;
        self.used.insert(v);
        Some(v)
    }

    fn next(&mut self) -> Option<usize> {
        let none = VertexSet::empty(self.used.universe());
        self.next_excluding(&none)
    }

    fn remaining(&self) -> Vec<usize> {
        (0..self.used.universe())
            .filter(|&v| !self.used.contains(v))
            .collect()
    }
}

fn exhausted(what: &str) -> Error {
    Error::ConstructionFailed(format!("ran out of vertices for {what}"))
}

fn matched_vertices(n: usize, m: &Matching) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for &(u, v) in &m.pairs {
        s.insert(u);
        s.insert(v);
    }
    s
}

pub(crate) fn complete_like(g: &Graph) -> Result<TreeColoring> {
    let n = g.n();
    let classes = (0..n)
        .step_by(2)
        .map(|i| (i..(i + 2).min(n)).collect())
        .collect();
    TreeColoring::from_class_lists(g, classes, Route::CompleteLike)
}

/// Γ classes of one or two vertices, in vertex order. Requires Δ(g) = n − 1.
pub fn color_complete_like(g: &Graph) -> Result<TreeColoring> {
    let plan = classify_regime(g)?;
    if plan.regime != Regime::CompleteLike {
        return Err(precondition(&plan, "CompleteLike"));
    }
    checked(g, &plan, complete_like(g)?)
}

/// β triples `{x, y, z}` with `xy` a complement edge and `z` unmatched, then μ
/// pairs of whatever is left.
pub(crate) fn triples_and_pairs(g: &Graph, gc: &Graph, plan: &RegimePlan) -> Result<TreeColoring> {
    let n = g.n();
    let delta_c = n - 1 - plan.delta_max;
    let m = matching_of_size(gc, delta_c)?;
    let in_m = matched_vertices(n, &m);
    let mut pool = Pool::new(n);
    let mut classes = Vec::with_capacity(plan.gamma);
    for &(x, y) in m.pairs.iter().take(plan.beta) {
        pool.take_all(&[x, y]);
        let z = pool
            .next_excluding(&in_m)
            .ok_or_else(|| exhausted("triples"))?;
        classes.push(vec![x, y, z]);
    }
    let rest = pool.remaining();
    if rest.len() != 2 * plan.mu {
        return Err(exhausted("pairs"));
    }
    classes.extend(rest.chunks(2).map(<[usize]>::to_vec));
    TreeColoring::from_class_lists(g, classes, Route::T1)
}

/// Requires 2n/3 − 1 ≤ Δ(g) ≤ n − 2.
pub fn color_theorem1(g: &Graph) -> Result<TreeColoring> {
    let plan = classify_regime(g)?;
    if plan.regime != Regime::T1 {
        return Err(precondition(&plan, "T1"));
    }
    checked(g, &plan, triples_and_pairs(g, &complement(g), &plan)?)
}

/// Classes for `n = 3k + 1` from a complement matching of size `k + 1`.
///
/// Prefers merging two matched pairs joined by a complement edge into the
/// four-vertex class. Without such an edge (or when `force_fallback` is set) the
/// first pair is combined with the two smallest unmatched vertices instead.
pub(crate) fn three_k_plus_one_classes(
    gc: &Graph,
    m: &Matching,
    force_fallback: bool,
) -> Result<(Vec<Vec<usize>>, bool)> {
    let n = gc.n();
    let pairs = &m.pairs;
    let crossing = if force_fallback {
        None
    } else {
        (0..pairs.len()).find_map(|p| {
            let (a0, a1) = pairs[p];
            (0..pairs.len()).filter(|&q| q != p).find_map(|q| {
                let (b0, b1) = pairs[q];
                [a0, a1]
                    .iter()
                    .any(|&a| gc.has_edge(a, b0) || gc.has_edge(a, b1))
                    .then_some((p, q))
            })
        })
    };
    let in_m = matched_vertices(n, m);
    let mut pool = Pool::new(n);
    let mut classes = Vec::with_capacity(pairs.len() - 1);
    match crossing {
        Some((p, q)) => {
            let mut first = vec![pairs[p].0, pairs[p].1, pairs[q].0, pairs[q].1];
            first.sort_unstable();
            pool.take_all(&first);
            classes.push(first);
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if i == p || i == q {
                    continue;
                }
                pool.take_all(&[x, y]);
                let z = pool
                    .next_excluding(&in_m)
                    .ok_or_else(|| exhausted("triples"))?;
                classes.push(vec![x, y, z]);
            }
            Ok((classes, false))
        }
        None => {
            let (x, y) = pairs[0];
            pool.take_all(&[x, y]);
            let z1 = pool
                .next_excluding(&in_m)
                .ok_or_else(|| exhausted("fallback class"))?;
            let z2 = pool
                .next_excluding(&in_m)
                .ok_or_else(|| exhausted("fallback class"))?;
            classes.push(vec![x, y, z1, z2]);
            let (inner, last) = pairs[1..].split_at(pairs.len() - 2);
            debug_assert_eq!(last.len(), 1);
            for &(x, y) in inner {
                pool.take_all(&[x, y]);
            }
            // The last pair is left unassigned and feeds the extra vertices.
            for &(x, y) in inner {
                let z = pool.next().ok_or_else(|| exhausted("triples"))?;
                classes.push(vec![x, y, z]);
            }
            Ok((classes, true))
        }
    }
}

pub(crate) fn triples_with_remainder(
    g: &Graph,
    gc: &Graph,
    plan: &RegimePlan,
) -> Result<TreeColoring> {
    let n = g.n();
    let k = plan.k.ok_or_else(|| precondition(plan, "T2"))?;
    let (classes, route) = match plan.regime {
        Regime::T2_3k | Regime::T2_3k2 => {
            let m = matching_of_size(gc, k)?;
            let in_m = matched_vertices(n, &m);
            let mut pool = Pool::new(n);
            let mut classes = Vec::with_capacity(k + 1);
            for &(x, y) in &m.pairs {
                pool.take_all(&[x, y]);
                let z = pool
                    .next_excluding(&in_m)
                    .ok_or_else(|| exhausted("triples"))?;
                classes.push(vec![x, y, z]);
            }
            let rest = pool.remaining();
            let route = if plan.regime == Regime::T2_3k {
                Route::T2_3k
            } else {
                classes.push(rest.clone());
                Route::T2_3k2
            };
            let expected = if plan.regime == Regime::T2_3k { 0 } else { 2 };
            if rest.len() != expected {
                return Err(exhausted("the final class"));
            }
            (classes, route)
        }
        Regime::T2_3k1 => {
            let m = matching_of_size(gc, k + 1)?;
            let (classes, fallback) = three_k_plus_one_classes(gc, &m, false)?;
            (classes, Route::T2_3k1 { fallback })
        }
        _ => return Err(precondition(plan, "T2")),
    };
    TreeColoring::from_class_lists(g, classes, route)
}

/// Requires 2n/3 − 2 ≤ Δ(g) < 2n/3 − 1 and Δ(g) ≥ n/2.
pub fn color_theorem2(g: &Graph) -> Result<TreeColoring> {
    let plan = classify_regime(g)?;
    if !matches!(plan.regime, Regime::T2_3k | Regime::T2_3k1 | Regime::T2_3k2) {
        return Err(precondition(&plan, "T2"));
    }
    checked(g, &plan, triples_with_remainder(g, &complement(g), &plan)?)
}

/// Complement connected: cut a path with 2δ(G^c) edges into β blocks of four
/// and μ blocks of two; each block of two gets one leftover vertex.
pub(crate) fn blocks_from_path(g: &Graph, gc: &Graph, plan: &RegimePlan) -> Result<TreeColoring> {
    let n = g.n();
    let delta_c = n - 1 - plan.delta_max;
    let path = long_path(gc, 2 * delta_c)?;
    let x = &path.seq;
    let needed = 4 * plan.beta + 2 * plan.mu;
    if x.len() < needed {
        return Err(Error::ConstructionFailed(format!(
            "path has {} vertices, {needed} needed",
            x.len()
        )));
    }
    let mut pool = Pool::new(n);
    pool.take_all(&x[..needed]);
    let mut classes: Vec<Vec<usize>> = x[..4 * plan.beta]
        .chunks(4)
        .map(<[usize]>::to_vec)
        .collect();
    for pair in x[4 * plan.beta..needed].chunks(2) {
        let y = pool.next().ok_or_else(|| exhausted("triples"))?;
        classes.push(vec![pair[0], pair[1], y]);
    }
    TreeColoring::from_class_lists(g, classes, Route::T3Connected)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentAllocation {
    pub vertices: VertexSet,
    /// Minimum degree of the component.
    pub min_degree: usize,
    pub cycle: CycleWitness,
    /// Number of four-vertex blocks cut from the start of the cycle.
    pub blocks: usize,
}

impl ComponentAllocation {
    pub fn block(&self, j: usize) -> &[usize] {
        &self.cycle.seq[4 * j..4 * j + 4]
    }

    /// Cycle vertices after the blocks, a contiguous stretch of the cycle.
    pub fn leftover(&self) -> &[usize] {
        &self.cycle.seq[4 * self.blocks..]
    }

    /// Consecutive leftover vertices, paired along the cycle.
    pub fn leftover_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.leftover().chunks_exact(2).map(|p| (p[0], p[1]))
    }
}

/// Per-component cycles of a disconnected complement and the blocks cut from
/// them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem3Allocation {
    pub components: Vec<ComponentAllocation>,
    pub beta: usize,
    pub mu: usize,
}

impl Theorem3Allocation {
    pub fn total_blocks(&self) -> usize {
        self.components.iter().map(|c| c.blocks).sum()
    }

    pub fn available_pairs(&self) -> usize {
        self.components.iter().map(|c| c.leftover().len() / 2).sum()
    }
}

fn allocate(gc: &Graph, plan: &RegimePlan) -> Result<Theorem3Allocation> {
    let mut remaining = plan.beta;
    let mut out = Vec::new();
    for comp in components(gc) {
        let cycle = long_cycle(gc, &comp)?;
        let blocks = (cycle.len() / 4).min(remaining);
        remaining -= blocks;
        let min_degree = comp.iter().map(|v| gc.degree(v)).min().unwrap_or(0);
        out.push(ComponentAllocation {
            vertices: comp,
            min_degree,
            cycle,
            blocks,
        });
    }
    let alloc = Theorem3Allocation {
        components: out,
        beta: plan.beta,
        mu: plan.mu,
    };
    if remaining > 0 {
        return Err(Error::AllocationFailed {
            resource: "four-vertex blocks",
            available: plan.beta - remaining,
            required: plan.beta,
        });
    }
    if alloc.available_pairs() < plan.mu {
        return Err(Error::AllocationFailed {
            resource: "leftover complement edges",
            available: alloc.available_pairs(),
            required: plan.mu,
        });
    }
    Ok(alloc)
}

/// The block allocation used for a graph whose complement is disconnected.
pub fn theorem3_allocation(g: &Graph) -> Result<Theorem3Allocation> {
    let plan = classify_regime(g)?;
    if plan.regime != Regime::T3Disconnected {
        return Err(precondition(&plan, "T3Disconnected"));
    }
    allocate(&complement(g), &plan)
}

/// Complement disconnected: β blocks of four consecutive cycle vertices, plus μ
/// classes made of a leftover cycle edge and one unused vertex.
pub(crate) fn blocks_from_cycles(g: &Graph, gc: &Graph, plan: &RegimePlan) -> Result<TreeColoring> {
    let alloc = allocate(gc, plan)?;
    let mut pool = Pool::new(g.n());
    let mut blocks = Vec::with_capacity(plan.beta);
    for comp in &alloc.components {
        for j in 0..comp.blocks {
            pool.take_all(comp.block(j));
            blocks.push(comp.block(j).to_vec());
        }
    }
    let pairs: Vec<(usize, usize)> = alloc
        .components
        .iter()
        .flat_map(ComponentAllocation::leftover_pairs)
        .take(plan.mu)
        .collect();
    for &(x, y) in &pairs {
        pool.take_all(&[x, y]);
    }
    let mut classes = Vec::with_capacity(plan.gamma);
    for &(x, y) in &pairs {
        let z = pool.next().ok_or_else(|| exhausted("triples"))?;
        classes.push(vec![x, y, z]);
    }
    classes.extend(blocks);
    TreeColoring::from_class_lists(g, classes, Route::T3Disconnected)
}

/// Requires Δ(g) < 2n/3 − 2 and Δ(g) ≥ n/2.
pub fn color_theorem3(g: &Graph) -> Result<TreeColoring> {
    let plan = classify_regime(g)?;
    let gc = complement(g);
    let c = match plan.regime {
        Regime::T3Connected => blocks_from_path(g, &gc, &plan)?,
        Regime::T3Disconnected => blocks_from_cycles(g, &gc, &plan)?,
        _ => return Err(precondition(&plan, "T3")),
    };
    checked(g, &plan, c)
}
