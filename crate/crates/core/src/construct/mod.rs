//! Equitable Γ(G)-tree-colorings for graphs with Δ(G) ≥ |G|/2.
//!
//! Every input in scope falls into exactly one degree window relative to the
//! order `n`, and each window has its own construction driven by matchings,
//! paths or cycles of the complement graph:
//!
//! | regime          | window (integer form)        | classes                      |
//! |-----------------|------------------------------|------------------------------|
//! | `CompleteLike`  | Δ = n − 1                    | pairs and at most one single |
//! | `T1`            | 3Δ ≥ 2n − 3                  | β triples, μ pairs           |
//! | `T2_*`          | 2n − 6 ≤ 3Δ < 2n − 3         | triples, plus one 4- or 2-set|
//! | `T3*`           | 3Δ < 2n − 6, 2Δ ≥ n          | β quadruples, μ triples      |
//!
//! Γ(G) = ⌈(Δ + 1) / 2⌉ throughout. All window tests are exact integer
//! comparisons.

mod build;

pub use build::{
    color_complete_like, color_theorem1, color_theorem2, color_theorem3, theorem3_allocation,
    ComponentAllocation, Theorem3Allocation,
};

use crate::coloring::TreeColoring;
use crate::graph::{complement, degree_stats, is_connected, Graph};
use crate::oracle::verify;
use crate::{Error, Result};

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    CompleteLike,
    T1,
    T2_3k,
    T2_3k1,
    T2_3k2,
    T3Connected,
    T3Disconnected,
    OutOfScope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegimePlan {
    pub regime: Regime,
    pub n: usize,
    pub delta_max: usize,
    pub gamma: usize,
    /// Number of large classes: triples in `T1`, quadruples in `T3*`; zero elsewhere.
    pub beta: usize,
    /// Number of small classes: pairs in `T1`, triples in `T3*`; zero elsewhere.
    pub mu: usize,
    /// `⌊n / 3⌋` for the `T2_*` regimes.
    pub k: Option<usize>,
}

impl RegimePlan {
    /// Class sizes the construction for this regime produces, largest first.
    /// Empty for `OutOfScope`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let rep = |size: usize, count: usize| std::iter::repeat_n(size, count);
        match self.regime {
            Regime::CompleteLike => rep(2, self.n / 2).chain(rep(1, self.n % 2)).collect(),
            Regime::T1 => rep(3, self.beta).chain(rep(2, self.mu)).collect(),
            Regime::T2_3k => rep(3, self.k.unwrap_or(0)).collect(),
            Regime::T2_3k1 => rep(4, 1).chain(rep(3, self.k.unwrap_or(1) - 1)).collect(),
            Regime::T2_3k2 => rep(3, self.k.unwrap_or(0)).chain(rep(2, 1)).collect(),
            Regime::T3Connected | Regime::T3Disconnected => {
                rep(4, self.beta).chain(rep(3, self.mu)).collect()
            }
            Regime::OutOfScope => Vec::new(),
        }
    }

    pub fn in_scope(&self) -> bool {
        self.regime != Regime::OutOfScope
    }
}

/// Γ(G) = ⌈(Δ(G) + 1) / 2⌉.
pub fn gamma(g: &Graph) -> Result<usize> {
    Ok(gamma_of(degree_stats(g)?.delta_max))
}

pub fn gamma_of(delta_max: usize) -> usize {
    (delta_max + 2) / 2
}

fn sub(a: usize, b: usize, what: &str) -> Result<usize> {
    a.checked_sub(b)
        .ok_or_else(|| Error::ConstructionFailed(format!("negative {what} ({a} - {b})")))
}

/// Regime plan from the order, the maximum degree and (only consulted in the
/// `T3` window) whether the complement is connected.
pub fn plan_for(n: usize, delta_max: usize, complement_connected: bool) -> Result<RegimePlan> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if delta_max >= n {
        return Err(Error::InvalidArgument(format!(
            "Δ={delta_max} impossible for n={n}"
        )));
    }
    let gamma = gamma_of(delta_max);
    let mut plan = RegimePlan {
        regime: Regime::OutOfScope,
        n,
        delta_max,
        gamma,
        beta: 0,
        mu: 0,
        k: None,
    };
    let (d3, n2) = (3 * delta_max, 2 * n);
    if 2 * delta_max < n {
        return Ok(plan);
    }
    if d3 + 3 >= n2 {
        if delta_max == n - 1 {
            plan.regime = Regime::CompleteLike;
        } else {
            plan.regime = Regime::T1;
            plan.beta = sub(n, 2 * gamma, "beta")?;
            plan.mu = sub(3 * gamma, n, "mu")?;
        }
    } else if d3 + 6 >= n2 {
        plan.k = Some(n / 3);
        plan.regime = match n % 3 {
            0 => Regime::T2_3k,
            1 => Regime::T2_3k1,
            _ => Regime::T2_3k2,
        };
    } else {
        plan.regime = if complement_connected {
            Regime::T3Connected
        } else {
            Regime::T3Disconnected
        };
        plan.beta = sub(n, 3 * gamma, "beta")?;
        plan.mu = sub(4 * gamma, n, "mu")?;
    }
    Ok(plan)
}

pub fn classify_regime(g: &Graph) -> Result<RegimePlan> {
    plan_with(g, &complement(g))
}

fn plan_with(g: &Graph, gc: &Graph) -> Result<RegimePlan> {
    let stats = degree_stats(g)?;
    let plan = plan_for(stats.n, stats.delta_max, true)?;
    if plan.regime == Regime::T3Connected && !is_connected(gc) {
        plan_for(stats.n, stats.delta_max, false)
    } else {
        Ok(plan)
    }
}

/// Runs strict verification and the class-count check every construction
/// must pass before it is handed out.
pub(crate) fn checked(g: &Graph, plan: &RegimePlan, c: TreeColoring) -> Result<TreeColoring> {
    let report = verify(g, &c, true);
    if !report.ok || c.class_count() != plan.gamma {
        return Err(Error::ConstructionFailed(format!(
            "{:?} produced {} classes for Γ={}: {}",
            plan.regime,
            c.class_count(),
            plan.gamma,
            report.summary()
        )));
    }
    Ok(c)
}

/// An equitable partition of `V(g)` into exactly Γ(g) classes, each inducing a
/// linear forest. Fails with `OutOfScope` when Δ(g) < n/2.
pub fn equitable_tree_coloring(g: &Graph) -> Result<TreeColoring> {
    let gc = complement(g);
    let plan = plan_with(g, &gc)?;
    let c = match plan.regime {
        Regime::OutOfScope => {
            return Err(Error::OutOfScope {
                n: plan.n,
                delta_max: plan.delta_max,
            })
        }
        Regime::CompleteLike => build::complete_like(g),
        Regime::T1 => build::triples_and_pairs(g, &gc, &plan),
        Regime::T2_3k | Regime::T2_3k1 | Regime::T2_3k2 => {
            build::triples_with_remainder(g, &gc, &plan)
        }
        Regime::T3Connected => build::blocks_from_path(g, &gc, &plan),
        Regime::T3Disconnected => build::blocks_from_cycles(g, &gc, &plan),
    }?;
    checked(g, &plan, c)
}
