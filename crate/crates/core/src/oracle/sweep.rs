use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;

use crate::construct::{equitable_tree_coloring, gamma_of};
use crate::graph::{degree_stats, Graph};
use crate::oracle::{exact_a_eq, verify};
use crate::{Error, Result};

/// Largest order the exhaustive sweep accepts (2^21 labeled graphs).
pub const SWEEP_MAX_N: usize = 7;

const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub n: usize,
    pub graphs_tested: u64,
    pub in_regime: u64,
    /// Adjacency masks of in-regime graphs whose construction failed or did
    /// not verify.
    pub construction_failures: Vec<u64>,
    /// Adjacency masks of graphs with a_eq > Γ.
    pub conjecture_violations: Vec<u64>,
}

impl SweepReport {
    pub fn failures(&self) -> usize {
        self.construction_failures.len() + self.conjecture_violations.len()
    }

    pub fn is_success(&self) -> bool {
        self.failures() == 0
    }

    fn merge(&mut self, other: SweepReport) {
        self.graphs_tested += other.graphs_tested;
        self.in_regime += other.in_regime;
        self.construction_failures
            .extend(other.construction_failures);
        self.conjecture_violations
            .extend(other.conjecture_violations);
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for mask in self
            .construction_failures
            .iter()
            .chain(&self.conjecture_violations)
        {
            writeln!(f, "FAIL {mask:x}")?;
        }
        writeln!(
            f,
            "SWEEP n={} tested={} regime={} failures={}",
            self.n,
            self.graphs_tested,
            self.in_regime,
            self.failures()
        )
    }
}

/// The labeled graph on `n` vertices whose edges are the set bits of `mask`,
/// with bit `b` standing for the `b`-th pair `(i, j)`, `i < j`, in
/// lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    assert!(n <= 11, "masks cover at most 11 vertices");
    let mut rows = vec![0u64; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Graph::from_small_rows(rows)
}

fn check_one(n: usize, mask: u64, regime_only: bool, report: &mut SweepReport) {
    let g = graph_from_mask(n, mask);
    let stats = degree_stats(&g).expect("n >= 1");
    let gamma = gamma_of(stats.delta_max);
    report.graphs_tested += 1;
    if 2 * stats.delta_max >= n {
        report.in_regime += 1;
        let ok = match equitable_tree_coloring(&g) {
            Ok(c) => c.class_count() == gamma && verify(&g, &c, true).ok,
            Err(_) => false,
        };
        if !ok {
            report.construction_failures.push(mask);
        }
    }
    if !regime_only {
        match exact_a_eq(&g, n) {
            Ok(a) if a <= gamma => {}
            _ => report.conjecture_violations.push(mask),
        }
    }
}

/// Runs every labeled graph of order `n` through the construction (in-regime
/// graphs) and, unless `regime_only`, through the exact oracle to check
/// a_eq ≤ Γ. Work is split into mask chunks across `threads` workers.
pub fn sweep_conjecture(n: usize, regime_only: bool, threads: usize) -> Result<SweepReport> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > SWEEP_MAX_N {
        return Err(Error::CapExceeded {
            n,
            cap: SWEEP_MAX_N,
        });
    }
    let total = 1u64 << (n * (n - 1) / 2);
    let next = AtomicU64::new(0);
    let merged = Mutex::new(SweepReport {
        n,
        ..SweepReport::default()
    });
    thread::scope(|s| {
        for _ in 0..threads.max(1) {
            s.spawn(|| {
                let mut local = SweepReport::default();
                loop {
                    let start = next.fetch_add(CHUNK, Ordering::Relaxed);
                    if start >= total {
                        break;
                    }
                    for mask in start..(start + CHUNK).min(total) {
                        check_one(n, mask, regime_only, &mut local);
                    }
                }
                merged.lock().unwrap().merge(local);
            });
        }
    });
    let mut report = merged.into_inner().unwrap();
    report.construction_failures.sort_unstable();
    report.conjecture_violations.sort_unstable();
    Ok(report)
}
