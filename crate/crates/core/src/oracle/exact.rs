//! Exact decision of equitable k-tree-colorability by backtracking.
//!
//! Vertices are assigned in index order. A vertex may join any class that has
//! already been opened, or the first unopened one (classes are interchangeable,
//! so opening order fixes their labels). A class of size `⌈n/k⌉` consumes one of
//! the `n mod k` large slots. Adding a vertex to a class is rejected when two of
//! its neighbors there already share a component, which is exactly when the
//! induced subgraph would gain a cycle.

use crate::coloring::{Route, TreeColoring};
use crate::graph::Graph;
use crate::{Error, Result};

pub const DEFAULT_CAP: usize = 12;
/// Hard limit imposed by the 64-bit class masks.
pub const MAX_CAP: usize = 64;

struct Search {
    adj: Vec<u64>,
    n: usize,
    k: usize,
    lo: usize,
    hi: usize,
    large_slots: usize,
    large_used: usize,
    classes: Vec<u64>,
    sizes: Vec<usize>,
    opened: usize,
}

impl Search {
    /// Vertices reachable from `start` inside `mask`.
    fn reach(&self, start: usize, mask: u64) -> u64 {
        let mut comp = 1u64 << start;
        loop {
            let mut next = comp;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.adj[v] & mask;
            }
            if next == comp {
                return comp;
            }
            comp = next;
        }
    }

    fn closes_cycle(&self, class: u64, v: usize) -> bool {
        let nb = self.adj[v] & class;
        if nb.count_ones() < 2 {
            return false;
        }
        let mut rest = nb;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            let comp = self.reach(u, class);
            if (comp & nb).count_ones() >= 2 {
                return true;
            }
            rest &= !comp;
        }
        false
    }

    fn feasible(&self, next: usize) -> bool {
        let deficit: usize = self.sizes.iter().map(|&s| self.lo.saturating_sub(s)).sum();
        deficit <= self.n - next
    }

    fn assign(&mut self, v: usize) -> bool {
        if v == self.n {
            return true;
        }
        if !self.feasible(v) {
            return false;
        }
        let limit = (self.opened + 1).min(self.k);
        for c in 0..limit {
            let size = self.sizes[c] + 1;
            if size > self.hi {
                continue;
            }
            let takes_large = self.hi > self.lo && size == self.hi;
            if takes_large && self.large_used == self.large_slots {
                continue;
            }
            if self.closes_cycle(self.classes[c], v) {
                continue;
            }
            let opens = c == self.opened;
            self.classes[c] |= 1 << v;
            self.sizes[c] = size;
            self.large_used += takes_large as usize;
            self.opened += opens as usize;
            if self.assign(v + 1) {
                return true;
            }
            self.opened -= opens as usize;
            self.large_used -= takes_large as usize;
            self.sizes[c] -= 1;
            self.classes[c] &= !(1 << v);
        }
        false
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if cap > MAX_CAP {
        return Err(Error::InvalidArgument(format!(
            "cap {cap} exceeds the hard limit {MAX_CAP}"
        )));
    }
    if g.n() > cap {
        return Err(Error::CapExceeded { n: g.n(), cap });
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

/// Decides whether `g` has an equitable `k`-tree-coloring and returns a witness
/// when it does.
pub fn exists_equitable_k_tree_coloring(
    g: &Graph,
    k: usize,
    cap: usize,
) -> Result<Option<TreeColoring>> {
    check_cap(g, cap)?;
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k={k} outside 1..={n}")));
    }
    let adj = (0..n).map(|v| g.row(v)[0]).collect();
    let mut search = Search {
        adj,
        n,
        k,
        lo: n / k,
        hi: n.div_ceil(k),
        large_slots: n % k,
        large_used: 0,
        classes: vec![0; k],
        sizes: vec![0; k],
        opened: 0,
    };
    if !search.assign(0) {
        return Ok(None);
    }
    let classes = search
        .classes
        .iter()
        .map(|&mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    TreeColoring::from_class_lists(g, classes, Route::External).map(Some)
}

/// The least `k` admitting an equitable `k`-tree-coloring. Every `k` from 1 up
/// is tried in turn.
pub fn exact_a_eq(g: &Graph, cap: usize) -> Result<usize> {
    check_cap(g, cap)?;
    for k in 1..=g.n() {
        if exists_equitable_k_tree_coloring(g, k, cap)?.is_some() {
            return Ok(k);
        }
    }
    unreachable!("singleton classes always form an equitable tree-coloring")
}
