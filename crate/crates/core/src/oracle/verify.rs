use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::VertexSet;
use crate::coloring::TreeColoring;
use crate::graph::{induces_forest, induces_linear_forest, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureKind {
    NotPartition,
    NotEquitable,
    NotForest,
    NotLinearForest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Failure {
    /// Offending class, or `None` for whole-coloring problems such as an
    /// uncovered vertex.
    pub class: Option<usize>,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub class_count: usize,
    pub size_histogram: BTreeMap<usize, usize>,
    pub failures: Vec<Failure>,
    /// Non-fatal findings: classes that are forests but not linear forests,
    /// when not in strict mode.
    pub advisories: Vec<Failure>,
}

impl VerifyReport {
    pub fn has(&self, class: Option<usize>, kind: FailureKind) -> bool {
        self.failures.contains(&Failure { class, kind })
    }

    pub fn summary(&self) -> String {
        let fails: Vec<String> = self.failures.iter().map(|f| f.to_string()).collect();
        format!(
            "ok={} classes={} [{}]",
            self.ok,
            self.class_count,
            fails.join(", ")
        )
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            Some(i) => write!(f, "class {i} {:?}", self.kind),
            None => write!(f, "coloring {:?}", self.kind),
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "VERIFY ok={} classes={}", self.ok, self.class_count)?;
        write!(f, "sizes")?;
        for (size, count) in &self.size_histogram {
            write!(f, " {size}:{count}")?;
        }
        writeln!(f)?;
        for fail in &self.failures {
            writeln!(f, "FAIL {fail}")?;
        }
        for warn in &self.advisories {
            writeln!(f, "WARN {warn}")?;
        }
        Ok(())
    }
}

/// Checks that `c` partitions `V(g)` into classes of size `⌊n/k⌋` or `⌈n/k⌉`,
/// each inducing a forest. In strict mode each class must induce a linear
/// forest too; otherwise linear-forest violations are only advisories.
pub fn verify(g: &Graph, c: &TreeColoring, strict: bool) -> VerifyReport {
    let n = g.n();
    let k = c.class_count();
    let mut failures = Vec::new();
    let mut advisories = Vec::new();
    let mut size_histogram = BTreeMap::new();
    for class in &c.classes {
        *size_histogram.entry(class.len()).or_insert(0) += 1;
    }

    let mut covered = VertexSet::empty(n);
    for (i, class) in c.classes.iter().enumerate() {
        if class.universe() != n || !class.is_disjoint(&covered) {
            failures.push(Failure {
                class: Some(i),
                kind: FailureKind::NotPartition,
            });
        }
        if class.universe() == n {
            covered.union_with(class);
        }
    }
    if c.n != n || covered.len() != n {
        failures.push(Failure {
            class: None,
            kind: FailureKind::NotPartition,
        });
    }

    if let Some(lo) = n.checked_div(k) {
        let hi = n.div_ceil(k);
        for (i, class) in c.classes.iter().enumerate() {
            if !(lo..=hi).contains(&class.len()) {
                failures.push(Failure {
                    class: Some(i),
                    kind: FailureKind::NotEquitable,
                });
            }
        }
    }

    for (i, class) in c.classes.iter().enumerate() {
        if class.universe() != n {
            continue;
        }
        let class_idx = Some(i);
        if !induces_forest(g, class) {
            failures.push(Failure {
                class: class_idx,
                kind: FailureKind::NotForest,
            });
        } else if !induces_linear_forest(g, class) {
            let f = Failure {
                class: class_idx,
                kind: FailureKind::NotLinearForest,
            };
            if strict {
                failures.push(f);
            } else {
                advisories.push(f);
            }
        }
    }

    VerifyReport {
        ok: failures.is_empty(),
        class_count: k,
        size_histogram,
        failures,
        advisories,
    }
}
