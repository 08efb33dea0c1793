//! End-to-end acceptance checks. Each check prints one `[PASS]` or `[FAIL]`
//! line. This target has its own `main` so the lines are always shown, and
//! the checks run one after another so the timing and memory check is not
//! disturbed by other work in the same process.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use arbor_core::construct::plan_for;
use arbor_core::graph::is_connected;
use arbor_core::io::{read_coloring, read_graph, write_coloring, write_graph};
use arbor_core::oracle::{
    exact_a_eq, exists_equitable_k_tree_coloring, gen_random, graph_from_mask, verify,
};
use arbor_core::{
    degree_stats, equitable_tree_coloring, long_cycle, long_path, maximum_matching, Graph, Regime,
    TreeColoring, VertexSet,
};
use rand::Rng;

const CONSTRUCTION_ORDERS: std::ops::RangeInclusive<usize> = 4..=7;
const CONSTRUCTION_TIME_LIMIT: Duration = Duration::from_secs(15 * 60);
const A_EQ_MAX_N: usize = 6;
const COMPLETE_ORDERS: std::ops::RangeInclusive<usize> = 2..=8;
const PROPERTY_SAMPLES: usize = 10_000;
const PROPERTY_MAX_N: usize = 60;
const REGIME_MAX_N: usize = 200;
const SCALE_N: usize = 2000;
const SCALE_SEEDS: u64 = 100;
const SCALE_TIME_LIMIT: Duration = Duration::from_secs(5);
const SCALE_MEMORY_LIMIT_KB: u64 = 1 << 20;
const MATCHING_EXHAUSTIVE_MAX_N: usize = 8;
const MATCHING_RANDOM_SAMPLES: usize = 10_000;
const MATCHING_RANDOM_MAX_N: usize = 12;
const ROUND_TRIP_SAMPLES: u64 = 1000;

fn gamma_of(delta: usize) -> usize {
    (delta + 1).div_ceil(2)
}

fn rows_from_mask(n: usize, mask: u64) -> Vec<u64> {
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
    rows
}

fn class_masks(c: &TreeColoring) -> Vec<u64> {
    c.classes
        .iter()
        .map(|s| s.iter().fold(0u64, |m, v| m | 1 << v))
        .collect()
}

/// Partition of all `n` vertices into `k` classes whose sizes differ by at
/// most one, each passing `class_ok`.
fn is_equitable_partition(
    n: usize,
    k: usize,
    classes: &[u64],
    class_ok: impl Fn(u64) -> bool,
) -> bool {
    let all = classes.iter().fold(0u64, |a, &c| a | c);
    let total: u32 = classes.iter().map(|c| c.count_ones()).sum();
    let sizes = classes.iter().map(|c| c.count_ones());
    let (lo, hi) = (sizes.clone().min().unwrap_or(0), sizes.max().unwrap_or(0));
    classes.len() == k
        && total as usize == n
        && all.count_ones() as usize == n
        && hi - lo <= 1
        && classes.iter().all(|&c| class_ok(c))
}

/// Runs `f` over `0..total` in chunks on every available core and returns
/// the inputs it rejected (at most 16 are kept).
fn par_range(total: u64, f: impl Fn(u64) -> bool + Sync) -> (u64, Vec<u64>) {
    const CHUNK: u64 = 1 << 14;
    let next = AtomicU64::new(0);
    let bad = AtomicU64::new(0);
    let examples = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..common::threads() {
            s.spawn(|| loop {
                let start = next.fetch_add(CHUNK, Ordering::Relaxed);
                if start >= total {
                    break;
                }
                for x in start..(start + CHUNK).min(total) {
                    if !f(x) {
                        bad.fetch_add(1, Ordering::Relaxed);
                        let mut e = examples.lock().unwrap();
                        if e.len() < 16 {
                            e.push(x);
                        }
                    }
                }
            });
        }
    });
    (bad.into_inner(), examples.into_inner().unwrap())
}

type Check = fn() -> Result<String, String>;

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn construction_exhaustive() -> Result<String, String> {
    let started = Instant::now();
    let mut summary = Vec::new();
    for n in CONSTRUCTION_ORDERS {
        let in_regime = AtomicU64::new(0);
        let (bad, examples) = par_range(1 << pairs(n), |mask| {
            let rows = rows_from_mask(n, mask);
            let delta = rows.iter().map(|r| r.count_ones() as usize).max().unwrap();
            if 2 * delta < n {
                return true;
            }
            in_regime.fetch_add(1, Ordering::Relaxed);
            let g = graph_from_mask(n, mask);
            let Ok(c) = equitable_tree_coloring(&g) else {
                return false;
            };
            let gamma = gamma_of(delta);
            verify(&g, &c, true).ok
                && is_equitable_partition(n, gamma, &class_masks(&c), |s| {
                    common::is_linear_forest_within(&rows, s)
                })
        });
        if bad > 0 {
            return Err(format!("n={n}: {bad} failures, e.g. masks {examples:x?}"));
        }
        summary.push(format!("n={n}:{}", in_regime.into_inner()));
    }
    let elapsed = started.elapsed();
    if elapsed > CONSTRUCTION_TIME_LIMIT {
        return Err(format!(
            "took {elapsed:.1?}, limit {CONSTRUCTION_TIME_LIMIT:?}"
        ));
    }
    Ok(format!(
        "0 failures; in-regime graphs {} ({elapsed:.1?})",
        summary.join(" ")
    ))
}

fn a_eq_bound_small() -> Result<String, String> {
    let mut tested = 0u64;
    for n in 1..=A_EQ_MAX_N {
        let (bad, examples) = par_range(1 << pairs(n), |mask| {
            let rows = rows_from_mask(n, mask);
            let delta = rows.iter().map(|r| r.count_ones() as usize).max().unwrap();
            let g = graph_from_mask(n, mask);
            let Ok(a) = exact_a_eq(&g, n) else {
                return false;
            };
            let Ok(Some(w)) = exists_equitable_k_tree_coloring(&g, a, n) else {
                return false;
            };
            a <= gamma_of(delta)
                && is_equitable_partition(n, a, &class_masks(&w), |s| {
                    !common::has_cycle_within(&rows, s)
                })
        });
        if bad > 0 {
            return Err(format!("n={n}: {bad} violations, e.g. masks {examples:x?}"));
        }
        tested += 1 << pairs(n);
    }
    Ok(format!(
        "a_eq <= Gamma on all {tested} labeled graphs with n <= {A_EQ_MAX_N}"
    ))
}

fn complete_graphs() -> Result<String, String> {
    let mut got = Vec::new();
    for n in COMPLETE_ORDERS {
        let a = exact_a_eq(&Graph::complete(n), n).map_err(|e| e.to_string())?;
        if a != n.div_ceil(2) {
            return Err(format!("K{n}: a_eq={a}, expected {}", n.div_ceil(2)));
        }
        got.push(format!("K{n}={a}"));
    }
    Ok(got.join(" "))
}

fn matching_and_path_properties() -> Result<String, String> {
    let mut rng = common::rng(0x1e44a);
    // Disconnected graphs have a matching of size at least the minimum degree.
    for i in 0..PROPERTY_SAMPLES {
        let parts: Vec<Graph> = (0..rng.random_range(2..=4))
            .map(|_| {
                let n = rng.random_range(1..=PROPERTY_MAX_N / 4);
                let p = rng.random_range(0.0..1.0);
                common::gnp(&mut rng, n, p)
            })
            .collect();
        let g = common::disjoint_union(&parts);
        let delta = degree_stats(&g).unwrap().delta_min;
        let m = maximum_matching(&g);
        if is_connected(&g) || !m.validate(&g) || m.len() < delta {
            return Err(format!(
                "disconnected sample {i}: matching {} < delta {delta}",
                m.len()
            ));
        }
    }
    let connected_sparse = |rng: &mut rand_chacha::ChaCha8Rng| loop {
        let n = rng.random_range(3..=PROPERTY_MAX_N);
        let p = rng.random_range(0.0..0.4);
        let g = common::hamiltonian_plus(rng, n, p);
        let delta = degree_stats(&g).unwrap().delta_min;
        if n > 2 * delta {
            return (g, delta);
        }
    };
    // Connected with n > 2δ: matching of size δ and a path with 2δ edges.
    for i in 0..PROPERTY_SAMPLES {
        let (g, delta) = connected_sparse(&mut rng);
        let m = maximum_matching(&g);
        if !m.validate(&g) || m.len() < delta {
            return Err(format!(
                "connected sample {i}: matching {} < delta {delta}",
                m.len()
            ));
        }
    }
    for i in 0..PROPERTY_SAMPLES {
        let (g, delta) = connected_sparse(&mut rng);
        match long_path(&g, 2 * delta) {
            Ok(p) if p.validate(&g) && p.len() >= 2 * delta => {}
            other => return Err(format!("path sample {i}: {other:?}")),
        }
    }
    // Connected with δ ≥ 2: a cycle longer than δ.
    for i in 0..PROPERTY_SAMPLES {
        let n = rng.random_range(3..=PROPERTY_MAX_N);
        let p = rng.random_range(0.0..0.9);
        let g = common::hamiltonian_plus(&mut rng, n, p);
        let delta = degree_stats(&g).unwrap().delta_min;
        match long_cycle(&g, &VertexSet::full(n)) {
            Ok(c) if c.validate(&g) && c.len() > delta => {}
            other => return Err(format!("cycle sample {i}: {other:?}")),
        }
    }
    Ok(format!("4 x {PROPERTY_SAMPLES} samples: matching (disconnected), matching (n > 2 delta), long path, long cycle"))
}

fn regime_totality() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=REGIME_MAX_N {
        for delta in 0..n {
            for connected in [true, false] {
                let plan = plan_for(n, delta, connected)
                    .map_err(|e| format!("n={n} delta={delta}: {e}"))?;
                let (d3, n2) = (3 * delta, 2 * n);
                let out = 2 * delta < n;
                let windows = [
                    out,
                    !out && delta == n - 1,
                    !out && delta < n - 1 && d3 + 3 >= n2,
                    !out && d3 + 3 < n2 && d3 + 6 >= n2,
                    !out && d3 + 6 < n2,
                ];
                let hits = windows.iter().filter(|&&w| w).count();
                let expected = match windows.iter().position(|&w| w).unwrap() {
                    0 => Regime::OutOfScope,
                    1 => Regime::CompleteLike,
                    2 => Regime::T1,
                    3 => [Regime::T2_3k, Regime::T2_3k1, Regime::T2_3k2][n % 3],
                    _ if connected => Regime::T3Connected,
                    _ => Regime::T3Disconnected,
                };
                let gamma = gamma_of(delta);
                let sizes = plan.class_sizes();
                let ok = hits == 1
                    && plan.regime == expected
                    && plan.gamma == gamma
                    && match plan.regime {
                        Regime::OutOfScope => sizes.is_empty(),
                        Regime::T1 => {
                            plan.beta + plan.mu == gamma && 3 * plan.beta + 2 * plan.mu == n
                        }
                        Regime::T3Connected | Regime::T3Disconnected => {
                            plan.beta >= 1
                                && plan.mu >= 1
                                && plan.beta + plan.mu == gamma
                                && 4 * plan.beta + 3 * plan.mu == n
                        }
                        Regime::T2_3k | Regime::T2_3k1 | Regime::T2_3k2 => {
                            plan.k == Some(n / 3) && n.div_ceil(gamma) <= 4 && n / gamma >= 2
                        }
                        Regime::CompleteLike => true,
                    }
                    && (plan.regime == Regime::OutOfScope
                        || sizes.len() == gamma
                            && sizes.iter().sum::<usize>() == n
                            && sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
                if !ok {
                    return Err(format!(
                        "n={n} delta={delta} connected={connected}: {plan:?} sizes {sizes:?}"
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, delta, connectivity) triples"))
}

fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn scale_smoke() -> Result<String, String> {
    let mut slowest = Duration::ZERO;
    for seed in 0..SCALE_SEEDS {
        let g = gen_random(SCALE_N, seed).map_err(|e| e.to_string())?;
        let started = Instant::now();
        let c = equitable_tree_coloring(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let report = verify(&g, &c, true);
        let elapsed = started.elapsed();
        if !report.ok {
            return Err(format!("seed {seed}: {}", report.summary()));
        }
        if elapsed > SCALE_TIME_LIMIT {
            return Err(format!("seed {seed}: {elapsed:.2?} > {SCALE_TIME_LIMIT:?}"));
        }
        slowest = slowest.max(elapsed);
    }
    let peak = match peak_rss_kb() {
        Some(kb) if kb > SCALE_MEMORY_LIMIT_KB => {
            return Err(format!("peak RSS {kb} kB > {SCALE_MEMORY_LIMIT_KB} kB"))
        }
        Some(kb) => format!("{} MiB", kb / 1024),
        None => "unavailable".into(),
    };
    Ok(format!(
        "n={SCALE_N}, {SCALE_SEEDS} seeds, slowest {slowest:.2?}, peak RSS {peak}"
    ))
}

/// Maximum matching size of every edge subset of K8, indexed by edge mask.
/// The top edge of a mask is either unused or matched, in which case every
/// edge touching it is dropped. Four bits per entry.
fn k8_matching_table() -> Vec<u8> {
    const N: usize = 8;
    let mut ends = Vec::new();
    for i in 0..N {
        for j in i + 1..N {
            ends.push((i, j));
        }
    }
    let touching: Vec<u32> = ends
        .iter()
        .map(|&(a, b)| {
            ends.iter()
                .enumerate()
                .filter(|(_, &(c, d))| c == a || c == b || d == a || d == b)
                .fold(0u32, |m, (k, _)| m | 1 << k)
        })
        .collect();
    let total = 1usize << ends.len();
    let mut table = vec![0u8; total / 2];
    let get = |t: &[u8], m: usize| t[m / 2] >> (4 * (m % 2)) & 0xf;
    for m in 1..total {
        let e = usize::BITS as usize - 1 - m.leading_zeros() as usize;
        let skip = get(&table, m & !(1 << e));
        let take = 1 + get(&table, m & !(touching[e] as usize));
        table[m / 2] |= skip.max(take) << (4 * (m % 2));
    }
    table
}

fn matching_equivalence() -> Result<String, String> {
    let mut exhaustive = 0u64;
    for n in 1..MATCHING_EXHAUSTIVE_MAX_N {
        let (bad, examples) = par_range(1 << pairs(n), |mask| {
            let m = maximum_matching(&graph_from_mask(n, mask));
            m.len() == common::brute_matching(&rows_from_mask(n, mask))
        });
        if bad > 0 {
            return Err(format!("n={n}: {bad} mismatches, e.g. masks {examples:x?}"));
        }
        exhaustive += 1 << pairs(n);
    }
    let n = MATCHING_EXHAUSTIVE_MAX_N;
    let table = k8_matching_table();
    let (bad, examples) = par_range(1 << pairs(n), |mask| {
        let expected = table[mask as usize / 2] >> (4 * (mask % 2)) & 0xf;
        maximum_matching(&graph_from_mask(n, mask)).len() == expected as usize
    });
    if bad > 0 {
        return Err(format!("n={n}: {bad} mismatches, e.g. masks {examples:x?}"));
    }
    drop(table);
    exhaustive += 1 << pairs(n);

    let mut rng = common::rng(0xb10550);
    for i in 0..MATCHING_RANDOM_SAMPLES {
        let n = rng.random_range(1..=MATCHING_RANDOM_MAX_N);
        let p = rng.random_range(0.0..1.0);
        let g = common::gnp(&mut rng, n, p);
        let m = maximum_matching(&g);
        let brute = common::brute_matching(&common::small_rows(&g));
        if !m.validate(&g) || m.len() != brute {
            return Err(format!(
                "random sample {i}: blossom {} brute {brute}",
                m.len()
            ));
        }
    }
    Ok(format!(
        "{exhaustive} labeled graphs with n <= {MATCHING_EXHAUSTIVE_MAX_N} and {MATCHING_RANDOM_SAMPLES} random graphs with n <= {MATCHING_RANDOM_MAX_N}"
    ))
}

fn round_trip() -> Result<String, String> {
    let mut rng = common::rng(0x10);
    for seed in 0..ROUND_TRIP_SAMPLES {
        let n = rng.random_range(2..=300);
        let g = gen_random(n, seed).map_err(|e| e.to_string())?;
        let text = write_graph(&g);
        let back = read_graph(&text).map_err(|e| format!("seed {seed}: {e}"))?;
        if back != g || write_graph(&back) != text {
            return Err(format!("graph seed {seed} n={n} changed on round trip"));
        }
        let c = equitable_tree_coloring(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let doc = write_coloring(&c);
        let cback = read_coloring(&doc, &g).map_err(|e| format!("seed {seed}: {e}"))?;
        if cback.class_lists() != c.class_lists() || write_coloring(&cback) != doc {
            return Err(format!("coloring seed {seed} n={n} changed on round trip"));
        }
    }
    Ok(format!(
        "{ROUND_TRIP_SAMPLES} graphs and colorings byte-identical"
    ))
}

fn main() {
    // The scale check runs before the large lookup table of the matching
    // check is allocated, so its peak-memory reading is its own.
    let checks: [(&str, Check); 8] = [
        (
            "construction, every labeled graph n=4..7",
            construction_exhaustive,
        ),
        ("a_eq <= Gamma, every labeled graph n<=6", a_eq_bound_small),
        ("a_eq(K_n) = ceil(n/2), n=2..8", complete_graphs),
        (
            "matching, path and cycle properties",
            matching_and_path_properties,
        ),
        ("regime dispatcher totality", regime_totality),
        ("scale smoke test", scale_smoke),
        ("blossom vs brute-force matching", matching_equivalence),
        ("text round trip", round_trip),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in checks.into_iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(detail) => {
                println!("[FAIL] {}. {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed checks: {failed:?}");
        std::process::exit(1);
    }
}
