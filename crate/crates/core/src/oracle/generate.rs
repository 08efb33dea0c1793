use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::{Error, Result};

/// Range the edge probability is drawn from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub p_min: f64,
    pub p_max: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            p_min: 0.1,
            p_max: 0.9,
        }
    }
}

pub fn gen_random(n: usize, seed: u64) -> Result<Graph> {
    gen_random_with(n, seed, &GenConfig::default())
}

/// Samples G(n, p) with `p` uniform in the configured range, then joins the
/// maximum-degree vertex to random non-neighbors until Δ ≥ ⌈n/2⌉.
pub fn gen_random_with(n: usize, seed: u64, config: &GenConfig) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "gen_random needs n >= 2, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&config.p_min) || !(config.p_min..=1.0).contains(&config.p_max) {
        return Err(Error::InvalidArgument(format!(
            "edge probability range [{}, {}] is not within [0, 1]",
            config.p_min, config.p_max
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if config.p_max > config.p_min {
        rng.random_range(config.p_min..config.p_max)
    } else {
        config.p_min
    };
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    let hub = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let need = n.div_ceil(2);
    let have = g.degree(hub);
    if have < need {
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| v != hub && !g.has_edge(hub, v))
            .collect();
        for &v in candidates.choose_multiple(&mut rng, need - have) {
            g.add_edge(hub, v)?;
        }
    }
    Ok(g)
}
