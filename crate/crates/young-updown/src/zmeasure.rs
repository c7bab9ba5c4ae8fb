//! Level distributions generated by the up kernel.
//!
//! Starting from unit mass on the empty diagram, repeatedly pushing a
//! measure through the up transition probabilities produces one probability
//! distribution per level. These distributions are consistent with the down
//! kernel (pushing level `n` down reproduces level `n−1` exactly), which is
//! what makes the up-down chain reversible.

use crate::kerov::{down_probs, up_probs, JackTheta, Params};
use crate::partition::{enumerate_level, Partition};
use crate::rational::{rat, to_f64, Rat};
use num::Zero;
use std::collections::BTreeMap;
use std::io;

/// A measure on one level of the Young graph, keyed by every diagram of
/// that level in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMeasure {
    n: u64,
    weights: BTreeMap<Partition, Rat>,
}

impl LevelMeasure {
    /// Wraps explicit weights; missing diagrams of the level get weight 0.
    pub fn new(n: u64, mut weights: BTreeMap<Partition, Rat>) -> Self {
        for la in enumerate_level(n) {
            weights.entry(la).or_insert_with(Rat::zero);
        }
        assert!(
            weights.keys().all(|la| la.size() == n),
            "weight keyed by a diagram of the wrong level"
        );
        LevelMeasure { n, weights }
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn weights(&self) -> &BTreeMap<Partition, Rat> {
        &self.weights
    }

    pub fn weight(&self, la: &Partition) -> &Rat {
        &self.weights[la]
    }

    pub fn total_mass(&self) -> Rat {
        self.weights.values().sum()
    }

    /// CSV rows `partition, weight_num, weight_den, weight_float`.
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["partition", "weight_num", "weight_den", "weight_float"])?;
        for (la, weight) in &self.weights {
            w.write_record([
                la.to_string(),
                weight.numer().to_string(),
                weight.denom().to_string(),
                format!("{:.17e}", to_f64(weight)),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// The level-`n` distribution of the growth process driven by `params`.
///
/// Built by the recursion `M⁽⁰⁾(∅) = 1`,
/// `M⁽ᵏ⁺¹⁾(ν) = Σ_{λ↗ν} M⁽ᵏ⁾(λ)·p↑(λ,ν)`; the result sums to 1 exactly.
pub fn z_weights(n: u64, params: &Params) -> LevelMeasure {
    ZMeasure::new(params.clone()).level(n).clone()
}

/// Memoized level distributions for one parameter triple.
#[derive(Debug)]
pub struct ZMeasure {
    params: Params,
    levels: Vec<LevelMeasure>,
}

impl ZMeasure {
    pub fn new(params: Params) -> Self {
        let base = LevelMeasure {
            n: 0,
            weights: BTreeMap::from([(Partition::empty(), rat(1))]),
        };
        ZMeasure {
            params,
            levels: vec![base],
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// The level-`n` measure, extending the cache as needed.
    pub fn level(&mut self, n: u64) -> &LevelMeasure {
        while (self.levels.len() as u64) <= n {
            let prev = self.levels.last().unwrap();
            let mut next: BTreeMap<Partition, Rat> = BTreeMap::new();
            for (la, mass) in &prev.weights {
                for (nu, prob) in up_probs(la, &self.params) {
                    *next.entry(nu).or_insert_with(Rat::zero) += mass * prob;
                }
            }
            let n = prev.n + 1;
            self.levels.push(LevelMeasure { n, weights: next });
        }
        &self.levels[n as usize]
    }
}

/// Pushing a level-0 measure down was requested.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("level 0 has no downward pushforward")]
pub struct LevelZero;

/// Pushforward of a level measure through the down kernel; total mass is
/// preserved.
pub fn push_down(m: &LevelMeasure, theta: &JackTheta) -> Result<LevelMeasure, LevelZero> {
    if m.level() == 0 {
        return Err(LevelZero);
    }
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (la, mass) in m.weights() {
        for (mu, prob) in down_probs(la, theta).expect("nonempty diagram") {
            *out.entry(mu).or_insert_with(Rat::zero) += mass * prob;
        }
    }
    Ok(LevelMeasure {
        n: m.level() - 1,
        weights: out,
    })
}
