//! Reproducible uniform sampling of digit sequences and statistical checks
//! that their values fill the unit interval uniformly.
//!
//! Digits come from a counter-based generator: every digit is a pure
//! function of `(seed, sample index, position)`, so any partition of the
//! sample range across workers reproduces the same aggregate bit for bit.
//! Digit reduction is plain modular arithmetic on a 64-bit mix, whose bias
//! at the radices in play is far below statistical resolution.

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::radix::{LevelPoint, RadixSystem};

/// Sampling plan: how many samples, how many digits each, and the seed.
#[derive(Debug, Clone)]
pub struct SamplerConfig {
    pub system: RadixSystem,
    pub depth: u64,
    pub count: u64,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn new(system: RadixSystem, depth: u64, count: u64, seed: u64) -> Result<Self> {
        if depth < 1 {
            return Err(Error::DepthTooSmall { depth, level: 1 });
        }
        if count < 1 {
            return Err(Error::EmptyInput);
        }
        Ok(SamplerConfig {
            system,
            depth,
            count,
            seed,
        })
    }
}

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

// The SplitMix64 word at `position` in the stream keyed by (seed, index):
// the state walks the Weyl sequence from a per-sample origin, so any
// (index, position) is addressable directly.
fn counter_word(seed: u64, index: u64, position: u64) -> u64 {
    let origin = mix64(seed ^ mix64(index.wrapping_add(1).wrapping_mul(GOLDEN)));
    mix64(origin.wrapping_add(position.wrapping_mul(GOLDEN)))
}

/// The digits of sample `index`: independent uniform digits, deterministic
/// in `(seed, index)`.
pub fn sample_digits(cfg: &SamplerConfig, index: u64) -> LevelPoint {
    assert!(index < cfg.count, "sample index out of range");
    let digits = (1..=cfg.depth)
        .map(|i| counter_word(cfg.seed, index, i) % cfg.system.radix_at(i))
        .collect();
    LevelPoint::new(cfg.system.clone(), digits).expect("sampled digits in range")
}

/// Control sampler with the first digit deliberately skewed: digit 0 with
/// probability 0.6, the rest uniform.  Exists so the uniformity test can be
/// shown to reject a broken sampler.
pub fn sample_digits_biased(cfg: &SamplerConfig, index: u64) -> LevelPoint {
    assert!(index < cfg.count, "sample index out of range");
    let digits = (1..=cfg.depth)
        .map(|i| {
            let word = counter_word(cfg.seed, index, i);
            let radix = cfg.system.radix_at(i);
            if i == 1 {
                // 0.6 mass on digit 0, remainder split over the other digits
                if (word >> 11) as f64 / ((1u64 << 53) as f64) < 0.6 {
                    0
                } else {
                    1 + word % (radix - 1)
                }
            } else {
                word % radix
            }
        })
        .collect();
    LevelPoint::new(cfg.system.clone(), digits).expect("sampled digits in range")
}

/// Midpoint of the depth-`k` value cell of a sampled point, in floating
/// point.  The truncation error is at most the cell width, one part in
/// `n1...nk`.
pub fn unit_midpoint_f64(point: &LevelPoint) -> f64 {
    let mut value = 0.0f64;
    let mut scale = 1.0f64;
    for (idx, &d) in point.digits().iter().enumerate() {
        scale /= point.system().radix_at(idx as u64 + 1) as f64;
        value += d as f64 * scale;
    }
    value + scale / 2.0
}

/// One-sample Kolmogorov–Smirnov statistic against the uniform law:
/// `D = max_i max(i/N - v_i, v_i - (i-1)/N)` over sorted values.
pub fn ks_statistic(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    debug_assert!(values.windows(2).all(|w| w[0] <= w[1]), "values not sorted");
    let n = values.len() as f64;
    let mut d = 0.0f64;
    for (idx, &v) in values.iter().enumerate() {
        let above = (idx as f64 + 1.0) / n - v;
        let below = v - idx as f64 / n;
        d = d.max(above).max(below);
    }
    Ok(d)
}

/// Critical value of the one-sample KS test at significance 0.01 for large
/// samples: `1.628 / sqrt(N)`.
pub const KS_COEFFICIENT_ALPHA_01: f64 = 1.628;

/// Outcome of a uniformity test run.
#[derive(Debug, Clone, PartialEq)]
pub struct KsReport {
    pub statistic: f64,
    pub critical_value: f64,
    pub n: u64,
    pub pass: bool,
}

fn uniformity_test_with(cfg: &SamplerConfig, sampler: impl Fn(&SamplerConfig, u64) -> LevelPoint) -> KsReport {
    let mut values: Vec<f64> = (0..cfg.count)
        .map(|i| unit_midpoint_f64(&sampler(cfg, i)))
        .collect();
    values.sort_unstable_by(f64::total_cmp);
    let statistic = ks_statistic(&values).expect("count is positive");
    let critical_value = KS_COEFFICIENT_ALPHA_01 / (cfg.count as f64).sqrt();
    KsReport {
        statistic,
        critical_value,
        n: cfg.count,
        pass: statistic < critical_value,
    }
}

/// Sample, map every point to its value, and test the values against the
/// uniform law on `[0,1]`.
pub fn run_uniformity_test(cfg: &SamplerConfig) -> KsReport {
    uniformity_test_with(cfg, sample_digits)
}

/// The same test fed by the deliberately skewed control sampler; a passing
/// report here would mean the test has no power.
pub fn run_uniformity_test_biased(cfg: &SamplerConfig) -> KsReport {
    uniformity_test_with(cfg, sample_digits_biased)
}

/// Empirical membership frequency of a clopen set against its exact
/// measure.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyReport {
    pub empirical: f64,
    pub exact: BigRational,
    pub deviation: f64,
    /// Three binomial standard errors at the exact measure.
    pub bound: f64,
    pub n: u64,
    pub pass: bool,
}

/// Sample points and compare how often they land in `set` with the set's
/// exact measure, at a three-sigma binomial bound.
pub fn empirical_vs_exact(set: &ClopenSet, cfg: &SamplerConfig) -> Result<FrequencyReport> {
    if cfg.depth < set.level() {
        return Err(Error::DepthTooSmall {
            depth: cfg.depth,
            level: set.level(),
        });
    }
    let mut hits = 0u64;
    for i in 0..cfg.count {
        if set.contains(&sample_digits(cfg, i))? {
            hits += 1;
        }
    }
    let empirical = hits as f64 / cfg.count as f64;
    let exact = set.haar_measure();
    let p = exact.to_f64().expect("measure fits f64");
    let bound = 3.0 * (p * (1.0 - p) / cfg.count as f64).sqrt();
    let deviation = (empirical - p).abs();
    Ok(FrequencyReport {
        empirical,
        exact,
        deviation,
        bound,
        n: cfg.count,
        pass: deviation <= bound,
    })
}
