//! Deterministic random streams fanned out from one master seed.
//!
//! Each subsystem draws from its own named stream so that, e.g., changing
//! how many sensor-noise samples the simulator consumes never perturbs the
//! exploration sequence. Stream seeds are derived with SplitMix64 and are
//! recorded in the run manifest by the application layer.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub type Rng = ChaCha8Rng;

/// Named sub-streams of the master seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stream {
    /// Simulator-side randomness: noise, per-episode bias, hole placement error.
    Sim = 1,
    /// Network weight initialization.
    WeightInit = 2,
    /// Epsilon-greedy exploration draws.
    Exploration = 3,
    /// Replay minibatch sampling.
    Replay = 4,
    /// Client-side episode setup draws (offset direction, misalignment).
    Episode = 5,
    /// Evaluation rollouts.
    Eval = 6,
}

#[inline]
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for a named stream of `master`.
pub fn stream_seed(master: u64, stream: Stream) -> u64 {
    splitmix64(master ^ splitmix64(stream as u64))
}

/// RNG for a named stream of `master`.
pub fn stream_rng(master: u64, stream: Stream) -> Rng {
    Rng::seed_from_u64(stream_seed(master, stream))
}

/// Uniform f64 in [0, 1).
#[inline]
pub fn next_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform f64 in [lo, hi).
#[inline]
pub fn uniform(rng: &mut impl RngCore, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * next_f64(rng)
}

/// Bernoulli draw: true with probability `p`.
#[inline]
pub fn below(rng: &mut impl RngCore, p: f64) -> bool {
    next_f64(rng) < p
}

/// Uniform index in [0, n). Uses the widening-multiply trick; the bias for
/// n this small is far below anything observable.
#[inline]
pub fn index(rng: &mut impl RngCore, n: usize) -> usize {
    ((rng.next_u64() as u128 * n as u128) >> 64) as usize
}

/// Zero-mean Gaussian with standard deviation `sigma` (Box-Muller).
pub fn normal(rng: &mut impl RngCore, sigma: f64) -> f64 {
    if sigma == 0.0 {
        return 0.0;
    }
    // (0,1] to keep ln finite.
    let u1 = 1.0 - next_f64(rng);
    let u2 = next_f64(rng);
    let r = crate::math::sqrt(-2.0 * crate::math::ln(u1));
    sigma * r * crate::math::cos(2.0 * core::f64::consts::PI * u2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_distinct_and_reproducible(){
        let a1 = stream_rng(7, Stream::Sim).next_u64();
        let a2 = stream_rng(7, Stream::Sim).next_u64();
        let b = stream_rng(7, Stream::Exploration).next_u64();
        assert_eq!(a1, a2);
        assert_ne!(a1, b);
    }

    #[test]
    fn normal_moments_roughly_match() {
        let mut rng = stream_rng(0, Stream::Sim);
        let n = 100_000;
        let sigma = 0.5;
        let mut sum = 0.0;
        let mut sq = 0.0;
        for _ in 0..n {
            let x = normal(&mut rng, sigma);
            sum += x;
            sq += x * x;
        }
        let mean = sum / n as f64;
        let var = sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - sigma * sigma).abs() < 0.01, "var {var}");
    }

    #[test]
    fn index_covers_range_uniformly_enough() {
        let mut rng = stream_rng(3, Stream::Replay);
        let mut counts = [0usize; 4];
        for _ in 0..40_000 {
            counts[index(&mut rng, 4)] += 1;
        }
        for c in counts {
            assert!((c as i64 - 10_000).abs() < 500, "{counts:?}");
        }
    }
}
