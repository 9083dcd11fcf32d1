//! Seeded Monte-Carlo estimation over Gaussian product measures.
//!
//! Samples are drawn in fixed-size chunks; chunk `i` uses stream `i` of a
//! counter-based ChaCha generator seeded once for the whole run, and chunk
//! partial sums are reduced in chunk order. The estimate is therefore
//! bit-identical for a fixed `(seed, samples)` regardless of execution
//! mode or worker count.

use super::NumericsError;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Samples per random substream. Fixed: changing it would reassign
/// substreams and change seeded results.
const CHUNK: u64 = 1 << 16;

/// How integrand evaluations are dispatched across chunks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Execution::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Execution::Sequential
        }
    }
}

/// Independent zero-mean Gaussian sampler per coordinate, with the given
/// standard deviations.
#[derive(Debug, Clone)]
pub struct GaussianProductSampler {
    scales: Vec<f64>,
}

impl GaussianProductSampler {
    pub fn new(scales: Vec<f64>) -> Result<Self, NumericsError> {
        if scales.is_empty() {
            return Err(NumericsError::InvalidSampler("no coordinates".into()));
        }
        if let Some(bad) = scales.iter().find(|s| !(s.is_finite() && **s > 0.0)) {
            return Err(NumericsError::InvalidSampler(format!(
                "standard deviations must be positive and finite (got {bad})"
            )));
        }
        Ok(Self { scales })
    }

    pub fn dimension(&self) -> usize {
        self.scales.len()
    }

    fn sample_into(&self, rng: &mut ChaCha8Rng, out: &mut [f64]) {
        for (slot, scale) in out.iter_mut().zip(&self.scales) {
            let z: f64 = StandardNormal.sample(rng);
            *slot = scale * z;
        }
    }
}

/// Monte-Carlo estimate with its statistical error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: Complex64,
    /// Standard error of the mean, combining both components.
    pub std_error: f64,
    pub samples: u64,
    /// Samples for which the region predicate held.
    pub accepted: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default)]
struct ChunkSums {
    sum_re: f64,
    sum_im: f64,
    sq_re: f64,
    sq_im: f64,
    accepted: u64,
}

/// Unbiased estimate of the mean of `f * 1_accept` under the sampler's
/// Gaussian product measure. `f` is the reweighted integrand (integrand
/// divided by the sampler density); rejected points contribute zero.
pub fn mc_integrate<F, A>(
    f: F,
    sampler: &GaussianProductSampler,
    accept: A,
    samples: u64,
    seed: u64,
    exec: Execution,
) -> Result<McEstimate, NumericsError>
where
    F: Fn(&[f64]) -> Complex64 + Sync,
    A: Fn(&[f64]) -> bool + Sync,
{
    if samples == 0 {
        return Err(NumericsError::InvalidSampler(
            "sample count must be positive".into(),
        ));
    }

    let n_chunks = samples.div_ceil(CHUNK);
    let run_chunk = |chunk: u64| -> ChunkSums {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(chunk);
        let count = CHUNK.min(samples - chunk * CHUNK);
        let mut point = vec![0.0f64; sampler.dimension()];
        let mut sums = ChunkSums::default();
        for _ in 0..count {
            sampler.sample_into(&mut rng, &mut point);
            if accept(&point) {
                let value = f(&point);
                sums.sum_re += value.re;
                sums.sum_im += value.im;
                sums.sq_re += value.re * value.re;
                sums.sq_im += value.im * value.im;
                sums.accepted += 1;
            }
        }
        sums
    };

    let chunk_sums: Vec<ChunkSums> = match exec {
        Execution::Sequential => (0..n_chunks).map(run_chunk).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n_chunks).into_par_iter().map(run_chunk).collect(),
    };

    let mut total = ChunkSums::default();
    for s in &chunk_sums {
        total.sum_re += s.sum_re;
        total.sum_im += s.sum_im;
        total.sq_re += s.sq_re;
        total.sq_im += s.sq_im;
        total.accepted += s.accepted;
    }

    if total.accepted == 0 {
        return Err(NumericsError::DegenerateEstimate { samples });
    }

    let n = samples as f64;
    let mean_re = total.sum_re / n;
    let mean_im = total.sum_im / n;
    let var = |sq: f64, sum: f64| -> f64 {
        if samples < 2 {
            return 0.0;
        }
        ((sq - sum * sum / n) / (n - 1.0)).max(0.0)
    };
    let std_error = ((var(total.sq_re, total.sum_re) + var(total.sq_im, total.sum_im)) / n).sqrt();

    Ok(McEstimate {
        mean: Complex64::new(mean_re, mean_im),
        std_error,
        samples,
        accepted: total.accepted,
        seed,
    })
}
