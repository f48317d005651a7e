//! Independent reference implementations: exact inclusion–exclusion over
//! subsets, an exact 2D sweep, and a randomized union-volume estimator.
//!
//! These are deliberately simple routes against which the divide-and-conquer
//! algorithm is checked; none of them shares its recursion.

use crate::error::{Error, Result};
use crate::geometry::{box_volume_from, filter_nondominated, Front, Point};
use crate::rng;

/// Largest front accepted by [`ie_volume`]; the subset enumeration costs
/// `2^n` terms.
pub const IE_MAX_POINTS: usize = 25;

/// Exact union volume by inclusion–exclusion over all nonempty subsets:
/// `sum over S of (-1)^(|S|+1) * prod_i max(0, min_{q in S} q[i] - z[i])`.
pub fn ie_volume(front: &Front) -> Result<f64> {
    if front.len() > IE_MAX_POINTS {
        return Err(Error::Capacity {
            n: front.len(),
            max: IE_MAX_POINTS,
        });
    }
    Ok(ie_volume_raw(front.points(), front.frame().lower().coords()))
}

pub(crate) fn ie_volume_raw(points: &[Point], z: &[f64]) -> f64 {
    let n = points.len();
    if n == 0 {
        return 0.0;
    }
    debug_assert!(n <= IE_MAX_POINTS);
    let d = z.len();
    let mut total = 0.0;
    let mut mins = vec![0.0f64; d];
    for mask in 1u32..(1u32 << n) {
        let mut m = mask;
        let first = m.trailing_zeros() as usize;
        mins.copy_from_slice(points[first].coords());
        m &= m - 1;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            for (mn, &c) in mins.iter_mut().zip(points[i].coords()) {
                if c < *mn {
                    *mn = c;
                }
            }
            m &= m - 1;
        }
        // Zero-width terms are skipped; supersets still get their own pass.
        let term = box_volume_from(z, &mins);
        if term > 0.0 {
            if mask.count_ones() % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

/// Exact 2D area by a strip sweep: survivors of nondominance filtering are
/// sorted by descending `x` (hence ascending `y`) and each contributes the
/// strip `(x_k - z_x) * (y_k - y_{k-1})`.
pub fn sweep2d_volume(front: &Front) -> Result<f64> {
    if front.frame().dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: front.frame().dim(),
        });
    }
    let filtered = filter_nondominated(front);
    let mut pts: Vec<&Point> = filtered.points().iter().collect();
    pts.sort_by(|a, b| b[0].total_cmp(&a[0]));
    let z = front.frame().lower();
    let mut area = 0.0;
    let mut prev_y = z[1];
    for p in pts {
        area += (p[0] - z[0]) * (p[1] - prev_y);
        prev_y = p[1];
    }
    Ok(area)
}

/// Configuration for [`mc_estimate`].
#[derive(Debug, Clone)]
pub struct McConfig {
    /// Relative-error target, in (0, 1).
    pub epsilon: f64,
    /// Probability budget for missing the `±epsilon` interval, in (0, 1).
    pub delta: f64,
    /// Seed for the ChaCha8 sample stream.
    pub seed: u64,
    /// Optional hard cap on the number of samples.
    pub max_samples: Option<u64>,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            epsilon: 0.01,
            delta: 0.25,
            seed: 0,
            max_samples: None,
        }
    }
}

impl McConfig {
    fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "epsilon must lie in (0, 1), got {}",
                self.epsilon
            )));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "delta must lie in (0, 1), got {}",
                self.delta
            )));
        }
        Ok(())
    }
}

/// Sample budget for an `n`-point front: `ceil(3 n ln(2/delta)) * ceil(1/eps^2)`.
/// The per-epsilon factor is an exact integer, so halving epsilon always
/// quadruples the budget exactly (and 0.1 -> 0.01 multiplies it by 100).
pub fn sample_budget(n: usize, epsilon: f64, delta: f64) -> u64 {
    let base = (3.0 * n as f64 * (2.0 / delta).ln()).ceil() as u64;
    let per_eps = (1.0 / (epsilon * epsilon)).ceil() as u64;
    base.saturating_mul(per_eps)
}

/// Union-volume estimator in the Karp–Luby style: pick a box with
/// probability proportional to its volume, sample a point inside it
/// uniformly, and average `1/c(x)` where `c(x)` counts the boxes containing
/// the sample. The result is `total_box_volume * mean(1/c)`, clamped into
/// `[0, vol(frame)]`, and lands within `±epsilon` of the true volume with
/// probability at least `1 - delta`.
///
/// Returns the estimate and the number of samples drawn.
pub fn mc_estimate(front: &Front, config: &McConfig) -> Result<(f64, u64)> {
    config.validate()?;
    if front.is_empty() {
        return Err(Error::EmptyFront);
    }

    let z = front.frame().lower().coords();
    let d = z.len();
    let n = front.len();

    // Contiguous copies keep the per-sample containment scan off the
    // pointer-chasing path.
    let flat: Vec<f64> = front
        .points()
        .iter()
        .flat_map(|p| p.coords().iter().copied())
        .collect();
    let widths: Vec<f64> = flat
        .chunks_exact(d)
        .flat_map(|q| q.iter().zip(z).map(|(qi, zi)| qi - zi))
        .collect();

    let mut cumulative = Vec::with_capacity(n);
    let mut total = 0.0;
    for p in front.points() {
        total += box_volume_from(z, p.coords());
        cumulative.push(total);
    }
    if total <= 0.0 {
        // Every box is degenerate; the union has measure zero.
        return Ok((0.0, 0));
    }

    let mut samples = sample_budget(n, config.epsilon, config.delta);
    if let Some(cap) = config.max_samples {
        samples = samples.min(cap);
    }

    let mut rng = rng::from_seed(config.seed);
    let mut x = vec![0.0f64; d];
    let mut inv_count_sum = 0.0f64;
    for _ in 0..samples {
        let r = rng::uniform(&mut rng, 0.0, total);
        let i = cumulative.partition_point(|&c| c <= r).min(n - 1);
        let w = &widths[i * d..(i + 1) * d];
        for k in 0..d {
            x[k] = z[k] + rng::unit_f64(&mut rng) * w[k];
        }
        // Samples satisfy x >= z by construction, so containment in the
        // box [z, q] reduces to x <= q. Branchless so the comparison mix
        // does not stall the pipeline.
        let mut c = 0u32;
        for q in flat.chunks_exact(d) {
            let mut inside = 1u32;
            for k in 0..d {
                inside &= (x[k] <= q[k]) as u32;
            }
            c += inside;
        }
        debug_assert!(c >= 1);
        inv_count_sum += 1.0 / f64::from(c);
    }

    let estimate = if samples == 0 {
        0.0
    } else {
        total * inv_count_sum / samples as f64
    };
    Ok((estimate.clamp(0.0, front.frame().volume()), samples))
}
