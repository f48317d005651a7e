//! Empirical scaling-exponent estimation.
//!
//! Timings of the divide-and-conquer algorithm are modeled as
//! `seconds ~ n^a * ln(n)^(d-2)`. The log factor is divided out first, so
//! the least-squares slope of `ln(seconds_adjusted)` against `ln(n)`
//! estimates the exponent `a` directly.

/// Least-squares fit of the adjusted log-log line.
#[derive(Debug, Clone, Copy)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub rows: usize,
}

/// Fits `(n, seconds)` samples for a fixed dimension `d`. Samples with
/// nonpositive seconds carry no usable signal and must be filtered out by
/// the caller.
pub fn fit_power_law(samples: &[(usize, f64)], d: usize) -> Fit {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(n, seconds)| {
            let x = (n as f64).ln();
            let adjust = x.powi(d as i32 - 2);
            (x, (seconds / adjust).ln())
        })
        .collect();

    let m = pts.len() as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = mean_y - slope * mean_x;

    let ss_tot: f64 = pts.iter().map(|p| (p.1 - mean_y) * (p.1 - mean_y)).sum();
    let ss_res: f64 = pts
        .iter()
        .map(|p| {
            let r = p.1 - (intercept + slope * p.0);
            r * r
        })
        .sum();
    let r_squared = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };

    Fit {
        slope,
        intercept,
        r_squared,
        rows: samples.len(),
    }
}
