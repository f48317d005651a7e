//! Seeded front generators covering the usual benchmark families.
//!
//! The spherical recipe draws uniformly in the unit cube and projects onto
//! the unit shell by dividing by the Euclidean norm; the other families are
//! declared stand-ins with the same qualitative geometry as their namesakes
//! (see the per-variant docs). Benchmark numbers from these generators are
//! comparable across runs of this crate, not against external archives.

use crate::error::{Error, Result};
use crate::geometry::{canonicalize, weakly_dominates, Front, Orientation};
use crate::rng::{self, unit_f64, DetRng};

/// Consecutive rejected draws tolerated before generation fails.
const MAX_REJECTIONS: u64 = 100_000;

/// Benchmark front family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Uniform in `[0,1]^d` projected onto the unit shell of the first
    /// orthant (every point at Euclidean distance 1 from the origin).
    Spherical,
    /// Mutually nondominated points drawn uniformly from `[0.1, 1]^d`;
    /// candidates comparable to an already-accepted point are rejected.
    Random,
    /// Uniform on the flat simplex `x_1 + ... + x_d = 1`.
    Degenerate,
    /// The spherical recipe with alternating bands of the first coordinate
    /// (`[0.2k, 0.2k + 0.1)`) rejected.
    Discontinuous,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Spherical => "spherical",
            Family::Random => "random",
            Family::Degenerate => "degenerate",
            Family::Discontinuous => "discontinuous",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spherical" => Ok(Family::Spherical),
            "random" => Ok(Family::Random),
            "degenerate" => Ok(Family::Degenerate),
            "discontinuous" => Ok(Family::Discontinuous),
            other => Err(Error::InvalidConfig(format!(
                "unknown family {other:?} (expected spherical|random|degenerate|discontinuous)"
            ))),
        }
    }
}

/// Everything needed to regenerate a front: family, dimension, point count,
/// and seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub d: usize,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    fn validate(&self) -> Result<()> {
        if self.d < 2 {
            return Err(Error::InvalidConfig(format!(
                "dimension must be at least 2, got {}",
                self.d
            )));
        }
        if self.n < 1 {
            return Err(Error::InvalidConfig("point count must be positive".into()));
        }
        Ok(())
    }
}

/// Generates the front described by `spec`, canonicalized to maximize from
/// the origin. Identical specs produce identical fronts.
pub fn gen_front(spec: &GenSpec) -> Result<Front> {
    spec.validate()?;
    let mut rng = rng::from_seed(spec.seed);
    let d = spec.d;

    let mut points: Vec<Vec<f64>> = Vec::with_capacity(spec.n);
    let mut rejections = 0u64;
    while points.len() < spec.n {
        let candidate = match spec.family {
            Family::Spherical => shell_point(&mut rng, d),
            Family::Random => {
                (0..d).map(|_| rng::uniform(&mut rng, 0.1, 1.0)).collect()
            }
            Family::Degenerate => simplex_point(&mut rng, d),
            Family::Discontinuous => shell_point(&mut rng, d),
        };
        if accept(spec.family, &candidate, &points) {
            points.push(candidate);
            rejections = 0;
        } else {
            rejections += 1;
            if rejections > MAX_REJECTIONS {
                return Err(Error::GenerationFailure {
                    attempts: MAX_REJECTIONS,
                });
            }
        }
    }

    let (front, report) =
        canonicalize(&points, &vec![0.0; d], Orientation::Maximize, None)?;
    debug_assert_eq!(report.dropped, 0);
    Ok(front)
}

fn accept(family: Family, candidate: &[f64], accepted: &[Vec<f64>]) -> bool {
    // Coordinates at zero would be dropped at canonicalization, leaving the
    // front short; draws have to clear the origin in every axis.
    if candidate.iter().any(|&c| c <= 0.0) {
        return false;
    }
    match family {
        Family::Spherical | Family::Degenerate => true,
        Family::Discontinuous => {
            // Reject first coordinates in the even deciles [0.2k, 0.2k+0.1).
            (candidate[0] * 10.0).floor() as i64 % 2 == 1
        }
        Family::Random => accepted.iter().all(|p| {
            !weakly_dominates(p, candidate) && !weakly_dominates(candidate, p)
        }),
    }
}

fn shell_point(rng: &mut DetRng, d: usize) -> Vec<f64> {
    loop {
        let raw: Vec<f64> = (0..d).map(|_| unit_f64(rng)).collect();
        let norm = raw.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            return raw.iter().map(|v| v / norm).collect();
        }
    }
}

/// Dirichlet(1, ..., 1) via normalized exponentials.
fn simplex_point(rng: &mut DetRng, d: usize) -> Vec<f64> {
    loop {
        let raw: Vec<f64> = (0..d)
            .map(|_| -(1.0 - unit_f64(rng)).ln())
            .collect();
        let sum: f64 = raw.iter().sum();
        if sum > 0.0 && sum.is_finite() {
            return raw.iter().map(|v| v / sum).collect();
        }
    }
}
