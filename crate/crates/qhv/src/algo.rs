//! Runtime-selectable hypervolume algorithms behind one trait.
//!
//! Every computation route registers under a short name; callers resolve a
//! name against [`create`] and drive the returned trait object. This is the
//! seam the CLI's `--algo` flag plugs into.

use crate::error::{Error, Result};
use crate::geometry::Front;
use crate::oracles::{ie_volume, mc_estimate, sweep2d_volume, McConfig};
use crate::quick::{hypervolume, QhvConfig, RecursionStats};

/// Result of one algorithm run.
#[derive(Debug, Clone)]
pub struct HvOutcome {
    pub value: f64,
    /// Samples drawn, for randomized algorithms.
    pub samples: Option<u64>,
    /// Recursion counters, when the algorithm tracks them.
    pub stats: Option<RecursionStats>,
}

impl HvOutcome {
    fn exact(value: f64) -> Self {
        Self {
            value,
            samples: None,
            stats: None,
        }
    }
}

/// A hypervolume computation strategy.
pub trait HvAlgorithm: Send + Sync {
    fn name(&self) -> &'static str;
    fn compute(&self, front: &Front) -> Result<HvOutcome>;
}

/// Knobs shared by all algorithm constructors; each strategy reads the
/// fields it cares about.
#[derive(Debug, Clone)]
pub struct AlgoParams {
    pub base_threshold: usize,
    pub collect_stats: bool,
    pub parallel: bool,
    pub epsilon: f64,
    pub delta: f64,
    pub seed: u64,
    pub max_samples: Option<u64>,
}

impl Default for AlgoParams {
    fn default() -> Self {
        Self {
            base_threshold: crate::quick::DEFAULT_BASE_THRESHOLD,
            collect_stats: false,
            parallel: false,
            epsilon: 0.01,
            delta: 0.25,
            seed: 0,
            max_samples: None,
        }
    }
}

struct QuickHv(QhvConfig);

impl HvAlgorithm for QuickHv {
    fn name(&self) -> &'static str {
        "qhv"
    }

    fn compute(&self, front: &Front) -> Result<HvOutcome> {
        let (value, stats) = hypervolume(front, &self.0)?;
        Ok(HvOutcome {
            value,
            samples: None,
            stats: Some(stats),
        })
    }
}

struct InclusionExclusion;

impl HvAlgorithm for InclusionExclusion {
    fn name(&self) -> &'static str {
        "ie"
    }

    fn compute(&self, front: &Front) -> Result<HvOutcome> {
        Ok(HvOutcome::exact(ie_volume(front)?))
    }
}

struct Sweep2d;

impl HvAlgorithm for Sweep2d {
    fn name(&self) -> &'static str {
        "sweep2d"
    }

    fn compute(&self, front: &Front) -> Result<HvOutcome> {
        Ok(HvOutcome::exact(sweep2d_volume(front)?))
    }
}

struct MonteCarlo(McConfig);

impl HvAlgorithm for MonteCarlo {
    fn name(&self) -> &'static str {
        "mc"
    }

    fn compute(&self, front: &Front) -> Result<HvOutcome> {
        let (value, samples) = mc_estimate(front, &self.0)?;
        Ok(HvOutcome {
            value,
            samples: Some(samples),
            stats: None,
        })
    }
}

type Factory = fn(&AlgoParams) -> Box<dyn HvAlgorithm>;

static REGISTRY: &[(&str, Factory)] = &[
    ("qhv", |p| {
        Box::new(QuickHv(QhvConfig {
            base_threshold: p.base_threshold,
            collect_stats: p.collect_stats,
            parallel: p.parallel,
        }))
    }),
    ("ie", |_| Box::new(InclusionExclusion)),
    ("sweep2d", |_| Box::new(Sweep2d)),
    ("mc", |p| {
        Box::new(MonteCarlo(McConfig {
            epsilon: p.epsilon,
            delta: p.delta,
            seed: p.seed,
            max_samples: p.max_samples,
        }))
    }),
];

/// Registered algorithm names, in registry order.
pub fn algorithm_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|(name, _)| *name).collect()
}

/// Instantiates the algorithm registered under `name`.
pub fn create(name: &str, params: &AlgoParams) -> Result<Box<dyn HvAlgorithm>> {
    REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, factory)| factory(params))
        .ok_or_else(|| Error::UnknownAlgorithm(name.to_string()))
}
