//! Pivot divide-and-conquer hypervolume, in the QuickSort mold.
//!
//! Each call selects the point with the largest own box as the pivot, counts
//! that box, splits the remaining points into the hyperoctants the pivot
//! induces, and recurses on every octant that received points. Octants are
//! labeled by a d-bit integer where bit `i` set means "above the pivot in
//! axis `i`"; the all-zeros cell is covered by the pivot's box and the
//! all-ones cell is provably empty, so only proper octants recurse. Small
//! subproblems fall back to inclusion–exclusion.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{
    box_volume_from, filter_nondominated, nondominated_indices, Frame, Front, Point,
};
use crate::oracles::ie_volume_raw;

/// Largest dimension representable in the 32-bit octant labels.
pub const MAX_DIMENSION: usize = 30;

/// Default size at which recursion hands over to inclusion–exclusion.
pub const DEFAULT_BASE_THRESHOLD: usize = 10;

/// Upper bound on [`QhvConfig::base_threshold`]; the base case enumerates
/// `2^threshold` subsets.
pub const MAX_BASE_THRESHOLD: usize = 20;

/// Sequential recursion below this many points even in parallel mode.
const PARALLEL_CUTOFF: usize = 64;

/// Identifies one of the `2^d` hyperoctants induced by a pivot. Bit `i` set
/// means coordinate `i` exceeds the pivot's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OctantLabel(pub u32);

impl OctantLabel {
    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn bit(self, axis: usize) -> bool {
        self.0 >> axis & 1 == 1
    }

    /// Digit string in axis order, axis 0 first: in 2D, label 2 prints as
    /// "01" (at or below the pivot in x, above it in y).
    pub fn digits(self, d: usize) -> String {
        (0..d).map(|i| if self.bit(i) { '1' } else { '0' }).collect()
    }
}

/// Tuning knobs for [`hypervolume`].
#[derive(Debug, Clone)]
pub struct QhvConfig {
    /// Subproblems of at most this many points are solved by
    /// inclusion–exclusion. Must lie in `1..=20`.
    pub base_threshold: usize,
    /// Tally per-octant routing counts in [`RecursionStats`]. Off by
    /// default; the scalar counters are always kept.
    pub collect_stats: bool,
    /// Evaluate independent octants on the rayon pool. Partial sums are
    /// combined in ascending label order either way, so results are
    /// bit-identical to the sequential mode.
    pub parallel: bool,
}

impl Default for QhvConfig {
    fn default() -> Self {
        Self {
            base_threshold: DEFAULT_BASE_THRESHOLD,
            collect_stats: false,
            parallel: false,
        }
    }
}

impl QhvConfig {
    fn validate(&self) -> Result<()> {
        if self.base_threshold < 1 || self.base_threshold > MAX_BASE_THRESHOLD {
            return Err(Error::InvalidConfig(format!(
                "base_threshold must lie in 1..={MAX_BASE_THRESHOLD}, got {}",
                self.base_threshold
            )));
        }
        Ok(())
    }
}

/// Counters describing one [`hypervolume`] run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecursionStats {
    /// Recursive invocations, the root included.
    pub calls: u64,
    /// Deepest recursion level reached (the root is level 1).
    pub max_depth: usize,
    /// Invocations answered by inclusion–exclusion.
    pub base_case_hits: u64,
    /// Points landing in each octant subproblem, keyed by label and summed
    /// over all calls. Populated only with [`QhvConfig::collect_stats`].
    pub octant_point_counts: BTreeMap<OctantLabel, u64>,
}

impl RecursionStats {
    fn leaf(depth: usize) -> Self {
        Self {
            calls: 1,
            max_depth: depth,
            ..Self::default()
        }
    }

    fn merge(&mut self, other: Self) {
        self.calls += other.calls;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.base_case_hits += other.base_case_hits;
        for (label, count) in other.octant_point_counts {
            *self.octant_point_counts.entry(label).or_insert(0) += count;
        }
    }
}

/// Index of the point with the largest box `[z, p]`; ties go to the lowest
/// index.
pub fn select_pivot(front: &Front) -> Result<usize> {
    if front.is_empty() {
        return Err(Error::EmptyFront);
    }
    Ok(pivot_index(
        front.points(),
        front.frame().lower().coords(),
    ))
}

fn pivot_index(points: &[Point], z: &[f64]) -> usize {
    let mut best = 0;
    let mut best_volume = box_volume_from(z, points[0].coords());
    for (i, p) in points.iter().enumerate().skip(1) {
        let volume = box_volume_from(z, p.coords());
        if volume > best_volume {
            best = i;
            best_volume = volume;
        }
    }
    best
}

/// Classifies `front`'s points (the pivot itself must not be among them)
/// into the proper hyperoctants induced by `pivot`, clipping each point to
/// the octants its box reaches and re-filtering every octant. Octants that
/// receive no volume-carrying point are absent from the result.
///
/// Fails with [`Error::PivotNotDominant`] if some point strictly exceeds the
/// pivot in every coordinate, which cannot happen for a volume-maximal
/// pivot.
pub fn split_octants(front: &Front, pivot: &Point) -> Result<BTreeMap<OctantLabel, Front>> {
    let frame = front.frame();
    if pivot.dim() != frame.dim() {
        return Err(Error::DimensionMismatch {
            expected: frame.dim(),
            actual: pivot.dim(),
        });
    }
    if frame.dim() > MAX_DIMENSION {
        return Err(Error::InvalidFrame(format!(
            "dimension {} exceeds the supported maximum {MAX_DIMENSION}",
            frame.dim()
        )));
    }
    let raw = split_internal(front.points(), pivot, frame)?;
    Ok(raw
        .into_iter()
        .map(|(bits, (points, sub))| {
            (OctantLabel(bits), Front::from_parts_unchecked(points, sub))
        })
        .collect())
}

type RawOctants = BTreeMap<u32, (Vec<Point>, Frame)>;

fn split_internal(points: &[Point], pivot: &Point, frame: &Frame) -> Result<RawOctants> {
    let d = frame.dim();
    let z = frame.lower().coords();
    let o = frame.upper().coords();
    let pv = pivot.coords();
    let all_ones: u32 = (1u32 << d) - 1;

    let mut buckets: BTreeMap<u32, Vec<Point>> = BTreeMap::new();
    let mut clipped = vec![0.0f64; d];
    for q in points {
        let qc = q.coords();
        let mut mask = 0u32;
        for i in 0..d {
            if qc[i] > pv[i] {
                mask |= 1 << i;
            }
        }
        if mask == all_ones {
            return Err(Error::PivotNotDominant);
        }
        // Every nonempty submask of the exceedance mask names an octant the
        // point's box reaches into.
        let mut label = mask;
        while label != 0 {
            let mut positive = true;
            for i in 0..d {
                let (lower, value) = if label >> i & 1 == 1 {
                    (pv[i], qc[i])
                } else {
                    (z[i], qc[i].min(pv[i]))
                };
                if value <= lower {
                    positive = false;
                    break;
                }
                clipped[i] = value;
            }
            if positive {
                buckets
                    .entry(label)
                    .or_default()
                    .push(Point::from_vec_unchecked(clipped.clone()));
            }
            label = (label - 1) & mask;
        }
    }

    let mut octants = RawOctants::new();
    for (label, bucket) in buckets {
        let keep = nondominated_indices(&bucket);
        let kept: Vec<Point> = keep.iter().map(|&i| bucket[i].clone()).collect();
        let mut lower = Vec::with_capacity(d);
        let mut upper = Vec::with_capacity(d);
        for i in 0..d {
            if label >> i & 1 == 1 {
                lower.push(pv[i]);
                upper.push(o[i]);
            } else {
                lower.push(z[i]);
                upper.push(pv[i]);
            }
        }
        octants.insert(label, (kept, Frame::from_corners_unchecked(lower, upper)));
    }
    Ok(octants)
}

/// Exact hypervolume of the region dominated by `front` within its frame,
/// along with recursion counters.
///
/// The input is filtered and brought into a canonical order first, so the
/// value is bit-identical under any permutation of the input points and
/// independent of `parallel`.
pub fn hypervolume(front: &Front, config: &QhvConfig) -> Result<(f64, RecursionStats)> {
    config.validate()?;
    if front.frame().dim() > MAX_DIMENSION {
        return Err(Error::InvalidFrame(format!(
            "dimension {} exceeds the supported maximum {MAX_DIMENSION}",
            front.frame().dim()
        )));
    }
    if front.is_empty() {
        let mut stats = RecursionStats::leaf(1);
        stats.base_case_hits = 1;
        return Ok((0.0, stats));
    }
    let filtered = filter_nondominated(front);
    let mut points = filtered.points().to_vec();
    points.sort_by(|a, b| {
        a.coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| x.total_cmp(y))
            .find(|ord| ord.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(recurse(points, front.frame().clone(), 1, config))
}

fn recurse(
    points: Vec<Point>,
    frame: Frame,
    depth: usize,
    config: &QhvConfig,
) -> (f64, RecursionStats) {
    let mut stats = RecursionStats::leaf(depth);
    let n = points.len();
    if n <= config.base_threshold {
        stats.base_case_hits = 1;
        return (
            ie_volume_raw(&points, frame.lower().coords()),
            stats,
        );
    }

    let z = frame.lower().coords();
    let pivot_at = pivot_index(&points, z);
    let mut rest = points;
    let pivot = rest.remove(pivot_at);
    debug_assert!(rest.iter().all(|p| p != &pivot));

    let mut total = box_volume_from(z, pivot.coords());
    let octants =
        split_internal(&rest, &pivot, &frame).expect("no point strictly exceeds a volume-maximal pivot");

    if config.collect_stats {
        for (&label, (sub_points, _)) in &octants {
            *stats
                .octant_point_counts
                .entry(OctantLabel(label))
                .or_insert(0) += sub_points.len() as u64;
        }
    }

    if config.parallel && n >= PARALLEL_CUTOFF && octants.len() > 1 {
        let subs: Vec<(Vec<Point>, Frame)> = octants.into_values().collect();
        let children: Vec<(f64, RecursionStats)> = subs
            .into_par_iter()
            .map(|(sub_points, sub_frame)| recurse(sub_points, sub_frame, depth + 1, config))
            .collect();
        for (value, child) in children {
            total += value;
            stats.merge(child);
        }
    } else {
        for (_, (sub_points, sub_frame)) in octants {
            let (value, child) = recurse(sub_points, sub_frame, depth + 1, config);
            total += value;
            stats.merge(child);
        }
    }
    (total, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{canonicalize, Orientation};
    use crate::oracles::ie_volume;
    use crate::rng::{from_seed, unit_f64, DetRng};
    use rand::RngCore;

    fn pt(coords: &[f64]) -> Point {
        Point::new(coords.to_vec()).unwrap()
    }

    fn unit_front(points: &[&[f64]]) -> Front {
        let pts: Vec<Point> = points.iter().map(|c| pt(c)).collect();
        Front::new(pts, Frame::unit(points[0].len())).unwrap()
    }

    fn fig_front() -> Front {
        unit_front(&[&[0.3, 0.6], &[0.5, 0.4], &[0.6, 0.2]])
    }

    fn random_front(rng: &mut DetRng, n: usize, d: usize) -> Front {
        let raw: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..d).map(|_| 0.05 + 0.95 * unit_f64(rng)).collect())
            .collect();
        canonicalize(&raw, &vec![0.0; d], Orientation::Maximize, Some(&vec![1.0; d]))
            .unwrap()
            .0
    }

    #[test]
    fn pivot_picks_largest_box() {
        assert_eq!(select_pivot(&fig_front()).unwrap(), 1);
        assert_eq!(select_pivot(&unit_front(&[&[0.2, 0.9]])).unwrap(), 0);
        // Equal volumes break toward the lower index.
        assert_eq!(
            select_pivot(&unit_front(&[&[0.4, 0.5], &[0.5, 0.4]])).unwrap(),
            0
        );
    }

    #[test]
    fn pivot_rejects_empty_front() {
        let empty = Front::new(vec![], Frame::unit(2)).unwrap();
        assert!(matches!(select_pivot(&empty), Err(Error::EmptyFront)));
    }

    #[test]
    fn split_matches_the_2d_quadrants() {
        let rest = unit_front(&[&[0.3, 0.6], &[0.6, 0.2]]);
        let octants = split_octants(&rest, &pt(&[0.5, 0.4])).unwrap();
        assert_eq!(octants.len(), 2);

        let upper_left = &octants[&OctantLabel(2)];
        assert_eq!(upper_left.points(), &[pt(&[0.3, 0.6])]);
        assert_eq!(upper_left.frame().lower().coords(), &[0.0, 0.4]);
        assert_eq!(upper_left.frame().upper().coords(), &[0.5, 1.0]);
        assert_eq!(OctantLabel(2).digits(2), "01");

        let lower_right = &octants[&OctantLabel(1)];
        assert_eq!(lower_right.points(), &[pt(&[0.6, 0.2])]);
        assert_eq!(lower_right.frame().lower().coords(), &[0.5, 0.0]);
        assert_eq!(lower_right.frame().upper().coords(), &[1.0, 0.4]);
        assert_eq!(OctantLabel(1).digits(2), "10");
    }

    #[test]
    fn split_drops_pivot_dominated_points() {
        let rest = unit_front(&[&[0.4, 0.3]]);
        let octants = split_octants(&rest, &pt(&[0.5, 0.4])).unwrap();
        assert!(octants.is_empty());
    }

    #[test]
    fn split_emits_every_submask_in_3d() {
        let rest = unit_front(&[&[0.6, 0.6, 0.4]]);
        let octants = split_octants(&rest, &pt(&[0.5, 0.5, 0.5])).unwrap();
        let labels: Vec<u32> = octants.keys().map(|l| l.bits()).collect();
        assert_eq!(labels, vec![1, 2, 3]);
        assert_eq!(octants[&OctantLabel(1)].points(), &[pt(&[0.6, 0.5, 0.4])]);
        assert_eq!(octants[&OctantLabel(2)].points(), &[pt(&[0.5, 0.6, 0.4])]);
        assert_eq!(octants[&OctantLabel(3)].points(), &[pt(&[0.6, 0.6, 0.4])]);
    }

    #[test]
    fn split_rejects_points_beyond_the_pivot() {
        let rest = unit_front(&[&[0.5, 0.5]]);
        assert!(matches!(
            split_octants(&rest, &pt(&[0.2, 0.2])),
            Err(Error::PivotNotDominant)
        ));
    }

    #[test]
    fn hypervolume_examples() {
        let cfg = QhvConfig::default();
        let (v, stats) = hypervolume(&fig_front(), &cfg).unwrap();
        assert!((v - 0.28).abs() < 1e-12);
        assert!(stats.calls >= 1 && stats.max_depth >= 1);

        let (v, _) = hypervolume(&unit_front(&[&[0.3, 0.6]]), &cfg).unwrap();
        assert!((v - 0.18).abs() < 1e-15);

        let empty = Front::new(vec![], Frame::unit(2)).unwrap();
        assert_eq!(hypervolume(&empty, &cfg).unwrap().0, 0.0);

        let (v, _) = hypervolume(&unit_front(&[&[1.0, 1.0]]), &cfg).unwrap();
        assert_eq!(v, 1.0);
    }

    #[test]
    fn config_bounds_are_enforced() {
        let bad = QhvConfig {
            base_threshold: 0,
            ..Default::default()
        };
        assert!(matches!(
            hypervolume(&fig_front(), &bad),
            Err(Error::InvalidConfig(_))
        ));
        let bad = QhvConfig {
            base_threshold: 21,
            ..Default::default()
        };
        assert!(matches!(
            hypervolume(&fig_front(), &bad),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn matches_inclusion_exclusion_across_thresholds() {
        let mut rng = from_seed(31);
        for case in 0..100 {
            let d = 2 + (case % 4) as usize;
            let n = 1 + (rng.next_u64() % 15) as usize;
            let front = random_front(&mut rng, n, d);
            let exact = ie_volume(&front).unwrap();
            for threshold in [1, 5, 10] {
                let cfg = QhvConfig {
                    base_threshold: threshold,
                    ..Default::default()
                };
                let (v, _) = hypervolume(&front, &cfg).unwrap();
                let rel = (v - exact).abs() / exact.max(1e-300);
                assert!(rel <= 1e-9, "d={d} n={n} t={threshold}: {v} vs {exact}");
            }
        }
    }

    #[test]
    fn split_conserves_volume() {
        let mut rng = from_seed(32);
        for case in 0..100 {
            let d = 2 + (case % 4) as usize;
            let n = 2 + (rng.next_u64() % 9) as usize;
            let front = random_front(&mut rng, n, d);
            if front.len() < 2 {
                continue;
            }
            let pivot_at = select_pivot(&front).unwrap();
            let pivot = front.points()[pivot_at].clone();
            let mut rest = front.points().to_vec();
            rest.remove(pivot_at);
            let rest = Front::new(rest, front.frame().clone()).unwrap();

            let whole = ie_volume(&front).unwrap();
            let mut sum = crate::geometry::box_volume(&pivot, front.frame()).unwrap();
            for (_, sub) in split_octants(&rest, &pivot).unwrap() {
                sum += ie_volume(&sub).unwrap();
            }
            assert!((whole - sum).abs() < 1e-12, "{whole} vs {sum}");
        }
    }

    #[test]
    fn point_permutation_is_bit_identical() {
        let mut rng = from_seed(33);
        let cfg = QhvConfig::default();
        for _ in 0..50 {
            let front = random_front(&mut rng, 20, 3);
            let (a, _) = hypervolume(&front, &cfg).unwrap();
            let mut shuffled = front.points().to_vec();
            // Fisher-Yates with the deterministic stream.
            for i in (1..shuffled.len()).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                shuffled.swap(i, j);
            }
            let permuted = Front::new(shuffled, front.frame().clone()).unwrap();
            let (b, _) = hypervolume(&permuted, &cfg).unwrap();
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn parallel_mode_is_bit_identical() {
        let mut rng = from_seed(34);
        let sequential = QhvConfig::default();
        let parallel = QhvConfig {
            parallel: true,
            ..Default::default()
        };
        for _ in 0..10 {
            let front = random_front(&mut rng, 150, 4);
            let (a, sa) = hypervolume(&front, &sequential).unwrap();
            let (b, sb) = hypervolume(&front, &parallel).unwrap();
            assert_eq!(a.to_bits(), b.to_bits());
            assert_eq!(sa.calls, sb.calls);
            assert_eq!(sa.max_depth, sb.max_depth);
        }
    }

    #[test]
    fn stats_track_octant_routing() {
        let cfg = QhvConfig {
            base_threshold: 1,
            collect_stats: true,
            ..Default::default()
        };
        let mut rng = from_seed(35);
        let front = random_front(&mut rng, 30, 3);
        let (_, stats) = hypervolume(&front, &cfg).unwrap();
        assert!(stats.base_case_hits >= 1);
        assert!(stats.calls > stats.base_case_hits);
        let all_ones = (1u32 << 3) - 1;
        for label in stats.octant_point_counts.keys() {
            assert!(label.bits() > 0 && label.bits() < all_ones);
        }
        assert!(!stats.octant_point_counts.is_empty());
    }

    #[test]
    fn no_point_strictly_exceeds_a_volume_maximal_pivot() {
        let mut rng = from_seed(37);
        for case in 0..1000u64 {
            let d = 2 + (case % 5) as usize;
            let n = 1 + (rng.next_u64() % 20) as usize;
            let front = random_front(&mut rng, n, d);
            if front.is_empty() {
                continue;
            }
            let pivot = &front.points()[select_pivot(&front).unwrap()];
            for q in front.points() {
                let exceeds_everywhere =
                    (0..d).all(|i| q[i] > pivot.coords()[i]);
                assert!(!exceeds_everywhere);
            }
        }
    }

    #[test]
    fn recursion_depth_is_bounded_by_the_point_count() {
        // The pivot leaves every octant subproblem strictly smaller.
        let cfg = QhvConfig {
            base_threshold: 1,
            ..Default::default()
        };
        let mut rng = from_seed(38);
        for _ in 0..50 {
            let front = random_front(&mut rng, 40, 3);
            let (_, stats) = hypervolume(&front, &cfg).unwrap();
            assert!(stats.max_depth <= front.len().max(1));
        }
    }

    #[test]
    fn bounds_hold_on_random_fronts() {
        let mut rng = from_seed(36);
        let cfg = QhvConfig::default();
        for _ in 0..200 {
            let front = random_front(&mut rng, 25, 3);
            if front.is_empty() {
                continue;
            }
            let (v, _) = hypervolume(&front, &cfg).unwrap();
            let boxes: Vec<f64> = front
                .points()
                .iter()
                .map(|p| crate::geometry::box_volume(p, front.frame()).unwrap())
                .collect();
            let max_box = boxes.iter().cloned().fold(0.0, f64::max);
            let sum_box: f64 = boxes.iter().sum();
            let cap = sum_box.min(front.frame().volume());
            assert!(v >= max_box - 1e-12 && v <= cap + 1e-12);
        }
    }
}
