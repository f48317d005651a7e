//! Core value types and predicates: points, frames, fronts, dominance,
//! box volumes, and the dominated-point elimination subroutine.
//!
//! All measures are taken relative to a [`Frame`], the axis-aligned region
//! `[z, o]`. A point `p` dominates `q` when `q` lies inside the box `[z, p]`
//! and the two points are not coordinate-wise equal. The hypervolume of a
//! [`Front`] is the Lebesgue measure of the union of the boxes `[z, p]` over
//! its points.

use crate::error::{Error, Result};

/// One d-dimensional objective vector. Coordinates are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    /// Builds a point, rejecting NaN and infinite coordinates.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        for (axis, &value) in coords.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { axis, value });
            }
        }
        Ok(Self { coords })
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<f64>) -> Self {
        debug_assert!(coords.iter().all(|c| c.is_finite()));
        Self { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl std::ops::Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

/// The axis-aligned region `[z, o]` under consideration. `z` is the lower
/// reference corner from which dominated boxes are measured; `o` is the
/// opposing upper corner. Strictly nonempty in every axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    z: Point,
    o: Point,
}

impl Frame {
    pub fn new(z: Point, o: Point) -> Result<Self> {
        if z.dim() != o.dim() {
            return Err(Error::DimensionMismatch {
                expected: z.dim(),
                actual: o.dim(),
            });
        }
        for i in 0..z.dim() {
            if z[i] >= o[i] {
                return Err(Error::InvalidFrame(format!(
                    "z[{i}] = {} is not below o[{i}] = {}",
                    z[i], o[i]
                )));
            }
        }
        Ok(Self { z, o })
    }

    /// The unit frame `[0, 1]^d`.
    pub fn unit(d: usize) -> Self {
        Self {
            z: Point::from_vec_unchecked(vec![0.0; d]),
            o: Point::from_vec_unchecked(vec![1.0; d]),
        }
    }

    pub(crate) fn from_corners_unchecked(z: Vec<f64>, o: Vec<f64>) -> Self {
        debug_assert_eq!(z.len(), o.len());
        debug_assert!(z.iter().zip(&o).all(|(a, b)| a < b));
        Self {
            z: Point::from_vec_unchecked(z),
            o: Point::from_vec_unchecked(o),
        }
    }

    pub fn dim(&self) -> usize {
        self.z.dim()
    }

    pub fn lower(&self) -> &Point {
        &self.z
    }

    pub fn upper(&self) -> &Point {
        &self.o
    }

    /// Volume of the whole region `[z, o]`.
    pub fn volume(&self) -> f64 {
        self.z
            .coords()
            .iter()
            .zip(self.o.coords())
            .map(|(a, b)| b - a)
            .product()
    }

    fn check_dim(&self, p: &Point) -> Result<()> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: p.dim(),
            });
        }
        Ok(())
    }
}

/// A set of points inside a frame. Points may still contain duplicates and
/// dominated members; [`filter_nondominated`] removes them.
#[derive(Debug, Clone, PartialEq)]
pub struct Front {
    points: Vec<Point>,
    frame: Frame,
}

impl Front {
    /// Builds a front, checking that every point lies inside `[z, o]`.
    pub fn new(points: Vec<Point>, frame: Frame) -> Result<Self> {
        for p in &points {
            frame.check_dim(p)?;
            for i in 0..frame.dim() {
                if p[i] < frame.z[i] || p[i] > frame.o[i] {
                    return Err(Error::InvalidFrame(format!(
                        "point coordinate {} at axis {i} is outside [{}, {}]",
                        p[i], frame.z[i], frame.o[i]
                    )));
                }
            }
        }
        Ok(Self { points, frame })
    }

    pub(crate) fn from_parts_unchecked(points: Vec<Point>, frame: Frame) -> Self {
        Self { points, frame }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Objective orientation of raw input data. Internally everything is
/// maximizing away from `z`; minimizing inputs are reflected through the
/// reference point first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Maximize,
    Minimize,
}

/// Ingestion tallies from [`canonicalize`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CanonicalizeReport {
    /// Points dropped because some coordinate was at or below `z`
    /// (zero dominated volume).
    pub dropped: usize,
    /// Points with at least one coordinate clamped down to `o`.
    pub clamped: usize,
}

/// True when `p[i] >= q[i]` for every axis, duplicates included.
pub(crate) fn weakly_dominates(p: &[f64], q: &[f64]) -> bool {
    p.iter().zip(q).all(|(a, b)| a >= b)
}

/// Does `p` dominate `q` inside `frame`? Domination is coordinate-wise
/// `q <= p` with equal points excluded.
pub fn dominates(p: &Point, q: &Point, frame: &Frame) -> Result<bool> {
    frame.check_dim(p)?;
    frame.check_dim(q)?;
    Ok(weakly_dominates(p.coords(), q.coords()) && p != q)
}

pub(crate) fn box_volume_from(lower: &[f64], p: &[f64]) -> f64 {
    let mut v = 1.0;
    for (a, b) in p.iter().zip(lower) {
        let w = a - b;
        if w <= 0.0 {
            return 0.0;
        }
        v *= w;
    }
    v
}

/// Volume of the single box `[z, p]`, i.e. the region dominated by `p` alone.
pub fn box_volume(p: &Point, frame: &Frame) -> Result<f64> {
    frame.check_dim(p)?;
    Ok(box_volume_from(frame.z.coords(), p.coords()))
}

/// Indices of points not weakly dominated by another point. Later exact
/// duplicates are treated as dominated, so only the first copy survives.
/// Returned indices are ascending (input order).
pub(crate) fn nondominated_indices(points: &[Point]) -> Vec<usize> {
    let n = points.len();
    if n <= 1 {
        return (0..n).collect();
    }
    if points[0].dim() == 2 {
        return nondominated_indices_2d(points);
    }

    // A dominator always has a strictly larger coordinate sum (equal sums
    // mean equal points), so scanning in descending sum order only ever
    // needs to compare against prior survivors.
    let mut order: Vec<usize> = (0..n).collect();
    let sums: Vec<f64> = points.iter().map(|p| p.coords().iter().sum()).collect();
    order.sort_by(|&a, &b| sums[b].partial_cmp(&sums[a]).unwrap());

    let mut survivors: Vec<usize> = Vec::new();
    for &i in &order {
        let q = points[i].coords();
        let dominated = survivors
            .iter()
            .any(|&s| weakly_dominates(points[s].coords(), q));
        if !dominated {
            survivors.push(i);
        }
    }
    survivors.sort_unstable();
    survivors
}

fn nondominated_indices_2d(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    // Descending x, then descending y; the stable sort keeps the first
    // occurrence of exact duplicates in front.
    order.sort_by(|&a, &b| {
        points[b][0]
            .total_cmp(&points[a][0])
            .then(points[b][1].total_cmp(&points[a][1]))
    });
    let mut survivors = Vec::new();
    let mut best_y = f64::NEG_INFINITY;
    for &i in &order {
        if points[i][1] > best_y {
            best_y = points[i][1];
            survivors.push(i);
        }
    }
    survivors.sort_unstable();
    survivors
}

/// Removes every point dominated by another member of the front and
/// collapses exact duplicates to their first occurrence. The relative order
/// of survivors is preserved.
pub fn filter_nondominated(front: &Front) -> Front {
    let keep = nondominated_indices(front.points());
    let points = keep.iter().map(|&i| front.points[i].clone()).collect();
    Front::from_parts_unchecked(points, front.frame.clone())
}

/// Ingests raw objective vectors into a [`Front`].
///
/// For [`Orientation::Maximize`] the reference point becomes the lower
/// corner `z`. For [`Orientation::Minimize`] every point `x` is mapped to
/// `reference - x` and the result is treated as maximizing from `z = 0`.
///
/// The upper corner is `upper` when given, otherwise the coordinate-wise
/// maximum of the surviving points, extended by 1.0 in any axis that would
/// collapse onto `z`. Points with a coordinate at or below `z` contribute no
/// volume and are dropped (tallied, not an error); coordinates above `o` are
/// clamped down to it.
pub fn canonicalize(
    points: &[Vec<f64>],
    reference: &[f64],
    orientation: Orientation,
    upper: Option<&[f64]>,
) -> Result<(Front, CanonicalizeReport)> {
    let d = reference.len();
    if d == 0 {
        return Err(Error::InvalidFrame("reference point is empty".into()));
    }
    for (axis, &value) in reference.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite { axis, value });
        }
    }

    let z: Vec<f64> = match orientation {
        Orientation::Maximize => reference.to_vec(),
        Orientation::Minimize => vec![0.0; d],
    };

    let mut report = CanonicalizeReport::default();
    let mut kept: Vec<Vec<f64>> = Vec::with_capacity(points.len());
    for raw in points {
        if raw.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: raw.len(),
            });
        }
        let mut p = Vec::with_capacity(d);
        for (axis, &value) in raw.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { axis, value });
            }
            p.push(match orientation {
                Orientation::Maximize => value,
                Orientation::Minimize => reference[axis] - value,
            });
        }
        if p.iter().zip(&z).any(|(v, zi)| v <= zi) {
            report.dropped += 1;
            continue;
        }
        kept.push(p);
    }

    let mut o: Vec<f64> = match upper {
        Some(u) => {
            if u.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    actual: u.len(),
                });
            }
            u.to_vec()
        }
        None => {
            let mut o = z.clone();
            for p in &kept {
                for i in 0..d {
                    o[i] = o[i].max(p[i]);
                }
            }
            o
        }
    };
    for i in 0..d {
        if !o[i].is_finite() {
            return Err(Error::NonFinite { axis: i, value: o[i] });
        }
        if o[i] <= z[i] {
            if upper.is_some() {
                return Err(Error::InvalidFrame(format!(
                    "upper corner {} at axis {i} is not above z = {}",
                    o[i], z[i]
                )));
            }
            o[i] = z[i] + 1.0;
        }
    }

    let mut out = Vec::with_capacity(kept.len());
    for mut p in kept {
        let mut clamped = false;
        for i in 0..d {
            if p[i] > o[i] {
                p[i] = o[i];
                clamped = true;
            }
        }
        if clamped {
            report.clamped += 1;
        }
        out.push(Point::from_vec_unchecked(p));
    }

    let frame = Frame::from_corners_unchecked(z, o);
    Ok((Front::from_parts_unchecked(out, frame), report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{from_seed, unit_f64, DetRng};

    fn pt(coords: &[f64]) -> Point {
        Point::new(coords.to_vec()).unwrap()
    }

    fn front2(points: &[&[f64]]) -> Front {
        let pts = points.iter().map(|c| pt(c)).collect();
        Front::new(pts, Frame::unit(points[0].len())).unwrap()
    }

    #[test]
    fn dominance_examples() {
        let frame = Frame::unit(2);
        assert!(!dominates(&pt(&[0.5, 0.4]), &pt(&[0.6, 0.2]), &frame).unwrap());
        assert!(!dominates(&pt(&[0.3, 0.6]), &pt(&[0.3, 0.6]), &frame).unwrap());
        assert!(dominates(&pt(&[0.5, 0.4]), &pt(&[0.5, 0.2]), &frame).unwrap());
    }

    #[test]
    fn dominance_dimension_mismatch() {
        let frame = Frame::unit(2);
        let err = dominates(&pt(&[0.5, 0.4, 0.1]), &pt(&[0.5, 0.2]), &frame);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn box_volume_examples() {
        let frame = Frame::unit(2);
        assert!((box_volume(&pt(&[0.3, 0.6]), &frame).unwrap() - 0.18).abs() < 1e-15);
        assert_eq!(box_volume(&pt(&[1.0, 1.0]), &frame).unwrap(), 1.0);
        assert_eq!(box_volume(&pt(&[0.0, 0.0]), &frame).unwrap(), 0.0);
    }

    #[test]
    fn filter_examples() {
        let f = front2(&[&[0.3, 0.6], &[0.5, 0.4], &[0.6, 0.2]]);
        assert_eq!(filter_nondominated(&f).points(), f.points());

        let f = front2(&[&[0.3, 0.6], &[0.2, 0.5]]);
        let out = filter_nondominated(&f);
        assert_eq!(out.points(), &[pt(&[0.3, 0.6])]);

        let f = front2(&[&[0.5, 0.4], &[0.5, 0.4]]);
        let out = filter_nondominated(&f);
        assert_eq!(out.points(), &[pt(&[0.5, 0.4])]);
    }

    #[test]
    fn filter_preserves_survivor_order() {
        let f = front2(&[&[0.6, 0.2], &[0.1, 0.1], &[0.3, 0.6], &[0.5, 0.4]]);
        let out = filter_nondominated(&f);
        assert_eq!(
            out.points(),
            &[pt(&[0.6, 0.2]), pt(&[0.3, 0.6]), pt(&[0.5, 0.4])]
        );
    }

    #[test]
    fn filter_is_idempotent() {
        let mut rng = from_seed(11);
        for _ in 0..50 {
            let f = random_front(&mut rng, 30, 3);
            let once = filter_nondominated(&f);
            let twice = filter_nondominated(&once);
            assert_eq!(once.points(), twice.points());
        }
    }

    #[test]
    fn canonicalize_examples() {
        let (front, rep) =
            canonicalize(&[vec![0.3, 0.6]], &[0.0, 0.0], Orientation::Maximize, None).unwrap();
        assert_eq!(front.points(), &[pt(&[0.3, 0.6])]);
        assert_eq!(rep.dropped, 0);

        let (front, _) =
            canonicalize(&[vec![0.7, 0.4]], &[1.0, 1.0], Orientation::Minimize, None).unwrap();
        assert_eq!(front.points().len(), 1);
        assert!((front.points()[0][0] - 0.3).abs() < 1e-15);
        assert!((front.points()[0][1] - 0.6).abs() < 1e-15);

        let (front, rep) =
            canonicalize(&[vec![0.0, 0.6]], &[0.0, 0.0], Orientation::Maximize, None).unwrap();
        assert!(front.is_empty());
        assert_eq!(rep.dropped, 1);
    }

    #[test]
    fn canonicalize_extends_degenerate_upper() {
        let (front, _) = canonicalize(&[], &[0.0, 0.0], Orientation::Maximize, None).unwrap();
        assert_eq!(front.frame().upper().coords(), &[1.0, 1.0]);
    }

    #[test]
    fn canonicalize_clamps_to_supplied_upper() {
        let (front, rep) = canonicalize(
            &[vec![0.5, 1.4]],
            &[0.0, 0.0],
            Orientation::Maximize,
            Some(&[1.0, 1.0]),
        )
        .unwrap();
        assert_eq!(front.points(), &[pt(&[0.5, 1.0])]);
        assert_eq!(rep.clamped, 1);
    }

    #[test]
    fn canonicalize_rejects_non_finite() {
        let err = canonicalize(
            &[vec![f64::NAN, 0.5]],
            &[0.0, 0.0],
            Orientation::Maximize,
            None,
        );
        assert!(matches!(err, Err(Error::NonFinite { .. })));
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
    fn dominance_is_irreflexive_and_antisymmetric() {
        let mut rng = from_seed(3);
        let frame = Frame::unit(4);
        for _ in 0..1000 {
            let f = random_front(&mut rng, 2, 4);
            if f.len() < 2 {
                continue;
            }
            let (p, q) = (&f.points()[0], &f.points()[1]);
            assert!(!dominates(p, p, &frame).unwrap());
            if p != q {
                assert!(
                    !(dominates(p, q, &frame).unwrap() && dominates(q, p, &frame).unwrap())
                );
            }
        }
    }

    #[test]
    fn dominance_is_transitive() {
        let mut rng = from_seed(4);
        let frame = Frame::unit(3);
        let mut checked = 0;
        while checked < 1000 {
            // Build a chain by perturbing downward so domination is common.
            let a: Vec<f64> = (0..3).map(|_| 0.5 + 0.5 * unit_f64(&mut rng)).collect();
            let b: Vec<f64> = a.iter().map(|v| v * (0.3 + 0.7 * unit_f64(&mut rng))).collect();
            let c: Vec<f64> = b.iter().map(|v| v * (0.3 + 0.7 * unit_f64(&mut rng))).collect();
            let (a, b, c) = (pt(&a), pt(&b), pt(&c));
            if dominates(&a, &b, &frame).unwrap() && dominates(&b, &c, &frame).unwrap() {
                assert!(dominates(&a, &c, &frame).unwrap());
                checked += 1;
            }
        }
    }

    #[test]
    fn box_volume_is_monotone_under_dominance() {
        let mut rng = from_seed(5);
        let frame = Frame::unit(3);
        for _ in 0..1000 {
            let p: Vec<f64> = (0..3).map(|_| 0.2 + 0.8 * unit_f64(&mut rng)).collect();
            let q: Vec<f64> = p.iter().map(|v| v * (0.2 + 0.8 * unit_f64(&mut rng))).collect();
            let (p, q) = (pt(&p), pt(&q));
            if dominates(&p, &q, &frame).unwrap() {
                let vp = box_volume(&p, &frame).unwrap();
                let vq = box_volume(&q, &frame).unwrap();
                assert!(vp >= vq);
                if q.coords().iter().all(|&v| v > 0.0) && p != q {
                    assert!(vp > vq);
                }
            }
        }
    }

    #[test]
    fn minimize_is_exactly_reflected_maximize() {
        let mut rng = from_seed(6);
        for _ in 0..100 {
            let d = 3;
            let raw: Vec<Vec<f64>> = (0..8)
                .map(|_| (0..d).map(|_| unit_f64(&mut rng) * 0.9).collect())
                .collect();
            let reference = vec![1.0; d];
            let (min_front, _) =
                canonicalize(&raw, &reference, Orientation::Minimize, None).unwrap();
            let reflected: Vec<Vec<f64>> = raw
                .iter()
                .map(|p| p.iter().zip(&reference).map(|(x, r)| r - x).collect())
                .collect();
            let (max_front, _) =
                canonicalize(&reflected, &vec![0.0; d], Orientation::Maximize, None).unwrap();
            assert_eq!(min_front.points(), max_front.points());
            assert_eq!(min_front.frame(), max_front.frame());
        }
    }
}
