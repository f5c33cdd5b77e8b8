//! Two-dimensional rate regions described by half-planes.
//!
//! A [`RateRegion`] is the set of rate pairs `(R1, R2)` in the nonnegative
//! quadrant satisfying every constraint `a1*R1 + a2*R2 <= b`. Regions are
//! always bounded and convex, and may be degenerate (a segment or a point).

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Feasibility and deduplication tolerance.
pub const TOL: f64 = 1e-9;

/// `a1 * R1 + a2 * R2 <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constraint {
    pub a1: f64,
    pub a2: f64,
    pub b: f64,
}

impl Constraint {
    pub fn new(a1: f64, a2: f64, b: f64) -> Self {
        Self { a1, a2, b }
    }

    /// `R1 <= b`
    pub fn r1(b: f64) -> Self {
        Self::new(1.0, 0.0, b)
    }

    /// `R2 <= b`
    pub fn r2(b: f64) -> Self {
        Self::new(0.0, 1.0, b)
    }

    /// `R1 + R2 <= b`
    pub fn sum(b: f64) -> Self {
        Self::new(1.0, 1.0, b)
    }

    pub fn holds(&self, p: RatePair) -> bool {
        self.a1 * p.r1 + self.a2 * p.r2 <= self.b + TOL
    }

    fn validate(&self) -> Result<()> {
        let finite = self.a1.is_finite() && self.a2.is_finite() && self.b.is_finite();
        if !finite {
            return Err(Error::Geometry(format!("non-finite constraint {self:?}")));
        }
        if self.a1 < 0.0 || self.a2 < 0.0 {
            return Err(Error::Geometry(format!(
                "constraint coefficients must be nonnegative: {self:?}"
            )));
        }
        if self.a1 == 0.0 && self.a2 == 0.0 {
            return Err(Error::Geometry("constraint with a1 = a2 = 0".into()));
        }
        if self.b < 0.0 {
            return Err(Error::Geometry(format!(
                "constraint bound must be nonnegative: {self:?}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatePair {
    pub r1: f64,
    pub r2: f64,
}

impl RatePair {
    pub fn new(r1: f64, r2: f64) -> Self {
        Self { r1, r2 }
    }

    fn close_to(&self, other: &RatePair) -> bool {
        (self.r1 - other.r1).abs() <= TOL && (self.r2 - other.r2).abs() <= TOL
    }
}

impl From<(f64, f64)> for RatePair {
    fn from((r1, r2): (f64, f64)) -> Self {
        Self { r1, r2 }
    }
}

/// Bounded polytope in the nonnegative quadrant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateRegion {
    constraints: Vec<Constraint>,
}

impl RateRegion {
    /// Validates each constraint and that the region is bounded, i.e. some
    /// constraint limits R1 and some constraint limits R2.
    pub fn new(constraints: Vec<Constraint>) -> Result<Self> {
        for c in &constraints {
            c.validate()?;
        }
        if !constraints.iter().any(|c| c.a1 > 0.0) || !constraints.iter().any(|c| c.a2 > 0.0) {
            return Err(Error::Geometry("region is unbounded".into()));
        }
        Ok(Self { constraints })
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }
}

impl<'de> Deserialize<'de> for RateRegion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            constraints: Vec<Constraint>,
        }
        let raw = Raw::deserialize(d)?;
        RateRegion::new(raw.constraints).map_err(serde::de::Error::custom)
    }
}

pub fn contains(r: &RateRegion, p: RatePair) -> bool {
    p.r1 >= -TOL && p.r2 >= -TOL && r.constraints.iter().all(|c| c.holds(p))
}

/// Vertices in counterclockwise order starting at the origin.
///
/// Every pairwise intersection of the constraint lines and the two axes is
/// a candidate; feasible candidates are deduplicated and then ordered by a
/// convex hull pass, which also drops the rare candidate that lands in the
/// middle of an edge of a degenerate region.
pub fn vertices(r: &RateRegion) -> Vec<RatePair> {
    let mut lines: Vec<Constraint> = vec![Constraint::new(1.0, 0.0, 0.0), Constraint::new(0.0, 1.0, 0.0)];
    lines.extend_from_slice(&r.constraints);

    let mut points: Vec<RatePair> = Vec::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            let det = a.a1 * b.a2 - a.a2 * b.a1;
            if det.abs() < 1e-15 {
                continue;
            }
            let p = RatePair::new((a.b * b.a2 - a.a2 * b.b) / det, (a.a1 * b.b - a.b * b.a1) / det);
            if contains(r, p) && !points.iter().any(|q| q.close_to(&p)) {
                points.push(p);
            }
        }
    }
    convex_hull_from_origin(points)
}

/// Andrew's monotone chain, rotated so the origin comes first.
fn convex_hull_from_origin(mut pts: Vec<RatePair>) -> Vec<RatePair> {
    for p in &mut pts {
        // snap tolerance-level noise so the hull is not fooled by -1e-17
        if p.r1.abs() <= TOL {
            p.r1 = 0.0;
        }
        if p.r2.abs() <= TOL {
            p.r2 = 0.0;
        }
    }
    pts.sort_by(|a, b| a.r1.total_cmp(&b.r1).then(a.r2.total_cmp(&b.r2)));
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: &RatePair, a: &RatePair, b: &RatePair| {
        (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1)
    };
    let mut hull: Vec<RatePair> = Vec::with_capacity(pts.len() * 2);
    for p in &pts {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= TOL * TOL {
            hull.pop();
        }
        hull.push(*p);
    }
    let lower_len = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= TOL * TOL {
            hull.pop();
        }
        hull.push(*p);
    }
    hull.pop();
    // The lower chain starts at the lexicographically smallest point, which
    // is the origin whenever the origin is feasible.
    if let Some(pos) = hull.iter().position(|p| p.r1 == 0.0 && p.r2 == 0.0) {
        hull.rotate_left(pos);
    }
    hull
}

/// Constraint union; the result is the set intersection.
pub fn intersect(a: &RateRegion, b: &RateRegion) -> RateRegion {
    let mut constraints = a.constraints.clone();
    constraints.extend_from_slice(&b.constraints);
    RateRegion { constraints }
}

/// Shoelace area over the ordered vertices.
pub fn area(r: &RateRegion) -> f64 {
    let v = vertices(r);
    if v.len() < 3 {
        return 0.0;
    }
    let twice: f64 = v
        .iter()
        .zip(v.iter().cycle().skip(1))
        .map(|(p, q)| p.r1 * q.r2 - q.r1 * p.r2)
        .sum();
    twice.abs() / 2.0
}

/// `a ⊆ b`. Sufficient to check the vertices of `a` since both are convex.
pub fn is_subset(a: &RateRegion, b: &RateRegion) -> bool {
    vertices(a).into_iter().all(|p| contains(b, p))
}

/// Vertex sets equal within [`TOL`], irrespective of order.
pub fn same_vertices(a: &[RatePair], b: &[RatePair]) -> bool {
    a.len() == b.len()
        && a.iter().all(|p| b.iter().any(|q| p.close_to(q)))
        && b.iter().all(|p| a.iter().any(|q| p.close_to(q)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(cs: &[(f64, f64, f64)]) -> RateRegion {
        RateRegion::new(cs.iter().map(|&(a1, a2, b)| Constraint::new(a1, a2, b)).collect()).unwrap()
    }

    fn pairs(v: &[(f64, f64)]) -> Vec<RatePair> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn pentagon_vertices_in_order() {
        let r = region(&[(1.0, 0.0, 5.0), (0.0, 1.0, 5.0), (1.0, 1.0, 7.0)]);
        assert_eq!(
            vertices(&r),
            pairs(&[(0.0, 0.0), (5.0, 0.0), (5.0, 2.0), (2.0, 5.0), (0.0, 5.0)])
        );
        assert!((area(&r) - 20.5).abs() < 1e-12);
    }

    #[test]
    fn unit_square() {
        let r = region(&[(1.0, 0.0, 1.0), (0.0, 1.0, 1.0)]);
        assert_eq!(
            vertices(&r),
            pairs(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
        );
        assert_eq!(area(&r), 1.0);
    }

    #[test]
    fn degenerate_segment_and_point() {
        let seg = region(&[(1.0, 0.0, 2.0), (0.0, 1.0, 0.0)]);
        assert_eq!(vertices(&seg), pairs(&[(0.0, 0.0), (2.0, 0.0)]));
        assert_eq!(area(&seg), 0.0);

        let point = region(&[(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (1.0, 1.0, 0.0)]);
        assert_eq!(vertices(&point), pairs(&[(0.0, 0.0)]));
        assert_eq!(area(&point), 0.0);
    }

    #[test]
    fn redundant_constraint_through_corner() {
        let r = region(&[(1.0, 0.0, 5.0), (0.0, 1.0, 5.0), (1.0, 1.0, 10.0)]);
        assert_eq!(
            vertices(&r),
            pairs(&[(0.0, 0.0), (5.0, 0.0), (5.0, 5.0), (0.0, 5.0)])
        );
    }

    #[test]
    fn containment() {
        let r = region(&[(1.0, 0.0, 5.0), (0.0, 1.0, 5.0), (1.0, 1.0, 7.0)]);
        assert!(contains(&r, RatePair::new(5.0, 2.0)));
        assert!(!contains(&r, RatePair::new(5.0, 3.0)));
        assert!(contains(&r, RatePair::new(0.0, 0.0)));
        assert!(!contains(&r, RatePair::new(-1.0, 0.0)));
    }

    #[test]
    fn intersection_and_subset() {
        let square = region(&[(1.0, 0.0, 5.0), (0.0, 1.0, 5.0)]);
        let sum = region(&[(1.0, 1.0, 7.0)]);
        let both = intersect(&square, &sum);
        assert_eq!(
            vertices(&both),
            pairs(&[(0.0, 0.0), (5.0, 0.0), (5.0, 2.0), (2.0, 5.0), (0.0, 5.0)])
        );
        assert!(same_vertices(
            &vertices(&intersect(&sum, &square)),
            &vertices(&both)
        ));
        assert!(same_vertices(
            &vertices(&intersect(&square, &square)),
            &vertices(&square)
        ));
        assert!(is_subset(&both, &square));
        assert!(!is_subset(&square, &both));
        assert!(is_subset(&square, &square));
    }

    #[test]
    fn invalid_constraints_rejected() {
        assert!(RateRegion::new(vec![Constraint::new(1.0, 0.0, 1.0)]).is_err());
        assert!(RateRegion::new(vec![Constraint::new(0.0, 0.0, 1.0), Constraint::sum(1.0)]).is_err());
        assert!(RateRegion::new(vec![Constraint::sum(-1.0)]).is_err());
        assert!(RateRegion::new(vec![Constraint::new(-1.0, 1.0, 1.0)]).is_err());
        assert!(RateRegion::new(vec![Constraint::sum(f64::NAN)]).is_err());
    }

    #[test]
    fn deserialization_validates() {
        let ok: RateRegion = serde_json::from_str(r#"{"constraints":[{"a1":1,"a2":1,"b":2}]}"#).unwrap();
        assert_eq!(ok.constraints().len(), 1);
        assert!(serde_json::from_str::<RateRegion>(r#"{"constraints":[{"a1":1,"a2":0,"b":2}]}"#).is_err());
    }
}
