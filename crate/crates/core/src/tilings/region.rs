use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::geometry::{Orientation, Segment, TriPoint, Triangle};
use super::TilingError;
use crate::paths::{LatticePath, Step};
use crate::shapes::SkewShape;

/// Simply connected union of unit triangles bounded by a closed lattice walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    /// Closed walk of unit lattice steps; the first vertex is not repeated.
    boundary: Vec<TriPoint>,
    #[serde(skip)]
    triangles: BTreeSet<Triangle>,
}

impl Region {
    pub fn empty() -> Self {
        Region { boundary: Vec::new(), triangles: BTreeSet::new() }
    }

    /// Builds the region enclosed by a closed walk of unit lattice steps.
    pub fn from_boundary(boundary: Vec<TriPoint>) -> Result<Self, TilingError> {
        if boundary.is_empty() {
            return Ok(Region::empty());
        }
        let len = boundary.len();
        for i in 0..len {
            let step = boundary[(i + 1) % len] - boundary[i];
            if !step.is_unit() {
                return Err(TilingError::DegenerateBoundary(format!(
                    "non-unit step from {} to {}",
                    boundary[i],
                    boundary[(i + 1) % len]
                )));
            }
        }
        let mut seen = HashSet::new();
        if let Some(p) = boundary.iter().find(|p| !seen.insert(**p)) {
            return Err(TilingError::DegenerateBoundary(format!("walk revisits {p}")));
        }
        if len < 3 {
            return Err(TilingError::DegenerateBoundary("fewer than three vertices".into()));
        }

        let (mut a_min, mut a_max) = (i64::MAX, i64::MIN);
        let (mut b_min, mut b_max) = (i64::MAX, i64::MIN);
        for p in &boundary {
            a_min = a_min.min(p.a);
            a_max = a_max.max(p.a);
            b_min = b_min.min(p.b);
            b_max = b_max.max(p.b);
        }
        // Polygon in the chart (a, b) -> (2a + b, b), scaled by 3 to match
        // scaled centroids.
        let chart: Vec<(i128, i128)> =
            boundary.iter().map(|p| (3 * (2 * p.a + p.b) as i128, 3 * p.b as i128)).collect();
        let mut triangles = BTreeSet::new();
        for b in b_min..b_max {
            for a in a_min - (b_max - b_min)..=a_max {
                for t in [Triangle::up(a, b), Triangle::down(a, b)] {
                    let (ca, cb) = t.centroid3();
                    if inside(&chart, ((2 * ca + cb) as i128, cb as i128)) {
                        triangles.insert(t);
                    }
                }
            }
        }
        Ok(Region { boundary, triangles })
    }

    pub fn boundary(&self) -> &[TriPoint] {
        &self.boundary
    }

    pub fn triangles(&self) -> &BTreeSet<Triangle> {
        &self.triangles
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn up_count(&self) -> usize {
        self.triangles.iter().filter(|t| t.orient == Orientation::Up).count()
    }

    pub fn down_count(&self) -> usize {
        self.triangles.len() - self.up_count()
    }

    /// Boundary vertices where the walk turns.
    pub fn corners(&self) -> Vec<TriPoint> {
        let len = self.boundary.len();
        (0..len)
            .filter(|&i| {
                let prev = self.boundary[(i + len - 1) % len];
                let next = self.boundary[(i + 1) % len];
                self.boundary[i] - prev != next - self.boundary[i]
            })
            .map(|i| self.boundary[i])
            .collect()
    }

    pub fn boundary_segments(&self) -> Vec<Segment> {
        let len = self.boundary.len();
        (0..len).map(|i| Segment::new(self.boundary[i], self.boundary[(i + 1) % len])).collect()
    }

    /// Twice the shoelace area in the oblique chart, i.e. the area measured
    /// in unit triangles.
    pub fn shoelace_triangles(&self) -> u64 {
        let len = self.boundary.len();
        let twice: i64 = (0..len)
            .map(|i| {
                let (p, q) = (self.boundary[i], self.boundary[(i + 1) % len]);
                p.a * q.b - q.a * p.b
            })
            .sum();
        twice.unsigned_abs()
    }
}

// Even-odd ray test toward +x. The query never lies on a horizontal line
// through a vertex, since centroid rows are not multiples of 3.
fn inside(poly: &[(i128, i128)], (x, y): (i128, i128)) -> bool {
    let mut crossings = 0;
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        if (p.1 > y) != (q.1 > y) {
            // x < p.x + (y - p.y) (q.x - p.x) / (q.y - p.y)
            let lhs = (x - p.0) * (q.1 - p.1);
            let rhs = (y - p.1) * (q.0 - p.0);
            let left_of_edge = if q.1 > p.1 { lhs < rhs } else { lhs > rhs };
            if left_of_edge {
                crossings += 1;
            }
        }
    }
    crossings % 2 == 1
}

fn walk(start: TriPoint, path: &LatticePath) -> Vec<TriPoint> {
    let mut p = start;
    let mut out = vec![p];
    for step in path.steps() {
        p = p + match step {
            Step::E => TriPoint::E1,
            Step::N => TriPoint::E2,
        };
        out.push(p);
    }
    out
}

/// The triangular-lattice region of a skew shape: the sheared diagram with
/// its southeastern boundary pushed one unit in the −π/3 direction.
///
/// The walk follows the μ-profile from the origin to `(λ_1, n)`, steps by
/// `v = e1 - e2`, follows the λ-profile translated by `v` backward to `v`,
/// and closes with `-v`.
pub fn region_from_shape(shape: &SkewShape) -> Region {
    if shape.n() == 0 {
        return Region::empty();
    }
    let profiles = shape.profiles();
    let mut boundary = walk(TriPoint::ORIGIN, &profiles.mu_profile);
    let mut lower = walk(TriPoint::V, &profiles.lambda_profile);
    lower.reverse();
    boundary.extend(lower);
    Region::from_boundary(boundary).expect("shape regions have simple boundaries")
}
