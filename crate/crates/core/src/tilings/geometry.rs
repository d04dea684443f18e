use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::{Serialize, SerializeTuple, Serializer};

/// Point `a·e1 + b·e2` of the triangular lattice, with `e1` at 0° and `e2`
/// at 60°.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriPoint {
    pub a: i64,
    pub b: i64,
}

impl TriPoint {
    pub const ORIGIN: TriPoint = TriPoint { a: 0, b: 0 };
    pub const E1: TriPoint = TriPoint { a: 1, b: 0 };
    pub const E2: TriPoint = TriPoint { a: 0, b: 1 };
    /// Unit step in the −π/3 direction, `e1 - e2`.
    pub const V: TriPoint = TriPoint { a: 1, b: -1 };

    pub const fn new(a: i64, b: i64) -> Self {
        TriPoint { a, b }
    }

    /// Cartesian coordinates `(a + b/2, b·√3/2)`.
    pub fn cartesian(self) -> (f64, f64) {
        (self.a as f64 + self.b as f64 / 2.0, self.b as f64 * 3f64.sqrt() / 2.0)
    }

    /// Whether this is one of the six unit lattice vectors.
    pub fn is_unit(self) -> bool {
        matches!((self.a, self.b), (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, -1) | (-1, 1))
    }
}

impl Add for TriPoint {
    type Output = TriPoint;
    fn add(self, o: TriPoint) -> TriPoint {
        TriPoint { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for TriPoint {
    type Output = TriPoint;
    fn sub(self, o: TriPoint) -> TriPoint {
        TriPoint { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for TriPoint {
    type Output = TriPoint;
    fn neg(self) -> TriPoint {
        TriPoint { a: -self.a, b: -self.b }
    }
}

impl fmt::Display for TriPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Serialize for TriPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(serializer)
    }
}

/// Unit lattice segment with endpoints stored in sorted order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub p: TriPoint,
    pub q: TriPoint,
}

impl Segment {
    pub fn new(p: TriPoint, q: TriPoint) -> Self {
        if p <= q {
            Segment { p, q }
        } else {
            Segment { p: q, q: p }
        }
    }

    pub fn translate(self, by: TriPoint) -> Self {
        Segment::new(self.p + by, self.q + by)
    }

    pub fn is_parallel_to(self, dir: TriPoint) -> bool {
        let d = self.q - self.p;
        d == dir || d == -dir
    }
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.p, self.q].serialize(serializer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

/// Unit triangle. `Up` has vertices `(a,b), (a+1,b), (a,b+1)`; `Down` has
/// `(a+1,b), (a,b+1), (a+1,b+1)`.
///
/// Ordered row by row (`b`), then left to right: `Up(a,b) < Down(a,b) < Up(a+1,b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub a: i64,
    pub b: i64,
    pub orient: Orientation,
}

impl Ord for Triangle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.b, self.a, self.orient).cmp(&(other.b, other.a, other.orient))
    }
}

impl PartialOrd for Triangle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Triangle {
    pub const fn up(a: i64, b: i64) -> Self {
        Triangle { a, b, orient: Orientation::Up }
    }

    pub const fn down(a: i64, b: i64) -> Self {
        Triangle { a, b, orient: Orientation::Down }
    }

    pub fn vertices(self) -> [TriPoint; 3] {
        let (a, b) = (self.a, self.b);
        match self.orient {
            Orientation::Up => [TriPoint::new(a, b), TriPoint::new(a + 1, b), TriPoint::new(a, b + 1)],
            Orientation::Down => [TriPoint::new(a + 1, b), TriPoint::new(a, b + 1), TriPoint::new(a + 1, b + 1)],
        }
    }

    pub fn edges(self) -> [Segment; 3] {
        let [x, y, z] = self.vertices();
        [Segment::new(x, y), Segment::new(y, z), Segment::new(z, x)]
    }

    /// The three edge-adjacent triangles, in triangle order.
    pub fn neighbors(self) -> [Triangle; 3] {
        let (a, b) = (self.a, self.b);
        match self.orient {
            Orientation::Up => [Triangle::down(a, b - 1), Triangle::down(a - 1, b), Triangle::down(a, b)],
            Orientation::Down => [Triangle::up(a, b), Triangle::up(a + 1, b), Triangle::up(a, b + 1)],
        }
    }

    /// Centroid scaled by 3, in `(a, b)` coordinates.
    pub fn centroid3(self) -> (i64, i64) {
        match self.orient {
            Orientation::Up => (3 * self.a + 1, 3 * self.b + 1),
            Orientation::Down => (3 * self.a + 2, 3 * self.b + 2),
        }
    }
}

/// Lozenge orientation, named by the direction of the edge its two
/// triangles share.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LozengeType {
    /// `Up(a,b) + Down(a,b)`, shared edge at 120°: a sheared unit square.
    T1,
    /// `Up(a,b) + Down(a-1,b)`, shared edge at 60°.
    T2,
    /// `Up(a,b) + Down(a,b-1)`, shared edge at 0°.
    T3,
}

impl LozengeType {
    pub fn name(self) -> &'static str {
        match self {
            LozengeType::T1 => "T1",
            LozengeType::T2 => "T2",
            LozengeType::T3 => "T3",
        }
    }
}

/// Union of two edge-adjacent unit triangles, keyed by its up triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lozenge {
    pub kind: LozengeType,
    pub a: i64,
    pub b: i64,
}

impl Lozenge {
    pub const fn new(kind: LozengeType, a: i64, b: i64) -> Self {
        Lozenge { kind, a, b }
    }

    pub fn up(self) -> Triangle {
        Triangle::up(self.a, self.b)
    }

    pub fn down(self) -> Triangle {
        match self.kind {
            LozengeType::T1 => Triangle::down(self.a, self.b),
            LozengeType::T2 => Triangle::down(self.a - 1, self.b),
            LozengeType::T3 => Triangle::down(self.a, self.b - 1),
        }
    }

    pub fn triangles(self) -> [Triangle; 2] {
        [self.up(), self.down()]
    }

    /// The lozenge made of two triangles, if they are adjacent.
    pub fn from_triangles(x: Triangle, y: Triangle) -> Option<Lozenge> {
        let (up, down) = match (x.orient, y.orient) {
            (Orientation::Up, Orientation::Down) => (x, y),
            (Orientation::Down, Orientation::Up) => (y, x),
            _ => return None,
        };
        let kind = match (down.a - up.a, down.b - up.b) {
            (0, 0) => LozengeType::T1,
            (-1, 0) => LozengeType::T2,
            (0, -1) => LozengeType::T3,
            _ => return None,
        };
        Some(Lozenge::new(kind, up.a, up.b))
    }

    /// `(base, u, w)` with corners `base, base+u, base+u+w, base+w` in cyclic
    /// order.
    pub fn frame(self) -> (TriPoint, TriPoint, TriPoint) {
        let base = TriPoint::new(self.a, self.b);
        match self.kind {
            LozengeType::T1 => (base, TriPoint::E1, TriPoint::E2),
            LozengeType::T2 => (base, TriPoint::E1, -TriPoint::V),
            LozengeType::T3 => (base, TriPoint::V, TriPoint::E2),
        }
    }

    pub fn corners(self) -> [TriPoint; 4] {
        let (base, u, w) = self.frame();
        [base, base + u, base + u + w, base + w]
    }

    /// The two sides parallel to `dir` and the vector carrying the first onto
    /// the second, or `None` when no side is parallel to `dir`.
    pub fn parallel_sides(self, dir: TriPoint) -> Option<(Segment, Segment, TriPoint)> {
        let (base, u, w) = self.frame();
        if u == dir || u == -dir {
            let s = Segment::new(base, base + u);
            Some((s, s.translate(w), w))
        } else if w == dir || w == -dir {
            let s = Segment::new(base, base + w);
            Some((s, s.translate(u), u))
        } else {
            None
        }
    }
}

impl Serialize for Lozenge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(3)?;
        t.serialize_element(self.kind.name())?;
        t.serialize_element(&self.a)?;
        t.serialize_element(&self.b)?;
        t.end()
    }
}
