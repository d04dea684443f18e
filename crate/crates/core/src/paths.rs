//! Monotone east/north lattice paths, and the path count `N(λ/μ)` by
//! enumeration and by dynamic programming.
//!
//! A path from `(0,0)` to `(λ_1, n)` is admissible for a shape when it stays
//! weakly between the shape's two boundary profiles. Equivalently, its k-th
//! north step (counted bottom-up) sits at some `x = c_k` with
//! `μ_{n-k+1} <= c_k <= λ_{n-k+1}`. The sequence `c` is the path's
//! [`NorthRecord`].
//!
//! Paths are listed in lexicographic order of their step words with
//! `E < N`, which is descending lexicographic order of north records.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::binomial;
use crate::scalar::Scalar;
use crate::shapes::SkewShape;
use crate::Count;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path runs from {start} to {end}, expected {expected_start} to {expected_end}")]
    WrongEndpoints { start: Point, end: Point, expected_start: Point, expected_end: Point },
    #[error("enumeration exceeds the cap of {cap} items")]
    CapExceeded { cap: usize },
    #[error("invalid step {0:?}, expected 'E' or 'N'")]
    BadStep(char),
    #[error("path {path} is not admissible for shape {shape}")]
    NotAdmissible { path: String, shape: String },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(serializer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

/// Path on the square lattice with unit east and north steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    start: Point,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Parses a step word such as `"ENNE"`, starting at `start`.
    pub fn parse_from(start: Point, word: &str) -> Result<Self, PathError> {
        let steps = word
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'E' => Ok(Step::E),
                'N' => Ok(Step::N),
                _ => Err(PathError::BadStep(c)),
            })
            .collect::<Result<_, _>>()?;
        Ok(LatticePath { start, steps })
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> Point {
        let east = self.steps.iter().filter(|&&s| s == Step::E).count() as i64;
        let north = self.steps.len() as i64 - east;
        Point { x: self.start.x + east, y: self.start.y + north }
    }

    /// All lattice points visited, start and end included.
    pub fn vertices(&self) -> Vec<Point> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for step in &self.steps {
            match step {
                Step::E => p.x += 1,
                Step::N => p.y += 1,
            }
            out.push(p);
        }
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.letter())?;
        }
        Ok(())
    }
}

/// Parses a step word starting at the origin.
impl FromStr for LatticePath {
    type Err = PathError;

    fn from_str(word: &str) -> Result<Self, Self::Err> {
        LatticePath::parse_from(Point::ORIGIN, word)
    }
}

/// Serialized as its step word.
impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// x-coordinates of a path's north steps, bottom-up.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NorthRecord(pub Vec<i64>);

impl NorthRecord {
    pub fn of(path: &LatticePath) -> Self {
        let mut x = path.start.x;
        let mut record = Vec::new();
        for step in &path.steps {
            match step {
                Step::E => x += 1,
                Step::N => record.push(x),
            }
        }
        NorthRecord(record)
    }

    /// Rebuilds the monotone path from `start` whose north steps are at these
    /// x-coordinates and which ends at `x = end_x`. `None` when the record is
    /// not weakly increasing or leaves `[start.x, end_x]`.
    pub fn to_path(&self, start: Point, end_x: i64) -> Option<LatticePath> {
        let mut x = start.x;
        let mut steps = Vec::new();
        for &c in &self.0 {
            if c < x || c > end_x {
                return None;
            }
            steps.extend(std::iter::repeat_n(Step::E, (c - x) as usize));
            steps.push(Step::N);
            x = c;
        }
        steps.extend(std::iter::repeat_n(Step::E, (end_x - x) as usize));
        Some(LatticePath { start, steps })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &i64> {
        self.0.iter()
    }
}

fn shape_corner(shape: &SkewShape) -> Point {
    Point { x: shape.width() as i64, y: shape.n() as i64 }
}

/// Whether `path` stays weakly between the profiles of `shape`.
pub fn is_admissible(shape: &SkewShape, path: &LatticePath) -> Result<bool, PathError> {
    let corner = shape_corner(shape);
    if path.start() != Point::ORIGIN || path.end() != corner {
        return Err(PathError::WrongEndpoints {
            start: path.start(),
            end: path.end(),
            expected_start: Point::ORIGIN,
            expected_end: corner,
        });
    }
    let record = NorthRecord::of(path);
    let within = record.iter().zip(shape.north_bounds()).all(|(&c, (lo, hi))| lo <= c && c <= hi);
    Ok(within)
}

/// All weakly increasing sequences `c` with `c_k` in `bounds[k]`, in
/// descending lexicographic order.
pub(crate) fn records_within(bounds: &[(i64, i64)], cap: usize) -> Result<Vec<NorthRecord>, PathError> {
    fn rec(
        bounds: &[(i64, i64)],
        floor: i64,
        prefix: &mut Vec<i64>,
        cap: usize,
        out: &mut Vec<NorthRecord>,
    ) -> Result<(), PathError> {
        let k = prefix.len();
        if k == bounds.len() {
            if out.len() == cap {
                return Err(PathError::CapExceeded { cap });
            }
            out.push(NorthRecord(prefix.clone()));
            return Ok(());
        }
        let (lo, hi) = bounds[k];
        for c in (lo.max(floor)..=hi).rev() {
            prefix.push(c);
            rec(bounds, c, prefix, cap, out)?;
            prefix.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(bounds, i64::MIN, &mut Vec::with_capacity(bounds.len()), cap, &mut out)?;
    Ok(out)
}

/// Every admissible path of `shape`, in step-word order.
pub fn enumerate_paths(shape: &SkewShape, cap: usize) -> Result<Vec<LatticePath>, PathError> {
    let width = shape.width() as i64;
    Ok(records_within(&shape.north_bounds(), cap)?
        .into_iter()
        .map(|r| r.to_path(Point::ORIGIN, width).expect("record within bounds"))
        .collect())
}

/// Every monotone path from `a` to `b`, in step-word order.
pub fn monotone_paths(a: Point, b: Point, cap: usize) -> Result<Vec<LatticePath>, PathError> {
    if b.x < a.x || b.y < a.y {
        return Ok(Vec::new());
    }
    let bounds = vec![(a.x, b.x); (b.y - a.y) as usize];
    Ok(records_within(&bounds, cap)?.into_iter().map(|r| r.to_path(a, b.x).expect("record within bounds")).collect())
}

/// `N(λ/μ)` by a row-by-row prefix-sum recurrence over north records.
pub fn count_paths_dp(shape: &SkewShape) -> Count {
    count_paths_dp_in(shape)
}

pub fn count_paths_dp_in<T: Scalar>(shape: &SkewShape) -> T {
    let bounds = shape.north_bounds();
    if bounds.is_empty() {
        return T::one();
    }
    let width = shape.width();
    // ways[x]: number of valid prefixes whose latest north step is at x.
    let mut ways = vec![T::zero(); width + 1];
    let (lo, hi) = bounds[0];
    for w in &mut ways[lo as usize..=hi as usize] {
        *w = T::one();
    }
    for &(lo, hi) in &bounds[1..] {
        let mut next = vec![T::zero(); width + 1];
        let mut running = T::zero();
        for x in 0..=hi as usize {
            running = running + ways[x].clone();
            if x >= lo as usize {
                next[x] = running.clone();
            }
        }
        ways = next;
    }
    ways.into_iter().fold(T::zero(), |acc, w| acc + w)
}

/// Number of monotone lattice paths from `a` to `b`.
pub fn count_monotone(a: Point, b: Point) -> Count {
    count_monotone_in(a, b)
}

pub fn count_monotone_in<T: Scalar>(a: Point, b: Point) -> T {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    if dx < 0 || dy < 0 {
        return T::zero();
    }
    binomial(dx + dy, dy)
}
