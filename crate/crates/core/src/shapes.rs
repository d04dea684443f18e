//! Partitions, skew shapes and their boundary profiles.
//!
//! Rows are numbered from the top. In the plane, `x` grows eastward and `y`
//! upward, with the bottom row (row `n`) occupying `0 <= y <= 1`, so row `i`
//! is the strip `n - i <= y <= n - i + 1` between `x = μ_i` and `x = λ_i`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::paths::{LatticePath, Point, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("malformed shape {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error("parts must be weakly decreasing: {parts:?}")]
    NonMonotone { parts: Vec<i64> },
    #[error("negative part {value}")]
    Negative { value: i64 },
    #[error("inner partition is not contained in the outer one at row {row}: {inner} > {outer}")]
    NotContained { row: usize, inner: usize, outer: usize },
    #[error("empty outer partition with a nonempty inner partition")]
    EmptyLambdaWithMu,
    #[error("row {row} out of range 1..={n}")]
    RowOutOfRange { row: usize, n: usize },
}

/// Weakly decreasing sequence of nonnegative parts, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NonMonotone { parts: parts.iter().map(|&p| p as i64).collect() });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn width(&self) -> usize {
        self.part(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// All partitions with at most `rows` parts, each at most `cols`, in
    /// lexicographic order of their parts (the empty partition first).
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: prefix.clone() });
            if prefix.len() == rows {
                return;
            }
            for p in 1..=max {
                prefix.push(p);
                rec(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: prefix.clone() });
            let i = prefix.len();
            if i == outer.len() {
                return;
            }
            for p in 1..=max.min(outer[i]) {
                prefix.push(p);
                rec(outer, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, self.width(), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let mut values = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let value: i64 = token.parse().map_err(|_| ShapeError::Syntax {
                text: text.to_string(),
                reason: format!("{token:?} is not a decimal integer"),
            })?;
            values.push(value);
        }
        if let Some(&value) = values.iter().find(|&&v| v < 0) {
            return Err(ShapeError::Negative { value });
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NonMonotone { parts: values });
        }
        Partition::new(values.into_iter().map(|v| v as usize).collect())
    }
}

/// Skew shape `λ/μ` with `μ ⊂ λ`.
///
/// The row count `n` is the number of nonzero parts of `λ`; `μ` is read as
/// padded with zeros to that length. Rows with `λ_i = μ_i` are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self, ShapeError> {
        if lambda.is_empty() && !mu.is_empty() {
            return Err(ShapeError::EmptyLambdaWithMu);
        }
        for row in 0..mu.len() {
            if mu.part(row) > lambda.part(row) {
                return Err(ShapeError::NotContained { row: row + 1, inner: mu.part(row), outer: lambda.part(row) });
            }
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> Result<Self, ShapeError> {
        SkewShape::new(Partition::new(lambda.to_vec())?, Partition::new(mu.to_vec())?)
    }

    /// `λ/∅`.
    pub fn straight(lambda: Partition) -> Self {
        SkewShape { lambda, mu: Partition::empty() }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Row count.
    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// Cell count.
    pub fn m(&self) -> usize {
        self.lambda.sum() - self.mu.sum()
    }

    /// `λ_1`.
    pub fn width(&self) -> usize {
        self.lambda.width()
    }

    pub fn is_empty(&self) -> bool {
        self.m() == 0
    }

    /// `(μ_i, λ_i)` for 0-based row `i`, top row first.
    pub fn row_bounds(&self, i: usize) -> (usize, usize) {
        (self.mu.part(i), self.lambda.part(i))
    }

    /// Allowed x-range of the k-th north step, bottom-up: row `n - k + 1`
    /// gives `μ_{n-k+1} <= c_k <= λ_{n-k+1}`.
    pub fn north_bounds(&self) -> Vec<(i64, i64)> {
        (0..self.n())
            .rev()
            .map(|i| {
                let (lo, hi) = self.row_bounds(i);
                (lo as i64, hi as i64)
            })
            .collect()
    }

    /// Whether the unit cell in `row` (1-based from the top) and `col`
    /// (1-based from the left) belongs to the shape.
    pub fn contains_cell(&self, row: usize, col: usize) -> Result<bool, ShapeError> {
        if row == 0 || row > self.n() {
            return Err(ShapeError::RowOutOfRange { row, n: self.n() });
        }
        let (lo, hi) = self.row_bounds(row - 1);
        Ok(lo < col && col <= hi)
    }

    pub fn profiles(&self) -> ProfilePair {
        let n = self.n();
        let width = self.width();
        let mut lambda_steps = Vec::with_capacity(width + n);
        let mut mu_steps = Vec::with_capacity(width + n);
        let mut lambda_x = 0;
        let mut mu_x = 0;
        for i in (0..n).rev() {
            let (mu_i, lambda_i) = self.row_bounds(i);
            lambda_steps.extend(std::iter::repeat_n(Step::E, lambda_i - lambda_x));
            lambda_steps.push(Step::N);
            lambda_x = lambda_i;
            mu_steps.extend(std::iter::repeat_n(Step::E, mu_i - mu_x));
            mu_steps.push(Step::N);
            mu_x = mu_i;
        }
        mu_steps.extend(std::iter::repeat_n(Step::E, width - mu_x));
        ProfilePair {
            mu_profile: LatticePath::new(Point::ORIGIN, mu_steps),
            lambda_profile: LatticePath::new(Point::ORIGIN, lambda_steps),
        }
    }

    /// Every `λ/μ` with `λ` in the `rows x cols` box and `μ ⊂ λ`.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<SkewShape> {
        Partition::all_in_box(rows, cols)
            .into_iter()
            .flat_map(|lambda| {
                lambda.subpartitions().into_iter().map(move |mu| SkewShape { lambda: lambda.clone(), mu })
            })
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        if !self.mu.is_empty() {
            write!(f, "/{}", self.mu)?;
        }
        Ok(())
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        parse_shape(text)
    }
}

/// Parses `parts ("/" parts)?`, e.g. `9,7,6,2/3,1`.
pub fn parse_shape(text: &str) -> Result<SkewShape, ShapeError> {
    let mut halves = text.split('/');
    let lambda: Partition = halves.next().unwrap_or("").parse()?;
    let mu: Partition = halves.next().unwrap_or("").parse()?;
    if halves.next().is_some() {
        return Err(ShapeError::Syntax { text: text.to_string(), reason: "more than one '/'".to_string() });
    }
    SkewShape::new(lambda, mu)
}

/// The two boundary paths of a skew diagram, both from the origin to
/// `(λ_1, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfilePair {
    pub mu_profile: LatticePath,
    pub lambda_profile: LatticePath,
}
