//! Vertex-disjoint path families whose path-count matrix is the Kreweras
//! matrix.
//!
//! Row `i` of a shape (1-based, top first) becomes a start point
//! `A_i = (μ_i - i, i)` and an end point `B_i = (λ_i - i, i + 1)`, so that
//! the number of monotone paths from `A_i` to `B_j` is
//! `C(λ_j - μ_i + 1, j - i + 1)`. By Lindström–Gessel–Viennot the determinant
//! counts vertex-disjoint families `A_i -> B_i`; this module also enumerates
//! those families directly as an oracle.

use std::collections::HashSet;

use serde::Serialize;

use crate::exact::{det_exact, Matrix};
use crate::paths::{count_monotone, monotone_paths, LatticePath, PathError, Point};
use crate::shapes::SkewShape;
use crate::{Count, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GvConfig {
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
}

impl GvConfig {
    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }
}

/// One path per start point; path `k` starts at `A_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn is_vertex_disjoint(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths.iter().flat_map(LatticePath::vertices).all(|v| seen.insert(v))
    }

    /// Index of the end point each path reaches, or `None` if some path does
    /// not end at an end point of `config`.
    pub fn permutation(&self, config: &GvConfig) -> Option<Vec<usize>> {
        self.paths.iter().map(|p| config.ends.iter().position(|&b| b == p.end())).collect()
    }

    /// Path `k` runs from `A_k` to `B_k` for every `k`.
    pub fn is_identity(&self, config: &GvConfig) -> bool {
        self.paths.len() == config.len()
            && self.paths.iter().enumerate().all(|(k, p)| p.start() == config.starts[k] && p.end() == config.ends[k])
    }
}

pub fn gv_endpoints(shape: &SkewShape) -> GvConfig {
    let (starts, ends) = (0..shape.n())
        .map(|k| {
            let (mu, lambda) = shape.row_bounds(k);
            let i = k as i64 + 1;
            (Point::new(mu as i64 - i, i), Point::new(lambda as i64 - i, i + 1))
        })
        .unzip();
    GvConfig { starts, ends }
}

/// Path-count matrix: entry `(i, j)` is the number of monotone paths from
/// `A_i` to `B_j`.
pub fn gv_matrix(config: &GvConfig) -> IntMatrix {
    Matrix::from_fn(config.starts.len(), config.ends.len(), |i, j| count_monotone(config.starts[i], config.ends[j]))
}

pub fn gv_count(config: &GvConfig) -> Count {
    det_exact(&gv_matrix(config)).expect("square configuration")
}

/// Every pairwise vertex-disjoint family with path `k` leaving `A_k` toward
/// any end point, each end used once.
///
/// Families are ordered by their end-point permutation, then by the step
/// words of their paths in order.
pub fn enumerate_disjoint_families(config: &GvConfig, cap: usize) -> Result<Vec<PathFamily>, PathError> {
    struct Search<'a> {
        config: &'a GvConfig,
        cap: usize,
        used_ends: Vec<bool>,
        occupied: HashSet<Point>,
        chosen: Vec<(usize, LatticePath)>,
        found: Vec<(Vec<usize>, PathFamily)>,
    }

    impl Search<'_> {
        fn run(&mut self) -> Result<(), PathError> {
            let k = self.chosen.len();
            if k == self.config.len() {
                if self.found.len() == self.cap {
                    return Err(PathError::CapExceeded { cap: self.cap });
                }
                let sigma = self.chosen.iter().map(|(j, _)| *j).collect();
                let paths = self.chosen.iter().map(|(_, p)| p.clone()).collect();
                self.found.push((sigma, PathFamily { paths }));
                return Ok(());
            }
            let start = self.config.starts[k];
            if self.occupied.contains(&start) {
                return Ok(());
            }
            for j in 0..self.config.len() {
                if self.used_ends[j] {
                    continue;
                }
                // A failing cap here only bounds the candidate list for one path.
                let candidates = monotone_paths(start, self.config.ends[j], self.cap)?;
                for path in candidates {
                    let vertices = path.vertices();
                    if vertices.iter().any(|v| self.occupied.contains(v)) {
                        continue;
                    }
                    self.occupied.extend(vertices.iter().copied());
                    self.used_ends[j] = true;
                    self.chosen.push((j, path));
                    let outcome = self.run();
                    self.chosen.pop();
                    self.used_ends[j] = false;
                    for v in &vertices {
                        self.occupied.remove(v);
                    }
                    outcome?;
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        config,
        cap,
        used_ends: vec![false; config.len()],
        occupied: HashSet::new(),
        chosen: Vec::new(),
        found: Vec::new(),
    };
    search.run()?;
    let mut found = search.found;
    found.sort_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| {
            let words = |f: &PathFamily| f.paths.iter().map(ToString::to_string).collect::<Vec<_>>();
            words(&a.1).cmp(&words(&b.1))
        })
    });
    Ok(found.into_iter().map(|(_, family)| family).collect())
}
