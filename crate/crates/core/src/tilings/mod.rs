//! Lozenge tilings of the triangular-lattice region attached to a skew
//! shape, and the rhombus-path families that put them in bijection with
//! lattice paths.
//!
//! Coordinates are oblique integers throughout: `(a, b)` is `a·e1 + b·e2`.
//! A unit square cell `(x, y)` of the diagram shears to the `T1` lozenge at
//! `(x, y)`, so square-grid east maps to `e1` and north to `e2`.

mod enumerate;
mod family;
mod geometry;
mod region;
mod svg;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

pub use enumerate::{count_tilings, enumerate_tilings};
pub use family::{
    extract_family, family_a_to_lattice_path, family_b_to_z2_paths, lattice_path_to_tiling, tiling_type_census,
    Direction, RhombusPath, RhombusPathFamily,
};
pub use geometry::{Lozenge, LozengeType, Orientation, Segment, TriPoint, Triangle};
pub use region::{region_from_shape, Region};
pub use svg::{render_svg, Shading};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("degenerate region boundary: {0}")]
    DegenerateBoundary(String),
    #[error("enumeration exceeds the cap of {cap} tilings")]
    CapExceeded { cap: usize },
    #[error("not a lozenge tiling: {0}")]
    MalformedTiling(String),
    #[error("malformed rhombus-path family: {0}")]
    MalformedFamily(String),
    #[error("path {path} is not admissible for shape {shape}")]
    NotAdmissible { path: String, shape: String },
    #[error("complement of the rhombus path cannot be paired into T1 lozenges at {0:?}")]
    ComplementNotPairable(Triangle),
}

/// Set of pairwise disjoint lozenges, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Tiling {
    lozenges: Vec<Lozenge>,
}

impl Tiling {
    pub fn new(mut lozenges: Vec<Lozenge>) -> Self {
        lozenges.sort();
        Tiling { lozenges }
    }

    pub fn lozenges(&self) -> &[Lozenge] {
        &self.lozenges
    }

    pub fn len(&self) -> usize {
        self.lozenges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lozenges.is_empty()
    }

    /// Covered triangles, or `None` if two lozenges overlap.
    pub fn triangles(&self) -> Option<BTreeSet<Triangle>> {
        let mut out = BTreeSet::new();
        for l in &self.lozenges {
            for t in l.triangles() {
                if !out.insert(t) {
                    return None;
                }
            }
        }
        Some(out)
    }

    pub fn is_tiling_of(&self, region: &Region) -> bool {
        self.triangles().is_some_and(|ts| &ts == region.triangles())
    }
}
