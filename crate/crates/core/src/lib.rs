//! Exact counting of monotone lattice paths in skew Young diagrams.
//!
//! The number of east/north lattice paths that stay inside a skew diagram
//! `λ/μ` is computed here by several independent routes:
//!
//! * the Kreweras determinant ([`kreweras`]),
//! * a prefix-sum dynamic program and explicit enumeration ([`paths`]),
//! * vertex-disjoint path families and their path-count matrix ([`gv`]),
//! * lozenge tilings of an associated triangular-lattice region ([`tilings`]).
//!
//! The arithmetic kernels are generic over a [`Scalar`] so the same code runs
//! on machine integers, big integers and rationals. The crate-level aliases
//! fix the default, [`Count`] = [`num_bigint::BigInt`].

pub mod exact;
pub mod gv;
pub mod kreweras;
pub mod paths;
pub mod scalar;
pub mod shapes;
pub mod tilings;

use num_bigint::BigInt;

pub use exact::{binomial, det_exact, Matrix, MatrixError};
pub use gv::{enumerate_disjoint_families, gv_count, gv_endpoints, gv_matrix, GvConfig, PathFamily};
pub use kreweras::{kreweras_count, kreweras_matrix, remove_empty_rows, KrewerasMatrix};
pub use paths::{
    count_monotone, count_paths_dp, enumerate_paths, is_admissible, LatticePath, NorthRecord, PathError, Point, Step,
};
pub use scalar::Scalar;
pub use shapes::{parse_shape, Partition, ProfilePair, ShapeError, SkewShape};
pub use tilings::{
    count_tilings, enumerate_tilings, extract_family, family_a_to_lattice_path, family_b_to_z2_paths,
    lattice_path_to_tiling, region_from_shape, render_svg, tiling_type_census, Direction, Lozenge, LozengeType, Region,
    RhombusPath, RhombusPathFamily, Shading, Tiling, TilingError, TriPoint, Triangle,
};

/// Exact path counts.
pub type Count = BigInt;

/// Matrix of exact counts.
pub type IntMatrix = Matrix<Count>;

/// Default cap on the number of items an enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;
