//! The Kreweras determinant for `N(λ/μ)`:
//! `det( C(λ_j - μ_i + 1, j - i + 1) )` over `1 <= i, j <= n`.

use num_traits::Signed;
use serde::Serialize;

use crate::exact::{binomial, det_exact, Matrix};
use crate::scalar::Scalar;
use crate::shapes::{Partition, SkewShape};
use crate::{Count, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KrewerasMatrix {
    #[serde(serialize_with = "serialize_shape")]
    pub shape: SkewShape,
    pub matrix: IntMatrix,
}

fn serialize_shape<S: serde::Serializer>(shape: &SkewShape, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(shape)
}

pub fn kreweras_matrix(shape: &SkewShape) -> KrewerasMatrix {
    KrewerasMatrix { shape: shape.clone(), matrix: kreweras_matrix_in(shape) }
}

pub fn kreweras_matrix_in<T: Scalar>(shape: &SkewShape) -> Matrix<T> {
    let n = shape.n();
    Matrix::from_fn(n, n, |i, j| {
        let lambda_j = shape.lambda().part(j) as i64;
        let mu_i = shape.mu().part(i) as i64;
        binomial(lambda_j - mu_i + 1, j as i64 - i as i64 + 1)
    })
}

/// `N(λ/μ)` as the determinant of the Kreweras matrix.
pub fn kreweras_count(shape: &SkewShape) -> Count {
    let det = det_exact(&kreweras_matrix(shape).matrix).expect("Kreweras matrix is square");
    debug_assert!(!det.is_negative(), "negative path count {det} for {shape}");
    det
}

pub fn kreweras_count_in<T: Scalar>(shape: &SkewShape) -> T {
    det_exact(&kreweras_matrix_in::<T>(shape)).expect("Kreweras matrix is square")
}

/// Drops every row with `λ_i = μ_i`.
pub fn remove_empty_rows(shape: &SkewShape) -> SkewShape {
    let (lambda, mu): (Vec<usize>, Vec<usize>) = (0..shape.n())
        .map(|i| shape.row_bounds(i))
        .filter(|(mu_i, lambda_i)| mu_i != lambda_i)
        .map(|(mu_i, lambda_i)| (lambda_i, mu_i))
        .unzip();
    let lambda = Partition::new(lambda).expect("subsequence of a partition");
    let mu = Partition::new(mu).expect("subsequence of a partition");
    SkewShape::new(lambda, mu).expect("rowwise containment is preserved")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::count_paths_dp;
    use crate::shapes::parse_shape;

    fn shape(text: &str) -> SkewShape {
        parse_shape(text).unwrap()
    }

    fn ints(m: &IntMatrix) -> Vec<Vec<i64>> {
        (0..m.rows()).map(|i| m.row(i).iter().map(|v| v.try_into().unwrap()).collect()).collect()
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(ints(&kreweras_matrix(&shape("2,1")).matrix), [[3, 1], [1, 2]]);
        assert_eq!(ints(&kreweras_matrix(&shape("1")).matrix), [[2]]);
        assert_eq!(kreweras_matrix(&shape("")).matrix.rows(), 0);
    }

    #[test]
    fn figure_shape_matrix_fixture() {
        // Entry (i,j) = C(λ_j - μ_i + 1, j - i + 1) with λ = (9,7,6,2), μ = (3,1,0,0).
        let m = kreweras_matrix(&shape("9,7,6,2/3,1"));
        assert_eq!(ints(&m.matrix), [[7, 10, 4, 0], [1, 7, 15, 0], [0, 1, 7, 3], [0, 0, 1, 3]]);
    }

    #[test]
    fn count_examples() {
        assert_eq!(kreweras_count(&shape("2,1")), Count::from(5));
        assert_eq!(kreweras_count(&shape("3/3")), Count::from(1));
        assert_eq!(kreweras_count(&shape("")), Count::from(1));
        assert_eq!(kreweras_count(&shape("2,2")), Count::from(6));
        assert_eq!(kreweras_count(&shape("3,1/2")), Count::from(4));
        assert_eq!(kreweras_count_in::<i64>(&shape("3,1/2")), 4);
    }

    #[test]
    fn empty_row_removal() {
        assert_eq!(remove_empty_rows(&shape("2,1,1/1,1")), shape("2,1/1"));
        assert_eq!(remove_empty_rows(&shape("2,1")), shape("2,1"));
        assert_eq!(remove_empty_rows(&shape("2,1/2,1")), shape(""));
        assert_eq!(remove_empty_rows(&shape("4,3,1/3,3")), shape("4,1/3"));
    }

    #[test]
    fn agrees_with_dp_and_straight_specialization() {
        for s in SkewShape::all_in_box(4, 4) {
            assert_eq!(kreweras_count(&s), count_paths_dp(&s), "{s}");
            if s.mu().is_empty() {
                let n = s.n();
                let narayana = Matrix::from_fn(n, n, |i, j| {
                    binomial::<Count>(s.lambda().part(j) as i64 + 1, j as i64 - i as i64 + 1)
                });
                assert_eq!(kreweras_matrix(&s).matrix, narayana);
            }
        }
    }

    #[test]
    fn matrix_serializes_with_shape() {
        let json = serde_json::to_string(&kreweras_matrix(&shape("2,1"))).unwrap();
        assert_eq!(json, r#"{"shape":"2,1","matrix":[["3","1"],["1","2"]]}"#);
    }
}
