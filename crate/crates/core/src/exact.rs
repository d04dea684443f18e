//! Exact integer helpers: path-counting binomials and determinants.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

use crate::scalar::{from_i64, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("ragged rows: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::EntryCount { expected: rows * cols, got: entries.len() });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(MatrixError::Ragged { row: i, len: row.len(), expected: n_cols });
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: n_rows, cols: n_cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.rows {
            list.entry(&&self.entries[i * self.cols..(i + 1) * self.cols]);
        }
        list.finish()
    }
}

/// Serializes as an array of rows, each entry a decimal string, so values
/// wider than any native integer survive JSON.
impl<T: fmt::Display> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Binomial coefficient with the lattice-path convention: zero unless
/// `0 <= bottom <= top`.
pub fn binomial<T: Scalar>(top: i64, bottom: i64) -> T {
    if bottom < 0 || bottom > top {
        return T::zero();
    }
    let k = bottom.min(top - bottom);
    let mut acc = T::one();
    // C(top, i) * (top - i) = C(top, i + 1) * (i + 1), so each division is exact.
    for i in 0..k {
        acc = acc * from_i64::<T>(top - i) / from_i64::<T>(i + 1);
    }
    acc
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every division is exact over an integral domain. A zero pivot is replaced
/// by a row swap below it; when the whole pivot column is zero the
/// determinant is zero. The empty matrix has determinant one.
pub fn det_exact<T: Scalar>(m: &Matrix<T>) -> Result<T, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev_pivot = T::one();
    for k in 0..n - 1 {
        if a.entries[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a.entries[r * n + k].is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        let pivot = a.entries[k * n + k].clone();
        for i in k + 1..n {
            let lead = a.entries[i * n + k].clone();
            for j in k + 1..n {
                let v = (a.entries[i * n + j].clone() * pivot.clone() - lead.clone() * a.entries[k * n + j].clone())
                    / prev_pivot.clone();
                a.entries[i * n + j] = v;
            }
            a.entries[i * n + k] = T::zero();
        }
        prev_pivot = pivot;
    }
    let det = a.entries[n * n - 1].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| big(v)).collect()).collect()).unwrap()
    }

    // Pascal's triangle by additions only.
    fn pascal_row(top: usize) -> Vec<BigInt> {
        let mut row = vec![big(1)];
        for _ in 0..top {
            let mut next = vec![big(1); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row
    }

    // Cofactor expansion along the first row.
    fn laplace(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return big(1);
        }
        let mut total = big(0);
        for col in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, &v)| v).collect())
                .collect();
            let term = big(m[0][col]) * laplace(&minor);
            if col % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn square(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (0..=max_n).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial::<BigInt>(2, 1), big(2));
        assert_eq!(binomial::<BigInt>(1, 2), big(0));
        assert_eq!(binomial::<BigInt>(3, -1), big(0));
        assert_eq!(binomial::<BigInt>(-3, 0), big(0));
        assert_eq!(binomial::<BigInt>(0, 0), big(1));
    }

    #[test]
    fn binomial_30_15_matches_pascal() {
        let row = pascal_row(30);
        assert_eq!(binomial::<BigInt>(30, 15), row[15]);
        assert_eq!(row[15], big(155_117_520));
        for (k, v) in row.iter().enumerate() {
            assert_eq!(&binomial::<BigInt>(30, k as i64), v);
        }
    }

    #[test]
    fn binomial_machine_ints_agree() {
        for top in -3..20 {
            for bottom in -3..23 {
                assert_eq!(big(binomial::<i64>(top, bottom)), binomial::<BigInt>(top, bottom));
            }
        }
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det_exact(&int_matrix(&[&[3, 1], &[1, 2]])).unwrap(), big(5));
        assert_eq!(det_exact(&Matrix::<BigInt>::identity(4)).unwrap(), big(1));
        assert_eq!(det_exact(&Matrix::<BigInt>::identity(0)).unwrap(), big(1));
        assert_eq!(det_exact(&int_matrix(&[&[0, 1], &[1, 0]])).unwrap(), big(-1));
        assert_eq!(det_exact(&int_matrix(&[&[0, 1], &[0, 4]])).unwrap(), big(0));
        assert_eq!(det_exact(&int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])).unwrap(), big(0));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = Matrix::new(2, 3, vec![big(0); 6]).unwrap();
        assert_eq!(det_exact(&m), Err(MatrixError::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn det_over_rationals_and_i64() {
        let rows = [[2i64, -1, 0], [-1, 2, -1], [0, -1, 2]];
        let q = Matrix::from_fn(3, 3, |i, j| BigRational::from_integer(big(rows[i][j])));
        let z = Matrix::from_fn(3, 3, |i, j| rows[i][j]);
        assert_eq!(det_exact(&q).unwrap(), BigRational::from_integer(big(4)));
        assert_eq!(det_exact(&z).unwrap(), 4);
    }

    #[test]
    fn matrix_serializes_as_decimal_strings() {
        let m = int_matrix(&[&[3, 1], &[1, 2]]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"[["3","1"],["1","2"]]"#);
    }

    proptest! {
        #[test]
        fn pascal_recurrence(t in 1i64..40, b in -3i64..45) {
            prop_assert_eq!(
                binomial::<BigInt>(t, b),
                binomial::<BigInt>(t - 1, b - 1) + binomial::<BigInt>(t - 1, b)
            );
        }

        #[test]
        fn det_matches_laplace(m in square(6)) {
            let n = m.len();
            let mat = Matrix::from_fn(n, n, |i, j| big(m[i][j]));
            prop_assert_eq!(det_exact(&mat).unwrap(), laplace(&m));
        }

        #[test]
        fn row_swap_negates(m in square(6), a in 0usize..6, b in 0usize..6) {
            let n = m.len();
            prop_assume!(n >= 2 && a < n && b < n && a != b);
            let mat = Matrix::from_fn(n, n, |i, j| big(m[i][j]));
            let mut swapped = mat.clone();
            swapped.swap_rows(a, b);
            prop_assert_eq!(det_exact(&swapped).unwrap(), -det_exact(&mat).unwrap());
        }

        #[test]
        fn upper_triangular_is_diagonal_product(m in square(6)) {
            let n = m.len();
            let mat = Matrix::from_fn(n, n, |i, j| if i <= j { big(m[i][j]) } else { big(0) });
            let diag: BigInt = (0..n).map(|i| big(m[i][i])).product();
            prop_assert_eq!(det_exact(&mat).unwrap(), diag);
        }
    }
}
