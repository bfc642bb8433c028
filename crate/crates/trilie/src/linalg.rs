//! Exact linear algebra over the rationals: vectors, square matrices,
//! Gaussian elimination. Plumbing shared by the fingerprint computations and
//! the isomorphism machinery.

use crate::scalar::ExactScalar;
use crate::Error;

pub type Vector = Vec<ExactScalar>;

pub fn zero_vector(dim: usize) -> Vector {
    vec![ExactScalar::zero(); dim]
}

/// Basis vector `e_index` (1-based index).
pub fn unit_vector(dim: usize, index: usize) -> Vector {
    assert!((1..=dim).contains(&index), "basis index out of range");
    let mut v = zero_vector(dim);
    v[index - 1] = ExactScalar::one();
    v
}

pub fn vector_is_zero(v: &[ExactScalar]) -> bool {
    v.iter().all(ExactScalar::is_zero)
}

pub fn vector_add_assign(acc: &mut [ExactScalar], other: &[ExactScalar]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
}

pub fn vector_add_scaled(acc: &mut [ExactScalar], scale: &ExactScalar, other: &[ExactScalar]) {
    if scale.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += &(scale * b);
    }
}

pub fn vector_neg(v: &[ExactScalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

pub fn vector_scale(scale: &ExactScalar, v: &[ExactScalar]) -> Vector {
    v.iter().map(|x| scale * x).collect()
}

/// Rank of the span of a list of vectors, by Gaussian elimination.
#[allow(clippy::needless_range_loop)] // elimination touches two rows at once
pub fn rank(vectors: &[Vector]) -> usize {
    let mut rows: Vec<Vector> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][c].recip().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            for j in 0..cols {
                let t = &factor * &rows[r][j];
                rows[i][j] -= &t;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Dimension of the intersection of the spans of two vector lists,
/// `dim(A) + dim(B) - dim(A + B)`.
pub fn intersection_dim(a: &[Vector], b: &[Vector]) -> usize {
    let ra = rank(a);
    let rb = rank(b);
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    ra + rb - rank(&all)
}

/// A square matrix of exact rationals, row-major storage.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    data: Vec<ExactScalar>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![ExactScalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            *m.at_mut(i, i) = ExactScalar::one();
        }
        m
    }

    /// Builds a matrix from its columns: column `j` is the image of `e_{j+1}`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self, Error> {
        let dim = columns.len();
        if columns.iter().any(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: columns.iter().map(Vec::len).find(|&l| l != dim).unwrap_or(0),
            });
        }
        let mut m = Matrix::zero(dim);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                *m.at_mut(i, j) = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self, Error> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: rows.iter().map(Vec::len).find(|&l| l != dim).unwrap_or(0),
            });
        }
        Ok(Matrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> &ExactScalar {
        &self.data[row * self.dim + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut ExactScalar {
        &mut self.data[row * self.dim + col]
    }

    /// Column `j` (0-based) as a vector: the image of basis vector `e_{j+1}`.
    pub fn column(&self, j: usize) -> Vector {
        (0..self.dim).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vector(&self, v: &[ExactScalar]) -> Vector {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut out = zero_vector(self.dim);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                *slot += &(self.at(i, j) * x);
            }
        }
        out
    }

    pub fn mul_matrix(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        let mut out = Matrix::zero(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    *out.at_mut(i, j) += &(a * other.at(k, j));
                }
            }
        }
        out
    }

    #[allow(clippy::needless_range_loop)] // elimination touches two rows at once
    pub fn determinant(&self) -> ExactScalar {
        let mut rows: Vec<Vector> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut det = ExactScalar::one();
        for c in 0..self.dim {
            let Some(pivot) = (c..self.dim).find(|&i| !rows[i][c].is_zero()) else {
                return ExactScalar::zero();
            };
            if pivot != c {
                rows.swap(c, pivot);
                det = -det;
            }
            det *= &rows[c][c];
            let inv = rows[c][c].recip().expect("pivot is nonzero");
            for i in c + 1..self.dim {
                if rows[i][c].is_zero() {
                    continue;
                }
                let factor = &rows[i][c] * &inv;
                for j in c..self.dim {
                    let t = &factor * &rows[c][j];
                    rows[i][j] -= &t;
                }
            }
        }
        det
    }

    /// Exact inverse via Gauss-Jordan elimination on the augmented matrix.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim;
        let mut left: Vec<Vector> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut right: Vec<Vector> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            ExactScalar::one()
                        } else {
                            ExactScalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for c in 0..n {
            let pivot = (c..n).find(|&i| !left[i][c].is_zero())?;
            left.swap(c, pivot);
            right.swap(c, pivot);
            let inv = left[c][c].recip().expect("pivot is nonzero");
            for j in 0..n {
                left[c][j] *= &inv;
                right[c][j] *= &inv;
            }
            for i in 0..n {
                if i == c || left[i][c].is_zero() {
                    continue;
                }
                let factor = left[i][c].clone();
                for j in 0..n {
                    let t = &factor * &left[c][j];
                    left[i][j] -= &t;
                    let t = &factor * &right[c][j];
                    right[i][j] -= &t;
                }
            }
        }
        Some(Matrix {
            dim: n,
            data: right.into_iter().flatten().collect(),
        })
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    #[test]
    fn rank_and_intersection() {
        let a = vec![vec![s(1), s(0), s(0)], vec![s(0), s(1), s(0)]];
        let b = vec![vec![s(0), s(1), s(0)], vec![s(0), s(0), s(1)]];
        assert_eq!(rank(&a), 2);
        assert_eq!(rank(&b), 2);
        assert_eq!(intersection_dim(&a, &b), 1);
        assert_eq!(rank(&[zero_vector(3)]), 0);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_rows(vec![
            vec![s(2), s(1)],
            vec![s(1), s(1)],
        ])
        .unwrap();
        assert_eq!(m.determinant(), s(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_matrix(&inv), Matrix::identity(2));

        let singular = Matrix::from_rows(vec![
            vec![s(1), s(2)],
            vec![s(2), s(4)],
        ])
        .unwrap();
        assert_eq!(singular.determinant(), s(0));
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn matrix_vector_product() {
        let m = Matrix::from_columns(&[vec![s(0), s(1)], vec![s(-1), s(0)]]).unwrap();
        assert_eq!(m.mul_vector(&[s(1), s(0)]), vec![s(0), s(1)]);
        assert_eq!(m.mul_vector(&[s(0), s(1)]), vec![s(-1), s(0)]);
    }
}
