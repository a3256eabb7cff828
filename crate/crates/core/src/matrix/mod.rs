//! Dense matrices over a [`Ring`], the skew-symmetric wrapper, and the structural
//! operations the Pfaffian algorithms are built from.
//!
//! Public indices are 1-based throughout, including in error values.

mod io;
mod ops;

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};

pub use io::{parse_matrix, parse_matrix_json, parse_matrix_text, MatrixRecord};
pub use ops::{
    block_decompose, embed_for_det, generic_matrix, generic_skew, make_j, make_transposition,
    minor_pair, scale_sym, skew_from_upper, swap_sym, SkewBlocks,
};

/// Row-major dense matrix whose entries all belong to one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    ring: Ring,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, checking the count and the ring of every entry.
    pub fn new(ring: Ring, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::WrongCount {
                expected: rows * cols,
                found: data.len(),
            });
        }
        for x in &data {
            ring.ensure_same(x.ring())?;
        }
        Ok(Matrix {
            rows,
            cols,
            ring,
            data,
        })
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::WrongCount {
                expected: c,
                found: bad.len(),
            });
        }
        Matrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Integer-literal convenience constructor.
    pub fn from_i64_rows(ring: Ring, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(
            ring,
            rows.iter()
                .map(|row| row.iter().map(|&v| Scalar::from_i64(ring, v)).collect())
                .collect(),
        )
    }

    /// `f(i, j)` receives 1-based indices.
    pub fn from_fn(
        ring: Ring,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            ring,
            data,
        }
    }

    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(ring, rows, cols, |_, _| ring.zero())
    }

    pub fn identity(ring: Ring, n: usize) -> Matrix {
        Matrix::from_fn(
            ring,
            n,
            n,
            |i, j| if i == j { ring.one() } else { ring.zero() },
        )
    }

    /// `s·I`.
    pub fn scalar_identity(s: &Scalar, n: usize) -> Matrix {
        let ring = s.ring();
        Matrix::from_fn(
            ring,
            n,
            n,
            |i, j| if i == j { s.clone() } else { ring.zero() },
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 1-based `(i, j)`. Panics when out of range.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) out of range for {}x{}",
            self.rows,
            self.cols
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (1..=self.cols).map(|j| self.entry(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |i, j| {
            self.entry(j, i).clone()
        })
    }

    /// Sub-block of rows `r0..r0+nr` and columns `c0..c0+nc`, 1-based starts.
    pub fn submatrix(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        Matrix::from_fn(self.ring, nr, nc, |i, j| {
            self.entry(r0 + i - 1, c0 + j - 1).clone()
        })
    }

    /// Standard product with exact arithmetic (`mat_mul`).
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.ring.ensure_same(other.ring)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "mat_mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let a = self.at(r, k);
                    let b = other.at(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            ring: self.ring,
            data,
        })
    }

    fn zip_with(
        &self,
        other: &Matrix,
        op: &'static str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix> {
        self.ring.ensure_same(other.ring)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch {
                op,
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            ring: self.ring,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            data: self.data.iter().map(Scalar::neg).collect(),
            ..self.clone()
        }
    }

    /// `s·X`.
    pub fn scale(&self, s: &Scalar) -> Result<Matrix> {
        self.ring.ensure_same(s.ring())?;
        Ok(Matrix {
            data: self.data.iter().map(|x| x * s).collect(),
            ..self.clone()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// First 1-based position where two same-shape matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols + 1, k % self.cols + 1))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A square matrix with zero diagonal and `a_ji = -a_ij`. Odd and zero dimensions are legal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewMatrix(Matrix);

impl SkewMatrix {
    /// Validates skew-symmetry; the error names the first offending 1-based pair.
    pub fn new(m: Matrix) -> Result<SkewMatrix> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows,
                cols: m.cols,
            });
        }
        let n = m.rows;
        for r in 0..n {
            if !m.at(r, r).is_zero() {
                return Err(Error::NotSkew { i: r + 1, j: r + 1 });
            }
            for c in r + 1..n {
                if *m.at(c, r) != m.at(r, c).neg() {
                    return Err(Error::NotSkew { i: r + 1, j: c + 1 });
                }
            }
        }
        Ok(SkewMatrix(m))
    }

    /// The 0x0 matrix, whose Pfaffian is 1.
    pub fn empty(ring: Ring) -> SkewMatrix {
        SkewMatrix(Matrix::zeros(ring, 0, 0))
    }

    pub(crate) fn new_unchecked(m: Matrix) -> SkewMatrix {
        debug_assert!(SkewMatrix::new(m.clone()).is_ok());
        SkewMatrix(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn ring(&self) -> Ring {
        self.0.ring
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.0.entry(i, j)
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &Scalar {
        self.0.at(r, c)
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Strict upper triangle in row-major order.
    pub fn upper(&self) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for r in 0..n {
            for c in r + 1..n {
                out.push(self.at(r, c).clone());
            }
        }
        out
    }

    /// `ᵗA`, which equals `-A`.
    pub fn transpose(&self) -> SkewMatrix {
        SkewMatrix(self.0.transpose())
    }

    /// `λA`.
    pub fn scale(&self, lambda: &Scalar) -> Result<SkewMatrix> {
        Ok(SkewMatrix(self.0.scale(lambda)?))
    }

    /// Trailing principal block starting at 1-based index `from`.
    pub fn trailing(&self, from: usize) -> SkewMatrix {
        let k = self.dim() + 1 - from;
        SkewMatrix(self.0.submatrix(from, from, k, k))
    }

    pub(crate) fn require_even(&self) -> Result<usize> {
        if self.dim().is_multiple_of(2) {
            Ok(self.dim() / 2)
        } else {
            Err(Error::OddDimension { dim: self.dim() })
        }
    }
}

impl TryFrom<Matrix> for SkewMatrix {
    type Error = Error;
    fn try_from(m: Matrix) -> Result<SkewMatrix> {
        SkewMatrix::new(m)
    }
}

impl fmt::Display for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(Ring::Int, rows).unwrap()
    }

    #[test]
    fn mat_mul_examples() {
        let j1 = int(&[&[0, 1], &[-1, 0]]);
        assert_eq!(j1.mul(&j1).unwrap(), int(&[&[-1, 0], &[0, -1]]));
        let x = int(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(Matrix::identity(Ring::Int, 2).mul(&x).unwrap(), x);

        // [a13, a14] x [-a24, a23]ᵗ
        let row = Matrix::new(
            Ring::Poly,
            1,
            2,
            vec![Scalar::var("a13"), Scalar::var("a14")],
        )
        .unwrap();
        let col = Matrix::new(
            Ring::Poly,
            2,
            1,
            vec![Scalar::var("a24").neg(), Scalar::var("a23")],
        )
        .unwrap();
        assert_eq!(
            row.mul(&col).unwrap().entry(1, 1).to_string(),
            "-a13*a24 + a14*a23"
        );
    }

    #[test]
    fn mat_mul_rejects_bad_shapes_and_rings() {
        let a = int(&[&[1, 2]]);
        assert!(matches!(a.mul(&a), Err(Error::ShapeMismatch { .. })));
        let b = Matrix::identity(Ring::Zp(7), 2);
        assert!(matches!(a.mul(&b), Err(Error::Ring(_))));
    }

    #[test]
    fn mixed_ring_entries_are_rejected() {
        let bad = Matrix::new(
            Ring::Int,
            1,
            2,
            vec![
                Scalar::from_i64(Ring::Int, 1),
                Scalar::from_i64(Ring::Rat, 1),
            ],
        );
        assert!(matches!(bad, Err(Error::Ring(_))));
    }

    #[test]
    fn skew_validation_names_the_pair() {
        assert_eq!(
            SkewMatrix::new(int(&[&[0, 1, 2], &[-1, 0, 3], &[-2, 3, 0]])),
            Err(Error::NotSkew { i: 2, j: 3 })
        );
        assert_eq!(
            SkewMatrix::new(int(&[&[0, 1], &[-1, 4]])),
            Err(Error::NotSkew { i: 2, j: 2 })
        );
        assert!(matches!(
            SkewMatrix::new(int(&[&[0, 1]])),
            Err(Error::NotSquare { .. })
        ));
        assert_eq!(SkewMatrix::empty(Ring::Int).dim(), 0);
    }
}
