//! P-coefficients of a pair of skew matrices.
//!
//! Write `A = [[0, R], [-ᵗR, M]]` and `B = [[0, -ᵗS], [S, N]]`. With `m = ⌊n/2⌋`
//! the coefficient vector of `(A, B)` is a lower-banded Toeplitz matrix with
//! diagonals `1, -RS, -R(NM)S, …, -R(NM)^(m-1)S` applied to the vector of
//! `(M, N)`. The matrix is `(m+1)×m` for even `n` and `(m+1)×(m+1)` for odd `n`,
//! and the recursion starts from `(1)` at dimension 1.
//!
//! For even `n` the constant term is `pf(A)·pf(B)`, and `B = J` reproduces the
//! Pfaffian coefficients of `A`. Nothing is claimed about the constant term at odd `n`.

use log::trace;

use crate::berkowitz::{banded_apply, banded_matrix, pfaffian_coeffs, CoeffSeq};
use crate::error::{Error, Result};
use crate::matrix::{make_j, Matrix, SkewMatrix};
use crate::report::{Report, Witness};
use crate::ring::Scalar;

/// `(q_m, …, q_0)` with `q_m = 1`.
pub type PairCoeffSeq = CoeffSeq;

/// `(R, M, S, N)` for a pair of equal-dimension skew matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairBlocks {
    /// Row 1 of `A`, columns 2..n.
    pub r: Matrix,
    pub m: SkewMatrix,
    /// Column 1 of `B`, rows 2..n.
    pub s: Matrix,
    pub n: SkewMatrix,
}

impl PairBlocks {
    /// Rebuilds `(A, B)`.
    pub fn assemble(&self) -> (SkewMatrix, SkewMatrix) {
        let d = self.m.dim() + 1;
        let ring = self.m.ring();
        let a = Matrix::from_fn(ring, d, d, |i, j| match (i, j) {
            (1, 1) => ring.zero(),
            (1, j) => self.r.entry(1, j - 1).clone(),
            (i, 1) => self.r.entry(1, i - 1).neg(),
            (i, j) => self.m.entry(i - 1, j - 1).clone(),
        });
        let b = Matrix::from_fn(ring, d, d, |i, j| match (i, j) {
            (1, 1) => ring.zero(),
            (1, j) => self.s.entry(j - 1, 1).neg(),
            (i, 1) => self.s.entry(i - 1, 1).clone(),
            (i, j) => self.n.entry(i - 1, j - 1).clone(),
        });
        (SkewMatrix::new_unchecked(a), SkewMatrix::new_unchecked(b))
    }
}

fn check_pair(a: &SkewMatrix, b: &SkewMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    a.ring().ensure_same(b.ring())?;
    Ok(())
}

pub fn pair_blocks(a: &SkewMatrix, b: &SkewMatrix) -> Result<PairBlocks> {
    check_pair(a, b)?;
    let d = a.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall { dim: d, min: 2 });
    }
    Ok(PairBlocks {
        r: a.as_matrix().submatrix(1, 2, 1, d - 1),
        m: a.trailing(2),
        s: b.as_matrix().submatrix(2, 1, d - 1, 1),
        n: b.trailing(2),
    })
}

fn recursion_diagonals(blocks: &PairBlocks) -> Result<Vec<Scalar>> {
    let ring = blocks.m.ring();
    let m = blocks.m.dim().div_ceil(2);
    let nm = blocks.n.as_matrix().mul(blocks.m.as_matrix())?;
    let mut diagonals = vec![ring.one()];
    // v runs through S, (NM)S, (NM)^2 S, …
    let mut v = blocks.s.clone();
    for k in 1..=m {
        diagonals.push(blocks.r.mul(&v)?.entry(1, 1).neg());
        if k < m {
            v = nm.mul(&v)?;
        }
    }
    Ok(diagonals)
}

/// The banded recursion matrix taking the vector of `(M, N)` to that of `(A, B)`.
pub fn pair_recursion_matrix(a: &SkewMatrix, b: &SkewMatrix) -> Result<Matrix> {
    let blocks = pair_blocks(a, b)?;
    let d = a.dim();
    let m = d / 2;
    let cols = (d - 1) / 2 + 1;
    Ok(banded_matrix(&recursion_diagonals(&blocks)?, m + 1, cols))
}

/// `(q_m, …, q_0)` for skew matrices of equal dimension `n ≥ 1`.
pub fn pair_coeffs(a: &SkewMatrix, b: &SkewMatrix) -> Result<PairCoeffSeq> {
    check_pair(a, b)?;
    let d = a.dim();
    if d == 0 {
        return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
    }
    let ring = a.ring();
    let mut q = vec![ring.one()];
    for start in (1..d).rev() {
        let sub_a = a.trailing(start);
        let sub_b = b.trailing(start);
        let blocks = pair_blocks(&sub_a, &sub_b)?;
        let rows = sub_a.dim() / 2 + 1;
        q = banded_apply(&recursion_diagonals(&blocks)?, rows, &q);
        trace!("pair level {start}: {}", CoeffSeq::new(q.clone()));
    }
    Ok(CoeffSeq::new(q))
}

/// `pf(A)·pf(B)` as the constant term of the pair coefficients.
pub fn pair_product(a: &SkewMatrix, b: &SkewMatrix) -> Result<Scalar> {
    check_pair(a, b)?;
    if a.dim() % 2 == 1 {
        return Err(Error::OddDimension { dim: a.dim() });
    }
    if a.dim() == 0 {
        return Ok(a.ring().one());
    }
    Ok(pair_coeffs(a, b)?.constant().clone())
}

/// Compares the Pfaffian coefficients of `A` with the pair coefficients of `(A, J)`.
pub fn coincide_with_aj(a: &SkewMatrix) -> Result<Report> {
    let n = a.require_even()?;
    let ring = a.ring();
    let lhs = pfaffian_coeffs(a)?;
    let rhs = if n == 0 {
        CoeffSeq::new(vec![ring.one()])
    } else {
        pair_coeffs(a, &make_j(ring, n))?
    };
    let mut r = Report::new(
        "pairs-coincide",
        a.dim(),
        ring,
        lhs == rhs,
        lhs.to_string(),
        rhs.to_string(),
    );
    if !r.pass {
        let k = lhs
            .descending()
            .iter()
            .zip(rhs.descending())
            .position(|(x, y)| x != y)
            .unwrap_or(0);
        r.witness = Some(Witness::at(
            "coefficient differs (descending position)",
            &[k + 1],
        ));
        r = r.with_inputs(&[a.as_matrix()]);
    }
    Ok(r)
}
