use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};

use super::{Matrix, SkewMatrix};

fn check_index(index: usize, dim: usize) -> Result<()> {
    if (1..=dim).contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, dim })
    }
}

fn check_pair(i: usize, j: usize, dim: usize) -> Result<()> {
    check_index(i, dim)?;
    check_index(j, dim)?;
    if i == j {
        return Err(Error::RepeatedIndex { index: i });
    }
    Ok(())
}

fn var_name(prefix: &str, i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{prefix}{i}{j}")
    } else {
        format!("{prefix}{i}_{j}")
    }
}

/// The skew matrix determined by its strict upper triangle (row-major).
pub fn skew_from_upper(ring: Ring, n: usize, upper: Vec<Scalar>) -> Result<SkewMatrix> {
    let expected = n * n.saturating_sub(1) / 2;
    if upper.len() != expected {
        return Err(Error::WrongCount {
            expected,
            found: upper.len(),
        });
    }
    for x in &upper {
        ring.ensure_same(x.ring())?;
    }
    let mut m = vec![ring.zero(); n * n];
    let mut it = upper.into_iter();
    for r in 0..n {
        for c in r + 1..n {
            let x = it.next().expect("count checked");
            m[c * n + r] = x.neg();
            m[r * n + c] = x;
        }
    }
    Ok(SkewMatrix::new_unchecked(Matrix::new(ring, n, n, m)?))
}

/// The fully generic skew matrix over ℤ[a12, a13, …]: entry `(i, j)`, `i < j`, is the
/// indeterminate `{prefix}{i}{j}` (`{prefix}{i}_{j}` once an index reaches 10).
pub fn generic_skew(n: usize, prefix: &str) -> SkewMatrix {
    let mut upper = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            upper.push(Scalar::var(&var_name(prefix, i, j)));
        }
    }
    skew_from_upper(Ring::Poly, n, upper).expect("generic construction")
}

/// A rows×cols matrix of distinct indeterminates `{prefix}{i}{j}`.
pub fn generic_matrix(rows: usize, cols: usize, prefix: &str) -> Matrix {
    Matrix::from_fn(Ring::Poly, rows, cols, |i, j| {
        Scalar::var(&var_name(prefix, i, j))
    })
}

/// `J_n`: n diagonal copies of `[[0, 1], [-1, 0]]`, a 2n×2n matrix.
pub fn make_j(ring: Ring, n: usize) -> SkewMatrix {
    let d = 2 * n;
    SkewMatrix::new_unchecked(Matrix::from_fn(ring, d, d, |i, j| {
        if i % 2 == 1 && j == i + 1 {
            ring.one()
        } else if i % 2 == 0 && j + 1 == i {
            ring.one().neg()
        } else {
            ring.zero()
        }
    }))
}

/// `[[0, A], [-ᵗA, 0]]` for a square `A`.
pub fn embed_for_det(a: &Matrix) -> Result<SkewMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let ring = a.ring();
    Ok(SkewMatrix::new_unchecked(Matrix::from_fn(
        ring,
        2 * n,
        2 * n,
        |i, j| match (i <= n, j <= n) {
            (true, false) => a.entry(i, j - n).clone(),
            (false, true) => a.entry(j, i - n).neg(),
            _ => ring.zero(),
        },
    )))
}

/// `A[i:j]`: rows i, j swapped and columns i, j swapped simultaneously.
pub fn swap_sym(a: &SkewMatrix, i: usize, j: usize) -> Result<SkewMatrix> {
    let n = a.dim();
    check_pair(i, j, n)?;
    let p = |k: usize| {
        if k == i {
            j
        } else if k == j {
            i
        } else {
            k
        }
    };
    Ok(SkewMatrix::new_unchecked(Matrix::from_fn(
        a.ring(),
        n,
        n,
        |r, c| a.entry(p(r), p(c)).clone(),
    )))
}

/// `A⟨i,j⟩`: rows and columns i and j removed.
pub fn minor_pair(a: &SkewMatrix, i: usize, j: usize) -> Result<SkewMatrix> {
    let n = a.dim();
    check_pair(i, j, n)?;
    let keep: Vec<usize> = (1..=n).filter(|&k| k != i && k != j).collect();
    Ok(SkewMatrix::new_unchecked(Matrix::from_fn(
        a.ring(),
        n - 2,
        n - 2,
        |r, c| a.entry(keep[r - 1], keep[c - 1]).clone(),
    )))
}

/// `A(λ, i)`: row i and column i multiplied by λ. The diagonal entry stays 0.
pub fn scale_sym(a: &SkewMatrix, lambda: &Scalar, i: usize) -> Result<SkewMatrix> {
    let n = a.dim();
    check_index(i, n)?;
    a.ring().ensure_same(lambda.ring())?;
    Ok(SkewMatrix::new_unchecked(Matrix::from_fn(
        a.ring(),
        n,
        n,
        |r, c| {
            let x = a.entry(r, c);
            if (r == i) != (c == i) {
                x * lambda
            } else {
                x.clone()
            }
        },
    )))
}

/// `I_ij`: the identity with rows i and j exchanged.
pub fn make_transposition(ring: Ring, n: usize, i: usize, j: usize) -> Result<Matrix> {
    check_pair(i, j, n)?;
    let p = |k: usize| {
        if k == i {
            j
        } else if k == j {
            i
        } else {
            k
        }
    };
    Ok(Matrix::from_fn(ring, n, n, |r, c| {
        if p(r) == c {
            ring.one()
        } else {
            ring.zero()
        }
    }))
}

/// Blocks of `A = [[0, a12, R], [-a12, 0, -ᵗS], [-ᵗR, S, M]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBlocks {
    pub a12: Scalar,
    /// Row 1, columns 3..2n.
    pub r: Matrix,
    /// Column 2, rows 3..2n; row 2 of `A` past the diagonal is `-ᵗS`.
    pub s: Matrix,
    pub m: SkewMatrix,
}

impl SkewBlocks {
    /// Reassembles the matrix the blocks came from.
    pub fn assemble(&self) -> SkewMatrix {
        let k = self.m.dim();
        let ring = self.m.ring();
        let n = k + 2;
        SkewMatrix::new_unchecked(Matrix::from_fn(ring, n, n, |i, j| match (i, j) {
            (1, 1) | (2, 2) => ring.zero(),
            (1, 2) => self.a12.clone(),
            (2, 1) => self.a12.neg(),
            (1, j) => self.r.entry(1, j - 2).clone(),
            (i, 1) => self.r.entry(1, i - 2).neg(),
            (2, j) => self.s.entry(j - 2, 1).neg(),
            (i, 2) => self.s.entry(i - 2, 1).clone(),
            (i, j) => self.m.entry(i - 2, j - 2).clone(),
        }))
    }
}

/// Splits an even-dimensional skew matrix of size at least 4 into `(a12, R, S, M)`.
pub fn block_decompose(a: &SkewMatrix) -> Result<SkewBlocks> {
    let d = a.dim();
    if d % 2 == 1 {
        return Err(Error::OddDimension { dim: d });
    }
    if d < 4 {
        return Err(Error::DimensionTooSmall { dim: d, min: 4 });
    }
    let m = a.as_matrix();
    Ok(SkewBlocks {
        a12: a.entry(1, 2).clone(),
        r: m.submatrix(1, 3, 1, d - 2),
        s: m.submatrix(3, 2, d - 2, 1),
        m: a.trailing(3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_i64(Ring::Int, x)).collect()
    }

    fn var(s: &str) -> Scalar {
        Scalar::var(s)
    }

    #[test]
    fn skew_from_upper_examples() {
        let c = skew_from_upper(Ring::Poly, 2, vec![var("c")]).unwrap();
        assert_eq!(c.entry(2, 1), &var("c").neg());
        let jj = skew_from_upper(Ring::Int, 4, ints(&[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(jj, make_j(Ring::Int, 2));
        assert_eq!(
            skew_from_upper(Ring::Int, 4, ints(&[1, 2])),
            Err(Error::WrongCount {
                expected: 6,
                found: 2
            })
        );
        assert_eq!(generic_skew(4, "a").upper().len(), 6);
    }

    #[test]
    fn j_squares_to_minus_identity() {
        for n in 1..=4 {
            let j = make_j(Ring::Int, n);
            let sq = j.as_matrix().mul(j.as_matrix()).unwrap();
            assert_eq!(sq, Matrix::identity(Ring::Int, 2 * n).neg());
            assert!(SkewMatrix::new(j.into_matrix()).is_ok());
        }
        assert_eq!(
            make_j(Ring::Int, 1).into_matrix(),
            Matrix::from_i64_rows(Ring::Int, &[&[0, 1], &[-1, 0]]).unwrap()
        );
    }

    #[test]
    fn embed_places_blocks() {
        let e = embed_for_det(&Matrix::identity(Ring::Int, 2)).unwrap();
        assert_eq!(e.upper(), ints(&[0, 1, 0, 0, 1, 0]));
        let one = embed_for_det(&Matrix::identity(Ring::Int, 1)).unwrap();
        assert_eq!(one, make_j(Ring::Int, 1));
        assert!(embed_for_det(&Matrix::zeros(Ring::Int, 2, 3)).is_err());
    }

    #[test]
    fn swap_sym_on_generic_4x4() {
        let a = generic_skew(4, "a");
        let s = swap_sym(&a, 1, 2).unwrap();
        let expect = vec![
            var("a12").neg(),
            var("a23"),
            var("a24"),
            var("a13"),
            var("a14"),
            var("a34"),
        ];
        assert_eq!(s.upper(), expect);
        assert_eq!(swap_sym(&s, 1, 2).unwrap(), a);
        assert_eq!(swap_sym(&a, 2, 2), Err(Error::RepeatedIndex { index: 2 }));
        assert_eq!(
            swap_sym(&a, 1, 5),
            Err(Error::IndexOutOfRange { index: 5, dim: 4 })
        );
    }

    #[test]
    fn swap_is_conjugation_by_transposition() {
        let a = generic_skew(5, "a");
        for i in 1..=5 {
            for j in 1..=5 {
                if i == j {
                    continue;
                }
                let t = make_transposition(Ring::Poly, 5, i, j).unwrap();
                let conj = t.transpose().mul(a.as_matrix()).unwrap().mul(&t).unwrap();
                assert_eq!(&conj, swap_sym(&a, i, j).unwrap().as_matrix());
            }
        }
    }

    #[test]
    fn minor_pair_examples() {
        let a = generic_skew(4, "a");
        assert_eq!(minor_pair(&a, 1, 2).unwrap().upper(), vec![var("a34")]);
        assert_eq!(minor_pair(&a, 1, 3).unwrap().upper(), vec![var("a24")]);
        assert_eq!(minor_pair(&a, 3, 1).unwrap(), minor_pair(&a, 1, 3).unwrap());
        let two = generic_skew(2, "a");
        assert_eq!(minor_pair(&two, 1, 2).unwrap().dim(), 0);
    }

    #[test]
    fn scale_sym_examples() {
        let a = generic_skew(3, "a");
        assert_eq!(scale_sym(&a, &Ring::Poly.one(), 2).unwrap(), a);
        let l = var("l");
        let m = var("m");
        let twice = scale_sym(&scale_sym(&a, &l, 1).unwrap(), &m, 1).unwrap();
        assert_eq!(twice, scale_sym(&a, &(&l * &m), 1).unwrap());
        let c = skew_from_upper(Ring::Poly, 2, vec![var("c")]).unwrap();
        assert_eq!(scale_sym(&c, &l, 1).unwrap().upper(), vec![&l * &var("c")]);
    }

    #[test]
    fn transposition_is_an_involution() {
        let t = make_transposition(Ring::Int, 2, 1, 2).unwrap();
        assert_eq!(
            t,
            Matrix::from_i64_rows(Ring::Int, &[&[0, 1], &[1, 0]]).unwrap()
        );
        let t = make_transposition(Ring::Int, 4, 2, 3).unwrap();
        assert_eq!(t.mul(&t).unwrap(), Matrix::identity(Ring::Int, 4));
    }

    #[test]
    fn block_decompose_generic_and_j() {
        let a = generic_skew(4, "a");
        let b = block_decompose(&a).unwrap();
        assert_eq!(b.a12, var("a12"));
        assert_eq!(b.r.entries(), &[var("a13"), var("a14")]);
        assert_eq!(b.s.entries(), &[var("a23").neg(), var("a24").neg()]);
        assert_eq!(b.m.upper(), vec![var("a34")]);
        assert_eq!(b.assemble(), a);

        let j = block_decompose(&make_j(Ring::Int, 2)).unwrap();
        assert!(j.a12.is_one() && j.r.is_zero() && j.s.is_zero());
        assert_eq!(j.m, make_j(Ring::Int, 1));

        let g6 = generic_skew(6, "a");
        assert_eq!(block_decompose(&g6).unwrap().assemble(), g6);
        assert_eq!(
            block_decompose(&generic_skew(2, "a")),
            Err(Error::DimensionTooSmall { dim: 2, min: 4 })
        );
        assert_eq!(
            block_decompose(&generic_skew(5, "a")),
            Err(Error::OddDimension { dim: 5 })
        );
    }
}
