//! The Pfaffian–Berkowitz (PB) recursion and the classical Berkowitz determinant.
//!
//! For a skew matrix of dimension `2n` with blocks
//! `A = [[0, a12, R], [-a12, 0, -ᵗS], [-ᵗR, S, M]]`, the coefficient vector of `A`
//! is `P_A · p̄_M`, where `P_A` is the `(n+1)×n` lower-banded Toeplitz matrix with
//! diagonals `1, a12, RJS, RJ(MJ)S, …, RJ(MJ)^(n-2)S` and `J = J_(n-1)`. The
//! recursion bottoms out at the trailing 2×2 block `(1, a)`. The last coefficient
//! is the Pfaffian.
//!
//! Nothing here divides, so every function works over any supported ring.

use std::fmt;

use log::trace;

use crate::error::{Error, Result};
use crate::matrix::{block_decompose, make_j, Matrix, SkewMatrix};
use crate::ring::{Ring, Scalar};

/// Coefficients `(p_n, p_(n-1), …, p_0)` in descending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffSeq {
    coeffs: Vec<Scalar>,
}

impl CoeffSeq {
    /// Panics on an empty list.
    pub fn new(descending: Vec<Scalar>) -> Self {
        assert!(
            !descending.is_empty(),
            "coefficient sequence needs at least one entry"
        );
        CoeffSeq { coeffs: descending }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ring(&self) -> Ring {
        self.coeffs[0].ring()
    }

    /// `(p_n, …, p_0)`.
    pub fn descending(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// The coefficient of degree `i`, i.e. `p_i`.
    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[self.degree() - i]
    }

    pub fn leading(&self) -> &Scalar {
        &self.coeffs[0]
    }

    /// `p_0`.
    pub fn constant(&self) -> &Scalar {
        self.coeffs.last().expect("non-empty")
    }

    /// Renders `p_n x^n + … + p_0` with `var` as the indeterminate.
    pub fn render_polynomial(&self, var: &str) -> String {
        let n = self.degree();
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let deg = n - k;
            let mut body = c.to_string();
            let mut negative = false;
            if !body.contains(' ') && body.starts_with('-') {
                negative = true;
                body.remove(0);
            }
            if body.contains(' ') {
                body = format!("({body})");
            }
            let power = match deg {
                0 => String::new(),
                1 => var.to_string(),
                d => format!("{var}^{d}"),
            };
            let term = match (deg, body.as_str()) {
                (0, _) => body,
                (_, "1") => power,
                _ => format!("{body}*{power}"),
            };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Applies the lower-banded Toeplitz matrix of shape `rows × v.len()` whose
/// diagonal `k` (entries with `i - j = k`) is `diagonals[k]`.
pub(crate) fn banded_apply(diagonals: &[Scalar], rows: usize, v: &[Scalar]) -> Vec<Scalar> {
    let ring = v.first().map_or_else(|| diagonals[0].ring(), Scalar::ring);
    (0..rows)
        .map(|i| {
            let mut acc = ring.zero();
            for (j, x) in v.iter().enumerate().take(i + 1) {
                if let Some(d) = diagonals.get(i - j) {
                    if !d.is_zero() && !x.is_zero() {
                        acc = &acc + &(d * x);
                    }
                }
            }
            acc
        })
        .collect()
}

pub(crate) fn banded_matrix(diagonals: &[Scalar], rows: usize, cols: usize) -> Matrix {
    let ring = diagonals[0].ring();
    Matrix::from_fn(ring, rows, cols, |i, j| {
        if i >= j {
            diagonals.get(i - j).cloned().unwrap_or_else(|| ring.zero())
        } else {
            ring.zero()
        }
    })
}

/// The `(n+1)×n` banded matrix `P_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PBMatrix {
    diagonals: Vec<Scalar>,
    n: usize,
}

impl PBMatrix {
    /// Diagonal `k`: `1`, `a12`, then `RJ(MJ)^(k-2)S`.
    pub fn diagonal(&self, k: usize) -> &Scalar {
        &self.diagonals[k]
    }

    pub fn diagonals(&self) -> &[Scalar] {
        &self.diagonals
    }

    pub fn rows(&self) -> usize {
        self.n + 1
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn to_matrix(&self) -> Matrix {
        banded_matrix(&self.diagonals, self.n + 1, self.n)
    }

    /// `P_A · v` where `v` has `n` entries.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.n {
            return Err(Error::ShapeMismatch {
                op: "pb_apply",
                left: (self.n + 1, self.n),
                right: (v.len(), 1),
            });
        }
        Ok(banded_apply(&self.diagonals, self.n + 1, v))
    }
}

/// Builds `P_A` from the blocks of `A`.
pub fn pb_matrix(a12: &Scalar, r: &Matrix, s: &Matrix, m: &SkewMatrix) -> Result<PBMatrix> {
    let ring = m.ring();
    for x in [a12.ring(), r.ring(), s.ring()] {
        ring.ensure_same(x)?;
    }
    let k = m.dim();
    if k % 2 == 1 {
        return Err(Error::OddDimension { dim: k + 2 });
    }
    if r.rows() != 1 || r.cols() != k {
        return Err(Error::ShapeMismatch {
            op: "pb_matrix (R)",
            left: (1, k),
            right: (r.rows(), r.cols()),
        });
    }
    if s.cols() != 1 || s.rows() != k {
        return Err(Error::ShapeMismatch {
            op: "pb_matrix (S)",
            left: (k, 1),
            right: (s.rows(), s.cols()),
        });
    }
    let n = k / 2 + 1;
    let j = make_j(ring, n - 1);
    let mj = m.as_matrix().mul(j.as_matrix())?;
    let mut diagonals = Vec::with_capacity(n + 1);
    diagonals.push(ring.one());
    diagonals.push(a12.clone());
    // u runs through RJ, RJ(MJ), RJ(MJ)^2, …
    let mut u = r.mul(j.as_matrix())?;
    for step in 2..=n {
        diagonals.push(u.mul(s)?.entry(1, 1).clone());
        if step < n {
            u = u.mul(&mj)?;
        }
    }
    Ok(PBMatrix { diagonals, n })
}

/// Pfaffian coefficients `(p_n, …, p_0)` of an even-dimensional skew matrix.
///
/// The 0×0 matrix yields `(1)`.
pub fn pfaffian_coeffs(a: &SkewMatrix) -> Result<CoeffSeq> {
    let n = a.require_even()?;
    let ring = a.ring();
    if n == 0 {
        return Ok(CoeffSeq::new(vec![ring.one()]));
    }
    let d = a.dim();
    let mut coeffs = vec![ring.one(), a.entry(d - 1, d).clone()];
    for level in (1..n).rev() {
        let sub = a.trailing(2 * level - 1);
        let blocks = block_decompose(&sub)?;
        let pb = pb_matrix(&blocks.a12, &blocks.r, &blocks.s, &blocks.m)?;
        coeffs = pb.apply(&coeffs)?;
        trace!(
            "pb level {level}: dim {} coefficients {}",
            sub.dim(),
            CoeffSeq::new(coeffs.clone())
        );
    }
    Ok(CoeffSeq::new(coeffs))
}

/// `pf(A) = p_0`; the 0×0 matrix has Pfaffian 1.
pub fn pfaffian(a: &SkewMatrix) -> Result<Scalar> {
    Ok(pfaffian_coeffs(a)?.constant().clone())
}

/// The Pfaffian characteristic polynomial `Φ_A`, as its coefficient sequence.
pub fn char_poly(a: &SkewMatrix) -> Result<CoeffSeq> {
    pfaffian_coeffs(a)
}

/// `Σ q_i X^i` by Horner's rule, with `X^0 = I`.
pub fn eval_matrix_poly(coeffs: &CoeffSeq, x: &Matrix) -> Result<Matrix> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    x.ring().ensure_same(coeffs.ring())?;
    let n = x.rows();
    let mut acc = Matrix::zeros(x.ring(), n, n);
    for q in coeffs.descending() {
        acc = acc.mul(x)?.add(&Matrix::scalar_identity(q, n))?;
    }
    Ok(acc)
}

/// Coefficients of `det(xI - B)`, descending, by the classical Berkowitz recursion.
pub fn berkowitz_char_poly(b: &Matrix) -> Result<CoeffSeq> {
    if !b.is_square() {
        return Err(Error::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    let n = b.rows();
    let ring = b.ring();
    if n == 0 {
        return Ok(CoeffSeq::new(vec![ring.one()]));
    }
    let mut v = vec![ring.one(), b.entry(n, n).neg()];
    for k in (1..n).rev() {
        let d = n - k + 1;
        let a11 = b.entry(k, k);
        let r = b.submatrix(k, k + 1, 1, d - 1);
        let c = b.submatrix(k + 1, k, d - 1, 1);
        let m = b.submatrix(k + 1, k + 1, d - 1, d - 1);
        let mut diagonals = vec![ring.one(), a11.neg()];
        let mut mc = c;
        for step in 2..=d {
            diagonals.push(r.mul(&mc)?.entry(1, 1).neg());
            if step < d {
                mc = m.mul(&mc)?;
            }
        }
        v = banded_apply(&diagonals, d + 1, &v);
    }
    Ok(CoeffSeq::new(v))
}

/// `det(B)` without division: `(-1)^n` times the constant term of `det(xI - B)`.
pub fn berkowitz_det(b: &Matrix) -> Result<Scalar> {
    let cp = berkowitz_char_poly(b)?;
    Ok(cp.constant().signed(b.rows()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{generic_skew, make_transposition, skew_from_upper};

    fn var(s: &str) -> Scalar {
        Scalar::var(s)
    }

    fn strings(c: &CoeffSeq) -> Vec<String> {
        c.descending().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn pb_matrix_generic_4x4() {
        let b = block_decompose(&generic_skew(4, "a")).unwrap();
        let pb = pb_matrix(&b.a12, &b.r, &b.s, &b.m).unwrap();
        let m = pb.to_matrix();
        assert_eq!((m.rows(), m.cols()), (3, 2));
        assert_eq!(m.entry(1, 1), &Ring::Poly.one());
        assert!(m.entry(1, 2).is_zero());
        assert_eq!(m.entry(2, 1), &var("a12"));
        assert_eq!(m.entry(3, 1).to_string(), "-a13*a24 + a14*a23");
        assert_eq!(m.entry(3, 2), &var("a12"));
    }

    #[test]
    fn pb_matrix_of_j2() {
        let b = block_decompose(&make_j(Ring::Int, 2)).unwrap();
        let m = pb_matrix(&b.a12, &b.r, &b.s, &b.m).unwrap().to_matrix();
        assert_eq!(
            m,
            Matrix::from_i64_rows(Ring::Int, &[&[1, 0], &[1, 1], &[0, 1]]).unwrap()
        );
    }

    #[test]
    fn pb_matrix_is_toeplitz() {
        let b = block_decompose(&generic_skew(8, "a")).unwrap();
        let m = pb_matrix(&b.a12, &b.r, &b.s, &b.m).unwrap().to_matrix();
        for i in 1..m.rows() {
            for j in 1..m.cols() {
                assert_eq!(m.entry(i, j), m.entry(i + 1, j + 1));
            }
        }
    }

    #[test]
    fn pfaffian_coeffs_examples() {
        let c = skew_from_upper(Ring::Poly, 2, vec![var("c")]).unwrap();
        assert_eq!(strings(&pfaffian_coeffs(&c).unwrap()), vec!["1", "c"]);
        assert_eq!(
            strings(&pfaffian_coeffs(&generic_skew(4, "a")).unwrap()),
            vec!["1", "a12 + a34", "a12*a34 - a13*a24 + a14*a23"]
        );
        for n in 1..=5 {
            assert!(pfaffian(&make_j(Ring::Int, n)).unwrap().is_one());
        }
        assert_eq!(
            pfaffian_coeffs(&generic_skew(5, "a")),
            Err(Error::OddDimension { dim: 5 })
        );
        assert!(pfaffian(&SkewMatrix::empty(Ring::Int)).unwrap().is_one());
    }

    #[test]
    fn char_poly_rendering() {
        let j2 = char_poly(&make_j(Ring::Int, 2)).unwrap();
        assert_eq!(j2.to_string(), "1, 2, 1");
        assert_eq!(j2.render_polynomial("x"), "x^2 + 2*x + 1");
        let g = char_poly(&generic_skew(4, "a")).unwrap();
        assert_eq!(
            g.render_polynomial("x"),
            "x^2 + (a12 + a34)*x + (a12*a34 - a13*a24 + a14*a23)"
        );
        let a = skew_from_upper(Ring::Poly, 2, vec![var("a")]).unwrap();
        assert_eq!(char_poly(&a).unwrap().render_polynomial("x"), "x + a");
        let neg = CoeffSeq::new(vec![
            Ring::Int.one(),
            Scalar::from_i64(Ring::Int, -2),
            Ring::Int.zero(),
        ]);
        assert_eq!(neg.render_polynomial("x"), "x^2 - 2*x");
    }

    #[test]
    fn eval_matrix_poly_examples() {
        let a = var("a");
        let x = Matrix::scalar_identity(&a.neg(), 2);
        let phi = CoeffSeq::new(vec![Ring::Poly.one(), a.clone()]);
        assert!(eval_matrix_poly(&phi, &x).unwrap().is_zero());
        let m = Matrix::from_i64_rows(Ring::Int, &[&[1, 2], &[3, 4]]).unwrap();
        let id = CoeffSeq::new(vec![Ring::Int.one(), Ring::Int.zero()]);
        assert_eq!(eval_matrix_poly(&id, &m).unwrap(), m);
        let one = CoeffSeq::new(vec![Ring::Int.one()]);
        assert_eq!(
            eval_matrix_poly(&one, &m).unwrap(),
            Matrix::identity(Ring::Int, 2)
        );
        assert!(eval_matrix_poly(&phi, &m).is_err());
    }

    #[test]
    fn berkowitz_det_examples() {
        for n in 0..=5 {
            assert!(berkowitz_det(&Matrix::identity(Ring::Int, n))
                .unwrap()
                .is_one());
        }
        let t = make_transposition(Ring::Int, 4, 1, 3).unwrap();
        assert_eq!(berkowitz_det(&t).unwrap(), Scalar::from_i64(Ring::Int, -1));
        let m = Matrix::from_i64_rows(Ring::Int, &[&[2, -3, 1], &[2, 0, -1], &[1, 4, 5]]).unwrap();
        assert_eq!(berkowitz_det(&m).unwrap(), Scalar::from_i64(Ring::Int, 49));
        let cp =
            berkowitz_char_poly(&Matrix::from_i64_rows(Ring::Int, &[&[1, 2], &[3, 4]]).unwrap())
                .unwrap();
        assert_eq!(cp.to_string(), "1, -5, -2");
        assert!(berkowitz_det(&Matrix::zeros(Ring::Int, 2, 3)).is_err());
    }
}
