use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SkewMatrix};
use crate::ring::Scalar;

use super::{fmt_edges, Sign, LEIBNIZ_BOUND, MATCHING_BOUND};

/// A perfect matching of `[2n]` in canonical form: pairs `(σ(2k-1), σ(2k))` with
/// `σ(2k-1) < σ(2k)` and increasing first elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The permutation `k ↦ σ(k)` written out as `(σ(1), …, σ(2n))`.
    pub fn as_permutation(&self) -> Vec<usize> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn sign(&self) -> Sign {
        matching_sign(self)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_edges(f, &self.pairs)
    }
}

/// `(2n-1)!!`, with `(-1)!! = 1`.
pub fn double_factorial(n: usize) -> u128 {
    (1..=n).map(|k| (2 * k - 1) as u128).product()
}

/// All `(2n-1)!!` canonical perfect matchings of `[2n]`; `n = 0` yields the empty matching.
pub fn enumerate_matchings(n: usize) -> Vec<Matching> {
    fn go(free: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        let Some((&first, rest)) = free.split_first() else {
            out.push(Matching { pairs: acc.clone() });
            return;
        };
        for k in 0..rest.len() {
            let partner = rest[k];
            let remaining: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|&(idx, _)| idx != k)
                .map(|(_, &v)| v)
                .collect();
            acc.push((first, partner));
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let free: Vec<usize> = (1..=2 * n).collect();
    let mut out = Vec::with_capacity(double_factorial(n) as usize);
    go(&free, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Parity of the permutation `(σ(1), …, σ(2n))`, by counting inversions.
pub fn matching_sign(m: &Matching) -> Sign {
    let p = m.as_permutation();
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    Sign::from_parity(inversions % 2 == 1)
}

/// The Pfaffian as a signed sum over perfect matchings, up to [`MATCHING_BOUND`].
pub fn pf_definition(a: &SkewMatrix) -> Result<Scalar> {
    pf_definition_bounded(a, MATCHING_BOUND)
}

pub fn pf_definition_bounded(a: &SkewMatrix, bound: usize) -> Result<Scalar> {
    let half = a.require_even()?;
    if a.dim() > bound {
        return Err(Error::AboveBound {
            what: "matching",
            dim: a.dim(),
            bound,
        });
    }
    let ring = a.ring();
    let mut total = ring.zero();
    for m in enumerate_matchings(half) {
        let mut term = ring.one();
        for &(i, j) in m.pairs() {
            let x = a.entry(i, j);
            if x.is_zero() {
                term = ring.zero();
                break;
            }
            term = &term * x;
        }
        if !term.is_zero() {
            total = &total + &m.sign().apply(&term);
        }
    }
    Ok(total)
}

/// `Σ_σ sgn(σ) Π a_{iσ(i)}` over all permutations, up to [`LEIBNIZ_BOUND`].
pub fn det_leibniz(a: &Matrix) -> Result<Scalar> {
    det_leibniz_bounded(a, LEIBNIZ_BOUND)
}

pub fn det_leibniz_bounded(a: &Matrix, bound: usize) -> Result<Scalar> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n > bound {
        return Err(Error::AboveBound {
            what: "leibniz",
            dim: n,
            bound,
        });
    }

    // Row r picks an unused column; the number of still-unused columns to its left
    // is the count of inversions that choice contributes.
    fn go(a: &Matrix, row: usize, used: &mut Vec<bool>, odd: bool, prod: Scalar, acc: &mut Scalar) {
        let n = a.rows();
        if row == n {
            *acc = &*acc + &Sign::from_parity(odd).apply(&prod);
            return;
        }
        let mut smaller_unused = 0;
        for c in 0..n {
            if used[c] {
                continue;
            }
            let x = a.entry(row + 1, c + 1);
            if !x.is_zero() {
                used[c] = true;
                go(
                    a,
                    row + 1,
                    used,
                    odd ^ (smaller_unused % 2 == 1),
                    &prod * x,
                    acc,
                );
                used[c] = false;
            }
            smaller_unused += 1;
        }
    }

    let mut acc = a.ring().zero();
    go(a, 0, &mut vec![false; n], false, a.ring().one(), &mut acc);
    Ok(acc)
}

/// `pf(A)·pf(B)` by the matching definition.
pub fn pair_product_oracle(a: &SkewMatrix, b: &SkewMatrix) -> Result<Scalar> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    a.ring().ensure_same(b.ring())?;
    Ok(&pf_definition(a)? * &pf_definition(b)?)
}
