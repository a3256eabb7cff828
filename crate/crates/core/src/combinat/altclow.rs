//! Alternating clows: head-minimal closed walks of even length whose edges are
//! weighted alternately by two matrices, `w_{A,B}(C) = a_{e1} b_{e2} ⋯ a_{e(2k-1)} b_{e(2k)}`.
//!
//! Only the enumeration and weights live here. No sign is attached: the pair
//! algorithm does not consume these sets, they exist for exploratory cross-checks.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::SkewMatrix;
use crate::ring::Scalar;

use super::{fmt_edges, CLOW_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltClow {
    edges: Vec<(usize, usize)>,
}

impl AltClow {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn head(&self) -> usize {
        self.edges[0].0
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn weight(&self, a: &SkewMatrix, b: &SkewMatrix) -> Scalar {
        let mut w = a.ring().one();
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            let m = if k % 2 == 0 { a } else { b };
            w = &w * m.entry(u, v);
        }
        w
    }
}

impl fmt::Display for AltClow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_edges(f, &self.edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AltClowSeq {
    clows: Vec<AltClow>,
}

impl AltClowSeq {
    pub fn clows(&self) -> &[AltClow] {
        &self.clows
    }

    /// Head of the first clow.
    pub fn head(&self) -> Option<usize> {
        self.clows.first().map(AltClow::head)
    }

    pub fn len(&self) -> usize {
        self.clows.iter().map(AltClow::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.clows.is_empty()
    }

    pub fn weight(&self, a: &SkewMatrix, b: &SkewMatrix) -> Scalar {
        self.clows
            .iter()
            .fold(a.ring().one(), |acc, c| &acc * &c.weight(a, b))
    }
}

impl fmt::Display for AltClowSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, c) in self.clows.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ">")
    }
}

/// Alternating clows on `[1, n]` with the given head and `len` edges.
pub fn alt_clows_with_head(n: usize, head: usize, len: usize) -> Vec<AltClow> {
    fn go(
        n: usize,
        head: usize,
        cur: usize,
        left: usize,
        edges: &mut Vec<(usize, usize)>,
        out: &mut Vec<AltClow>,
    ) {
        if left == 1 {
            if cur != head {
                edges.push((cur, head));
                out.push(AltClow {
                    edges: edges.clone(),
                });
                edges.pop();
            }
            return;
        }
        for x in head + 1..=n {
            if x == cur {
                continue;
            }
            edges.push((cur, x));
            go(n, head, x, left - 1, edges, out);
            edges.pop();
        }
    }
    let mut out = Vec::new();
    if len >= 2 && len.is_multiple_of(2) && head < n {
        go(n, head, head, len, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

fn check(n: usize, k: usize) -> Result<()> {
    if n > CLOW_BOUND || 2 * k > CLOW_BOUND {
        return Err(Error::AboveBound {
            what: "alternating clow",
            dim: n.max(2 * k),
            bound: CLOW_BOUND,
        });
    }
    Ok(())
}

fn seqs(n: usize, min_head: usize, pairs: usize, first_head: Option<usize>) -> Vec<AltClowSeq> {
    fn go(
        n: usize,
        min_head: usize,
        left: usize,
        fixed: Option<usize>,
        acc: &mut Vec<AltClow>,
        out: &mut Vec<AltClowSeq>,
    ) {
        if left == 0 {
            out.push(AltClowSeq { clows: acc.clone() });
            return;
        }
        let heads: Vec<usize> = match fixed {
            Some(h) => vec![h],
            None => (min_head..=n).collect(),
        };
        for h in heads {
            for p in 1..=left {
                for c in alt_clows_with_head(n, h, 2 * p) {
                    acc.push(c);
                    go(n, h + 1, left - p, None, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(n, min_head, pairs, first_head, &mut Vec::new(), &mut out);
    out
}

/// `𝒞_{i,k}`: alternating clow sequences on `[1, n]` of length `2k` whose first head is at least `i`.
pub fn alt_clow_seqs(n: usize, i: usize, k: usize) -> Result<Vec<AltClowSeq>> {
    check(n, k)?;
    Ok(if k == 0 {
        Vec::new()
    } else {
        seqs(n, i, k, None)
    })
}

/// `𝒟_{i,k}`: as [`alt_clow_seqs`] with first head exactly `i`.
pub fn alt_clow_seqs_headed(n: usize, i: usize, k: usize) -> Result<Vec<AltClowSeq>> {
    check(n, k)?;
    Ok(if k == 0 {
        Vec::new()
    } else {
        seqs(n, i, k, Some(i))
    })
}
