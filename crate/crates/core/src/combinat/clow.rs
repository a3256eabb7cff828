//! Pclows and pclow sequences.
//!
//! A pclow is a closed walk `(i_1,i_2),(i_2,i_3),…,(i_m,i_1)` whose head `i_1` is
//! smaller than every other vertex it visits, and whose edges come in consecutive
//! pairs `E_k = (e1, e2)` with either `e1 = (v, 2j-1), e2 = (2j-1, 2j)` or
//! `e1 = (v, 2j), e2 = (2j, 2j-1)`. Each odd edge lands somewhere and the following
//! even edge hops to that vertex's partner in its couple `{2j-1, 2j}`.
//!
//! The sign of a pclow is `(-1)^(fd+1)` where `fd` counts forward edges `(i, j)`,
//! `i < j`; its weight multiplies `a⁺` over the odd-position edges, where
//! `a⁺_ij = a_ij` for `i < j` and `a_ji` otherwise.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::SkewMatrix;
use crate::ring::Scalar;

use super::{fmt_edges, Sign, CLOW_BOUND};

fn partner(v: usize) -> usize {
    if v % 2 == 1 {
        v + 1
    } else {
        v - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PClow {
    edges: Vec<(usize, usize)>,
}

impl PClow {
    /// Validates the pclow invariants.
    pub fn new(edges: Vec<(usize, usize)>) -> Result<PClow> {
        let c = PClow { edges };
        if c.is_valid() {
            Ok(c)
        } else {
            Err(Error::InvalidArgument(format!("{c} is not a pclow")))
        }
    }

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

    /// Forward edges `(i, j)` with `i < j`.
    pub fn fd(&self) -> usize {
        self.edges.iter().filter(|(i, j)| i < j).count()
    }

    /// Backward edges `(i, j)` with `i > j`.
    pub fn bd(&self) -> usize {
        self.edges.iter().filter(|(i, j)| i > j).count()
    }

    pub fn sign(&self) -> Sign {
        Sign::from_parity((self.fd() + 1) % 2 == 1)
    }

    fn is_valid(&self) -> bool {
        let e = &self.edges;
        if e.is_empty() || e.len() % 2 == 1 {
            return false;
        }
        let head = e[0].0;
        let chained = e.windows(2).all(|w| w[0].1 == w[1].0) && e[e.len() - 1].1 == head;
        let head_minimal = e[1..].iter().all(|&(u, _)| u > head);
        let paired = e
            .chunks(2)
            .all(|p| p[1].0 == p[0].1 && p[1].1 == partner(p[0].1));
        let no_loops = e.iter().all(|(u, v)| u != v);
        chained && head_minimal && paired && no_loops
    }
}

impl fmt::Display for PClow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_edges(f, &self.edges)
    }
}

/// `(sgn(C), w_A(C))`.
pub fn pclow_sign_weight(c: &PClow, a: &SkewMatrix) -> Result<(Sign, Scalar)> {
    let n = a.dim();
    if let Some(&(u, v)) = c.edges.iter().find(|(u, v)| *u > n || *v > n) {
        return Err(Error::IndexOutOfRange {
            index: u.max(v),
            dim: n,
        });
    }
    let mut w = a.ring().one();
    for &(u, v) in c.edges.iter().step_by(2) {
        w = &w * a.entry(u.min(v), u.max(v));
    }
    Ok((c.sign(), w))
}

/// Every pclow with the given (odd) head on vertices `head..=last`, made of `pairs` edge pairs.
pub fn pclows_with_head(head: usize, last: usize, pairs: usize) -> Vec<PClow> {
    let mut out = Vec::new();
    if head.is_multiple_of(2) || head + 1 > last || pairs == 0 {
        // An even head would be re-entered from its smaller partner.
        return out;
    }
    fn go(
        head: usize,
        last: usize,
        cur: usize,
        left: usize,
        edges: &mut Vec<(usize, usize)>,
        out: &mut Vec<PClow>,
    ) {
        for x in head + 1..=last {
            if x == cur {
                continue;
            }
            let closes = x == head + 1;
            if closes != (left == 1) {
                continue;
            }
            edges.push((cur, x));
            edges.push((x, partner(x)));
            if closes {
                out.push(PClow {
                    edges: edges.clone(),
                });
            } else {
                go(head, last, partner(x), left - 1, edges, out);
            }
            edges.pop();
            edges.pop();
        }
    }
    go(
        head,
        last,
        head,
        pairs,
        &mut Vec::with_capacity(2 * pairs),
        &mut out,
    );
    out
}

/// A sequence of pclows with strictly increasing heads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PClowSeq {
    clows: Vec<PClow>,
}

impl PClowSeq {
    pub fn new(clows: Vec<PClow>) -> Result<PClowSeq> {
        if clows.windows(2).any(|w| w[0].head() >= w[1].head()) {
            return Err(Error::InvalidArgument("pclow heads must increase".into()));
        }
        Ok(PClowSeq { clows })
    }

    pub fn clows(&self) -> &[PClow] {
        &self.clows
    }

    /// Total number of edges.
    pub fn len(&self) -> usize {
        self.clows.iter().map(PClow::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.clows.is_empty()
    }

    pub fn sign_weight(&self, a: &SkewMatrix) -> Result<(Sign, Scalar)> {
        let mut sign = Sign::Plus;
        let mut w = a.ring().one();
        for c in &self.clows {
            let (s, x) = pclow_sign_weight(c, a)?;
            sign = sign * s;
            w = &w * &x;
        }
        Ok((sign, w))
    }

    /// `sgn(C̄)·w_A(C̄)`.
    pub fn signed_weight(&self, a: &SkewMatrix) -> Result<Scalar> {
        let (s, w) = self.sign_weight(a)?;
        Ok(s.apply(&w))
    }
}

impl fmt::Display for PClowSeq {
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

/// Pclow sequences of total length `len` on vertices `restrict_from..=n`.
///
/// With `restrict_from = 1` the first clow must have head 1; with
/// `restrict_from = 3` the sequences live on `[3, n]` with any heads. Length 0
/// yields the single empty sequence.
pub fn enumerate_pclow_seqs(n: usize, len: usize, restrict_from: usize) -> Result<Vec<PClowSeq>> {
    if len % 2 == 1 {
        return Err(Error::OddLength { len });
    }
    if restrict_from != 1 && restrict_from != 3 {
        return Err(Error::InvalidArgument(format!(
            "restrict_from must be 1 or 3, got {restrict_from}"
        )));
    }
    if n > CLOW_BOUND || len > CLOW_BOUND {
        return Err(Error::AboveBound {
            what: "pclow",
            dim: n.max(len),
            bound: CLOW_BOUND,
        });
    }
    Ok(pclow_seqs_unbounded(n, len, restrict_from))
}

fn pclow_seqs_unbounded(n: usize, len: usize, restrict_from: usize) -> Vec<PClowSeq> {
    fn go(
        n: usize,
        min_head: usize,
        pairs_left: usize,
        acc: &mut Vec<PClow>,
        out: &mut Vec<PClowSeq>,
    ) {
        if pairs_left == 0 {
            out.push(PClowSeq { clows: acc.clone() });
            return;
        }
        for head in (min_head..=n).filter(|h| h % 2 == 1) {
            for p in 1..=pairs_left {
                for c in pclows_with_head(head, n, p) {
                    acc.push(c);
                    go(n, head + 1, pairs_left - p, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let pairs = len / 2;
    let mut out = Vec::new();
    if pairs == 0 {
        out.push(PClowSeq::default());
        return out;
    }
    let mut acc = Vec::new();
    if restrict_from == 1 {
        for p in 1..=pairs {
            for c in pclows_with_head(1, n, p) {
                acc.push(c);
                go(n, 2, pairs - p, &mut acc, &mut out);
                acc.pop();
            }
        }
    } else {
        go(n, restrict_from, pairs, &mut acc, &mut out);
    }
    out
}

/// Signed-weight sum over pclow sequences of full length, up to [`CLOW_BOUND`].
pub fn pf_clow(a: &SkewMatrix) -> Result<Scalar> {
    pf_clow_bounded(a, CLOW_BOUND)
}

pub fn pf_clow_bounded(a: &SkewMatrix, bound: usize) -> Result<Scalar> {
    a.require_even()?;
    let n = a.dim();
    if n > bound {
        return Err(Error::AboveBound {
            what: "pclow",
            dim: n,
            bound,
        });
    }
    let mut total = a.ring().zero();
    for seq in pclow_seqs_unbounded(n, n, 1) {
        total = &total + &seq.signed_weight(a)?;
    }
    Ok(total)
}
