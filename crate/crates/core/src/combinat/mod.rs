//! Brute-force combinatorial oracles.
//!
//! These enumerate perfect matchings, permutations and clow sequences directly and
//! are the ground truth the fast algorithms are tested against. Each oracle refuses
//! inputs above a size bound instead of running for hours.

mod altclow;
mod clow;
mod matching;

use std::fmt;
use std::ops::Mul;

pub use altclow::{alt_clow_seqs, alt_clow_seqs_headed, alt_clows_with_head, AltClow, AltClowSeq};
pub use clow::{
    enumerate_pclow_seqs, pclow_sign_weight, pclows_with_head, pf_clow, pf_clow_bounded, PClow,
    PClowSeq,
};
pub use matching::{
    det_leibniz, det_leibniz_bounded, double_factorial, enumerate_matchings, matching_sign,
    pair_product_oracle, pf_definition, pf_definition_bounded, Matching,
};

use crate::ring::{Ring, Scalar};

/// Default largest dimension for the matching-sum Pfaffian.
pub const MATCHING_BOUND: usize = 12;
/// Default largest dimension for the Leibniz determinant.
pub const LEIBNIZ_BOUND: usize = 8;
/// Default largest vertex count and sequence length for clow enumeration.
pub const CLOW_BOUND: usize = 6;

/// A permutation or clow sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_scalar(self, ring: Ring) -> Scalar {
        Scalar::from_i64(ring, self.as_i32() as i64)
    }

    pub fn apply(self, x: &Scalar) -> Scalar {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => x.neg(),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

pub(crate) fn fmt_edges(f: &mut fmt::Formatter<'_>, edges: &[(usize, usize)]) -> fmt::Result {
    write!(f, "(")?;
    for (k, (u, v)) in edges.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "({u},{v})")?;
    }
    write!(f, ")")
}
