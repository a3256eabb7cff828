//! Exact Pfaffians of skew-symmetric matrices.
//!
//! The fast path is a division-free Berkowitz-type recursion ([`pfaffian_coeffs`])
//! producing every coefficient of the Pfaffian characteristic polynomial. The
//! slow paths in [`combinat`] enumerate matchings and clow sequences and serve as
//! oracles. [`identities`] turns the classical Pfaffian identities into checks
//! that return a [`Report`].
//!
//! ```
//! use pfkit::{generic_skew, pfaffian, pfaffian_coeffs};
//!
//! let a = generic_skew(4, "a");
//! assert_eq!(pfaffian(&a).unwrap().to_string(), "a12*a34 - a13*a24 + a14*a23");
//! assert_eq!(pfaffian_coeffs(&a).unwrap().to_string(), "1, a12 + a34, a12*a34 - a13*a24 + a14*a23");
//! ```
//!
//! Arithmetic is exact over ℤ, ℚ, prime fields and multivariate integer
//! polynomials; see [`Ring`].

pub mod berkowitz;
pub mod combinat;
pub mod error;
pub mod identities;
pub mod matrix;
pub mod pairs;
pub mod report;
pub mod ring;

pub use berkowitz::{
    berkowitz_char_poly, berkowitz_det, char_poly, eval_matrix_poly, pb_matrix, pfaffian,
    pfaffian_coeffs, CoeffSeq, PBMatrix,
};
pub use error::{Error, Result};
pub use matrix::{
    block_decompose, embed_for_det, generic_matrix, generic_skew, make_j, make_transposition,
    minor_pair, parse_matrix, scale_sym, skew_from_upper, swap_sym, Matrix, MatrixRecord,
    SkewBlocks, SkewMatrix,
};
pub use pairs::{
    coincide_with_aj, pair_blocks, pair_coeffs, pair_product, PairBlocks, PairCoeffSeq,
};
pub use report::{Report, Witness};
pub use ring::{random_scalar, Polynomial, Ring, RingError, Scalar};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/pb-algorithm.md")]
    mod pb_algorithm {}
    #[doc = include_str!("../../../book/src/cayley-hamilton.md")]
    mod cayley_hamilton {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/pairs.md")]
    mod pairs {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
