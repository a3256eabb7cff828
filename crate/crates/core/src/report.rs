//! Structured outcome of an identity check.

use serde::Serialize;

use crate::matrix::{Matrix, MatrixRecord};
use crate::ring::{Ring, Scalar};

/// One verification outcome. `pass` is true iff `lhs` and `rhs` are equal in the ring.
///
/// Serializes to the JSON object
/// `{identity, pass, dim, ring, seed, lhs, rhs, witness}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub identity: String,
    pub pass: bool,
    pub dim: usize,
    pub ring: String,
    pub seed: Option<u64>,
    pub lhs: String,
    pub rhs: String,
    pub witness: Option<Witness>,
}

/// What a failing check leaves behind: a description, the 1-based indices
/// involved, and the input matrices in the file format the CLI reads back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub matrices: Vec<MatrixRecord>,
}

impl Witness {
    pub fn note(detail: impl Into<String>) -> Self {
        Witness {
            detail: detail.into(),
            indices: Vec::new(),
            matrices: Vec::new(),
        }
    }

    pub fn at(detail: impl Into<String>, indices: &[usize]) -> Self {
        Witness {
            indices: indices.to_vec(),
            ..Witness::note(detail)
        }
    }
}

impl Report {
    pub fn new(
        identity: &str,
        dim: usize,
        ring: Ring,
        pass: bool,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        Report {
            identity: identity.to_string(),
            pass,
            dim,
            ring: ring.to_string(),
            seed: None,
            lhs: lhs.into(),
            rhs: rhs.into(),
            witness: None,
        }
    }

    /// Exact comparison of two scalars.
    pub fn compare(identity: &str, dim: usize, ring: Ring, lhs: &Scalar, rhs: &Scalar) -> Self {
        let mut r = Report::new(
            identity,
            dim,
            ring,
            lhs == rhs,
            lhs.to_string(),
            rhs.to_string(),
        );
        if !r.pass {
            r.witness = Some(Witness::note("sides differ"));
        }
        r
    }

    /// Exact entrywise comparison of two matrices; the witness names the first differing entry.
    pub fn compare_matrices(identity: &str, ring: Ring, lhs: &Matrix, rhs: &Matrix) -> Self {
        let pass = lhs == rhs;
        let mut r = Report::new(
            identity,
            lhs.rows(),
            ring,
            pass,
            lhs.to_string(),
            rhs.to_string(),
        );
        if !pass {
            r.witness = Some(match lhs.first_difference(rhs) {
                Some((i, j)) => Witness::at("matrices differ", &[i, j]),
                None => Witness::note("matrix shapes differ"),
            });
        }
        r
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Attaches input matrices to the witness of a failing report; a no-op on success.
    pub fn with_inputs(mut self, inputs: &[&Matrix]) -> Self {
        if let Some(w) = self.witness.as_mut() {
            w.matrices
                .extend(inputs.iter().map(|m| MatrixRecord::from_matrix(m)));
        }
        self
    }

    /// Folds a list of sub-checks into one report that fails on the first failing part.
    pub fn combine(identity: &str, dim: usize, ring: Ring, parts: Vec<Report>) -> Self {
        match parts.iter().find(|p| !p.pass) {
            Some(bad) => {
                let mut r = bad.clone();
                let detail = bad
                    .witness
                    .as_ref()
                    .map(|w| w.detail.clone())
                    .unwrap_or_default();
                if bad.identity != identity {
                    r.witness.get_or_insert_with(|| Witness::note("")).detail =
                        format!("{}: {detail}", bad.identity);
                }
                r.identity = identity.to_string();
                r.dim = dim;
                r
            }
            None => {
                // A shared value says more than a count.
                let side = match parts.split_first() {
                    Some((first, rest))
                        if rest
                            .iter()
                            .all(|p| p.lhs == first.lhs && p.rhs == first.rhs) =>
                    {
                        first.lhs.clone()
                    }
                    _ => format!("{} checks", parts.len()),
                };
                Report::new(identity, dim, ring, true, side.clone(), side)
            }
        }
    }
}
