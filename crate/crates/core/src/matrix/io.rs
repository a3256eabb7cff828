//! Matrix file formats.
//!
//! Plain text: a line holding `n`, then `n` lines of `n` whitespace-separated
//! literals. Blank lines and lines starting with `#` are ignored. Literals may not
//! contain whitespace, so prime-field entries are written as bare integers and the
//! ring comes from the caller.
//!
//! JSON: `{"n": 4, "ring": "int", "entries": [[...], ...]}` or
//! `{"n": 4, "ring": "int", "upper": [...]}` with the strict upper triangle in
//! row-major order. Entries may be JSON numbers or strings in the scalar syntax.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};

use super::{skew_from_upper, Matrix};

/// The JSON matrix object, as read and as emitted in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<Value>>,
}

fn literal(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Parse(format!("unsupported entry {other}"))),
    }
}

impl MatrixRecord {
    /// Full-entries record for a square matrix; entries are rendered as strings.
    pub fn from_matrix(m: &Matrix) -> MatrixRecord {
        MatrixRecord {
            n: m.rows(),
            ring: Some(m.ring().to_string()),
            entries: Some(
                (1..=m.rows())
                    .map(|i| {
                        m.row(i)
                            .iter()
                            .map(|x| Value::String(x.to_string()))
                            .collect()
                    })
                    .collect(),
            ),
            upper: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// Builds the matrix. A ring given both here and by the caller must agree.
    pub fn into_matrix(self, ring_override: Option<Ring>) -> Result<Matrix> {
        let declared = self.ring.as_deref().map(str::parse::<Ring>).transpose()?;
        let ring = match (declared, ring_override) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::InvalidArgument(format!(
                    "file declares ring {a} but {b} was requested"
                )))
            }
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => Ring::Int,
        };
        let n = self.n;
        match (self.entries, self.upper) {
            (Some(rows), None) => {
                if rows.len() != n {
                    return Err(Error::WrongCount {
                        expected: n,
                        found: rows.len(),
                    });
                }
                let mut data = Vec::with_capacity(n * n);
                for row in &rows {
                    if row.len() != n {
                        return Err(Error::WrongCount {
                            expected: n,
                            found: row.len(),
                        });
                    }
                    for v in row {
                        data.push(Scalar::parse(ring, &literal(v)?)?);
                    }
                }
                Matrix::new(ring, n, n, data)
            }
            (None, Some(upper)) => {
                let vals = upper
                    .iter()
                    .map(|v| Ok(Scalar::parse(ring, &literal(v)?)?))
                    .collect::<Result<Vec<_>>>()?;
                Ok(skew_from_upper(ring, n, vals)?.into_matrix())
            }
            _ => Err(Error::Parse(
                "matrix object needs exactly one of \"entries\" or \"upper\"".into(),
            )),
        }
    }
}

pub fn parse_matrix_json(src: &str, ring: Option<Ring>) -> Result<Matrix> {
    let rec: MatrixRecord =
        serde_json::from_str(src).map_err(|e| Error::Parse(format!("invalid matrix JSON: {e}")))?;
    rec.into_matrix(ring)
}

fn detect_ring(tokens: &[&str]) -> Ring {
    if tokens
        .iter()
        .any(|t| t.chars().any(|c| c.is_ascii_alphabetic() || c == '_'))
    {
        Ring::Poly
    } else if tokens.iter().any(|t| t.contains('/')) {
        Ring::Rat
    } else {
        Ring::Int
    }
}

pub fn parse_matrix_text(src: &str, ring: Option<Ring>) -> Result<Matrix> {
    let mut lines = src
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("first line must be the dimension, got `{header}`")))?;
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split_whitespace().collect()).collect();
    if rows.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    if let Some((k, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Parse(format!(
            "row {} has {} entries, expected {n}",
            k + 1,
            row.len()
        )));
    }
    let tokens: Vec<&str> = rows.iter().flatten().copied().collect();
    let ring = ring.unwrap_or_else(|| detect_ring(&tokens));
    let data = tokens
        .iter()
        .map(|t| Scalar::parse(ring, t))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Matrix::new(ring, n, n, data)
}

/// Dispatches on the first non-blank character: `{` means JSON.
pub fn parse_matrix(src: &str, ring: Option<Ring>) -> Result<Matrix> {
    if src.trim_start().starts_with('{') {
        parse_matrix_json(src, ring)
    } else {
        parse_matrix_text(src, ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{generic_skew, make_j, SkewMatrix};

    #[test]
    fn text_format() {
        let m = parse_matrix("2\n0 5\n-5 0\n", None).unwrap();
        assert_eq!(m.ring(), Ring::Int);
        assert_eq!(m.entry(1, 2).to_string(), "5");
        let q = parse_matrix("# halves\n2\n0 1/2\n-1/2 0", None).unwrap();
        assert_eq!(q.ring(), Ring::Rat);
        let p = parse_matrix("2\n0 x*y\n-x*y 0", None).unwrap();
        assert_eq!(p.ring(), Ring::Poly);
        let z = parse_matrix("2\n0 -1\n1 0", Some(Ring::Zp(7))).unwrap();
        assert_eq!(z.entry(1, 2).to_string(), "6 mod 7");
        assert!(parse_matrix("2\n0 1\n", None).is_err());
        assert!(parse_matrix("2\n0 1 2\n-1 0\n", None).is_err());
    }

    #[test]
    fn json_upper_and_entries() {
        let j = parse_matrix(
            r#"{"n": 4, "ring": "int", "upper": [1, 0, 0, 0, 0, 1]}"#,
            None,
        )
        .unwrap();
        assert_eq!(j, make_j(Ring::Int, 2).into_matrix());
        let e = parse_matrix(r#"{"n": 2, "entries": [["0", "3"], [-3, 0]]}"#, None).unwrap();
        assert_eq!(e.entry(2, 1).to_string(), "-3");
        assert!(parse_matrix(r#"{"n": 2, "ring": "int", "upper": [1]}"#, Some(Ring::Rat)).is_err());
        assert!(parse_matrix(r#"{"n": 2}"#, None).is_err());
    }

    #[test]
    fn records_re_parse_exactly() {
        for m in [
            generic_skew(4, "a").into_matrix(),
            Matrix::from_fn(Ring::Zp(97), 3, 3, |i, j| {
                Scalar::from_i64(Ring::Zp(97), (i * 10 + j) as i64 - 50)
            }),
            Matrix::from_fn(Ring::Rat, 2, 2, |i, j| {
                Scalar::rational(i as i64, j as i64 + 1).unwrap()
            }),
        ] {
            let json = MatrixRecord::from_matrix(&m).to_json();
            assert_eq!(parse_matrix(&json, None).unwrap(), m);
        }
    }

    #[test]
    fn non_skew_input_reports_the_pair() {
        let m = parse_matrix("3\n0 1 2\n-1 0 3\n-2 -3 1\n", None).unwrap();
        assert_eq!(SkewMatrix::new(m), Err(Error::NotSkew { i: 3, j: 3 }));
    }
}
