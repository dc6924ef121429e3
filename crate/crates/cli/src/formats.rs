//! Instance file formats: a JSON object and a plain-text alternative.
//!
//! JSON: `{"n": 3, "matrix": [[...], ...], "q": [...], "d": [...]}` with `q`
//! and `d` optional. Plain text: the first meaningful line holds `n`, the
//! next `n` lines hold the matrix rows, then an optional `q` line and an
//! optional `d` line (each `n` numbers); `#` starts a comment and blank lines
//! are ignored. A leading `{` selects the JSON parser.
//!
//! Numbers survive a parse → serialize → parse round trip bitwise: both
//! writers emit the shortest representation that reads back to the same
//! `f64`.

use lcp_certify_core::{DenseMatrix, Error as CoreError, LcpInstance, RealVector};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// A parsed instance file: the matrix plus optional `q` and `d` vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    /// Dimension.
    pub n: usize,
    /// Row-major n×n matrix.
    pub matrix: Vec<Vec<f64>>,
    /// Constant vector of the complementarity problem, when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<f64>>,
    /// Trial point to certify, when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<f64>>,
}

/// Parse failure with enough context to locate the offending input.
#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    /// Malformed JSON (message carries serde_json's line/column).
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// Malformed plain text at a specific 1-based line.
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    /// Structurally valid input with inconsistent or non-finite contents.
    #[error("{0}")]
    Invalid(String),
}

impl InstanceFile {
    /// Parses either format, sniffing JSON by a leading `{`.
    pub fn parse_str(text: &str) -> Result<Self, ParseError> {
        let trimmed = text.trim_start();
        let file = if trimmed.starts_with('{') {
            serde_json::from_str::<InstanceFile>(text)?
        } else {
            Self::parse_plain(text)?
        };
        file.check()?;
        Ok(file)
    }

    fn parse_plain(text: &str) -> Result<Self, ParseError> {
        // Meaningful lines: comment-stripped, non-blank, with their 1-based
        // position in the original file for error messages.
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, raw)| {
                let body = raw.split('#').next().unwrap_or("").trim();
                (i + 1, body)
            })
            .filter(|(_, body)| !body.is_empty());

        let (line, first) = lines
            .next()
            .ok_or(ParseError::Line { line: 1, message: "empty file".into() })?;
        let n: usize = first.parse().map_err(|_| ParseError::Line {
            line,
            message: format!("expected the dimension, found {first:?}"),
        })?;
        if n == 0 {
            return Err(ParseError::Line { line, message: "dimension must be ≥ 1".into() });
        }

        let mut numbers_row = |what: &str| -> Result<Option<(usize, Vec<f64>)>, ParseError> {
            let Some((line, body)) = lines.next() else {
                return Ok(None);
            };
            let mut row = Vec::with_capacity(n);
            for tok in body.split_whitespace() {
                let v: f64 = tok.parse().map_err(|_| ParseError::Line {
                    line,
                    message: format!("expected a number in {what}, found {tok:?}"),
                })?;
                row.push(v);
            }
            if row.len() != n {
                return Err(ParseError::Line {
                    line,
                    message: format!("{what} has {} entries, expected {n}", row.len()),
                });
            }
            Ok(Some((line, row)))
        };

        let mut matrix = Vec::with_capacity(n);
        for i in 0..n {
            match numbers_row(&format!("matrix row {}", i + 1))? {
                Some((_, row)) => matrix.push(row),
                None => {
                    return Err(ParseError::Invalid(format!(
                        "file ends after {} of {n} matrix rows",
                        matrix.len()
                    )))
                }
            }
        }
        let q = numbers_row("the q line")?.map(|(_, v)| v);
        let d = numbers_row("the d line")?.map(|(_, v)| v);
        if let Some((line, body)) = lines.next() {
            return Err(ParseError::Line {
                line,
                message: format!("unexpected trailing content {body:?}"),
            });
        }
        Ok(InstanceFile { n, matrix, q, d })
    }

    /// Dimension and finiteness checks shared by both parsers.
    fn check(&self) -> Result<(), ParseError> {
        if self.n == 0 {
            return Err(ParseError::Invalid("dimension must be ≥ 1".into()));
        }
        if self.matrix.len() != self.n {
            return Err(ParseError::Invalid(format!(
                "matrix has {} rows, expected {}",
                self.matrix.len(),
                self.n
            )));
        }
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != self.n {
                return Err(ParseError::Invalid(format!(
                    "matrix row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    self.n
                )));
            }
        }
        for (name, vec) in [("q", &self.q), ("d", &self.d)] {
            if let Some(v) = vec {
                if v.len() != self.n {
                    return Err(ParseError::Invalid(format!(
                        "{name} has {} entries, expected {}",
                        v.len(),
                        self.n
                    )));
                }
            }
        }
        let finite = self
            .matrix
            .iter()
            .flatten()
            .chain(self.q.iter().flatten())
            .chain(self.d.iter().flatten())
            .all(|x| x.is_finite());
        if !finite {
            return Err(ParseError::Invalid("all values must be finite".into()));
        }
        Ok(())
    }

    /// Renders the plain-text form (shortest round-trip number formatting).
    pub fn to_plain_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        let row_line = |row: &[f64]| {
            row.iter()
                .map(|x| format!("{x}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        for row in &self.matrix {
            let _ = writeln!(out, "{}", row_line(row));
        }
        if let Some(q) = &self.q {
            let _ = writeln!(out, "{}", row_line(q));
        }
        if let Some(d) = &self.d {
            let _ = writeln!(out, "{}", row_line(d));
        }
        out
    }

    /// The matrix as a dense value.
    pub fn to_matrix(&self) -> Result<DenseMatrix, CoreError> {
        DenseMatrix::from_nested(&self.matrix)
    }

    /// The problem `(A, q)`, if `q` is present.
    pub fn to_instance(&self) -> Result<Option<LcpInstance>, CoreError> {
        let Some(q) = &self.q else { return Ok(None) };
        let a = self.to_matrix()?;
        Ok(Some(LcpInstance::new(a, RealVector::from_slice(q)?)?))
    }

    /// The trial point, if present.
    pub fn to_trial_point(&self) -> Result<Option<RealVector>, CoreError> {
        self.d.as_deref().map(RealVector::from_slice).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLAIN: &str = "\
# worked example
3
4 1 2
3 5 -1   # third row follows
-1 -2 7
-1 -1 -1
0 0 0
";

    #[test]
    fn plain_text_parses_with_comments_and_blanks() {
        let f = InstanceFile::parse_str(PLAIN).unwrap();
        assert_eq!(f.n, 3);
        assert_eq!(f.matrix[1], vec![3.0, 5.0, -1.0]);
        assert_eq!(f.q.as_deref(), Some(&[-1.0, -1.0, -1.0][..]));
        assert_eq!(f.d.as_deref(), Some(&[0.0, 0.0, 0.0][..]));
    }

    #[test]
    fn json_parses_and_optional_fields_default() {
        let f = InstanceFile::parse_str(r#"{"n":2,"matrix":[[2,1],[1,2]]}"#).unwrap();
        assert_eq!(f.n, 2);
        assert!(f.q.is_none() && f.d.is_none());
    }

    #[test]
    fn unknown_json_fields_are_rejected() {
        let err = InstanceFile::parse_str(r#"{"n":1,"matrix":[[1]],"e":[1]}"#).unwrap_err();
        assert!(matches!(err, ParseError::Json(_)), "{err}");
    }

    #[test]
    fn truncated_plain_text_names_the_missing_rows() {
        let err = InstanceFile::parse_str("3\n1 0 0\n0 1 0\n").unwrap_err();
        assert!(err.to_string().contains("2 of 3 matrix rows"), "{err}");
    }

    #[test]
    fn bad_token_is_located_by_line() {
        let err = InstanceFile::parse_str("2\n1 0\n0 x\n").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
    }

    #[test]
    fn row_length_mismatch_is_located_by_line() {
        let err = InstanceFile::parse_str("2\n1 0\n0 1 5\n").unwrap_err();
        assert!(err.to_string().contains("3 entries, expected 2"), "{err}");
    }

    #[test]
    fn trailing_content_is_rejected() {
        let err = InstanceFile::parse_str("1\n2\n-1\n0\n99\n").unwrap_err();
        assert!(err.to_string().contains("unexpected trailing content"), "{err}");
    }

    #[test]
    fn non_finite_values_are_rejected_in_json() {
        // serde_json already rejects bare Infinity/NaN literals.
        let err = InstanceFile::parse_str(r#"{"n":1,"matrix":[[1e999]]}"#).unwrap_err();
        assert!(matches!(err, ParseError::Json(_)));
    }

    #[test]
    fn dimension_mismatch_in_json_is_reported() {
        let err = InstanceFile::parse_str(r#"{"n":3,"matrix":[[1,0],[0,1]]}"#).unwrap_err();
        assert!(err.to_string().contains("2 rows, expected 3"), "{err}");
    }

    #[test]
    fn round_trips_are_bitwise_in_both_formats() {
        let f = InstanceFile {
            n: 2,
            matrix: vec![vec![0.1, -2.5e-17], vec![1.0 / 3.0, 4.0]],
            q: Some(vec![-1.0000000000000002, 0.0]),
            d: None,
        };
        let via_text = InstanceFile::parse_str(&f.to_plain_text()).unwrap();
        assert_eq!(via_text, f);
        let via_json = InstanceFile::parse_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(via_json, f);
    }

    #[test]
    fn conversions_reach_core_types() {
        let f = InstanceFile::parse_str(PLAIN).unwrap();
        let inst = f.to_instance().unwrap().unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.a.get(2, 2), 7.0);
        let d = f.to_trial_point().unwrap().unwrap();
        assert_eq!(d.norm_inf(), 0.0);
    }
}
