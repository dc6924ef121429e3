//! Real vectors with finiteness validation, the plus function, and norms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A finite real vector of dimension at least 1.
///
/// Construction validates that every entry is finite, so downstream code can
/// rely on NaN-free arithmetic. Entries are plain `f64`; indexing is 0-based.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::RealVector;
///
/// let v = RealVector::new(vec![3.0, -1.5]).unwrap();
/// assert_eq!(v.norm_inf(), 3.0);
/// assert_eq!(v.plus().as_slice(), &[3.0, 0.0]);
/// ```
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<f64>", into = "Vec<f64>"))]
pub struct RealVector {
    entries: Vec<f64>,
}

impl RealVector {
    /// Wraps a vector of entries, rejecting empty input and non-finite values.
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyDimension);
        }
        for (i, &x) in entries.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite {
                    position: alloc::format!("{i}"),
                });
            }
        }
        Ok(RealVector { entries })
    }

    /// Copies a slice into a new vector. See [`RealVector::new`] for validation.
    pub fn from_slice(entries: &[f64]) -> Result<Self> {
        Self::new(entries.to_vec())
    }

    /// The all-zeros vector of dimension `n`.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![0.0; n])
    }

    /// The all-ones vector of dimension `n`.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1.0; n])
    }

    /// Dimension of the vector.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: empty vectors cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Borrow the entries as a slice.
    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    /// Iterate over entries by value.
    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().copied()
    }

    /// Componentwise positive part: `plus(v)_i = max(v_i, 0)`.
    ///
    /// Idempotent, and tied to the componentwise minimum by the identity
    /// `v − plus(v − w) = min(v, w)` (exact in real arithmetic; in floating
    /// point the subtraction `v − w` may round).
    pub fn plus(&self) -> RealVector {
        RealVector {
            entries: self.entries.iter().map(|&x| x.max(0.0)).collect(),
        }
    }

    /// Maximum norm `‖v‖∞ = max_i |v_i|`.
    pub fn norm_inf(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, &x| acc.max(x.abs()))
    }

    /// Componentwise minimum with another vector of the same dimension.
    pub fn min_with(&self, other: &RealVector) -> Result<RealVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(RealVector {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        })
    }

    /// Componentwise difference `self − other`.
    pub fn sub(&self, other: &RealVector) -> Result<RealVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        RealVector::new(
            self.entries
                .iter()
                .zip(other.entries.iter())
                .map(|(&a, &b)| a - b)
                .collect(),
        )
    }

    /// Componentwise sum `self + other`.
    pub fn add(&self, other: &RealVector) -> Result<RealVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        RealVector::new(
            self.entries
                .iter()
                .zip(other.entries.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    /// Componentwise negation.
    pub fn neg(&self) -> RealVector {
        RealVector {
            entries: self.entries.iter().map(|&x| -x).collect(),
        }
    }
}

impl core::ops::Index<usize> for RealVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.entries[i]
    }
}

impl fmt::Display for RealVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<f64>> for RealVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        RealVector::new(v)
    }
}

impl From<RealVector> for Vec<f64> {
    fn from(v: RealVector) -> Vec<f64> {
        v.entries
    }
}
