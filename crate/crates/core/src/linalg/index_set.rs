//! Sorted index sets used to select principal submatrices.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A nonempty, strictly increasing set of row/column indices of an `n × n`
/// matrix.
///
/// Indices are stored and accepted 0-based (matching Rust indexing); the
/// [`Display`](fmt::Display) form and serialized form are 1-based, matching
/// the usual mathematical convention for principal submatrices, e.g. the set
/// selecting the first and third rows prints as `{1,3}`.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::IndexSet;
///
/// let s = IndexSet::new(3, vec![0, 2]).unwrap();
/// assert_eq!(s.to_string(), "{1,3}");
/// assert_eq!(s.indices(), &[0, 2]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    /// Ambient dimension `n`.
    n: usize,
    /// Strictly increasing 0-based indices, nonempty.
    indices: Vec<usize>,
}

impl IndexSet {
    /// Builds an index set over `{0, …, n−1}`.
    ///
    /// Rejects empty sets, indices `≥ n`, and indices that are not strictly
    /// increasing (which also rules out duplicates).
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        if indices.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        let mut prev: Option<usize> = None;
        for &i in &indices {
            if i >= n || prev.is_some_and(|p| p >= i) {
                return Err(Error::InvalidIndexSet { index: i, n });
            }
            prev = Some(i);
        }
        Ok(IndexSet { n, indices })
    }

    /// Builds the set of all bit positions set in `mask` (bit `i` ⇒ index `i`).
    ///
    /// Bitmasks enumerate subsets in a canonical order: masks `1, 2, 3, …`
    /// correspond to `{1}, {2}, {1,2}, …` in 1-based display form.
    pub fn from_bitmask(n: usize, mask: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        if n < 64 && mask >= (1u64 << n) {
            return Err(Error::InvalidIndexSet {
                index: (63 - mask.leading_zeros()) as usize,
                n,
            });
        }
        let indices: Vec<usize> = (0..n).filter(|&i| mask & (1u64 << i) != 0).collect();
        Self::new(n, indices)
    }

    /// The full set `{0, …, n−1}`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, (0..n).collect())
    }

    /// Ambient dimension `n`.
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Number of selected indices (always ≥ 1).
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    /// Always false: empty sets cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The selected indices, 0-based and strictly increasing.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Whether `i` (0-based) is in the set.
    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// The bitmask with bit `i` set for each selected index `i`.
    pub fn to_bitmask(&self) -> u64 {
        self.indices.iter().fold(0u64, |m, &i| m | (1u64 << i))
    }
}

impl fmt::Display for IndexSet {
    /// 1-based display: `{1,3}` selects the first and third indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, &i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for IndexSet {
    /// Serializes as a 1-based index array, matching the display form.
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.indices.len()))?;
        for &i in &self.indices {
            seq.serialize_element(&(i + 1))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    #[test]
    fn validates_bounds_and_order() {
        assert!(IndexSet::new(3, vec![0, 2]).is_ok());
        assert_eq!(
            IndexSet::new(3, vec![]).unwrap_err(),
            Error::EmptyIndexSet
        );
        assert!(matches!(
            IndexSet::new(3, vec![3]).unwrap_err(),
            Error::InvalidIndexSet { index: 3, n: 3 }
        ));
        assert!(matches!(
            IndexSet::new(3, vec![1, 1]).unwrap_err(),
            Error::InvalidIndexSet { .. }
        ));
        assert!(matches!(
            IndexSet::new(3, vec![2, 0]).unwrap_err(),
            Error::InvalidIndexSet { .. }
        ));
    }

    #[test]
    fn display_is_one_based() {
        let s = IndexSet::new(4, vec![0, 2, 3]).unwrap();
        assert_eq!(format!("{s}"), "{1,3,4}");
    }

    #[test]
    fn bitmask_round_trip() {
        for mask in 1u64..16 {
            let s = IndexSet::from_bitmask(4, mask).unwrap();
            assert_eq!(s.to_bitmask(), mask);
        }
        assert!(matches!(
            IndexSet::from_bitmask(2, 4).unwrap_err(),
            Error::InvalidIndexSet { .. }
        ));
        assert_eq!(
            IndexSet::from_bitmask(2, 0).unwrap_err(),
            Error::EmptyIndexSet
        );
    }

    #[test]
    fn contains_uses_zero_based_indices() {
        let s = IndexSet::new(3, vec![0, 2]).unwrap();
        assert!(s.contains(0));
        assert!(!s.contains(1));
        assert!(s.contains(2));
    }

    #[test]
    fn full_set_covers_everything() {
        let s = IndexSet::full(3).unwrap();
        assert_eq!(s.indices(), &[0, 1, 2]);
        assert_eq!(s.to_bitmask(), 0b111);
    }
}
