use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Per-type pool sizes at an instant: index 0 is the easy type `A_0`,
/// indices `1..=p` are the hard types.
///
/// Sizes are real-valued so the same probability formulas serve both the
/// integer-valued simulation pool and the mean-field state. When used as
/// the candidate pool for a match attempt, the mover itself must not be
/// counted (a critical agent is excluded before evaluating its own
/// probabilities).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoolState {
    sizes: Vec<f64>,
}

impl PoolState {
    /// Validates nonnegative, finite entries and at least one hard type.
    pub fn new(sizes: Vec<f64>) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::PoolTooShort { len: sizes.len() });
        }
        for (index, &value) in sizes.iter().enumerate() {
            if !(value >= 0.0) || !value.is_finite() {
                return Err(Error::NegativePoolSize { index, value });
            }
        }
        Ok(Self { sizes })
    }

    pub fn zeros(p: usize) -> Self {
        Self { sizes: vec![0.0; p + 1] }
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| c as f64).collect())
    }

    /// Symmetric state `(s0, s1, s1, ..., s1)` with `p` hard coordinates.
    pub fn symmetric(p: usize, s0: f64, s1: f64) -> Result<Self> {
        let mut sizes = vec![s1; p + 1];
        sizes[0] = s0;
        Self::new(sizes)
    }

    pub fn sizes(&self) -> &[f64] {
        &self.sizes
    }

    pub fn size(&self, k: usize) -> f64 {
        self.sizes[k]
    }

    /// Number of hard types `p`.
    pub fn hard_types(&self) -> usize {
        self.sizes.len() - 1
    }

    /// Total pool size `|S| = sum_k |S(A_k)|`.
    pub fn total(&self) -> f64 {
        self.sizes.iter().sum()
    }

    /// Sum of the hard-type sizes.
    pub fn hard_total(&self) -> f64 {
        self.sizes[1..].iter().sum()
    }

    /// True when all hard coordinates are bitwise equal; the probability
    /// algebra then takes the O(p) exchangeable path.
    pub fn hard_sizes_equal(&self) -> bool {
        self.sizes[1..].windows(2).all(|w| w[0] == w[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_add_up() {
        let s = PoolState::new(vec![3.0, 2.0, 4.0]).unwrap();
        assert_eq!(s.total(), 9.0);
        assert_eq!(s.hard_total(), 6.0);
        assert_eq!(s.hard_types(), 2);
    }

    #[test]
    fn rejects_bad_states() {
        assert!(PoolState::new(vec![1.0]).is_err());
        assert!(PoolState::new(vec![1.0, -0.5]).is_err());
        assert!(PoolState::new(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn symmetric_detection_is_bitwise() {
        assert!(PoolState::new(vec![5.0, 1.5, 1.5, 1.5]).unwrap().hard_sizes_equal());
        assert!(!PoolState::new(vec![5.0, 1.5, 1.5000001, 1.5]).unwrap().hard_sizes_equal());
    }
}
