//! Whitney numbers (level sizes) of a graded poset and the sequence
//! properties defined on them.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The level sizes `|P_0|, ..., |P_N|` of a graded poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WhitneyProfile {
    counts: Vec<u64>,
}

/// Levels `i` and `N - i` with different sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryWitness {
    pub low: usize,
    pub high: usize,
    pub levels: Vec<u64>,
}

/// Indices `left < valley < right` with `c[left] > c[valley] < c[right]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodalityWitness {
    pub triple: [usize; 3],
    pub levels: Vec<u64>,
}

/// Consecutive indices `(i - 1, i, i + 1)` with `c[i]^2 < c[i-1] c[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogConcavityWitness {
    pub triple: [usize; 3],
    pub levels: Vec<u64>,
}

impl WhitneyProfile {
    pub fn new(counts: Vec<u64>) -> Self {
        WhitneyProfile { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Sum of the `j` largest counts.
    pub fn top_sum(&self, j: usize) -> u64 {
        let mut sorted = self.counts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted.iter().take(j).sum()
    }

    pub fn symmetry_violation(&self) -> Option<SymmetryWitness> {
        let n = self.counts.len();
        (0..n / 2)
            .find(|&i| self.counts[i] != self.counts[n - 1 - i])
            .map(|i| SymmetryWitness { low: i, high: n - 1 - i, levels: self.counts.clone() })
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    /// A strict valley: some entry strictly smaller than an entry on each
    /// side. Unimodal sequences are exactly those without one.
    pub fn unimodality_violation(&self) -> Option<UnimodalityWitness> {
        let c = &self.counts;
        let n = c.len();
        // Index of the largest entry so far, from the left.
        let mut best = 0;
        let mut left_max = vec![0usize; n];
        for i in 0..n {
            if c[i] > c[best] {
                best = i;
            }
            left_max[i] = best;
        }
        let mut best = n.saturating_sub(1);
        for v in (0..n).rev() {
            if c[v] > c[best] {
                best = v;
            }
            let (l, r) = (left_max[v], best);
            if c[l] > c[v] && c[r] > c[v] {
                return Some(UnimodalityWitness { triple: [l, v, r], levels: c.clone() });
            }
        }
        None
    }

    pub fn is_unimodal(&self) -> bool {
        self.unimodality_violation().is_none()
    }

    pub fn log_concavity_violation(&self) -> Option<LogConcavityWitness> {
        let c = &self.counts;
        (1..c.len().saturating_sub(1))
            .find(|&i| (c[i] as u128) * (c[i] as u128) < (c[i - 1] as u128) * (c[i + 1] as u128))
            .map(|i| LogConcavityWitness { triple: [i - 1, i, i + 1], levels: c.clone() })
    }

    pub fn is_log_concave(&self) -> bool {
        self.log_concavity_violation().is_none()
    }

    /// Coefficient convolution, the profile of a direct product.
    pub fn convolve(&self, other: &WhitneyProfile) -> WhitneyProfile {
        if self.is_empty() || other.is_empty() {
            return WhitneyProfile::new(Vec::new());
        }
        let mut out = vec![0u64; self.len() + other.len() - 1];
        for (i, a) in self.counts.iter().enumerate() {
            for (j, b) in other.counts.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        WhitneyProfile::new(out)
    }
}

impl fmt::Display for WhitneyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl SymmetryWitness {
    pub fn holds_for(&self, counts: &[u64]) -> bool {
        counts == self.levels.as_slice()
            && self.low + self.high + 1 == counts.len()
            && counts[self.low] != counts[self.high]
    }
}

impl UnimodalityWitness {
    pub fn holds_for(&self, counts: &[u64]) -> bool {
        let [l, v, r] = self.triple;
        counts == self.levels.as_slice() && l < v && v < r && r < counts.len() && counts[l] > counts[v] && counts[r] > counts[v]
    }
}

impl LogConcavityWitness {
    pub fn holds_for(&self, counts: &[u64]) -> bool {
        let [a, i, b] = self.triple;
        counts == self.levels.as_slice()
            && i >= 1
            && a + 1 == i
            && b == i + 1
            && b < counts.len()
            && (counts[i] as u128).pow(2) < counts[a] as u128 * counts[b] as u128
    }
}
