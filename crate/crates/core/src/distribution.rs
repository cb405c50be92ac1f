//! Symbol-frequency taxonomy: balanced, perfectly balanced, uniformly distributed.

use serde::{Deserialize, Serialize};

use crate::sequence::FhsSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceBalance {
    pub counts: Vec<u32>,
    /// Counts differ by at most one across the alphabet.
    pub balanced: bool,
    /// All counts equal.
    pub perfectly_balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionVerdict {
    pub sequences: Vec<SequenceBalance>,
    pub set_counts: Vec<u64>,
    /// Aggregate counts over the set are all equal.
    pub uniformly_distributed: bool,
}

impl DistributionVerdict {
    pub fn all_balanced(&self) -> bool {
        self.sequences.iter().all(|s| s.balanced)
    }

    pub fn all_perfectly_balanced(&self) -> bool {
        self.sequences.iter().all(|s| s.perfectly_balanced)
    }

    /// Sequence-level class: `PB`, `balanced` or `unbalanced`.
    pub fn sequence_class(&self) -> &'static str {
        if self.all_perfectly_balanced() {
            "PB"
        } else if self.all_balanced() {
            "balanced"
        } else {
            "unbalanced"
        }
    }

    /// Set-level class: `PB`, `UD` or `not UD`.
    pub fn set_class(&self) -> &'static str {
        if self.all_perfectly_balanced() {
            "PB"
        } else if self.uniformly_distributed {
            "UD"
        } else {
            "not UD"
        }
    }
}

fn spread<T: Ord + Copy>(counts: &[T]) -> (T, T) {
    let min = *counts.iter().min().expect("alphabet is nonempty");
    let max = *counts.iter().max().expect("alphabet is nonempty");
    (min, max)
}

pub fn distribution(set: &FhsSet) -> DistributionVerdict {
    let sequences = set
        .sequences()
        .iter()
        .map(|x| {
            let counts = x.counts();
            let (min, max) = spread(&counts);
            SequenceBalance {
                counts,
                balanced: max - min <= 1,
                perfectly_balanced: max == min,
            }
        })
        .collect();
    let set_counts = set.counts();
    let (min, max) = spread(&set_counts);
    DistributionVerdict {
        sequences,
        set_counts,
        uniformly_distributed: min == max,
    }
}
