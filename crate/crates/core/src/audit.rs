//! Data-free audit counters.
//!
//! Training stages must never read original training images; only evaluation
//! reporting may. Datasets report every batch access here tagged with its
//! purpose, and the test suites assert the training counter stays at zero
//! across both compression stages. Counters are thread-local so concurrent
//! test runs do not observe each other.

use std::cell::Cell;

thread_local! {
    static TRAIN_ACCESSES: Cell<u64> = const { Cell::new(0) };
    static EVAL_ACCESSES: Cell<u64> = const { Cell::new(0) };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccessPurpose {
    /// Feeding model updates. Forbidden in data-free stages.
    Training,
    /// Accuracy reporting on held-out data. Always allowed.
    Eval,
}

pub fn record(purpose: AccessPurpose, samples: u64) {
    match purpose {
        AccessPurpose::Training => TRAIN_ACCESSES.with(|c| c.set(c.get() + samples)),
        AccessPurpose::Eval => EVAL_ACCESSES.with(|c| c.set(c.get() + samples)),
    }
}

/// Real samples served for training since the last reset.
pub fn training_accesses() -> u64 {
    TRAIN_ACCESSES.with(|c| c.get())
}

pub fn eval_accesses() -> u64 {
    EVAL_ACCESSES.with(|c| c.get())
}

pub fn reset() {
    TRAIN_ACCESSES.with(|c| c.set(0));
    EVAL_ACCESSES.with(|c| c.set(0));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counters_track_purpose() {
        reset();
        record(AccessPurpose::Training, 64);
        record(AccessPurpose::Eval, 100);
        assert_eq!(training_accesses(), 64);
        assert_eq!(eval_accesses(), 100);
        reset();
        assert_eq!(training_accesses(), 0);
    }
}
