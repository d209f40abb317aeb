//! Shared inputs for the benchmarks.

use degbox_core::{validate_and_clamp, IntervalSequencePair};

/// The six-vertex pair that satisfies the Berge bound but is not realizable.
pub fn counterexample() -> IntervalSequencePair {
    validate_and_clamp(&[5, 4, 3, 3, 3, 1], &[5, 5, 3, 3, 3, 1]).expect("valid bounds")
}

/// A realizable seven-vertex box with slack on every vertex.
pub fn loose_box() -> IntervalSequencePair {
    validate_and_clamp(&[4, 3, 3, 2, 2, 1, 0], &[6, 5, 4, 4, 3, 3, 2]).expect("valid bounds")
}
