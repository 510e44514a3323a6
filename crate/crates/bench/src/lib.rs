//! Shared sequence builders for the sorting benchmarks.

use latsort_core::{Element, Lattice, Sequence};

/// The ramp (1, 2, ..., n) in the divisibility lattice, the worst case for
/// the exponential evaluator.
pub fn divisibility_ramp(n: u64) -> Sequence {
    Sequence::new(
        Lattice::Divisibility,
        (1..=n).map(Element::Div).collect(),
    )
    .expect("ramp values are valid divisibility elements")
}

/// A fixed pseudo-random integer sequence of length `n`.
pub fn integer_sequence(n: u64) -> Sequence {
    let mut rng = latsort_core::rng::SplitMix64::new(0xBE5C);
    Sequence::new(
        Lattice::TotalOrderInt,
        (0..n)
            .map(|_| Element::Int(rng.next_below(101) as i64 - 50))
            .collect(),
    )
    .expect("integers are valid total-order elements")
}
