//! Sorting finite sequences in lattices.
//!
//! The k-th element of the sorted counterpart of a sequence is the meet,
//! over every k-element index subset, of the join of the selected elements.
//! On a total order this closed form reproduces the ordinary nondecreasing
//! rearrangement; on a general lattice it yields a sequence that is still
//! nondecreasing, idempotent under re-sorting, invariant under input
//! permutations and bounded by the meet and join of the input, but whose
//! elements may be new.
//!
//! The crate provides:
//!
//! - [`Lattice`] descriptors for integers under min/max, positive integers
//!   under gcd/lcm, fixed-universe powersets, binary products, and finite
//!   lattices given by operation tables (including the builtin diamond `m3`
//!   and pentagon `n5`);
//! - the exact exponential evaluator [`weak_sort_bruteforce`], the
//!   quadratic fast path [`weak_sort_distributive_dp`] for distributive
//!   lattices, [`classical_sort`] for totally ordered inputs, and the
//!   dispatching [`sort_auto`];
//! - executable law checks ([`check_axioms`], [`check_distributive`]) and
//!   sorting property checks ([`check_sorting_properties`]).
//!
//! ```
//! use latsort_core::{instances, sort_auto, Sequence};
//!
//! let lattice = instances::parse_lattice("div")?;
//! let items = instances::parse_sequence(&lattice, "1,2,3")?;
//! let report = sort_auto(&Sequence::new(lattice.clone(), items)?)?;
//! assert_eq!(instances::format_sequence(&lattice, report.output.items())?, "1,1,6");
//! # Ok::<(), latsort_core::Error>(())
//! ```

pub mod combinatorics;
pub mod error;
pub mod instances;
pub mod lattice;
pub mod laws;
pub mod rng;
pub mod sort;
pub mod table;

pub use combinatorics::{
    binomial, k_subsets, k_subsets_with_cap, KSubsetCursor, DEFAULT_ENUMERATION_CAP,
};
pub use error::{Error, Result};
pub use instances::{build_descriptor, InstanceSpec};
pub use lattice::{Element, Lattice, PowersetUniverse};
pub use laws::{check_axioms, check_distributive, Law, LawReport, LawViolation};
pub use sort::{
    apply_permutation, check_sorting_properties, check_sorting_properties_with_bounds,
    classical_sort, is_nondecreasing, multiset_eq, sort_auto, sort_auto_with_cap,
    weak_sort_bruteforce, weak_sort_bruteforce_with_cap, weak_sort_distributive_dp,
    weak_sort_dp_unchecked, Algorithm, Permutation, PropertyReport, Sequence, SortReport,
};
pub use table::FiniteLatticeTable;
