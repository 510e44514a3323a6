//! Sorting finite sequences in a lattice.
//!
//! The k-th element of the sorted sequence is the meet, over all k-element
//! index subsets, of the join of the selected input elements. On a total
//! order this is exactly the classical nondecreasing rearrangement; on a
//! general lattice the output is still nondecreasing, idempotent under
//! re-sorting and invariant under input permutations, but its elements need
//! not occur in the input.
//!
//! Three evaluators are provided: direct enumeration of all subsets
//! ([`weak_sort_bruteforce`], exponential), a quadratic recurrence for
//! distributive lattices ([`weak_sort_distributive_dp`]), and an ordinary
//! comparison sort for total orders ([`classical_sort`]). [`sort_auto`]
//! dispatches between them.

use crate::combinatorics::{KSubsetCursor, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::lattice::{Element, Lattice};
use crate::rng::SplitMix64;

/// An ordered, finite, possibly repeating list of elements over one lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct Sequence {
    lattice: Lattice,
    items: Vec<Element>,
}

impl Sequence {
    /// Validates that every item belongs to the lattice's domain.
    pub fn new(lattice: Lattice, items: Vec<Element>) -> Result<Self> {
        for item in &items {
            if !lattice.contains(item) {
                return Err(Error::DomainMismatch {
                    lattice: lattice.kind_name(),
                    element: format!("{item:?}"),
                });
            }
        }
        Ok(Sequence { lattice, items })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn items(&self) -> &[Element] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Which evaluator produced a sort result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    BruteForce,
    DistributiveDp,
    Classical,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "brute-force",
            Algorithm::DistributiveDp => "distributive-dp",
            Algorithm::Classical => "classical",
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Sorted output plus diagnostics.
#[derive(Debug, Clone)]
pub struct SortReport {
    pub output: Sequence,
    pub algorithm: Algorithm,
    pub meet_count: u64,
    pub join_count: u64,
    /// Property-check results, filled in by verification flows.
    pub checks: Option<PropertyReport>,
}

/// Per-property outcome of [`check_sorting_properties`].
#[derive(Debug, Clone)]
pub struct PropertyReport {
    /// The sorted output the properties were verified against.
    pub output: Sequence,
    /// Adjacent output elements are ordered.
    pub nondecreasing: bool,
    /// Sorting the output returns it unchanged.
    pub idempotent: bool,
    /// Sorting any permutation of the input yields the identical output.
    pub permutation_invariant: bool,
    /// Every output element lies between the meet and join of the input.
    pub bounds_respected: bool,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.nondecreasing && self.idempotent && self.permutation_invariant && self.bounds_respected
    }
}

/// A bijection on sequence positions, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates that `mapping` is a bijection on `0..mapping.len()`.
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &i in &mapping {
            if i >= n || seen[i] {
                return Err(Error::NotBijection);
            }
            seen[i] = true;
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Uniform random permutation by Fisher-Yates.
    pub fn random(n: usize, rng: &mut SplitMix64) -> Self {
        let mut mapping: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.next_below(i as u64 + 1) as usize;
            mapping.swap(i, j);
        }
        Permutation(mapping)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

/// Returns the rearranged sequence with `output[i] = x[p[i]]`.
pub fn apply_permutation(x: &Sequence, p: &Permutation) -> Result<Sequence> {
    if p.len() != x.len() {
        return Err(Error::LengthMismatch {
            perm: p.len(),
            seq: x.len(),
        });
    }
    let items = p.indices().iter().map(|&i| x.items[i].clone()).collect();
    Ok(Sequence {
        lattice: x.lattice.clone(),
        items,
    })
}

/// Whether the two slices contain the same elements with the same
/// multiplicities.
pub fn multiset_eq(a: &[Element], b: &[Element]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (i, y) in b.iter().enumerate() {
            if !used[i] && x == y {
                used[i] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Meet/join tallies local to one sort call.
struct Ops<'a> {
    lattice: &'a Lattice,
    meets: u64,
    joins: u64,
}

impl<'a> Ops<'a> {
    fn new(lattice: &'a Lattice) -> Self {
        Ops {
            lattice,
            meets: 0,
            joins: 0,
        }
    }

    fn meet(&mut self, a: &Element, b: &Element) -> Result<Element> {
        self.meets += 1;
        self.lattice.meet(a, b)
    }

    fn join(&mut self, a: &Element, b: &Element) -> Result<Element> {
        self.joins += 1;
        self.lattice.join(a, b)
    }

    fn leq(&mut self, a: &Element, b: &Element) -> Result<bool> {
        self.meets += 1;
        self.lattice.leq(a, b)
    }

    fn report(self, output: Sequence, algorithm: Algorithm) -> SortReport {
        SortReport {
            output,
            algorithm,
            meet_count: self.meets,
            join_count: self.joins,
            checks: None,
        }
    }
}

// Comparison on elements of an already-validated sequence. Meet is total on
// every domain (only join can overflow), so failure here would mean the
// sequence invariant was broken.
fn leq_validated(lattice: &Lattice, a: &Element, b: &Element) -> bool {
    lattice
        .leq(a, b)
        .expect("sequence items were validated against the lattice")
}

/// Direct evaluation: for each k, the meet over all k-subsets of the join of
/// the selected elements. Exponential in `n`; refused above `cap`.
pub fn weak_sort_bruteforce_with_cap(x: &Sequence, cap: usize) -> Result<SortReport> {
    let n = x.len();
    if n == 0 {
        return Err(Error::EmptyInput {
            op: "weak_sort_bruteforce",
        });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut ops = Ops::new(&x.lattice);
    let mut output = Vec::with_capacity(n);
    for k in 1..=n {
        let mut cursor = KSubsetCursor::new(n, k)?;
        let mut acc: Option<Element> = None;
        while let Some(subset) = cursor.advance() {
            let mut joined = x.items[subset[0] - 1].clone();
            for &i in &subset[1..] {
                joined = ops.join(&joined, &x.items[i - 1])?;
            }
            acc = Some(match acc {
                None => joined,
                Some(m) => ops.meet(&m, &joined)?,
            });
        }
        output.push(acc.expect("k_subsets yields at least one subset"));
    }
    let output = Sequence {
        lattice: x.lattice.clone(),
        items: output,
    };
    Ok(ops.report(output, Algorithm::BruteForce))
}

/// [`weak_sort_bruteforce_with_cap`] under the default enumeration cap.
pub fn weak_sort_bruteforce(x: &Sequence) -> Result<SortReport> {
    weak_sort_bruteforce_with_cap(x, DEFAULT_ENUMERATION_CAP)
}

/// Quadratic fast path for distributive lattices.
///
/// Maintains `e[k]` = meet over all k-subsets of the items seen so far of
/// their join, in the style of the elementary-symmetric-function recurrence
/// read with meet as the sum and join as the product. Appending item `x`
/// splits the k-subsets into those avoiding `x` (the old `e[k]`) and those
/// containing it; collapsing the latter to `e[k-1] ∨ x` is only valid when
/// join distributes over meet, so the entry point is gated on the
/// descriptor's distributivity flag.
pub fn weak_sort_distributive_dp(x: &Sequence) -> Result<SortReport> {
    if !x.lattice.is_distributive() {
        return Err(Error::NotDistributive);
    }
    weak_sort_dp_unchecked(x)
}

/// The DP recurrence without the distributivity gate. On non-distributive
/// lattices the result generally differs from [`weak_sort_bruteforce`]; this
/// entry point exists so tests can demonstrate exactly that.
pub fn weak_sort_dp_unchecked(x: &Sequence) -> Result<SortReport> {
    let n = x.len();
    if n == 0 {
        return Err(Error::EmptyInput {
            op: "weak_sort_distributive_dp",
        });
    }
    let mut ops = Ops::new(&x.lattice);
    // e[k - 1] holds the k-th output over the prefix processed so far
    let mut e: Vec<Element> = Vec::with_capacity(n);
    e.push(x.items[0].clone());
    for j in 2..=n {
        let item = &x.items[j - 1];
        let all_joined = ops.join(&e[j - 2], item)?;
        e.push(all_joined);
        for k in (2..j).rev() {
            let joined = ops.join(&e[k - 2], item)?;
            e[k - 1] = ops.meet(&e[k - 1], &joined)?;
        }
        e[0] = ops.meet(&e[0], item)?;
    }
    let output = Sequence {
        lattice: x.lattice.clone(),
        items: e,
    };
    Ok(ops.report(output, Algorithm::DistributiveDp))
}

/// Ordinary comparison sort. Requires the sequence's elements to be pairwise
/// comparable under the lattice order; on such inputs the result equals
/// [`weak_sort_bruteforce`] and is a rearrangement of the input multiset.
pub fn classical_sort(x: &Sequence) -> Result<SortReport> {
    let mut ops = Ops::new(&x.lattice);
    let n = x.len();
    if !x.lattice.is_total_order() {
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&x.items[i], &x.items[j]);
                if !ops.leq(a, b)? && !ops.leq(b, a)? {
                    return Err(Error::NotTotalOrder {
                        a: format!("{a:?}"),
                        b: format!("{b:?}"),
                    });
                }
            }
        }
    }
    let mut items = x.items.clone();
    items.sort_by(|a, b| {
        if a == b {
            return std::cmp::Ordering::Equal;
        }
        ops.meets += 1;
        if leq_validated(&x.lattice, a, b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let output = Sequence {
        lattice: x.lattice.clone(),
        items,
    };
    Ok(ops.report(output, Algorithm::Classical))
}

fn dispatch(lattice: &Lattice) -> Algorithm {
    if lattice.is_total_order() {
        Algorithm::Classical
    } else if lattice.is_distributive() {
        Algorithm::DistributiveDp
    } else {
        Algorithm::BruteForce
    }
}

/// Dispatches on the descriptor: total orders use the comparison sort,
/// distributive lattices the quadratic recurrence, everything else direct
/// enumeration (cap permitting). The empty sequence sorts to itself.
pub fn sort_auto_with_cap(x: &Sequence, cap: usize) -> Result<SortReport> {
    let algorithm = dispatch(&x.lattice);
    if x.is_empty() {
        return Ok(SortReport {
            output: x.clone(),
            algorithm,
            meet_count: 0,
            join_count: 0,
            checks: None,
        });
    }
    match algorithm {
        Algorithm::Classical => classical_sort(x),
        Algorithm::DistributiveDp => weak_sort_distributive_dp(x),
        Algorithm::BruteForce => weak_sort_bruteforce_with_cap(x, cap),
    }
}

/// [`sort_auto_with_cap`] under the default enumeration cap.
pub fn sort_auto(x: &Sequence) -> Result<SortReport> {
    sort_auto_with_cap(x, DEFAULT_ENUMERATION_CAP)
}

/// True iff `leq(x_i, x_{i+1})` for all consecutive pairs; vacuously true
/// for sequences of length at most one.
pub fn is_nondecreasing(x: &Sequence) -> bool {
    x.items
        .windows(2)
        .all(|w| leq_validated(&x.lattice, &w[0], &w[1]))
}

/// Verifies the sorting properties on `x`: the output is nondecreasing,
/// re-sorting it changes nothing, `trials` random permutations of the input
/// all sort to the identical output, and every output element lies between
/// the meet and the join of the input.
pub fn check_sorting_properties(x: &Sequence, trials: u32, seed: u64) -> Result<PropertyReport> {
    check_properties_inner(x, trials, seed, None)
}

/// Like [`check_sorting_properties`], additionally verifying the output
/// against caller-supplied bounds. The bounds must themselves bound every
/// input element.
pub fn check_sorting_properties_with_bounds(
    x: &Sequence,
    trials: u32,
    seed: u64,
    lower: &Element,
    upper: &Element,
) -> Result<PropertyReport> {
    check_properties_inner(x, trials, seed, Some((lower, upper)))
}

fn check_properties_inner(
    x: &Sequence,
    trials: u32,
    seed: u64,
    bounds: Option<(&Element, &Element)>,
) -> Result<PropertyReport> {
    let base = sort_auto(x)?;
    let nondecreasing = is_nondecreasing(&base.output);
    let idempotent = sort_auto(&base.output)?.output.items == base.output.items;

    let mut rng = SplitMix64::new(seed);
    let mut permutation_invariant = true;
    for _ in 0..trials {
        let p = Permutation::random(x.len(), &mut rng);
        let shuffled = apply_permutation(x, &p)?;
        if sort_auto(&shuffled)?.output.items != base.output.items {
            permutation_invariant = false;
            break;
        }
    }

    let bounds_respected = if x.is_empty() {
        true
    } else {
        let lo = x.lattice.meet_all(&x.items)?;
        let hi = x.lattice.join_all(&x.items)?;
        let mut ok = within_bounds(&x.lattice, &base.output.items, &lo, &hi);
        if let Some((lower, upper)) = bounds {
            let premise = x
                .items
                .iter()
                .all(|e| leq_validated(&x.lattice, lower, e) && leq_validated(&x.lattice, e, upper));
            if !premise {
                return Err(Error::BoundsDoNotBound);
            }
            ok = ok && within_bounds(&x.lattice, &base.output.items, lower, upper);
        }
        ok
    };

    Ok(PropertyReport {
        output: base.output,
        nondecreasing,
        idempotent,
        permutation_invariant,
        bounds_respected,
    })
}

fn within_bounds(lattice: &Lattice, items: &[Element], lo: &Element, hi: &Element) -> bool {
    items
        .iter()
        .all(|e| leq_validated(lattice, lo, e) && leq_validated(lattice, e, hi))
}
