//! Lattice descriptors and elements.
//!
//! A [`Lattice`] bundles a value domain with its meet and join operations;
//! an [`Element`] is an opaque value interpreted by the descriptor it was
//! built for. Both are immutable after construction and safe to share.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::table::FiniteLatticeTable;

/// A powerset universe: up to 64 named members, elements stored as bit masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersetUniverse {
    names: Vec<String>,
}

/// Characters that would collide with the element and spec grammars.
const FORBIDDEN_NAME_CHARS: &[char] = &['{', '}', '(', ')', '|', ',', '+', ':'];

impl PowersetUniverse {
    pub const MAX_MEMBERS: usize = 64;

    /// Builds a universe from member names. Names must be nonempty, unique,
    /// free of whitespace and grammar delimiters, and at most 64 in number.
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.len() > Self::MAX_MEMBERS {
            return Err(Error::UniverseTooLarge { n: names.len() });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name.chars().any(char::is_whitespace)
                || name.contains(FORBIDDEN_NAME_CHARS)
            {
                return Err(Error::ParseSpec {
                    text: name.clone(),
                    reason: "invalid universe member name".into(),
                });
            }
            if names[..i].contains(name) {
                return Err(Error::ParseSpec {
                    text: name.clone(),
                    reason: "duplicate universe member name".into(),
                });
            }
        }
        Ok(PowersetUniverse { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Mask with one bit set per universe member.
    pub fn full_mask(&self) -> u64 {
        if self.names.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.names.len()) - 1
        }
    }

    /// Whether a bit mask only uses bits of this universe.
    pub fn admits(&self, bits: u64) -> bool {
        bits & !self.full_mask() == 0
    }
}

/// An opaque lattice value. The payload is interpreted by the descriptor the
/// element was built for; combining elements across descriptors is an error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    /// Signed integer under the usual total order.
    Int(i64),
    /// Positive integer under divisibility.
    Div(u64),
    /// Subset of a powerset universe, as a bit mask.
    Set(u64),
    /// Componentwise pair of a product lattice.
    Pair(Box<Element>, Box<Element>),
    /// Node index of a finite lattice given by tables.
    Node(usize),
}

/// A value domain equipped with meet and join.
///
/// `TotalOrderInt` is min/max on `i64`, `Divisibility` is gcd/lcm on positive
/// `u64`, `Powerset` is intersection/union of bit masks, `Product` combines
/// two lattices componentwise, and `FiniteTable` looks both operations up in
/// explicit tables. The `distributive` flag on `FiniteTable` is a claim set
/// by the validated constructors; the distributive fast path trusts it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lattice {
    TotalOrderInt,
    Divisibility,
    Powerset(PowersetUniverse),
    Product(Box<Lattice>, Box<Lattice>),
    FiniteTable {
        table: Arc<FiniteLatticeTable>,
        distributive: bool,
    },
}

impl Lattice {
    /// Builds a finite-table lattice, validating every lattice axiom over
    /// all nodes and determining the distributive flag exhaustively.
    pub fn from_table(table: FiniteLatticeTable) -> Result<Self> {
        if let Some(violation) = table.axiom_violation() {
            return Err(Error::AxiomViolation(violation.describe(&table)));
        }
        let distributive = table.distributivity_witness().is_none();
        Ok(Lattice::FiniteTable {
            table: Arc::new(table),
            distributive,
        })
    }

    /// The five-element diamond: bottom, three pairwise-incomparable atoms,
    /// top. The smallest modular non-distributive lattice.
    pub fn m3() -> Self {
        Lattice::from_table(FiniteLatticeTable::m3()).expect("builtin M3 table is a valid lattice")
    }

    /// The five-element pentagon: bottom, a chain a < c, an element b
    /// incomparable to both, top. The smallest non-modular lattice.
    pub fn n5() -> Self {
        Lattice::from_table(FiniteLatticeTable::n5()).expect("builtin N5 table is a valid lattice")
    }

    /// Kind tag, matching the lattice spec grammar.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Lattice::TotalOrderInt => "total-order-int",
            Lattice::Divisibility => "divisibility",
            Lattice::Powerset(_) => "powerset",
            Lattice::Product(_, _) => "product",
            Lattice::FiniteTable { .. } => "finite-table",
        }
    }

    /// Whether `e` belongs to this lattice's domain.
    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (Lattice::TotalOrderInt, Element::Int(_)) => true,
            (Lattice::Divisibility, Element::Div(v)) => *v >= 1,
            (Lattice::Powerset(u), Element::Set(bits)) => u.admits(*bits),
            (Lattice::Product(l, r), Element::Pair(a, b)) => l.contains(a) && r.contains(b),
            (Lattice::FiniteTable { table, .. }, Element::Node(i)) => *i < table.len(),
            _ => false,
        }
    }

    /// Whether the meet/join pair distributes over one another.
    pub fn is_distributive(&self) -> bool {
        match self {
            Lattice::TotalOrderInt | Lattice::Divisibility | Lattice::Powerset(_) => true,
            Lattice::Product(l, r) => l.is_distributive() && r.is_distributive(),
            Lattice::FiniteTable { distributive, .. } => *distributive,
        }
    }

    /// Whether every pair of domain elements is comparable.
    pub fn is_total_order(&self) -> bool {
        matches!(self, Lattice::TotalOrderInt)
    }

    /// Infimum of `a` and `b`.
    pub fn meet(&self, a: &Element, b: &Element) -> Result<Element> {
        match (self, a, b) {
            (Lattice::TotalOrderInt, Element::Int(x), Element::Int(y)) => {
                Ok(Element::Int(*x.min(y)))
            }
            (Lattice::Divisibility, Element::Div(x), Element::Div(y)) if *x >= 1 && *y >= 1 => {
                Ok(Element::Div(gcd(*x, *y)))
            }
            (Lattice::Powerset(u), Element::Set(x), Element::Set(y))
                if u.admits(*x) && u.admits(*y) =>
            {
                Ok(Element::Set(x & y))
            }
            (Lattice::Product(l, r), Element::Pair(ax, ay), Element::Pair(bx, by)) => {
                Ok(Element::Pair(
                    Box::new(l.meet(ax, bx)?),
                    Box::new(r.meet(ay, by)?),
                ))
            }
            (Lattice::FiniteTable { table, .. }, Element::Node(i), Element::Node(j))
                if *i < table.len() && *j < table.len() =>
            {
                Ok(Element::Node(table.meet_of(*i, *j)))
            }
            _ => Err(self.domain_mismatch(a, b)),
        }
    }

    /// Supremum of `a` and `b`. On the divisibility lattice this is
    /// `lcm(a, b) = a / gcd(a, b) * b` with checked multiplication.
    pub fn join(&self, a: &Element, b: &Element) -> Result<Element> {
        match (self, a, b) {
            (Lattice::TotalOrderInt, Element::Int(x), Element::Int(y)) => {
                Ok(Element::Int(*x.max(y)))
            }
            (Lattice::Divisibility, Element::Div(x), Element::Div(y)) if *x >= 1 && *y >= 1 => {
                Ok(Element::Div(checked_lcm(*x, *y)?))
            }
            (Lattice::Powerset(u), Element::Set(x), Element::Set(y))
                if u.admits(*x) && u.admits(*y) =>
            {
                Ok(Element::Set(x | y))
            }
            (Lattice::Product(l, r), Element::Pair(ax, ay), Element::Pair(bx, by)) => {
                Ok(Element::Pair(
                    Box::new(l.join(ax, bx)?),
                    Box::new(r.join(ay, by)?),
                ))
            }
            (Lattice::FiniteTable { table, .. }, Element::Node(i), Element::Node(j))
                if *i < table.len() && *j < table.len() =>
            {
                Ok(Element::Node(table.join_of(*i, *j)))
            }
            _ => Err(self.domain_mismatch(a, b)),
        }
    }

    /// The order derived from the operations: `a <= b` iff `meet(a, b) = a`.
    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.meet(a, b)? == *a)
    }

    /// Left fold of `meet` over a nonempty slice. The result does not depend
    /// on the item order.
    pub fn meet_all(&self, items: &[Element]) -> Result<Element> {
        self.fold_all(items, "meet_all", Self::meet)
    }

    /// Left fold of `join` over a nonempty slice.
    pub fn join_all(&self, items: &[Element]) -> Result<Element> {
        self.fold_all(items, "join_all", Self::join)
    }

    fn fold_all(
        &self,
        items: &[Element],
        op: &'static str,
        f: fn(&Self, &Element, &Element) -> Result<Element>,
    ) -> Result<Element> {
        let (first, rest) = items.split_first().ok_or(Error::EmptyInput { op })?;
        if !self.contains(first) {
            return Err(self.domain_mismatch(first, first));
        }
        let mut acc = first.clone();
        for item in rest {
            acc = f(self, &acc, item)?;
        }
        Ok(acc)
    }

    fn domain_mismatch(&self, a: &Element, b: &Element) -> Error {
        let offender = if self.contains(a) { b } else { a };
        Error::DomainMismatch {
            lattice: self.kind_name(),
            element: format!("{offender:?}"),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn checked_lcm(a: u64, b: u64) -> Result<u64> {
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(Error::Overflow { op: "lcm", a, b })
}
