//! Finite lattices given by explicit operation tables.
//!
//! Text format: line 1 `n=<count>`, an optional line `names=<comma list>`,
//! then `meet:` followed by n rows of n space-separated 0-based indices,
//! then `join:` likewise. Tables are validated eagerly: a descriptor is only
//! issued once every lattice axiom has been checked over all node triples.

use crate::error::{Error, Result};
use crate::laws::Law;

/// Raw operation tables of a finite lattice. Shape-validated on
/// construction; law validation happens in [`crate::Lattice::from_table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLatticeTable {
    size: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    names: Option<Vec<String>>,
}

/// A concrete axiom violation found while scanning a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableLawViolation {
    pub law: Law,
    pub nodes: Vec<usize>,
}

impl TableLawViolation {
    pub fn describe(&self, table: &FiniteLatticeTable) -> String {
        let nodes: Vec<String> = self
            .nodes
            .iter()
            .map(|&i| table.display_name(i))
            .collect();
        format!("{} fails at ({})", self.law, nodes.join(", "))
    }
}

impl FiniteLatticeTable {
    /// Builds a table from row-major operation tables of size `n * n`.
    /// Checks shape and index ranges only.
    pub fn from_parts(
        size: usize,
        meet: Vec<usize>,
        join: Vec<usize>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::MalformedTable("lattice has no elements".into()));
        }
        if meet.len() != size * size || join.len() != size * size {
            return Err(Error::MalformedTable(format!(
                "expected {0}x{0} tables, got {1} meet and {2} join entries",
                size,
                meet.len(),
                join.len()
            )));
        }
        if let Some(bad) = meet.iter().chain(join.iter()).find(|&&v| v >= size) {
            return Err(Error::MalformedTable(format!(
                "table entry {bad} out of range for {size} elements"
            )));
        }
        if let Some(names) = &names {
            if names.len() != size {
                return Err(Error::MalformedTable(format!(
                    "{} names given for {} elements",
                    names.len(),
                    size
                )));
            }
            for (i, name) in names.iter().enumerate() {
                if name.is_empty() || names[..i].contains(name) {
                    return Err(Error::MalformedTable(format!(
                        "empty or duplicate element name '{name}'"
                    )));
                }
            }
        }
        Ok(FiniteLatticeTable {
            size,
            meet,
            join,
            names,
        })
    }

    /// Parses the text table format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedTable("empty input".into()))?;
        let size: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::MalformedTable(format!("expected 'n=<count>', got '{header}'")))?;

        let mut line = lines
            .next()
            .ok_or_else(|| Error::MalformedTable("missing 'meet:' section".into()))?;
        let names = if let Some(list) = line.strip_prefix("names=") {
            let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            line = lines
                .next()
                .ok_or_else(|| Error::MalformedTable("missing 'meet:' section".into()))?;
            Some(names)
        } else {
            None
        };

        if line != "meet:" {
            return Err(Error::MalformedTable(format!(
                "expected 'meet:', got '{line}'"
            )));
        }
        let meet = parse_rows(&mut lines, size, "meet")?;

        let line = lines
            .next()
            .ok_or_else(|| Error::MalformedTable("missing 'join:' section".into()))?;
        if line != "join:" {
            return Err(Error::MalformedTable(format!(
                "expected 'join:', got '{line}'"
            )));
        }
        let join = parse_rows(&mut lines, size, "join")?;

        if let Some(extra) = lines.next() {
            return Err(Error::MalformedTable(format!(
                "unexpected trailing content '{extra}'"
            )));
        }
        Self::from_parts(size, meet, join, names)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn meet_of(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.size + j]
    }

    pub fn join_of(&self, i: usize, j: usize) -> usize {
        self.join[i * self.size + j]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name_of(&self, i: usize) -> Option<&str> {
        self.names.as_ref().and_then(|n| n.get(i)).map(String::as_str)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names
            .as_ref()
            .and_then(|n| n.iter().position(|x| x == name))
    }

    fn display_name(&self, i: usize) -> String {
        self.name_of(i)
            .map(str::to_string)
            .unwrap_or_else(|| i.to_string())
    }

    /// Exhaustive scan for a lattice-axiom violation: commutativity,
    /// idempotence, associativity of both operations, and both absorption
    /// identities, over all nodes. Returns the first violation found.
    pub fn axiom_violation(&self) -> Option<TableLawViolation> {
        let n = self.size;
        for i in 0..n {
            if self.meet_of(i, i) != i {
                return Some(TableLawViolation {
                    law: Law::MeetIdempotence,
                    nodes: vec![i],
                });
            }
            if self.join_of(i, i) != i {
                return Some(TableLawViolation {
                    law: Law::JoinIdempotence,
                    nodes: vec![i],
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.meet_of(i, j) != self.meet_of(j, i) {
                    return Some(TableLawViolation {
                        law: Law::MeetCommutativity,
                        nodes: vec![i, j],
                    });
                }
                if self.join_of(i, j) != self.join_of(j, i) {
                    return Some(TableLawViolation {
                        law: Law::JoinCommutativity,
                        nodes: vec![i, j],
                    });
                }
                if self.join_of(i, self.meet_of(i, j)) != i {
                    return Some(TableLawViolation {
                        law: Law::AbsorptionJoinMeet,
                        nodes: vec![i, j],
                    });
                }
                if self.meet_of(i, self.join_of(i, j)) != i {
                    return Some(TableLawViolation {
                        law: Law::AbsorptionMeetJoin,
                        nodes: vec![i, j],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.meet_of(self.meet_of(i, j), k) != self.meet_of(i, self.meet_of(j, k)) {
                        return Some(TableLawViolation {
                            law: Law::MeetAssociativity,
                            nodes: vec![i, j, k],
                        });
                    }
                    if self.join_of(self.join_of(i, j), k) != self.join_of(i, self.join_of(j, k)) {
                        return Some(TableLawViolation {
                            law: Law::JoinAssociativity,
                            nodes: vec![i, j, k],
                        });
                    }
                }
            }
        }
        None
    }

    /// Exhaustive scan for a triple violating
    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet_of(x, self.join_of(y, z));
                    let rhs = self.join_of(self.meet_of(x, y), self.meet_of(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Builtin diamond M3: bottom 0, atoms a, b, c, top 4.
    pub fn m3() -> Self {
        let names = ["bot", "a", "b", "c", "top"];
        Self::from_order(5, &names, |i, j| match (i, j) {
            _ if i == j => true,
            (0, _) => true,
            (_, 4) => true,
            _ => false,
        })
    }

    /// Builtin pentagon N5: bottom 0, chain a < c, incomparable b, top 4.
    pub fn n5() -> Self {
        let names = ["bot", "a", "b", "c", "top"];
        Self::from_order(5, &names, |i, j| match (i, j) {
            _ if i == j => true,
            (0, _) => true,
            (_, 4) => true,
            (1, 3) => true, // a < c
            _ => false,
        })
    }

    /// Builds tables from an explicit partial order on a small domain by
    /// searching for least upper and greatest lower bounds. Panics if some
    /// pair has none; only used for builtins, which are genuine lattices.
    fn from_order(n: usize, names: &[&str], leq: impl Fn(usize, usize) -> bool) -> Self {
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let glb = (0..n)
                    .filter(|&w| leq(w, i) && leq(w, j))
                    .find(|&w| (0..n).all(|v| !(leq(v, i) && leq(v, j)) || leq(v, w)))
                    .expect("builtin order must have greatest lower bounds");
                let lub = (0..n)
                    .filter(|&w| leq(i, w) && leq(j, w))
                    .find(|&w| (0..n).all(|v| !(leq(i, v) && leq(j, v)) || leq(w, v)))
                    .expect("builtin order must have least upper bounds");
                meet[i * n + j] = glb;
                join[i * n + j] = lub;
            }
        }
        FiniteLatticeTable {
            size: n,
            meet,
            join,
            names: Some(names.iter().map(|s| s.to_string()).collect()),
        }
    }
}

fn parse_rows<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
    size: usize,
    section: &str,
) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(size * size);
    for row in 0..size {
        let line = lines.next().ok_or_else(|| {
            Error::MalformedTable(format!("{section} table ends after {row} of {size} rows"))
        })?;
        let mut count = 0usize;
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| {
                Error::MalformedTable(format!("bad {section} entry '{tok}' in row {row}"))
            })?;
            out.push(v);
            count += 1;
        }
        if count != size {
            return Err(Error::MalformedTable(format!(
                "{section} row {row} has {count} entries, expected {size}"
            )));
        }
    }
    Ok(out)
}
