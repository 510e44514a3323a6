//! Executable checks of the lattice laws over element samples.
//!
//! Samples of at most 32 elements are checked exhaustively (all pairs and
//! triples); larger samples are subsampled deterministically with a fixed
//! seed so the checks stay bounded and reproducible.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Element, Lattice};
use crate::rng::SplitMix64;

/// Sample size up to which pair/triple checks are exhaustive.
const EXHAUSTIVE_LIMIT: usize = 32;
/// Number of subsampled pairs and triples above the exhaustive limit.
const SAMPLED_PAIRS: usize = 4096;
const SAMPLED_TRIPLES: usize = 8192;
/// Seed for the subsampling generator.
const SAMPLE_SEED: u64 = 0;

/// An identity the checks can falsify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    MeetCommutativity,
    JoinCommutativity,
    MeetAssociativity,
    JoinAssociativity,
    MeetIdempotence,
    JoinIdempotence,
    /// `x ∨ (x ∧ y) = x`
    AbsorptionJoinMeet,
    /// `x ∧ (x ∨ y) = x`
    AbsorptionMeetJoin,
    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`
    Distributivity,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::MeetCommutativity => "meet commutativity",
            Law::JoinCommutativity => "join commutativity",
            Law::MeetAssociativity => "meet associativity",
            Law::JoinAssociativity => "join associativity",
            Law::MeetIdempotence => "meet idempotence",
            Law::JoinIdempotence => "join idempotence",
            Law::AbsorptionJoinMeet => "absorption x ∨ (x ∧ y) = x",
            Law::AbsorptionMeetJoin => "absorption x ∧ (x ∨ y) = x",
            Law::Distributivity => "distributivity x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)",
        };
        f.write_str(s)
    }
}

/// The first counterexample found by a law check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: Law,
    pub witnesses: Vec<Element>,
}

/// Outcome of a law check over a sample.
#[derive(Debug, Clone)]
pub struct LawReport {
    /// Number of law instances evaluated.
    pub cases_checked: u64,
    /// First counterexample, if any.
    pub violation: Option<LawViolation>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks commutativity, associativity and idempotence of both operations
/// plus both absorption identities over the sample. Stops at the first
/// counterexample.
pub fn check_axioms(lattice: &Lattice, sample: &[Element]) -> Result<LawReport> {
    if sample.is_empty() {
        return Err(Error::EmptyInput { op: "check_axioms" });
    }
    let mut cases = 0u64;

    for a in sample {
        cases += 2;
        if lattice.meet(a, a)? != *a {
            return violation(cases, Law::MeetIdempotence, vec![a.clone()]);
        }
        if lattice.join(a, a)? != *a {
            return violation(cases, Law::JoinIdempotence, vec![a.clone()]);
        }
    }

    for (a, b) in pairs(sample) {
        cases += 4;
        if lattice.meet(a, b)? != lattice.meet(b, a)? {
            return violation(cases, Law::MeetCommutativity, vec![a.clone(), b.clone()]);
        }
        if lattice.join(a, b)? != lattice.join(b, a)? {
            return violation(cases, Law::JoinCommutativity, vec![a.clone(), b.clone()]);
        }
        if lattice.join(a, &lattice.meet(a, b)?)? != *a {
            return violation(cases, Law::AbsorptionJoinMeet, vec![a.clone(), b.clone()]);
        }
        if lattice.meet(a, &lattice.join(a, b)?)? != *a {
            return violation(cases, Law::AbsorptionMeetJoin, vec![a.clone(), b.clone()]);
        }
    }

    for (a, b, c) in triples(sample) {
        cases += 2;
        let left = lattice.meet(&lattice.meet(a, b)?, c)?;
        let right = lattice.meet(a, &lattice.meet(b, c)?)?;
        if left != right {
            return violation(
                cases,
                Law::MeetAssociativity,
                vec![a.clone(), b.clone(), c.clone()],
            );
        }
        let left = lattice.join(&lattice.join(a, b)?, c)?;
        let right = lattice.join(a, &lattice.join(b, c)?)?;
        if left != right {
            return violation(
                cases,
                Law::JoinAssociativity,
                vec![a.clone(), b.clone(), c.clone()],
            );
        }
    }

    Ok(LawReport {
        cases_checked: cases,
        violation: None,
    })
}

/// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over sampled triples. A failure
/// here means the distributive fast path must not be used.
pub fn check_distributive(lattice: &Lattice, sample: &[Element]) -> Result<LawReport> {
    if sample.is_empty() {
        return Err(Error::EmptyInput {
            op: "check_distributive",
        });
    }
    let mut cases = 0u64;
    for (x, y, z) in triples(sample) {
        cases += 1;
        let lhs = lattice.meet(x, &lattice.join(y, z)?)?;
        let rhs = lattice.join(&lattice.meet(x, y)?, &lattice.meet(x, z)?)?;
        if lhs != rhs {
            return violation(
                cases,
                Law::Distributivity,
                vec![x.clone(), y.clone(), z.clone()],
            );
        }
    }
    Ok(LawReport {
        cases_checked: cases,
        violation: None,
    })
}

fn violation(cases: u64, law: Law, witnesses: Vec<Element>) -> Result<LawReport> {
    Ok(LawReport {
        cases_checked: cases,
        violation: Some(LawViolation { law, witnesses }),
    })
}

fn pairs(sample: &[Element]) -> Vec<(&Element, &Element)> {
    let n = sample.len();
    if n <= EXHAUSTIVE_LIMIT {
        let mut out = Vec::with_capacity(n * n);
        for a in sample {
            for b in sample {
                out.push((a, b));
            }
        }
        out
    } else {
        let mut rng = SplitMix64::new(SAMPLE_SEED);
        (0..SAMPLED_PAIRS)
            .map(|_| {
                let i = rng.next_below(n as u64) as usize;
                let j = rng.next_below(n as u64) as usize;
                (&sample[i], &sample[j])
            })
            .collect()
    }
}

fn triples(sample: &[Element]) -> Vec<(&Element, &Element, &Element)> {
    let n = sample.len();
    if n <= EXHAUSTIVE_LIMIT {
        let mut out = Vec::with_capacity(n * n * n);
        for a in sample {
            for b in sample {
                for c in sample {
                    out.push((a, b, c));
                }
            }
        }
        out
    } else {
        let mut rng = SplitMix64::new(SAMPLE_SEED);
        (0..SAMPLED_TRIPLES)
            .map(|_| {
                let i = rng.next_below(n as u64) as usize;
                let j = rng.next_below(n as u64) as usize;
                let k = rng.next_below(n as u64) as usize;
                (&sample[i], &sample[j], &sample[k])
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use crate::table::FiniteLatticeTable;

    fn nodes(n: usize) -> Vec<Element> {
        (0..n).map(Element::Node).collect()
    }

    #[test]
    fn m3_passes_axioms() {
        let m3 = Lattice::m3();
        let report = check_axioms(&m3, &nodes(5)).unwrap();
        assert!(report.passed(), "violation: {:?}", report.violation);
    }

    #[test]
    fn corrupted_table_fails_axioms_with_counterexample() {
        let good = FiniteLatticeTable::m3();
        let mut meet = Vec::new();
        let mut join = Vec::new();
        for i in 0..5 {
            for j in 0..5 {
                meet.push(good.meet_of(i, j));
                join.push(good.join_of(i, j));
            }
        }
        meet[1 * 5 + 2] = 4; // one asymmetric entry
        let corrupt = FiniteLatticeTable::from_parts(5, meet, join, None).unwrap();
        let lattice = Lattice::FiniteTable {
            table: Arc::new(corrupt),
            distributive: false,
        };
        let report = check_axioms(&lattice, &nodes(5)).unwrap();
        let v = report.violation.expect("corruption must be reported");
        // the reported witnesses must genuinely violate the reported law
        match v.law {
            Law::MeetCommutativity => {
                let (a, b) = (&v.witnesses[0], &v.witnesses[1]);
                assert_ne!(lattice.meet(a, b).unwrap(), lattice.meet(b, a).unwrap());
            }
            Law::AbsorptionJoinMeet => {
                let (a, b) = (&v.witnesses[0], &v.witnesses[1]);
                let inner = lattice.meet(a, b).unwrap();
                assert_ne!(lattice.join(a, &inner).unwrap(), *a);
            }
            other => panic!("unexpected law {other:?}"),
        }
    }

    #[test]
    fn divisibility_sample_passes_axioms() {
        let d = Lattice::Divisibility;
        let sample: Vec<Element> = (1..=20).map(Element::Div).collect();
        assert!(check_axioms(&d, &sample).unwrap().passed());
    }

    #[test]
    fn powerset_is_distributive() {
        let u = crate::lattice::PowersetUniverse::new(vec!["x".into(), "y".into(), "z".into()])
            .unwrap();
        let p = Lattice::Powerset(u);
        let sample: Vec<Element> = (0..8u64).map(Element::Set).collect();
        assert!(check_distributive(&p, &sample).unwrap().passed());
    }

    #[test]
    fn m3_fails_distributivity_with_witness() {
        let m3 = Lattice::m3();
        let report = check_distributive(&m3, &nodes(5)).unwrap();
        let v = report.violation.expect("M3 must fail distributivity");
        assert_eq!(v.law, Law::Distributivity);
        let (x, y, z) = (&v.witnesses[0], &v.witnesses[1], &v.witnesses[2]);
        let lhs = m3.meet(x, &m3.join(y, z).unwrap()).unwrap();
        let rhs = m3
            .join(&m3.meet(x, y).unwrap(), &m3.meet(x, z).unwrap())
            .unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn large_samples_are_subsampled_deterministically() {
        let d = Lattice::Divisibility;
        let sample: Vec<Element> = (1..=100).map(Element::Div).collect();
        let a = check_axioms(&d, &sample).unwrap();
        let b = check_axioms(&d, &sample).unwrap();
        assert!(a.passed());
        assert_eq!(a.cases_checked, b.cases_checked);
    }

    #[test]
    fn empty_sample_is_rejected() {
        assert!(check_axioms(&Lattice::Divisibility, &[]).is_err());
        assert!(check_distributive(&Lattice::Divisibility, &[]).is_err());
    }
}
