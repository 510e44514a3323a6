//! Constructors and loaders for the concrete lattice families.
//!
//! Lattice spec grammar: `int`, `div`, `powerset:<names>`,
//! `product:<spec>+<spec>`, `table:<path>`, `m3`, `n5`. Element grammar:
//! decimal integers for `int`/`div`, `{a,c}` for powerset members, `(l|r)`
//! for product pairs, and a node name or 0-based index for finite tables.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{Element, Lattice, PowersetUniverse};
use crate::table::FiniteLatticeTable;

/// A recipe for building a [`Lattice`] descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceSpec {
    TotalOrderInt,
    Divisibility,
    Powerset { universe: Vec<String> },
    Product(Box<InstanceSpec>, Box<InstanceSpec>),
    TableFile(PathBuf),
    M3,
    N5,
}

impl FromStr for InstanceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s.trim())
    }
}

fn parse_spec(s: &str) -> Result<InstanceSpec> {
    let bad = |reason: &str| Error::ParseSpec {
        text: s.to_string(),
        reason: reason.to_string(),
    };
    let inner = strip_outer_parens(s);
    match inner {
        "int" => return Ok(InstanceSpec::TotalOrderInt),
        "div" => return Ok(InstanceSpec::Divisibility),
        "m3" => return Ok(InstanceSpec::M3),
        "n5" => return Ok(InstanceSpec::N5),
        _ => {}
    }
    if let Some(rest) = inner.strip_prefix("powerset:") {
        let universe: Vec<String> = rest.split(',').map(|n| n.trim().to_string()).collect();
        return Ok(InstanceSpec::Powerset { universe });
    }
    if let Some(rest) = inner.strip_prefix("table:") {
        if rest.is_empty() {
            return Err(bad("missing table path"));
        }
        return Ok(InstanceSpec::TableFile(PathBuf::from(rest)));
    }
    if let Some(rest) = inner.strip_prefix("product:") {
        // try each top-level '+' as the split between the two child specs
        let mut depth = 0usize;
        for (i, c) in rest.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                '+' if depth == 0 => {
                    let (lhs, rhs) = (&rest[..i], &rest[i + 1..]);
                    if let (Ok(l), Ok(r)) = (parse_spec(lhs.trim()), parse_spec(rhs.trim())) {
                        return Ok(InstanceSpec::Product(Box::new(l), Box::new(r)));
                    }
                }
                _ => {}
            }
        }
        return Err(bad("expected product:<spec>+<spec>"));
    }
    Err(bad(
        "expected int, div, powerset:<names>, product:<spec>+<spec>, table:<path>, m3 or n5",
    ))
}

fn strip_outer_parens(s: &str) -> &str {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        // only strip if the parens actually match each other
        let mut depth = 0i64;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return s;
                    }
                }
                _ => {}
            }
        }
        if depth == 0 {
            return strip_outer_parens(inner);
        }
    }
    s
}

/// Builds a validated descriptor. Finite tables are loaded and fully law-
/// checked; their distributive flag is determined exhaustively.
pub fn build_descriptor(spec: &InstanceSpec) -> Result<Lattice> {
    match spec {
        InstanceSpec::TotalOrderInt => Ok(Lattice::TotalOrderInt),
        InstanceSpec::Divisibility => Ok(Lattice::Divisibility),
        InstanceSpec::Powerset { universe } => {
            Ok(Lattice::Powerset(PowersetUniverse::new(universe.clone())?))
        }
        InstanceSpec::Product(l, r) => Ok(Lattice::Product(
            Box::new(build_descriptor(l)?),
            Box::new(build_descriptor(r)?),
        )),
        InstanceSpec::TableFile(path) => load_table_file(path),
        InstanceSpec::M3 => Ok(Lattice::m3()),
        InstanceSpec::N5 => Ok(Lattice::n5()),
    }
}

/// Parses a lattice spec string and builds the descriptor in one step.
pub fn parse_lattice(text: &str) -> Result<Lattice> {
    build_descriptor(&text.parse::<InstanceSpec>()?)
}

fn load_table_file(path: &Path) -> Result<Lattice> {
    let text = std::fs::read_to_string(path)?;
    Lattice::from_table(FiniteLatticeTable::parse(&text)?)
}

/// Parses one element in the given lattice's text grammar.
pub fn parse_element(lattice: &Lattice, text: &str) -> Result<Element> {
    let text = text.trim();
    let bad = |reason: String| Error::ParseElement {
        text: text.to_string(),
        lattice: lattice.kind_name(),
        reason,
    };
    if text.is_empty() {
        return Err(bad("empty element text".into()));
    }
    match lattice {
        Lattice::TotalOrderInt => text
            .parse::<i64>()
            .map(Element::Int)
            .map_err(|e| bad(e.to_string())),
        Lattice::Divisibility => {
            let v = text.parse::<u64>().map_err(|e| bad(e.to_string()))?;
            if v == 0 {
                return Err(bad("divisibility elements must be positive".into()));
            }
            Ok(Element::Div(v))
        }
        Lattice::Powerset(universe) => {
            let inner = text
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| bad("expected '{member,member,...}'".into()))?
                .trim();
            let mut bits = 0u64;
            if !inner.is_empty() {
                for name in inner.split(',') {
                    let name = name.trim();
                    let i = universe
                        .index_of(name)
                        .ok_or_else(|| bad(format!("unknown member '{name}'")))?;
                    bits |= 1u64 << i;
                }
            }
            Ok(Element::Set(bits))
        }
        Lattice::Product(l, r) => {
            let inner = text
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad("expected '(left|right)'".into()))?;
            let parts = split_top_level(inner, '|');
            if parts.len() != 2 {
                return Err(bad("expected exactly one top-level '|'".into()));
            }
            Ok(Element::Pair(
                Box::new(parse_element(l, parts[0])?),
                Box::new(parse_element(r, parts[1])?),
            ))
        }
        Lattice::FiniteTable { table, .. } => {
            if let Some(i) = table.index_of_name(text) {
                return Ok(Element::Node(i));
            }
            let i = text
                .parse::<usize>()
                .map_err(|_| bad("not a node name or index".into()))?;
            if i >= table.len() {
                return Err(bad(format!(
                    "node index {i} out of range for {} elements",
                    table.len()
                )));
            }
            Ok(Element::Node(i))
        }
    }
}

/// Renders one element in the same grammar [`parse_element`] accepts.
pub fn format_element(lattice: &Lattice, e: &Element) -> Result<String> {
    match (lattice, e) {
        (Lattice::TotalOrderInt, Element::Int(v)) => Ok(v.to_string()),
        (Lattice::Divisibility, Element::Div(v)) => Ok(v.to_string()),
        (Lattice::Powerset(universe), Element::Set(bits)) if universe.admits(*bits) => {
            let members: Vec<&str> = universe
                .names()
                .iter()
                .enumerate()
                .filter(|(i, _)| bits & (1u64 << i) != 0)
                .map(|(_, n)| n.as_str())
                .collect();
            Ok(format!("{{{}}}", members.join(",")))
        }
        (Lattice::Product(l, r), Element::Pair(a, b)) => Ok(format!(
            "({}|{})",
            format_element(l, a)?,
            format_element(r, b)?
        )),
        (Lattice::FiniteTable { table, .. }, Element::Node(i)) if *i < table.len() => Ok(table
            .name_of(*i)
            .map(str::to_string)
            .unwrap_or_else(|| i.to_string())),
        _ => Err(Error::DomainMismatch {
            lattice: lattice.kind_name(),
            element: format!("{e:?}"),
        }),
    }
}

/// Parses a comma-separated element list, honouring braces and parentheses
/// so powerset and product elements can contain commas. Empty text is the
/// empty sequence.
pub fn parse_sequence(lattice: &Lattice, text: &str) -> Result<Vec<Element>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text, ',')
        .into_iter()
        .map(|part| parse_element(lattice, part))
        .collect()
}

/// Renders elements as a comma-separated list.
pub fn format_sequence(lattice: &Lattice, items: &[Element]) -> Result<String> {
    let parts: Result<Vec<String>> = items.iter().map(|e| format_element(lattice, e)).collect();
    Ok(parts?.join(","))
}

/// Splits on `sep` at nesting depth zero with respect to `{}` and `()`.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}
