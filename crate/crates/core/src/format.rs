//! Text formats: the native collection format, CATS bid files, and witness
//! edge lists.
//!
//! Native format: one set per line as whitespace-separated labels. Lines
//! whose first non-blank character is `#` are comments and zero-length lines
//! are skipped; a line holding only whitespace is an empty set and rejected.
//!
//! Witness format: one `a b` edge per line using element labels, the two
//! labels of a line in byte order and the lines sorted.

use crate::error::{Error, Result};
use crate::model::{Forest, SetCollection, SymbolTable};

pub fn parse_collection(text: &str) -> Result<SetCollection> {
    let mut sets: Vec<Vec<&str>> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        last_line = i + 1;
        if raw.is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::EmptySet { index: sets.len() });
        }
        sets.push(tokens);
    }
    if sets.is_empty() {
        return Err(Error::parse(last_line.max(1), "no sets in input"));
    }
    SetCollection::intern(sets)
}

/// Inverse of [`parse_collection`]. Fails on labels the format cannot carry.
pub fn write_collection(s: &SetCollection) -> Result<String> {
    let mut out = String::new();
    for (i, set) in s.labelled_sets().into_iter().enumerate() {
        for (k, label) in set.iter().enumerate() {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::parse(
                    i + 1,
                    format!("label {label:?} is not a token"),
                ));
            }
            if k == 0 && label.starts_with('#') {
                return Err(Error::parse(
                    i + 1,
                    format!("leading label {label:?} would read as a comment"),
                ));
            }
            if k > 0 {
                out.push(' ');
            }
            out.push_str(label);
        }
        out.push('\n');
    }
    Ok(out)
}

/// A parsed CATS file with the diagnostics that did not stop parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatsInstance {
    pub collection: SetCollection,
    pub goods: usize,
    pub warnings: Vec<String>,
}

/// Parses a CATS bid file: `goods N` and `bids M` headers, then one line
/// per bid, `<bid-id> <price> <good>... #`. `%` lines are comments. Goods
/// numbered `N` or above are dummy goods and dropped; prices are ignored.
pub fn parse_cats(text: &str) -> Result<CatsInstance> {
    let mut goods: Option<usize> = None;
    let mut bids: Option<usize> = None;
    let mut warnings = Vec::new();
    let mut sets: Vec<Vec<String>> = Vec::new();
    let mut dummies = 0usize;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().expect("nonempty line");

        if first.starts_with(|c: char| c.is_ascii_alphabetic()) {
            if !sets.is_empty() {
                return Err(Error::parse(
                    line_no,
                    format!("header {first:?} after bid lines"),
                ));
            }
            let value = tokens.next();
            let parse_count = |v: Option<&str>| {
                v.and_then(|v| v.parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(line_no, format!("header {first:?} needs a count")))
            };
            match first {
                "goods" => goods = Some(parse_count(value)?),
                "bids" => bids = Some(parse_count(value)?),
                "dummy" => {
                    parse_count(value)?;
                }
                other => warnings.push(format!("line {line_no}: ignoring header {other:?}")),
            }
            continue;
        }

        let (Some(goods), Some(bids)) = (goods, bids) else {
            return Err(Error::parse(
                line_no,
                "bid line before `goods` and `bids` headers",
            ));
        };
        if sets.len() == bids {
            return Err(Error::parse(
                line_no,
                format!("more bid lines than the declared {bids}"),
            ));
        }
        first
            .parse::<usize>()
            .map_err(|_| Error::parse(line_no, format!("bad bid id {first:?}")))?;
        let price = tokens
            .next()
            .ok_or_else(|| Error::parse(line_no, "bid line has no price"))?;
        price
            .parse::<f64>()
            .map_err(|_| Error::parse(line_no, format!("bad price {price:?}")))?;

        let mut set = Vec::new();
        let mut terminated = false;
        for tok in tokens.by_ref() {
            if tok == "#" {
                terminated = true;
                break;
            }
            let good: usize = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad good {tok:?}")))?;
            if good >= goods {
                dummies += 1;
            } else {
                set.push(good.to_string());
            }
        }
        if !terminated {
            return Err(Error::parse(line_no, "bid line is not terminated by `#`"));
        }
        if let Some(extra) = tokens.next() {
            return Err(Error::parse(
                line_no,
                format!("unexpected {extra:?} after `#`"),
            ));
        }
        if set.is_empty() {
            return Err(Error::EmptySet { index: sets.len() });
        }
        sets.push(set);
    }

    let (Some(goods), Some(bids)) = (goods, bids) else {
        return Err(Error::parse(
            last_line.max(1),
            "missing `goods` or `bids` header",
        ));
    };
    if sets.len() != bids {
        return Err(Error::parse(
            last_line.max(1),
            format!("declared {bids} bids but found {}", sets.len()),
        ));
    }
    if dummies > 0 {
        warnings.push(format!(
            "ignored {dummies} dummy good occurrence(s) numbered >= {goods}"
        ));
    }
    Ok(CatsInstance {
        collection: SetCollection::intern(sets)?,
        goods,
        warnings,
    })
}

/// Edge list of `t` using the labels of `symbols`.
pub fn format_witness(t: &Forest, symbols: &SymbolTable) -> String {
    let mut lines: Vec<String> = t
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (symbols.labels()[a].as_str(), symbols.labels()[b].as_str());
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            format!("{a} {b}\n")
        })
        .collect();
    lines.sort();
    lines.concat()
}

/// Reads a witness edge list over the elements of `symbols`. The forest has
/// one node per symbol.
pub fn parse_witness(text: &str, symbols: &SymbolTable) -> Result<Forest> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(Error::parse(i + 1, "expected two labels per edge"));
        };
        let id = |l: &str| {
            symbols
                .id(l)
                .ok_or_else(|| Error::parse(i + 1, format!("unknown element {l:?}")))
        };
        edges.push((id(a)?.index(), id(b)?.index()));
    }
    Forest::new(symbols.len(), edges)
}
