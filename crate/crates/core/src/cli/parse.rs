//! Plain-text input formats. Blank lines and lines starting with `#` are
//! ignored everywhere; errors carry 1-based line numbers.

use std::iter::Peekable;

use num_bigint::BigInt;
use thiserror::Error;

use crate::chain::FiniteTransformationGroupoid;
use crate::exactseq::ExactSequence;
use crate::fgab::{FgAbGroup, GroupHom};
use crate::sft::DirectedGraph;
use crate::zlinalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Eof(String),
    #[error("{0}")]
    Semantic(String),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

type Lines<'a> = Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>;

/// Meaningful lines with their 1-based numbers.
fn lines(text: &str) -> Lines<'_> {
    let it: Box<dyn Iterator<Item = (usize, &str)>> = Box::new(
        text.lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
    );
    it.peekable()
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

fn parse_ints(line: usize, text: &str) -> Result<Vec<BigInt>, ParseError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(line, format!("expected an integer, found `{t}`"))))
        .collect()
}

fn expect_end(mut it: Lines<'_>) -> Result<(), ParseError> {
    match it.next() {
        Some((n, l)) => Err(syntax(n, format!("unexpected trailing content `{l}`"))),
        None => Ok(()),
    }
}

/// `R C` followed by `R` rows of `C` integers.
fn matrix_block(it: &mut Lines<'_>) -> Result<IntMatrix, ParseError> {
    let (n, header) = it.next().ok_or_else(|| ParseError::Eof("expected matrix header `R C`".into()))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [r, c] = dims[..] else {
        return Err(syntax(n, format!("expected matrix header `R C`, found `{header}`")));
    };
    let (rows, cols) = (parse_usize(n, r, "row count")?, parse_usize(n, c, "column count")?);
    if cols == 0 {
        // Rows of width zero are blank lines and never appear in the file.
        return Ok(IntMatrix::zeros(rows, 0));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let (n, row) = it
            .next()
            .ok_or_else(|| ParseError::Eof(format!("matrix has {i} of {rows} rows")))?;
        let vals = parse_ints(n, row)?;
        if vals.len() != cols {
            return Err(syntax(n, format!("expected {cols} entries, found {}", vals.len())));
        }
        entries.extend(vals);
    }
    Ok(IntMatrix::new(rows, cols, entries).expect("entry count checked"))
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let mut it = lines(text);
    let m = matrix_block(&mut it)?;
    expect_end(it)?;
    Ok(m)
}

/// `true` if the first meaningful line is a `vertices` header.
pub fn looks_like_graph(text: &str) -> bool {
    lines(text)
        .next()
        .is_some_and(|(_, l)| l.split_whitespace().next() == Some("vertices"))
}

/// `vertices N` followed by one `i t` line per edge, vertices numbered from 1.
pub fn parse_graph(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut it = lines(text);
    let (n, header) = it.next().ok_or_else(|| ParseError::Eof("expected `vertices N`".into()))?;
    let vertices = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["vertices", k] => parse_usize(n, k, "vertex count")?,
        _ => return Err(syntax(n, format!("expected `vertices N`, found `{header}`"))),
    };
    let mut edges = Vec::new();
    for (n, l) in it {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [i, t] = toks[..] else {
            return Err(syntax(n, format!("expected edge `i t`, found `{l}`")));
        };
        let endpoint = |tok: &str| -> Result<usize, ParseError> {
            let v = parse_usize(n, tok, "vertex number")?;
            if v == 0 || v > vertices {
                return Err(syntax(n, format!("vertex {v} out of range 1..={vertices}")));
            }
            Ok(v - 1)
        };
        edges.push((endpoint(i)?, endpoint(t)?));
    }
    DirectedGraph::new(vertices, edges).map_err(|e| ParseError::Semantic(e.to_string()))
}

fn section_header<'a>(it: &mut Lines<'a>, name: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
    let (n, l) = it
        .next()
        .ok_or_else(|| ParseError::Eof(format!("expected section `{name}`")))?;
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.first() != Some(&name) {
        return Err(syntax(n, format!("expected section `{name}`, found `{l}`")));
    }
    Ok((n, toks[1..].to_vec()))
}

fn index_row(n: usize, l: &str) -> Result<Vec<usize>, ParseError> {
    l.split_whitespace()
        .map(|t| parse_usize(n, t, "a 0-based index"))
        .collect()
}

/// Sections `group` (multiplication table rows), `set K` and `action`
/// (one permutation line per group element); all indices 0-based.
pub fn parse_groupoid(text: &str) -> Result<FiniteTransformationGroupoid, ParseError> {
    let mut it = lines(text);
    let (n, rest) = section_header(&mut it, "group")?;
    if !rest.is_empty() {
        return Err(syntax(n, "`group` takes no arguments"));
    }
    let mut table = Vec::new();
    while let Some(&(n, l)) = it.peek() {
        if l.starts_with("set") {
            break;
        }
        table.push(index_row(n, l)?);
        it.next();
    }
    let (n, rest) = section_header(&mut it, "set")?;
    let points = match rest[..] {
        [k] => parse_usize(n, k, "point count")?,
        [] => {
            let (n, l) = it.next().ok_or_else(|| ParseError::Eof("expected point count".into()))?;
            parse_usize(n, l, "point count")?
        }
        _ => return Err(syntax(n, "expected `set K`")),
    };
    section_header(&mut it, "action")?;
    let action = it.map(|(n, l)| index_row(n, l)).collect::<Result<Vec<_>, _>>()?;
    FiniteTransformationGroupoid::new(table, points, action).map_err(|e| ParseError::Semantic(e.to_string()))
}

/// Alternating `group <G>` lines and `map` blocks (a matrix) or `map unknown`.
pub fn parse_sequence(text: &str) -> Result<ExactSequence, ParseError> {
    let mut it = lines(text);
    let mut groups: Vec<FgAbGroup> = Vec::new();
    let mut raw_maps: Vec<(usize, Option<IntMatrix>)> = Vec::new();
    while let Some((n, l)) = it.next() {
        let (keyword, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        let expect_group = groups.len() == raw_maps.len();
        match keyword {
            "group" if expect_group => {
                let g = rest
                    .parse()
                    .map_err(|e: crate::fgab::FgabError| syntax(n, e.to_string()))?;
                groups.push(g);
            }
            "map" if !expect_group => match rest {
                "unknown" => raw_maps.push((n, None)),
                "" => raw_maps.push((n, Some(matrix_block(&mut it)?))),
                _ => return Err(syntax(n, format!("expected `map` or `map unknown`, found `{l}`"))),
            },
            _ => {
                let want = if expect_group { "group" } else { "map" };
                return Err(syntax(n, format!("expected `{want}` line, found `{l}`")));
            }
        }
    }
    if groups.is_empty() {
        return Err(ParseError::Eof("sequence has no groups".into()));
    }
    if raw_maps.len() == groups.len() {
        return Err(ParseError::Eof("sequence ends with a map; expected a final group".into()));
    }
    let mut maps = Vec::with_capacity(raw_maps.len());
    for (i, (n, m)) in raw_maps.into_iter().enumerate() {
        maps.push(match m {
            None => None,
            Some(m) => Some(
                GroupHom::new(groups[i].clone(), groups[i + 1].clone(), m).map_err(|e| syntax(n, e.to_string()))?,
            ),
        });
    }
    ExactSequence::new(groups, maps).map_err(|e| ParseError::Semantic(e.to_string()))
}
