//! Parsers for the two input file formats.
//!
//! Ideal files:
//! ```text
//! vars x1 x2 x3
//! ideal x1*x2, x3
//! ```
//! with `ideal 0` for the zero ideal. Graph files:
//! ```text
//! graph 4
//! edge 1 2
//! edge 2 3
//! ```
//! with 1-based vertices. Blank lines are ignored; errors carry the
//! 1-based line and column of the offending token.

use std::path::Path;

use monoideal::graph::Graph;
use monoideal::{MonomialIdeal, VarContext};

use crate::error::CliError;

/// An ideal together with the variable context its file declared.
#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    pub ctx: VarContext,
    pub ideal: MonomialIdeal,
}

fn parse_err(path: &str, line: usize, col: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { path: path.to_string(), line, col, message: message.into() }
}

/// Non-blank lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty())
}

/// Splits a line into its leading keyword and the rest, reporting the
/// 1-based column where the rest begins.
fn keyword_line<'a>(line: &'a str, keyword: &str) -> Option<(&'a str, usize)> {
    let indent = line.len() - line.trim_start().len();
    let trimmed = line.trim_start();
    let rest = trimmed.strip_prefix(keyword)?;
    if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
        return None;
    }
    Some((rest, indent + keyword.len() + 1))
}

/// Parses ideal file text. `path` is used only in error messages.
pub fn parse_ideal_text(text: &str, path: &str) -> Result<ParsedIdeal, CliError> {
    let mut rows = lines(text);

    let (vars_no, vars_line) =
        rows.next().ok_or_else(|| parse_err(path, 1, 1, "missing 'vars' line"))?;
    let (names, _) = keyword_line(vars_line, "vars")
        .ok_or_else(|| parse_err(path, vars_no, 1, "expected 'vars x1 x2 ...'"))?;
    let names: Vec<&str> = names.split_whitespace().collect();
    if names.is_empty() {
        return Err(parse_err(path, vars_no, 1, "'vars' line names no variables"));
    }
    let ctx = VarContext::with_names(names.iter().copied())
        .map_err(|e| parse_err(path, vars_no, 1, e.to_string()))?;

    let (ideal_no, ideal_line) =
        rows.next().ok_or_else(|| parse_err(path, vars_no, 1, "missing 'ideal' line"))?;
    let (body, body_col) = keyword_line(ideal_line, "ideal")
        .ok_or_else(|| parse_err(path, ideal_no, 1, "expected 'ideal m1, m2, ...' or 'ideal 0'"))?;

    if let Some((extra_no, _)) = rows.next() {
        return Err(parse_err(path, extra_no, 1, "unexpected line after the 'ideal' line"));
    }

    let ideal = if body.trim() == "0" {
        MonomialIdeal::zero(ctx.len())
    } else {
        let mut gens = Vec::new();
        let mut cursor = body_col;
        for piece in body.split(',') {
            let start = cursor;
            cursor += piece.len() + 1;
            match ctx.parse_monomial(piece) {
                Ok(m) => gens.push(m),
                Err(monoideal::Error::Parse { offset, message }) => {
                    return Err(parse_err(path, ideal_no, start + offset, message));
                }
                Err(e) => return Err(parse_err(path, ideal_no, start, e.to_string())),
            }
        }
        MonomialIdeal::from_generators(ctx.len(), gens)
    };

    Ok(ParsedIdeal { ctx, ideal })
}

/// Parses graph file text. Vertices are 1-based in the file and 0-based in
/// the returned graph. Loop edges and out-of-range endpoints are errors.
pub fn parse_graph_text(text: &str, path: &str) -> Result<Graph, CliError> {
    let mut rows = lines(text);

    let (head_no, head) =
        rows.next().ok_or_else(|| parse_err(path, 1, 1, "missing 'graph' line"))?;
    let (count, count_col) = keyword_line(head, "graph")
        .ok_or_else(|| parse_err(path, head_no, 1, "expected 'graph <n>'"))?;
    let n: usize = count
        .trim()
        .parse()
        .map_err(|_| parse_err(path, head_no, count_col, "expected a vertex count"))?;
    if n == 0 {
        return Err(parse_err(path, head_no, count_col, "a graph needs at least one vertex"));
    }

    let mut edges = Vec::new();
    for (line_no, line) in rows {
        let (body, body_col) = keyword_line(line, "edge")
            .ok_or_else(|| parse_err(path, line_no, 1, "expected 'edge <u> <v>'"))?;
        let mut endpoints = Vec::new();
        let mut rel = 0usize;
        for word in body.split_whitespace() {
            let found = body[rel..].find(word).expect("word comes from body");
            let at = body_col + rel + found;
            rel += found + word.len();
            let v: usize = word
                .parse()
                .map_err(|_| parse_err(path, line_no, at, format!("bad vertex '{word}'")))?;
            if v == 0 || v > n {
                return Err(parse_err(
                    path,
                    line_no,
                    at,
                    format!("vertex {v} outside 1..={n}"),
                ));
            }
            endpoints.push(v);
        }
        let [u, v] = endpoints[..] else {
            return Err(parse_err(path, line_no, 1, "an edge needs exactly two endpoints"));
        };
        if u == v {
            return Err(parse_err(path, line_no, 1, format!("loop edge at vertex {u}")));
        }
        edges.push((u - 1, v - 1));
    }

    Graph::new(n, edges).map_err(CliError::from)
}

/// Reads and parses an ideal file, returning the raw bytes for digesting.
pub fn read_ideal_file(path: &Path) -> Result<(ParsedIdeal, Vec<u8>), CliError> {
    let display = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: display.clone(), source })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| parse_err(&display, 1, 1, "file is not UTF-8"))?;
    Ok((parse_ideal_text(&text, &display)?, bytes))
}

/// Reads and parses a graph file, returning the raw bytes for digesting.
pub fn read_graph_file(path: &Path) -> Result<(Graph, Vec<u8>), CliError> {
    let display = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: display.clone(), source })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| parse_err(&display, 1, 1, "file is not UTF-8"))?;
    Ok((parse_graph_text(&text, &display)?, bytes))
}
