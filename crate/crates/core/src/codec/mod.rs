//! Text interchange formats.

pub mod dimacs;
pub mod graph6;

use crate::error::ParseError;
use crate::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Dimacs,
}

/// Guesses the format of a single-graph payload: DIMACS if any non-blank line
/// starts with `c`, `p` or `e` followed by whitespace, graph6 otherwise.
pub fn sniff(text: &str) -> Format {
    let dimacs = text.lines().map(str::trim_start).any(|l| {
        let mut chars = l.chars();
        matches!(chars.next(), Some('c' | 'p' | 'e'))
            && chars.next().is_none_or(char::is_whitespace)
    });
    if dimacs {
        Format::Dimacs
    } else {
        Format::Graph6
    }
}

/// Parses one graph in the given (or sniffed) format. graph6 input must hold
/// exactly one non-blank line.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph, ParseError> {
    match format.unwrap_or_else(|| sniff(text)) {
        Format::Dimacs => Ok(dimacs::decode(text)?.graph),
        Format::Graph6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines.next().ok_or(ParseError::Empty)?;
            if lines.next().is_some() {
                return Err(ParseError::MultipleGraphs);
            }
            graph6::decode(first.trim())
        }
    }
}
