//! DIMACS `.col` files: `c` comments, one `p edge n m` line, then `e u v`
//! lines with 1-based vertex ids.

use std::fmt::Write;

use crate::error::ParseError;
use crate::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimacsWarning {
    /// The problem line announced a different number of edge lines than
    /// were present; the graph uses the recounted edges.
    EdgeCountMismatch { declared: usize, found: usize },
}

#[derive(Debug, Clone)]
pub struct Decoded {
    pub graph: Graph,
    pub warnings: Vec<DimacsWarning>,
}

pub fn decode(text: &str) -> Result<Decoded, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let err = |line: usize, message: String| ParseError::Dimacs { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err(line_no, "duplicate problem line".into()));
                }
                let kind = fields.next();
                if !matches!(kind, Some("edge" | "col")) {
                    return Err(err(line_no, format!("unsupported problem type {kind:?}")));
                }
                let n = parse_field(fields.next(), line_no, "vertex count")?;
                let m = parse_field(fields.next(), line_no, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(err(line_no, "edge before problem line".into()));
                };
                let u = parse_field(fields.next(), line_no, "edge endpoint")?;
                let v = parse_field(fields.next(), line_no, "edge endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line_no, format!("vertex {x} out of range 1..={n}")));
                    }
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(err(line_no, format!("unknown line type {other:?}")));
            }
        }
    }

    let (n, declared) = header.ok_or(ParseError::MissingProblemLine)?;
    let mut warnings = Vec::new();
    if declared != edges.len() {
        warnings.push(DimacsWarning::EdgeCountMismatch {
            declared,
            found: edges.len(),
        });
    }
    let graph = Graph::from_edges(n, edges)?;
    Ok(Decoded { graph, warnings })
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    field
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| ParseError::Dimacs {
            line,
            message: format!("missing or invalid {what}"),
        })
}

pub fn encode(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn triangle() {
        let d = decode("p edge 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
        assert_eq!(d.graph, complete(3));
        assert!(d.warnings.is_empty());
        assert_eq!(decode(&encode(&complete(3))).unwrap().graph, complete(3));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "c a comment\n\np edge 5 5\nc mid\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        assert_eq!(decode(text).unwrap().graph, cycle(5));
    }

    #[test]
    fn out_of_range_vertex() {
        assert!(matches!(
            decode("p edge 2 1\ne 1 3"),
            Err(ParseError::Dimacs { line: 2, .. })
        ));
        assert!(matches!(
            decode("p edge 2 1\ne 0 1"),
            Err(ParseError::Dimacs { line: 2, .. })
        ));
    }

    #[test]
    fn missing_problem_line() {
        assert_eq!(
            decode("c nothing\n").unwrap_err(),
            ParseError::MissingProblemLine
        );
        assert!(matches!(
            decode("e 1 2\n"),
            Err(ParseError::Dimacs { line: 1, .. })
        ));
    }

    #[test]
    fn edge_count_mismatch_is_a_warning() {
        let d = decode("p edge 3 5\ne 1 2\n").unwrap();
        assert_eq!(d.graph.edge_count(), 1);
        assert_eq!(
            d.warnings,
            vec![DimacsWarning::EdgeCountMismatch {
                declared: 5,
                found: 1
            }]
        );
    }

    #[test]
    fn loops_are_rejected() {
        assert!(matches!(
            decode("p edge 2 1\ne 2 2"),
            Err(ParseError::Graph(_))
        ));
    }
}
