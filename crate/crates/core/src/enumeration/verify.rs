//! Checking `χ ≤ max(ω, Δ − 1)` over a corpus of graphs.

use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::codec::graph6;
use crate::coloring::{bk_color_with, validate_coloring, BkOptions, RepairStats, Validity};
use crate::error::ParseError;
use crate::invariants::{chromatic_number, clique_number, is_2k2_free};
use crate::Graph;

/// Corpus entries handed to the worker pool at a time.
const BATCH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyParams {
    pub require_2k2_free: bool,
    pub min_delta: usize,
    /// Multiswap depth passed to the coloring engine.
    pub depth: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            require_2k2_free: true,
            min_delta: 5,
            depth: crate::coloring::DEFAULT_DEPTH,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusDescription {
    pub source: String,
    pub require_2k2_free: bool,
    pub min_delta: usize,
    pub depth: usize,
    /// Smallest and largest order among well-formed entries.
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub omega: usize,
    pub chi: usize,
    pub two_k2_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MalformedEntry {
    /// 0-based position in the corpus.
    pub index: usize,
    pub message: String,
}

/// A graph on which the coloring engine fell back to exact search or
/// returned something other than a proper coloring within the bound.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EngineIssue {
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub corpus: CorpusDescription,
    pub graphs_seen: u64,
    pub malformed: u64,
    pub two_k2_free: u64,
    /// Graphs passing both filters.
    pub subclass: u64,
    pub satisfying: u64,
    pub violations: Vec<Violation>,
    pub malformed_entries: Vec<MalformedEntry>,
    /// Subclass graphs that were connected and 2K₂-free, so the engine ran.
    pub engine_runs: u64,
    pub engine_issues: Vec<EngineIssue>,
    pub repair: RepairStats,
}

impl VerificationReport {
    pub fn empty(source: &str, params: VerifyParams) -> Self {
        VerificationReport {
            corpus: CorpusDescription {
                source: source.to_string(),
                require_2k2_free: params.require_2k2_free,
                min_delta: params.min_delta,
                depth: params.depth,
                n_min: None,
                n_max: None,
            },
            graphs_seen: 0,
            malformed: 0,
            two_k2_free: 0,
            subclass: 0,
            satisfying: 0,
            violations: Vec::new(),
            malformed_entries: Vec::new(),
            engine_runs: 0,
            engine_issues: Vec::new(),
            repair: RepairStats::default(),
        }
    }

    /// Combines two partial reports over disjoint parts of one corpus. The
    /// result does not depend on the order of the operands.
    pub fn merge(&mut self, other: &VerificationReport) {
        let c = &mut self.corpus;
        c.n_min = min_opt(c.n_min, other.corpus.n_min);
        c.n_max = c.n_max.max(other.corpus.n_max);
        self.graphs_seen += other.graphs_seen;
        self.malformed += other.malformed;
        self.two_k2_free += other.two_k2_free;
        self.subclass += other.subclass;
        self.satisfying += other.satisfying;
        self.engine_runs += other.engine_runs;
        self.repair.merge(&other.repair);
        merge_sorted(&mut self.violations, &other.violations);
        merge_sorted(&mut self.malformed_entries, &other.malformed_entries);
        merge_sorted(&mut self.engine_issues, &other.engine_issues);
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.malformed == 0
    }

    fn record(&mut self, index: usize, entry: Result<Graph, ParseError>, params: VerifyParams) {
        self.graphs_seen += 1;
        let g = match entry {
            Ok(g) => g,
            Err(e) => {
                self.malformed += 1;
                self.malformed_entries.push(MalformedEntry {
                    index,
                    message: e.to_string(),
                });
                return;
            }
        };
        let n = g.n();
        self.corpus.n_min = min_opt(self.corpus.n_min, Some(n));
        self.corpus.n_max = self.corpus.n_max.max(Some(n));

        let free = is_2k2_free(&g);
        if free {
            self.two_k2_free += 1;
        }
        let delta = g.max_degree();
        if (params.require_2k2_free && !free) || delta < params.min_delta {
            return;
        }
        self.subclass += 1;
        let omega = clique_number(&g);
        let chi = chromatic_number(&g);
        let bound = omega.max(delta.saturating_sub(1));
        if chi <= bound {
            self.satisfying += 1;
        } else {
            self.violations.push(Violation {
                graph6: graph6::encode(&g),
                n,
                delta,
                omega,
                chi,
                two_k2_free: free,
            });
        }

        if free && g.is_connected() {
            self.engine_runs += 1;
            self.run_engine(&g, bound, params.depth);
        }
    }

    fn run_engine(&mut self, g: &Graph, bound: usize, depth: usize) {
        let issue = |reason: String| EngineIssue {
            graph6: graph6::encode(g),
            reason,
        };
        let opts = BkOptions {
            depth,
            palette: None,
        };
        match bk_color_with(g, opts) {
            Err(e) => self.engine_issues.push(issue(e.to_string())),
            Ok(out) => {
                self.repair.merge(&out.stats);
                if out.stats.fallback_count > 0 {
                    self.engine_issues.push(issue(format!(
                        "fallback to exact search at vertices {:?}",
                        out.stuck_at
                    )));
                }
                match validate_coloring(g, &out.coloring) {
                    Ok(Validity::ProperTotal) => {}
                    other => self
                        .engine_issues
                        .push(issue(format!("invalid coloring: {other:?}"))),
                }
                let used = out.coloring.colors_used();
                // below Δ = 5 the bound may legitimately fail
                if g.max_degree() >= 5 && used > bound {
                    self.engine_issues
                        .push(issue(format!("{used} colors exceed the bound {bound}")));
                }
            }
        }
    }
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn merge_sorted<T: Ord + Clone>(into: &mut Vec<T>, other: &[T]) {
    into.extend_from_slice(other);
    into.sort();
}

/// Runs the check over `corpus` on the current rayon pool. Entries are
/// processed in batches so arbitrarily long streams use bounded memory.
pub fn verify_theorem<I>(corpus: I, params: VerifyParams, source: &str) -> VerificationReport
where
    I: IntoIterator<Item = Result<Graph, ParseError>>,
{
    let mut report = VerificationReport::empty(source, params);
    let mut iter = corpus.into_iter().enumerate();
    loop {
        let batch: Vec<_> = iter.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let part = batch
            .into_par_iter()
            .fold(
                || VerificationReport::empty(source, params),
                |mut r, (i, entry)| {
                    r.record(i, entry, params);
                    r
                },
            )
            .reduce(
                || VerificationReport::empty(source, params),
                |mut a, b| {
                    a.merge(&b);
                    a
                },
            );
        report.merge(&part);
    }
    report
}

/// Newline-delimited graph6; blank lines are skipped. A read error ends
/// the stream with an error entry.
pub fn graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, ParseError>> {
    let mut lines = reader.lines();
    let mut done = false;
    std::iter::from_fn(move || loop {
        if done {
            return None;
        }
        match lines.next()? {
            Ok(l) if l.trim().is_empty() => continue,
            Ok(l) => return Some(graph6::decode(&l)),
            Err(e) => {
                done = true;
                return Some(Err(ParseError::Io(e.to_string())));
            }
        }
    })
}
