//! Connected 2K₂-free graphs with `χ > max(ω, Δ − 1)`, by exhaustive search.

use rayon::prelude::*;
use serde::Serialize;

use super::canon::CanonicalForm;
use super::generate::{levels, ClassFilter};
use crate::coloring::ExceptionFamily;
use crate::error::EnumError;
use crate::invariants::{chromatic_number, clique_number, is_k_colorable, shortest_odd_cycle};
use crate::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionEntry {
    /// graph6 of the canonical labeling.
    pub graph6: CanonicalForm,
    pub n: usize,
    pub delta: usize,
    pub omega: usize,
    pub chi: usize,
    pub family: ExceptionFamily,
    /// A shortest odd cycle, in the canonical labeling.
    pub odd_cycle: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelSummary {
    pub n: usize,
    /// Connected 2K₂-free graphs on `n` vertices.
    pub graphs: usize,
    pub violators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionCatalog {
    pub n_max: usize,
    pub levels: Vec<LevelSummary>,
    /// Δ ≤ 3, ω = 2, χ = 3, with an induced C₅.
    pub case1: Vec<ExceptionEntry>,
    /// Δ = 4 = χ, ω = 3.
    pub case2: Vec<ExceptionEntry>,
    /// Violators fitting neither case.
    pub contradictions: Vec<ExceptionEntry>,
}

impl ExceptionCatalog {
    pub fn is_consistent(&self) -> bool {
        self.contradictions.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &ExceptionEntry> {
        self.case1
            .iter()
            .chain(&self.case2)
            .chain(&self.contradictions)
    }
}

/// Scans every connected 2K₂-free graph with at most `n_max` vertices on the
/// current rayon pool.
pub fn find_exceptions(n_max: usize) -> Result<ExceptionCatalog, EnumError> {
    let mut catalog = ExceptionCatalog {
        n_max,
        levels: Vec::new(),
        case1: Vec::new(),
        case2: Vec::new(),
        contradictions: Vec::new(),
    };
    for (n, graphs) in levels(n_max, ClassFilter::TwoK2Free)? {
        let found: Vec<ExceptionEntry> = graphs.par_iter().filter_map(examine).collect();
        catalog.levels.push(LevelSummary {
            n,
            graphs: graphs.len(),
            violators: found.len(),
        });
        for entry in found {
            let bucket = match entry.family {
                ExceptionFamily::LowDegreeOddCycle if has_induced_c5(&entry) => &mut catalog.case1,
                ExceptionFamily::DegreeFour => &mut catalog.case2,
                _ => &mut catalog.contradictions,
            };
            bucket.push(entry);
        }
    }
    for bucket in [
        &mut catalog.case1,
        &mut catalog.case2,
        &mut catalog.contradictions,
    ] {
        bucket.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
    }
    Ok(catalog)
}

/// Expects `g` canonically labeled, as the generator produces it.
fn examine(g: &Graph) -> Option<ExceptionEntry> {
    let delta = g.max_degree();
    let omega = clique_number(g);
    let bound = omega.max(delta.saturating_sub(1));
    if is_k_colorable(g, bound).is_some() {
        return None;
    }
    let chi = chromatic_number(g);
    Some(ExceptionEntry {
        graph6: super::canon::canonical_form(g),
        n: g.n(),
        delta,
        omega,
        chi,
        family: ExceptionFamily::classify(delta, omega, chi),
        odd_cycle: shortest_odd_cycle(g),
    })
}

/// With ω = 2 a shortest odd cycle is induced; in a 2K₂-free graph it must
/// have length 5 since longer holes contain a 2K₂.
fn has_induced_c5(entry: &ExceptionEntry) -> bool {
    let Some(cycle) = &entry.odd_cycle else {
        return false;
    };
    let g = entry.graph6.graph();
    cycle.len() == 5
        && (0..5).all(|i| {
            (0..5).all(|j| {
                i == j || g.has_edge(cycle[i], cycle[j]) == ((i + 1) % 5 == j || (j + 1) % 5 == i)
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::canon::canonical_form;
    use crate::graph::families::*;

    #[test]
    fn c5_in_case1_at_five() {
        let cat = find_exceptions(5).unwrap();
        assert!(cat.is_consistent());
        assert_eq!(cat.case1.len(), 1);
        assert_eq!(cat.case1[0].graph6, canonical_form(&cycle(5)));
        assert_eq!(cat.case1[0].odd_cycle.as_ref().map(Vec::len), Some(5));
        assert!(cat.case2.is_empty());
    }

    #[test]
    fn order_cap() {
        assert!(find_exceptions(11).is_err());
    }
}
