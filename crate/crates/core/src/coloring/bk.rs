//! Coloring connected 2K₂-free graphs with `max(ω, Δ − 1)` colors.
//!
//! For Δ ≥ 5 a maximum clique is colored first, then the remaining vertices
//! are added one at a time (most saturated first) through the repair ladder
//! of [`extend_coloring`]. If the ladder ever gets stuck the whole graph is
//! recolored by exact search and the event is counted as a fallback.
//!
//! For Δ ≤ 4 the bound can fail, so the coloring is computed exactly and the
//! graph is labeled with the exceptional family it belongs to.

use serde::Serialize;

use super::repair::{extend_coloring, Extension, RepairStats, DEFAULT_DEPTH};
use super::Coloring;
use crate::error::ColoringError;
use crate::invariants::{find_induced_2k2, is_k_colorable, max_clique};
use crate::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BkOptions {
    /// Longest repair sequence the multiswap rule may try.
    pub depth: usize,
    /// Palette size to use instead of `max(ω, Δ − 1)`.
    pub palette: Option<usize>,
}

impl Default for BkOptions {
    fn default() -> Self {
        BkOptions {
            depth: DEFAULT_DEPTH,
            palette: None,
        }
    }
}

/// The two families of 2K₂-free graphs with `χ > max(ω, Δ − 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionFamily {
    /// Δ ≤ 3, ω = 2, χ = 3: graphs with an induced odd cycle.
    LowDegreeOddCycle,
    /// Δ = 4 = χ, ω = 3.
    DegreeFour,
    /// A violation matching neither family.
    Unclassified,
}

impl ExceptionFamily {
    pub fn classify(delta: usize, omega: usize, chi: usize) -> Self {
        if delta <= 3 && omega == 2 && chi == 3 {
            ExceptionFamily::LowDegreeOddCycle
        } else if delta == 4 && chi == 4 && omega == 3 {
            ExceptionFamily::DegreeFour
        } else {
            ExceptionFamily::Unclassified
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BkOutcome {
    pub coloring: Coloring,
    pub stats: RepairStats,
    pub delta: usize,
    pub omega: usize,
    /// `max(ω, Δ − 1)`.
    pub bound: usize,
    /// Palette the coloring was built in.
    pub palette: usize,
    /// Vertices at which the repair ladder got stuck before the fallback.
    pub stuck_at: Vec<usize>,
    /// Set when Δ ≤ 4 and χ exceeds the bound.
    pub family: Option<ExceptionFamily>,
}

pub fn bk_color(g: &Graph) -> Result<BkOutcome, ColoringError> {
    bk_color_with(g, BkOptions::default())
}

pub fn bk_color_with(g: &Graph, opts: BkOptions) -> Result<BkOutcome, ColoringError> {
    if !g.is_connected() {
        return Err(ColoringError::Disconnected);
    }
    if let Some(w) = find_induced_2k2(g) {
        return Err(ColoringError::Not2K2Free(w));
    }
    let n = g.n();
    let delta = g.max_degree();
    let clique = max_clique(g);
    let omega = clique.len();
    let bound = omega.max(delta.saturating_sub(1));
    let mut outcome = BkOutcome {
        coloring: Coloring::uncolored(n, bound),
        stats: RepairStats::default(),
        delta,
        omega,
        bound,
        palette: bound,
        stuck_at: Vec::new(),
        family: None,
    };

    if delta <= 4 && opts.palette.is_none() {
        let (k, coloring) = [bound, delta, delta + 1]
            .into_iter()
            .filter(|&k| k >= bound)
            .find_map(|k| is_k_colorable(g, k).map(|c| (k, c)))
            .expect("Brooks: every graph is (Δ + 1)-colorable");
        outcome.palette = k;
        outcome.coloring = coloring;
        if k > bound {
            outcome.family = Some(ExceptionFamily::classify(delta, omega, k));
        }
        return Ok(outcome);
    }

    let k = opts.palette.unwrap_or(bound);
    outcome.palette = k;
    if omega > k {
        return Err(ColoringError::NotColorable(k));
    }
    let mut c = Coloring::uncolored(n, k);
    for (color, v) in clique.iter().enumerate() {
        c.set(v, color);
    }
    c.set_palette(k);

    while let Some(u) = most_saturated(g, &c) {
        let ext = extend_coloring(g, &c, u, k, opts.depth)?;
        outcome.stats.merge(&ext.stats());
        match ext {
            Extension::Extended { coloring, .. } => c = coloring,
            Extension::Stuck { .. } => {
                outcome.stuck_at.push(u);
                outcome.stats.fallback_count += 1;
                c = is_k_colorable(g, k).ok_or(ColoringError::NotColorable(k))?;
                break;
            }
        }
    }
    c.set_palette(k);
    outcome.coloring = c;
    Ok(outcome)
}

/// The uncolored vertex seeing the most distinct colors; ties go to the
/// lowest id.
fn most_saturated(g: &Graph, c: &Coloring) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for v in (0..g.n()).filter(|&v| c.get(v).is_none()) {
        let sat = c
            .colors_present(g.neighbors(v).iter())
            .iter()
            .filter(|&&p| p)
            .count();
        if best.is_none_or(|(_, s)| sat > s) {
            best = Some((v, sat));
        }
    }
    best.map(|(v, _)| v)
}
