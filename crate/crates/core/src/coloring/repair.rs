//! Extending a proper partial coloring to one more vertex `u` when every
//! palette color already appears on `N(u)`.
//!
//! The rules form a ladder of increasing cost:
//!
//! 1. greedy: `u` takes a color missing from `N(u)`;
//! 2. unique recolor: a neighbor `v` holding color `i` alone in `N(u)` moves
//!    to a color missing from `N̄(v)`, and `u` takes `i`;
//! 3. Kempe extend: swapping one Kempe chain frees a color on `N(u)`;
//! 4. bounded multiswap: breadth-first search over short sequences of single
//!    recolorings and Kempe swaps near `u` until a color is free on `N(u)`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::kempe::{chain_unchecked, swap_in_place};
use super::{validate_coloring, Coloring, Validity};
use crate::error::ColoringError;
use crate::{Graph, VertexSet};

/// Search depth of the multiswap rule unless configured otherwise.
pub const DEFAULT_DEPTH: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepairRule {
    Greedy,
    UniqueRecolor,
    KempeExtend,
    BoundedMultiswap,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairStats {
    pub greedy: u64,
    pub unique_recolor: u64,
    pub kempe_extend: u64,
    pub bounded_multiswap: u64,
    /// Extensions the rules could not resolve, settled by exact search.
    pub fallback_count: u64,
    /// Longest multiswap move sequence that succeeded.
    pub max_search_depth_used: usize,
}

impl RepairStats {
    pub fn record(&mut self, rule: RepairRule, depth: usize) {
        match rule {
            RepairRule::Greedy => self.greedy += 1,
            RepairRule::UniqueRecolor => self.unique_recolor += 1,
            RepairRule::KempeExtend => self.kempe_extend += 1,
            RepairRule::BoundedMultiswap => self.bounded_multiswap += 1,
        }
        self.max_search_depth_used = self.max_search_depth_used.max(depth);
    }

    pub fn merge(&mut self, other: &RepairStats) {
        self.greedy += other.greedy;
        self.unique_recolor += other.unique_recolor;
        self.kempe_extend += other.kempe_extend;
        self.bounded_multiswap += other.bounded_multiswap;
        self.fallback_count += other.fallback_count;
        self.max_search_depth_used = self.max_search_depth_used.max(other.max_search_depth_used);
    }

    pub fn extensions(&self) -> u64 {
        self.greedy + self.unique_recolor + self.kempe_extend + self.bounded_multiswap
    }
}

/// One step of a multiswap repair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "move")]
pub enum RepairMove {
    Recolor {
        vertex: usize,
        from: usize,
        to: usize,
    },
    KempeSwap {
        anchor: usize,
        colors: (usize, usize),
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repair {
    pub coloring: Coloring,
    pub moves: Vec<RepairMove>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    Extended {
        coloring: Coloring,
        rule: RepairRule,
        /// Moves made before coloring `u`: 0 for greedy, 1 for the single
        /// recolor or swap rules, the sequence length for multiswap.
        depth: usize,
    },
    /// No rule applied; carries the input coloring unchanged.
    Stuck { partial: Coloring },
}

impl Extension {
    pub fn stats(&self) -> RepairStats {
        let mut stats = RepairStats::default();
        match self {
            Extension::Extended { rule, depth, .. } => stats.record(*rule, *depth),
            Extension::Stuck { .. } => {}
        }
        stats
    }
}

fn check_target(g: &Graph, c: &Coloring, u: usize) -> Result<(), ColoringError> {
    g.check_vertex(u)?;
    if c.len() != g.n() {
        return Err(ColoringError::SizeMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    if c.get(u).is_some() {
        return Err(ColoringError::AlreadyColored(u));
    }
    Ok(())
}

/// Single recolor: some `v ∈ N(u)` is the only holder of its color `i` on
/// `N(u)` and a color `r` is missing from `N̄(v)`; recolor `v ← r`, `u ← i`.
pub fn rule_unique_recolor(
    g: &Graph,
    c: &Coloring,
    u: usize,
) -> Result<Option<Coloring>, ColoringError> {
    check_target(g, c, u)?;
    let mut holders = vec![0usize; c.palette()];
    for v in g.neighbors(u) {
        if let Some(i) = c.get(v) {
            holders[i] += 1;
        }
    }
    for v in g.neighbors(u) {
        let Some(i) = c.get(v) else { continue };
        if holders[i] != 1 {
            continue;
        }
        let closed = g.neighbors(v).iter().chain([v]);
        if let Some(r) = c.least_missing(closed) {
            let mut out = c.clone();
            out.set(v, r);
            out.set(u, i);
            return Ok(Some(out));
        }
    }
    Ok(None)
}

/// Frees a color `i` on `N(u)` with one Kempe swap: the {i, j}-chain through
/// the least `i`-holder of `N(u)` must hold every `i`-holder and no
/// `j`-holder of `N(u)`. Pairs are scanned in increasing `(i, j)` order.
pub fn rule_kempe_extend(
    g: &Graph,
    c: &Coloring,
    u: usize,
) -> Result<Option<Coloring>, ColoringError> {
    check_target(g, c, u)?;
    let k = c.palette();
    let nbrs = g.neighbors(u);
    for i in 0..k {
        let holders_i: Vec<usize> = nbrs.iter().filter(|&v| c.get(v) == Some(i)).collect();
        let Some(&anchor) = holders_i.first() else {
            continue;
        };
        for j in (0..k).filter(|&j| j != i) {
            let chain = chain_unchecked(g, c, anchor, i, j);
            let frees_i = holders_i.iter().all(|&v| chain.contains(v))
                && !nbrs
                    .iter()
                    .any(|v| c.get(v) == Some(j) && chain.contains(v));
            if frees_i {
                let mut out = c.clone();
                swap_in_place(&mut out, &chain);
                out.set(u, i);
                return Ok(Some(out));
            }
        }
    }
    Ok(None)
}

/// Breadth-first search over sequences of at most `depth` moves, each either
/// a recoloring of a vertex near `u` to a color missing from its closed
/// neighborhood or a Kempe swap of a chain through a neighbor of `u`. Stops
/// at the first coloring with a color free on `N(u)` and gives `u` the least
/// such color.
///
/// Recolorable vertices are those within distance two of `u` plus members of
/// chains swapped earlier in the sequence.
pub fn rule_bounded_multiswap(
    g: &Graph,
    c: &Coloring,
    u: usize,
    depth: usize,
) -> Result<Option<Repair>, ColoringError> {
    check_target(g, c, u)?;
    let k = c.palette();
    let nbrs = g.neighbors(u);
    let finish = |mut col: Coloring, moves: Vec<RepairMove>| {
        col.least_missing(nbrs.iter()).map(|free| {
            col.set(u, free);
            Repair {
                coloring: col,
                moves,
            }
        })
    };
    if let Some(done) = finish(c.clone(), Vec::new()) {
        return Ok(Some(done));
    }

    let dist = g.distances_from(u);
    let ball: VertexSet = (0..g.n())
        .filter(|&v| v != u && dist[v].is_some_and(|d| d <= 2))
        .collect();

    struct Node {
        coloring: Coloring,
        moves: Vec<RepairMove>,
        region: VertexSet,
    }

    let mut seen: HashSet<Vec<Option<usize>>> = HashSet::new();
    seen.insert(c.as_slice().to_vec());
    let mut queue = VecDeque::from([Node {
        coloring: c.clone(),
        moves: Vec::new(),
        region: ball,
    }]);

    while let Some(node) = queue.pop_front() {
        if node.moves.len() >= depth {
            continue;
        }
        let mut children: Vec<(Coloring, RepairMove, Option<VertexSet>)> = Vec::new();

        for w in node.region.iter() {
            let Some(from) = node.coloring.get(w) else {
                continue;
            };
            let present = node.coloring.colors_present(g.neighbors(w).iter());
            for to in (0..k).filter(|&r| r != from && !present[r]) {
                let mut next = node.coloring.clone();
                next.set(w, to);
                children.push((
                    next,
                    RepairMove::Recolor {
                        vertex: w,
                        from,
                        to,
                    },
                    None,
                ));
            }
        }
        for x in nbrs.iter() {
            let Some(cx) = node.coloring.get(x) else {
                continue;
            };
            for j in (0..k).filter(|&j| j != cx) {
                let chain = chain_unchecked(g, &node.coloring, x, cx, j);
                let mut next = node.coloring.clone();
                swap_in_place(&mut next, &chain);
                let mv = RepairMove::KempeSwap {
                    anchor: x,
                    colors: chain.colors,
                };
                children.push((next, mv, Some(chain.vertices)));
            }
        }

        for (next, mv, chain) in children {
            if !seen.insert(next.as_slice().to_vec()) {
                continue;
            }
            let mut moves = node.moves.clone();
            moves.push(mv);
            if next.least_missing(nbrs.iter()).is_some() {
                return Ok(finish(next, moves));
            }
            let region = match chain {
                Some(members) => node.region.union(&members),
                None => node.region.clone(),
            };
            queue.push_back(Node {
                coloring: next,
                moves,
                region,
            });
        }
    }
    Ok(None)
}

/// Colors `u` within a palette of `k` colors, trying greedy, unique recolor,
/// Kempe extend and bounded multiswap (up to `depth` moves) in that order.
/// Vertices other than `u` may be uncolored; they are ignored.
pub fn extend_coloring(
    g: &Graph,
    c: &Coloring,
    u: usize,
    k: usize,
    depth: usize,
) -> Result<Extension, ColoringError> {
    check_target(g, c, u)?;
    let mut base = Coloring::from_colors(c.as_slice().to_vec(), k)?;
    base.set_palette(k);
    if let Validity::Improper { edge: (a, b) } = validate_coloring(g, &base)? {
        return Err(ColoringError::Improper(a, b));
    }

    if let Some(free) = base.least_missing(g.neighbors(u).iter()) {
        let mut out = base;
        out.set(u, free);
        return Ok(Extension::Extended {
            coloring: out,
            rule: RepairRule::Greedy,
            depth: 0,
        });
    }
    if let Some(out) = rule_unique_recolor(g, &base, u)? {
        return Ok(Extension::Extended {
            coloring: out,
            rule: RepairRule::UniqueRecolor,
            depth: 1,
        });
    }
    if let Some(out) = rule_kempe_extend(g, &base, u)? {
        return Ok(Extension::Extended {
            coloring: out,
            rule: RepairRule::KempeExtend,
            depth: 1,
        });
    }
    if let Some(repair) = rule_bounded_multiswap(g, &base, u, depth)? {
        return Ok(Extension::Extended {
            depth: repair.moves.len(),
            coloring: repair.coloring,
            rule: RepairRule::BoundedMultiswap,
        });
    }
    Ok(Extension::Stuck { partial: base })
}
