//! Vertex colorings, Kempe chains, Brooks-style coloring and the engine that
//! colors 2K₂-free graphs with `max(ω, Δ − 1)` colors.
//!
//! Colors are 0-based throughout.

mod bk;
mod brooks;
mod kempe;
mod repair;

pub use bk::{bk_color, bk_color_with, BkOptions, BkOutcome, ExceptionFamily};
pub use brooks::brooks_color;
pub use kempe::{kempe_component, kempe_swap, KempeChain};
pub use repair::{
    extend_coloring, rule_bounded_multiswap, rule_kempe_extend, rule_unique_recolor, Extension,
    RepairRule, RepairStats, DEFAULT_DEPTH,
};

use serde::{Deserialize, Serialize};

use crate::error::{ColoringError, GraphError};
use crate::Graph;

/// A total or partial assignment of colors `0..palette` to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
    palette: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Validity {
    ProperTotal,
    ProperPartial,
    Improper { edge: (usize, usize) },
}

impl Coloring {
    pub fn uncolored(n: usize, palette: usize) -> Self {
        Coloring {
            colors: vec![None; n],
            palette,
        }
    }

    pub fn from_colors(colors: Vec<Option<usize>>, palette: usize) -> Result<Self, ColoringError> {
        if let Some((vertex, color)) = colors
            .iter()
            .enumerate()
            .find_map(|(v, c)| c.filter(|&c| c >= palette).map(|c| (v, c)))
        {
            return Err(ColoringError::ColorOutOfPalette {
                vertex,
                color,
                palette,
            });
        }
        Ok(Coloring { colors, palette })
    }

    /// A total coloring; the palette is one more than the largest color.
    pub fn from_total(colors: Vec<usize>) -> Self {
        let palette = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
            palette,
        }
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    /// Assigns `color` to `v`, growing the palette when needed.
    pub fn set(&mut self, v: usize, color: usize) {
        self.palette = self.palette.max(color + 1);
        self.colors[v] = Some(color);
    }

    pub fn clear(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn set_palette(&mut self, palette: usize) {
        self.palette = palette;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.colors
    }

    /// Colors of a total coloring; `None` if any vertex is uncolored.
    pub fn to_total(&self) -> Option<Vec<usize>> {
        self.colors.iter().copied().collect()
    }

    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette];
        for c in self.colors.iter().flatten() {
            seen[*c] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// `present[c]` is true iff some vertex of `vertices` has color `c`.
    pub fn colors_present<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Vec<bool> {
        let mut present = vec![false; self.palette];
        for v in vertices {
            if let Some(c) = self.colors[v] {
                present[c] = true;
            }
        }
        present
    }

    /// The least palette color missing from `vertices`.
    pub fn least_missing<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Option<usize> {
        self.colors_present(vertices).iter().position(|&p| !p)
    }
}

pub fn validate_coloring(g: &Graph, c: &Coloring) -> Result<Validity, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::SizeMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    for (v, color) in c.colors.iter().enumerate() {
        if let Some(color) = *color {
            if color >= c.palette {
                return Err(ColoringError::ColorOutOfPalette {
                    vertex: v,
                    color,
                    palette: c.palette,
                });
            }
        }
    }
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (c.get(u), c.get(v)) {
            if a == b {
                return Ok(Validity::Improper { edge: (u, v) });
            }
        }
    }
    Ok(if c.is_total() {
        Validity::ProperTotal
    } else {
        Validity::ProperPartial
    })
}

/// Colors vertices in `order`, each with the least color missing from its
/// already-colored neighbors.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Result<Coloring, GraphError> {
    crate::graph::check_permutation(order, g.n())?;
    let mut c = Coloring::uncolored(g.n(), 0);
    for &v in order {
        let mut used = vec![false; g.degree(v) + 1];
        for w in g.neighbors(v) {
            if let Some(color) = c.get(w) {
                if color < used.len() {
                    used[color] = true;
                }
            }
        }
        let color = used.iter().position(|&u| !u).expect("degree + 1 slots");
        c.set(v, color);
    }
    Ok(c)
}
