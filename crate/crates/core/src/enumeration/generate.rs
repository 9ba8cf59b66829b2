//! Isomorph-free generation of connected graphs by canonical augmentation.
//!
//! A graph `G` on `n` vertices is produced from its canonical parent
//! `G − w`, where `w` is the non-cut vertex of minimum degree (among non-cut
//! vertices) with the largest canonical label. Each parent on `n − 1`
//! vertices is extended by one new vertex joined to every nonempty subset,
//! and a child is kept iff the new vertex can play the role of `w`. Since
//! parents are pairwise non-isomorphic, each class appears exactly once,
//! after removing repeats that come from the same parent.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_labeling_masks, relabel_masks};
use crate::error::EnumError;
use crate::invariants::{last_vertex_in_2k2, low_bits};
use crate::Graph;

/// Largest order the generator accepts.
pub const MAX_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClassFilter {
    #[default]
    All,
    /// Only graphs without an induced 2K₂. The class is hereditary, so
    /// filtering each level keeps every canonical parent.
    TwoK2Free,
}

/// All connected graphs on `n` vertices, one per isomorphism class, each in
/// canonical labeling. Runs on the current rayon pool.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>, EnumError> {
    generate_connected_filtered(n, ClassFilter::All)
}

pub fn generate_connected_filtered(n: usize, filter: ClassFilter) -> Result<Vec<Graph>, EnumError> {
    Ok(levels(n, filter)?
        .last()
        .map(|(_, g)| g)
        .unwrap_or_default())
}

/// Iterator over `(n, graphs)` for `n = 1..=n_max`.
pub fn levels(n_max: usize, filter: ClassFilter) -> Result<Levels, EnumError> {
    if n_max == 0 || n_max > MAX_ORDER {
        return Err(EnumError::OrderOutOfRange {
            n: n_max,
            max: MAX_ORDER,
        });
    }
    Ok(Levels {
        filter,
        n_max,
        current: Vec::new(),
        next: 1,
    })
}

pub struct Levels {
    filter: ClassFilter,
    n_max: usize,
    current: Vec<Vec<u64>>,
    next: usize,
}

impl Iterator for Levels {
    type Item = (usize, Vec<Graph>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next > self.n_max {
            return None;
        }
        self.current = if self.next == 1 {
            vec![vec![0]]
        } else {
            let filter = self.filter;
            self.current
                .par_iter()
                .map(|parent| children(parent, filter))
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        };
        let n = self.next;
        self.next += 1;
        let graphs = self.current.iter().map(|m| Graph::from_masks(m)).collect();
        Some((n, graphs))
    }
}

/// Canonical children of a canonically labeled parent, in subset order.
fn children(parent: &[u64], filter: ClassFilter) -> Vec<Vec<u64>> {
    let p = parent.len();
    let v = p;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut masks = parent.to_vec();
    masks.push(0);
    for s in 1u64..1 << p {
        for (x, m) in masks[..p].iter_mut().enumerate() {
            *m = parent[x] | ((s >> x) & 1) << v;
        }
        masks[v] = s;
        if filter == ClassFilter::TwoK2Free && last_vertex_in_2k2(&masks) {
            continue;
        }
        let non_cut = non_cut_vertices(&masks);
        let min_deg = iter_bits(non_cut)
            .map(|x| masks[x].count_ones())
            .min()
            .expect("a connected graph has a non-cut vertex");
        if s.count_ones() != min_deg {
            continue;
        }
        let labeling = canonical_labeling_masks(&masks);
        let w = iter_bits(non_cut)
            .filter(|&x| masks[x].count_ones() == min_deg)
            .max_by_key(|&x| labeling[x])
            .expect("v is a candidate");
        if w != v && !deletion_matches(&masks, w, parent) {
            continue;
        }
        let canon = relabel_masks(&masks, &labeling);
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out
}

/// Whether `G − w`, canonically relabeled, equals the canonical parent.
fn deletion_matches(masks: &[u64], w: usize, parent: &[u64]) -> bool {
    let reduced: Vec<u64> = (0..masks.len())
        .filter(|&x| x != w)
        .map(|x| squeeze(masks[x], w))
        .collect();
    let labeling = canonical_labeling_masks(&reduced);
    relabel_masks(&reduced, &labeling) == parent
}

/// Removes bit `w` and shifts higher bits down.
fn squeeze(m: u64, w: usize) -> u64 {
    let low = m & low_bits(w);
    let high = (m >> 1) & !low_bits(w);
    low | high
}

fn non_cut_vertices(masks: &[u64]) -> u64 {
    let n = masks.len();
    let all = low_bits(n);
    let mut out = 0;
    for x in 0..n {
        let rest = all & !(1 << x);
        if rest == 0 || reach(masks, rest.trailing_zeros() as usize, rest) == rest {
            out |= 1 << x;
        }
    }
    out
}

fn reach(masks: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for x in iter_bits(frontier) {
            next |= masks[x];
        }
        frontier = next & allowed & !seen;
        seen |= frontier;
    }
    seen
}

fn iter_bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}
