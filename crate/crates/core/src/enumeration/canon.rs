//! Canonical labeling by individualization and refinement.
//!
//! The search tree starts from the equitable refinement of the unit
//! partition. At each node the first smallest non-singleton cell is split by
//! individualizing each of its vertices in turn, followed by refinement.
//! Every leaf is a discrete partition, i.e. a relabeling; the canonical one
//! is the leaf whose graph6-ordered adjacency bits are lexicographically
//! least. Two leaves with equal bits yield an automorphism, and
//! automorphisms fixing the current path prune sibling branches in the same
//! orbit. Transpositions of twin vertices are seeded as known automorphisms.
//!
//! Works on adjacency masks, so graphs are limited to 64 vertices.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::codec::graph6;
use crate::Graph;

/// graph6 of the canonically relabeled graph. Equal forms ⇔ isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let masks = g
        .masks()
        .expect("canonical forms support at most 64 vertices");
    let labeling = canonical_labeling_masks(&masks);
    CanonicalForm(graph6::encode(&Graph::from_masks(&relabel_masks(
        &masks, &labeling,
    ))))
}

/// `labeling[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let masks = g
        .masks()
        .expect("canonical forms support at most 64 vertices");
    canonical_labeling_masks(&masks)
}

pub(crate) fn relabel_masks(masks: &[u64], labeling: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; masks.len()];
    for (v, &m) in masks.iter().enumerate() {
        let mut rest = m;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out[labeling[v]] |= 1 << labeling[w];
        }
    }
    out
}

pub(crate) fn canonical_labeling_masks(masks: &[u64]) -> Vec<usize> {
    let n = masks.len();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search {
        masks,
        n,
        best: None,
        automorphisms: twin_transpositions(masks),
    };
    let mut root = vec![(0..n).collect::<Vec<_>>()];
    refine(masks, &mut root);
    let mut path = Vec::new();
    search.explore(root, &mut path);
    search.best.expect("the search reaches at least one leaf").1
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    masks: &'a [u64],
    n: usize,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, partition: Partition, path: &mut Vec<usize>) {
        if partition.len() == self.n {
            self.leaf(&partition);
            return;
        }
        let (target_idx, target) = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, c)| (i, c.clone()))
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() && self.same_orbit_as_explored(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = partition.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&w| w != v).collect();
            child.splice(target_idx..=target_idx, [vec![v], rest]);
            refine(self.masks, &mut child);
            path.push(v);
            self.explore(child, path);
            path.pop();
        }
    }

    fn leaf(&mut self, partition: &Partition) {
        let mut labeling = vec![0; self.n];
        for (pos, cell) in partition.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let code = encode_bits(self.masks, partition);
        match &self.best {
            None => self.best = Some((code, labeling)),
            Some((best_code, best_labeling)) => match code.cmp(best_code) {
                std::cmp::Ordering::Less => self.best = Some((code, labeling)),
                std::cmp::Ordering::Equal => {
                    let mut at_position = vec![0; self.n];
                    for (v, &p) in best_labeling.iter().enumerate() {
                        at_position[p] = v;
                    }
                    let auto: Vec<usize> = labeling.iter().map(|&p| at_position[p]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(auto);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the group
    /// generated by known automorphisms that fix `path` pointwise.
    fn same_orbit_as_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for auto in &self.automorphisms {
            if path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            for (x, &y) in auto.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }
}

/// Adjacency bits of the relabeled graph in graph6 order, packed MSB first.
fn encode_bits(masks: &[u64], partition: &Partition) -> Vec<u64> {
    let n = masks.len();
    let bits = n * (n - 1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        let col = masks[partition[j][0]];
        for cell in &partition[..j] {
            if col & (1 << cell[0]) != 0 {
                code[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    code
}

/// Splits cells by neighbor counts into other cells until the partition is
/// equitable. Subcells are ordered by increasing count, which keeps the
/// result independent of vertex names.
fn refine(masks: &[u64], partition: &mut Partition) {
    let mut splitter = 0;
    while splitter < partition.len() {
        let w_mask = partition[splitter].iter().fold(0u64, |m, &v| m | 1 << v);
        let mut changed = false;
        let mut i = 0;
        while i < partition.len() {
            if partition[i].len() > 1 {
                let counts: Vec<u32> = partition[i]
                    .iter()
                    .map(|&v| (masks[v] & w_mask).count_ones())
                    .collect();
                if counts.iter().any(|&c| c != counts[0]) {
                    let mut keyed: Vec<(u32, usize)> = counts
                        .into_iter()
                        .zip(partition[i].iter().copied())
                        .collect();
                    keyed.sort_unstable();
                    let mut pieces: Vec<Vec<usize>> = Vec::new();
                    let mut last = None;
                    for (c, v) in keyed {
                        if last != Some(c) {
                            pieces.push(Vec::new());
                            last = Some(c);
                        }
                        pieces.last_mut().expect("just pushed").push(v);
                    }
                    let added = pieces.len() - 1;
                    partition.splice(i..=i, pieces);
                    i += added;
                    changed = true;
                }
            }
            i += 1;
        }
        // any split can make an earlier splitter useful again
        splitter = if changed { 0 } else { splitter + 1 };
    }
}

fn twin_transpositions(masks: &[u64]) -> Vec<Vec<usize>> {
    let n = masks.len();
    let mut out = Vec::new();
    let mut done = vec![false; n];
    for a in 0..n {
        if done[a] {
            continue;
        }
        for b in a + 1..n {
            let strip = !(1u64 << a | 1u64 << b);
            if !done[b] && masks[a] & strip == masks[b] & strip {
                done[b] = true;
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(a, b);
                out.push(t);
            }
        }
    }
    out
}
