//! Exact structural oracles: induced 2K₂ detection, clique number, chromatic
//! number and recognition of the special graphs (complete graphs, cycles, W₆).

use std::collections::VecDeque;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::{Graph, VertexSet};

/// Four vertices inducing exactly the edges `{a, b}` and `{c, d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Induced2K2Witness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// The lexicographically least induced 2K₂ `(a, b, c, d)` with `a < b`,
/// `c < d` and `a < c`, if any.
pub fn find_induced_2k2(g: &Graph) -> Option<Induced2K2Witness> {
    for (a, b) in g.edges() {
        // vertices adjacent to neither endpoint, above a
        let blocked = g.closed_neighborhood(a).union(&g.closed_neighborhood(b));
        let free: VertexSet = (a + 1..g.n()).filter(|&v| !blocked.contains(v)).collect();
        for c in free.iter() {
            if let Some(d) = g.neighbors(c).iter().find(|&d| d > c && free.contains(d)) {
                return Some(Induced2K2Witness { a, b, c, d });
            }
        }
    }
    None
}

pub fn is_2k2_free(g: &Graph) -> bool {
    if let Some(masks) = g.masks() {
        return is_2k2_free_masks(&masks);
    }
    find_induced_2k2(g).is_none()
}

pub(crate) fn is_2k2_free_masks(masks: &[u64]) -> bool {
    let all = low_bits(masks.len());
    for a in 0..masks.len() {
        let mut higher = masks[a] & !low_bits(a + 1);
        while higher != 0 {
            let b = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            let free = all & !(masks[a] | masks[b] | 1 << a | 1 << b);
            if has_edge_inside(masks, free) {
                return false;
            }
        }
    }
    true
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
fn has_edge_inside(masks: &[u64], set: u64) -> bool {
    let mut rest = set;
    while rest != 0 {
        let c = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if masks[c] & set != 0 {
            return true;
        }
    }
    false
}

/// True iff the last vertex of `masks` lies on an induced 2K₂. Used to
/// extend a 2K₂-free graph by one vertex.
pub(crate) fn last_vertex_in_2k2(masks: &[u64]) -> bool {
    let n = masks.len();
    let v = n - 1;
    let all = low_bits(n);
    let mut nbrs = masks[v];
    while nbrs != 0 {
        let x = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        let free = all & !(masks[v] | masks[x] | 1 << v | 1 << x);
        if has_edge_inside(masks, free) {
            return true;
        }
    }
    false
}

/// True iff some clique of `need` vertices lies inside `cand`.
fn has_clique(g: &Graph, cand: &VertexSet, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if cand.len() < need || greedy_color_bound(g, cand) < need {
        return false;
    }
    let mut rest = cand.clone();
    for v in cand.iter() {
        if rest.len() < need {
            return false;
        }
        rest.remove(v);
        if has_clique(g, &rest.intersection(g.neighbors(v)), need - 1) {
            return true;
        }
    }
    false
}

/// Number of color classes in a greedy sequential coloring of ⟨cand⟩; an
/// upper bound on the clique number of ⟨cand⟩.
fn greedy_color_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut uncolored = cand.clone();
    let mut classes = 0;
    while !uncolored.is_empty() {
        classes += 1;
        let mut available = uncolored.clone();
        while let Some(v) = available.first() {
            available.remove(v);
            available = available.difference(g.neighbors(v));
            uncolored.remove(v);
        }
    }
    classes
}

/// The lexicographically least maximum clique, as a sorted vertex set.
pub fn max_clique(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut omega = usize::from(g.n() > 0);
    while has_clique(g, &all, omega + 1) {
        omega += 1;
    }
    let mut chosen = VertexSet::new();
    let mut cand = all;
    while chosen.len() < omega {
        let need = omega - chosen.len() - 1;
        let pick = cand
            .iter()
            .find(|&v| {
                let above: VertexSet = cand.iter().filter(|&w| w > v).collect();
                has_clique(g, &above.intersection(g.neighbors(v)), need)
            })
            .expect("a clique of size omega exists");
        chosen.insert(pick);
        cand = cand
            .intersection(g.neighbors(pick))
            .iter()
            .filter(|&w| w > pick)
            .collect();
    }
    chosen
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Exact k-colorability by backtracking. A maximum clique is pre-colored
/// `0..ω`, the remaining vertices are chosen by saturation (ties: lowest id)
/// and fresh colors are only tried in increasing order.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    ColorSearch::new(g, k).run()
}

struct ColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<Option<usize>>,
    // neighbor_color_count[v * k + c]: colored neighbors of v with color c
    neighbor_color_count: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'a> ColorSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        ColorSearch {
            g,
            k,
            colors: vec![None; g.n()],
            neighbor_color_count: vec![0; g.n() * k],
            saturation: vec![0; g.n()],
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for w in self.g.neighbors(v) {
            let slot = &mut self.neighbor_color_count[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for w in self.g.neighbors(v) {
            let slot = &mut self.neighbor_color_count[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn run(mut self) -> Option<Coloring> {
        let n = self.g.n();
        if n == 0 {
            return Some(Coloring::uncolored(0, self.k));
        }
        let clique = max_clique(self.g);
        if clique.len() > self.k {
            return None;
        }
        for (c, v) in clique.iter().enumerate() {
            self.assign(v, c);
        }
        let used = clique.len();
        if self.search(n - used, used) {
            let colors = self.colors.into_iter().collect::<Option<Vec<_>>>()?;
            let mut coloring = Coloring::from_total(colors);
            coloring.set_palette(self.k);
            Some(coloring)
        } else {
            None
        }
    }

    fn search(&mut self, remaining: usize, used: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut best: Option<usize> = None;
        for v in 0..self.g.n() {
            if self.colors[v].is_none()
                && best.is_none_or(|b| self.saturation[v] > self.saturation[b])
            {
                best = Some(v);
            }
        }
        let v = best.expect("an uncolored vertex remains");
        if self.saturation[v] >= self.k {
            return false;
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.neighbor_color_count[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(remaining - 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// χ by iterative deepening from ω.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut k = clique_number(g);
    while is_k_colorable(g, k).is_none() {
        k += 1;
    }
    k
}

/// χ together with an optimal coloring.
pub fn optimal_coloring(g: &Graph) -> (usize, Coloring) {
    let mut k = clique_number(g);
    loop {
        if let Some(c) = is_k_colorable(g, k) {
            return (k, c);
        }
        k += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialTag {
    Complete,
    OddCycle,
    C5,
    W6,
    EvenCycle,
    Other,
}

/// Recognized special shapes; cycles carry their vertices in cyclic order,
/// W₆ its hub and rim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "tag")]
pub enum SpecialClass {
    Complete,
    OddCycle { order: Vec<usize> },
    C5 { order: [usize; 5] },
    W6 { hub: usize, rim: [usize; 5] },
    EvenCycle { order: Vec<usize> },
    Other,
}

impl SpecialClass {
    pub fn tag(&self) -> SpecialTag {
        match self {
            SpecialClass::Complete => SpecialTag::Complete,
            SpecialClass::OddCycle { .. } => SpecialTag::OddCycle,
            SpecialClass::C5 { .. } => SpecialTag::C5,
            SpecialClass::W6 { .. } => SpecialTag::W6,
            SpecialClass::EvenCycle { .. } => SpecialTag::EvenCycle,
            SpecialClass::Other => SpecialTag::Other,
        }
    }

    /// Complete graphs and odd cycles (C₅ included): the Brooks exceptions.
    pub fn is_brooks_exception(&self) -> bool {
        matches!(
            self,
            SpecialClass::Complete | SpecialClass::OddCycle { .. } | SpecialClass::C5 { .. }
        )
    }
}

pub fn classify_special(g: &Graph) -> SpecialClass {
    let n = g.n();
    if n >= 1 && g.edge_count() == n * (n - 1) / 2 {
        return SpecialClass::Complete;
    }
    if let Some(order) = cycle_order(g) {
        return match order.len() {
            5 => SpecialClass::C5 {
                order: order.try_into().expect("five vertices"),
            },
            len if len % 2 == 1 => SpecialClass::OddCycle { order },
            _ => SpecialClass::EvenCycle { order },
        };
    }
    if n == 6 {
        let hubs: Vec<usize> = (0..6).filter(|&v| g.degree(v) == 5).collect();
        if let [hub] = hubs[..] {
            let rim_graph = g.remove_vertex(hub).expect("hub in range");
            if let Some(order) = cycle_order(&rim_graph).filter(|o| o.len() == 5) {
                let rim: Vec<usize> = order
                    .into_iter()
                    .map(|v| if v >= hub { v + 1 } else { v })
                    .collect();
                return SpecialClass::W6 {
                    hub,
                    rim: rim.try_into().expect("five rim vertices"),
                };
            }
        }
    }
    SpecialClass::Other
}

/// Cyclic vertex order if `g` is a connected 2-regular graph.
fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || g.edge_count() != n || (0..n).any(|v| g.degree(v) != 2) || !g.is_connected() {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0).first()?;
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).iter().find(|&w| w != prev)?;
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// A shortest odd cycle in cyclic order, or `None` for bipartite graphs. A
/// shortest odd cycle has no chords, so the result is an induced cycle.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if dist[w] == dist[v] && v < w {
                    // an edge inside a BFS layer closes an odd closed walk
                    let len = 2 * dist[v] + 1;
                    if best.as_ref().is_some_and(|b| b.len() <= len) {
                        continue;
                    }
                    let path_to = |mut x: usize| {
                        let mut p = vec![x];
                        while x != root {
                            x = parent[x];
                            p.push(x);
                        }
                        p
                    };
                    let (pv, pw) = (path_to(v), path_to(w));
                    // only simple when the two tree paths meet at the root
                    if pv[..pv.len() - 1].iter().any(|x| pw.contains(x)) {
                        continue;
                    }
                    let mut cycle: Vec<usize> = pv.into_iter().rev().collect();
                    cycle.extend(pw[..pw.len() - 1].iter());
                    best = Some(cycle);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{validate_coloring, Validity};
    use crate::graph::families::*;

    fn brute_2k2(g: &Graph) -> bool {
        let n = g.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                        if distinct
                            && g.has_edge(a, b)
                            && g.has_edge(c, d)
                            && !g.has_edge(a, c)
                            && !g.has_edge(a, d)
                            && !g.has_edge(b, c)
                            && !g.has_edge(b, d)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn two_k2_witnesses() {
        let w = |a, b, c, d| Some(Induced2K2Witness { a, b, c, d });
        assert_eq!(find_induced_2k2(&path(5)), w(0, 1, 3, 4));
        assert_eq!(find_induced_2k2(&cycle(5)), None);
        assert_eq!(find_induced_2k2(&cycle(6)), w(0, 1, 3, 4));
        assert_eq!(find_induced_2k2(&two_k2()), w(0, 1, 2, 3));
        assert!(is_2k2_free(&wheel(5)));
        assert!(!is_2k2_free(&cycle(7)));
        assert!(is_2k2_free(&cycle(7).complement()));
        for g in [path(5), cycle(5), cycle(6), wheel(5), petersen()] {
            assert_eq!(is_2k2_free(&g), !brute_2k2(&g));
            assert_eq!(find_induced_2k2(&g).is_none(), !brute_2k2(&g));
        }
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&complete(5)), 5);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        // W6: hub plus a rim edge; the rim has no triangle
        let q = max_clique(&wheel(5));
        assert_eq!(q.iter().collect::<Vec<_>>(), vec![0, 1, 5]);
    }

    #[test]
    fn w6_clique_number_by_enumeration() {
        let g = wheel(5);
        let mut best = 0;
        for mask in 0u32..64 {
            let vs: Vec<usize> = (0..6).filter(|&v| mask & (1 << v) != 0).collect();
            let clique = vs
                .iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if clique {
                best = best.max(vs.len());
            }
        }
        assert_eq!(best, 3);
        assert_eq!(clique_number(&g), best);
    }

    #[test]
    fn k_colorability() {
        assert!(is_k_colorable(&cycle(5), 2).is_none());
        let c = is_k_colorable(&cycle(5), 3).unwrap();
        assert_eq!(validate_coloring(&cycle(5), &c), Ok(Validity::ProperTotal));
        let p = petersen();
        let c = is_k_colorable(&p, 3).unwrap();
        assert_eq!(validate_coloring(&p, &c), Ok(Validity::ProperTotal));
        assert!(is_k_colorable(&p, 2).is_none());
        assert!(is_k_colorable(&complete(3), 0).is_none());
        assert!(is_k_colorable(&Graph::empty(0), 0).is_some());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&complete(6)), 6);
        assert_eq!(chromatic_number(&wheel(5)), 4);
        assert_eq!(chromatic_number(&cycle(7).complement()), 4);
        assert_eq!(chromatic_number(&petersen()), 3);
        assert_eq!(chromatic_number(&Graph::empty(4)), 1);
    }

    #[test]
    fn special_classes() {
        assert_eq!(classify_special(&complete(7)), SpecialClass::Complete);
        assert_eq!(classify_special(&complete(3)), SpecialClass::Complete);
        assert_eq!(classify_special(&cycle(9)).tag(), SpecialTag::OddCycle);
        assert_eq!(
            classify_special(&cycle(5)),
            SpecialClass::C5 {
                order: [0, 1, 2, 3, 4]
            }
        );
        assert_eq!(classify_special(&cycle(6)).tag(), SpecialTag::EvenCycle);
        assert_eq!(
            classify_special(&wheel(5)),
            SpecialClass::W6 {
                hub: 5,
                rim: [0, 1, 2, 3, 4]
            }
        );
        // hub relabeled to 0
        let relabeled = wheel(5).permuted(&[1, 2, 3, 4, 5, 0]).unwrap();
        assert_eq!(
            classify_special(&relabeled),
            SpecialClass::W6 {
                hub: 0,
                rim: [1, 2, 3, 4, 5]
            }
        );
        assert_eq!(classify_special(&path(4)), SpecialClass::Other);
        assert_eq!(classify_special(&wheel(6)), SpecialClass::Other);
        assert_eq!(classify_special(&Graph::empty(0)), SpecialClass::Other);
    }

    #[test]
    fn odd_cycles() {
        assert_eq!(shortest_odd_cycle(&cycle(6)), None);
        assert_eq!(shortest_odd_cycle(&cycle(7)).unwrap().len(), 7);
        assert_eq!(shortest_odd_cycle(&wheel(5)).unwrap().len(), 3);
        assert_eq!(shortest_odd_cycle(&petersen()).unwrap().len(), 5);
        let c = shortest_odd_cycle(&cycle(5)).unwrap();
        let mut sorted = c.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
        for i in 0..5 {
            assert!(cycle(5).has_edge(c[i], c[(i + 1) % 5]));
        }
    }
}
