//! Constructive Brooks coloring: Δ colors for every connected graph other
//! than a complete graph or an odd cycle (which get Δ + 1).

use std::collections::VecDeque;

use super::{greedy_color, Coloring};
use crate::error::ColoringError;
use crate::invariants::{classify_special, is_k_colorable};
use crate::{Graph, VertexSet};

pub fn brooks_color(g: &Graph) -> Result<Coloring, ColoringError> {
    if !g.is_connected() {
        return Err(ColoringError::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(Coloring::uncolored(0, 0));
    }
    let identity: Vec<usize> = (0..n).collect();
    if classify_special(g).is_brooks_exception() {
        return Ok(greedy_color(g, &identity)?);
    }
    let delta = g.max_degree();
    if delta <= 2 {
        return Ok(two_color(g));
    }

    let cuts = g.cut_vertices();
    if let Some(cut) = cuts.first() {
        return color_through_cut_vertex(g, cut);
    }
    if let Some(root) = (0..n).find(|&v| g.degree(v) < delta) {
        let order = reverse_bfs_order(g, root, &g.vertices());
        return Ok(greedy_color(g, &order)?);
    }
    if let Some(order) = regular_order(g) {
        return Ok(greedy_color(g, &order)?);
    }
    // 2-connected regular non-complete graphs always admit a regular_order;
    // kept so that an unexpected shape still yields a Δ-coloring
    Ok(is_k_colorable(g, delta).expect("Brooks bound"))
}

fn two_color(g: &Graph) -> Coloring {
    let mut c = Coloring::uncolored(g.n(), 2);
    c.set(0, 0);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let next = 1 - c.get(v).expect("queued vertices are colored");
        for w in g.neighbors(v) {
            if c.get(w).is_none() {
                c.set(w, next);
                queue.push_back(w);
            }
        }
    }
    c
}

/// Vertices of the component of `root` inside `allowed`, farthest first, with
/// `root` last. Every vertex but the root has a neighbor later in the order.
fn reverse_bfs_order(g: &Graph, root: usize, allowed: &VertexSet) -> Vec<usize> {
    let mut order = vec![root];
    let mut seen = VertexSet::with_capacity(g.n());
    seen.insert(root);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for w in g.neighbors(v) {
            if allowed.contains(w) && seen.insert(w) {
                order.push(w);
            }
        }
        i += 1;
    }
    order.reverse();
    order
}

/// For a Δ-regular 2-connected graph: a vertex `v` with non-adjacent
/// neighbors `x`, `y` such that `G − {x, y}` stays connected. Coloring `x`
/// and `y` first gives them the same color, leaving `v` a free color.
fn regular_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        for x in g.neighbors(v) {
            for y in g
                .neighbors(v)
                .iter()
                .filter(|&y| y > x && !g.has_edge(x, y))
            {
                let mut rest = g.vertices();
                rest.remove(x);
                rest.remove(y);
                let tail = reverse_bfs_order(g, v, &rest);
                if tail.len() == n - 2 {
                    let mut order = vec![x, y];
                    order.extend(tail);
                    return Some(order);
                }
            }
        }
    }
    None
}

/// Colors each piece `G[C ∪ {cut}]` (C a component of `G − cut`) with the
/// cut vertex last, then permutes colors so the cut vertex gets 0 everywhere.
fn color_through_cut_vertex(g: &Graph, cut: usize) -> Result<Coloring, ColoringError> {
    let mut rest = g.vertices();
    rest.remove(cut);
    let mut result = Coloring::uncolored(g.n(), 0);
    let mut remaining = rest.clone();
    while let Some(start) = remaining.first() {
        let comp = g.reachable_within(start, &rest);
        remaining = remaining.difference(&comp);
        let mut piece_set = comp;
        piece_set.insert(cut);
        let (piece, map) = g.induced_subgraph(&piece_set)?;
        let local_cut = map.iter().position(|&v| v == cut).expect("cut vertex kept");
        let order = reverse_bfs_order(&piece, local_cut, &piece.vertices());
        let local = greedy_color(&piece, &order)?;
        let cut_color = local.get(local_cut).expect("total");
        for (i, &v) in map.iter().enumerate() {
            let col = local.get(i).expect("total");
            let col = if col == cut_color {
                0
            } else if col == 0 {
                cut_color
            } else {
                col
            };
            result.set(v, col);
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{validate_coloring, Validity};
    use crate::graph::families::*;
    use crate::invariants::chromatic_number;

    fn check(g: &Graph) -> usize {
        let c = brooks_color(g).unwrap();
        assert_eq!(validate_coloring(g, &c), Ok(Validity::ProperTotal));
        c.colors_used()
    }

    #[test]
    fn exceptions_use_delta_plus_one() {
        assert_eq!(check(&cycle(7)), 3);
        assert_eq!(check(&complete(5)), 5);
        assert_eq!(check(&complete(1)), 1);
        assert_eq!(check(&complete(2)), 2);
    }

    #[test]
    fn petersen_within_three() {
        let p = petersen();
        assert!(check(&p) <= 3);
        assert_eq!(chromatic_number(&p), 3);
    }

    #[test]
    fn paths_and_even_cycles() {
        assert_eq!(check(&path(6)), 2);
        assert_eq!(check(&cycle(8)), 2);
        assert_eq!(check(&star(4)), 2);
    }

    #[test]
    fn regular_with_cut_vertex() {
        // 4-regular: two copies of K5 minus an edge, the two ends of each
        // missing edge joined to the shared cut vertex 0
        let mut edges = Vec::new();
        for block in [1usize, 6] {
            let vs: Vec<usize> = (block..block + 5).collect();
            for i in 0..5 {
                for j in i + 1..5 {
                    if !(i == 0 && j == 1) {
                        edges.push((vs[i], vs[j]));
                    }
                }
            }
            edges.push((0, vs[0]));
            edges.push((0, vs[1]));
        }
        let g = Graph::from_edges(11, edges).unwrap();
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 4);
        assert!(g.cut_vertices().contains(0));
        assert!(check(&g) <= 4);
    }

    #[test]
    fn regular_two_connected() {
        // K3,3 and the complement of C7 (4-regular)
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert!(check(&k33) <= 3);
        assert!(check(&cycle(7).complement()) <= 4);
        assert!(check(&wheel(5)) <= 5);
    }

    #[test]
    fn disconnected_is_rejected() {
        assert_eq!(brooks_color(&two_k2()), Err(ColoringError::Disconnected));
    }
}
