//! Independent reference implementations shared by the integration tests.
//! They favor obviousness over speed and share no code with the library.

#![allow(dead_code)]

use bkcolor::Graph;
use rand::Rng;

/// Every labeled graph on `n` vertices, edge set given by the bits of a
/// counter over the pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Least induced 2K₂ over 4-subsets, as `(a, b, c, d)` with edges `ab`,
/// `cd`, no edges across, `a < b`, `c < d`, `a < c`.
pub fn brute_2k2(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let a = adjacency(g);
    let n = g.n();
    let mut best = None;
    for w in 0..n {
        for x in w + 1..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let q = [w, x, y, z];
                    // the three ways to split four vertices into two pairs
                    for (p1, p2) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
                        let (s, t) = ((q[p1.0], q[p1.1]), (q[p2.0], q[p2.1]));
                        let cross = [(s.0, t.0), (s.0, t.1), (s.1, t.0), (s.1, t.1)];
                        if a[s.0][s.1] && a[t.0][t.1] && cross.iter().all(|&(u, v)| !a[u][v]) {
                            let cand = (s.0, s.1, t.0, t.1);
                            if best.is_none_or(|b| cand < b) {
                                best = Some(cand);
                            }
                        }
                    }
                }
            }
        }
    }
    best
}

/// Clique number by checking every vertex subset.
pub fn brute_omega(g: &Graph) -> usize {
    let a = adjacency(g);
    let n = g.n();
    let mut best = 0;
    for s in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        if vs.len() > best && vs.iter().all(|&u| vs.iter().all(|&v| u == v || a[u][v])) {
            best = vs.len();
        }
    }
    best
}

/// Chromatic number by dynamic programming over subsets: the fewest
/// independent sets covering each subset.
pub fn dp_chromatic(g: &Graph) -> usize {
    let n = g.n();
    let a = adjacency(g);
    let full = (1usize << n) - 1;
    let independent: Vec<bool> = (0..=full)
        .map(|s| (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !a[u][v])))
        .collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for s in 1..=full {
        // enumerate independent subsets containing the lowest vertex of s
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let t = sub | low;
            if independent[t] && best[s ^ t] != usize::MAX {
                best[s] = best[s].min(best[s ^ t] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    perms
        .iter()
        .any(|p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}
