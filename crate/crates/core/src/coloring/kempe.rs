use std::collections::VecDeque;

use serde::Serialize;

use super::Coloring;
use crate::error::ColoringError;
use crate::{Graph, VertexSet};

/// A connected component of the subgraph induced by two color classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KempeChain {
    #[serde(serialize_with = "serialize_set")]
    pub vertices: VertexSet,
    /// The two colors, smaller first.
    pub colors: (usize, usize),
}

fn serialize_set<S: serde::Serializer>(set: &VertexSet, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(set.iter())
}

impl KempeChain {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// The {i, j}-chain through `v`.
pub fn kempe_component(
    g: &Graph,
    c: &Coloring,
    v: usize,
    i: usize,
    j: usize,
) -> Result<KempeChain, ColoringError> {
    g.check_vertex(v)?;
    if i == j {
        return Err(ColoringError::EqualChainColors(i));
    }
    match c.get(v) {
        None => return Err(ColoringError::Uncolored(v)),
        Some(color) if color != i && color != j => {
            return Err(ColoringError::NotInChainColors {
                vertex: v,
                color,
                i,
                j,
            })
        }
        Some(_) => {}
    }
    Ok(chain_unchecked(g, c, v, i, j))
}

pub(crate) fn chain_unchecked(g: &Graph, c: &Coloring, v: usize, i: usize, j: usize) -> KempeChain {
    let mut vertices = VertexSet::with_capacity(g.n());
    vertices.insert(v);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if matches!(c.get(y), Some(col) if col == i || col == j) && vertices.insert(y) {
                queue.push_back(y);
            }
        }
    }
    KempeChain {
        vertices,
        colors: (i.min(j), i.max(j)),
    }
}

/// Exchanges the chain's two colors on its members.
pub fn kempe_swap(c: &Coloring, chain: &KempeChain) -> Result<Coloring, ColoringError> {
    let (i, j) = chain.colors;
    let mut out = c.clone();
    for v in chain.vertices.iter() {
        if v >= c.len() {
            return Err(ColoringError::StaleChain(v));
        }
        match c.get(v) {
            Some(col) if col == i => out.set(v, j),
            Some(col) if col == j => out.set(v, i),
            _ => return Err(ColoringError::StaleChain(v)),
        }
    }
    Ok(out)
}

pub(crate) fn swap_in_place(c: &mut Coloring, chain: &KempeChain) {
    let (i, j) = chain.colors;
    for v in chain.vertices.iter() {
        let col = c.get(v).expect("chain members are colored");
        c.set(v, if col == i { j } else { i });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{validate_coloring, Validity};
    use crate::graph::families::*;

    fn c5_coloring() -> Coloring {
        Coloring::from_total(vec![0, 1, 0, 1, 2])
    }

    #[test]
    fn chain_stops_at_third_color() {
        let chain = kempe_component(&cycle(5), &c5_coloring(), 0, 0, 1).unwrap();
        assert_eq!(chain.vertices.iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(chain.colors, (0, 1));
    }

    #[test]
    fn singleton_chain() {
        // vertex 0 has no neighbor colored 2
        let chain =
            kempe_component(&path(3), &Coloring::from_total(vec![0, 1, 0]), 0, 0, 2).unwrap();
        assert_eq!(chain.vertices.iter().collect::<Vec<_>>(), vec![0]);
        let swapped = kempe_swap(&Coloring::from_total(vec![0, 1, 0]), &chain).unwrap();
        assert_eq!(swapped.to_total().unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn alternating_path_inside_larger_graph() {
        // A-D-E-B colored 0,3,0,3 with an extra vertex joined to D colored 1
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let c = Coloring::from_total(vec![0, 3, 0, 3, 1]);
        let chain = kempe_component(&g, &c, 0, 0, 3).unwrap();
        assert_eq!(chain.vertices.iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn swap_is_proper_involution() {
        let g = cycle(5);
        let c = c5_coloring();
        let chain = kempe_component(&g, &c, 0, 0, 1).unwrap();
        let once = kempe_swap(&c, &chain).unwrap();
        assert_eq!(once.to_total().unwrap(), vec![1, 0, 1, 0, 2]);
        assert_eq!(validate_coloring(&g, &once), Ok(Validity::ProperTotal));
        assert_eq!(kempe_swap(&once, &chain).unwrap(), c);
    }

    #[test]
    fn errors() {
        let g = cycle(5);
        let c = c5_coloring();
        assert!(matches!(
            kempe_component(&g, &c, 4, 0, 1),
            Err(ColoringError::NotInChainColors { vertex: 4, .. })
        ));
        assert_eq!(
            kempe_component(&g, &c, 0, 1, 1),
            Err(ColoringError::EqualChainColors(1))
        );
        let mut partial = c.clone();
        partial.clear(0);
        assert_eq!(
            kempe_component(&g, &partial, 0, 0, 1),
            Err(ColoringError::Uncolored(0))
        );
        let chain = kempe_component(&g, &c, 0, 0, 1).unwrap();
        let mut stale = c.clone();
        stale.set(2, 2);
        assert_eq!(
            kempe_swap(&stale, &chain),
            Err(ColoringError::StaleChain(2))
        );
    }
}
