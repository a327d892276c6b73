//! Shortest-path metric: all-pairs hop distances, betweenness, diameter.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Sentinel for pairs with no connecting path. Hop distances in graphs under
/// the vertex cap never get near it.
pub const UNREACHABLE: u8 = u8::MAX;

/// n x n matrix of hop distances, one byte per entry.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

/// BFS from every vertex, expanding whole frontiers with word operations.
pub fn apsp(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = vec![UNREACHABLE; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut level = 0u8;
        while !frontier.is_empty() {
            for v in frontier.iter() {
                row[v] = level;
            }
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(g.neighbors(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
            level += 1;
        }
    }
    DistanceMatrix { n, d }
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn is_finite(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != UNREACHABLE
    }

    /// Betweenness [a b c]: all three distances finite and
    /// d(a,b) + d(b,c) = d(a,c). The vertices must be pairwise distinct.
    pub fn between(&self, a: usize, b: usize, c: usize) -> Result<bool> {
        if a == b || b == c || a == c {
            return Err(Error::domain(format!(
                "betweenness requires distinct vertices, got ({a}, {b}, {c})"
            )));
        }
        Ok(self.between_unchecked(a, b, c))
    }

    /// Betweenness without the distinctness check, for callers that iterate
    /// over pairs/triples they already know are distinct.
    #[inline]
    pub fn between_unchecked(&self, a: usize, b: usize, c: usize) -> bool {
        let (ab, bc, ac) = (self.get(a, b), self.get(b, c), self.get(a, c));
        ab != UNREACHABLE
            && bc != UNREACHABLE
            && ac != UNREACHABLE
            && ab as u16 + bc as u16 == ac as u16
    }

    /// Largest finite distance, or `None` when some pair is unreachable.
    /// Graphs on fewer than two vertices have diameter 0.
    pub fn diameter(&self) -> Option<u8> {
        let mut best = 0u8;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let d = self.get(u, v);
                if d == UNREACHABLE {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_distances() {
        let d = apsp(&Graph::cycle(4));
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(0, 0), 0);
        assert_eq!(d.diameter(), Some(2));
    }

    #[test]
    fn path_end_to_end() {
        let d = apsp(&Graph::path(4));
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.diameter(), Some(3));
    }

    #[test]
    fn unreachable_across_components() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let d = apsp(&g);
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn betweenness_on_a_path() {
        let d = apsp(&Graph::path(3));
        assert!(d.between(0, 1, 2).unwrap());
        assert!(d.between(2, 1, 0).unwrap());
        assert!(!d.between(1, 0, 2).unwrap());
    }

    #[test]
    fn no_betweenness_in_complete_graphs() {
        let d = apsp(&Graph::complete(3));
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if a != b && b != c && a != c {
                        assert!(!d.between(a, b, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn betweenness_needs_finite_distances() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let d = apsp(&g);
        assert!(!d.between(0, 1, 2).unwrap());
    }

    #[test]
    fn betweenness_rejects_repeats() {
        let d = apsp(&Graph::path(3));
        assert!(d.between(0, 0, 2).is_err());
    }

    #[test]
    fn distance_one_exactly_on_edges() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let d = apsp(&g);
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
            }
        }
    }
}
