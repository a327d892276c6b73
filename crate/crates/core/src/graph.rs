//! Simple undirected graphs as fixed-width adjacency bit rows.
//!
//! Every vertex's neighborhood is one machine word, so set operations
//! (intersection, union, subset tests) are single instructions and the whole
//! structure fits in a couple of cache lines for the graph sizes this crate
//! targets (n well below [`MAX_VERTICES`]).

use std::fmt;

use crate::error::{Error, Result};

/// Hard vertex cap: one `u64` row per vertex.
pub const MAX_VERTICES: usize = 64;

const _: () = assert!(MAX_VERTICES >= 32 && MAX_VERTICES <= 64);

/// A set of vertices packed into a single word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending member lists (not the numeric
    /// order of the underlying words): {0,3} sorts before {1,2}.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Invariants maintained by every constructor: the adjacency relation is
/// symmetric, irreflexive, and only bits below `n` are ever set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capability(format!(
                "vertex count {n} exceeds the cap of {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from unordered endpoint pairs; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::domain(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::domain(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighborhood of a set: vertices outside `s` with a neighbor in `s`.
    pub fn set_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s.iter() {
            out = out.union(self.adj[v]);
        }
        out.difference(s)
    }

    /// Induced subgraph on `s`, plus the relabeling map (new index -> old
    /// vertex, ascending by old vertex id).
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = s.intersection(self.vertex_set()).iter().collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph {
            n: keep.len(),
            adj: vec![VertexSet::EMPTY; keep.len()],
        };
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v].intersection(s).iter() {
                g.adj[i].insert(pos[w]);
            }
        }
        (g, keep)
    }

    /// Contracts edge `uv`: the ends are identified into `min(u, v)`, the
    /// larger endpoint disappears and higher vertices shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::domain(format!("({u}, {v}) is not an edge")));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let merged = self.adj[lo]
            .union(self.adj[hi])
            .without(lo)
            .without(hi);
        let mut g = Graph::empty(self.n - 1)?;
        let relabel = |w: usize| if w < hi { w } else { w - 1 };
        for a in 0..self.n {
            if a == lo || a == hi {
                continue;
            }
            for b in self.adj[a].iter() {
                if b == lo || b == hi || b <= a {
                    continue;
                }
                g.add_edge(relabel(a), relabel(b))?;
            }
        }
        for b in merged.iter() {
            g.add_edge(lo, relabel(b))?;
        }
        Ok(g)
    }

    /// Applies a relabeling: `perm[old] = new`. `perm` must be a permutation
    /// of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![VertexSet::EMPTY; self.n],
        };
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                g.adj[perm[u]].insert(perm[v]);
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        // n = 0 counts as connected (and as having zero components).
        self.n == 0 || self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = remaining.min() {
            let comp = self.restricted_component(v, remaining);
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Component of `start` inside the induced subgraph on `allowed`.
    pub fn restricted_component(&self, start: usize, allowed: VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(start));
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(allowed).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Adds one vertex adjacent to `nbrs`; the new vertex gets index `n`.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in nbrs.iter() {
            g.add_edge(self.n, v)?;
        }
        Ok(g)
    }

    /// Disjoint union of `self` and `other` with `v1` (in `self`) identified
    /// with `v2` (in `other`). Vertices of `self` keep their labels; vertices
    /// of `other` follow, skipping `v2`.
    pub fn glued_at(&self, v1: usize, other: &Graph, v2: usize) -> Result<Graph> {
        if v1 >= self.n || v2 >= other.n {
            return Err(Error::domain("glue vertex out of range".to_string()));
        }
        let mut g = Graph::empty(self.n + other.n - 1)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        let relabel = |w: usize| {
            if w == v2 {
                v1
            } else if w < v2 {
                self.n + w
            } else {
                self.n + w - 1
            }
        };
        for (u, v) in other.edges() {
            g.add_edge(relabel(u), relabel(v))?;
        }
        Ok(g)
    }

    // Small standard constructors, used heavily by the catalog and tests.

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("cycle within cap");
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).expect("valid edge");
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("path within cap");
        for v in 1..n {
            g.add_edge(v - 1, v).expect("valid edge");
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("complete graph within cap");
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid edge");
            }
        }
        g
    }

    /// Complete graph on `2k` vertices minus the perfect matching
    /// `(i, i + k)`.
    pub fn complete_minus_matching(k: usize) -> Graph {
        let mut g = Graph::complete(2 * k);
        for i in 0..k {
            g.adj[i].remove(i + k);
            g.adj[i + k].remove(i);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
