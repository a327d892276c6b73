//! Lines induced by vertex pairs in the shortest-path metric.
//!
//! The line of a pair {x, y} is {x, y} together with every vertex u
//! satisfying [u x y], [x u y] or [x y u]. A pair whose endpoints sit in
//! different components gets the line {x, y}: no betweenness clause can fire
//! across infinite distances.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::metric::{apsp, DistanceMatrix};

/// A line, stored as the set of its member vertices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Line {
    pub members: VertexSet,
}

impl Line {
    /// Universal means the line covers the whole vertex set.
    pub fn is_universal(&self, g: &Graph) -> bool {
        self.members == g.vertex_set()
    }
}

/// The distinct lines of a graph plus the pair -> line-class map that the
/// figure renderer needs.
pub struct LinePartition {
    n: usize,
    /// Distinct lines, ordered by first occurrence over pairs (0,1), (0,2),
    /// ..., (0,n-1), (1,2), ... — lexicographic pair order.
    pub classes: Vec<Line>,
    pair_class: Vec<u32>,
}

impl LinePartition {
    /// Number of distinct lines.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Line-class id of the pair {x, y}.
    pub fn class_of(&self, x: usize, y: usize) -> usize {
        self.pair_class[pair_index(self.n, x, y)] as usize
    }

    pub fn line_of(&self, x: usize, y: usize) -> Line {
        self.classes[self.class_of(x, y)]
    }
}

#[inline]
fn pair_index(n: usize, x: usize, y: usize) -> usize {
    let (a, b) = if x < y { (x, y) } else { (y, x) };
    debug_assert!(b < n);
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// The line of the pair {x, y}.
pub fn line_of_pair(g: &Graph, d: &DistanceMatrix, x: usize, y: usize) -> Result<Line> {
    if x == y {
        return Err(Error::domain(format!("line of a pair needs x != y, got {x}")));
    }
    if x >= g.vertex_count() || y >= g.vertex_count() {
        return Err(Error::domain(format!(
            "pair ({x}, {y}) outside 0..{}",
            g.vertex_count()
        )));
    }
    Ok(line_unchecked(g, d, x, y))
}

#[inline]
fn line_unchecked(g: &Graph, d: &DistanceMatrix, x: usize, y: usize) -> Line {
    let mut members = VertexSet::singleton(x).with(y);
    for u in g.vertices() {
        if u == x || u == y {
            continue;
        }
        if d.between_unchecked(u, x, y)
            || d.between_unchecked(x, u, y)
            || d.between_unchecked(x, y, u)
        {
            members.insert(u);
        }
    }
    Line { members }
}

/// Lines of all C(n, 2) pairs, deduplicated by set equality. Class ids are
/// assigned by first occurrence in lexicographic pair order, so the result is
/// deterministic however the per-pair work is scheduled.
pub fn line_partition(g: &Graph) -> Result<LinePartition> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::domain(format!(
            "line partition needs at least two vertices, got {n}"
        )));
    }
    let d = apsp(g);
    let mut classes: Vec<Line> = Vec::new();
    let mut pair_class = Vec::with_capacity(n * (n - 1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            let line = line_unchecked(g, &d, x, y);
            let id = match classes.iter().position(|c| c.members == line.members) {
                Some(i) => i,
                None => {
                    classes.push(line);
                    classes.len() - 1
                }
            };
            pair_class.push(id as u32);
        }
    }
    Ok(LinePartition {
        n,
        classes,
        pair_class,
    })
}

/// Number of distinct lines.
pub fn ell(g: &Graph) -> Result<usize> {
    Ok(line_partition(g)?.len())
}

/// Number of unordered pairs inducing the universal line.
pub fn ul(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::domain(format!(
            "universal-pair count needs at least two vertices, got {n}"
        )));
    }
    let d = apsp(g);
    let full = g.vertex_set();
    let mut count = 0;
    for x in 0..n {
        for y in x + 1..n {
            if line_unchecked(g, &d, x, y).members == full {
                count += 1;
            }
        }
    }
    Ok(count)
}
