//! Naive reference implementations, deliberately independent of the library
//! internals: adjacency lists instead of bit rows, Floyd-Warshall instead of
//! BFS, subset enumeration instead of closures. Differential tests compare
//! the fast paths against these.

#![allow(dead_code)] // each integration test pulls in the subset it needs
#![allow(clippy::needless_range_loop)] // the oracles stay textbook-shaped on purpose

use std::collections::BTreeSet;

use graphlines::graph::Graph;

pub const INF: usize = usize::MAX / 4;

/// Floyd-Warshall distances.
pub fn naive_distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for u in 0..n {
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn between(d: &[Vec<usize>], a: usize, b: usize, c: usize) -> bool {
    d[a][b] < INF && d[b][c] < INF && d[a][c] < INF && d[a][b] + d[b][c] == d[a][c]
}

/// The line of {x, y} as a sorted vertex set.
pub fn naive_line(g: &Graph, d: &[Vec<usize>], x: usize, y: usize) -> BTreeSet<usize> {
    let mut line: BTreeSet<usize> = [x, y].into_iter().collect();
    for u in 0..g.vertex_count() {
        if u == x || u == y {
            continue;
        }
        if between(d, u, x, y) || between(d, x, u, y) || between(d, x, y, u) {
            line.insert(u);
        }
    }
    line
}

/// Distinct lines as a set of sets.
pub fn naive_lines(g: &Graph) -> BTreeSet<BTreeSet<usize>> {
    let d = naive_distances(g);
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            out.insert(naive_line(g, &d, x, y));
        }
    }
    out
}

pub fn naive_ell(g: &Graph) -> usize {
    naive_lines(g).len()
}

pub fn naive_ul(g: &Graph) -> usize {
    let d = naive_distances(g);
    let n = g.vertex_count();
    let full: BTreeSet<usize> = (0..n).collect();
    let mut count = 0;
    for x in 0..n {
        for y in x + 1..n {
            if naive_line(g, &d, x, y) == full {
                count += 1;
            }
        }
    }
    count
}

fn component_count_without_edge(g: &Graph, skip: Option<(usize, usize)>) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut comps = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        comps += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !g.has_edge(u, v) || seen[v] {
                    continue;
                }
                if skip == Some((u.min(v), u.max(v))) {
                    continue;
                }
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    comps
}

pub fn naive_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let base = component_count_without_edge(g, None);
    g.edges()
        .into_iter()
        .filter(|&e| component_count_without_edge(g, Some(e)) > base)
        .collect()
}

pub fn naive_cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let base = component_count_without_edge(g, None);
    (0..n)
        .filter(|&v| {
            let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            subgraph_component_count(g, &keep) > base - usize::from(is_isolated(g, v))
        })
        .collect()
}

fn is_isolated(g: &Graph, v: usize) -> bool {
    (0..g.vertex_count()).all(|u| !g.has_edge(u, v))
}

fn subgraph_component_count(g: &Graph, keep: &[usize]) -> usize {
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut comps = 0;
    for &start in keep {
        if seen.contains(&start) {
            continue;
        }
        comps += 1;
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(u) = stack.pop() {
            for &v in keep {
                if g.has_edge(u, v) && seen.insert(v) {
                    stack.push(v);
                }
            }
        }
    }
    comps
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

/// Chordality by exhaustive search for an induced cycle of length >= 4: a
/// vertex subset inducing a connected 2-regular subgraph.
pub fn naive_is_chordal(g: &Graph) -> bool {
    let n = g.vertex_count();
    for s in subsets(n) {
        if s.len() < 4 {
            continue;
        }
        let degrees_ok = s
            .iter()
            .all(|&v| s.iter().filter(|&&u| g.has_edge(u, v)).count() == 2);
        if degrees_ok && subgraph_component_count(g, &s) == 1 {
            return false;
        }
    }
    true
}

pub fn naive_is_module(g: &Graph, m: &[usize]) -> bool {
    let n = g.vertex_count();
    (0..n).filter(|v| !m.contains(v)).all(|u| {
        let hits = m.iter().filter(|&&w| g.has_edge(u, w)).count();
        hits == 0 || hits == m.len()
    })
}

pub fn naive_has_nontrivial_module(g: &Graph) -> bool {
    let n = g.vertex_count();
    subsets(n).any(|m| m.len() >= 2 && m.len() < n && naive_is_module(g, &m))
}

fn induced(g: &Graph, s: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for (i, &u) in s.iter().enumerate() {
        for (j, &v) in s.iter().enumerate() {
            if i < j && g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(s.len(), &edges).expect("induced subgraph is valid")
}

/// The class definition taken literally: every induced subgraph is chordal,
/// has a cut vertex, or has a non-trivial module.
pub fn naive_in_class_c(g: &Graph) -> bool {
    let n = g.vertex_count();
    for s in subsets(n) {
        if s.is_empty() {
            continue;
        }
        let h = induced(g, &s);
        let ok = naive_is_chordal(&h)
            || !naive_cut_vertices(&h).is_empty()
            || naive_has_nontrivial_module(&h);
        if !ok {
            return false;
        }
    }
    true
}

/// Isomorphism by brute-force permutation search.
pub fn naive_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    try_permutations(&mut perm, 0, &mut |p| {
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v])))
    })
}

fn try_permutations(
    p: &mut Vec<usize>,
    k: usize,
    check: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if k == p.len() {
        return check(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if try_permutations(p, k + 1, check) {
            p.swap(k, i);
            return true;
        }
        p.swap(k, i);
    }
    false
}

/// Deterministic seeded random graph for round-trip and differential tests.
pub fn seeded_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("within cap");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}
