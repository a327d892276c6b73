//! Canonical labeling for small graphs.
//!
//! Individualization–refinement: iterate equitable refinement of an ordered
//! partition, branch on the first non-singleton cell, and keep the
//! lexicographically smallest relabeled adjacency over all leaves.
//! Automorphisms discovered when two leaves collide prune sibling branches,
//! which keeps highly symmetric graphs (complete graphs, complements of
//! matchings) from exploding the search tree. Built for n <= 12 or so;
//! correctness, not asymptotics, is the contract.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::graph6;

/// Canonical byte string: two graphs get equal strings iff they are
/// isomorphic. The string is the graph6 record of the canonically relabeled
/// graph, so it doubles as an interchange key.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    graph6::to_graph6(&canonical_graph(g)).into_bytes()
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let n = g.vertex_count();
    if n <= 1 {
        return g.clone();
    }
    let mut search = CanonSearch {
        g,
        n,
        best_rows: None,
        best_perm: Vec::new(),
        autos: Vec::new(),
        prefix: Vec::new(),
    };
    let cells = vec![(0..n).collect::<Vec<usize>>()];
    search.descend(cells);
    let perm = &search.best_perm; // position -> original vertex
    let mut relabel = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        relabel[old] = new;
    }
    g.relabeled(&relabel)
}

/// True iff an adjacency-preserving bijection exists. Cheap invariants first,
/// then canonical-form equality, so this always agrees with
/// [`canonical_form`].
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    best_rows: Option<Vec<u64>>,
    best_perm: Vec<usize>,
    /// Automorphism generators found so far, as vertex maps.
    autos: Vec<Vec<usize>>,
    /// Vertices individualized along the current search path.
    prefix: Vec<usize>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        if cells.iter().all(|c| c.len() == 1) {
            let perm: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.visit_leaf(perm);
            return;
        }
        let target = cells.iter().position(|c| c.len() > 1).expect("non-discrete");
        for &v in &self.branch_reps(&cells[target]) {
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.prefix.push(v);
            self.descend(child);
            self.prefix.pop();
        }
    }

    /// One representative per orbit of the target cell under the known
    /// automorphisms that fix the current path pointwise. Branches pruned
    /// this way lead to leaves already produced by an explored sibling.
    fn branch_reps(&self, cell: &[usize]) -> Vec<usize> {
        if self.autos.is_empty() {
            return cell.to_vec();
        }
        let mut root: Vec<usize> = (0..self.n).collect();
        fn find(root: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while root[r] != r {
                r = root[r];
            }
            let mut w = v;
            while root[w] != w {
                let next = root[w];
                root[w] = r;
                w = next;
            }
            r
        }
        for a in &self.autos {
            if self.prefix.iter().any(|&p| a[p] != p) {
                continue;
            }
            for (v, &image) in a.iter().enumerate() {
                let (rv, ra) = (find(&mut root, v), find(&mut root, image));
                if rv != ra {
                    root[rv] = ra;
                }
            }
        }
        let mut seen = Vec::new();
        let mut reps = Vec::new();
        for &v in cell {
            let r = find(&mut root, v);
            if !seen.contains(&r) {
                seen.push(r);
                reps.push(v);
            }
        }
        reps
    }

    fn visit_leaf(&mut self, perm: Vec<usize>) {
        let mut rows = vec![0u64; self.n];
        for (i, &u) in perm.iter().enumerate() {
            let nbrs = self.g.neighbors(u);
            for (j, &v) in perm.iter().enumerate() {
                if nbrs.contains(v) {
                    rows[i] |= 1u64 << j;
                }
            }
        }
        match &self.best_rows {
            None => {
                self.best_rows = Some(rows);
                self.best_perm = perm;
            }
            Some(best) => match rows.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_rows = Some(rows);
                    self.best_perm = perm;
                }
                std::cmp::Ordering::Equal => {
                    // Equal leaves certify an automorphism: the map sending
                    // best_perm[i] to perm[i].
                    let mut a = vec![0usize; self.n];
                    let mut identity = true;
                    for i in 0..self.n {
                        a[self.best_perm[i]] = perm[i];
                        identity &= self.best_perm[i] == perm[i];
                    }
                    if !identity {
                        self.autos.push(a);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Equitable refinement. Splits every cell by the vector of edge counts
    /// into all current cells, repeating until stable; subcells are ordered
    /// by their count vectors, so the result is isomorphism-invariant.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | 1u64 << v))
                .collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let nbrs = self.g.neighbors(v).bits();
                    let key: Vec<u32> = masks.iter().map(|m| (nbrs & m).count_ones()).collect();
                    groups.entry(key).or_default().push(v);
                }
                next.extend(groups.into_values());
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Brute-force isomorphism over all vertex bijections; the independent
    /// reference for the search above.
    fn iso_by_permutation(g: &Graph, h: &Graph) -> bool {
        let n = g.vertex_count();
        if n != h.vertex_count() || g.edge_count() != h.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            g.vertices().all(|u| {
                (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v]))
            })
        })
    }

    fn permute(p: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == p.len() {
            return check(p);
        }
        for i in k..p.len() {
            p.swap(k, i);
            if permute(p, k + 1, check) {
                p.swap(k, i);
                return true;
            }
            p.swap(k, i);
        }
        false
    }

    #[test]
    fn c4_relabelings_share_a_canonical_form() {
        let base = Graph::cycle(4);
        let reference = canonical_form(&base);
        let mut perm = vec![0, 1, 2, 3];
        loop {
            let relabeled = base.relabeled(&perm);
            assert_eq!(canonical_form(&relabeled), reference);
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn c4_and_p4_differ() {
        assert_ne!(canonical_form(&Graph::cycle(4)), canonical_form(&Graph::path(4)));
        assert!(!is_isomorphic(&Graph::cycle(4), &Graph::path(4)));
    }

    #[test]
    fn c4_and_claw_differ() {
        let claw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&Graph::cycle(4), &claw));
    }

    #[test]
    fn k6_minus_different_matchings_agree() {
        let a = Graph::complete_minus_matching(3);
        let mut b = Graph::complete(6);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            b = remove_edge(&b, u, v);
        }
        assert!(is_isomorphic(&a, &b));
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    fn remove_edge(g: &Graph, u: usize, v: usize) -> Graph {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        Graph::from_edge_list(g.vertex_count(), &edges).unwrap()
    }

    #[test]
    fn agrees_with_permutation_search_on_all_pairs_n4() {
        // All 2^6 labeled graphs on 4 vertices, pairwise.
        let graphs: Vec<Graph> = (0u32..64)
            .map(|mask| {
                let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edge_list(4, &edges).unwrap()
            })
            .collect();
        for g in &graphs {
            for h in &graphs {
                assert_eq!(
                    is_isomorphic(g, h),
                    iso_by_permutation(g, h),
                    "disagreement on {g:?} vs {h:?}"
                );
            }
        }
    }

    #[test]
    fn handles_large_symmetric_graphs_quickly() {
        // Complete graphs are the worst case for naive search; orbit pruning
        // must keep this instant.
        let k12 = Graph::complete(12);
        assert_eq!(canonical_graph(&k12), k12);
        let m6 = Graph::complete_minus_matching(6);
        let c = canonical_form(&m6);
        assert_eq!(canonical_form(&m6), c);
    }
}
