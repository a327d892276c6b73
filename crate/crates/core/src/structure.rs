//! Structural predicates: bridges, cut vertices, 2-connectivity, pendant
//! edges, simplicial vertices, chordality, twins, modules, primality,
//! hereditary-class membership, and recognition of the catalog families.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::canon::canonical_form;
use crate::catalog::{catalog, CatalogEntry};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Upper bound for the brute-force module enumeration.
pub const MODULE_SEARCH_MAX_N: usize = 20;
/// Upper bound for the induced-subgraph scan in [`in_class_c`].
pub const CLASS_C_MAX_N: usize = 12;

// ---------------------------------------------------------------------------
// Bridges and cut vertices (one DFS low-link pass computes both)
// ---------------------------------------------------------------------------

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    bridges: Vec<(usize, usize)>,
    cuts: VertexSet,
}

const UNSET: usize = usize::MAX;

impl LowLink<'_> {
    fn dfs(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for v in self.g.neighbors(u).iter() {
            if self.disc[v] == UNSET {
                children += 1;
                self.dfs(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] > self.disc[u] {
                    self.bridges.push((u.min(v), u.max(v)));
                }
                if parent != UNSET && self.low[v] >= self.disc[u] {
                    self.cuts.insert(u);
                }
            } else if v != parent {
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        if parent == UNSET && children >= 2 {
            self.cuts.insert(u);
        }
    }
}

fn lowlink(g: &Graph) -> (Vec<(usize, usize)>, VertexSet) {
    let n = g.vertex_count();
    let mut state = LowLink {
        g,
        disc: vec![UNSET; n],
        low: vec![UNSET; n],
        time: 0,
        bridges: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..n {
        if state.disc[v] == UNSET {
            state.dfs(v, UNSET);
        }
    }
    state.bridges.sort_unstable();
    (state.bridges, state.cuts)
}

/// Edges whose removal increases the number of components, as `(u, v)` with
/// `u < v`, ascending.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    lowlink(g).0
}

/// Number of bridges.
pub fn br(g: &Graph) -> usize {
    bridges(g).len()
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    lowlink(g).1
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && g.is_connected() && cut_vertices(g).is_empty()
}

/// Edges with an endpoint of degree one.
pub fn pendant_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1)
        .collect()
}

// ---------------------------------------------------------------------------
// Simplicial vertices and chordality
// ---------------------------------------------------------------------------

/// Vertices whose neighborhood induces a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    'vertex: for v in g.vertices() {
        let nbrs = g.neighbors(v);
        for u in nbrs.iter() {
            if !nbrs.without(u).is_subset_of(g.neighbors(u)) {
                continue 'vertex;
            }
        }
        out.insert(v);
    }
    out
}

/// Outcome of the chordality test, with a certificate either way.
pub enum Chordality {
    /// Perfect elimination ordering (first vertex eliminated first).
    Chordal { elimination: Vec<usize> },
    /// A chordless cycle on at least four vertices, in cyclic order.
    NonChordal { cycle: Vec<usize> },
}

/// Maximum-cardinality search plus verification of the produced elimination
/// ordering; on failure an induced long cycle is located as the witness.
pub fn chordality(g: &Graph) -> Chordality {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = UNSET;
        for v in 0..n {
            if !visited.contains(v) && (best == UNSET || weight[v] > weight[best]) {
                best = v;
            }
        }
        visited.insert(best);
        order.push(best);
        for w in g.neighbors(best).difference(visited).iter() {
            weight[w] += 1;
        }
    }

    let elimination: Vec<usize> = order.into_iter().rev().collect();
    let mut pos = vec![0usize; n];
    for (i, &v) in elimination.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &elimination {
        let later: VertexSet = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(w) = later.iter().min_by_key(|&w| pos[w]) {
            if !later.without(w).is_subset_of(g.neighbors(w)) {
                let cycle = chordless_cycle(g).expect("failed elimination implies a long cycle");
                return Chordality::NonChordal { cycle };
            }
        }
    }
    Chordality::Chordal { elimination }
}

pub fn is_chordal(g: &Graph) -> bool {
    matches!(chordality(g), Chordality::Chordal { .. })
}

/// Shortest chordless cycle of length >= 4, if one exists. For every vertex v
/// and non-adjacent pair x, y of its neighbors, a shortest x-y path avoiding
/// N[v] closes into a chordless cycle through v.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for v in 0..n {
        let nbrs = g.neighbors(v);
        for x in nbrs.iter() {
            for y in nbrs.iter() {
                if y <= x || g.has_edge(x, y) {
                    continue;
                }
                let allowed = g
                    .vertex_set()
                    .difference(nbrs.with(v))
                    .with(x)
                    .with(y);
                if let Some(path) = bfs_path(g, x, y, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    debug_assert!(cycle.len() >= 4);
                    let better = match &best {
                        None => true,
                        Some(b) => cycle.len() < b.len(),
                    };
                    if better {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

fn bfs_path(g: &Graph, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![UNSET; g.vertex_count()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut w = to;
            while parent[w] != UNSET {
                w = parent[w];
                path.push(w);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).intersection(allowed).difference(seen).iter() {
            seen.insert(w);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Twins, modules, primality
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
    /// True twins are adjacent, false twins are not.
    pub true_twin: bool,
}

/// All pairs with N(u) \ {v} = N(v) \ {u}, ascending.
pub fn twin_pairs(g: &Graph) -> Vec<TwinPair> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.vertex_count() {
            if g.neighbors(u).without(v) == g.neighbors(v).without(u) {
                out.push(TwinPair {
                    u,
                    v,
                    true_twin: g.has_edge(u, v),
                });
            }
        }
    }
    out
}

/// True iff every vertex outside `m` is adjacent to all of `m` or none of it.
pub fn is_module(g: &Graph, m: VertexSet) -> bool {
    let m = m.intersection(g.vertex_set());
    for u in g.vertex_set().difference(m).iter() {
        let hit = g.neighbors(u).intersection(m);
        if !hit.is_empty() && hit != m {
            return false;
        }
    }
    true
}

/// The minimal module containing `seed`: outside vertices adjacent to some
/// but not all of the current set are forced in until none remain.
pub fn module_closure(g: &Graph, seed: VertexSet) -> VertexSet {
    let mut m = seed.intersection(g.vertex_set());
    loop {
        let mut grew = false;
        for u in g.vertex_set().difference(m).iter() {
            let hit = g.neighbors(u).intersection(m);
            if !hit.is_empty() && hit != m {
                m.insert(u);
                grew = true;
            }
        }
        if !grew {
            return m;
        }
    }
}

/// Polynomial module detection: some pair's closure stays proper iff a
/// non-trivial module exists.
pub fn has_nontrivial_module(g: &Graph) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if module_closure(g, VertexSet::singleton(u).with(v)).len() < n {
                return true;
            }
        }
    }
    false
}

/// No non-trivial module.
pub fn is_prime(g: &Graph) -> bool {
    !has_nontrivial_module(g)
}

/// A non-trivial module together with its outside neighborhood.
#[derive(Clone, Copy, Debug)]
pub struct ModuleInfo {
    pub vertices: VertexSet,
    pub neighborhood: VertexSet,
    /// Dominating means the module plus its neighborhood covers the graph.
    pub dominating: bool,
}

/// Every non-trivial module, by exhaustive subset scan (hence the bound).
/// Ordered by ascending bit pattern.
pub fn nontrivial_modules(g: &Graph) -> Result<Vec<ModuleInfo>> {
    let n = g.vertex_count();
    if n > MODULE_SEARCH_MAX_N {
        return Err(Error::capability(format!(
            "module enumeration is bounded at n <= {MODULE_SEARCH_MAX_N}, got {n}"
        )));
    }
    let mut out = Vec::new();
    if n < 3 {
        return Ok(out);
    }
    for mask in 1u64..(1u64 << n) - 1 {
        let m = VertexSet::from_bits(mask);
        if m.len() < 2 || !is_module(g, m) {
            continue;
        }
        let nb = g.set_neighborhood(m);
        out.push(ModuleInfo {
            vertices: m,
            neighborhood: nb,
            dominating: m.union(nb) == g.vertex_set(),
        });
    }
    Ok(out)
}

/// Among non-dominating non-trivial modules, one with the smallest
/// neighborhood; ties go to the lexicographically smallest vertex set.
pub fn min_nondominating_module(g: &Graph) -> Result<Option<ModuleInfo>> {
    let mut best: Option<ModuleInfo> = None;
    for info in nontrivial_modules(g)? {
        if info.dominating {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => {
                info.neighborhood.len() < b.neighborhood.len()
                    || (info.neighborhood.len() == b.neighborhood.len()
                        && info.vertices.lex_cmp(b.vertices) == std::cmp::Ordering::Less)
            }
        };
        if better {
            best = Some(info);
        }
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// The hereditary class: every induced subgraph is chordal, has a cut vertex,
// or has a non-trivial module
// ---------------------------------------------------------------------------

/// Verdict of [`in_class_c`]; on failure `witness` is a vertex subset whose
/// induced subgraph is 2-connected, prime and non-chordal.
pub struct ClassMembership {
    pub holds: bool,
    pub witness: Option<VertexSet>,
}

/// Membership test for the hereditary class. A disconnected induced subgraph
/// always satisfies the defining clause (a component of size >= 2 is a
/// non-trivial module; an edgeless one is chordal), and so does anything on
/// fewer than four vertices, so only connected induced subgraphs on >= 4
/// vertices that are 2-connected need the prime + chordality tests. Verdicts
/// for those are memoized process-wide by canonical form.
pub fn in_class_c(g: &Graph) -> Result<ClassMembership> {
    let n = g.vertex_count();
    if n > CLASS_C_MAX_N {
        return Err(Error::capability(format!(
            "class membership scan is bounded at n <= {CLASS_C_MAX_N}, got {n}"
        )));
    }
    if n >= 4 {
        for mask in 1u64..=VertexSet::full(n).bits() {
            let s = VertexSet::from_bits(mask);
            if s.len() < 4 {
                continue;
            }
            let (h, _) = g.induced_subgraph(s);
            if violates_class_clause(&h) {
                return Ok(ClassMembership {
                    holds: false,
                    witness: Some(s),
                });
            }
        }
    }
    Ok(ClassMembership {
        holds: true,
        witness: None,
    })
}

/// 2-connected and prime and non-chordal.
fn violates_class_clause(h: &Graph) -> bool {
    if !h.is_connected() || !cut_vertices(h).is_empty() {
        return false;
    }
    let key = canonical_form(h);
    static CACHE: OnceLock<Mutex<HashMap<Vec<u8>, bool>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&hit) = cache.lock().unwrap().get(&key) {
        return hit;
    }
    let verdict = is_prime(h) && !is_chordal(h);
    cache.lock().unwrap().insert(key, verdict);
    verdict
}

// ---------------------------------------------------------------------------
// Family recognition against the catalog
// ---------------------------------------------------------------------------

/// The catalog entry isomorphic to `g`, if any.
pub fn classify_family(g: &Graph) -> Option<&'static CatalogEntry> {
    static INDEX: OnceLock<HashMap<Vec<u8>, usize>> = OnceLock::new();
    let index = INDEX.get_or_init(|| {
        catalog()
            .iter()
            .enumerate()
            .map(|(i, e)| (canonical_form(&e.graph), i))
            .collect()
    });
    let sizes_match = catalog()
        .iter()
        .any(|e| e.expected.n == g.vertex_count() && e.expected.m == g.edge_count());
    if !sizes_match {
        return None;
    }
    index.get(&canonical_form(g)).map(|&i| &catalog()[i])
}

/// Family label for reports: `F:C4`, `F0:H5`, `B:B6a`, ... or `none`.
pub fn family_label(g: &Graph) -> String {
    classify_family(g).map_or_else(|| "none".to_string(), |e| e.label())
}

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct StructureReport {
    pub bridges: Vec<(usize, usize)>,
    pub br: usize,
    pub cut_vertices: Vec<usize>,
    pub two_connected: bool,
    pub pendant_edges: Vec<(usize, usize)>,
    pub simplicial: Vec<usize>,
    pub chordal: bool,
    pub twin_pairs: Vec<TwinPair>,
    pub has_nontrivial_module: bool,
    pub prime: bool,
}

impl StructureReport {
    pub fn of(g: &Graph) -> StructureReport {
        let (bridges, cuts) = lowlink(g);
        let modular = has_nontrivial_module(g);
        StructureReport {
            br: bridges.len(),
            bridges,
            cut_vertices: cuts.to_vec(),
            two_connected: is_two_connected(g),
            pendant_edges: pendant_edges(g),
            simplicial: simplicial_vertices(g).to_vec(),
            chordal: is_chordal(g),
            twin_pairs: twin_pairs(g),
            has_nontrivial_module: modular,
            prime: !modular,
        }
    }
}
