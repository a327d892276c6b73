//! The built-in catalog of reference graphs.
//!
//! Three groups: the six exceptional graphs F that evade the line-count
//! bound outright, the further known exceptions F0 \ F to the pendant-edge
//! variant, and the three minimal bridge counterexamples. Adjacency follows
//! the standard presentations of these graphs; where a published exact line
//! count exists it is recorded in `expected`.

use std::sync::OnceLock;

use crate::graph::Graph;

/// Which group a catalog entry belongs to; also the prefix of family labels
/// such as `F:C4` or `B:B6a`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyGroup {
    /// The six exceptional graphs.
    F,
    /// Known members of the conjectured exception set beyond F.
    F0,
    /// Minimal counterexamples containing a bridge.
    Bridge,
}

impl FamilyGroup {
    pub fn prefix(self) -> &'static str {
        match self {
            FamilyGroup::F => "F",
            FamilyGroup::F0 => "F0",
            FamilyGroup::Bridge => "B",
        }
    }
}

/// Statistics known ahead of time for a catalog graph.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedStats {
    pub n: usize,
    pub m: usize,
    /// Exact number of distinct lines, where published.
    pub line_count: Option<usize>,
    pub bridge_count: usize,
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub group: FamilyGroup,
    pub graph: Graph,
    pub expected: ExpectedStats,
    /// How the adjacency was constructed.
    pub provenance: &'static str,
}

impl CatalogEntry {
    /// Label used in reports, e.g. `F:K6'` or `F0:H5`.
    pub fn label(&self) -> String {
        format!("{}:{}", self.group.prefix(), self.name)
    }
}

fn entry(
    name: &'static str,
    group: FamilyGroup,
    graph: Graph,
    line_count: Option<usize>,
    bridge_count: usize,
    provenance: &'static str,
) -> CatalogEntry {
    let expected = ExpectedStats {
        n: graph.vertex_count(),
        m: graph.edge_count(),
        line_count,
        bridge_count,
    };
    CatalogEntry {
        name,
        group,
        graph,
        expected,
        provenance,
    }
}

fn c4_plus(extra: &[(usize, usize)], n: usize) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    edges.extend_from_slice(extra);
    Graph::from_edge_list(n, &edges).expect("catalog graph is valid")
}

fn h5() -> Graph {
    c4_plus(&[(0, 4), (1, 4)], 5)
}

fn h6_1() -> Graph {
    c4_plus(&[(0, 4), (1, 4), (2, 5), (3, 5)], 6)
}

fn build() -> Vec<CatalogEntry> {
    use FamilyGroup::*;

    let eight_cycle: [(usize, usize); 8] = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 7),
        (6, 7),
        (5, 6),
        (4, 5),
        (0, 4),
    ];
    let h8 = |chords: &[(usize, usize)]| {
        let mut edges = eight_cycle.to_vec();
        edges.extend_from_slice(chords);
        Graph::from_edge_list(8, &edges).expect("catalog graph is valid")
    };
    let h8_2_chords = [(0, 5), (1, 5), (1, 4), (3, 6), (2, 6), (2, 7), (4, 7)];
    let mut h8_3_chords = h8_2_chords.to_vec();
    h8_3_chords.push((0, 3));

    vec![
        entry("C4", F, Graph::cycle(4), Some(1), 0, "4-cycle"),
        entry(
            "K23",
            F,
            c4_plus(&[(0, 4), (2, 4)], 5),
            Some(4),
            0,
            "complete bipartite with parts {0,2} and {1,3,4}",
        ),
        entry(
            "W4'",
            F,
            c4_plus(&[(0, 4), (1, 4), (2, 4)], 5),
            Some(4),
            0,
            "4-cycle plus an apex over three consecutive rim vertices",
        ),
        entry(
            "W4",
            F,
            c4_plus(&[(0, 4), (1, 4), (2, 4), (3, 4)], 5),
            Some(4),
            0,
            "4-wheel: 4-cycle plus a dominating hub",
        ),
        entry(
            "K6'",
            F,
            Graph::complete_minus_matching(3),
            Some(4),
            0,
            "K6 minus a perfect matching",
        ),
        entry(
            "K8'",
            F,
            Graph::complete_minus_matching(4),
            Some(7),
            0,
            "K8 minus a perfect matching",
        ),
        entry(
            "H5",
            F0,
            h5(),
            None,
            0,
            "4-cycle plus an ear vertex over one edge",
        ),
        entry(
            "H6_1",
            F0,
            h6_1(),
            None,
            0,
            "H5 plus a second ear over the opposite edge",
        ),
        entry(
            "H6_2",
            F0,
            Graph::from_edge_list(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 4),
                    (4, 5),
                    (3, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            )
            .expect("catalog graph is valid"),
            None,
            0,
            "triangular prism",
        ),
        entry(
            "H8_1",
            F0,
            h8(&[(1, 6), (2, 6), (2, 5), (1, 5)]),
            None,
            0,
            "8-cycle plus the four chords of an inner 4-cycle",
        ),
        entry("H8_2", F0, h8(&h8_2_chords), None, 0, "8-cycle plus seven chords"),
        entry(
            "H8_3",
            F0,
            h8(&h8_3_chords),
            None,
            0,
            "H8_2 plus one more chord",
        ),
        entry(
            "B6a",
            Bridge,
            h5().with_new_vertex([4].into_iter().collect())
                .expect("catalog graph is valid"),
            None,
            1,
            "H5 plus a pendant vertex at the ear apex",
        ),
        entry(
            "B6b",
            Bridge,
            h5().with_new_vertex([3].into_iter().collect())
                .expect("catalog graph is valid"),
            None,
            1,
            "H5 plus a pendant vertex across the 4-cycle",
        ),
        entry(
            "B7",
            Bridge,
            h6_1()
                .with_new_vertex([5].into_iter().collect())
                .expect("catalog graph is valid"),
            None,
            1,
            "H6_1 plus a pendant vertex at the second ear apex",
        ),
    ]
}

/// All fifteen reference graphs in stable order: the six F graphs, the six
/// known F0 \ F graphs, then the three bridge counterexamples.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn catalog_entry(name: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.name == name)
}
