//! Exhaustive and stream-driven scanning of small connected graphs.
//!
//! The built-in generator walks all labeled graphs on up to
//! [`ENUMERATE_MAX_N`] vertices and keeps one canonical representative per
//! isomorphism class. Larger orders come in as graph6 text produced by an
//! external generator.

use std::collections::{HashMap, HashSet};
use std::io::BufRead;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::lines::{ell, ul};
use crate::structure::{
    br, classify_family, in_class_c, pendant_edges, CLASS_C_MAX_N,
};

/// Built-in enumeration stops here: 2^21 labeled graphs on seven vertices is
/// seconds of work, the next order is not.
pub const ENUMERATE_MAX_N: usize = 7;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, canonically labeled, in first-discovery order over the labeled
/// enumeration. Results are memoized per process.
pub fn enumerate_connected(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n == 0 {
        return Err(Error::domain("enumeration needs n >= 1".to_string()));
    }
    if n > ENUMERATE_MAX_N {
        return Err(Error::capability(format!(
            "built-in enumeration stops at n = {ENUMERATE_MAX_N}; feed graph6 text from an \
             external generator for larger orders"
        )));
    }
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = memo.lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }

    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut reps: Vec<Graph> = Vec::new();
    let chunk = 1u64 << 16;
    let mut start = 0u64;
    while start < total {
        let end = total.min(start + chunk);
        let found: Vec<Option<Graph>> = (start..end)
            .into_par_iter()
            .map(|mask| {
                let mut g = Graph::empty(n).expect("within cap");
                for (k, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        g.add_edge(u, v).expect("valid edge");
                    }
                }
                if g.is_connected() {
                    Some(canonical_graph(&g))
                } else {
                    None
                }
            })
            .collect();
        for cg in found.into_iter().flatten() {
            if seen.insert(to_graph6(&cg).into_bytes()) {
                reps.push(cg);
            }
        }
        start = end;
    }

    let arc = Arc::new(reps);
    memo.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

/// Tri-state verdict cell: holds, fails, or not applicable. Encodes as
/// "1" / "0" / "-" in both CSV and JSONL.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriState {
    Holds,
    Fails,
    NotApplicable,
}

impl TriState {
    pub fn as_str(self) -> &'static str {
        match self {
            TriState::Holds => "1",
            TriState::Fails => "0",
            TriState::NotApplicable => "-",
        }
    }

    fn of(ok: bool) -> TriState {
        if ok {
            TriState::Holds
        } else {
            TriState::Fails
        }
    }
}

impl Serialize for TriState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Per-graph report row.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub ell: usize,
    pub br: usize,
    pub ul: usize,
    pub pendant: bool,
    #[serde(rename = "in_C")]
    pub in_c: bool,
    pub family: String,
    pub main_ok: TriState,
    pub conj2_ok: TriState,
    pub conj3_ok: TriState,
}

pub const CSV_HEADER: &str = "graph6,n,m,ell,br,ul,pendant,in_C,family,main_ok,conj2_ok,conj3_ok";

impl AnalysisRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.m,
            self.ell,
            self.br,
            self.ul,
            u8::from(self.pendant),
            u8::from(self.in_c),
            self.family,
            self.main_ok.as_str(),
            self.conj2_ok.as_str(),
            self.conj3_ok.as_str(),
        )
    }

    pub fn jsonl_row(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Full per-graph analysis. Connected graphs get verdicts on all three
/// inequalities; the theorem verdict is not applicable for members of the
/// exceptional family and for graphs outside the hereditary class.
/// Disconnected graphs keep their counts but all verdicts are "-".
pub fn analyze_graph(g: &Graph) -> Result<AnalysisRecord> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::domain(format!("analysis needs n >= 2, got {n}")));
    }
    if n > CLASS_C_MAX_N {
        return Err(Error::capability(format!(
            "analysis is bounded at n <= {CLASS_C_MAX_N}, got {n}"
        )));
    }
    let ell = ell(g)?;
    let ul = ul(g)?;
    let br = br(g);
    let pendant = !pendant_edges(g).is_empty();
    let family_entry = classify_family(g);
    let family = family_entry.map_or_else(|| "none".to_string(), |e| e.label());
    let in_c = in_class_c(g)?.holds;

    let (main_ok, conj2_ok, conj3_ok) = if g.is_connected() {
        let in_f = family_entry.is_some_and(|e| e.group == crate::catalog::FamilyGroup::F);
        let main = if in_f || !in_c {
            TriState::NotApplicable
        } else {
            TriState::of(ell + br >= n)
        };
        (
            main,
            TriState::of(pendant || ell + br >= n),
            TriState::of(ell + ul >= n),
        )
    } else {
        (
            TriState::NotApplicable,
            TriState::NotApplicable,
            TriState::NotApplicable,
        )
    };

    Ok(AnalysisRecord {
        graph6: to_graph6(g),
        n,
        m: g.edge_count(),
        ell,
        br,
        ul,
        pendant,
        in_c,
        family,
        main_ok,
        conj2_ok,
        conj3_ok,
    })
}

/// Which inequality a search hunts violations of.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Inequality {
    /// ell + br >= n, recorded for every connected graph regardless of class.
    Main,
    /// ell + br >= n with no pendant edge escape hatch.
    Conj2,
    /// ell + ul >= n.
    Conj3,
}

impl Inequality {
    pub fn violated_by(self, r: &AnalysisRecord) -> bool {
        match self {
            Inequality::Main => r.ell + r.br < r.n,
            Inequality::Conj2 => !r.pendant && r.ell + r.br < r.n,
            Inequality::Conj3 => r.ell + r.ul < r.n,
        }
    }
}

/// All isomorphism classes of connected graphs with 2 <= |G| <= n_max that
/// violate the chosen inequality, in enumeration order.
pub fn find_counterexamples(n_max: usize, which: Inequality) -> Result<Vec<AnalysisRecord>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for g in enumerate_connected(n)?.iter() {
            let record = analyze_graph(g)?;
            if which.violated_by(&record) {
                out.push(record);
            }
        }
    }
    Ok(out)
}

/// Scan controls. `min_n` drops graphs too small to analyze; disconnected
/// inputs are skipped or recorded with "-" verdicts.
pub struct ScanOptions {
    pub skip_disconnected: bool,
    pub min_n: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            skip_disconnected: false,
            min_n: 2,
        }
    }
}

/// One scanned input line: a record, a deliberate skip, or a per-line error.
/// Scanning never aborts on malformed lines.
pub enum ScanOutcome {
    Record(Box<AnalysisRecord>),
    Skipped { line: usize, reason: String },
    Error { line: usize, message: String },
}

fn scan_line(line_no: usize, text: &str, opts: &ScanOptions) -> Option<ScanOutcome> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed.starts_with(">>") {
        return None; // generator headers and blank lines
    }
    let g = match parse_graph6(trimmed) {
        Ok(g) => g,
        Err(e) => {
            return Some(ScanOutcome::Error {
                line: line_no,
                message: e.to_string(),
            })
        }
    };
    if g.vertex_count() < opts.min_n {
        return Some(ScanOutcome::Skipped {
            line: line_no,
            reason: format!("n = {} below the minimum {}", g.vertex_count(), opts.min_n),
        });
    }
    if opts.skip_disconnected && !g.is_connected() {
        return Some(ScanOutcome::Skipped {
            line: line_no,
            reason: "disconnected".to_string(),
        });
    }
    match analyze_graph(&g) {
        Ok(r) => Some(ScanOutcome::Record(Box::new(r))),
        Err(e) => Some(ScanOutcome::Error {
            line: line_no,
            message: e.to_string(),
        }),
    }
}

/// Streams graph6 text through the analyzer in parallel chunks, emitting
/// outcomes in input order. The chunked reassembly makes the output
/// byte-identical whatever the worker count.
pub fn scan_g6_stream(
    input: impl BufRead,
    opts: &ScanOptions,
    mut emit: impl FnMut(ScanOutcome) -> Result<()>,
) -> Result<()> {
    const CHUNK: usize = 4096;
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
    let flush = |batch: &mut Vec<(usize, String)>,
                     emit: &mut dyn FnMut(ScanOutcome) -> Result<()>|
     -> Result<()> {
        let outcomes: Vec<Option<ScanOutcome>> = batch
            .par_iter()
            .map(|(no, text)| scan_line(*no, text, opts))
            .collect();
        for outcome in outcomes.into_iter().flatten() {
            emit(outcome)?;
        }
        batch.clear();
        Ok(())
    };
    for (idx, line) in input.lines().enumerate() {
        batch.push((idx + 1, line?));
        if batch.len() == CHUNK {
            flush(&mut batch, &mut emit)?;
        }
    }
    flush(&mut batch, &mut emit)?;
    Ok(())
}
