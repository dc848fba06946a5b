//! Fixed catalog of the synthetic-square theorems (T01-T20) and the four
//! synthetic axioms (A5-A8), with their expected bounded status.

use serde::Serialize;

use crate::error::Result;
use crate::formula::Schema;
use crate::opposition::CheckStatus;
use crate::semantics::{Semantics, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Axiom(u8),
    TheoremList,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Expected {
    Valid,
    /// Smallest counterexample has this many individuals.
    Counterexample { size: usize },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub source: Source,
    pub schema: Schema,
    pub expected: Expected,
}

const THEOREMS: [&str; 20] = [
    "S sa P -> ~(S so P)",
    "~(S so P) -> S sa P",
    "S si P -> ~(S se P)",
    "~(S se P) -> S si P",
    "S se P -> ~(S si P)",
    "~(S si P) -> S se P",
    "S so P -> ~(S sa P)",
    "~(S sa P) -> S so P",
    "S sa P -> ~(S si P)",
    "S si P -> ~(S sa P)",
    "~(S se P) -> S so P",
    "~(S so P) -> S se P",
    "S sa P -> S se P",
    "S si P -> S so P",
    "S se P | S si P",
    "~(S se P & S si P)",
    "S sa P | S so P",
    "~(S sa P & S so P)",
    "~(S sa P & S si P)",
    "S se P | S so P",
];

pub const THEOREM_IDS: [&str; 20] = [
    "T01", "T02", "T03", "T04", "T05", "T06", "T07", "T08", "T09", "T10", "T11", "T12", "T13",
    "T14", "T15", "T16", "T17", "T18", "T19", "T20",
];

pub const AXIOM5: &str = "S sa P -> S se P";
pub const AXIOM6: &str = "S so P -> P so S";
pub const AXIOM7: &str = "(M sa P & S sa M) -> S sa P";
pub const AXIOM8: &str = "(M sa P & S se M) -> S se P";
/// Definitional equivalences for `so` and `se`, as conjunctions of the two
/// implications.
pub const DEF_O: &str = "(S so P -> ~(S sa P)) & (~(S sa P) -> S so P)";
pub const DEF_E: &str = "(S se P -> ~(S si P)) & (~(S si P) -> S se P)";

fn schema(src: &str) -> Schema {
    Schema::parse_all_meta(src).expect("catalog schemas parse")
}

/// The twenty theorems in listing order.
pub fn theorems() -> Vec<CatalogEntry> {
    THEOREM_IDS
        .iter()
        .zip(THEOREMS)
        .map(|(id, src)| CatalogEntry {
            id,
            source: Source::TheoremList,
            schema: schema(src),
            expected: Expected::Valid,
        })
        .collect()
}

pub fn axioms() -> Vec<CatalogEntry> {
    [
        ("A5", 5, AXIOM5, Expected::Valid),
        ("A6", 6, AXIOM6, Expected::Counterexample { size: 1 }),
        ("A7", 7, AXIOM7, Expected::Valid),
        ("A8", 8, AXIOM8, Expected::Counterexample { size: 2 }),
    ]
    .into_iter()
    .map(|(id, n, src, expected)| CatalogEntry {
        id,
        source: Source::Axiom(n),
        schema: schema(src),
        expected,
    })
    .collect()
}

/// Theorems followed by axioms.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut all = theorems();
    all.extend(axioms());
    all
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogResult {
    pub id: &'static str,
    pub source: Source,
    pub schema: String,
    pub semantics: Semantics,
    pub expected: Expected,
    pub verdict: Verdict,
    pub status: CheckStatus,
    pub note: String,
}

fn compare(expected: Expected, verdict: &Verdict, bound: usize) -> (CheckStatus, String) {
    match (expected, verdict) {
        (Expected::Valid, Verdict::Valid { .. }) => {
            (CheckStatus::Pass, format!("valid up to bound {bound}"))
        }
        (Expected::Valid, Verdict::Counterexample(w)) => (
            CheckStatus::Fail,
            format!("expected valid; counterexample #{}: {}", w.index, w.model),
        ),
        (Expected::Counterexample { size }, Verdict::Counterexample(w)) if w.size == size => (
            CheckStatus::Pass,
            format!("counterexample of size {size}: {}", w.model),
        ),
        (Expected::Counterexample { size }, Verdict::Counterexample(w)) => (
            CheckStatus::Fail,
            format!("expected smallest counterexample of size {size}, found size {}", w.size),
        ),
        (Expected::Counterexample { size }, Verdict::Valid { .. }) if bound < size => (
            CheckStatus::Inconclusive,
            format!("no counterexample found up to bound {bound} (needs {size})"),
        ),
        (Expected::Counterexample { size }, Verdict::Valid { .. }) => (
            CheckStatus::Fail,
            format!("expected counterexample of size {size}, none found up to bound {bound}"),
        ),
    }
}

pub fn run_entries(
    entries: &[CatalogEntry],
    sem: Semantics,
    bound: usize,
) -> Result<Vec<CatalogResult>> {
    entries
        .iter()
        .map(|e| {
            let verdict = sem.decide(e.schema.formula(), bound)?;
            let (status, note) = compare(e.expected, &verdict, bound);
            Ok(CatalogResult {
                id: e.id,
                source: e.source,
                schema: e.schema.to_string(),
                semantics: sem,
                expected: e.expected,
                verdict,
                status,
                note,
            })
        })
        .collect()
}

/// Every entry under the direct reading with a nonempty universe.
pub fn run_catalog(bound: usize) -> Result<Vec<CatalogResult>> {
    run_entries(&catalog(), Semantics::SYNTHETIC_DIRECT, bound)
}

pub fn summary_table(results: &[CatalogResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!(
            "{:<4} {:<34} {:<13} {}\n",
            r.id,
            r.schema,
            r.status.label(),
            r.note
        ));
    }
    out
}
