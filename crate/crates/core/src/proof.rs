//! Hilbert-style derivation checking over the synthetic axioms, the two
//! definitional equivalences, propositional tautologies and modus ponens.
//!
//! Proof scripts have one line per step:
//!
//! ```text
//! n. <formula> ; axiom5 S:=X P:=Y | def-o X Y | def-e X Y | taut | mp i j
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. For `mp i j`, one of
//! the cited lines must be the implication from the other to this line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::formula::{Atom, Copula, Formula, Quality, Schema};
use crate::parse::parse;

pub const MAX_TAUTOLOGY_ATOMS: usize = 12;

/// Truth-table check treating each distinct atom as a propositional letter.
pub fn is_tautology(f: &Formula) -> Result<bool> {
    let atoms: Vec<&Atom> = f.atoms().into_iter().collect();
    if atoms.len() > MAX_TAUTOLOGY_ATOMS {
        return Err(Error::AtomBudget {
            atoms: atoms.len(),
            max: MAX_TAUTOLOGY_ATOMS,
        });
    }
    let index: BTreeMap<&Atom, usize> = atoms.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    for row in 0u32..1 << atoms.len() {
        let value = f.eval_with(&mut |a| Ok::<_, ()>(row >> index[a] & 1 == 1));
        if value == Ok(false) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AxiomId {
    A5,
    A6,
    A7,
    A8,
    DefO,
    DefE,
}

impl AxiomId {
    pub fn keyword(self) -> &'static str {
        match self {
            AxiomId::A5 => "axiom5",
            AxiomId::A6 => "axiom6",
            AxiomId::A7 => "axiom7",
            AxiomId::A8 => "axiom8",
            AxiomId::DefO => "def-o",
            AxiomId::DefE => "def-e",
        }
    }

    fn from_keyword(s: &str) -> Option<AxiomId> {
        [
            AxiomId::A5,
            AxiomId::A6,
            AxiomId::A7,
            AxiomId::A8,
            AxiomId::DefO,
            AxiomId::DefE,
        ]
        .into_iter()
        .find(|a| a.keyword() == s)
    }

    pub fn schema(self) -> Schema {
        let src = match self {
            AxiomId::A5 => catalog::AXIOM5,
            AxiomId::A6 => catalog::AXIOM6,
            AxiomId::A7 => catalog::AXIOM7,
            AxiomId::A8 => catalog::AXIOM8,
            AxiomId::DefO => catalog::DEF_O,
            AxiomId::DefE => catalog::DEF_E,
        };
        Schema::parse_all_meta(src).expect("axiom schemas parse")
    }

    /// Axioms with countermodels under the direct nonempty semantics.
    pub fn is_semantically_refuted(self) -> bool {
        matches!(self, AxiomId::A6 | AxiomId::A8)
    }
}

/// Which rule sources a derivation may cite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomSet {
    pub axiom5: bool,
    pub axiom6: bool,
    pub axiom7: bool,
    pub axiom8: bool,
    pub definitional: bool,
    pub tautologies: bool,
}

impl AxiomSet {
    /// Axiom 5, the definitional schemas and tautologies.
    pub const A5_WITH_DEFINITIONS: AxiomSet = AxiomSet {
        axiom5: true,
        axiom6: false,
        axiom7: false,
        axiom8: false,
        definitional: true,
        tautologies: true,
    };

    pub const ALL: AxiomSet = AxiomSet {
        axiom5: true,
        axiom6: true,
        axiom7: true,
        axiom8: true,
        definitional: true,
        tautologies: true,
    };

    pub fn allows(&self, id: AxiomId) -> bool {
        match id {
            AxiomId::A5 => self.axiom5,
            AxiomId::A6 => self.axiom6,
            AxiomId::A7 => self.axiom7,
            AxiomId::A8 => self.axiom8,
            AxiomId::DefO | AxiomId::DefE => self.definitional,
        }
    }

    fn any_enabled(&self) -> bool {
        self.axiom5
            || self.axiom6
            || self.axiom7
            || self.axiom8
            || self.definitional
            || self.tautologies
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom {
        id: AxiomId,
        binding: Vec<(String, String)>,
    },
    Tautology,
    ModusPonens(usize, usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom { id, binding } => match id {
                AxiomId::DefO | AxiomId::DefE => {
                    let get = |k: &str| {
                        binding
                            .iter()
                            .find(|(m, _)| m == k)
                            .map_or("?", |(_, v)| v.as_str())
                    };
                    write!(f, "{} {} {}", id.keyword(), get("S"), get("P"))
                }
                _ => {
                    write!(f, "{}", id.keyword())?;
                    for (m, v) in binding {
                        write!(f, " {m}:={v}")?;
                    }
                    Ok(())
                }
            },
            Justification::Tautology => f.write_str("taut"),
            Justification::ModusPonens(i, j) => write!(f, "mp {i} {j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Derivation {
    pub lines: Vec<Line>,
}

impl Derivation {
    pub fn parse(text: &str) -> Result<Derivation> {
        let mut lines = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let no = no + 1;
            let raw = raw.trim();
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::ProofScript { line: no, message };
            let (head, just) = raw
                .split_once(';')
                .ok_or_else(|| err("missing `;` before the justification".into()))?;
            let (index, formula) = head
                .split_once('.')
                .ok_or_else(|| err("expected `n. <formula>`".into()))?;
            let index: usize = index
                .trim()
                .parse()
                .map_err(|_| err(format!("bad line number `{}`", index.trim())))?;
            let formula = parse(formula).map_err(|e| err(e.to_string()))?;
            let justification = parse_justification(just).map_err(err)?;
            lines.push(Line {
                index,
                formula,
                justification,
            });
        }
        Ok(Derivation { lines })
    }

    /// Script text that parses back to this derivation.
    pub fn to_script(&self) -> String {
        self.lines
            .iter()
            .map(|l| format!("{}. {} ; {}\n", l.index, l.formula, l.justification))
            .collect()
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }
}

fn parse_justification(src: &str) -> std::result::Result<Justification, String> {
    let words: Vec<&str> = src.split_whitespace().collect();
    match words.as_slice() {
        ["taut"] => Ok(Justification::Tautology),
        ["mp", i, j] => {
            let n = |s: &str| s.parse::<usize>().map_err(|_| format!("bad line reference `{s}`"));
            Ok(Justification::ModusPonens(n(i)?, n(j)?))
        }
        [kw @ ("def-o" | "def-e"), x, y] => Ok(Justification::Axiom {
            id: AxiomId::from_keyword(kw).expect("matched keyword"),
            binding: vec![("S".into(), x.to_string()), ("P".into(), y.to_string())],
        }),
        [kw, rest @ ..] if kw.starts_with("axiom") => {
            let id = AxiomId::from_keyword(kw).ok_or_else(|| format!("unknown axiom `{kw}`"))?;
            let binding = rest
                .iter()
                .map(|b| {
                    b.split_once(":=")
                        .map(|(m, v)| (m.to_string(), v.to_string()))
                        .ok_or_else(|| format!("expected `M:=T`, found `{b}`"))
                })
                .collect::<std::result::Result<_, _>>()?;
            Ok(Justification::Axiom { id, binding })
        }
        _ => Err(format!("unrecognized justification `{}`", src.trim())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum ProofVerdict {
    Accepted {
        conclusion: Formula,
        axioms_used: BTreeSet<AxiomId>,
        /// Set when a cited axiom has a countermodel under the direct
        /// nonempty semantics.
        relative_to_unsound_axiom: bool,
    },
    Rejected {
        line: usize,
        reason: String,
    },
}

impl ProofVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, ProofVerdict::Accepted { .. })
    }
}

impl fmt::Display for ProofVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProofVerdict::Accepted {
                conclusion,
                relative_to_unsound_axiom,
                ..
            } => {
                write!(f, "ok: {conclusion}")?;
                if *relative_to_unsound_axiom {
                    write!(f, " (derivation sound relative to an unsound axiom)")?;
                }
                Ok(())
            }
            ProofVerdict::Rejected { line, reason } => write!(f, "rejected at line {line}: {reason}"),
        }
    }
}

fn reject(line: usize, reason: impl Into<String>) -> ProofVerdict {
    ProofVerdict::Rejected {
        line,
        reason: reason.into(),
    }
}

/// Checks every line; the conclusion is the last line.
pub fn check_derivation(d: &Derivation, ax: &AxiomSet) -> ProofVerdict {
    if !ax.any_enabled() {
        return reject(0, "no rule source enabled");
    }
    let Some(last) = d.lines.last() else {
        return reject(0, "empty derivation");
    };
    let mut proved: BTreeMap<usize, &Formula> = BTreeMap::new();
    let mut used = BTreeSet::new();
    let mut prev = None;
    for line in &d.lines {
        let n = line.index;
        if prev.is_some_and(|p| n <= p) {
            return reject(n, "line numbers must strictly increase");
        }
        prev = Some(n);
        match &line.justification {
            Justification::Axiom { id, binding } => {
                if !ax.allows(*id) {
                    return reject(n, format!("{} is not in the axiom set", id.keyword()));
                }
                match id.schema().instantiate(binding) {
                    Ok(inst) if inst == line.formula => {}
                    Ok(inst) => {
                        return reject(
                            n,
                            format!("not an instance of {}: expected `{inst}`", id.keyword()),
                        )
                    }
                    Err(e) => return reject(n, e.to_string()),
                }
                used.insert(*id);
            }
            Justification::Tautology => {
                if !ax.tautologies {
                    return reject(n, "tautologies are not enabled");
                }
                match is_tautology(&line.formula) {
                    Ok(true) => {}
                    Ok(false) => return reject(n, "not a propositional tautology"),
                    Err(e) => return reject(n, e.to_string()),
                }
            }
            Justification::ModusPonens(i, j) => {
                let (Some(fi), Some(fj)) = (proved.get(i), proved.get(j)) else {
                    let missing = if proved.contains_key(i) { j } else { i };
                    return reject(n, format!("premise line {missing} is not an earlier line"));
                };
                let follows = |ante: &Formula, imp: &Formula| {
                    matches!(imp, Formula::Implies(l, r) if **l == *ante && **r == line.formula)
                };
                if !follows(fi, fj) && !follows(fj, fi) {
                    return reject(n, format!("does not follow from lines {i} and {j} by modus ponens"));
                }
            }
        }
        proved.insert(n, &line.formula);
    }
    ProofVerdict::Accepted {
        conclusion: last.formula.clone(),
        relative_to_unsound_axiom: used.iter().any(|a| a.is_semantically_refuted()),
        axioms_used: used,
    }
}

/// Checks `d` and that it concludes `target`.
pub fn check_theorem(d: &Derivation, ax: &AxiomSet, target: &Formula) -> ProofVerdict {
    match check_derivation(d, ax) {
        ProofVerdict::Accepted { conclusion, .. } if conclusion != *target => reject(
            d.lines.last().map_or(0, |l| l.index),
            format!("concludes `{conclusion}`, not `{target}`"),
        ),
        v => v,
    }
}

fn first_atom_mut(f: &mut Formula) -> Option<&mut Atom> {
    match f {
        Formula::Atom(a) => Some(a),
        Formula::Not(g) => first_atom_mut(g),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
            first_atom_mut(l).or_else(|| first_atom_mut(r))
        }
    }
}

fn next_quality(c: Copula) -> Copula {
    let q = match c.quality() {
        Quality::A => Quality::E,
        Quality::E => Quality::I,
        Quality::I => Quality::O,
        Quality::O => Quality::A,
    };
    Copula::of(c.family(), q)
}

/// Every derivation obtained from `d` by one edit to one line: negating
/// the formula, changing the quality or swapping the terms of its first
/// atom, or replacing the justification. Pairs each with the edited line.
pub fn line_mutations(d: &Derivation) -> Vec<(usize, Derivation)> {
    let mut out = Vec::new();
    for (k, line) in d.lines.iter().enumerate() {
        let mut edits: Vec<Line> = Vec::new();
        let mut negated = line.clone();
        negated.formula = Formula::not(line.formula.clone());
        edits.push(negated);
        let mut requalified = line.clone();
        if let Some(a) = first_atom_mut(&mut requalified.formula) {
            a.copula = next_quality(a.copula);
            edits.push(requalified);
        }
        let mut swapped = line.clone();
        if let Some(a) = first_atom_mut(&mut swapped.formula) {
            if a.subject != a.predicate {
                std::mem::swap(&mut a.subject, &mut a.predicate);
                edits.push(swapped);
            }
        }
        let mut rejustified = line.clone();
        rejustified.justification = match &line.justification {
            Justification::Axiom { .. } => Justification::Tautology,
            Justification::Tautology => Justification::ModusPonens(line.index, line.index),
            Justification::ModusPonens(i, j) => {
                let other = d.lines[..k].iter().map(|l| l.index).find(|n| n != i && n != j);
                match other {
                    Some(n) => Justification::ModusPonens(n, *j),
                    None => Justification::Tautology,
                }
            }
        };
        edits.push(rejustified);
        for edit in edits {
            let mut m = d.clone();
            m.lines[k] = edit;
            out.push((line.index, m));
        }
    }
    out
}

const BUNDLED: [(&str, &str); 20] = [
    ("T01", include_str!("../proofs/T01.prf")),
    ("T02", include_str!("../proofs/T02.prf")),
    ("T03", include_str!("../proofs/T03.prf")),
    ("T04", include_str!("../proofs/T04.prf")),
    ("T05", include_str!("../proofs/T05.prf")),
    ("T06", include_str!("../proofs/T06.prf")),
    ("T07", include_str!("../proofs/T07.prf")),
    ("T08", include_str!("../proofs/T08.prf")),
    ("T09", include_str!("../proofs/T09.prf")),
    ("T10", include_str!("../proofs/T10.prf")),
    ("T11", include_str!("../proofs/T11.prf")),
    ("T12", include_str!("../proofs/T12.prf")),
    ("T13", include_str!("../proofs/T13.prf")),
    ("T14", include_str!("../proofs/T14.prf")),
    ("T15", include_str!("../proofs/T15.prf")),
    ("T16", include_str!("../proofs/T16.prf")),
    ("T17", include_str!("../proofs/T17.prf")),
    ("T18", include_str!("../proofs/T18.prf")),
    ("T19", include_str!("../proofs/T19.prf")),
    ("T20", include_str!("../proofs/T20.prf")),
];

/// Derivations of T01-T20 from axiom 5 and the definitional schemas.
pub fn bundled_derivations() -> Vec<(&'static str, Derivation)> {
    BUNDLED
        .iter()
        .map(|(id, src)| (*id, Derivation::parse(src).expect("bundled proofs parse")))
        .collect()
}

pub fn bundled_script(id: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(i, _)| *i == id).map(|(_, s)| *s)
}
