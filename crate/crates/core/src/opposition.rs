//! Opposition relations between two schemas, decided from the set of truth
//! pairs they take over every model up to a bound.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{Family, Formula, Quality, Schema, TermId};
use crate::semantics::{Model, Semantics, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationKind {
    Contradictory,
    Contrary,
    Subcontrary,
    SubalternationForward,
    SubalternationBackward,
    Independent,
}

impl RelationKind {
    /// The relation with its arguments exchanged.
    pub fn swapped(self) -> RelationKind {
        match self {
            RelationKind::SubalternationForward => RelationKind::SubalternationBackward,
            RelationKind::SubalternationBackward => RelationKind::SubalternationForward,
            k => k,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RelationKind::Contradictory => "contradictory",
            RelationKind::Contrary => "contrary",
            RelationKind::Subcontrary => "subcontrary",
            RelationKind::SubalternationForward => "subalternation",
            RelationKind::SubalternationBackward => "subalternation (converse)",
            RelationKind::Independent => "independent",
        }
    }

    /// Whether an observed truth profile contradicts this relation. Such a
    /// conflict is definitive: a larger bound only adds possibilities.
    fn forbids(self, p: &Profile) -> bool {
        match self {
            RelationKind::Contradictory => p.both_true.is_some() || p.both_false.is_some(),
            RelationKind::Contrary => p.both_true.is_some(),
            RelationKind::Subcontrary => p.both_false.is_some(),
            RelationKind::SubalternationForward => p.first_only.is_some(),
            RelationKind::SubalternationBackward => p.second_only.is_some(),
            RelationKind::Independent => false,
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First model realizing each combination of truth values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Profile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub both_true: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub both_false: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_only: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_only: Option<Witness>,
}

impl Profile {
    pub fn kind(&self) -> RelationKind {
        let bt = self.both_true.is_some();
        let bf = self.both_false.is_some();
        let fo = self.first_only.is_some();
        let so = self.second_only.is_some();
        match (bt, bf) {
            (false, false) => RelationKind::Contradictory,
            (false, true) => RelationKind::Contrary,
            (true, false) => RelationKind::Subcontrary,
            (true, true) if !fo && so => RelationKind::SubalternationForward,
            (true, true) if fo && !so => RelationKind::SubalternationBackward,
            _ => RelationKind::Independent,
        }
    }

    pub fn swapped(&self) -> Profile {
        Profile {
            both_true: self.both_true.clone(),
            both_false: self.both_false.clone(),
            first_only: self.second_only.clone(),
            second_only: self.first_only.clone(),
        }
    }

    /// Witnesses present, labeled.
    pub fn labeled(&self) -> Vec<(&'static str, &Witness)> {
        [
            ("bothTrue", &self.both_true),
            ("bothFalse", &self.both_false),
            ("firstOnly", &self.first_only),
            ("secondOnly", &self.second_only),
        ]
        .into_iter()
        .filter_map(|(l, w)| w.as_ref().map(|w| (l, w)))
        .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OppositionRelation {
    pub kind: RelationKind,
    pub witnesses: Profile,
}

fn metavariable_set(s: &Schema) -> BTreeSet<&TermId> {
    s.metavariables().iter().collect()
}

/// Classifies `(phi, psi)` by exhaustive search over all models up to
/// `bound`, interpreting both schemas over their shared metavariables.
pub fn classify_pair(
    phi: &Schema,
    psi: &Schema,
    sem: Semantics,
    bound: usize,
) -> Result<OppositionRelation> {
    classify_formulas(phi, psi, sem, bound).map(|witnesses| OppositionRelation {
        kind: witnesses.kind(),
        witnesses,
    })
}

fn classify_formulas(phi: &Schema, psi: &Schema, sem: Semantics, bound: usize) -> Result<Profile> {
    if metavariable_set(phi) != metavariable_set(psi) {
        return Err(Error::MetavariableMismatch {
            first: phi.metavariables().iter().map(|t| t.to_string()).collect(),
            second: psi.metavariables().iter().map(|t| t.to_string()).collect(),
        });
    }
    let (f, g) = (phi.formula(), psi.formula());
    sem.check_family(f)?;
    sem.check_family(g)?;
    let mut terms = f.terms();
    terms.extend(g.terms());
    let terms: Vec<TermId> = terms.into_iter().collect();
    let both = Formula::and(f.clone(), g.clone());

    let mut profile = Profile::default();
    for (index, m) in sem.models(&terms, bound)?.enumerate() {
        let slot = match (sem.eval(&m, f)?, sem.eval(&m, g)?) {
            (true, true) => &mut profile.both_true,
            (false, false) => &mut profile.both_false,
            (true, false) => &mut profile.first_only,
            (false, true) => &mut profile.second_only,
        };
        if slot.is_none() {
            *slot = Some(witness(sem, index, m, &both)?);
        }
    }
    Ok(profile)
}

fn witness(sem: Semantics, index: usize, model: Model, f: &Formula) -> Result<Witness> {
    Ok(Witness {
        index,
        size: model.size(),
        trace: sem.trace(&model, f)?,
        model,
    })
}

/// Four corner schemas and the relation expected on each of the six pairs.
#[derive(Clone, Debug)]
pub struct SquareSpec {
    pub name: String,
    corners: Vec<(Quality, Schema)>,
    expected: Vec<(Quality, Quality, RelationKind)>,
}

impl SquareSpec {
    pub fn new(
        name: impl Into<String>,
        corners: Vec<(Quality, Schema)>,
        expected: Vec<(Quality, Quality, RelationKind)>,
    ) -> Result<SquareSpec> {
        let bad = |msg: &str| Error::ModelFile(format!("square specification: {msg}"));
        let labels: BTreeSet<Quality> = corners.iter().map(|(q, _)| *q).collect();
        if corners.len() != 4 || labels.len() != 4 {
            return Err(bad("needs four distinct corners"));
        }
        let pairs: BTreeSet<(Quality, Quality)> = expected
            .iter()
            .map(|(x, y, _)| if x < y { (*x, *y) } else { (*y, *x) })
            .collect();
        if expected.len() != 6 || pairs.len() != 6 || pairs.iter().any(|(x, y)| x == y) {
            return Err(bad("needs exactly one relation per unordered corner pair"));
        }
        Ok(SquareSpec {
            name: name.into(),
            corners,
            expected,
        })
    }

    pub fn corner(&self, q: Quality) -> &Schema {
        &self
            .corners
            .iter()
            .find(|(c, _)| *c == q)
            .expect("all four corners present")
            .1
    }

    pub fn corners(&self) -> &[(Quality, Schema)] {
        &self.corners
    }

    pub fn expected(&self) -> &[(Quality, Quality, RelationKind)] {
        &self.expected
    }

    fn standard(name: &str, family: Family, expected: Vec<(Quality, Quality, RelationKind)>) -> Self {
        let corners = [Quality::A, Quality::E, Quality::I, Quality::O]
            .into_iter()
            .map(|q| {
                let c = crate::formula::Copula::of(family, q);
                let s = Schema::parse_all_meta(&format!("S {} P", c.keyword()))
                    .expect("corner schema parses");
                (q, s)
            })
            .collect();
        SquareSpec::new(name, corners, expected).expect("standard squares are well formed")
    }

    /// The conventional square: a,e contrary; i,o subcontrary; a,o and e,i
    /// contradictory; a to i and e to o subalternation.
    pub fn analytic() -> SquareSpec {
        use Quality::*;
        use RelationKind::*;
        SquareSpec::standard(
            "analytic square",
            Family::Analytic,
            vec![
                (A, E, Contrary),
                (I, O, Subcontrary),
                (A, O, Contradictory),
                (E, I, Contradictory),
                (A, I, SubalternationForward),
                (E, O, SubalternationForward),
            ],
        )
    }

    /// The synthetic square: a,i contrary; e,o subcontrary; a,o and e,i
    /// contradictory; a to e and i to o subalternation.
    pub fn synthetic() -> SquareSpec {
        use Quality::*;
        use RelationKind::*;
        SquareSpec::standard(
            "synthetic square",
            Family::Synthetic,
            vec![
                (A, I, Contrary),
                (E, O, Subcontrary),
                (A, O, Contradictory),
                (E, I, Contradictory),
                (A, E, SubalternationForward),
                (I, O, SubalternationForward),
            ],
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    /// No conflicting witness, but a witness the relation needs was not
    /// found within the bound.
    Inconclusive,
    Fail,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
            CheckStatus::Fail => "FAIL",
        }
    }

    /// Worst of two statuses.
    pub fn and(self, other: CheckStatus) -> CheckStatus {
        use CheckStatus::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub first: Quality,
    pub second: Quality,
    pub first_formula: Formula,
    pub second_formula: Formula,
    pub expected: RelationKind,
    pub observed: RelationKind,
    pub status: CheckStatus,
    pub witnesses: Profile,
}

impl PairReport {
    /// Witness showing why the expectation failed, if any.
    pub fn conflict(&self) -> Option<(&'static str, &Witness)> {
        let p = &self.witnesses;
        let candidates: [(&'static str, &Option<Witness>, bool); 4] = [
            ("bothTrue", &p.both_true, matches!(self.expected, RelationKind::Contradictory | RelationKind::Contrary)),
            ("bothFalse", &p.both_false, matches!(self.expected, RelationKind::Contradictory | RelationKind::Subcontrary)),
            ("firstOnly", &p.first_only, self.expected == RelationKind::SubalternationForward),
            ("secondOnly", &p.second_only, self.expected == RelationKind::SubalternationBackward),
        ];
        candidates
            .into_iter()
            .find_map(|(l, w, relevant)| if relevant { w.as_ref().map(|w| (l, w)) } else { None })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareReport {
    pub name: String,
    pub semantics: Semantics,
    pub bound: usize,
    pub corners: Vec<(Quality, Formula)>,
    pub pairs: Vec<PairReport>,
    pub status: CheckStatus,
}

impl SquareReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn pair(&self, x: Quality, y: Quality) -> Option<&PairReport> {
        self.pairs
            .iter()
            .find(|p| (p.first, p.second) == (x, y) || (p.first, p.second) == (y, x))
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} under {} up to bound {}: {}\n",
            self.name,
            self.semantics,
            self.bound,
            self.status.label()
        );
        for p in &self.pairs {
            out.push_str(&format!(
                "  {:?}-{:?}  expected {:<26} observed {:<26} {}",
                p.first,
                p.second,
                p.expected.name(),
                p.observed.name(),
                p.status.label()
            ));
            if let Some((label, w)) = p.conflict() {
                out.push_str(&format!("  [{label} witness #{}: {}]", w.index, w.model));
            }
            out.push('\n');
        }
        out
    }
}

/// Classifies every corner pair and compares with the expectation.
pub fn verify_square(spec: &SquareSpec, sem: Semantics, bound: usize) -> Result<SquareReport> {
    let mut pairs = Vec::with_capacity(6);
    let mut status = CheckStatus::Pass;
    for &(x, y, expected) in spec.expected() {
        let rel = classify_pair(spec.corner(x), spec.corner(y), sem, bound)?;
        let pair_status = if rel.kind == expected {
            CheckStatus::Pass
        } else if expected.forbids(&rel.witnesses) {
            CheckStatus::Fail
        } else {
            CheckStatus::Inconclusive
        };
        status = status.and(pair_status);
        pairs.push(PairReport {
            first: x,
            second: y,
            first_formula: spec.corner(x).formula().clone(),
            second_formula: spec.corner(y).formula().clone(),
            expected,
            observed: rel.kind,
            status: pair_status,
            witnesses: rel.witnesses,
        });
    }
    Ok(SquareReport {
        name: spec.name.clone(),
        semantics: sem,
        bound,
        corners: spec
            .corners()
            .iter()
            .map(|(q, s)| (*q, s.formula().clone()))
            .collect(),
        pairs,
        status,
    })
}
