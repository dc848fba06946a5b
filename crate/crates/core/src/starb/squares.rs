//! The twelve order cases for `[f]`, `[f¬]` and their complements, the
//! algebraic opposition relations, and the exhaustive two-square sweep.

use std::fmt;

use serde::Serialize;

use super::algebra::{Algebra, UltraElement};
use crate::error::{Error, Result};

/// One of the four elements generated from `[f]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Corner {
    F,
    FNeg,
    NotF,
    NotFNeg,
}

impl Corner {
    pub fn label(self) -> &'static str {
        match self {
            Corner::F => "[f]",
            Corner::FNeg => "[f¬]",
            Corner::NotF => "¬[f]",
            Corner::NotFNeg => "¬[f¬]",
        }
    }

    pub fn of(self, x: &UltraElement) -> UltraElement {
        match self {
            Corner::F => *x,
            Corner::FNeg => x.fneg(),
            Corner::NotF => x.neg(),
            Corner::NotFNeg => x.fneg().neg(),
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A pointwise-order hypothesis on two corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Leq(Corner, Corner),
    Incomparable(Corner, Corner),
}

impl Hypothesis {
    pub fn holds(self, x: &UltraElement) -> bool {
        match self {
            Hypothesis::Leq(a, b) => a.of(x).le(&b.of(x)),
            Hypothesis::Incomparable(a, b) => {
                let (a, b) = (a.of(x), b.of(x));
                !a.le(&b) && !b.le(&a)
            }
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Leq(a, b) => write!(f, "{a} ≤ {b}"),
            Hypothesis::Incomparable(a, b) => write!(f, "{a} and {b} incomparable"),
        }
    }
}

impl Serialize for Hypothesis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// What a case asserts about the meet and join of its pair beyond the
/// bounds `inf ≥ *0` and `sup ≤ *1` that every case states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    BoundsOnly,
    InfIsBottom,
    SupIsTop,
}

#[derive(Clone, Copy, Debug)]
pub struct CaseDef {
    pub number: u8,
    pub hypothesis: Hypothesis,
    pub pair: (Corner, Corner),
    pub claim: Claim,
}

pub const CASES: [CaseDef; 12] = {
    use Claim::*;
    use Corner::*;
    use Hypothesis::*;
    const fn c(number: u8, hypothesis: Hypothesis, pair: (Corner, Corner), claim: Claim) -> CaseDef {
        CaseDef {
            number,
            hypothesis,
            pair,
            claim,
        }
    }
    [
        c(1, Incomparable(NotF, FNeg), (F, FNeg), BoundsOnly),
        c(2, Leq(FNeg, NotF), (F, FNeg), InfIsBottom),
        c(3, Leq(NotF, FNeg), (F, FNeg), SupIsTop),
        c(4, Incomparable(F, NotFNeg), (NotF, NotFNeg), BoundsOnly),
        c(5, Leq(F, NotFNeg), (NotF, NotFNeg), SupIsTop),
        c(6, Leq(NotFNeg, F), (NotF, NotFNeg), InfIsBottom),
        c(7, Incomparable(NotFNeg, NotF), (F, NotFNeg), BoundsOnly),
        c(8, Leq(NotFNeg, NotF), (F, NotFNeg), InfIsBottom),
        c(9, Leq(NotF, NotFNeg), (F, NotFNeg), SupIsTop),
        c(10, Incomparable(F, FNeg), (NotF, FNeg), BoundsOnly),
        c(11, Leq(F, FNeg), (NotF, FNeg), SupIsTop),
        c(12, Leq(FNeg, F), (NotF, FNeg), InfIsBottom),
    ]
};

impl CaseDef {
    pub fn conclusion(&self) -> String {
        let (a, b) = self.pair;
        match self.claim {
            Claim::BoundsOnly => format!("inf({a}, {b}) ≥ *0 and sup({a}, {b}) ≤ *1"),
            Claim::InfIsBottom => format!("inf({a}, {b}) = *0 and sup({a}, {b}) ≤ *1"),
            Claim::SupIsTop => format!("inf({a}, {b}) ≥ *0 and sup({a}, {b}) = *1"),
        }
    }

    /// `None` when the hypothesis fails, otherwise whether the conclusion
    /// holds.
    pub fn check(&self, x: &UltraElement) -> Option<bool> {
        if !self.hypothesis.holds(x) {
            return None;
        }
        let (a, b) = (self.pair.0.of(x), self.pair.1.of(x));
        let inf = a.inf(&b).expect("same algebra");
        let sup = a.sup(&b).expect("same algebra");
        let bottom = UltraElement::bottom(x.algebra());
        let top = UltraElement::top(x.algebra());
        let bounds = bottom.le(&inf) && sup.le(&top);
        Some(
            bounds
                && match self.claim {
                    Claim::BoundsOnly => true,
                    Claim::InfIsBottom => inf.is_bottom(),
                    Claim::SupIsTop => sup.is_top(),
                },
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub case: u8,
    pub hypothesis: Hypothesis,
    pub conclusion: String,
    pub hypothesis_holds: bool,
    /// Present only when the hypothesis holds.
    pub conclusion_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub element: UltraElement,
    pub cases: Vec<CaseOutcome>,
}

impl CaseReport {
    pub fn holding(&self) -> Vec<u8> {
        self.cases
            .iter()
            .filter(|c| c.hypothesis_holds)
            .map(|c| c.case)
            .collect()
    }

    pub fn violations(&self) -> Vec<u8> {
        self.cases
            .iter()
            .filter(|c| c.conclusion_holds == Some(false))
            .map(|c| c.case)
            .collect()
    }
}

pub fn classify_cases(x: &UltraElement) -> CaseReport {
    CaseReport {
        element: *x,
        cases: CASES
            .iter()
            .map(|c| {
                let checked = c.check(x);
                CaseOutcome {
                    case: c.number,
                    hypothesis: c.hypothesis,
                    conclusion: c.conclusion(),
                    hypothesis_holds: checked.is_some(),
                    conclusion_holds: checked,
                }
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseTally {
    pub case: u8,
    pub hypothesis: Hypothesis,
    pub conclusion: String,
    pub instances: usize,
    pub violations: Vec<UltraElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseSweep {
    pub atoms: usize,
    pub elements: usize,
    pub cases: Vec<CaseTally>,
    /// Elements whose meet or join with `[f¬]` is nonstandard.
    pub nonstandard_bounds: Vec<UltraElement>,
    pub passed: bool,
}

/// Runs every case over every element of the extension.
pub fn sweep_cases(alg: Algebra) -> CaseSweep {
    let all: Vec<UltraElement> = alg.ultra_elements().collect();
    let cases: Vec<CaseTally> = CASES
        .iter()
        .map(|c| {
            let checks: Vec<_> = all.iter().map(|x| (x, c.check(x))).collect();
            CaseTally {
                case: c.number,
                hypothesis: c.hypothesis,
                conclusion: c.conclusion(),
                instances: checks.iter().filter(|(_, r)| r.is_some()).count(),
                violations: checks
                    .iter()
                    .filter(|(_, r)| *r == Some(false))
                    .map(|(x, _)| **x)
                    .collect(),
            }
        })
        .collect();
    let nonstandard_bounds: Vec<UltraElement> = all
        .iter()
        .filter(|x| {
            !x.inf(&x.fneg()).expect("same algebra").is_standard()
                || !x.sup(&x.fneg()).expect("same algebra").is_standard()
        })
        .copied()
        .collect();
    let passed = nonstandard_bounds.is_empty() && cases.iter().all(|c| c.violations.is_empty());
    CaseSweep {
        atoms: alg.atoms(),
        elements: all.len(),
        cases,
        nonstandard_bounds,
        passed,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OppositionSet {
    pub contrary: bool,
    pub subcontrary: bool,
    pub contradictory: bool,
    pub subaltern_xy: bool,
    pub subaltern_yx: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Contrary,
    Subcontrary,
    Contradictory,
    /// The first element is below the second.
    Subaltern,
}

impl OppositionSet {
    pub fn has(&self, r: Relation) -> bool {
        match r {
            Relation::Contrary => self.contrary,
            Relation::Subcontrary => self.subcontrary,
            Relation::Contradictory => self.contradictory,
            Relation::Subaltern => self.subaltern_xy,
        }
    }
}

pub fn algebraic_opposition(x: &UltraElement, y: &UltraElement) -> Result<OppositionSet> {
    Ok(OppositionSet {
        contrary: x.inf(y)?.is_bottom(),
        subcontrary: x.sup(y)?.is_top(),
        contradictory: *y == x.neg(),
        subaltern_xy: x.le(y),
        subaltern_yx: y.le(x),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SquareShape {
    Conventional,
    Synthetic,
}

impl SquareShape {
    pub const BOTH: [SquareShape; 2] = [SquareShape::Conventional, SquareShape::Synthetic];

    /// The order hypothesis under which the square is drawn.
    pub fn condition(self) -> Hypothesis {
        match self {
            SquareShape::Conventional => Hypothesis::Leq(Corner::FNeg, Corner::NotF),
            SquareShape::Synthetic => Hypothesis::Leq(Corner::NotFNeg, Corner::NotF),
        }
    }

    /// The six relations the square asserts.
    pub fn relations(self) -> [(Relation, Corner, Corner); 6] {
        use Corner::*;
        use Relation::*;
        match self {
            SquareShape::Conventional => [
                (Contrary, F, FNeg),
                (Contradictory, F, NotF),
                (Contradictory, NotFNeg, FNeg),
                (Subcontrary, NotFNeg, NotF),
                (Subaltern, F, NotFNeg),
                (Subaltern, FNeg, NotF),
            ],
            SquareShape::Synthetic => [
                (Contrary, F, NotFNeg),
                (Contradictory, F, NotF),
                (Contradictory, NotFNeg, FNeg),
                (Subcontrary, NotF, FNeg),
                (Subaltern, F, FNeg),
                (Subaltern, NotFNeg, NotF),
            ],
        }
    }

    /// Relations of the square that fail at `x`.
    pub fn failures(self, x: &UltraElement) -> Vec<String> {
        self.relations()
            .iter()
            .filter(|(r, a, b)| {
                !algebraic_opposition(&a.of(x), &b.of(x))
                    .expect("same algebra")
                    .has(*r)
            })
            .map(|(r, a, b)| format!("{a}, {b} not {}", relation_name(*r)))
            .collect()
    }
}

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::Contrary => "contrary",
        Relation::Subcontrary => "subcontrary",
        Relation::Contradictory => "contradictory",
        Relation::Subaltern => "subaltern",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareSweep {
    pub square: SquareShape,
    pub condition: Hypothesis,
    pub satisfying: usize,
    pub nonstandard_satisfying: usize,
    pub nonstandard_example: Option<UltraElement>,
    pub failures: Vec<String>,
}

/// How often an order hypothesis yields all six relations of a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generation {
    Always,
    Sometimes,
    Never,
    /// No element satisfies the hypothesis.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisFinding {
    pub hypothesis: Hypothesis,
    pub satisfying: usize,
    pub conventional: Generation,
    pub synthetic: Generation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoSquaresReport {
    pub atoms: usize,
    pub elements: usize,
    pub squares: Vec<SquareSweep>,
    /// The eight pairwise order hypotheses between a corner and a
    /// complemented corner, and which square each one produces.
    pub hypotheses: Vec<HypothesisFinding>,
    pub findings: Vec<String>,
    pub passed: bool,
}

pub const MAX_SWEEP_ATOMS: usize = 3;

pub const ORDER_HYPOTHESES: [Hypothesis; 8] = {
    use Corner::*;
    use Hypothesis::Leq;
    [
        Leq(F, FNeg),
        Leq(F, NotFNeg),
        Leq(FNeg, F),
        Leq(FNeg, NotF),
        Leq(NotFNeg, F),
        Leq(NotFNeg, NotF),
        Leq(NotF, FNeg),
        Leq(NotF, NotFNeg),
    ]
};

fn generation(elements: &[&UltraElement], square: SquareShape) -> Generation {
    if elements.is_empty() {
        return Generation::Vacuous;
    }
    let good = elements.iter().filter(|x| square.failures(x).is_empty()).count();
    match good {
        0 => Generation::Never,
        n if n == elements.len() => Generation::Always,
        _ => Generation::Sometimes,
    }
}

/// Checks both squares over every element of the extension of `alg`.
pub fn verify_two_squares(alg: Algebra) -> Result<TwoSquaresReport> {
    if alg.atoms() > MAX_SWEEP_ATOMS {
        return Err(Error::BoundExceeded {
            what: "atoms for the two-square sweep",
            bound: alg.atoms(),
            max: MAX_SWEEP_ATOMS,
        });
    }
    let all: Vec<UltraElement> = alg.ultra_elements().collect();
    let squares: Vec<SquareSweep> = SquareShape::BOTH
        .iter()
        .map(|&square| {
            let condition = square.condition();
            let sat: Vec<&UltraElement> = all.iter().filter(|x| condition.holds(x)).collect();
            let failures = sat
                .iter()
                .flat_map(|x| square.failures(x).into_iter().map(move |m| format!("{x}: {m}")))
                .collect();
            let nonstandard: Vec<&&UltraElement> = sat.iter().filter(|x| !x.is_standard()).collect();
            SquareSweep {
                square,
                condition,
                satisfying: sat.len(),
                nonstandard_satisfying: nonstandard.len(),
                nonstandard_example: nonstandard.first().map(|x| ***x),
                failures,
            }
        })
        .collect();
    let hypotheses = ORDER_HYPOTHESES
        .iter()
        .map(|&h| {
            let sat: Vec<&UltraElement> = all.iter().filter(|x| h.holds(x)).collect();
            HypothesisFinding {
                hypothesis: h,
                satisfying: sat.len(),
                conventional: generation(&sat, SquareShape::Conventional),
                synthetic: generation(&sat, SquareShape::Synthetic),
            }
        })
        .collect();
    let mut findings = Vec::new();
    for s in &squares {
        let name = match s.square {
            SquareShape::Conventional => "conventional",
            SquareShape::Synthetic => "synthetic",
        };
        findings.push(match s.nonstandard_example {
            Some(x) => format!(
                "{name} condition {} is realized by {} nonstandard elements, e.g. {x}",
                s.condition, s.nonstandard_satisfying
            ),
            None => format!(
                "{name} condition {} forces [f] = [f¬] in this carrier",
                s.condition
            ),
        });
    }
    let passed = squares.iter().all(|s| s.failures.is_empty());
    Ok(TwoSquaresReport {
        atoms: alg.atoms(),
        elements: all.len(),
        squares,
        hypotheses,
        findings,
        passed,
    })
}
