//! The matrix logic over the extension, and syllogistic models whose atoms
//! take values among the four elements generated by one `[f]`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::algebra::{Algebra, Order, UltraElement};
use super::squares::Corner;
use crate::catalog;
use crate::error::{Error, Result};
use crate::formula::{Atom, Family, Formula, Quality};
use crate::opposition::{RelationKind, SquareSpec};

/// Truth values are the whole extension; only `*1` is designated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixLogic {
    algebra: Algebra,
}

impl MatrixLogic {
    pub fn new(algebra: Algebra) -> MatrixLogic {
        MatrixLogic { algebra }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn is_designated(&self, x: &UltraElement) -> bool {
        x.is_top()
    }

    pub fn neg(&self, x: &UltraElement) -> UltraElement {
        x.neg()
    }

    /// `¬sup(x, y) ∨ y`, which is `¬x ∨ y`.
    pub fn imp(&self, x: &UltraElement, y: &UltraElement) -> Result<UltraElement> {
        x.sup(y)?.neg().sup(y)
    }

    pub fn eval(&self, f: &Formula, v: &BTreeMap<Atom, UltraElement>) -> Result<UltraElement> {
        Ok(match f {
            Formula::Atom(a) => {
                let x = *v.get(a).ok_or_else(|| Error::UnboundAtom(a.to_string()))?;
                if x.algebra() != self.algebra {
                    return Err(Error::AlgebraMismatch(self.algebra.atoms(), x.algebra().atoms()));
                }
                x
            }
            Formula::Not(g) => self.eval(g, v)?.neg(),
            Formula::And(l, r) => self.eval(l, v)?.inf(&self.eval(r, v)?)?,
            Formula::Or(l, r) => self.eval(l, v)?.sup(&self.eval(r, v)?)?,
            Formula::Implies(l, r) => self.imp(&self.eval(l, v)?, &self.eval(r, v)?)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixLaws {
    pub atoms: usize,
    pub elements: usize,
    pub double_negation: bool,
    pub modus_ponens: bool,
    pub top_implies_identity: bool,
    pub implies_top: bool,
    /// `x ⇒ y` designated exactly when `x ≤ y` pointwise.
    pub designation_matches_order: bool,
    pub passed: bool,
}

pub fn check_matrix_laws(alg: Algebra) -> MatrixLaws {
    let ml = MatrixLogic::new(alg);
    let all: Vec<UltraElement> = alg.ultra_elements().collect();
    let top = UltraElement::top(alg);
    let imp = |x: &UltraElement, y: &UltraElement| ml.imp(x, y).expect("same algebra");
    let double_negation = all.iter().all(|x| x.neg().neg() == *x);
    let top_implies_identity = all.iter().all(|x| imp(&top, x) == *x);
    let implies_top = all.iter().all(|x| imp(x, &top).is_top());
    let mut modus_ponens = true;
    let mut designation_matches_order = true;
    for x in &all {
        for y in &all {
            let d = ml.is_designated(&imp(x, y));
            if ml.is_designated(x) && d && !ml.is_designated(y) {
                modus_ponens = false;
            }
            if d != x.leq(y, Order::Pointwise).expect("same algebra") {
                designation_matches_order = false;
            }
        }
    }
    MatrixLaws {
        atoms: alg.atoms(),
        elements: all.len(),
        double_negation,
        modus_ponens,
        top_implies_identity,
        implies_top,
        designation_matches_order,
        passed: double_negation
            && modus_ponens
            && top_implies_identity
            && implies_top
            && designation_matches_order,
    }
}

/// Which of the two assignments of corners to copulas a model uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Column {
    /// a ↦ [f], e ↦ [f¬], i ↦ ¬[f¬], o ↦ ¬[f].
    Primary,
    /// a ↦ ¬[f¬], e ↦ ¬[f], i ↦ [f], o ↦ [f¬].
    Alternate,
}

impl Column {
    pub fn corner(self, q: Quality) -> Corner {
        use Corner::*;
        match (self, q) {
            (Column::Primary, Quality::A) => F,
            (Column::Primary, Quality::E) => FNeg,
            (Column::Primary, Quality::I) => NotFNeg,
            (Column::Primary, Quality::O) => NotF,
            (Column::Alternate, Quality::A) => NotFNeg,
            (Column::Alternate, Quality::E) => NotF,
            (Column::Alternate, Quality::I) => F,
            (Column::Alternate, Quality::O) => FNeg,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Designation {
    /// Only `*1`.
    Strict,
    /// Everything pointwise above the threshold.
    Filter(UltraElement),
}

impl Designation {
    pub fn label(&self) -> String {
        match self {
            Designation::Strict => "strict".into(),
            Designation::Filter(t) => format!("filter {t}"),
        }
    }

    pub fn designates(&self, x: &UltraElement) -> Result<bool> {
        match self {
            Designation::Strict => Ok(x.is_top()),
            Designation::Filter(t) => t.leq(x, Order::Pointwise),
        }
    }
}

impl Serialize for Designation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

/// Atoms of one copula family, valued by copula alone: every `S ◇ P`
/// receives the corner the column assigns to `◇`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BridgeModel {
    pub generator: UltraElement,
    pub family: Family,
    pub column: Column,
    pub designation: Designation,
}

impl BridgeModel {
    /// `[f]`, `[f¬]`, `¬[f]`, `¬[f¬]`.
    pub fn carrier(&self) -> [UltraElement; 4] {
        [Corner::F, Corner::FNeg, Corner::NotF, Corner::NotFNeg].map(|c| c.of(&self.generator))
    }

    pub fn interpret(&self, a: &Atom) -> Result<UltraElement> {
        if a.copula.family() != self.family {
            return Err(Error::Uninterpretable(a.to_string()));
        }
        Ok(self.column.corner(a.copula.quality()).of(&self.generator))
    }

    /// Atoms are satisfied when their value is designated; connectives are
    /// classical.
    pub fn satisfies(&self, f: &Formula) -> Result<bool> {
        f.eval_with(&mut |a| self.designation.designates(&self.interpret(a)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeRow {
    pub formula: String,
    pub satisfied: usize,
    pub satisfied_nonstandard: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeTable {
    pub family: Family,
    pub column: Column,
    pub designation: Designation,
    pub generators: usize,
    pub nonstandard_generators: usize,
    pub rows: Vec<BridgeRow>,
}

fn relation_formula(kind: RelationKind, x: Formula, y: Formula) -> Formula {
    let both = Formula::and(x.clone(), y.clone());
    match kind {
        RelationKind::Contrary => Formula::not(both),
        RelationKind::Subcontrary => Formula::or(x, y),
        RelationKind::Contradictory => Formula::and(Formula::or(x, y), Formula::not(both)),
        RelationKind::SubalternationForward => Formula::implies(x, y),
        RelationKind::SubalternationBackward => Formula::implies(y, x),
        RelationKind::Independent => Formula::or(both.clone(), Formula::not(both)),
    }
}

/// The square laws of a family written as formulas, followed for the
/// synthetic family by its four axioms.
pub fn bridge_formulas(family: Family) -> Vec<Formula> {
    let spec = match family {
        Family::Analytic => SquareSpec::analytic(),
        Family::Synthetic => SquareSpec::synthetic(),
    };
    let mut out: Vec<Formula> = spec
        .expected()
        .iter()
        .map(|(x, y, k)| {
            relation_formula(
                *k,
                spec.corner(*x).formula().clone(),
                spec.corner(*y).formula().clone(),
            )
        })
        .collect();
    if family == Family::Synthetic {
        for src in [catalog::AXIOM5, catalog::AXIOM6, catalog::AXIOM7, catalog::AXIOM8] {
            out.push(crate::parse::parse(src).expect("axioms parse"));
        }
    }
    out
}

/// Satisfaction counts over every generator, for both families and
/// columns, under strict designation and under the filter above `*p`.
pub fn bridge_tables(alg: Algebra) -> Vec<BridgeTable> {
    let filter = Designation::Filter(
        UltraElement::standard(alg, alg.atom(0).expect("at least one atom")).expect("in range"),
    );
    let generators: Vec<UltraElement> = alg.ultra_elements().collect();
    let nonstandard = generators.iter().filter(|x| !x.is_standard()).count();
    let mut tables = Vec::new();
    for family in [Family::Analytic, Family::Synthetic] {
        let formulas = bridge_formulas(family);
        for column in [Column::Primary, Column::Alternate] {
            for designation in [Designation::Strict, filter] {
                let rows = formulas
                    .iter()
                    .map(|f| {
                        let sat: Vec<&UltraElement> = generators
                            .iter()
                            .filter(|g| {
                                BridgeModel {
                                    generator: **g,
                                    family,
                                    column,
                                    designation,
                                }
                                .satisfies(f)
                                .expect("family formulas are interpretable")
                            })
                            .collect();
                        BridgeRow {
                            formula: f.to_string(),
                            satisfied: sat.len(),
                            satisfied_nonstandard: sat.iter().filter(|g| !g.is_standard()).count(),
                        }
                    })
                    .collect();
                tables.push(BridgeTable {
                    family,
                    column,
                    designation,
                    generators: generators.len(),
                    nonstandard_generators: nonstandard,
                    rows,
                });
            }
        }
    }
    tables
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    const P: u32 = 0b01;

    fn alg(k: usize) -> Algebra {
        Algebra::new(k).unwrap()
    }

    fn el(f0: u32, f1: u32) -> UltraElement {
        UltraElement::new(alg(2), f0, f1).unwrap()
    }

    #[test]
    fn matrix_laws_hold() {
        for k in 1..=3 {
            assert!(check_matrix_laws(alg(k)).passed);
        }
        let ml = MatrixLogic::new(alg(2));
        assert!(ml.neg(&UltraElement::top(alg(2))).is_bottom());
    }

    #[test]
    fn implication_is_material() {
        let b = alg(2);
        let ml = MatrixLogic::new(b);
        for x in b.ultra_elements() {
            for y in b.ultra_elements() {
                assert_eq!(ml.imp(&x, &y).unwrap(), x.neg().sup(&y).unwrap());
                for a in b.elements() {
                    let expect = b.comp(x.apply(a)) | y.apply(a);
                    assert_eq!(ml.imp(&x, &y).unwrap().apply(a), expect);
                }
            }
        }
    }

    #[test]
    fn matrix_eval() {
        let b = alg(2);
        let ml = MatrixLogic::new(b);
        let f = parse("S sa P -> S se P").unwrap();
        let atoms: Vec<Atom> = f.atoms().into_iter().cloned().collect();
        let mut v = BTreeMap::new();
        v.insert(atoms[0].clone(), el(P, 0));
        assert!(matches!(ml.eval(&f, &v), Err(Error::UnboundAtom(_))));
        v.insert(atoms[1].clone(), el(P, 0).fneg());
        let got = ml.eval(&f, &v).unwrap();
        assert_eq!(got, ml.imp(&v[&atoms[0]], &v[&atoms[1]]).unwrap());
        v.insert(atoms[1].clone(), UltraElement::top(alg(1)));
        assert!(ml.eval(&f, &v).is_err());
    }

    fn model(x: UltraElement, designation: Designation) -> BridgeModel {
        BridgeModel {
            generator: x,
            family: Family::Synthetic,
            column: Column::Primary,
            designation,
        }
    }

    #[test]
    fn bridge_examples() {
        let m = model(el(P, 0), Designation::Strict);
        assert!(!m.satisfies(&parse("S sa P").unwrap()).unwrap());
        assert!(m.satisfies(&parse("~(S sa P)").unwrap()).unwrap());
        assert!(m.satisfies(&parse("S sa P -> S se P").unwrap()).unwrap());
        let top = model(UltraElement::top(alg(2)), Designation::Strict);
        assert!(top.satisfies(&parse("S sa P | S se P & ~(S se P)").unwrap()).unwrap());
        assert!(matches!(
            m.satisfies(&parse("S a P").unwrap()),
            Err(Error::Uninterpretable(_))
        ));
        assert_eq!(m.carrier()[1], el(0, P));
    }

    #[test]
    fn columns_assign_contradictory_pairs() {
        let b = alg(2);
        for x in b.ultra_elements() {
            for column in [Column::Primary, Column::Alternate] {
                let a = column.corner(Quality::A).of(&x);
                let o = column.corner(Quality::O).of(&x);
                let e = column.corner(Quality::E).of(&x);
                let i = column.corner(Quality::I).of(&x);
                assert_eq!(o, a.neg());
                assert_eq!(i, e.neg());
            }
        }
    }

    #[test]
    fn strict_designation_ignores_nonstandard_atoms() {
        let b = alg(2);
        for x in b.ultra_elements().filter(|x| !x.is_standard()) {
            let m = model(x, Designation::Strict);
            for c in ["S sa P", "S se P", "S si P", "S so P"] {
                assert!(!m.satisfies(&parse(c).unwrap()).unwrap(), "{x} {c}");
            }
        }
    }

    #[test]
    fn tables_are_complete() {
        let t = bridge_tables(alg(2));
        assert_eq!(t.len(), 8);
        assert!(t.iter().all(|t| t.generators == 16 && t.nonstandard_generators == 12));
        let syn = t.iter().find(|t| t.family == Family::Synthetic).unwrap();
        assert_eq!(syn.rows.len(), 10);
        // strict designation never satisfies a contradictory pair built
        // from a nonstandard generator
        let contradiction = syn.rows.iter().find(|r| r.formula.starts_with("(S sa P | S so P)")).unwrap();
        assert_eq!(contradiction.satisfied_nonstandard, 0);
    }
}
