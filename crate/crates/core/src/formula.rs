//! The syllogistic formula language: terms, copulas, atoms and their
//! propositional combinations, plus schemas with explicit metavariables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A term name such as `S`, `P` or `M`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermId(String);

impl TermId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if Copula::from_keyword(&name).is_some() {
            return Err(Error::ReservedTerm(name));
        }
        if !is_identifier(&name) {
            return Err(Error::InvalidTerm(name));
        }
        Ok(TermId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for TermId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for TermId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// The four analytic (Aristotelian) and four synthetic copulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Copula {
    AnA,
    AnE,
    AnI,
    AnO,
    SyA,
    SyE,
    SyI,
    SyO,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Analytic,
    Synthetic,
}

/// Corner of a square, shared by both copula families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quality {
    A,
    E,
    I,
    O,
}

impl Copula {
    pub const ALL: [Copula; 8] = [
        Copula::AnA,
        Copula::AnE,
        Copula::AnI,
        Copula::AnO,
        Copula::SyA,
        Copula::SyE,
        Copula::SyI,
        Copula::SyO,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Copula::AnA => "a",
            Copula::AnE => "e",
            Copula::AnI => "i",
            Copula::AnO => "o",
            Copula::SyA => "sa",
            Copula::SyE => "se",
            Copula::SyI => "si",
            Copula::SyO => "so",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Copula> {
        Copula::ALL.into_iter().find(|c| c.keyword() == s)
    }

    pub fn family(self) -> Family {
        match self {
            Copula::AnA | Copula::AnE | Copula::AnI | Copula::AnO => Family::Analytic,
            _ => Family::Synthetic,
        }
    }

    pub fn quality(self) -> Quality {
        match self {
            Copula::AnA | Copula::SyA => Quality::A,
            Copula::AnE | Copula::SyE => Quality::E,
            Copula::AnI | Copula::SyI => Quality::I,
            Copula::AnO | Copula::SyO => Quality::O,
        }
    }

    pub fn of(family: Family, quality: Quality) -> Copula {
        match (family, quality) {
            (Family::Analytic, Quality::A) => Copula::AnA,
            (Family::Analytic, Quality::E) => Copula::AnE,
            (Family::Analytic, Quality::I) => Copula::AnI,
            (Family::Analytic, Quality::O) => Copula::AnO,
            (Family::Synthetic, Quality::A) => Copula::SyA,
            (Family::Synthetic, Quality::E) => Copula::SyE,
            (Family::Synthetic, Quality::I) => Copula::SyI,
            (Family::Synthetic, Quality::O) => Copula::SyO,
        }
    }
}

/// `subject copula predicate`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub subject: TermId,
    pub copula: Copula,
    pub predicate: TermId,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.subject, self.copula.keyword(), self.predicate)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(subject: TermId, copula: Copula, predicate: TermId) -> Formula {
        Formula::Atom(Atom {
            subject,
            copula,
            predicate,
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    /// Visits every atom, left to right.
    pub fn for_each_atom<'a>(&'a self, visit: &mut impl FnMut(&'a Atom)) {
        match self {
            Formula::Atom(a) => visit(a),
            Formula::Not(x) => x.for_each_atom(visit),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.for_each_atom(visit);
                r.for_each_atom(visit);
            }
        }
    }

    /// Distinct atoms in sorted order.
    pub fn atoms(&self) -> BTreeSet<&Atom> {
        let mut out = BTreeSet::new();
        self.for_each_atom(&mut |a| {
            out.insert(a);
        });
        out
    }

    /// Distinct terms in sorted order.
    pub fn terms(&self) -> BTreeSet<TermId> {
        let mut out = BTreeSet::new();
        self.for_each_atom(&mut |a| {
            out.insert(a.subject.clone());
            out.insert(a.predicate.clone());
        });
        out
    }

    pub fn copulas(&self) -> BTreeSet<Copula> {
        let mut out = BTreeSet::new();
        self.for_each_atom(&mut |a| {
            out.insert(a.copula);
        });
        out
    }

    /// Evaluates the propositional structure, delegating atoms to `atom`.
    /// Both operands are always visited so atom errors are never skipped.
    pub fn eval_with<E>(
        &self,
        atom: &mut impl FnMut(&Atom) -> std::result::Result<bool, E>,
    ) -> std::result::Result<bool, E> {
        Ok(match self {
            Formula::Atom(a) => atom(a)?,
            Formula::Not(x) => !x.eval_with(atom)?,
            Formula::And(l, r) => {
                let l = l.eval_with(atom)?;
                r.eval_with(atom)? && l
            }
            Formula::Or(l, r) => {
                let l = l.eval_with(atom)?;
                r.eval_with(atom)? || l
            }
            Formula::Implies(l, r) => {
                let l = l.eval_with(atom)?;
                r.eval_with(atom)? || !l
            }
        })
    }

    /// Renames terms by `rename`; terms it maps to `None` are kept.
    pub fn map_terms(&self, rename: &impl Fn(&TermId) -> Option<TermId>) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(Atom {
                subject: rename(&a.subject).unwrap_or_else(|| a.subject.clone()),
                copula: a.copula,
                predicate: rename(&a.predicate).unwrap_or_else(|| a.predicate.clone()),
            }),
            Formula::Not(x) => Formula::not(x.map_terms(rename)),
            Formula::And(l, r) => Formula::and(l.map_terms(rename), r.map_terms(rename)),
            Formula::Or(l, r) => Formula::or(l.map_terms(rename), r.map_terms(rename)),
            Formula::Implies(l, r) => {
                Formula::implies(l.map_terms(rename), r.map_terms(rename))
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) | Formula::Atom(_) => 4,
        }
    }

    fn write_at(&self, out: &mut String, min_prec: u8) {
        let paren = self.precedence() < min_prec;
        if paren {
            out.push('(');
        }
        match self {
            Formula::Atom(a) => out.push_str(&a.to_string()),
            Formula::Not(x) => {
                out.push('~');
                x.write_at(out, 4);
            }
            Formula::And(l, r) => {
                l.write_at(out, 3);
                out.push_str(" & ");
                r.write_at(out, 4);
            }
            Formula::Or(l, r) => {
                l.write_at(out, 2);
                out.push_str(" | ");
                r.write_at(out, 3);
            }
            Formula::Implies(l, r) => {
                // binary antecedents are always parenthesized
                l.write_at(out, 4);
                out.push_str(" -> ");
                r.write_at(out, 1);
            }
        }
        if paren {
            out.push(')');
        }
    }

    /// Surface syntax that parses back to `self`. Parentheses appear only
    /// where precedence requires them, and around a binary antecedent of `->`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write_at(&mut out, 0);
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        Ok(crate::parse::parse(s)?)
    }
}

/// A formula some of whose terms are metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    formula: Formula,
    metavariables: Vec<TermId>,
}

impl Schema {
    pub fn new(formula: Formula, metavariables: Vec<TermId>) -> Result<Schema> {
        let terms = formula.terms();
        if let Some(m) = metavariables.iter().find(|m| !terms.contains(*m)) {
            return Err(Error::UnusedMetavariable(m.to_string()));
        }
        let mut metavariables = metavariables;
        metavariables.dedup();
        Ok(Schema {
            formula,
            metavariables,
        })
    }

    /// Parses `text`, treating every term in it as a metavariable.
    pub fn parse_all_meta(text: &str) -> Result<Schema> {
        let formula = crate::parse::parse(text)?;
        let metavariables = formula.terms().into_iter().collect();
        Schema::new(formula, metavariables)
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn metavariables(&self) -> &[TermId] {
        &self.metavariables
    }

    /// Simultaneous substitution of every metavariable.
    pub fn instantiate<K, V>(&self, binding: &[(K, V)]) -> Result<Formula>
    where
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let mut map = BTreeMap::new();
        for (k, v) in binding {
            map.insert(k.as_ref().to_string(), TermId::new(v.as_ref())?);
        }
        if let Some(m) = self
            .metavariables
            .iter()
            .find(|m| !map.contains_key(m.as_str()))
        {
            return Err(Error::MissingBinding(m.to_string()));
        }
        let meta: BTreeSet<&str> = self.metavariables.iter().map(TermId::as_str).collect();
        Ok(self.formula.map_terms(&|t| {
            if meta.contains(t.as_str()) {
                map.get(t.as_str()).cloned()
            } else {
                None
            }
        }))
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.formula.fmt(f)
    }
}

#[cfg(test)]
pub(crate) fn t(name: &str) -> TermId {
    TermId::new(name).unwrap()
}
