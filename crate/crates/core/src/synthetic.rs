//! Semantics of the synthetic copulas.
//!
//! Each atom quantifies over a finite universe of individuals `A` and asks
//! whether `A is S`:
//!
//! ```text
//! S sa P  :=  ∃A (A is S) ∨ ∀A (A is P ∧ A is S)
//! S si P  :=  ∀A (A is P ∧ ¬ A is S)
//! S so P  :=  ∀A ¬(A is S) ∧ ∃A (¬ A is P ∨ ¬ A is S)
//! S se P  :=  ∃A (¬ A is P ∨ A is S)
//! ```
//!
//! Under the direct reading `is` is a primitive relation between individuals
//! and terms. The derived readings interpret terms as individuals of a
//! [`CopulaStructure`] and compute `A is B` from a primitive relation between
//! individuals.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analytic::MAX_SEARCH_BITS;
use crate::error::{Error, Result};
use crate::formula::{Atom, Copula, Formula, TermId};

pub const MAX_DIRECT_UNIVERSE: usize = 4;
pub const MAX_DERIVED_UNIVERSE: usize = 3;

const NAMES: [&str; 8] = ["u", "v", "w", "x", "y", "z", "u7", "u8"];

fn individual_name(i: usize) -> String {
    NAMES.get(i).map_or_else(|| format!("u{}", i + 1), |s| s.to_string())
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    #[default]
    Direct,
    DerivedLiteral,
    DerivedCharitable,
}

impl Reading {
    pub fn label(self) -> &'static str {
        match self {
            Reading::Direct => "direct",
            Reading::DerivedLiteral => "derived",
            Reading::DerivedCharitable => "derived-charitable",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SyntheticOptions {
    pub reading: Reading,
    pub allow_empty_universe: bool,
}

impl SyntheticOptions {
    pub const DIRECT: SyntheticOptions = SyntheticOptions {
        reading: Reading::Direct,
        allow_empty_universe: false,
    };

    pub fn with_empty(self, allow: bool) -> Self {
        SyntheticOptions {
            allow_empty_universe: allow,
            ..self
        }
    }
}

/// A universe with a primitive `A is T` relation, stored per term as a
/// bitmask over universe positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntheticModel {
    universe: Vec<String>,
    is: BTreeMap<TermId, u64>,
}

impl SyntheticModel {
    pub fn new(universe: Vec<String>, is: BTreeMap<TermId, u64>) -> Result<Self> {
        if universe.len() > 64 {
            return Err(Error::ModelFile("universe larger than 64 individuals".into()));
        }
        let full = full_mask(universe.len());
        if is.values().any(|m| m & !full != 0) {
            return Err(Error::ModelFile("`is` entry outside the universe".into()));
        }
        Ok(SyntheticModel { universe, is })
    }

    /// Builds a model from `(individual, terms it is)` listings; `terms`
    /// declares additional terms that no individual is.
    pub fn from_listing<U, I, T>(
        universe: U,
        is: impl IntoIterator<Item = (I, Vec<T>)>,
        terms: impl IntoIterator<Item = T>,
    ) -> Result<Self>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        I: AsRef<str>,
        T: AsRef<str>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let mut masks: BTreeMap<TermId, u64> = BTreeMap::new();
        for t in terms {
            masks.entry(TermId::new(t.as_ref())?).or_insert(0);
        }
        for (ind, ts) in is {
            let pos = universe
                .iter()
                .position(|u| u == ind.as_ref())
                .ok_or_else(|| Error::UnknownIndividual(ind.as_ref().to_string()))?;
            for t in ts {
                *masks.entry(TermId::new(t.as_ref())?).or_insert(0) |= 1 << pos;
            }
        }
        SyntheticModel::new(universe, masks)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn terms(&self) -> impl Iterator<Item = &TermId> {
        self.is.keys()
    }

    pub fn is_mask(&self, term: &TermId) -> Result<u64> {
        self.is
            .get(term)
            .copied()
            .ok_or_else(|| Error::UnknownTerm(term.to_string()))
    }

    /// Whether individual at position `ind` is `term`.
    pub fn is(&self, ind: usize, term: &TermId) -> Result<bool> {
        Ok(self.is_mask(term)? >> ind & 1 == 1)
    }

    /// Terms each individual is, in universe order.
    pub fn listing(&self) -> Vec<(&str, Vec<&TermId>)> {
        self.universe
            .iter()
            .enumerate()
            .map(|(i, u)| {
                let ts = self.is.iter().filter(|(_, m)| *m >> i & 1 == 1).map(|(t, _)| t);
                (u.as_str(), ts.collect())
            })
            .collect()
    }
}

/// Universe with a primitive relation between individuals and a
/// denotation of terms as individuals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopulaStructure {
    universe: Vec<String>,
    /// `prim_into[x]` has bit `c` set iff `isPrim(c, x)`.
    prim_into: Vec<u64>,
    denote: BTreeMap<TermId, usize>,
}

impl CopulaStructure {
    pub fn new<U, P, D>(
        universe: U,
        is_prim: impl IntoIterator<Item = (P, P)>,
        denote: impl IntoIterator<Item = (D, P)>,
    ) -> Result<Self>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: AsRef<str>,
        D: AsRef<str>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        if universe.len() > 64 {
            return Err(Error::ModelFile("universe larger than 64 individuals".into()));
        }
        let find = |name: &str| {
            universe
                .iter()
                .position(|u| u == name)
                .ok_or_else(|| Error::UnknownIndividual(name.to_string()))
        };
        let mut prim_into = vec![0u64; universe.len()];
        for (c, x) in is_prim {
            let c = find(c.as_ref())?;
            let x = find(x.as_ref())?;
            prim_into[x] |= 1 << c;
        }
        let mut den = BTreeMap::new();
        for (t, x) in denote {
            den.insert(TermId::new(t.as_ref())?, find(x.as_ref())?);
        }
        Ok(CopulaStructure {
            universe,
            prim_into,
            denote: den,
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn is_prim(&self, c: usize, x: usize) -> bool {
        self.prim_into[x] >> c & 1 == 1
    }

    /// Primitive pairs `(c, x)` in row-major order.
    pub fn prim_pairs(&self) -> Vec<(&str, &str)> {
        let n = self.universe.len();
        let mut out = Vec::new();
        for c in 0..n {
            for x in 0..n {
                if self.is_prim(c, x) {
                    out.push((self.universe[c].as_str(), self.universe[x].as_str()));
                }
            }
        }
        out
    }

    pub fn denotation(&self) -> impl Iterator<Item = (&TermId, &str)> {
        self.denote
            .iter()
            .map(|(t, x)| (t, self.universe[*x].as_str()))
    }

    fn position(&self, name: &str) -> Result<usize> {
        self.universe
            .iter()
            .position(|u| u == name)
            .ok_or_else(|| Error::UnknownIndividual(name.to_string()))
    }

    fn copula_at(&self, a: usize, b: usize, charitable: bool) -> bool {
        let full = full_mask(self.universe.len());
        let witnesses = self.prim_into[a];
        if witnesses == 0 {
            return false;
        }
        // every pair of witnesses (including a witness with itself) is related
        let unique = (0..self.universe.len())
            .filter(|c| witnesses >> c & 1 == 1)
            .all(|c| witnesses & !self.prim_into[c] == 0);
        if !unique {
            return false;
        }
        if charitable {
            witnesses & !self.prim_into[b] == 0
        } else {
            witnesses == full && self.prim_into[b] == full
        }
    }

    /// `a is b` computed from the primitive relation.
    pub fn derived_copula(&self, a: &str, b: &str, charitable: bool) -> Result<bool> {
        Ok(self.copula_at(self.position(a)?, self.position(b)?, charitable))
    }

    /// The `A is T` relation this structure induces on its terms.
    pub fn induced(&self, charitable: bool) -> SyntheticModel {
        let n = self.universe.len();
        let is = self
            .denote
            .iter()
            .map(|(t, &b)| {
                let mask = (0..n)
                    .filter(|&a| self.copula_at(a, b, charitable))
                    .fold(0u64, |m, a| m | 1 << a);
                (t.clone(), mask)
            })
            .collect();
        SyntheticModel {
            universe: self.universe.clone(),
            is,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SyntheticStructure {
    Direct(SyntheticModel),
    Copula(CopulaStructure),
}

impl SyntheticStructure {
    pub fn universe(&self) -> &[String] {
        match self {
            SyntheticStructure::Direct(m) => m.universe(),
            SyntheticStructure::Copula(c) => c.universe(),
        }
    }
}

/// Atom truth over a direct model using bitmask quantifiers.
pub fn eval_atom_direct(m: &SyntheticModel, atom: &Atom) -> Result<bool> {
    let full = full_mask(m.universe.len());
    let s = m.is_mask(&atom.subject)?;
    let p = m.is_mask(&atom.predicate)?;
    Ok(match atom.copula {
        Copula::SyA => s != 0 || p & s == full,
        Copula::SyI => p & !s & full == full,
        Copula::SyO => s == 0 && (!p | !s) & full != 0,
        Copula::SyE => (!p | s) & full != 0,
        c => {
            return Err(Error::WrongCopulaFamily {
                copula: c.keyword(),
                semantics: "synthetic",
            })
        }
    })
}

fn eval_direct(m: &SyntheticModel, f: &Formula, allow_empty: bool) -> Result<bool> {
    if m.universe.is_empty() && !allow_empty {
        return Err(Error::EmptyUniverse);
    }
    f.eval_with(&mut |a| eval_atom_direct(m, a))
}

pub fn eval_synthetic(
    m: &SyntheticStructure,
    f: &Formula,
    opts: SyntheticOptions,
) -> Result<bool> {
    match (m, opts.reading) {
        (SyntheticStructure::Direct(m), Reading::Direct) => {
            eval_direct(m, f, opts.allow_empty_universe)
        }
        (SyntheticStructure::Copula(c), Reading::DerivedLiteral) => {
            eval_direct(&c.induced(false), f, opts.allow_empty_universe)
        }
        (SyntheticStructure::Copula(c), Reading::DerivedCharitable) => {
            eval_direct(&c.induced(true), f, opts.allow_empty_universe)
        }
        (_, r) => Err(Error::ReadingMismatch(r.label())),
    }
}

/// All structures for the reading up to `max_universe` individuals.
///
/// Direct models are ordered like analytic ones (by size, then by an
/// ascending code with one bit block per term). Copula structures are
/// ordered by size, then primitive-relation code, then denotation.
pub fn enumerate_synthetic_models(
    terms: &[TermId],
    max_universe: usize,
    opts: SyntheticOptions,
) -> Result<SyntheticModels> {
    let (max, what) = match opts.reading {
        Reading::Direct => (MAX_DIRECT_UNIVERSE, "direct-reading universe size"),
        _ => (MAX_DERIVED_UNIVERSE, "derived-reading universe size"),
    };
    if max_universe > max {
        return Err(Error::BoundExceeded {
            what,
            bound: max_universe,
            max,
        });
    }
    if opts.reading == Reading::Direct && max_universe * terms.len() > MAX_SEARCH_BITS {
        return Err(Error::BoundExceeded {
            what: "synthetic search space (universe size x terms, in bits)",
            bound: max_universe * terms.len(),
            max: MAX_SEARCH_BITS,
        });
    }
    let size = usize::from(!opts.allow_empty_universe);
    Ok(SyntheticModels {
        terms: terms.to_vec(),
        reading: opts.reading,
        max: max_universe,
        size,
        code: 0,
        denote: 0,
    })
}

pub struct SyntheticModels {
    terms: Vec<TermId>,
    reading: Reading,
    max: usize,
    size: usize,
    code: u64,
    denote: u64,
}

impl SyntheticModels {
    fn next_direct(&mut self) -> Option<SyntheticStructure> {
        let k = self.terms.len();
        loop {
            if self.size > self.max {
                return None;
            }
            if self.code >> (self.size * k) == 0 {
                break;
            }
            self.size += 1;
            self.code = 0;
        }
        let n = self.size;
        let block = full_mask(n);
        let is = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), (self.code >> (i * n)) & block))
            .collect();
        self.code += 1;
        Some(SyntheticStructure::Direct(SyntheticModel {
            universe: (0..n).map(individual_name).collect(),
            is,
        }))
    }

    fn next_copula(&mut self) -> Option<SyntheticStructure> {
        let k = self.terms.len() as u32;
        loop {
            if self.size > self.max {
                return None;
            }
            let n = self.size as u64;
            let denotations = n.pow(k);
            if self.denote >= denotations {
                self.denote = 0;
                self.code += 1;
            }
            if denotations > 0 && self.code >> (n * n) == 0 {
                break;
            }
            self.size += 1;
            self.code = 0;
            self.denote = 0;
        }
        let n = self.size;
        let block = full_mask(n);
        let prim_into = (0..n).map(|x| (self.code >> (x * n)) & block).collect();
        let mut rest = self.denote;
        let denote = self
            .terms
            .iter()
            .map(|t| {
                let x = (rest % n as u64) as usize;
                rest /= n as u64;
                (t.clone(), x)
            })
            .collect();
        self.denote += 1;
        Some(SyntheticStructure::Copula(CopulaStructure {
            universe: (0..n).map(individual_name).collect(),
            prim_into,
            denote,
        }))
    }
}

impl Iterator for SyntheticModels {
    type Item = SyntheticStructure;

    fn next(&mut self) -> Option<SyntheticStructure> {
        match self.reading {
            Reading::Direct => self.next_direct(),
            _ => self.next_copula(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::t;
    use crate::parse::parse;

    // Oracle: explicit quantifier expansion over universe positions.
    fn oracle(m: &SyntheticModel, atom: &Atom, unexpanded: bool) -> bool {
        let n = m.universe().len();
        let is = |a: usize, term: &TermId| m.is(a, term).unwrap();
        let (s, p) = (&atom.subject, &atom.predicate);
        let eq1 = (0..n).any(|a| is(a, s)) || (0..n).all(|a| is(a, p) && is(a, s));
        let eq2 = (0..n).all(|a| is(a, p) && !is(a, s));
        match atom.copula {
            Copula::SyA => eq1,
            Copula::SyI => eq2,
            Copula::SyO if unexpanded => !eq1,
            Copula::SyO => {
                (0..n).all(|a| !is(a, s)) && (0..n).any(|a| !is(a, p) || !is(a, s))
            }
            Copula::SyE if unexpanded => !eq2,
            Copula::SyE => (0..n).any(|a| !is(a, p) || is(a, s)),
            _ => unreachable!(),
        }
    }

    fn direct(universe: &[&str], is: &[(&str, &[&str])], terms: &[&str]) -> SyntheticStructure {
        SyntheticStructure::Direct(
            SyntheticModel::from_listing(
                universe.iter().copied(),
                is.iter().map(|(u, ts)| (*u, ts.to_vec())),
                terms.iter().copied(),
            )
            .unwrap(),
        )
    }

    fn eval(m: &SyntheticStructure, src: &str, opts: SyntheticOptions) -> bool {
        eval_synthetic(m, &parse(src).unwrap(), opts).unwrap()
    }

    const SP: [Copula; 4] = [Copula::SyA, Copula::SyE, Copula::SyI, Copula::SyO];

    #[test]
    fn single_individual_not_s_but_p() {
        let m = direct(&["u"], &[("u", &["P"])], &["S"]);
        let o = SyntheticOptions::DIRECT;
        assert!(eval(&m, "S si P", o));
        assert!(!eval(&m, "S sa P", o));
        assert!(eval(&m, "S so P", o));
        assert!(!eval(&m, "S se P", o));
    }

    #[test]
    fn empty_universe_is_vacuous() {
        let m = direct(&[], &[], &["S", "P"]);
        let o = SyntheticOptions::DIRECT.with_empty(true);
        assert!(eval(&m, "S si P", o));
        assert!(eval(&m, "S sa P", o));
        assert!(matches!(
            eval_synthetic(&m, &parse("S sa P").unwrap(), SyntheticOptions::DIRECT),
            Err(Error::EmptyUniverse)
        ));
    }

    #[test]
    fn first_disjunct_makes_sa_true() {
        let m = direct(&["u"], &[("u", &["S"])], &["P"]);
        assert!(eval(&m, "S sa P", SyntheticOptions::DIRECT));
    }

    #[test]
    fn wrong_family_and_reading() {
        let m = direct(&["u"], &[("u", &["S", "P"])], &[]);
        assert!(matches!(
            eval_synthetic(&m, &parse("S a P").unwrap(), SyntheticOptions::DIRECT),
            Err(Error::WrongCopulaFamily { .. })
        ));
        let derived = SyntheticOptions {
            reading: Reading::DerivedLiteral,
            allow_empty_universe: false,
        };
        assert!(matches!(
            eval_synthetic(&m, &parse("S sa P").unwrap(), derived),
            Err(Error::ReadingMismatch(_))
        ));
    }

    #[test]
    fn bitmask_atoms_match_quantifier_oracle() {
        let terms = [t("P"), t("S")];
        let opts = SyntheticOptions::DIRECT.with_empty(true);
        for m in enumerate_synthetic_models(&terms, 4, opts).unwrap() {
            let SyntheticStructure::Direct(m) = m else { unreachable!() };
            for c in SP {
                let atom = Atom {
                    subject: t("S"),
                    copula: c,
                    predicate: t("P"),
                };
                let got = eval_atom_direct(&m, &atom).unwrap();
                assert_eq!(got, oracle(&m, &atom, false));
                assert_eq!(got, oracle(&m, &atom, true), "expanded vs unexpanded");
            }
        }
    }

    #[test]
    fn definitional_negations_in_every_reading() {
        let terms = [t("P"), t("S")];
        for reading in [
            Reading::Direct,
            Reading::DerivedLiteral,
            Reading::DerivedCharitable,
        ] {
            let opts = SyntheticOptions {
                reading,
                allow_empty_universe: true,
            };
            for m in enumerate_synthetic_models(&terms, 3, opts).unwrap() {
                assert_eq!(eval(&m, "S so P", opts), !eval(&m, "S sa P", opts));
                assert_eq!(eval(&m, "S se P", opts), !eval(&m, "S si P", opts));
            }
        }
    }

    #[test]
    fn derived_copula_examples() {
        let c = CopulaStructure::new(
            ["c", "a", "b"],
            [("c", "a"), ("c", "b")],
            Vec::<(&str, &str)>::new(),
        )
        .unwrap();
        assert!(!c.derived_copula("a", "b", false).unwrap());

        let c = CopulaStructure::new(
            ["c", "a", "b"],
            [("c", "a"), ("c", "b"), ("c", "c")],
            Vec::<(&str, &str)>::new(),
        )
        .unwrap();
        assert!(c.derived_copula("a", "b", true).unwrap());
        assert!(!c.derived_copula("a", "b", false).unwrap());

        let c = CopulaStructure::new(
            ["c", "a", "b"],
            Vec::<(&str, &str)>::new(),
            Vec::<(&str, &str)>::new(),
        )
        .unwrap();
        assert!(!c.derived_copula("a", "b", false).unwrap());
        assert!(!c.derived_copula("a", "b", true).unwrap());
        assert!(matches!(
            c.derived_copula("a", "zz", true),
            Err(Error::UnknownIndividual(_))
        ));
    }

    // Oracle for the derived copula: the defining formula, quantifier by quantifier.
    fn copula_oracle(c: &CopulaStructure, a: usize, b: usize, charitable: bool) -> bool {
        let n = c.universe().len();
        let is = |x: usize, y: usize| c.is_prim(x, y);
        let exists = (0..n).any(|x| is(x, a));
        let unique = (0..n).all(|x| (0..n).all(|y| !(is(x, a) && is(y, a)) || is(x, y)));
        let third = if charitable {
            (0..n).all(|x| !is(x, a) || is(x, b))
        } else {
            (0..n).all(|x| is(x, a) && is(x, b))
        };
        exists && unique && third
    }

    #[test]
    fn derived_copula_matches_oracle_exhaustively() {
        let opts = SyntheticOptions {
            reading: Reading::DerivedLiteral,
            allow_empty_universe: false,
        };
        for m in enumerate_synthetic_models(&[], 3, opts).unwrap() {
            let SyntheticStructure::Copula(c) = m else { unreachable!() };
            let n = c.universe().len();
            for a in 0..n {
                for b in 0..n {
                    for ch in [false, true] {
                        assert_eq!(c.copula_at(a, b, ch), copula_oracle(&c, a, b, ch));
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let two = [t("P"), t("S")];
        let with_empty = SyntheticOptions::DIRECT.with_empty(true);
        assert_eq!(enumerate_synthetic_models(&two, 1, with_empty).unwrap().count(), 5);
        assert_eq!(
            enumerate_synthetic_models(&two, 2, SyntheticOptions::DIRECT).unwrap().count(),
            20
        );
        let three = [t("M"), t("P"), t("S")];
        assert_eq!(
            enumerate_synthetic_models(&three, 2, SyntheticOptions::DIRECT).unwrap().count(),
            8 + 64
        );
        assert_eq!(
            enumerate_synthetic_models(&three, 2, with_empty).unwrap().count(),
            1 + 8 + 64
        );
        assert_eq!(
            enumerate_synthetic_models(&three, 3, with_empty).unwrap().count(),
            585
        );
        // copula structures: 2^(n^2) relations times n^k denotations
        let derived = SyntheticOptions {
            reading: Reading::DerivedCharitable,
            allow_empty_universe: false,
        };
        assert_eq!(
            enumerate_synthetic_models(&two, 2, derived).unwrap().count(),
            2 + 16 * 4
        );
        assert_eq!(
            enumerate_synthetic_models(&two, 2, derived.with_empty(true)).unwrap().count(),
            2 + 16 * 4
        );
        assert_eq!(
            enumerate_synthetic_models(&[], 1, derived.with_empty(true)).unwrap().count(),
            1 + 2
        );
    }

    #[test]
    fn enumeration_bounds() {
        assert!(matches!(
            enumerate_synthetic_models(&[t("S")], 5, SyntheticOptions::DIRECT),
            Err(Error::BoundExceeded { .. })
        ));
        let derived = SyntheticOptions {
            reading: Reading::DerivedLiteral,
            allow_empty_universe: false,
        };
        assert!(enumerate_synthetic_models(&[t("S")], 3, derived).is_ok());
        assert!(matches!(
            enumerate_synthetic_models(&[t("S")], 4, derived),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn nonempty_synthetic_square_by_enumeration() {
        let terms = [t("P"), t("S")];
        let o = SyntheticOptions::DIRECT;
        for m in enumerate_synthetic_models(&terms, 3, o).unwrap() {
            let (a, e, i, oo) = (
                eval(&m, "S sa P", o),
                eval(&m, "S se P", o),
                eval(&m, "S si P", o),
                eval(&m, "S so P", o),
            );
            assert!(!(a && i));
            assert!(e || oo);
            assert!(a != oo && e != i);
            assert!(!a || e);
            assert!(!i || oo);
        }
    }
}
