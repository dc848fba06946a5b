//! A uniform view over both semantics: model streams, evaluation and
//! bounded validity with counterexamples.

use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::analytic::{self, AnalyticModel, ImportPolicy};
use crate::error::{Error, Result};
use crate::formula::{Family, Formula, TermId};
use crate::synthetic::{self, Reading, SyntheticOptions, SyntheticStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Semantics {
    Analytic(ImportPolicy),
    Synthetic(SyntheticOptions),
}

impl Semantics {
    pub const SYNTHETIC_DIRECT: Semantics = Semantics::Synthetic(SyntheticOptions::DIRECT);
    pub const ANALYTIC_IMPORT: Semantics = Semantics::Analytic(ImportPolicy::ON);

    pub fn family(&self) -> Family {
        match self {
            Semantics::Analytic(_) => Family::Analytic,
            Semantics::Synthetic(_) => Family::Synthetic,
        }
    }

    /// Rejects formulas with copulas from the other family.
    pub fn check_family(&self, f: &Formula) -> Result<()> {
        let (family, name) = match self {
            Semantics::Analytic(_) => (Family::Analytic, "analytic"),
            Semantics::Synthetic(_) => (Family::Synthetic, "synthetic"),
        };
        match f.copulas().into_iter().find(|c| c.family() != family) {
            Some(c) => Err(Error::WrongCopulaFamily {
                copula: c.keyword(),
                semantics: name,
            }),
            None => Ok(()),
        }
    }

    pub fn models(&self, terms: &[TermId], bound: usize) -> Result<Models> {
        Ok(match self {
            Semantics::Analytic(_) => {
                Models::Analytic(analytic::enumerate_analytic_models(terms, bound)?)
            }
            Semantics::Synthetic(opts) => {
                Models::Synthetic(synthetic::enumerate_synthetic_models(terms, bound, *opts)?)
            }
        })
    }

    pub fn eval(&self, m: &Model, f: &Formula) -> Result<bool> {
        match (self, m) {
            (Semantics::Analytic(pol), Model::Analytic(m)) => {
                analytic::eval_analytic(m, f, *pol)
            }
            (Semantics::Synthetic(opts), Model::Synthetic(m)) => {
                synthetic::eval_synthetic(m, f, *opts)
            }
            (Semantics::Analytic(_), _) => Err(Error::ReadingMismatch("analytic")),
            (Semantics::Synthetic(opts), _) => Err(Error::ReadingMismatch(opts.reading.label())),
        }
    }

    /// Validity over every model up to `bound`; the counterexample is the
    /// first falsifying model in enumeration order.
    pub fn decide(&self, f: &Formula, bound: usize) -> Result<Verdict> {
        self.check_family(f)?;
        let terms: Vec<TermId> = f.terms().into_iter().collect();
        for (index, m) in self.models(&terms, bound)?.enumerate() {
            if !self.eval(&m, f)? {
                let trace = self.trace(&m, f)?;
                return Ok(Verdict::Counterexample(Witness {
                    index,
                    size: m.size(),
                    model: m,
                    trace,
                }));
            }
        }
        Ok(Verdict::Valid { bound })
    }

    /// Truth value of every distinct atom of `f` in `m`.
    pub fn trace(&self, m: &Model, f: &Formula) -> Result<Vec<AtomValue>> {
        f.atoms()
            .into_iter()
            .map(|a| {
                let value = self.eval(m, &Formula::Atom(a.clone()))?;
                Ok(AtomValue {
                    atom: a.to_string(),
                    value,
                })
            })
            .collect()
    }

    pub fn label(&self) -> String {
        match self {
            Semantics::Analytic(p) => format!(
                "analytic (import {})",
                if p.existential_import { "on" } else { "off" }
            ),
            Semantics::Synthetic(o) => format!(
                "synthetic {} ({})",
                o.reading.label(),
                if o.allow_empty_universe {
                    "empty universe allowed"
                } else {
                    "nonempty"
                }
            ),
        }
    }

    pub fn max_bound(&self) -> usize {
        match self {
            Semantics::Analytic(_) => analytic::MAX_DOMAIN,
            Semantics::Synthetic(o) if o.reading == Reading::Direct => {
                synthetic::MAX_DIRECT_UNIVERSE
            }
            Semantics::Synthetic(_) => synthetic::MAX_DERIVED_UNIVERSE,
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for Semantics {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

pub enum Models {
    Analytic(analytic::AnalyticModels),
    Synthetic(synthetic::SyntheticModels),
}

impl Iterator for Models {
    type Item = Model;

    fn next(&mut self) -> Option<Model> {
        match self {
            Models::Analytic(it) => it.next().map(Model::Analytic),
            Models::Synthetic(it) => it.next().map(Model::Synthetic),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Analytic(AnalyticModel),
    Synthetic(SyntheticStructure),
}

impl Model {
    /// Number of individuals.
    pub fn size(&self) -> usize {
        match self {
            Model::Analytic(m) => m.domain().len(),
            Model::Synthetic(m) => m.universe().len(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("models serialize to JSON")
    }
}

struct Listing<'a, T: Serialize>(&'a [(&'a str, Vec<T>)]);

impl<T: Serialize> Serialize for Listing<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Serializes in the model-file formats.
impl Serialize for Model {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Model::Analytic(m) => {
                let ext: Vec<(&str, Vec<&str>)> = m
                    .terms()
                    .map(|t| (t.as_str(), m.extent(t).unwrap_or_default()))
                    .collect();
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("domain", m.domain())?;
                map.serialize_entry("ext", &Listing(&ext))?;
                map.end()
            }
            Model::Synthetic(SyntheticStructure::Direct(m)) => {
                let is = m.listing();
                let terms: Vec<&TermId> = m.terms().collect();
                let mut map = s.serialize_map(Some(3))?;
                map.serialize_entry("universe", m.universe())?;
                map.serialize_entry("is", &Listing(&is))?;
                map.serialize_entry("terms", &terms)?;
                map.end()
            }
            Model::Synthetic(SyntheticStructure::Copula(c)) => {
                let prim: Vec<[&str; 2]> = c.prim_pairs().into_iter().map(|(a, b)| [a, b]).collect();
                let denote: std::collections::BTreeMap<&str, &str> =
                    c.denotation().map(|(t, x)| (t.as_str(), x)).collect();
                let mut map = s.serialize_map(Some(3))?;
                map.serialize_entry("universe", c.universe())?;
                map.serialize_entry("isPrim", &prim)?;
                map.serialize_entry("denote", &denote)?;
                map.end()
            }
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Analytic(m) => {
                write!(f, "D={{{}}}", m.domain().join(","))?;
                for t in m.terms() {
                    write!(f, " {t}={{{}}}", m.extent(t).unwrap_or_default().join(","))?;
                }
                Ok(())
            }
            Model::Synthetic(SyntheticStructure::Direct(m)) => {
                write!(f, "U={{{}}}", m.universe().join(","))?;
                for (u, ts) in m.listing() {
                    let ts: Vec<&str> = ts.iter().map(|t| t.as_str()).collect();
                    write!(f, " {u}:{{{}}}", ts.join(","))?;
                }
                Ok(())
            }
            Model::Synthetic(SyntheticStructure::Copula(c)) => {
                write!(f, "U={{{}}} isPrim={{", c.universe().join(","))?;
                let pairs: Vec<String> = c
                    .prim_pairs()
                    .into_iter()
                    .map(|(a, b)| format!("({a},{b})"))
                    .collect();
                write!(f, "{}}}", pairs.join(","))?;
                for (t, x) in c.denotation() {
                    write!(f, " {t}->{x}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomValue {
    pub atom: String,
    pub value: bool,
}

/// A model found by search, with its position in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Enumeration index; serves as a stable model id.
    pub index: usize,
    pub size: usize,
    pub model: Model,
    pub trace: Vec<AtomValue>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// True in every model up to the bound.
    Valid { bound: usize },
    Counterexample(Witness),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }

    pub fn counterexample(&self) -> Option<&Witness> {
        match self {
            Verdict::Counterexample(w) => Some(w),
            Verdict::Valid { .. } => None,
        }
    }

    pub fn status(&self) -> String {
        match self {
            Verdict::Valid { bound } => format!("valid up to bound {bound}"),
            Verdict::Counterexample(w) => format!("counterexample of size {}", w.size),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        match self {
            Verdict::Valid { bound } => {
                map.serialize_entry("status", "valid")?;
                map.serialize_entry("bound", bound)?;
            }
            Verdict::Counterexample(w) => {
                map.serialize_entry("status", "counterexample")?;
                map.serialize_entry("witness", w)?;
            }
        }
        map.end()
    }
}
