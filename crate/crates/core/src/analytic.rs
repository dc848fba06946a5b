//! Venn semantics for the analytic copulas over finite extents.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::formula::{Atom, Copula, Formula, TermId};

pub const MAX_DOMAIN: usize = 6;
/// Largest enumerated assignment code, in bits, for one domain size.
pub(crate) const MAX_SEARCH_BITS: usize = 30;

/// A finite domain with an extent (subset of the domain) for every term.
///
/// Extents are bitmasks over domain positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyticModel {
    domain: Vec<String>,
    ext: BTreeMap<TermId, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ImportPolicy {
    pub existential_import: bool,
}

impl ImportPolicy {
    pub const ON: ImportPolicy = ImportPolicy {
        existential_import: true,
    };
    pub const OFF: ImportPolicy = ImportPolicy {
        existential_import: false,
    };
}

impl Default for ImportPolicy {
    fn default() -> Self {
        ImportPolicy::ON
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl AnalyticModel {
    pub fn new(domain: Vec<String>, ext: BTreeMap<TermId, u64>) -> Result<Self> {
        if domain.len() > 64 {
            return Err(Error::ModelFile("domain larger than 64 individuals".into()));
        }
        let full = full_mask(domain.len());
        if ext.values().any(|m| m & !full != 0) {
            return Err(Error::ModelFile("extent outside the domain".into()));
        }
        Ok(AnalyticModel { domain, ext })
    }

    /// Builds a model from named extents.
    pub fn from_sets<D, T, I>(domain: D, ext: impl IntoIterator<Item = (T, I)>) -> Result<Self>
    where
        D: IntoIterator,
        D::Item: Into<String>,
        T: AsRef<str>,
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let domain: Vec<String> = domain.into_iter().map(Into::into).collect();
        let mut masks = BTreeMap::new();
        for (term, members) in ext {
            let mut mask = 0u64;
            for m in members {
                let pos = domain
                    .iter()
                    .position(|d| d == m.as_ref())
                    .ok_or_else(|| Error::UnknownIndividual(m.as_ref().to_string()))?;
                mask |= 1 << pos;
            }
            masks.insert(TermId::new(term.as_ref())?, mask);
        }
        AnalyticModel::new(domain, masks)
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn extent_mask(&self, term: &TermId) -> Result<u64> {
        self.ext
            .get(term)
            .copied()
            .ok_or_else(|| Error::UnknownTerm(term.to_string()))
    }

    /// Named members of a term's extent.
    pub fn extent(&self, term: &TermId) -> Result<Vec<&str>> {
        let mask = self.extent_mask(term)?;
        Ok(self
            .domain
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, d)| d.as_str())
            .collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = &TermId> {
        self.ext.keys()
    }
}

pub fn eval_atom(m: &AnalyticModel, atom: &Atom, pol: ImportPolicy) -> Result<bool> {
    let s = m.extent_mask(&atom.subject)?;
    let p = m.extent_mask(&atom.predicate)?;
    let a = s & !p == 0 && (s != 0 || !pol.existential_import);
    Ok(match atom.copula {
        Copula::AnA => a,
        Copula::AnE => s & p == 0,
        Copula::AnI => s & p != 0,
        Copula::AnO => !a,
        c => {
            return Err(Error::WrongCopulaFamily {
                copula: c.keyword(),
                semantics: "analytic",
            })
        }
    })
}

pub fn eval_analytic(m: &AnalyticModel, f: &Formula, pol: ImportPolicy) -> Result<bool> {
    f.eval_with(&mut |a| eval_atom(m, a, pol))
}

/// Every model over `terms` with domain size `0..=max_domain`, each extent
/// assignment once.
///
/// Order: by domain size, then by an assignment code counted upward, where
/// term `k` (in the given order) owns bits `k*d .. (k+1)*d` and individual
/// `j` is bit `j` inside its term's block.
pub fn enumerate_analytic_models(
    terms: &[TermId],
    max_domain: usize,
) -> Result<AnalyticModels> {
    if max_domain > MAX_DOMAIN {
        return Err(Error::BoundExceeded {
            what: "analytic domain size",
            bound: max_domain,
            max: MAX_DOMAIN,
        });
    }
    if max_domain * terms.len() > MAX_SEARCH_BITS {
        return Err(Error::BoundExceeded {
            what: "analytic search space (domain size x terms, in bits)",
            bound: max_domain * terms.len(),
            max: MAX_SEARCH_BITS,
        });
    }
    Ok(AnalyticModels {
        terms: terms.to_vec(),
        max_domain,
        size: 0,
        code: 0,
    })
}

pub struct AnalyticModels {
    terms: Vec<TermId>,
    max_domain: usize,
    size: usize,
    code: u64,
}

impl Iterator for AnalyticModels {
    type Item = AnalyticModel;

    fn next(&mut self) -> Option<AnalyticModel> {
        let k = self.terms.len();
        loop {
            if self.size > self.max_domain {
                return None;
            }
            let bits = self.size * k;
            if self.code >> bits == 0 {
                break;
            }
            self.size += 1;
            self.code = 0;
        }
        let d = self.size;
        let block = full_mask(d);
        let ext = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), (self.code >> (i * d)) & block))
            .collect();
        let domain = (1..=d).map(|i| i.to_string()).collect();
        self.code += 1;
        Some(AnalyticModel { domain, ext })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::t;
    use crate::parse::parse;
    use std::collections::BTreeSet;

    fn model(domain: &[&str], ext: &[(&str, &[&str])]) -> AnalyticModel {
        AnalyticModel::from_sets(
            domain.iter().copied(),
            ext.iter().map(|(t, m)| (*t, m.iter().copied())),
        )
        .unwrap()
    }

    fn eval(m: &AnalyticModel, src: &str, pol: ImportPolicy) -> bool {
        eval_analytic(m, &parse(src).unwrap(), pol).unwrap()
    }

    // Oracle: the atom truth table stated over explicit sets.
    fn oracle_atom(s: &BTreeSet<&str>, p: &BTreeSet<&str>, c: Copula, import: bool) -> bool {
        let subset = s.iter().all(|x| p.contains(x));
        let a = subset && (!s.is_empty() || !import);
        match c {
            Copula::AnA => a,
            Copula::AnE => s.intersection(p).next().is_none(),
            Copula::AnI => s.intersection(p).next().is_some(),
            Copula::AnO => !a,
            _ => unreachable!(),
        }
    }

    #[test]
    fn atom_examples() {
        let m = model(&["1", "2", "3"], &[("S", &["1"]), ("P", &["1", "2"])]);
        assert!(eval(&m, "S a P", ImportPolicy::ON));

        let m = model(&["1", "2"], &[("S", &[]), ("P", &["1"])]);
        assert!(!eval(&m, "S a P", ImportPolicy::ON));
        assert!(eval(&m, "S a P", ImportPolicy::OFF));

        let m = model(&["1", "2"], &[("S", &["1"]), ("P", &["2"])]);
        assert!(eval(&m, "S e P", ImportPolicy::ON));
        assert!(!eval(&m, "S i P", ImportPolicy::ON));
    }

    #[test]
    fn atoms_agree_with_set_oracle() {
        let terms = [t("P"), t("S")];
        for m in enumerate_analytic_models(&terms, 3).unwrap() {
            let s: BTreeSet<&str> = m.extent(&t("S")).unwrap().into_iter().collect();
            let p: BTreeSet<&str> = m.extent(&t("P")).unwrap().into_iter().collect();
            for import in [true, false] {
                let pol = ImportPolicy {
                    existential_import: import,
                };
                for c in [Copula::AnA, Copula::AnE, Copula::AnI, Copula::AnO] {
                    let atom = Atom {
                        subject: t("S"),
                        copula: c,
                        predicate: t("P"),
                    };
                    assert_eq!(
                        eval_atom(&m, &atom, pol).unwrap(),
                        oracle_atom(&s, &p, c, import)
                    );
                }
            }
        }
    }

    #[test]
    fn errors() {
        let m = model(&["1"], &[("S", &["1"]), ("P", &[])]);
        assert!(matches!(
            eval_analytic(&m, &parse("S sa P").unwrap(), ImportPolicy::ON),
            Err(Error::WrongCopulaFamily { .. })
        ));
        assert!(matches!(
            eval_analytic(&m, &parse("S a Q").unwrap(), ImportPolicy::ON),
            Err(Error::UnknownTerm(q)) if q == "Q"
        ));
        assert!(matches!(
            enumerate_analytic_models(&[t("S")], 7),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_counts() {
        // sum over d <= bound of 2^(d * terms)
        assert_eq!(enumerate_analytic_models(&[t("S")], 1).unwrap().count(), 3);
        assert_eq!(
            enumerate_analytic_models(&[t("S"), t("P")], 2).unwrap().count(),
            21
        );
        let empty: Vec<_> = enumerate_analytic_models(&[], 0).unwrap().collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].domain().is_empty());
        // no terms: one model per domain size
        assert_eq!(enumerate_analytic_models(&[], 4).unwrap().count(), 5);
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free() {
        let terms = [t("P"), t("S")];
        let models: Vec<_> = enumerate_analytic_models(&terms, 3).unwrap().collect();
        let distinct: BTreeSet<_> = models
            .iter()
            .map(|m| (m.domain().len(), m.ext.clone()))
            .collect();
        assert_eq!(distinct.len(), models.len());
        assert_eq!(models.len(), 1 + 4 + 16 + 64);
    }

    #[test]
    fn enumeration_is_monotone_in_bound() {
        let terms = [t("P"), t("S")];
        let small: Vec<_> = enumerate_analytic_models(&terms, 2).unwrap().collect();
        let large: Vec<_> = enumerate_analytic_models(&terms, 3).unwrap().collect();
        assert_eq!(&large[..small.len()], &small[..]);
    }

    #[test]
    fn duality_in_every_model() {
        let terms = [t("P"), t("S")];
        for m in enumerate_analytic_models(&terms, 4).unwrap() {
            for pol in [ImportPolicy::ON, ImportPolicy::OFF] {
                assert_eq!(eval(&m, "S o P", pol), !eval(&m, "S a P", pol));
                assert_eq!(eval(&m, "S i P", pol), !eval(&m, "S e P", pol));
            }
        }
    }
}
