//! JSON model files.
//!
//! ```text
//! analytic:  {"domain": ["1","2"], "ext": {"S": ["1"], "P": ["1","2"]}}
//! synthetic: {"universe": ["u","v"], "is": {"u": ["P","M"], "v": ["P"]}}
//! copula:    {"universe": ["c","a"], "isPrim": [["c","a"]], "denote": {"S": "a"}}
//! ```
//!
//! A synthetic file may add `"terms": [...]` to declare terms no
//! individual is.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::analytic::AnalyticModel;
use crate::error::{Error, Result};
use crate::semantics::Model;
use crate::synthetic::{CopulaStructure, SyntheticModel, SyntheticStructure};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AnalyticFile {
    domain: Vec<String>,
    ext: BTreeMap<String, Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SyntheticFile {
    universe: Vec<String>,
    is: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    terms: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CopulaFile {
    universe: Vec<String>,
    #[serde(rename = "isPrim")]
    is_prim: Vec<(String, String)>,
    denote: BTreeMap<String, String>,
}

fn check_distinct(names: &[String]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    match names.iter().find(|n| !seen.insert(*n)) {
        Some(dup) => Err(Error::ModelFile(format!("duplicate individual `{dup}`"))),
        None => Ok(()),
    }
}

/// Parses any of the three model-file formats, chosen by its keys.
pub fn parse_model(text: &str) -> Result<Model> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::ModelFile("expected a JSON object".into()))?;
    if obj.contains_key("domain") {
        let f: AnalyticFile = serde_json::from_value(value)?;
        check_distinct(&f.domain)?;
        return Ok(Model::Analytic(AnalyticModel::from_sets(f.domain, f.ext)?));
    }
    if obj.contains_key("isPrim") || obj.contains_key("denote") {
        let f: CopulaFile = serde_json::from_value(value)?;
        check_distinct(&f.universe)?;
        let c = CopulaStructure::new(f.universe, f.is_prim, f.denote)?;
        return Ok(Model::Synthetic(SyntheticStructure::Copula(c)));
    }
    if obj.contains_key("universe") {
        let f: SyntheticFile = serde_json::from_value(value)?;
        check_distinct(&f.universe)?;
        let m = SyntheticModel::from_listing(f.universe, f.is, f.terms)?;
        return Ok(Model::Synthetic(SyntheticStructure::Direct(m)));
    }
    Err(Error::ModelFile(
        "expected a `domain`, `universe` or `isPrim` key".into(),
    ))
}
