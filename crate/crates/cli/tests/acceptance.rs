//! Acceptance suite: one PASS/FAIL line per criterion, each backed by an
//! oracle written independently of the library's evaluators.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use squares_core::analytic::ImportPolicy;
use squares_core::catalog::{self, Expected};
use squares_core::opposition::{verify_square, CheckStatus, SquareSpec};
use squares_core::proof::{bundled_derivations, check_theorem, line_mutations, check_derivation, AxiomSet};
use squares_core::starb::{self, Algebra, Claim, Corner, Hypothesis, SquareShape, UltraElement, CASES};
use squares_core::synthetic::SyntheticOptions;
use squares_core::{Atom, Copula, Formula, Quality, Semantics, TermId};

/// A synthetic model as plain data: for each individual, the terms it is.
type SynModel = Vec<BTreeSet<String>>;

fn syn_models(terms: &[&str], min: usize, max: usize) -> Vec<SynModel> {
    let mut out = Vec::new();
    for n in min..=max {
        let per = 1usize << terms.len();
        let total = per.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut m = Vec::new();
            for _ in 0..n {
                let bits = c % per;
                c /= per;
                m.push(
                    terms
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| bits >> i & 1 == 1)
                        .map(|(_, t)| t.to_string())
                        .collect(),
                );
            }
            out.push(m);
        }
    }
    out
}

/// The copula definitions by direct quantifier expansion.
fn syn_atom(m: &SynModel, a: &Atom) -> bool {
    let (s, p) = (a.subject.as_str(), a.predicate.as_str());
    let is = |x: &BTreeSet<String>, t: &str| x.contains(t);
    let sa = m.iter().any(|x| is(x, s)) || m.iter().all(|x| is(x, p) && is(x, s));
    let si = m.iter().all(|x| is(x, p) && !is(x, s));
    match a.copula {
        Copula::SyA => sa,
        Copula::SyI => si,
        Copula::SyO => m.iter().all(|x| !is(x, s)) && m.iter().any(|x| !is(x, p) || !is(x, s)),
        Copula::SyE => m.iter().any(|x| !is(x, p) || is(x, s)),
        c => panic!("not synthetic: {c:?}"),
    }
}

fn eval(f: &Formula, atom: &dyn Fn(&Atom) -> bool) -> bool {
    match f {
        Formula::Atom(a) => atom(a),
        Formula::Not(g) => !eval(g, atom),
        Formula::And(l, r) => eval(l, atom) && eval(r, atom),
        Formula::Or(l, r) => eval(l, atom) || eval(r, atom),
        Formula::Implies(l, r) => !eval(l, atom) || eval(r, atom),
    }
}

fn atom(q: Copula) -> Formula {
    Formula::atom(TermId::new("S").unwrap(), q, TermId::new("P").unwrap())
}

/// Checks a relation over a list of truth pairs.
fn relation_holds(kind: &str, pairs: &[(bool, bool)]) -> bool {
    let has = |x: bool, y: bool| pairs.contains(&(x, y));
    match kind {
        "contrary" => !has(true, true) && has(false, false),
        "subcontrary" => !has(false, false) && has(true, true),
        "contradictory" => !has(true, true) && !has(false, false),
        "subalternation" => !has(true, false) && has(false, true),
        _ => unreachable!(),
    }
}

const SYNTHETIC_RELATIONS: [(Copula, Copula, &str); 6] = [
    (Copula::SyA, Copula::SyI, "contrary"),
    (Copula::SyE, Copula::SyO, "subcontrary"),
    (Copula::SyA, Copula::SyO, "contradictory"),
    (Copula::SyE, Copula::SyI, "contradictory"),
    (Copula::SyA, Copula::SyE, "subalternation"),
    (Copula::SyI, Copula::SyO, "subalternation"),
];

fn criterion_1() -> Result<String, String> {
    let models = syn_models(&["P", "S"], 1, 3);
    if models.len() != 84 {
        return Err(format!("oracle enumerated {} models", models.len()));
    }
    let terms = [TermId::new("P").unwrap(), TermId::new("S").unwrap()];
    let lib = Semantics::SYNTHETIC_DIRECT.models(&terms, 3).map_err(|e| e.to_string())?.count();
    if lib != 84 {
        return Err(format!("library enumerated {lib} models"));
    }
    for (x, y, kind) in SYNTHETIC_RELATIONS {
        let pairs: Vec<(bool, bool)> = models
            .iter()
            .map(|m| (eval(&atom(x), &|a| syn_atom(m, a)), eval(&atom(y), &|a| syn_atom(m, a))))
            .collect();
        if !relation_holds(kind, &pairs) {
            return Err(format!("oracle: {x:?}-{y:?} not {kind}"));
        }
    }
    let r = verify_square(&SquareSpec::synthetic(), Semantics::SYNTHETIC_DIRECT, 3)
        .map_err(|e| e.to_string())?;
    if !r.passed() {
        return Err(r.summary());
    }
    Ok("84 models, six relations agree with the oracle".into())
}

fn criterion_2() -> Result<String, String> {
    let models = syn_models(&["P", "S"], 1, 3);
    let results = catalog::run_entries(&catalog::theorems(), Semantics::SYNTHETIC_DIRECT, 3)
        .map_err(|e| e.to_string())?;
    for (entry, r) in catalog::theorems().iter().zip(&results) {
        let f = entry.schema.formula();
        let oracle = models.iter().all(|m| eval(f, &|a| syn_atom(m, a)));
        if !oracle || !r.verdict.is_valid() {
            return Err(format!("{} oracle {oracle}, library {}", r.id, r.verdict.status()));
        }
    }
    let empty: SynModel = Vec::new();
    let both = eval(&Formula::and(atom(Copula::SyA), atom(Copula::SyI)), &|a| syn_atom(&empty, a));
    let sem = Semantics::Synthetic(SyntheticOptions::DIRECT.with_empty(true));
    let r = verify_square(&SquareSpec::synthetic(), sem, 3).map_err(|e| e.to_string())?;
    let w = r
        .pair(Quality::A, Quality::I)
        .and_then(|p| p.conflict())
        .map(|(_, w)| w.size);
    if !both || w != Some(0) {
        return Err(format!("empty universe: oracle both true {both}, witness size {w:?}"));
    }
    Ok("T01-T20 valid; a, i both true at U=∅".into())
}

fn smallest_counterexample(f: &Formula) -> Option<usize> {
    syn_models(&["M", "P", "S"], 1, 3)
        .iter()
        .find(|m| !eval(f, &|a| syn_atom(m, a)))
        .map(|m| m.len())
}

fn criterion_3() -> Result<String, String> {
    let results = catalog::run_entries(&catalog::axioms(), Semantics::SYNTHETIC_DIRECT, 3)
        .map_err(|e| e.to_string())?;
    let mut listings = Vec::new();
    for (entry, r) in catalog::axioms().iter().zip(&results) {
        let oracle = smallest_counterexample(entry.schema.formula());
        let want = match entry.expected {
            Expected::Valid => None,
            Expected::Counterexample { size } => Some(size),
        };
        let lib = r.verdict.counterexample().map(|w| w.size);
        if oracle != want || lib != want || r.status != CheckStatus::Pass {
            return Err(format!("{}: oracle {oracle:?}, library {lib:?}, expected {want:?}", r.id));
        }
        if let Some(w) = r.verdict.counterexample() {
            let json = serde_json::to_value(&r.verdict).unwrap();
            if json["witness"]["model"]["universe"].as_array().map(|u| u.len()) != Some(w.size) {
                return Err(format!("{}: model listing missing from report", r.id));
            }
            listings.push(format!("{} {}", r.id, w.model));
        }
    }
    Ok(format!("A5, A7 valid; {}", listings.join("; ")))
}

/// Analytic models as (domain size, S, P) bitmask triples.
fn analytic_models(max: usize) -> Vec<(usize, u32, u32)> {
    let mut out = Vec::new();
    for n in 0..=max {
        for s in 0..1u32 << n {
            for p in 0..1u32 << n {
                out.push((n, s, p));
            }
        }
    }
    out
}

fn analytic_atom(s: u32, p: u32, q: Quality, import: bool) -> bool {
    let a = s & !p == 0 && (!import || s != 0);
    let i = s & p != 0;
    match q {
        Quality::A => a,
        Quality::E => !i,
        Quality::I => i,
        Quality::O => !a,
    }
}

fn criterion_4() -> Result<String, String> {
    use Quality::*;
    let models = analytic_models(4);
    let rels = [
        (A, E, "contrary"),
        (I, O, "subcontrary"),
        (A, O, "contradictory"),
        (E, I, "contradictory"),
        (A, I, "subalternation"),
        (E, O, "subalternation"),
    ];
    for (x, y, kind) in rels {
        let pairs: Vec<(bool, bool)> = models
            .iter()
            .map(|&(_, s, p)| (analytic_atom(s, p, x, true), analytic_atom(s, p, y, true)))
            .collect();
        if !relation_holds(kind, &pairs) {
            return Err(format!("oracle: {x:?}-{y:?} not {kind}"));
        }
    }
    let r = verify_square(&SquareSpec::analytic(), Semantics::ANALYTIC_IMPORT, 4)
        .map_err(|e| e.to_string())?;
    if !r.passed() {
        return Err(r.summary());
    }
    let oracle = models
        .iter()
        .find(|&&(_, s, p)| analytic_atom(s, p, A, false) && !analytic_atom(s, p, I, false))
        .copied();
    let f = Formula::implies(atom(Copula::AnA), atom(Copula::AnI));
    let v = Semantics::Analytic(ImportPolicy::OFF).decide(&f, 4).map_err(|e| e.to_string())?;
    let w = v.counterexample().ok_or("import off: a to i valid")?;
    let lib_empty = w.model.to_string().contains("S={}");
    if oracle.map(|m| m.1) != Some(0) || !lib_empty {
        return Err(format!("import off: oracle {oracle:?}, library {}", w.model));
    }
    Ok(format!("square holds for |D| ≤ 4; import off refuted by {}", w.model))
}

/// Function table of `x` over every argument of its algebra.
fn table(x: &UltraElement) -> Vec<u32> {
    let b = x.algebra();
    let (f0, f1) = x.pair();
    b.elements().map(|a| (a & f1) | (!a & b.top() & f0)).collect()
}

fn corner_table(c: Corner, x: &UltraElement) -> Vec<u32> {
    let b = x.algebra();
    let t = table(x);
    let comp = |v: &Vec<u32>| v.iter().map(|y| !y & b.top()).collect::<Vec<_>>();
    // h(a) = f(¬a): argument a is index a, so ¬a is index top ^ a
    let fneg: Vec<u32> = (0..t.len()).map(|a| t[a ^ b.top() as usize]).collect();
    match c {
        Corner::F => t,
        Corner::FNeg => fneg,
        Corner::NotF => comp(&t),
        Corner::NotFNeg => comp(&fneg),
    }
}

fn le(x: &[u32], y: &[u32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a & !b == 0)
}

fn hypothesis_by_table(h: Hypothesis, x: &UltraElement) -> bool {
    match h {
        Hypothesis::Leq(a, b) => le(&corner_table(a, x), &corner_table(b, x)),
        Hypothesis::Incomparable(a, b) => {
            let (a, b) = (corner_table(a, x), corner_table(b, x));
            !le(&a, &b) && !le(&b, &a)
        }
    }
}

fn is_constant(t: &[u32]) -> bool {
    t.iter().all(|v| *v == t[0])
}

fn criterion_5() -> Result<String, String> {
    let b = Algebra::new(2).unwrap();
    let sweep = starb::sweep_cases(b);
    let mut instances = 0;
    for x in b.ultra_elements() {
        for c in &CASES {
            let held = hypothesis_by_table(c.hypothesis, &x);
            let lib = c.check(&x);
            if held != lib.is_some() {
                return Err(format!("case {} hypothesis disagrees at {x}", c.number));
            }
            if !held {
                continue;
            }
            instances += 1;
            let (p, q) = (corner_table(c.pair.0, &x), corner_table(c.pair.1, &x));
            let ok = match c.claim {
                Claim::BoundsOnly => true,
                Claim::InfIsBottom => p.iter().zip(&q).all(|(u, v)| u & v == 0),
                Claim::SupIsTop => p.iter().zip(&q).all(|(u, v)| u | v == b.top()),
            };
            if !ok || lib != Some(true) {
                return Err(format!("case {} conclusion fails at {x}", c.number));
            }
        }
        let (t, h) = (corner_table(Corner::F, &x), corner_table(Corner::FNeg, &x));
        let meet: Vec<u32> = t.iter().zip(&h).map(|(u, v)| u & v).collect();
        let join: Vec<u32> = t.iter().zip(&h).map(|(u, v)| u | v).collect();
        if !is_constant(&meet) || !is_constant(&join) {
            return Err(format!("meet or join with [f¬] nonstandard at {x}"));
        }
    }
    if !sweep.passed || sweep.elements != 16 {
        return Err("library sweep failed".into());
    }
    Ok(format!("16 elements, {instances} case instances, all conclusions hold"))
}

fn relation_by_table(kind: starb::Relation, a: &[u32], b: &[u32], top: u32) -> bool {
    match kind {
        starb::Relation::Contrary => a.iter().zip(b).all(|(u, v)| u & v == 0),
        starb::Relation::Subcontrary => a.iter().zip(b).all(|(u, v)| u | v == top),
        starb::Relation::Contradictory => a.iter().zip(b).all(|(u, v)| *v == !u & top),
        starb::Relation::Subaltern => le(a, b),
    }
}

fn criterion_6() -> Result<String, String> {
    let mut notes = Vec::new();
    for k in 1..=3 {
        let b = Algebra::new(k).unwrap();
        let report = starb::verify_two_squares(b).map_err(|e| e.to_string())?;
        for (i, shape) in SquareShape::BOTH.iter().enumerate() {
            let mut nonstandard = 0;
            for x in b.ultra_elements() {
                if !hypothesis_by_table(shape.condition(), &x) {
                    continue;
                }
                if !is_constant(&table(&x)) {
                    nonstandard += 1;
                }
                for (r, p, q) in shape.relations() {
                    if !relation_by_table(r, &corner_table(p, &x), &corner_table(q, &x), b.top()) {
                        return Err(format!("{shape:?} square: {p}, {q} fails at {x}"));
                    }
                }
            }
            if report.squares[i].nonstandard_satisfying != nonstandard {
                return Err(format!("{shape:?}: nonstandard count disagrees"));
            }
            let expect_realizable = *shape == SquareShape::Conventional;
            if (nonstandard > 0) != expect_realizable {
                return Err(format!("{shape:?}: realizability {nonstandard}"));
            }
        }
        if !report.passed {
            return Err(format!("library sweep failed at {k} atoms"));
        }
        notes.push(report.elements.to_string());
    }
    Ok(format!(
        "{} elements; conventional condition nonstandard-realizable, synthetic forces [f] = [f¬]",
        notes.join("/")
    ))
}

fn criterion_7() -> Result<String, String> {
    let b = Algebra::new(2).unwrap();
    let ml = starb::MatrixLogic::new(b);
    let laws = starb::check_matrix_laws(b);
    let top = UltraElement::top(b);
    for x in b.ultra_elements() {
        if x.neg().neg() != x || ml.imp(&top, &x).unwrap() != x {
            return Err(format!("unary law fails at {x}"));
        }
        for y in b.ultra_elements() {
            let imp = table(&ml.imp(&x, &y).unwrap());
            let oracle: Vec<u32> = table(&x).iter().zip(table(&y)).map(|(u, v)| (!u & b.top()) | v).collect();
            if imp != oracle {
                return Err(format!("imp({x}, {y}) is not material"));
            }
            let designated = imp.iter().all(|v| *v == b.top());
            if designated != le(&table(&x), &table(&y)) {
                return Err(format!("designation and order disagree at {x}, {y}"));
            }
            if x.is_top() && designated && !y.is_top() {
                return Err(format!("modus ponens fails at {x}, {y}"));
            }
        }
    }
    if !laws.passed {
        return Err("library law check failed".into());
    }
    Ok("16 elements; ¬¬x = x, modus ponens, *1 ⇒ x = x, designation matches order".into())
}

fn criterion_8() -> Result<String, String> {
    let ax = AxiomSet::A5_WITH_DEFINITIONS;
    let theorems = catalog::theorems();
    let models = syn_models(&["P", "S"], 1, 3);
    let mut mutations = 0;
    for ((id, d), entry) in bundled_derivations().into_iter().zip(&theorems) {
        let v = check_theorem(&d, &ax, entry.schema.formula());
        if !v.is_accepted() {
            return Err(format!("{id}: {v}"));
        }
        for line in &d.lines {
            let sem_ok = Semantics::SYNTHETIC_DIRECT
                .decide(&line.formula, 3)
                .map_err(|e| e.to_string())?
                .is_valid();
            let oracle = models.iter().all(|m| eval(&line.formula, &|a| syn_atom(m, a)));
            if !sem_ok || !oracle {
                return Err(format!("{id} line {} not valid", line.index));
            }
        }
        for (line, m) in line_mutations(&d) {
            mutations += 1;
            if check_derivation(&m, &ax).is_accepted() {
                return Err(format!("{id}: mutation of line {line} accepted"));
            }
        }
    }
    Ok(format!("20 derivations accepted; {mutations} mutations rejected; every line valid"))
}

fn criterion_9() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_squares"))
            .args(["verify-paper", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if a.status.code() != Some(0) || b.status.code() != Some(0) {
        return Err(format!("exit codes {:?} {:?}", a.status.code(), b.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ".into());
    }
    Ok(format!("two runs byte-identical ({} bytes)", a.stdout.len()))
}

fn main() {
    type Check = fn() -> Result<String, String>;
    let criteria: [(u32, &str, Check, u64); 9] = [
        (1, "synthetic square", criterion_1, 1),
        (2, "theorem catalog", criterion_2, 1),
        (3, "axiom status", criterion_3, 1),
        (4, "analytic square", criterion_4, 5),
        (5, "order case sweep", criterion_5, 1),
        (6, "two squares", criterion_6, 2),
        (7, "matrix logic", criterion_7, 1),
        (8, "proof kernel", criterion_8, 5),
        (9, "determinism", criterion_9, 20),
    ];
    let mut failed = 0;
    for (n, name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{msg}; took {elapsed:.2?}, budget {budget}s"))
            }
            r => r,
        };
        match result {
            Ok(msg) => println!("PASS criterion {n} ({name}) [{elapsed:.2?}]: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}) [{elapsed:.2?}]: {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
