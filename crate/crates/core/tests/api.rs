use squares_core::model_io::parse_model;
use squares_core::opposition::{classify_pair, RelationKind};
use squares_core::proof::{bundled_script, check_derivation, AxiomSet, Derivation};
use squares_core::starb::{self, Algebra, UltraElement};
use squares_core::{parse, Schema, Semantics};

#[test]
fn countermodel_round_trips_through_a_model_file() {
    let f = parse("S so P -> P so S").unwrap();
    let v = Semantics::SYNTHETIC_DIRECT.decide(&f, 3).unwrap();
    let w = v.counterexample().unwrap();
    let reread = parse_model(&serde_json::to_string(&w.model).unwrap()).unwrap();
    assert!(!Semantics::SYNTHETIC_DIRECT.eval(&reread, &f).unwrap());
}

#[test]
fn classification_through_the_public_api() {
    let a = Schema::parse_all_meta("S sa P").unwrap();
    let o = Schema::parse_all_meta("S so P").unwrap();
    let r = classify_pair(&a, &o, Semantics::SYNTHETIC_DIRECT, 2).unwrap();
    assert_eq!(r.kind, RelationKind::Contradictory);
}

#[test]
fn bundled_script_checks_from_text() {
    let d = Derivation::parse(bundled_script("T14").unwrap()).unwrap();
    assert!(check_derivation(&d, &AxiomSet::A5_WITH_DEFINITIONS).is_accepted());
}

#[test]
fn algebra_sweeps_from_outside() {
    let b = Algebra::new(2).unwrap();
    assert!(starb::sweep_cases(b).passed);
    assert!(starb::verify_two_squares(b).unwrap().passed);
    let x = UltraElement::new(b, 0b01, 0).unwrap();
    assert_eq!(x.fneg().to_string(), "⟨0, p⟩");
}
