//! A finite, exactly decidable fragment of the nonstandard extension of a
//! powerset Boolean algebra.
//!
//! The index set of the extension is infinite and two functions are
//! identified when they agree on a cofinite set. Restricting to functions
//! of Shannon form `a ↦ (a ∧ f1) ∨ (¬a ∧ f0)`, that identification is
//! equality of the coefficient pair, so every class here is a pair of base
//! elements. The standard element `*m` is the pair `(m, m)`.

mod algebra;
mod matrix;
mod squares;

pub use algebra::{quotient, Algebra, Order, RawFunction, UltraElement, MAX_ATOMS, MAX_EXCEPTIONS};
pub use matrix::{
    bridge_tables, check_matrix_laws, BridgeModel, BridgeRow, BridgeTable, Column, Designation,
    MatrixLaws, MatrixLogic,
};
pub use squares::{
    algebraic_opposition, classify_cases, sweep_cases, verify_two_squares, CaseDef, CaseOutcome,
    CaseReport, CaseSweep, CaseTally, Claim, Corner, Generation, Hypothesis, HypothesisFinding,
    OppositionSet, Relation, SquareShape, SquareSweep, TwoSquaresReport, CASES, MAX_SWEEP_ATOMS,
    ORDER_HYPOTHESES,
};
