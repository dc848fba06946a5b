//! Bounded model checking for the analytic and synthetic squares of
//! opposition, a Hilbert-style proof checker for synthetic syllogistic, and
//! a decidable fragment of the non-Archimedean extension of a finite
//! Boolean algebra.

pub mod analytic;
pub mod catalog;
pub mod error;
pub mod formula;
pub mod model_io;
pub mod opposition;
pub mod parse;
pub mod proof;
pub mod semantics;
pub mod starb;
pub mod synthetic;

pub use error::{Error, Result};
pub use formula::{Atom, Copula, Family, Formula, Quality, Schema, TermId};
pub use parse::{parse, ParseError};
pub use semantics::{Model, Semantics, Verdict, Witness};
