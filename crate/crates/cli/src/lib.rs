//! Report assembly and diagram output for the `squares` command.

pub mod diagram;
pub mod report;
