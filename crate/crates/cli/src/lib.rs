//! Front end for the orthoscope criteria: a parser for systems and
//! expressions, command dispatch, text and JSON reports, and the fixture
//! corpus.

pub mod error;
pub mod fixtures;
pub mod parse;
pub mod report;
pub mod run;
pub mod source;

pub use error::{CliError, CliResult};
pub use parse::parse_expression;
pub use report::{emit, Format, Report, ResidueRow, WitnessCheck, WitnessSummary, REPORT_SCHEMA};
pub use run::{run, Command, Options};
pub use source::{parse_system, FamilyKind, Parsed, SystemSource};
