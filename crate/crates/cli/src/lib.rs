//! File formats, expression language, scenarios and reports on top of
//! `semistar-core`.

pub mod domain;
pub mod expr;
pub mod report;
pub mod scenario;
pub mod syntax;
