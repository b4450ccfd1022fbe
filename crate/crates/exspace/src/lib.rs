//! Interchange formats, construction scripts and verification suites on top
//! of `exspace_core`.

pub mod corpus;
pub mod format;
pub mod script;
pub mod show;
pub mod suites;
