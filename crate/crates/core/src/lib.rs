//! Short log-space reductions between parameterized NL-complete problems.
//!
//! The crate is organised in four layers:
//!
//! * [`instances`]: problem-instance types, validity checks, size parameters
//!   and the line-oriented text formats.
//! * [`oracles`]: independent brute-force deciders, one per problem class,
//!   plus standalone witness checkers.
//! * [`reductions`]: the constructive transformations, each behind the
//!   [`reductions::Reduction`] trait and registered by name.
//! * [`harness`]: seeded instance generators and the engine that checks
//!   membership equivalence and the linear size bound of every reduction.

pub mod error;
pub mod figures;
pub mod harness;
pub mod instances;
pub mod oracles;
pub mod reductions;

pub use error::{Error, Result};
pub use instances::{Instance, ProblemClass};
