//! Property suites, shared by the per-module test targets and the
//! acceptance runner. Each function panics on the first counterexample.

pub mod games;
pub mod kinetics;
pub mod lina;
