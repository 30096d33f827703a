//! Named measures and axioms, figure fixtures, verification suites and the
//! counterexample search.

mod fixtures;
mod measure;
mod report;
mod search;
mod suite;

pub use fixtures::{fixture, fixture_unchecked, verify_fixture, Fixture, FIXTURE_NAMES};
pub use measure::{Axiom, Measure};
pub use report::{ClaimResult, VerificationReport, Witness};
pub use search::{search_counterexample, Generator, SearchOutcome, SearchWitness};
pub use suite::{
    run_graph_suite, run_tree_suite, run_tree_suite_with, ClosenessFn, TreeSuiteConfig, GRAPH_CLAIMS, RWC_N_MAX,
    RWC_STRIDE, TREE_CLAIMS,
};
