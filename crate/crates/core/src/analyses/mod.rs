//! Analyses that combine brute-force chains with structural statements:
//! transposition duality, James bounds, simple-module dimensions, symmetric
//! partitions, unimodular lattices in two-row modules and the Pell system.

mod bounds;
mod symmetric;
mod unimodular;

pub use bounds::{dim_simple, duality_report, james_bound, DualityReport, JamesBoundReport};
pub use symmetric::{symmetric_report, symmetric_report_from_chain, SymmetricReport};
pub use unimodular::{pell_search, unimodular_test, LocalUnimodular, UnimodularReport};
