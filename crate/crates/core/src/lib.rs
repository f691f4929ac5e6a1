//! Exact computation of elementary divisors of Gram matrices of Specht modules
//! of the symmetric groups, together with executable closed forms for the
//! families where those divisors are known and a brute-force oracle to check
//! them against.
//!
//! The layers, bottom up:
//!
//! * [`combinatorics`]: partitions, tableaux, tabloids, hooks and diagram surgery.
//! * [`exact_linalg`]: big-integer matrices, Smith and Hermite forms, kernels mod N.
//! * [`specht_module`]: polytabloids, standard bases, Gram matrices, straightening.
//! * [`jantzen`]: Jantzen layer profiles over the p-local integers.
//! * [`closed_forms`]: two-row, hook, two-column, large-prime and Schaper evaluators.
//! * [`analyses`]: duality, James bounds, symmetric partitions, unimodularity, Pell.
//! * [`oracle`]: memoised brute-force divisor chains.

pub mod analyses;
pub mod arith;
pub mod closed_forms;
pub mod combinatorics;
pub mod error;
pub mod exact_linalg;
pub mod jantzen;
pub mod oracle;
pub mod specht_module;

pub use combinatorics::{Partition, Tableau, Tabloid};
pub use error::{Error, Result};
pub use exact_linalg::{DivisorChain, GroupDecomposition, IntMatrix};
