//! Exact combinatorics of skew and cylindric skew diagrams: linear extensions,
//! excited diagrams, hook lengths, and the hook-formula series built from them.

pub mod diagram;
pub mod error;
pub mod excited;
pub mod formulas;
pub mod paths;
pub mod rational;
pub mod tableaux;

pub use diagram::{
    arrow_cyl, canonicalize, contains_periodic, hook_cells_periodic, hook_length_cyl, poset_leq_cyl, render_periodic,
    skew_cells, validate_partition, Cell, CylCell, GeneralizedPartition, Omega, Partition, SkewShape,
};
pub use error::{Error, Result};
pub use excited::{
    active_cells_cyl, active_cells_finite, enumerate_excited_cyl, enumerate_excited_finite, excite_cyl, excite_finite,
    render_excited, CylExcitedDiagram, CylindricSkew, ExcitedDiagram, Stratum, WalkStats,
};
pub use formulas::{Verdict, VerificationReport};
pub use paths::{BarTuple, LatticePath, Loop};
pub use rational::BigRational;
pub use tableaux::{
    count_linear_extensions, count_restricted, enumerate_linear_extensions, enumerate_restricted,
    is_restricted_extension, Tableau,
};
