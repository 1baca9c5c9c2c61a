//! Online graph coloring with predictions.
//!
//! * [`graph`]: graphs, colors and online instances.
//! * [`algorithms`]: the online driver, FirstFit, FirstFitPredictions and
//!   scripted colorers.
//! * [`combiner`]: palette-separated combination of online colorers and the
//!   known-χ switching variant.
//! * [`structure`]: clique families forced by FirstFit colorings.
//! * [`oracle`]: exact chromatic number, optimal partitions and the
//!   prediction error η.
//! * [`generators`]: adversarial families and seeded random instances.
//! * [`io`], [`registry`], [`experiment`]: file format, algorithm names and
//!   batch reports behind the `ocl` binary.

pub mod algorithms;
pub mod combiner;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod registry;
pub mod structure;

pub use algorithms::{run, FirstFit, FirstFitPredictions, OnlineColorer, RunResult, Scripted};
pub use combiner::{a_prime, combine, APrime, Combiner};
pub use graph::{Color, ColorLabel, Coloring, Graph, OnlineInstance};
pub use oracle::{Oracle, OracleLimits};
pub use structure::{extract_clique_partition, verify_partition, CliquePartition};
