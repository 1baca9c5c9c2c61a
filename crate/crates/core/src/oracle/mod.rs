//! Exact, exponential-time ground truth: chromatic number, the set of
//! optimal colorings (up to relabelling) and the prediction error η.

mod assignment;
mod chromatic;
mod partitions;

pub use assignment::max_weight_assignment;
pub use partitions::{OptimalPartition, OptimalPartitions};

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{ColorLabel, Graph, OnlineInstance};

/// Environment variable overriding both default size limits.
pub const ORACLE_LIMIT_ENV: &str = "OCL_ORACLE_LIMIT";

/// Hard ceiling: the backtracking search keeps color sets in a `u64`.
pub const MAX_ORACLE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle size limit: {what} needs n <= {limit}, got n = {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("instance has no predictions")]
    MissingPredictions,
    #[error("invalid {ORACLE_LIMIT_ENV} value {0:?}")]
    BadLimit(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest n for which `chromatic_number` runs.
    pub chromatic: usize,
    /// Largest n for which optimal partitions are enumerated (and η computed).
    pub enumeration: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            chromatic: 20,
            enumeration: 14,
        }
    }
}

impl OracleLimits {
    /// Both limits set to `n` (clamped to [`MAX_ORACLE_LIMIT`]).
    pub fn uniform(n: usize) -> Self {
        let n = n.min(MAX_ORACLE_LIMIT);
        OracleLimits {
            chromatic: n,
            enumeration: n,
        }
    }

    /// Defaults, overridden by `OCL_ORACLE_LIMIT` when set.
    pub fn from_env() -> Result<Self, OracleError> {
        match std::env::var(ORACLE_LIMIT_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(OracleLimits::uniform)
                .map_err(|_| OracleError::BadLimit(raw)),
            Err(_) => Ok(OracleLimits::default()),
        }
    }
}

/// Minimising witness for η.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaResult {
    pub eta: usize,
    pub witness_partition: OptimalPartition,
    /// Label given to each class of `witness_partition`; injective.
    pub witness_assignment: Vec<ColorLabel>,
}

impl EtaResult {
    /// Label the witness coloring gives vertex `v`.
    pub fn witness_label(&self, n: usize) -> Vec<ColorLabel> {
        let class_of = self.witness_partition.class_of(n);
        class_of
            .into_iter()
            .map(|c| self.witness_assignment[c].clone())
            .collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Oracle {
    pub limits: OracleLimits,
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    fn check(&self, what: &'static str, n: usize, limit: usize) -> Result<(), OracleError> {
        if n > limit.min(MAX_ORACLE_LIMIT) {
            Err(OracleError::SizeLimit { what, n, limit })
        } else {
            Ok(())
        }
    }

    pub fn chromatic_number(&self, graph: &Graph) -> Result<usize, OracleError> {
        self.check("chromatic number", graph.n(), self.limits.chromatic)?;
        Ok(chromatic::chromatic(graph).0)
    }

    /// One optimal coloring as `vertex → class`, classes `0..χ`.
    pub fn optimal_coloring(&self, graph: &Graph) -> Result<Vec<usize>, OracleError> {
        self.check("chromatic number", graph.n(), self.limits.chromatic)?;
        Ok(chromatic::chromatic(graph).1)
    }

    /// All partitions of `V` into exactly χ(G) independent sets.
    pub fn optimal_partitions<'g>(
        &self,
        graph: &'g Graph,
    ) -> Result<OptimalPartitions<'g>, OracleError> {
        self.check("partition enumeration", graph.n(), self.limits.enumeration)?;
        let chi = chromatic::chromatic(graph).0;
        Ok(OptimalPartitions::new(graph, chi))
    }

    /// The lexicographically first optimal partition. Needs only the
    /// chromatic-number limit.
    pub fn first_optimal_partition(&self, graph: &Graph) -> Result<OptimalPartition, OracleError> {
        self.check("chromatic number", graph.n(), self.limits.chromatic)?;
        let chi = chromatic::chromatic(graph).0;
        Ok(OptimalPartitions::new(graph, chi)
            .next()
            .expect("a χ-coloring exists"))
    }

    /// η: the fewest mismatched vertices over every optimal coloring with
    /// labels drawn from the whole universe.
    ///
    /// Per optimal partition, the best injective class → label map is a
    /// maximum-weight assignment between classes and the distinct predicted
    /// labels; classes left over take fresh labels and agree nowhere.
    pub fn prediction_error(&self, instance: &OnlineInstance) -> Result<EtaResult, OracleError> {
        let predictions = instance.predictions().ok_or(OracleError::MissingPredictions)?;
        let graph = instance.graph();
        let n = graph.n();

        let labels: Vec<ColorLabel> = predictions
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let label_index: BTreeMap<&ColorLabel, usize> =
            labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let predicted: Vec<usize> = predictions.iter().map(|l| label_index[l]).collect();

        let mut best: Option<(usize, OptimalPartition, Vec<usize>)> = None;
        for partition in self.optimal_partitions(graph)? {
            let k = partition.classes.len();
            let m = k.max(labels.len());
            let mut weights = vec![vec![0i64; m]; m];
            for (c, class) in partition.classes.iter().enumerate() {
                for &v in class {
                    weights[c][predicted[v]] += 1;
                }
            }
            let (agreement, col_of_row) = max_weight_assignment(&weights);
            let eta = n - agreement as usize;
            if best.as_ref().is_none_or(|(b, _, _)| eta < *b) {
                let cols = col_of_row[..k].to_vec();
                best = Some((eta, partition, cols));
                if eta == 0 {
                    break;
                }
            }
        }
        let (eta, witness_partition, cols) = best.expect("at least one optimal partition");

        let mut fresh = fresh_labels(&labels);
        let witness_assignment = cols
            .into_iter()
            .map(|col| {
                if col < labels.len() {
                    labels[col].clone()
                } else {
                    fresh.next().expect("unbounded")
                }
            })
            .collect();
        Ok(EtaResult {
            eta,
            witness_partition,
            witness_assignment,
        })
    }
}

/// Labels `fresh0, fresh1, …` skipping any that are already taken.
fn fresh_labels(taken: &[ColorLabel]) -> impl Iterator<Item = ColorLabel> + '_ {
    (0..)
        .map(|i| ColorLabel::new(&format!("fresh{i}")).expect("valid label"))
        .filter(move |l| !taken.contains(l))
}
