//! Batch runs: every algorithm on every instance, with optional exact χ and
//! η, and the proven upper bounds checked per row.
//!
//! CSV columns, in order:
//!
//! `instance_id, n, algorithm, distinct_colors, chi, eta, bound_eta_plus_chi,
//! bound_t_min, competitive_ratio, ratio_one_plus_eta_over_chi,
//! bound_satisfied, error`
//!
//! * `bound_eta_plus_chi`: `eta + chi`, filled for `ffp` rows.
//! * `bound_t_min`: for `combine:` rows `t · min` of the sub-algorithms run
//!   alone; for `aprime:` rows `3 · min(ffp, classical)`, or `k` when η = 0
//!   and exactly `k` labels are predicted (then equality is required).
//! * ratios carry four decimals; empty cells mean "not computed".

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use crate::algorithms::run;
use crate::generators::{
    attach_predictions, gen_crown, gen_kk_blocks, gen_random, gen_singletons, CrownVariant,
    GenError, PredictionModel,
};
use crate::graph::OnlineInstance;
use crate::io::{parse_document, InstanceDocument, ParseError};
use crate::oracle::Oracle;
use crate::registry::{AlgoError, AlgoSpec};

pub const CSV_HEADER: [&str; 12] = [
    "instance_id",
    "n",
    "algorithm",
    "distinct_colors",
    "chi",
    "eta",
    "bound_eta_plus_chi",
    "bound_t_min",
    "competitive_ratio",
    "ratio_one_plus_eta_over_chi",
    "bound_satisfied",
    "error",
];

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("no instances")]
    NoInstances,
    #[error("no algorithms")]
    NoAlgorithms,
    #[error("instance source {index}: give exactly one of \"file\" or \"gen\"")]
    AmbiguousSource { index: usize },
    #[error("bad prediction model {0:?}")]
    BadPredictionModel(String),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Algo(#[from] AlgoError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// A generated family and its parameters.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeneratorSpec {
    CrownA { n: usize },
    CrownB { n: usize },
    Kkblocks { k: usize },
    Singletons { t: usize },
    Random { n: usize, p: f64, seed: Option<u64> },
}

impl GeneratorSpec {
    /// From a family name and `key=value` pairs, e.g. `("random", "n=8,p=0.5")`.
    pub fn from_params(family: &str, params: &str) -> Result<Self, ExperimentError> {
        let mut map = serde_json::Map::new();
        map.insert("family".into(), family.into());
        for pair in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| ExperimentError::BadParams(format!("{pair:?} is not key=value")))?;
            let value: serde_json::Value = serde_json::from_str(value.trim())
                .map_err(|_| ExperimentError::BadParams(format!("{pair:?} has a non-numeric value")))?;
            map.insert(key.trim().into(), value);
        }
        serde_json::from_value(map.into()).map_err(|e| ExperimentError::BadParams(e.to_string()))
    }

    /// Builds the instance. Random instances without their own seed use
    /// `seed`.
    pub fn generate(&self, seed: u64) -> Result<InstanceDocument, GenError> {
        let (instance, scripts) = match *self {
            GeneratorSpec::CrownA { n } => (gen_crown(n, CrownVariant::MinusMatching)?, None),
            GeneratorSpec::CrownB { n } => (gen_crown(n, CrownVariant::WithFirstEdge)?, None),
            GeneratorSpec::Kkblocks { k } => (gen_kk_blocks(k)?, None),
            GeneratorSpec::Singletons { t } => {
                let (inst, scripts) = gen_singletons(t)?;
                (inst, Some(scripts))
            }
            GeneratorSpec::Random { n, p, seed: own } => (gen_random(n, p, own.unwrap_or(seed))?, None),
        };
        Ok(InstanceDocument { instance, scripts })
    }
}

/// `none`, `perfect` or `corrupted:<rate>`.
pub fn parse_prediction_model(s: &str) -> Result<PredictionModel, ExperimentError> {
    let bad = || ExperimentError::BadPredictionModel(s.to_owned());
    match s {
        "none" => Ok(PredictionModel::None),
        "perfect" => Ok(PredictionModel::Perfect),
        _ => {
            let rate: f64 = s
                .strip_prefix("corrupted:")
                .and_then(|r| r.parse().ok())
                .ok_or_else(bad)?;
            if !(0.0..=1.0).contains(&rate) {
                return Err(bad());
            }
            Ok(PredictionModel::Corrupted { rate })
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleToggles {
    #[serde(default)]
    pub chi: bool,
    #[serde(default)]
    pub eta: bool,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSource {
    pub id: Option<String>,
    pub file: Option<PathBuf>,
    pub gen: Option<GeneratorSpec>,
    /// Prediction model applied after loading (see [`parse_prediction_model`]).
    pub predictions: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub instances: Vec<InstanceSource>,
    pub algorithms: Vec<String>,
    #[serde(default)]
    pub oracle: OracleToggles,
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub instance_id: String,
    pub n: usize,
    pub algorithm: String,
    pub distinct_colors: Option<usize>,
    pub chi: Option<usize>,
    pub eta: Option<usize>,
    pub bound_eta_plus_chi: Option<usize>,
    pub bound_t_min: Option<usize>,
    pub bound_satisfied: bool,
    pub error: Option<String>,
}

impl ReportRow {
    pub fn competitive_ratio(&self) -> Option<f64> {
        match (self.distinct_colors, self.chi) {
            (Some(d), Some(c)) if c > 0 => Some(d as f64 / c as f64),
            _ => None,
        }
    }

    pub fn ratio_one_plus_eta_over_chi(&self) -> Option<f64> {
        match (self.eta, self.chi) {
            (Some(e), Some(c)) if c > 0 => Some(1.0 + e as f64 / c as f64),
            _ => None,
        }
    }

    fn record(&self) -> Vec<String> {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let ratio = |v: Option<f64>| v.map(|x| format!("{x:.4}")).unwrap_or_default();
        vec![
            self.instance_id.clone(),
            self.n.to_string(),
            self.algorithm.clone(),
            opt(self.distinct_colors),
            opt(self.chi),
            opt(self.eta),
            opt(self.bound_eta_plus_chi),
            opt(self.bound_t_min),
            ratio(self.competitive_ratio()),
            ratio(self.ratio_one_plus_eta_over_chi()),
            self.bound_satisfied.to_string(),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

struct LoadedInstance {
    id: String,
    doc: InstanceDocument,
}

fn load_sources(
    config: &ExperimentConfig,
    base: &Path,
    oracle: &Oracle,
) -> Result<Vec<LoadedInstance>, ExperimentError> {
    config
        .instances
        .iter()
        .enumerate()
        .map(|(index, source)| {
            let (default_id, mut doc) = match (&source.file, &source.gen) {
                (Some(file), None) => {
                    let path = base.join(file);
                    let bytes = std::fs::read(&path).map_err(|source| ExperimentError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    let doc = parse_document(&bytes)
                        .map_err(|source| ExperimentError::Parse { path, source })?;
                    (file.display().to_string(), doc)
                }
                (None, Some(gen)) => (format!("gen{index}"), gen.generate(config.seed)?),
                _ => return Err(ExperimentError::AmbiguousSource { index }),
            };
            if let Some(model) = &source.predictions {
                let model = parse_prediction_model(model)?;
                let seed = config.seed.wrapping_add(index as u64);
                doc.instance = attach_predictions(doc.instance, &model, seed, oracle)?;
            }
            Ok(LoadedInstance {
                id: source.id.clone().unwrap_or(default_id),
                doc,
            })
        })
        .collect()
}

/// Runs the configured experiment. Instance files are resolved relative to
/// `base`. Rows come back sorted by `(instance_id, algorithm)`; per-row
/// failures (oracle size limit, missing predictions, …) land in the row's
/// `error` field.
pub fn run_experiment(
    config: &ExperimentConfig,
    base: &Path,
    oracle: &Oracle,
) -> Result<Vec<ReportRow>, ExperimentError> {
    if config.instances.is_empty() {
        return Err(ExperimentError::NoInstances);
    }
    if config.algorithms.is_empty() {
        return Err(ExperimentError::NoAlgorithms);
    }
    let algorithms = config
        .algorithms
        .iter()
        .map(|a| a.parse::<AlgoSpec>())
        .collect::<Result<Vec<_>, _>>()?;
    let instances = load_sources(config, base, oracle)?;

    let mut rows = Vec::new();
    for loaded in &instances {
        let inst = &loaded.doc.instance;
        let mut errors = Vec::new();
        let chi = if config.oracle.chi || config.oracle.eta {
            oracle
                .chromatic_number(inst.graph())
                .map_err(|e| errors.push(e.to_string()))
                .ok()
        } else {
            None
        };
        let eta = if config.oracle.eta && inst.predictions().is_some() {
            oracle
                .prediction_error(inst)
                .map(|r| r.eta)
                .map_err(|e| errors.push(e.to_string()))
                .ok()
        } else {
            None
        };
        for algo in &algorithms {
            let mut row = evaluate(loaded, algo, chi, eta);
            if !errors.is_empty() {
                let mut all = errors.clone();
                all.extend(row.error.take());
                row.error = Some(all.join("; "));
            }
            rows.push(row);
        }
    }
    rows.sort_by(|a, b| (&a.instance_id, &a.algorithm).cmp(&(&b.instance_id, &b.algorithm)));
    Ok(rows)
}

fn standalone(spec: &AlgoSpec, doc: &InstanceDocument) -> Result<usize, String> {
    let mut colorer = spec.build(doc.scripts.as_deref()).map_err(|e| e.to_string())?;
    run(&mut colorer, &doc.instance)
        .map(|r| r.distinct_colors)
        .map_err(|e| e.to_string())
}

fn evaluate(
    loaded: &LoadedInstance,
    algo: &AlgoSpec,
    chi: Option<usize>,
    eta: Option<usize>,
) -> ReportRow {
    let doc = &loaded.doc;
    let mut row = ReportRow {
        instance_id: loaded.id.clone(),
        n: doc.instance.n(),
        algorithm: algo.to_string(),
        distinct_colors: None,
        chi,
        eta,
        bound_eta_plus_chi: None,
        bound_t_min: None,
        bound_satisfied: true,
        error: None,
    };
    let outcome = (|| -> Result<(), String> {
        let colors = standalone(algo, doc)?;
        row.distinct_colors = Some(colors);
        match algo {
            AlgoSpec::Ffp => {
                if let (Some(e), Some(c)) = (eta, chi) {
                    row.bound_eta_plus_chi = Some(e + c);
                    row.bound_satisfied = colors <= e + c;
                }
            }
            AlgoSpec::Combine(parts) => {
                let subs = AlgoSpec::expand(parts, doc.scripts.as_deref());
                let alone = subs
                    .iter()
                    .map(|s| standalone(s, doc))
                    .collect::<Result<Vec<_>, _>>()?;
                let bound = subs.len() * alone.into_iter().min().unwrap_or(0);
                row.bound_t_min = Some(bound);
                row.bound_satisfied = colors <= bound;
            }
            AlgoSpec::APrime { k, classical } => {
                let labels: BTreeSet<_> = doc
                    .instance
                    .predictions()
                    .map(|p| p.iter().collect())
                    .unwrap_or_default();
                if eta == Some(0) && labels.len() == *k {
                    row.bound_t_min = Some(*k);
                    row.bound_satisfied = colors == *k;
                } else {
                    let ffp = standalone(&AlgoSpec::Ffp, doc)?;
                    let other = standalone(classical, doc)?;
                    let bound = 3 * ffp.min(other);
                    row.bound_t_min = Some(bound);
                    row.bound_satisfied = colors <= bound;
                }
            }
            _ => {}
        }
        Ok(())
    })();
    if let Err(e) = outcome {
        row.error = Some(e);
    }
    row
}

pub fn write_csv<W: std::io::Write>(rows: &[ReportRow], out: W) -> Result<(), csv::Error> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.write_record(row.record())?;
    }
    writer.flush()?;
    Ok(())
}

/// Overall verdict of an experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    BoundViolated,
    RowErrors,
}

pub fn verdict(rows: &[ReportRow]) -> Verdict {
    if rows.iter().any(|r| !r.bound_satisfied) {
        Verdict::BoundViolated
    } else if rows.iter().any(|r| r.error.is_some()) {
        Verdict::RowErrors
    } else {
        Verdict::Ok
    }
}

/// Convenience for tests and the CLI: instance with the given model.
pub fn with_model(
    instance: OnlineInstance,
    model: &str,
    seed: u64,
    oracle: &Oracle,
) -> Result<OnlineInstance, ExperimentError> {
    let model = parse_prediction_model(model)?;
    Ok(attach_predictions(instance, &model, seed, oracle)?)
}
