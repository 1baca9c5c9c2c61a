//! Online colorers and the driver that feeds them.
//!
//! A colorer never sees the graph. At each step the driver hands it a
//! [`StepView`]: the reveal index, the already-revealed neighbours (by
//! reveal index) with the colors they were given, and the prediction for
//! the new vertex, if any. Future vertices are never exposed.

mod ffp;
mod first_fit;
mod scripted;

pub use ffp::FirstFitPredictions;
pub use first_fit::{FirstFit, FIRST_FIT_PALETTE};
pub use scripted::Scripted;

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Color, ColorLabel, Coloring, OnlineInstance};

/// What a colorer may see when vertex number `step` (0-based) arrives.
#[derive(Debug, Clone, Copy)]
pub struct StepView<'a> {
    pub step: usize,
    /// `(reveal step, color)` of each revealed neighbour, by increasing step.
    pub neighbors: &'a [(usize, Color)],
    pub prediction: Option<&'a ColorLabel>,
}

impl StepView<'_> {
    pub fn neighbor_has(&self, color: &Color) -> bool {
        self.neighbors.iter().any(|(_, c)| c == color)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorerError {
    #[error("no prediction for the vertex revealed at step {step}")]
    MissingPrediction { step: usize },
    #[error("script exhausted at step {step} (length {len})")]
    ScriptExhausted { step: usize, len: usize },
    #[error("scripted color {color} at step {step} conflicts with neighbour revealed at step {neighbor_step}")]
    ScriptConflict {
        step: usize,
        neighbor_step: usize,
        color: Color,
    },
    #[error("sub-algorithm {index} ({name}) colored step {step} like its neighbour at step {neighbor_step}")]
    SubImproper {
        index: usize,
        name: String,
        step: usize,
        neighbor_step: usize,
    },
    #[error("sub-algorithm {index}: {source}")]
    Sub {
        index: usize,
        #[source]
        source: Box<ColorerError>,
    },
}

/// A deterministic, irrevocable online coloring strategy.
pub trait OnlineColorer {
    fn name(&self) -> String;

    /// Color for the vertex described by `view`.
    fn assign(&mut self, view: &StepView<'_>) -> Result<Color, ColorerError>;
}

impl<T: OnlineColorer + ?Sized> OnlineColorer for Box<T> {
    fn name(&self) -> String {
        (**self).name()
    }

    fn assign(&mut self, view: &StepView<'_>) -> Result<Color, ColorerError> {
        (**self).assign(view)
    }
}

/// Builds a fresh colorer per run.
pub type ColorerFactory = Box<dyn Fn() -> Box<dyn OnlineColorer> + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("improper step: vertex {vertex} got {color}, already used by neighbour {neighbor}")]
    ImproperStep {
        vertex: usize,
        neighbor: usize,
        color: Color,
    },
    #[error("colorer failed on vertex {vertex}: {source}")]
    Colorer {
        vertex: usize,
        #[source]
        source: ColorerError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub vertex: usize,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub coloring: Coloring,
    pub distinct_colors: usize,
    pub per_step: Vec<TraceStep>,
    /// Distinct colors per palette.
    pub per_palette_counts: BTreeMap<ColorLabel, usize>,
    /// `prefix_counts[i]` = distinct colors after step `i`.
    pub prefix_counts: Vec<usize>,
}

impl RunResult {
    /// Rank sequence in reveal order.
    pub fn ranks(&self) -> Vec<u32> {
        self.per_step.iter().map(|s| s.color.rank).collect()
    }
}

/// Reveals `instance` to `colorer` in order and records the result.
/// Properness is checked after every step.
pub fn run<C: OnlineColorer + ?Sized>(
    colorer: &mut C,
    instance: &OnlineInstance,
) -> Result<RunResult, RunError> {
    let graph = instance.graph();
    let n = graph.n();
    let mut coloring = Coloring::uncolored(n);
    let mut per_step = Vec::with_capacity(n);
    let mut seen: HashSet<Color> = HashSet::new();
    let mut per_palette_counts: BTreeMap<ColorLabel, usize> = BTreeMap::new();
    let mut prefix_counts = Vec::with_capacity(n);
    let mut neighbors: Vec<(usize, usize, Color)> = Vec::new();
    let mut view_neighbors: Vec<(usize, Color)> = Vec::new();

    for (step, &v) in instance.order().iter().enumerate() {
        neighbors.clear();
        neighbors.extend(graph.neighbors(v).iter().filter_map(|&u| {
            let pos = instance.position(u);
            (pos < step).then(|| (pos, u, coloring.get(u).expect("revealed").clone()))
        }));
        neighbors.sort_unstable_by_key(|&(pos, _, _)| pos);
        view_neighbors.clear();
        view_neighbors.extend(neighbors.iter().map(|(pos, _, c)| (*pos, c.clone())));

        let view = StepView {
            step,
            neighbors: &view_neighbors,
            prediction: instance.prediction(v),
        };
        let color = colorer
            .assign(&view)
            .map_err(|source| RunError::Colorer { vertex: v, source })?;
        if let Some((_, u, _)) = neighbors.iter().find(|(_, _, c)| *c == color) {
            return Err(RunError::ImproperStep {
                vertex: v,
                neighbor: *u,
                color,
            });
        }
        if seen.insert(color.clone()) {
            *per_palette_counts.entry(color.palette.clone()).or_default() += 1;
        }
        prefix_counts.push(seen.len());
        coloring.set(v, color.clone());
        per_step.push(TraceStep {
            step,
            vertex: v,
            color,
        });
    }

    Ok(RunResult {
        coloring,
        distinct_colors: seen.len(),
        per_step,
        per_palette_counts,
        prefix_counts,
    })
}

/// Lowest rank `r` with `palette#r` absent from the revealed neighbours.
pub(crate) fn lowest_free_rank(view: &StepView<'_>, palette: &ColorLabel) -> u32 {
    let mut taken: Vec<u32> = view
        .neighbors
        .iter()
        .filter(|(_, c)| &c.palette == palette)
        .map(|(_, c)| c.rank)
        .collect();
    taken.sort_unstable();
    taken.dedup();
    let mut rank = 0;
    for t in taken {
        if t != rank {
            break;
        }
        rank += 1;
    }
    rank
}
