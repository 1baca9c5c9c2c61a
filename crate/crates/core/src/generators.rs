//! Deterministic instance families and seeded random instances.
//!
//! Random instances use `ChaCha8Rng::seed_from_u64(seed)`. Edges are drawn
//! first, one Bernoulli(p) trial per pair `(u, v)`, `u < v`, in
//! lexicographic order; the reveal order is then a Fisher–Yates shuffle of
//! `0..n` from the same stream (`SliceRandom::shuffle`).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Color, ColorLabel, Graph, GraphError, OnlineInstance};
use crate::oracle::{Oracle, OracleError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("{family} needs {param} >= {min}, got {got}")]
    TooSmall {
        family: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("blockwise predictions cover {got} vertices, instance has {n}")]
    BlockwiseSize { got: usize, n: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn label(s: String) -> ColorLabel {
    ColorLabel::new(&s).expect("generated labels are plain")
}

/// Which crown-style instance [`gen_crown`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrownVariant {
    /// `K_{n,n}` minus a perfect matching.
    MinusMatching,
    /// As above plus the single edge `v₁u₁`.
    WithFirstEdge,
}

/// Crown graph on `v_i = i − 1` and `u_i = n + i − 1` (`i = 1..=n`), with
/// `v_i ~ u_j` for every `i ≠ j`, revealed `v₁, u₁, v₂, u₂, …, v_n, u_n`.
///
/// In that order each pair `v_i, u_i` is non-adjacent and sees exactly one
/// vertex of every earlier color on the opposite side, so FirstFit gives the
/// pair a brand-new color: `n` colors in total for
/// [`CrownVariant::MinusMatching`]. Adding `v₁u₁` splits the first pair and
/// collapses FirstFit to two colors.
pub fn gen_crown(n: usize, variant: CrownVariant) -> Result<OnlineInstance, GenError> {
    if n < 2 {
        return Err(GenError::TooSmall {
            family: "crown",
            param: "n",
            min: 2,
            got: n,
        });
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)))
        .collect();
    if variant == CrownVariant::WithFirstEdge {
        edges.push((0, n));
    }
    let graph = Graph::new(2 * n, edges)?;
    let order = (0..n).flat_map(|i| [i, n + i]).collect();
    Ok(OnlineInstance::new(graph, order, None)?)
}

/// `k` disjoint copies of `K_k` (block `i` holds vertices `(i−1)k..ik`),
/// plus edges from the first vertex of block 1 to the first vertex of every
/// other block. Revealed in id order; every vertex of block `i` is predicted
/// `c<i>`.
pub fn gen_kk_blocks(k: usize) -> Result<OnlineInstance, GenError> {
    if k < 2 {
        return Err(GenError::TooSmall {
            family: "kkblocks",
            param: "k",
            min: 2,
            got: k,
        });
    }
    let mut edges = Vec::new();
    for b in 0..k {
        let base = b * k;
        for a in 0..k {
            for c in a + 1..k {
                edges.push((base + a, base + c));
            }
        }
        if b > 0 {
            edges.push((0, base));
        }
    }
    let graph = Graph::new(k * k, edges)?;
    let predictions = (0..k * k).map(|v| label(format!("c{}", v / k + 1))).collect();
    Ok(OnlineInstance::identity_order(graph).with_predictions(predictions)?)
}

/// `t` isolated vertices in id order, and `t` scripts: script `i`
/// (1-based) colors the first `i` vertices `c<i>#0` and each later vertex
/// with a new rank of palette `c<i>`.
pub fn gen_singletons(t: usize) -> Result<(OnlineInstance, Vec<Vec<Color>>), GenError> {
    if t < 1 {
        return Err(GenError::TooSmall {
            family: "singletons",
            param: "t",
            min: 1,
            got: t,
        });
    }
    let instance = OnlineInstance::identity_order(Graph::empty(t));
    let scripts = (1..=t)
        .map(|i| {
            let palette = label(format!("c{i}"));
            (0..t)
                .map(|step| {
                    let rank = if step < i { 0 } else { step + 1 - i };
                    Color::new(palette.clone(), rank as u32)
                })
                .collect()
        })
        .collect();
    Ok((instance, scripts))
}

/// `G(n, p)` with a uniformly shuffled reveal order; see the module docs for
/// the exact draw sequence.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<OnlineInstance, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::new(n, edges)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    Ok(OnlineInstance::new(graph, order, None)?)
}

#[derive(Debug, Clone, PartialEq)]
pub enum PredictionModel {
    None,
    /// Labels `c0, c1, …` of the first optimal partition in enumeration order.
    Perfect,
    /// Perfect, then each vertex independently with probability `rate`
    /// relabelled uniformly among the other optimal labels and one extra
    /// label `c<χ>`.
    Corrupted { rate: f64 },
    Blockwise(Vec<ColorLabel>),
}

/// Replaces the predictions of `instance` according to `model`.
pub fn attach_predictions(
    instance: OnlineInstance,
    model: &PredictionModel,
    seed: u64,
    oracle: &Oracle,
) -> Result<OnlineInstance, GenError> {
    match model {
        PredictionModel::None => Ok(instance.without_predictions()),
        PredictionModel::Blockwise(labels) => {
            if labels.len() != instance.n() {
                return Err(GenError::BlockwiseSize {
                    got: labels.len(),
                    n: instance.n(),
                });
            }
            Ok(instance.with_predictions(labels.clone())?)
        }
        PredictionModel::Perfect => {
            let labels = perfect_labels(&instance, oracle)?.0;
            Ok(instance.with_predictions(labels)?)
        }
        PredictionModel::Corrupted { rate } => {
            if !(0.0..=1.0).contains(rate) {
                return Err(GenError::BadProbability(*rate));
            }
            let (mut labels, class_of, chi) = perfect_labels(&instance, oracle)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for v in 0..labels.len() {
                if rng.gen_bool(*rate) {
                    // χ other choices: the remaining χ − 1 classes plus c<χ>.
                    let mut pick = rng.gen_range(0..chi);
                    if pick >= class_of[v] {
                        pick += 1;
                    }
                    labels[v] = label(format!("c{pick}"));
                }
            }
            Ok(instance.with_predictions(labels)?)
        }
    }
}

fn perfect_labels(
    instance: &OnlineInstance,
    oracle: &Oracle,
) -> Result<(Vec<ColorLabel>, Vec<usize>, usize), GenError> {
    let graph = instance.graph();
    let partition = oracle.first_optimal_partition(graph)?;
    let class_of = partition.class_of(graph.n());
    let labels = class_of.iter().map(|c| label(format!("c{c}"))).collect();
    Ok((labels, class_of, partition.classes.len()))
}
