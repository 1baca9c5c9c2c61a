//! Clique structure forced by a FirstFit coloring.
//!
//! If FirstFit uses `x ≥ 2` colors, some `x + q` vertices (`0 ≤ q ≤ x − 2`)
//! split into `q + 1` cliques of size at least two. [`extract_clique_partition`]
//! builds such a family from the run; [`verify_partition`] checks one
//! without trusting the extractor.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algorithms::RunResult;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliquePartition {
    /// `cliques[0]` is the clique inside the witness set; the rest each hold
    /// one outside vertex plus witness-set vertices of larger color.
    pub cliques: Vec<Vec<usize>>,
    pub x: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("FirstFit used {0} colors; at least 2 are needed")]
    TooFewColors(usize),
    #[error("run does not match the graph: {0}")]
    RunMismatch(String),
    #[error("not a FirstFit run: {0}")]
    NotFirstFit(String),
    #[error("structural violation: {0}")]
    Violation(String),
}

/// Extracts the clique family from a FirstFit run on `graph`.
///
/// Deterministic choices: the top-color witness is the first vertex in
/// reveal order with the top color; its lower-color partners are its
/// earliest revealed neighbours of each color; each outside partner is the
/// earliest-revealed neighbour of the required color.
pub fn extract_clique_partition(
    graph: &Graph,
    run: &RunResult,
) -> Result<CliquePartition, StructureError> {
    let n = graph.n();
    if run.per_step.len() != n {
        return Err(StructureError::RunMismatch(format!(
            "{} steps for {n} vertices",
            run.per_step.len()
        )));
    }
    let mut color = vec![usize::MAX; n];
    let mut position = vec![usize::MAX; n];
    for s in &run.per_step {
        if s.vertex >= n || position[s.vertex] != usize::MAX {
            return Err(StructureError::RunMismatch(format!(
                "vertex {} revealed twice or out of range",
                s.vertex
            )));
        }
        position[s.vertex] = s.step;
        color[s.vertex] = s.color.rank as usize;
    }
    check_first_fit(graph, &color, &position)?;

    let x = color.iter().copied().max().map_or(0, |m| m + 1);
    if x < 2 {
        return Err(StructureError::TooFewColors(x));
    }

    // Witness set S: one vertex t_i per color i.
    let top = *run
        .per_step
        .iter()
        .map(|s| &s.vertex)
        .find(|&&v| color[v] == x - 1)
        .expect("top color is used");
    let mut witness = vec![usize::MAX; x];
    witness[x - 1] = top;
    let mut earlier: Vec<usize> = graph
        .neighbors(top)
        .iter()
        .copied()
        .filter(|&u| position[u] < position[top])
        .collect();
    earlier.sort_by_key(|&u| position[u]);
    for u in earlier {
        if witness[color[u]] == usize::MAX {
            witness[color[u]] = u;
        }
    }
    if let Some(missing) = witness.iter().position(|&t| t == usize::MAX) {
        return Err(StructureError::Violation(format!(
            "top-color vertex {top} has no earlier neighbour of color {missing}"
        )));
    }
    let in_witness: HashSet<usize> = witness.iter().copied().collect();

    // V'_0: witnesses adjacent to every witness of smaller color.
    let full_lower = |i: usize| (0..i).all(|j| graph.has_edge(witness[i], witness[j]));
    let base: Vec<usize> = (0..x).filter(|&i| full_lower(i)).collect();
    let mut cliques = vec![base.iter().map(|&i| witness[i]).collect::<Vec<_>>()];
    // Vertex of V \ S that anchors each further clique.
    let mut anchors: Vec<usize> = Vec::new();

    for i in (0..x).filter(|&i| !full_lower(i)) {
        let u = witness[i];
        // Largest color below i whose witness is not adjacent to u.
        let alpha = (0..i)
            .rev()
            .find(|&j| !graph.has_edge(u, witness[j]))
            .ok_or_else(|| {
                StructureError::Violation(format!("no non-adjacent lower witness for vertex {u}"))
            })?;
        let beta = graph
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| color[w] == alpha && !in_witness.contains(&w))
            .min_by_key(|&w| position[w])
            .ok_or_else(|| {
                StructureError::Violation(format!(
                    "vertex {u} has no outside neighbour of color {alpha}"
                ))
            })?;

        match anchors.iter().position(|&a| a == beta) {
            None => {
                anchors.push(beta);
                cliques.push(vec![beta, u]);
            }
            Some(j) => {
                let clique = &mut cliques[j + 1];
                if let Some(&w) = clique.iter().find(|&&w| !graph.has_edge(u, w)) {
                    return Err(StructureError::Violation(format!(
                        "vertex {u} joins a clique containing non-neighbour {w}"
                    )));
                }
                if clique[1..].iter().any(|&w| color[w] <= color[beta]) {
                    return Err(StructureError::Violation(format!(
                        "clique anchored at {beta} holds a vertex of color <= {}",
                        color[beta]
                    )));
                }
                clique.push(u);
            }
        }
    }

    let q = cliques.len() - 1;
    Ok(CliquePartition { cliques, x, q })
}

/// Every vertex of rank `r` must see all ranks `0..r` among neighbours
/// revealed before it.
fn check_first_fit(graph: &Graph, color: &[usize], position: &[usize]) -> Result<(), StructureError> {
    for v in 0..graph.n() {
        let mut below = vec![false; color[v]];
        for &u in graph.neighbors(v) {
            if position[u] < position[v] {
                if color[u] == color[v] {
                    return Err(StructureError::NotFirstFit(format!(
                        "vertex {v} and neighbour {u} share color {}",
                        color[v]
                    )));
                }
                if color[u] < color[v] {
                    below[color[u]] = true;
                }
            }
        }
        if let Some(gap) = below.iter().position(|&b| !b) {
            return Err(StructureError::NotFirstFit(format!(
                "vertex {v} got color {} although color {gap} was free",
                color[v]
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionDefect {
    VertexOutOfRange { vertex: usize },
    Overlap { vertex: usize },
    TrivialPart { index: usize },
    NotAClique { index: usize, u: usize, v: usize },
    PartCount { parts: usize, q: usize },
    SizeMismatch { total: usize, expected: usize },
    QOutOfRange { q: usize, x: usize },
}

impl fmt::Display for PartitionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionDefect::VertexOutOfRange { vertex } => {
                write!(f, "vertex {vertex} out of range")
            }
            PartitionDefect::Overlap { vertex } => {
                write!(f, "parts overlap at vertex {vertex}")
            }
            PartitionDefect::TrivialPart { index } => write!(f, "trivial part {index}"),
            PartitionDefect::NotAClique { index, u, v } => {
                write!(f, "part {index} not a clique: {u} and {v} are not adjacent")
            }
            PartitionDefect::PartCount { parts, q } => {
                write!(f, "{parts} parts but q + 1 = {}", q + 1)
            }
            PartitionDefect::SizeMismatch { total, expected } => {
                write!(f, "parts hold {total} vertices, expected x + q = {expected}")
            }
            PartitionDefect::QOutOfRange { q, x } => {
                write!(f, "q = {q} outside 0..=x-2 for x = {x}")
            }
        }
    }
}

/// Every property the clique family must have, checked for `partition`.
/// Returns the list of defects; empty means valid.
pub fn verify_partition(graph: &Graph, partition: &CliquePartition) -> Vec<PartitionDefect> {
    let mut defects = Vec::new();
    let mut seen = HashSet::new();
    for (index, part) in partition.cliques.iter().enumerate() {
        if part.len() < 2 {
            defects.push(PartitionDefect::TrivialPart { index });
        }
        for &v in part {
            if v >= graph.n() {
                defects.push(PartitionDefect::VertexOutOfRange { vertex: v });
            } else if !seen.insert(v) {
                defects.push(PartitionDefect::Overlap { vertex: v });
            }
        }
        for (a, &u) in part.iter().enumerate() {
            for &v in &part[a + 1..] {
                if u < graph.n() && v < graph.n() && !graph.has_edge(u, v) {
                    defects.push(PartitionDefect::NotAClique { index, u, v });
                }
            }
        }
    }
    let (x, q) = (partition.x, partition.q);
    if partition.cliques.len() != q + 1 {
        defects.push(PartitionDefect::PartCount {
            parts: partition.cliques.len(),
            q,
        });
    }
    let total: usize = partition.cliques.iter().map(Vec::len).sum();
    if total != x + q {
        defects.push(PartitionDefect::SizeMismatch {
            total,
            expected: x + q,
        });
    }
    if x < 2 || q > x - 2 {
        defects.push(PartitionDefect::QOutOfRange { q, x });
    }
    defects
}
