use super::{ColorLabel, Graph, GraphError};

/// An online graph `(G, π)` with optional per-vertex predictions.
///
/// `order[i]` is the vertex revealed at step `i`; `position` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnlineInstance {
    graph: Graph,
    order: Vec<usize>,
    position: Vec<usize>,
    predictions: Option<Vec<ColorLabel>>,
}

/// Result of [`OnlineInstance::suffix`]: the relabelled suffix instance and,
/// for each of its vertices, the id it had in the parent instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixInstance {
    pub instance: OnlineInstance,
    pub original_ids: Vec<usize>,
}

impl OnlineInstance {
    pub fn new(
        graph: Graph,
        order: Vec<usize>,
        predictions: Option<Vec<ColorLabel>>,
    ) -> Result<Self, GraphError> {
        let n = graph.n();
        if order.len() != n {
            return Err(GraphError::NotAPermutation(format!(
                "length {} but n = {n}",
                order.len()
            )));
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(GraphError::NotAPermutation(format!(
                    "vertex {v} out of range"
                )));
            }
            if position[v] != usize::MAX {
                return Err(GraphError::NotAPermutation(format!(
                    "vertex {v} appears twice"
                )));
            }
            position[v] = i;
        }
        if let Some(p) = &predictions {
            if p.len() != n {
                return Err(GraphError::PredictionCount { got: p.len(), n });
            }
        }
        Ok(OnlineInstance {
            graph,
            order,
            position,
            predictions,
        })
    }

    /// Vertices revealed in id order.
    pub fn identity_order(graph: Graph) -> Self {
        let order = (0..graph.n()).collect();
        OnlineInstance::new(graph, order, None).expect("identity is a permutation")
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 0-based step at which `v` is revealed.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn predictions(&self) -> Option<&[ColorLabel]> {
        self.predictions.as_deref()
    }

    pub fn prediction(&self, v: usize) -> Option<&ColorLabel> {
        self.predictions.as_ref().map(|p| &p[v])
    }

    pub fn with_predictions(self, predictions: Vec<ColorLabel>) -> Result<Self, GraphError> {
        OnlineInstance::new(self.graph, self.order, Some(predictions))
    }

    pub fn without_predictions(mut self) -> Self {
        self.predictions = None;
        self
    }

    /// `(G(i), π(i))` for 1-based position `i`: the subgraph induced by the
    /// vertices revealed at positions `i..=n`, relabelled `0..m` in reveal
    /// order, with predictions restricted to it.
    pub fn suffix(&self, i: usize) -> Result<SuffixInstance, GraphError> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(GraphError::SuffixOutOfRange { i, n });
        }
        let original_ids: Vec<usize> = self.order[i - 1..].to_vec();
        let graph = self.graph.induced(&original_ids);
        let predictions = self
            .predictions
            .as_ref()
            .map(|p| original_ids.iter().map(|&v| p[v].clone()).collect());
        let order = (0..original_ids.len()).collect();
        let instance = OnlineInstance::new(graph, order, predictions)?;
        Ok(SuffixInstance {
            instance,
            original_ids,
        })
    }
}
