use super::{lowest_free_rank, ColorerError, OnlineColorer, StepView};
use crate::graph::Color;

/// FirstFit run separately inside one palette per predicted label: a vertex
/// predicted `c` gets the lowest-rank color of palette `c` not already on a
/// revealed neighbour.
///
/// Palettes are keyed by the label itself, so distinct predictions never
/// share colors. Neighbours in other palettes cannot collide and are
/// ignored by the rank search.
#[derive(Debug, Clone, Default)]
pub struct FirstFitPredictions;

impl FirstFitPredictions {
    pub fn new() -> Self {
        FirstFitPredictions
    }
}

impl OnlineColorer for FirstFitPredictions {
    fn name(&self) -> String {
        "ffp".into()
    }

    fn assign(&mut self, view: &StepView<'_>) -> Result<Color, ColorerError> {
        let palette = view
            .prediction
            .ok_or(ColorerError::MissingPrediction { step: view.step })?;
        let rank = lowest_free_rank(view, palette);
        Ok(Color::new(palette.clone(), rank))
    }
}
