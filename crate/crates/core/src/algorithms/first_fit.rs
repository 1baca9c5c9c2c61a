use super::{lowest_free_rank, ColorerError, OnlineColorer, StepView};
use crate::graph::{Color, ColorLabel};

/// Palette reserved for FirstFit colors.
pub const FIRST_FIT_PALETTE: &str = "ff";

/// Greedy: the lowest rank not used by a revealed neighbour.
#[derive(Debug, Clone)]
pub struct FirstFit {
    palette: ColorLabel,
}

impl FirstFit {
    pub fn new() -> Self {
        FirstFit {
            palette: ColorLabel::new(FIRST_FIT_PALETTE).expect("valid label"),
        }
    }
}

impl Default for FirstFit {
    fn default() -> Self {
        Self::new()
    }
}

impl OnlineColorer for FirstFit {
    fn name(&self) -> String {
        "ff".into()
    }

    fn assign(&mut self, view: &StepView<'_>) -> Result<Color, ColorerError> {
        let rank = lowest_free_rank(view, &self.palette);
        Ok(Color::new(self.palette.clone(), rank))
    }
}
