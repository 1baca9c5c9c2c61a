use super::{ColorerError, OnlineColorer, StepView};
use crate::graph::Color;

/// Replays a fixed list of colors, one per step.
#[derive(Debug, Clone)]
pub struct Scripted {
    name: String,
    script: Vec<Color>,
}

impl Scripted {
    pub fn new(script: Vec<Color>) -> Self {
        Scripted {
            name: "scripted".into(),
            script,
        }
    }

    pub fn named(name: impl Into<String>, script: Vec<Color>) -> Self {
        Scripted {
            name: name.into(),
            script,
        }
    }
}

impl OnlineColorer for Scripted {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn assign(&mut self, view: &StepView<'_>) -> Result<Color, ColorerError> {
        let color = self
            .script
            .get(view.step)
            .cloned()
            .ok_or(ColorerError::ScriptExhausted {
                step: view.step,
                len: self.script.len(),
            })?;
        if let Some((neighbor_step, _)) = view.neighbors.iter().find(|(_, c)| *c == color) {
            return Err(ColorerError::ScriptConflict {
                step: view.step,
                neighbor_step: *neighbor_step,
                color,
            });
        }
        Ok(color)
    }
}
