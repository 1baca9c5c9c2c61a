//! Running several online colorers side by side on disjoint palettes and
//! following, at every step, whichever has used the fewest colors so far.
//!
//! With `t` sub-algorithms the combined coloring uses at most `t` times the
//! colors of the best of them on the whole input.

use std::collections::{BTreeSet, HashSet};

use crate::algorithms::{
    run, ColorerError, ColorerFactory, FirstFitPredictions, OnlineColorer, RunError, RunResult,
    StepView,
};
use crate::graph::{Color, ColorLabel, OnlineInstance};

/// Namespace for sub-algorithm `index` (0-based): `"A1"`, `"A2"`, …
pub fn sub_namespace(index: usize) -> String {
    format!("A{}", index + 1)
}

struct SubRun {
    colorer: Box<dyn OnlineColorer>,
    namespace: String,
    /// Color this sub-algorithm gave each step, as it chose it.
    colors: Vec<Color>,
    distinct: HashSet<Color>,
}

/// Meta-colorer over `t ≥ 1` sub-colorers.
///
/// Every sub-colorer is advanced on every vertex and only ever sees its own
/// earlier colors. The emitted color is that of the sub-colorer with the
/// fewest distinct colors after coloring the current vertex, ties going to
/// the lowest index.
pub struct Combiner {
    subs: Vec<SubRun>,
    chosen: Vec<usize>,
    scratch: Vec<(usize, Color)>,
}

impl Combiner {
    pub fn new(colorers: Vec<Box<dyn OnlineColorer>>) -> Self {
        assert!(!colorers.is_empty(), "combiner needs at least one colorer");
        let subs = colorers
            .into_iter()
            .enumerate()
            .map(|(i, colorer)| SubRun {
                colorer,
                namespace: sub_namespace(i),
                colors: Vec::new(),
                distinct: HashSet::new(),
            })
            .collect();
        Combiner {
            subs,
            chosen: Vec::new(),
            scratch: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    /// Index of the sub-algorithm followed at each step so far.
    pub fn chosen_log(&self) -> &[usize] {
        &self.chosen
    }

    /// Distinct colors used by each sub-simulation so far.
    pub fn sub_counts(&self) -> Vec<usize> {
        self.subs.iter().map(|s| s.distinct.len()).collect()
    }
}

impl OnlineColorer for Combiner {
    fn name(&self) -> String {
        let names: Vec<String> = self.subs.iter().map(|s| s.colorer.name()).collect();
        format!("combine({})", names.join(","))
    }

    fn assign(&mut self, view: &StepView<'_>) -> Result<Color, ColorerError> {
        debug_assert!(self.subs.iter().all(|s| s.colors.len() == view.step));
        for (index, sub) in self.subs.iter_mut().enumerate() {
            // The sub-algorithm sees the colors it chose itself.
            self.scratch.clear();
            self.scratch.extend(
                view.neighbors
                    .iter()
                    .map(|&(s, _)| (s, sub.colors[s].clone())),
            );
            let sub_view = StepView {
                step: view.step,
                neighbors: &self.scratch,
                prediction: view.prediction,
            };
            let raw = sub.colorer.assign(&sub_view).map_err(|e| ColorerError::Sub {
                index,
                source: Box::new(e),
            })?;
            if let Some((neighbor_step, _)) = self.scratch.iter().find(|(_, c)| *c == raw) {
                return Err(ColorerError::SubImproper {
                    index,
                    name: sub.colorer.name(),
                    step: view.step,
                    neighbor_step: *neighbor_step,
                });
            }
            sub.distinct.insert(raw.clone());
            sub.colors.push(raw);
        }

        let best = self
            .subs
            .iter()
            .enumerate()
            .min_by_key(|(i, s)| (s.distinct.len(), *i))
            .map(|(i, _)| i)
            .expect("at least one sub-algorithm");
        self.chosen.push(best);
        let sub = &self.subs[best];
        Ok(sub.colors[view.step].namespaced(&sub.namespace))
    }
}

/// Output of [`combine`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedRun {
    pub result: RunResult,
    pub chosen: Vec<usize>,
    /// Distinct colors of each sub-simulation over the whole instance.
    pub sub_counts: Vec<usize>,
}

pub fn combine(
    colorers: Vec<Box<dyn OnlineColorer>>,
    instance: &OnlineInstance,
) -> Result<CombinedRun, RunError> {
    let mut combiner = Combiner::new(colorers);
    let result = run(&mut combiner, instance)?;
    Ok(CombinedRun {
        result,
        chosen: combiner.chosen.clone(),
        sub_counts: combiner.sub_counts(),
    })
}

/// How phase two of [`APrime`] starts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Restart {
    /// The sub-simulations shadow the input from the first vertex and phase
    /// two only starts emitting their colors. Each followed simulation is then
    /// charged at most its own count on a prefix of the whole input, which
    /// keeps the total within `k + 2·min`.
    #[default]
    Replay,
    /// The sub-simulations start from scratch on the suffix. Both FirstFit and
    /// FirstFitPredictions can need more colors on a suffix than on the whole
    /// input, so the `3·min` bound can fail in this mode.
    Fresh,
}

enum Phase {
    Predictions { labels: BTreeSet<ColorLabel> },
    Combined { start: usize },
}

/// For inputs known to have chromatic number `k`: color every vertex with
/// its prediction (rank 0) until a vertex either brings the number of
/// distinct predicted labels to `k + 1` or cannot take its prediction
/// because a neighbour already has it. From that vertex on, emit the colors
/// of a [`Combiner`] over FirstFitPredictions and `classical`.
///
/// Phase-two palettes are namespaced (`A1/…`, `A2/…`) and plain labels
/// cannot contain the separator, so the two phases never share a color.
pub struct APrime {
    k: usize,
    classical: ColorerFactory,
    restart: Restart,
    phase: Phase,
    combiner: Option<Combiner>,
    scratch: Vec<(usize, Color)>,
}

impl APrime {
    pub fn new(k: usize, classical: ColorerFactory) -> Self {
        Self::with_restart(k, classical, Restart::default())
    }

    pub fn with_restart(k: usize, classical: ColorerFactory, restart: Restart) -> Self {
        let mut a = APrime {
            k,
            classical,
            restart,
            phase: Phase::Predictions {
                labels: BTreeSet::new(),
            },
            combiner: None,
            scratch: Vec::new(),
        };
        if restart == Restart::Replay {
            a.combiner = Some(a.new_combiner());
        }
        a
    }

    fn new_combiner(&self) -> Combiner {
        Combiner::new(vec![
            Box::new(FirstFitPredictions::new()),
            (self.classical)(),
        ])
    }

    /// 0-based step at which phase two began, if it did.
    pub fn switch_step(&self) -> Option<usize> {
        match &self.phase {
            Phase::Predictions { .. } => None,
            Phase::Combined { start } => Some(*start),
        }
    }

    /// Followed sub-algorithm per phase-two step.
    pub fn chosen_log(&self) -> &[usize] {
        match (&self.phase, &self.combiner) {
            (Phase::Combined { start }, Some(c)) => match self.restart {
                Restart::Replay => &c.chosen_log()[*start..],
                Restart::Fresh => c.chosen_log(),
            },
            _ => &[],
        }
    }
}

impl OnlineColorer for APrime {
    fn name(&self) -> String {
        format!("aprime({},{})", self.k, (self.classical)().name())
    }

    fn assign(&mut self, view: &StepView<'_>) -> Result<Color, ColorerError> {
        if let Phase::Predictions { labels } = &mut self.phase {
            let predicted = view
                .prediction
                .ok_or(ColorerError::MissingPrediction { step: view.step })?;
            let color = Color::new(predicted.clone(), 0);
            let too_many = !labels.contains(predicted) && labels.len() + 1 > self.k;
            if !too_many && !view.neighbor_has(&color) {
                labels.insert(predicted.clone());
                if let Some(shadow) = &mut self.combiner {
                    shadow.assign(view)?;
                }
                return Ok(color);
            }
            self.phase = Phase::Combined { start: view.step };
            if self.restart == Restart::Fresh {
                self.combiner = Some(self.new_combiner());
            }
        }

        let Phase::Combined { start } = self.phase else {
            unreachable!("switched above")
        };
        let combiner = self.combiner.as_mut().expect("created at the switch");
        match self.restart {
            Restart::Replay => combiner.assign(view),
            Restart::Fresh => {
                self.scratch.clear();
                self.scratch.extend(
                    view.neighbors
                        .iter()
                        .filter(|(s, _)| *s >= start)
                        .map(|(s, c)| (s - start, c.clone())),
                );
                let suffix_view = StepView {
                    step: view.step - start,
                    neighbors: &self.scratch,
                    prediction: view.prediction,
                };
                combiner.assign(&suffix_view)
            }
        }
    }
}

/// Output of [`a_prime`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct APrimeRun {
    pub result: RunResult,
    pub switch_step: Option<usize>,
    pub chosen: Vec<usize>,
}

pub fn a_prime(
    k: usize,
    classical: ColorerFactory,
    instance: &OnlineInstance,
) -> Result<APrimeRun, RunError> {
    a_prime_with(k, classical, Restart::default(), instance)
}

pub fn a_prime_with(
    k: usize,
    classical: ColorerFactory,
    restart: Restart,
    instance: &OnlineInstance,
) -> Result<APrimeRun, RunError> {
    let mut colorer = APrime::with_restart(k, classical, restart);
    let result = run(&mut colorer, instance)?;
    Ok(APrimeRun {
        result,
        switch_step: colorer.switch_step(),
        chosen: colorer.chosen_log().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::FirstFit;
    use crate::graph::Graph;

    fn labels(ls: &[&str]) -> Vec<ColorLabel> {
        ls.iter().map(|s| ColorLabel::new(s).unwrap()).collect()
    }

    fn ff_factory() -> ColorerFactory {
        Box::new(|| Box::new(FirstFit::new()))
    }

    #[test]
    fn single_colorer_matches_standalone() {
        let g = Graph::new(6, [(0, 3), (1, 3), (1, 4), (2, 5), (0, 5), (2, 4)]).unwrap();
        let inst = OnlineInstance::new(g, vec![0, 4, 1, 5, 2, 3], None).unwrap();
        let alone = run(&mut FirstFit::new(), &inst).unwrap();
        let comb = combine(vec![Box::new(FirstFit::new())], &inst).unwrap();
        assert_eq!(comb.result.distinct_colors, alone.distinct_colors);
        for (a, b) in alone.per_step.iter().zip(&comb.result.per_step) {
            assert_eq!(b.color, a.color.namespaced("A1"));
        }
        assert!(comb.chosen.iter().all(|&c| c == 0));
    }

    #[test]
    fn aprime_follows_perfect_predictions() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = OnlineInstance::new(g, vec![2, 0, 3, 1], None)
            .unwrap()
            .with_predictions(labels(&["x", "y", "x", "y"]))
            .unwrap();
        let r = a_prime(2, ff_factory(), &inst).unwrap();
        assert_eq!(r.switch_step, None);
        assert_eq!(r.result.distinct_colors, 2);
    }

    #[test]
    fn aprime_switches_on_conflict() {
        // path a-b-c revealed a, b, c; a and b both predicted c1
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let inst = OnlineInstance::identity_order(g)
            .with_predictions(labels(&["c1", "c1", "c2"]))
            .unwrap();
        let r = a_prime(2, ff_factory(), &inst).unwrap();
        assert_eq!(r.switch_step, Some(1));
        assert_eq!(r.chosen.len(), 2);
        assert_eq!(r.result.per_step[0].color.to_string(), "c1#0");
        assert!(r.result.per_step[1].color.palette.is_namespaced());
        assert!(r.result.per_step[2].color.palette.is_namespaced());
    }

    #[test]
    fn aprime_switches_on_label_overflow() {
        let inst = OnlineInstance::identity_order(Graph::empty(4))
            .with_predictions(labels(&["a", "b", "c", "a"]))
            .unwrap();
        let r = a_prime(2, ff_factory(), &inst).unwrap();
        assert_eq!(r.switch_step, Some(2));
    }

    #[test]
    fn aprime_needs_predictions() {
        let inst = OnlineInstance::identity_order(Graph::empty(2));
        assert!(a_prime(2, ff_factory(), &inst).is_err());
    }
}
