//! Named algorithms, as used on the command line and in experiment configs.
//!
//! | text               | colorer                                            |
//! |--------------------|----------------------------------------------------|
//! | `ff`               | FirstFit                                           |
//! | `ffp`              | FirstFitPredictions                                |
//! | `script:<i>`       | the `i`-th (1-based) script of the instance file   |
//! | `combine:<a>+<b>…` | combiner over the listed algorithms                |
//! | `combine:scripts`  | combiner over every script of the instance file    |
//! | `aprime:<k>:<a>`   | known-χ switcher with classical algorithm `<a>`    |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algorithms::{
    ColorerFactory, FirstFit, FirstFitPredictions, OnlineColorer, Scripted,
};
use crate::combiner::{APrime, Combiner};
use crate::graph::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgoError {
    #[error("unknown algorithm {0:?}")]
    Unknown(String),
    #[error("script {index} requested but the instance carries {available}")]
    NoScript { index: usize, available: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgoSpec {
    FirstFit,
    Ffp,
    /// 1-based script index.
    Script(usize),
    /// Expands to every script inside `Combine`.
    AllScripts,
    Combine(Vec<AlgoSpec>),
    APrime { k: usize, classical: Box<AlgoSpec> },
}

impl FromStr for AlgoSpec {
    type Err = AlgoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || AlgoError::Unknown(s.to_owned());
        if let Some(rest) = s.strip_prefix("combine:") {
            let parts = rest
                .split('+')
                .map(|p| match p {
                    "scripts" => Ok(AlgoSpec::AllScripts),
                    _ => simple(p).ok_or_else(unknown),
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(AlgoSpec::Combine(parts));
        }
        if let Some(rest) = s.strip_prefix("aprime:") {
            let (k, classical) = rest.split_once(':').ok_or_else(unknown)?;
            let k = k.parse().map_err(|_| unknown())?;
            let classical = simple(classical).ok_or_else(unknown)?;
            return Ok(AlgoSpec::APrime {
                k,
                classical: Box::new(classical),
            });
        }
        simple(s).ok_or_else(unknown)
    }
}

fn simple(s: &str) -> Option<AlgoSpec> {
    match s {
        "ff" => Some(AlgoSpec::FirstFit),
        "ffp" => Some(AlgoSpec::Ffp),
        _ => s
            .strip_prefix("script:")
            .and_then(|i| i.parse().ok())
            .filter(|&i| i >= 1)
            .map(AlgoSpec::Script),
    }
}

impl fmt::Display for AlgoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgoSpec::FirstFit => f.write_str("ff"),
            AlgoSpec::Ffp => f.write_str("ffp"),
            AlgoSpec::Script(i) => write!(f, "script:{i}"),
            AlgoSpec::AllScripts => f.write_str("scripts"),
            AlgoSpec::Combine(parts) => {
                f.write_str("combine:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            AlgoSpec::APrime { k, classical } => write!(f, "aprime:{k}:{classical}"),
        }
    }
}

impl AlgoSpec {
    /// Sub-algorithms of a `Combine`, with `scripts` expanded.
    pub fn expand(
        parts: &[AlgoSpec],
        scripts: Option<&[Vec<Color>]>,
    ) -> Vec<AlgoSpec> {
        parts
            .iter()
            .flat_map(|p| match p {
                AlgoSpec::AllScripts => {
                    let count = scripts.map_or(0, <[_]>::len);
                    (1..=count).map(AlgoSpec::Script).collect()
                }
                other => vec![other.clone()],
            })
            .collect()
    }

    /// A fresh colorer. `scripts` are the instance document's scripts.
    pub fn build(
        &self,
        scripts: Option<&[Vec<Color>]>,
    ) -> Result<Box<dyn OnlineColorer>, AlgoError> {
        Ok(match self {
            AlgoSpec::FirstFit => Box::new(FirstFit::new()),
            AlgoSpec::Ffp => Box::new(FirstFitPredictions::new()),
            AlgoSpec::Script(i) => {
                let available = scripts.map_or(0, <[_]>::len);
                let script = scripts
                    .and_then(|s| s.get(i - 1))
                    .ok_or(AlgoError::NoScript {
                        index: *i,
                        available,
                    })?;
                Box::new(Scripted::named(format!("script:{i}"), script.clone()))
            }
            AlgoSpec::AllScripts => return Err(AlgoError::Unknown("scripts".into())),
            AlgoSpec::Combine(parts) => {
                let subs = AlgoSpec::expand(parts, scripts)
                    .iter()
                    .map(|p| p.build(scripts))
                    .collect::<Result<Vec<_>, _>>()?;
                if subs.is_empty() {
                    return Err(AlgoError::Unknown(self.to_string()));
                }
                Box::new(Combiner::new(subs))
            }
            AlgoSpec::APrime { k, classical } => {
                Box::new(APrime::new(*k, classical.factory(scripts)?))
            }
        })
    }

    /// Factory building fresh copies of this colorer.
    pub fn factory(&self, scripts: Option<&[Vec<Color>]>) -> Result<ColorerFactory, AlgoError> {
        self.build(scripts)?;
        let spec = self.clone();
        let scripts = scripts.map(<[_]>::to_vec);
        Ok(Box::new(move || {
            spec.build(scripts.as_deref())
                .expect("validated when the factory was made")
        }))
    }
}
