//! Command-line graph inputs: a file path, or an inline `gen:` spec.

use std::fs;
use std::path::PathBuf;

use catprod_core::{generate, GeneratorError, GeneratorSpec, Graph};
use thiserror::Error;

use crate::format::{parse_graph, ParseError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Generator(#[from] GeneratorError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    File(PathBuf),
    Generated(GeneratorSpec),
}

impl Input {
    /// `gen:<spec>` selects a generator, anything else is a path.
    pub fn parse(arg: &str) -> Result<Self, InputError> {
        match arg.strip_prefix("gen:") {
            Some(spec) => Ok(Input::Generated(spec.parse()?)),
            None => Ok(Input::File(PathBuf::from(arg))),
        }
    }

    /// Loads the graph. Random generator specs without their own seed draw
    /// from `seed`.
    pub fn load(&self, seed: u64) -> Result<Graph, InputError> {
        match self {
            Input::File(path) => {
                let text = fs::read_to_string(path).map_err(|source| InputError::Io {
                    path: path.clone(),
                    source,
                })?;
                parse_graph(&text).map_err(|source| InputError::Parse {
                    path: path.clone(),
                    source,
                })
            }
            Input::Generated(spec) => {
                let mut spec = spec.clone();
                if spec.seed.is_none() && spec.family.is_random() {
                    spec.seed = Some(seed);
                }
                Ok(generate(&spec)?)
            }
        }
    }

    /// Text shown in reports; random specs include the seed actually used.
    pub fn describe(&self, seed: u64) -> String {
        match self {
            Input::File(path) => path.display().to_string(),
            Input::Generated(spec) => {
                let mut spec = spec.clone();
                if spec.seed.is_none() && spec.family.is_random() {
                    spec.seed = Some(seed);
                }
                format!("gen:{spec}")
            }
        }
    }
}
