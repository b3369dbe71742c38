use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use tourneylab_core::generators::{
    near_regular_tournament, random_tournament, rotational_tournament, transitive_tournament,
};
use tourneylab_core::{parse_trn1, ExtremalSpec, Tournament};

use crate::error::{CliError, CliResult};

/// Where an experiment's tournament comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Source {
    File {
        path: PathBuf,
    },
    Rotational {
        k: usize,
    },
    NearRegular {
        m: usize,
    },
    Transitive {
        n: usize,
    },
    Random {
        n: usize,
        seed: u64,
    },
    Theorem1Even {
        k: usize,
    },
    Theorem1Odd {
        k: usize,
    },
    Main {
        n: usize,
        t: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

impl Source {
    pub fn load(&self) -> CliResult<Tournament> {
        let t = match *self {
            Self::File { ref path } => return read_tournament(path),
            Self::Rotational { k } => rotational_tournament(k)?,
            Self::NearRegular { m } => near_regular_tournament(m, None)?,
            Self::Transitive { n } => transitive_tournament(n)?,
            Self::Random { n, seed } => random_tournament(n, seed)?,
            Self::Theorem1Even { k } => ExtremalSpec::Theorem1Even { k }.build()?,
            Self::Theorem1Odd { k } => ExtremalSpec::Theorem1Odd { k }.build()?,
            Self::Main { n, t, seed } => ExtremalSpec::MainTightness { n, t, seed }.build()?,
        };
        Ok(t)
    }

    /// The `t` a generated family is built around, if any.
    pub fn natural_t(&self) -> Option<usize> {
        match *self {
            Self::Main { t, .. } => Some(t),
            _ => None,
        }
    }
}

pub fn read_tournament(path: &Path) -> CliResult<Tournament> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_trn1(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// One estimation sweep over several sampling probabilities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub tournament: Source,
    pub p_values: Vec<f64>,
    /// Parameter of the reference bound; defaults to the family's own `t`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub trials: u64,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv_path: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let config: Self = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.p_values.is_empty() {
            return Err(CliError::Config("p_values is empty".into()));
        }
        if let Some(p) = self.p_values.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
            return Err(CliError::Config(format!("p = {p} is outside (0, 1)")));
        }
        if self.trials == 0 {
            return Err(CliError::Config("trials must be at least 1".into()));
        }
        self.resolved_t().map(|_| ())
    }

    pub fn resolved_t(&self) -> CliResult<usize> {
        match self.t.or_else(|| self.tournament.natural_t()) {
            Some(0) => Err(CliError::Config("t must be at least 1".into())),
            Some(t) => Ok(t),
            None => Err(CliError::Config(
                "t is required unless the family is `main`".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generated_source() {
        let c = ExperimentConfig::from_json(
            r#"{"tournament":{"family":"main","n":43,"t":2},"p_values":[0.5],"trials":10}"#,
        )
        .unwrap();
        assert_eq!(c.resolved_t().unwrap(), 2);
        assert_eq!(c.master_seed, 0);
        assert_eq!(c.tournament.load().unwrap().order(), 43);
    }

    #[test]
    fn rejects_bad_fields() {
        for bad in [
            r#"{"tournament":{"family":"main","n":43,"t":2},"p_values":[1.0],"trials":10}"#,
            r#"{"tournament":{"family":"main","n":43,"t":2},"p_values":[],"trials":10}"#,
            r#"{"tournament":{"family":"main","n":43,"t":2},"p_values":[0.5],"trials":0}"#,
            r#"{"tournament":{"family":"rotational","k":3},"p_values":[0.5],"trials":5}"#,
            r#"{"tournament":{"family":"nope"},"p_values":[0.5],"trials":5,"t":1}"#,
            r#"{"tournament":{"family":"rotational","k":3},"p_values":[0.5],"trials":5,"t":1,"x":1}"#,
        ] {
            assert!(matches!(ExperimentConfig::from_json(bad), Err(CliError::Config(_))), "{bad}");
        }
    }

    #[test]
    fn family_names() {
        let s: Source = serde_json::from_str(r#"{"family":"theorem1-odd","k":1}"#).unwrap();
        assert_eq!(s, Source::Theorem1Odd { k: 1 });
        let s: Source = serde_json::from_str(r#"{"family":"near-regular","m":8}"#).unwrap();
        assert_eq!(s.load().unwrap().order(), 8);
    }
}
