//! Where the object under study comes from: a text file, a construction
//! string, or a JSON construction spec.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use locprof_core::constructions as cons;
use locprof_core::format::{parse_object, write_object, Object};
use locprof_core::{CliqueSpec, Kind};

use crate::error::CliError;

/// A named construction, written `name:arg:arg` on the command line or as
/// `{"family": name, ...}` in a spec file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Construction {
    Circular { n: usize },
    Transitive { n: usize },
    Tyomkyn { k: u32 },
    ExtremalRho { n: usize },
    CliqueUnion { alphas: Vec<f64>, n: usize },
    RandomGraph { n: usize, p: f64, seed: u64 },
    RandomTournament { n: usize, seed: u64 },
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Petersen,
}

fn num<T: std::str::FromStr>(what: &str, s: &str) -> Result<T, CliError> {
    s.parse()
        .map_err(|_| CliError::Input(format!("construction argument {what}: `{s}` is not a valid number")))
}

impl std::str::FromStr for Construction {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        let arity = |k: usize| {
            if parts.len() == k + 1 {
                Ok(())
            } else {
                Err(CliError::Input(format!("construction `{}` takes {k} argument(s): `{s}`", parts[0])))
            }
        };
        let c = match parts[0] {
            "circular" => arity(1).and_then(|_| Ok(Construction::Circular { n: num("n", parts[1])? }))?,
            "transitive" => arity(1).and_then(|_| Ok(Construction::Transitive { n: num("n", parts[1])? }))?,
            "tyomkyn" => arity(1).and_then(|_| Ok(Construction::Tyomkyn { k: num("k", parts[1])? }))?,
            "extremal-rho" => arity(1).and_then(|_| Ok(Construction::ExtremalRho { n: num("n", parts[1])? }))?,
            "complete" => arity(1).and_then(|_| Ok(Construction::Complete { n: num("n", parts[1])? }))?,
            "cycle" => arity(1).and_then(|_| Ok(Construction::Cycle { n: num("n", parts[1])? }))?,
            "path" => arity(1).and_then(|_| Ok(Construction::Path { n: num("n", parts[1])? }))?,
            "petersen" => arity(0).map(|_| Construction::Petersen)?,
            "clique-union" => {
                arity(2)?;
                let alphas = parts[1]
                    .split(',')
                    .map(|a| num("alpha", a))
                    .collect::<Result<Vec<f64>, _>>()?;
                Construction::CliqueUnion { alphas, n: num("n", parts[2])? }
            }
            "random-graph" => {
                arity(3)?;
                Construction::RandomGraph { n: num("n", parts[1])?, p: num("p", parts[2])?, seed: num("seed", parts[3])? }
            }
            "random-tournament" => {
                arity(2)?;
                Construction::RandomTournament { n: num("n", parts[1])?, seed: num("seed", parts[2])? }
            }
            other => return Err(CliError::Input(format!("unknown construction `{other}`"))),
        };
        Ok(c)
    }
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Construction::Circular { n } => write!(f, "circular:{n}"),
            Construction::Transitive { n } => write!(f, "transitive:{n}"),
            Construction::Tyomkyn { k } => write!(f, "tyomkyn:{k}"),
            Construction::ExtremalRho { n } => write!(f, "extremal-rho:{n}"),
            Construction::CliqueUnion { alphas, n } => {
                let a: Vec<String> = alphas.iter().map(|a| a.to_string()).collect();
                write!(f, "clique-union:{}:{n}", a.join(","))
            }
            Construction::RandomGraph { n, p, seed } => write!(f, "random-graph:{n}:{p}:{seed}"),
            Construction::RandomTournament { n, seed } => write!(f, "random-tournament:{n}:{seed}"),
            Construction::Complete { n } => write!(f, "complete:{n}"),
            Construction::Cycle { n } => write!(f, "cycle:{n}"),
            Construction::Path { n } => write!(f, "path:{n}"),
            Construction::Petersen => write!(f, "petersen"),
        }
    }
}

impl Construction {
    pub fn build(&self) -> Result<Object, CliError> {
        let obj = match self {
            Construction::Circular { n } => Object::Tournament(cons::circular_tournament(*n)?),
            Construction::Transitive { n } => Object::Tournament(cons::transitive_tournament(*n)?),
            Construction::Tyomkyn { k } => Object::Graph(cons::tyomkyn_graph(*k)?),
            Construction::ExtremalRho { n } => Object::Graph(cons::extremal_rho_graph(*n)?),
            Construction::CliqueUnion { alphas, n } => {
                Object::Graph(cons::clique_union(&CliqueSpec::from_alphas(alphas)?, *n)?)
            }
            Construction::RandomGraph { n, p, seed } => Object::Graph(cons::random_graph(*n, *p, *seed)?),
            Construction::RandomTournament { n, seed } => Object::Tournament(cons::random_tournament(*n, *seed)?),
            Construction::Complete { n } => Object::Graph(cons::complete_graph(*n)?),
            Construction::Cycle { n } => Object::Graph(cons::cycle_graph(*n)?),
            Construction::Path { n } => Object::Graph(cons::path_graph(*n)?),
            Construction::Petersen => Object::Graph(cons::petersen_graph()),
        };
        Ok(obj)
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Construction::RandomGraph { seed, .. } | Construction::RandomTournament { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}

/// The requested source, before loading.
#[derive(Debug, Clone)]
pub enum Source {
    File(PathBuf),
    Construct(Construction),
    SpecFile(PathBuf, Construction),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

impl Source {
    pub fn from_flags(
        input: Option<&PathBuf>,
        construct: Option<&str>,
        spec: Option<&PathBuf>,
    ) -> Result<Source, CliError> {
        match (input, construct, spec) {
            (Some(p), None, None) => Ok(Source::File(p.clone())),
            (None, Some(c), None) => Ok(Source::Construct(c.parse()?)),
            (None, None, Some(p)) => {
                let c = serde_json::from_str(&read(p)?)
                    .map_err(|e| CliError::Input(format!("{}: invalid construction spec: {e}", p.display())))?;
                Ok(Source::SpecFile(p.clone(), c))
            }
            (None, None, None) => Err(CliError::Input("one of --input, --construct or --spec is required".into())),
            _ => Err(CliError::Input("--input, --construct and --spec are mutually exclusive".into())),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Source::File(p) => format!("file:{}", p.display()),
            Source::Construct(c) => c.to_string(),
            Source::SpecFile(p, c) => format!("{c} (spec {})", p.display()),
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Source::File(_) => None,
            Source::Construct(c) | Source::SpecFile(_, c) => c.seed(),
        }
    }

    pub fn load(&self) -> Result<Loaded, CliError> {
        let object = match self {
            Source::File(p) => parse_object(&read(p)?).map_err(|e| match e {
                locprof_core::Error::Parse { line, msg } => {
                    CliError::Input(format!("{}:{line}: {msg}", p.display()))
                }
                e => e.into(),
            })?,
            Source::Construct(c) | Source::SpecFile(_, c) => c.build()?,
        };
        Ok(Loaded { description: self.describe(), seed: self.seed(), object })
    }
}

pub struct Loaded {
    pub description: String,
    pub seed: Option<u64>,
    pub object: Object,
}

impl Loaded {
    pub fn kind(&self) -> Kind {
        self.object.kind()
    }

    /// SHA-256 of the canonical text serialisation.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(write_object(&self.object).as_bytes());
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn input_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source": self.description,
            "kind": self.kind().as_str(),
            "n": self.object.order(),
            "sha256": self.digest(),
        })
    }

    pub fn expect_kind(&self, want: Option<Kind>) -> Result<(), CliError> {
        match want {
            Some(k) if k != self.kind() => Err(CliError::Input(format!(
                "--kind {} given but the input is a {}",
                k.as_str(),
                self.kind().as_str()
            ))),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in [
            "circular:11",
            "transitive:5",
            "tyomkyn:2",
            "extremal-rho:100",
            "clique-union:0.5,0.25:40",
            "random-graph:30:0.5:7",
            "random-tournament:30:7",
            "complete:4",
            "cycle:5",
            "path:5",
            "petersen",
        ] {
            let c: Construction = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(serde_json::from_str::<Construction>(&json).unwrap(), c);
        }
    }

    #[test]
    fn rejects_malformed() {
        for s in ["circular", "circular:x", "circular:1:2", "nope:3", "random-graph:10:0.5", "petersen:1"] {
            assert!(s.parse::<Construction>().is_err(), "{s}");
        }
    }

    #[test]
    fn spec_json_schema() {
        let c: Construction = serde_json::from_str(r#"{"family":"random-graph","n":10,"p":0.5,"seed":3}"#).unwrap();
        assert_eq!(c, Construction::RandomGraph { n: 10, p: 0.5, seed: 3 });
        assert!(serde_json::from_str::<Construction>(r#"{"family":"circular","n":5,"x":1}"#).is_err());
    }
}
