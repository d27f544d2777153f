//! On-disk formats. All are JSON with unknown fields rejected.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context as _};
use monodromy_core::{Direction, Factorization, GroupContext, Move};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationFile {
    pub context: String,
    pub factors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_product: Option<String>,
}

/// A replayable equivalence proof: applying `moves` to `source` gives `target`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub context: String,
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub moves: Vec<MoveRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "lowercase", deny_unknown_fields)]
pub enum MoveRecord {
    Hurwitz { index: usize, direction: Direction },
    Conjugate { by: String },
    Rotate { direction: Direction },
}

impl MoveRecord {
    pub fn from_move<C: GroupContext>(ctx: &C, mv: &Move<C::Element>) -> Self {
        match mv {
            Move::Hurwitz { index, direction } => MoveRecord::Hurwitz {
                index: *index,
                direction: *direction,
            },
            Move::Conjugate { by } => MoveRecord::Conjugate { by: ctx.format(by) },
            Move::Rotate { direction } => MoveRecord::Rotate { direction: *direction },
        }
    }

    pub fn to_move<C: GroupContext>(&self, ctx: &C) -> anyhow::Result<Move<C::Element>> {
        Ok(match self {
            MoveRecord::Hurwitz { index, direction } => Move::Hurwitz {
                index: *index,
                direction: *direction,
            },
            MoveRecord::Conjugate { by } => Move::Conjugate {
                by: ctx.parse(by).with_context(|| format!("conjugator `{by}`"))?,
            },
            MoveRecord::Rotate { direction } => Move::Rotate { direction: *direction },
        })
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveRecord::Hurwitz { index, direction } => write!(f, "hurwitz {index} {}", dir(*direction)),
            MoveRecord::Conjugate { by } => write!(f, "conjugate by {by}"),
            MoveRecord::Rotate { direction } => write!(f, "rotate {}", dir(*direction)),
        }
    }
}

fn dir(d: Direction) -> &'static str {
    match d {
        Direction::Forward => "forward",
        Direction::Inverse => "inverse",
    }
}

/// `symmetric:<n>`, `braid:<n>`, `mcg:<g>` or `free:<n>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContextSpec {
    Symmetric(usize),
    Braid(usize),
    Mcg(usize),
    Free(usize),
}

impl FromStr for ContextSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| anyhow!("context `{s}` should look like `braid:3`"))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| anyhow!("context `{s}`: `{n}` is not a non-negative integer"))?;
        let spec = match kind.trim() {
            "symmetric" => ContextSpec::Symmetric(n),
            "braid" => ContextSpec::Braid(n),
            "mcg" => ContextSpec::Mcg(n),
            "free" => ContextSpec::Free(n),
            other => bail!("unknown context kind `{other}` (expected symmetric, braid, mcg or free)"),
        };
        match spec {
            ContextSpec::Symmetric(0) | ContextSpec::Braid(0) | ContextSpec::Mcg(0) => {
                bail!("context `{s}` must have a positive size")
            }
            _ => Ok(spec),
        }
    }
}

impl fmt::Display for ContextSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            ContextSpec::Braid(n) => write!(f, "braid:{n}"),
            ContextSpec::Mcg(g) => write!(f, "mcg:{g}"),
            ContextSpec::Free(n) => write!(f, "free:{n}"),
        }
    }
}

/// Runs `$body` with `$ctx` bound to the concrete context of `$spec`.
macro_rules! with_context {
    ($spec:expr, |$ctx:ident| $body:expr) => {
        match $spec {
            $crate::files::ContextSpec::Symmetric(n) => {
                let $ctx = monodromy_core::factorization::SymmetricGroup::new(n);
                $body
            }
            $crate::files::ContextSpec::Braid(n) => {
                let $ctx = monodromy_core::factorization::BraidGroup::new(n);
                $body
            }
            $crate::files::ContextSpec::Mcg(g) => {
                let $ctx = monodromy_core::factorization::McgGroup::new(g);
                $body
            }
            $crate::files::ContextSpec::Free(n) => {
                let $ctx = monodromy_core::factorization::FreeGroup::new(n);
                $body
            }
        }
    };
}
pub(crate) use with_context;

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

/// Parses every factor, naming the failing one.
pub fn parse_factors<C: GroupContext>(ctx: &C, words: &[String]) -> anyhow::Result<Factorization<C>> {
    let factors = words
        .iter()
        .enumerate()
        .map(|(i, w)| ctx.parse(w).with_context(|| format!("factors[{i}] `{w}`")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Factorization::new(ctx.clone(), factors))
}
