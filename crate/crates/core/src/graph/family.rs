use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with a fixed labelling.
///
/// | family                    | vertices          | labelling                                   |
/// |---------------------------|-------------------|---------------------------------------------|
/// | `Complete(n)`             | `n`               | every pair                                  |
/// | `CompleteBipartite(a, b)` | `a + b`           | parts `0..a` and `a..a+b`                   |
/// | `Star(t)`                 | `t + 1`           | centre `0`, leaves `1..=t`                  |
/// | `Path(n)`                 | `n`               | edges `{i, i+1}`                            |
/// | `Cycle(n)`                | `n`               | path edges plus `{n-1, 0}`                  |
/// | `Empty(n)`                | `n`               | no edges                                    |
/// | `Matching(k)`             | `2k`              | edges `{2i, 2i+1}`                          |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphFamily {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Star { t: usize },
    Path { n: usize },
    Cycle { n: usize },
    Empty { n: usize },
    Matching { k: usize },
}

impl GraphFamily {
    fn check(self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Parameter(format!("{self}: {msg}")));
        match self {
            GraphFamily::Complete { n } | GraphFamily::Path { n } | GraphFamily::Empty { n }
                if n == 0 =>
            {
                bad("needs at least one vertex")
            }
            GraphFamily::CompleteBipartite { a, b } if a == 0 || b == 0 => {
                bad("both parts must be non-empty")
            }
            GraphFamily::Star { t: 0 } => bad("needs at least one leaf"),
            GraphFamily::Cycle { n } if n < 3 => bad("needs at least three vertices"),
            GraphFamily::Matching { k: 0 } => bad("needs at least one edge"),
            _ => Ok(()),
        }
    }
}

/// Builds the canonical labelled member of a family.
pub fn build_named_graph(fam: GraphFamily) -> Result<Graph> {
    fam.check()?;
    let g = match fam {
        GraphFamily::Complete { n } => Graph::complete(n),
        GraphFamily::CompleteBipartite { a, b } => {
            let mut g = Graph::empty(a + b);
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v);
                }
            }
            g
        }
        GraphFamily::Star { t } => {
            let mut g = Graph::empty(t + 1);
            for leaf in 1..=t {
                g.add_edge(0, leaf);
            }
            g
        }
        GraphFamily::Path { n } => {
            let mut g = Graph::empty(n);
            for i in 1..n {
                g.add_edge(i - 1, i);
            }
            g
        }
        GraphFamily::Cycle { n } => {
            let mut g = build_named_graph(GraphFamily::Path { n })?;
            g.add_edge(n - 1, 0);
            g
        }
        GraphFamily::Empty { n } => Graph::empty(n),
        GraphFamily::Matching { k } => {
            let mut g = Graph::empty(2 * k);
            for i in 0..k {
                g.add_edge(2 * i, 2 * i + 1);
            }
            g
        }
    };
    Ok(g)
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Complete { n } => write!(f, "complete:{n}"),
            GraphFamily::CompleteBipartite { a, b } => write!(f, "cbip:{a},{b}"),
            GraphFamily::Star { t } => write!(f, "star:{t}"),
            GraphFamily::Path { n } => write!(f, "path:{n}"),
            GraphFamily::Cycle { n } => write!(f, "cycle:{n}"),
            GraphFamily::Empty { n } => write!(f, "empty:{n}"),
            GraphFamily::Matching { k } => write!(f, "matching:{k}"),
        }
    }
}

/// Parses the `name:params` shorthand, e.g. `complete:5`, `cbip:2,3`.
impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parameter(format!("expected name:params, got {s:?}")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parameter(format!("bad number {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Parameter(format!(
                    "{name} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let fam = match name {
            "complete" | "k" => {
                arity(1)?;
                GraphFamily::Complete { n: nums[0] }
            }
            "cbip" | "kst" => {
                arity(2)?;
                GraphFamily::CompleteBipartite {
                    a: nums[0],
                    b: nums[1],
                }
            }
            "star" => {
                arity(1)?;
                GraphFamily::Star { t: nums[0] }
            }
            "path" => {
                arity(1)?;
                GraphFamily::Path { n: nums[0] }
            }
            "cycle" => {
                arity(1)?;
                GraphFamily::Cycle { n: nums[0] }
            }
            "empty" => {
                arity(1)?;
                GraphFamily::Empty { n: nums[0] }
            }
            "matching" => {
                arity(1)?;
                GraphFamily::Matching { k: nums[0] }
            }
            other => return Err(Error::Parameter(format!("unknown graph family {other:?}"))),
        };
        fam.check()?;
        Ok(fam)
    }
}
