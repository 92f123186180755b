//! Closed-form weak saturation numbers of complete hosts, the generic upper
//! bounds, explicit saturator constructions and stability profiles.

mod constructions;
mod profile;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_named_graph, Graph, GraphFamily};
use crate::pattern::Pattern;

pub use constructions::{
    construct_clique_partition_saturator, construct_complete_host_saturator,
    construct_random_host_saturator, Saturator,
};
pub use profile::{stability_profile, PhiEntry, StabilityProfile};

/// Pattern families with a known `wsat(n, F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FormulaFamily {
    /// `K_s`.
    Ks { s: u64 },
    /// `K_{t,t}`.
    Ktt { t: u64 },
    /// `K_{s,t}` with `t > s`; only bounds are known.
    Kst { s: u64, t: u64 },
    /// `K_{2,t}`.
    K2t { t: u64 },
    /// The star `K_{1,t}`.
    K1t { t: u64 },
}

impl FormulaFamily {
    /// The pattern graph itself, labelled as in [`GraphFamily`].
    pub fn pattern_graph(self) -> Result<Graph> {
        let to = |x: u64| x as usize;
        let fam = match self {
            FormulaFamily::Ks { s } => GraphFamily::Complete { n: to(s) },
            FormulaFamily::Ktt { t } => GraphFamily::CompleteBipartite { a: to(t), b: to(t) },
            FormulaFamily::Kst { s, t } => GraphFamily::CompleteBipartite { a: to(s), b: to(t) },
            FormulaFamily::K2t { t } => GraphFamily::CompleteBipartite { a: 2, b: to(t) },
            FormulaFamily::K1t { t } => GraphFamily::Star { t: to(t) },
        };
        build_named_graph(fam)
    }
}

impl std::fmt::Display for FormulaFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FormulaFamily::Ks { s } => write!(f, "K_{s}"),
            FormulaFamily::Ktt { t } => write!(f, "K_{{{t},{t}}}"),
            FormulaFamily::Kst { s, t } => write!(f, "K_{{{s},{t}}}"),
            FormulaFamily::K2t { t } => write!(f, "K_{{2,{t}}}"),
            FormulaFamily::K1t { t } => write!(f, "K_{{1,{t}}}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaQuery {
    #[serde(flatten)]
    pub family: FormulaFamily,
    pub n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormulaValue {
    Exact(i64),
    Interval { lower: i64, upper: i64 },
}

impl FormulaValue {
    pub fn contains(self, x: i64) -> bool {
        match self {
            FormulaValue::Exact(v) => v == x,
            FormulaValue::Interval { lower, upper } => lower <= x && x <= upper,
        }
    }
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Range(what.to_string()))
    }
}

/// Known values of `wsat(n, F)`:
///
/// * `K_s`: `(s-2)n - C(s-1, 2)` for `n >= s >= 2`.
/// * `K_{t,t}`: `(t-1)n - C(t-1, 2)` for `n >= 4t - 4` (and `n >= 2t`).
/// * `K_{1,t}`: `C(t, 2)` for `n >= t + 1`.
/// * `K_{2,t}`, `t >= 3`, `n >= t + 2`: `n - 1 + C(t, 2)` if `t` is even and
///   `n <= 2t - 2`, otherwise `n - 2 + C(t, 2)`.
/// * `K_{s,t}`, `t > s`: the interval
///   `[(s-1)(n-t+1) + C(t, 2), (s-1)(n-s) + C(t, 2)]`, which is only known for
///   large `n`; it is returned for `n >= max(s + t, 3t - 3)`.
pub fn closed_form_wsat(q: FormulaQuery) -> Result<FormulaValue> {
    let n = q.n as i64;
    let value = match q.family {
        FormulaFamily::Ks { s } => {
            let s = s as i64;
            require(s >= 2, "K_s needs s >= 2")?;
            require(n >= s, "K_s needs n >= s")?;
            FormulaValue::Exact((s - 2) * n - binom2(s - 1))
        }
        FormulaFamily::Ktt { t } => {
            let t = t as i64;
            require(t >= 1, "K_{t,t} needs t >= 1")?;
            require(n >= 2 * t, "K_{t,t} needs n >= 2t")?;
            require(n >= 4 * t - 4, "K_{t,t} needs n >= 4t - 4")?;
            FormulaValue::Exact((t - 1) * n - binom2(t - 1))
        }
        FormulaFamily::K1t { t } => {
            let t = t as i64;
            require(t >= 1, "K_{1,t} needs t >= 1")?;
            require(n > t, "K_{1,t} needs n >= t + 1")?;
            FormulaValue::Exact(binom2(t))
        }
        FormulaFamily::K2t { t } => {
            let t = t as i64;
            require(t >= 3, "K_{2,t} needs t >= 3")?;
            require(n >= t + 2, "K_{2,t} needs n >= t + 2")?;
            if t % 2 == 0 && n <= 2 * t - 2 {
                FormulaValue::Exact(n - 1 + binom2(t))
            } else {
                FormulaValue::Exact(n - 2 + binom2(t))
            }
        }
        FormulaFamily::Kst { s, t } => {
            let (s, t) = (s as i64, t as i64);
            require(s >= 1, "K_{s,t} needs s >= 1")?;
            require(t > s, "K_{s,t} bounds need t > s")?;
            require(n >= s + t, "K_{s,t} needs n >= s + t")?;
            require(
                n >= 3 * t - 3,
                "K_{s,t} bounds are only asserted for n >= 3t - 3",
            )?;
            FormulaValue::Interval {
                lower: (s - 1) * (n - t + 1) + binom2(t),
                upper: (s - 1) * (n - s) + binom2(t),
            }
        }
    };
    Ok(value)
}

/// `(δ-1)(n-m) + wsat(m, F)` for `n >= m >= s - 1`, given `wsat(m, F)`.
pub fn upper_bound_from_clique(n: u64, pattern: &Pattern, m: u64, wsat_m: u64) -> Result<i64> {
    let s = pattern.s() as u64;
    require(m + 1 >= s, "need m >= s - 1")?;
    require(n >= m, "need n >= m")?;
    Ok((pattern.delta() as i64 - 1) * (n - m) as i64 + wsat_m as i64)
}

/// `(δ-1)n + (s-1)(s-2δ)/2` for `n >= s - 1`.
pub fn upper_bound_general(n: u64, pattern: &Pattern) -> Result<i64> {
    let s = pattern.s() as i64;
    let delta = pattern.delta() as i64;
    require(n as i64 >= s - 1, "need n >= s - 1")?;
    Ok((delta - 1) * n as i64 + (s - 1) * (s - 2 * delta) / 2)
}

/// Dispatches to [`upper_bound_from_clique`] when a solved clique size is
/// supplied, else to [`upper_bound_general`].
pub fn generic_upper_bounds(n: u64, pattern: &Pattern, clique: Option<(u64, u64)>) -> Result<i64> {
    match clique {
        Some((m, wsat_m)) => upper_bound_from_clique(n, pattern, m, wsat_m),
        None => upper_bound_general(n, pattern),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(family: FormulaFamily, n: u64) -> Result<FormulaValue> {
        closed_form_wsat(FormulaQuery { family, n })
    }

    fn pat(f: FormulaFamily) -> Pattern {
        Pattern::normalize(&f.pattern_graph().unwrap()).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            eval(FormulaFamily::Ks { s: 3 }, 5),
            Ok(FormulaValue::Exact(4))
        );
        assert_eq!(
            eval(FormulaFamily::K2t { t: 4 }, 6),
            Ok(FormulaValue::Exact(11))
        );
        assert_eq!(
            eval(FormulaFamily::K2t { t: 3 }, 9),
            Ok(FormulaValue::Exact(10))
        );
        assert_eq!(
            eval(FormulaFamily::Ktt { t: 2 }, 6),
            Ok(FormulaValue::Exact(6))
        );
        assert_eq!(
            eval(FormulaFamily::K1t { t: 3 }, 5),
            Ok(FormulaValue::Exact(3))
        );
        assert_eq!(
            eval(FormulaFamily::Kst { s: 2, t: 5 }, 20),
            Ok(FormulaValue::Interval {
                lower: 26,
                upper: 28
            })
        );
    }

    #[test]
    fn family_names() {
        assert_eq!(FormulaFamily::Ks { s: 4 }.to_string(), "K_4");
        assert_eq!(FormulaFamily::K2t { t: 4 }.to_string(), "K_{2,4}");
        assert_eq!(FormulaFamily::Kst { s: 2, t: 5 }.to_string(), "K_{2,5}");
    }

    #[test]
    fn k2t_branches() {
        // t even, n just above 2t - 2 drops to the "otherwise" branch.
        assert_eq!(
            eval(FormulaFamily::K2t { t: 4 }, 7),
            Ok(FormulaValue::Exact(11))
        );
        assert_eq!(
            eval(FormulaFamily::K2t { t: 5 }, 7),
            Ok(FormulaValue::Exact(15))
        );
    }

    #[test]
    fn range_errors_name_the_constraint() {
        let err = eval(FormulaFamily::Ks { s: 5 }, 4).unwrap_err();
        assert_eq!(err, Error::Range("K_s needs n >= s".into()));
        assert!(eval(FormulaFamily::Ktt { t: 3 }, 7).is_err());
        assert!(eval(FormulaFamily::K1t { t: 3 }, 3).is_err());
        assert!(eval(FormulaFamily::K2t { t: 2 }, 6).is_err());
        assert!(eval(FormulaFamily::K2t { t: 4 }, 5).is_err());
        assert!(eval(FormulaFamily::Kst { s: 3, t: 3 }, 20).is_err());
        assert!(eval(FormulaFamily::Kst { s: 2, t: 4 }, 6).is_err());
    }

    #[test]
    fn generic_bounds() {
        let k3 = pat(FormulaFamily::Ks { s: 3 });
        assert_eq!(upper_bound_general(6, &k3), Ok(5));
        let star = pat(FormulaFamily::K1t { t: 3 });
        assert_eq!(upper_bound_from_clique(10, &star, 4, 3), Ok(3));
        let k23 = pat(FormulaFamily::Kst { s: 2, t: 3 });
        assert_eq!(upper_bound_general(9, &k23), Ok(11));
        assert_eq!(generic_upper_bounds(9, &k23, None), Ok(11));
        assert!(upper_bound_from_clique(3, &star, 2, 1).is_err());
        assert!(upper_bound_from_clique(3, &star, 4, 3).is_err());
        assert!(upper_bound_general(2, &k23).is_err());
    }

    #[test]
    fn star_general_bound_is_exact() {
        for t in 1..6u64 {
            let p = pat(FormulaFamily::K1t { t });
            let exact = match eval(FormulaFamily::K1t { t }, t + 5).unwrap() {
                FormulaValue::Exact(v) => v,
                _ => unreachable!(),
            };
            assert_eq!(upper_bound_general(t + 5, &p).unwrap(), exact);
        }
    }
}
