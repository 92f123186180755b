use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{rational_text, Graph, Rational};
use crate::pattern::Pattern;
use crate::solver::{wsat_exact, SearchBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiEntry {
    pub n: usize,
    pub wsat: u64,
    /// `wsat(n, F) - (δ-1)n`.
    pub phi: i64,
}

/// The sequence `φ(n) = wsat(n, F) - (δ-1)n` on `n = s-1, .., n_max`.
///
/// `φ` is non-increasing and bounded below, so it is eventually constant.
/// `d_f` and `k` are read off the computed prefix: `d_f` is the last value
/// seen and `k` the first `n` attaining it. Both are estimates; a longer scan
/// can only lower `d_f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityProfile {
    pub delta: usize,
    pub d_f: i64,
    pub k: usize,
    pub phi_table: Vec<PhiEntry>,
    pub n_max: usize,
    /// The scan stopped early on the search budget.
    pub partial: bool,
    /// `1 / (2k + 3)`: the edge probability `n^{-1/(2k+3)} log n` above which
    /// `wsat(G(n,p), F) = wsat(n, F)` is expected.
    #[serde(with = "rational_text")]
    pub threshold_exponent: Rational,
}

/// Computes `φ(n)` with the exact solver on `K_n` for `n = s-1 ..= n_max`.
///
/// Fails with [`Error::Invariant`] if the computed `φ` ever increases.
pub fn stability_profile(
    pattern: &Pattern,
    n_max: usize,
    budget: SearchBudget,
) -> Result<StabilityProfile> {
    let start = pattern.s() - 1;
    if n_max < start {
        return Err(Error::Range(format!(
            "n_max = {n_max} is below s - 1 = {start}"
        )));
    }
    let slope = pattern.delta() as i64 - 1;
    let mut table: Vec<PhiEntry> = Vec::new();
    let mut partial = false;
    for n in start..=n_max {
        let r = wsat_exact(&Graph::complete(n), pattern, budget)?;
        let Some(wsat) = r.exact else {
            partial = true;
            break;
        };
        let phi = wsat as i64 - slope * n as i64;
        if let Some(prev) = table.last() {
            if phi > prev.phi {
                return Err(Error::Invariant(format!(
                    "φ increased from {} at n = {} to {phi} at n = {n}",
                    prev.phi, prev.n
                )));
            }
        }
        table.push(PhiEntry { n, wsat, phi });
    }
    let last = table
        .last()
        .ok_or_else(|| Error::Range("search budget too small to compute any φ(n)".into()))?;
    let d_f = last.phi;
    let k = table
        .iter()
        .find(|e| e.phi == d_f)
        .map(|e| e.n)
        .expect("last entry attains d_f");
    Ok(StabilityProfile {
        delta: pattern.delta(),
        d_f,
        k,
        phi_table: table,
        n_max,
        partial,
        threshold_exponent: Rational::new(1, 2 * k as i64 + 3),
    })
}
