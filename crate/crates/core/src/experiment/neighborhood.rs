use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use crate::graph::{find_clique, Graph, Seed};
use crate::pattern::Pattern;

/// Common-neighbourhood statistics over `k`-subsets of a graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NeighborhoodReport {
    pub k: usize,
    /// `p^k n / 2`.
    pub threshold: f64,
    /// Size of the clique looked for inside each common neighbourhood (`s - 2`).
    pub clique_size: usize,
    pub subsets_examined: u64,
    /// Every `k`-subset was examined (otherwise a uniform sample of them).
    pub exhaustive: bool,
    /// Fraction of subsets with at least `threshold` common neighbours.
    pub fraction_large: f64,
    /// Fraction of subsets whose common neighbourhood holds a `K_{s-2}`.
    pub fraction_with_clique: f64,
    pub min_common: Option<usize>,
    pub max_common: Option<usize>,
    pub mean_common: Option<f64>,
}

fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Advances `c` to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Examines `k`-subsets `T` of `V(G)`: how often `|N(T)| >= p^k n / 2` and how
/// often `N(T)` contains a clique of size `s - 2`.
///
/// All `C(n, k)` subsets are examined when there are at most `sample_cap` of
/// them, otherwise `sample_cap` distinct uniform random subsets drawn with
/// `seed`.
pub fn neighborhood_property_check(
    g: &Graph,
    pattern: &Pattern,
    k: usize,
    p: f64,
    sample_cap: usize,
    seed: Seed,
) -> NeighborhoodReport {
    let n = g.n();
    let threshold = p.powi(k as i32) * n as f64 / 2.0;
    let clique_size = pattern.s().saturating_sub(2);

    let subsets: Vec<Vec<usize>> = match binomial(n, k) {
        Some(0) => Vec::new(),
        Some(total) if total <= sample_cap as u64 => {
            let mut out = Vec::with_capacity(total as usize);
            let mut c: Vec<usize> = (0..k).collect();
            loop {
                out.push(c.clone());
                if !next_subset(&mut c, n) {
                    break;
                }
            }
            out
        }
        _ => {
            let mut rng = seed.rng();
            let mut seen = std::collections::BTreeSet::new();
            while seen.len() < sample_cap {
                let mut c = sample(&mut rng, n, k).into_vec();
                c.sort_unstable();
                seen.insert(c);
            }
            seen.into_iter().collect()
        }
    };
    let exhaustive = binomial(n, k).is_some_and(|t| t <= sample_cap as u64);

    let mut large = 0u64;
    let mut with_clique = 0u64;
    let mut sizes = Vec::with_capacity(subsets.len());
    for t in &subsets {
        let common = g.common_neighbors(t);
        if common.len() as f64 >= threshold {
            large += 1;
        }
        if find_clique(&g.induced(&common), clique_size).is_some() {
            with_clique += 1;
        }
        sizes.push(common.len());
    }
    let examined = subsets.len() as u64;
    let frac = |x: u64| {
        if examined == 0 {
            0.0
        } else {
            x as f64 / examined as f64
        }
    };
    NeighborhoodReport {
        k,
        threshold,
        clique_size,
        subsets_examined: examined,
        exhaustive,
        fraction_large: frac(large),
        fraction_with_clique: frac(with_clique),
        min_common: sizes.iter().copied().min(),
        max_common: sizes.iter().copied().max(),
        mean_common: (!sizes.is_empty())
            .then(|| sizes.iter().sum::<usize>() as f64 / sizes.len() as f64),
    }
}
