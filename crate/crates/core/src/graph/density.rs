use num_rational::Ratio;

use super::Graph;
use crate::error::{Error, Result};

/// Exact rational in lowest terms.
pub type Rational = Ratio<i64>;

/// Serde adapter writing a [`Rational`] as `"a/b"` (or `"a"` when integral).
pub mod rational_text {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|_| D::Error::custom(format!("bad rational {text:?}")))
    }
}

/// Largest graph `density_m` will enumerate subsets of.
pub const DENSITY_MAX_VERTICES: usize = 24;

/// `m(G)`: the maximum of `|E(H)| / |V(H)|` over subgraphs `H` of `G`.
///
/// Only induced subgraphs need to be considered, so this enumerates every
/// non-empty vertex subset.
pub fn density_m(g: &Graph) -> Result<Rational> {
    if g.edge_count() == 0 {
        return Err(Error::UndefinedDensity);
    }
    if g.n() > DENSITY_MAX_VERTICES {
        return Err(Error::Parameter(format!(
            "density enumeration supports at most {DENSITY_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    let n = g.n();
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let mut best = Rational::new(0, 1);
    for mask in 1u64..(1u64 << n) {
        let mut twice_edges = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            twice_edges += (rows[v] & mask).count_ones();
        }
        let ratio = Rational::new(twice_edges as i64 / 2, mask.count_ones() as i64);
        if ratio > best {
            best = ratio;
        }
    }
    Ok(best)
}

/// `mu(G) = max{m(G), (|E|-1)/(|V|-2)}`, or `m(G)` when `|V| = 2`.
pub fn density_mu(g: &Graph) -> Result<Rational> {
    let m = density_m(g)?;
    if g.n() == 2 {
        return Ok(m);
    }
    let alt = Rational::new(g.edge_count() as i64 - 1, g.n() as i64 - 2);
    Ok(m.max(alt))
}
