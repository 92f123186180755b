//! Brute-force reference implementations. Nothing here calls the matcher,
//! the closure engine or the solver of the crate under test.

#![allow(dead_code)]

use proptest::prelude::*;
use wsat_core::{Edge, Graph};

/// Every injective map `V(F) -> V(G)` as a vector, by plain recursion.
pub fn injections(f_n: usize, g_n: usize) -> Vec<Vec<usize>> {
    fn go(f_n: usize, g_n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == f_n {
            out.push(cur.clone());
            return;
        }
        for v in 0..g_n {
            if !cur.contains(&v) {
                cur.push(v);
                go(f_n, g_n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(f_n, g_n, &mut Vec::new(), &mut out);
    out
}

/// `f` with isolated vertices removed, relabelled in order.
pub fn strip(f: &Graph) -> Graph {
    let keep: Vec<usize> = (0..f.n()).filter(|&v| f.degree(v) > 0).collect();
    f.induced(&keep)
}

fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u(), e.v())).collect()
}

fn has(edges: &[(usize, usize)], a: usize, b: usize) -> bool {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    edges.contains(&(a, b))
}

pub fn brute_embeddings(g: &Graph, f: &Graph) -> u64 {
    let f = strip(f);
    let fe = edge_set(&f);
    let ge = edge_set(g);
    injections(f.n(), g.n())
        .into_iter()
        .filter(|m| fe.iter().all(|&(a, b)| has(&ge, m[a], m[b])))
        .count() as u64
}

pub fn brute_aut(f: &Graph) -> u64 {
    let fe = edge_set(f);
    injections(f.n(), f.n())
        .into_iter()
        .filter(|m| fe.iter().all(|&(a, b)| has(&fe, m[a], m[b])))
        .count() as u64
}

/// The distinct copies of `F` in `g`, each as a sorted list of host edges.
pub fn brute_copies(g: &Graph, f: &Graph) -> Vec<Vec<(usize, usize)>> {
    let f = strip(f);
    let fe = edge_set(&f);
    let ge = edge_set(g);
    let mut copies: Vec<Vec<(usize, usize)>> = injections(f.n(), g.n())
        .into_iter()
        .filter(|m| fe.iter().all(|&(a, b)| has(&ge, m[a], m[b])))
        .map(|m| {
            let mut img: Vec<(usize, usize)> = fe
                .iter()
                .map(|&(a, b)| (m[a].min(m[b]), m[a].max(m[b])))
                .collect();
            img.sort_unstable();
            img
        })
        .collect();
    copies.sort();
    copies.dedup();
    copies
}

pub fn brute_count_copies(g: &Graph, f: &Graph) -> u64 {
    brute_copies(g, f).len() as u64
}

/// Is there a copy of `F` in `g + e` that uses `e`?
pub fn brute_copy_through(g: &Graph, f: &Graph, e: Edge) -> bool {
    let mut with = g.clone();
    with.add_edge(e.u(), e.v());
    brute_copies(&with, f)
        .iter()
        .any(|c| c.contains(&(e.u(), e.v())))
}

/// Copies of `F` in `host`, as bitmasks over `host.edges()` indices.
pub struct CopyMasks {
    pub edges: Vec<(usize, usize)>,
    pub masks: Vec<u64>,
}

impl CopyMasks {
    pub fn new(host: &Graph, f: &Graph) -> Self {
        let edges = edge_set(host);
        assert!(edges.len() <= 64);
        let index = |x: &(usize, usize)| edges.iter().position(|y| y == x).unwrap();
        let masks = brute_copies(host, f)
            .iter()
            .map(|c| c.iter().fold(0u64, |acc, x| acc | (1 << index(x))))
            .collect();
        CopyMasks { edges, masks }
    }

    pub fn mask_of(&self, g: &Graph) -> u64 {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| g.has_edge(a, b))
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn full(&self) -> u64 {
        if self.edges.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    pub fn is_free(&self, h: u64) -> bool {
        self.masks.iter().all(|&c| c & !h != 0)
    }

    /// Full-rescan closure: add any edge that is the only missing edge of a
    /// copy, until nothing changes.
    pub fn closure(&self, mut h: u64) -> u64 {
        loop {
            let mut changed = false;
            for &c in &self.masks {
                let missing = c & !h;
                if missing.count_ones() == 1 {
                    h |= missing;
                    changed = true;
                }
            }
            if !changed {
                return h;
            }
        }
    }

    pub fn to_graph(&self, n: usize, h: u64) -> Graph {
        let picked = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| h >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, picked).unwrap()
    }
}

pub fn naive_closure(host: &Graph, f: &Graph, seed: &Graph) -> Graph {
    let cm = CopyMasks::new(host, f);
    cm.to_graph(host.n(), cm.closure(cm.mask_of(seed)))
}

/// `wsat(host, F)` by trying every edge subset in order of size.
pub fn naive_wsat(host: &Graph, f: &Graph) -> u64 {
    let cm = CopyMasks::new(host, f);
    let m = cm.edges.len() as u32;
    assert!(m <= 24, "oracle enumeration too large");
    let full = cm.full();
    let mut best = u32::MAX;
    for h in 0..=full {
        let size = h.count_ones();
        if size < best && cm.is_free(h) && cm.closure(h) == full {
            best = size;
        }
    }
    assert!(best <= m);
    best as u64
}

/// A random graph on exactly `n` vertices from an edge bitmask.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// A random graph with at least one edge, for use as a pattern.
pub fn arb_pattern(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(2, max_n).prop_filter("pattern needs an edge", |g| g.edge_count() > 0)
}

/// Small named patterns used across the suites.
pub fn small_patterns() -> Vec<(&'static str, Graph)> {
    use wsat_core::graph::build_named_graph;
    use wsat_core::GraphFamily::*;
    [
        ("K3", Complete { n: 3 }),
        ("K4", Complete { n: 4 }),
        ("K1,2", Star { t: 2 }),
        ("K1,3", Star { t: 3 }),
        ("P4", Path { n: 4 }),
        ("C4", Cycle { n: 4 }),
        ("2K2", Matching { k: 2 }),
    ]
    .into_iter()
    .map(|(name, fam)| (name, build_named_graph(fam).unwrap()))
    .collect()
}
