//! Clique search by plain backtracking over bitset candidate sets.

use super::{iter_bits, Graph};

fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn intersect_row(g: &Graph, set: &[u64], v: usize) -> Vec<u64> {
    set.iter().zip(g.row(v)).map(|(a, b)| a & b).collect()
}

fn vertex_set(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut set = vec![0u64; g.words()];
    for v in vertices {
        set[v / 64] |= 1 << (v % 64);
    }
    set
}

/// The lexicographically first clique of size `m`, if any.
pub fn find_clique(g: &Graph, m: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, m: usize, cand: &[u64], cur: &mut Vec<usize>) -> bool {
        if cur.len() == m {
            return true;
        }
        if cur.len() + popcount(cand) < m {
            return false;
        }
        let mut rest = cand.to_vec();
        for v in iter_bits(cand).collect::<Vec<_>>() {
            rest[v / 64] &= !(1 << (v % 64));
            cur.push(v);
            if go(g, m, &intersect_row(g, &rest, v), cur) {
                return true;
            }
            cur.pop();
            if cur.len() + popcount(&rest) < m {
                break;
            }
        }
        false
    }
    let all = vertex_set(g, 0..g.n());
    let mut cur = Vec::with_capacity(m);
    go(g, m, &all, &mut cur).then_some(cur)
}

/// A maximum clique inside `allowed`, preferring the lexicographically first
/// one among those of maximum size.
pub fn maximum_clique(g: &Graph, allowed: &[usize]) -> Vec<usize> {
    fn go(g: &Graph, cand: &[u64], cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        let mut rest = cand.to_vec();
        for v in iter_bits(cand).collect::<Vec<_>>() {
            if cur.len() + popcount(&rest) <= best.len() {
                return;
            }
            rest[v / 64] &= !(1 << (v % 64));
            cur.push(v);
            go(g, &intersect_row(g, &rest, v), cur, best);
            cur.pop();
        }
    }
    let mut best = Vec::new();
    let mut cur = Vec::new();
    go(
        g,
        &vertex_set(g, allowed.iter().copied()),
        &mut cur,
        &mut best,
    );
    best
}

/// Partitions the vertices into cliques by repeatedly removing a maximum
/// clique of what remains. Parts come out largest first.
pub fn greedy_clique_partition(g: &Graph) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..g.n()).collect();
    let mut parts = Vec::new();
    while !remaining.is_empty() {
        let part = maximum_clique(g, &remaining);
        remaining.retain(|v| !part.contains(v));
        parts.push(part);
    }
    parts
}
