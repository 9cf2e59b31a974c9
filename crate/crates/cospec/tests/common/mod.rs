//! Shared helpers for the integration suites: a small deterministic RNG,
//! random graph sampling, and permutation-based brute-force oracles that
//! stay independent of the canonical-labeling code they check.
//!
//! Each test binary uses its own subset of these.
#![allow(dead_code)]

use cospec::graph::{make_graph, Graph};

/// SplitMix64: tiny, seedable, identical across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Uniform-ish random graph with exactly `m` distinct edges.
pub fn random_graph_with_edges(rng: &mut Rng, n: usize, m: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut placed = 0;
    while placed < m {
        let u = rng.below(n);
        let v = rng.below(n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
            placed += 1;
        }
    }
    g
}

/// Random graph with each edge present independently w.p. roughly `num/den`.
pub fn random_graph_density(rng: &mut Rng, n: usize, num: u64, den: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_u64() % den < num {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(&mut cur, n, &mut out);
    out
}

fn heap_permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(cur, k - 1, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// Does `sigma` map `g` onto `h` edge-for-edge?
pub fn maps_onto(g: &Graph, h: &Graph, sigma: &[usize]) -> bool {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != h.has_edge(sigma[u], sigma[v]) {
                return false;
            }
        }
    }
    true
}

/// Brute-force isomorphism by exhausting all vertex bijections.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degree_sequence();
    let mut dh = h.degree_sequence();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    permutations(g.n()).iter().any(|s| maps_onto(g, h, s))
}

/// Full automorphism group by brute force.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    permutations(g.n())
        .into_iter()
        .filter(|s| maps_onto(g, g, s))
        .collect()
}

/// Decodes a bitmask over the upper triangle (lexicographic pair order)
/// into a labeled graph.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << k) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    make_graph(n, &edges).unwrap()
}
