//! Canonical labeling, isomorphism testing, and induced-subgraph search.
//!
//! The canonical form is computed by iterated neighborhood refinement with
//! backtracking over the first non-singleton cell, keeping the
//! lexicographically smallest adjacency code over all refinement leaves.
//! Leaves with equal codes yield automorphisms; the discovered generators
//! prune the search and are reported for orbit computations elsewhere.
//! Everything is deterministic: no randomized hashing touches output order.

use std::collections::BTreeMap;

use crate::graph::{make_graph, path, Graph};
use crate::vset::VertexSet;

/// Byte encoding of the canonically relabeled adjacency matrix.
/// Two graphs have equal canonical forms exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u32,
    code: Vec<u8>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Upper-triangle bits of the canonical adjacency matrix, row-major,
    /// packed most-significant-bit first.
    pub fn code(&self) -> &[u8] {
        &self.code
    }
}

/// Canonical form together with the relabeling that produced it and the
/// automorphism generators discovered along the way.
#[derive(Clone, Debug)]
pub struct CanonicalOutcome {
    pub form: CanonicalForm,
    /// `to_canonical[v]` is the canonical position of original vertex `v`.
    pub to_canonical: Vec<usize>,
    /// Automorphisms of the input graph, as images on original labels.
    pub generators: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g).form
}

pub fn canonize(g: &Graph) -> CanonicalOutcome {
    let n = g.n();
    if n == 0 {
        return CanonicalOutcome {
            form: CanonicalForm { n: 0, code: Vec::new() },
            to_canonical: Vec::new(),
            generators: Vec::new(),
        };
    }
    let mut search = CanonSearch {
        g,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
        prefix: Vec::new(),
    };
    search.descend(vec![(0..n).collect()]);
    let (code, perm) = search.best.expect("at least one refinement leaf");
    CanonicalOutcome {
        form: CanonicalForm { n: n as u32, code },
        to_canonical: perm,
        generators: search.generators,
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<(Vec<u8>, Vec<usize>)>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl<'a> CanonSearch<'a> {
    /// Splits cells by neighbor counts against every cell until the
    /// partition is equitable. New sub-cells replace their parent ordered
    /// by signature, which keeps the traversal deterministic.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let masks: Vec<VertexSet> = cells
                .iter()
                .map(|c| c.iter().copied().collect())
                .collect();
            let mut split_at = None;
            for (ci, cell) in cells.iter().enumerate() {
                if cell.len() <= 1 {
                    continue;
                }
                let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let sig: Vec<u32> = masks
                        .iter()
                        .map(|m| self.g.neighbors(v).intersection(*m).len() as u32)
                        .collect();
                    groups.entry(sig).or_default().push(v);
                }
                if groups.len() > 1 {
                    split_at = Some((ci, groups.into_values().collect::<Vec<_>>()));
                    break;
                }
            }
            match split_at {
                Some((ci, parts)) => {
                    cells.splice(ci..=ci, parts);
                }
                None => break,
            }
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);
        let target = cells.iter().position(|c| c.len() > 1);
        let Some(ti) = target else {
            self.record_leaf(&cells);
            return;
        };
        let members = cells[ti].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if self.in_tried_orbit(v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = cells.clone();
            child[ti].retain(|&w| w != v);
            child.insert(ti, vec![v]);
            self.prefix.push(v);
            self.descend(child);
            self.prefix.pop();
        }
    }

    /// Orbit pruning: `v` is redundant if an already-found automorphism that
    /// fixes the individualized prefix pointwise maps it into `tried`.
    fn in_tried_orbit(&self, v: usize, tried: &[usize]) -> bool {
        if tried.is_empty() || self.generators.is_empty() {
            return false;
        }
        let relevant: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|s| self.prefix.iter().all(|&p| s[p] == p))
            .collect();
        if relevant.is_empty() {
            return false;
        }
        let mut orbit = VertexSet::singleton(v);
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            for s in &relevant {
                let u = s[w];
                if !orbit.contains(u) {
                    orbit.insert(u);
                    stack.push(u);
                }
            }
        }
        tried.iter().any(|&t| orbit.contains(t))
    }

    fn record_leaf(&mut self, cells: &[Vec<usize>]) {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let code = encode_adjacency(self.g, &perm);

        if let Some((first_code, first_perm)) = &self.first {
            if code == *first_code {
                let reference = first_perm.clone();
                self.push_automorphism(&reference, &perm);
            }
        } else {
            self.first = Some((code.clone(), perm.clone()));
        }

        match &self.best {
            None => self.best = Some((code, perm)),
            Some((best_code, best_perm)) => {
                if code < *best_code {
                    self.best = Some((code, perm));
                } else if code == *best_code {
                    let reference = best_perm.clone();
                    self.push_automorphism(&reference, &perm);
                }
            }
        }
    }

    /// Two relabelings with identical codes compose to an automorphism.
    fn push_automorphism(&mut self, a: &[usize], b: &[usize]) {
        let mut inv_a = vec![0usize; self.n];
        for (v, &pos) in a.iter().enumerate() {
            inv_a[pos] = v;
        }
        let sigma: Vec<usize> = (0..self.n).map(|v| inv_a[b[v]]).collect();
        if sigma.iter().enumerate().all(|(v, &w)| v == w) {
            return;
        }
        if !self.generators.contains(&sigma) {
            self.generators.push(sigma);
        }
    }
}

/// Upper-triangle adjacency bits of the graph relabeled by `perm`
/// (original -> canonical position), row-major, MSB-first per byte.
fn encode_adjacency(g: &Graph, perm: &[usize]) -> Vec<u8> {
    let n = g.n();
    let mut inv = vec![0usize; n];
    for (v, &pos) in perm.iter().enumerate() {
        inv[pos] = v;
    }
    let pairs = n * (n - 1) / 2;
    let mut bytes = vec![0u8; pairs.div_ceil(8)];
    let mut idx = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(inv[i], inv[j]) {
                bytes[idx >> 3] |= 1 << (7 - (idx & 7));
            }
            idx += 1;
        }
    }
    bytes
}

/// Orbit of the unordered pair `{a, b}` under the group generated by the
/// given permutations, as normalized `(min, max)` pairs.
pub fn pair_orbit(generators: &[Vec<usize>], a: usize, b: usize) -> Vec<(usize, usize)> {
    let norm = |x: usize, y: usize| if x < y { (x, y) } else { (y, x) };
    let start = norm(a, b);
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some((x, y)) = stack.pop() {
        for s in generators {
            let next = norm(s[x], s[y]);
            if !seen.contains(&next) {
                seen.push(next);
                stack.push(next);
            }
        }
    }
    seen
}

/// Searches for a vertex subset of `host` inducing a copy of `pattern`.
/// Pattern vertices are mapped in descending-degree order; candidates are
/// pruned on degree and on adjacency agreement with everything already
/// mapped (both edges and non-edges, since containment is induced).
pub fn induced_contains(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    if pattern.n() == 0 {
        return Some(Vec::new());
    }
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    order.sort_by(|&a, &b| pattern.degree(b).cmp(&pattern.degree(a)).then(a.cmp(&b)));
    let mut assigned = vec![usize::MAX; pattern.n()];
    let mut used = VertexSet::EMPTY;
    if map_next(host, pattern, &order, 0, &mut assigned, &mut used) {
        let mut witness: Vec<usize> = assigned;
        witness.sort_unstable();
        Some(witness)
    } else {
        None
    }
}

fn map_next(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    k: usize,
    assigned: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    if k == order.len() {
        return true;
    }
    let p = order[k];
    'candidates: for v in 0..host.n() {
        if used.contains(v) || host.degree(v) < pattern.degree(p) {
            continue;
        }
        for &q in &order[..k] {
            if pattern.has_edge(p, q) != host.has_edge(v, assigned[q]) {
                continue 'candidates;
            }
        }
        assigned[p] = v;
        used.insert(v);
        if map_next(host, pattern, order, k + 1, assigned, used) {
            return true;
        }
        used.remove(v);
        assigned[p] = usize::MAX;
    }
    false
}

/// Witnesses (or absence) for each of the small induced patterns whose
/// presence rules a graph out as a double-star cospectral mate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenReport {
    pub two_k2: Option<Vec<usize>>,
    pub r_graph: Option<Vec<usize>>,
    pub double_star_2_2: Option<Vec<usize>>,
    pub p4_plus_k1: Option<Vec<usize>>,
    pub p5: Option<Vec<usize>>,
}

impl ForbiddenReport {
    /// No witness for any of the five patterns.
    pub fn all_clear(&self) -> bool {
        self.two_k2.is_none()
            && self.r_graph.is_none()
            && self.double_star_2_2.is_none()
            && self.p4_plus_k1.is_none()
            && self.p5.is_none()
    }

    /// The three patterns that directly obstruct cospectrality with a
    /// double star (second eigenvalue at least 1, or too many positive
    /// eigenvalues).
    pub fn mate_obstructions_clear(&self) -> bool {
        self.two_k2.is_none() && self.r_graph.is_none() && self.double_star_2_2.is_none()
    }
}

pub fn forbidden_report(g: &Graph) -> ForbiddenReport {
    ForbiddenReport {
        two_k2: induced_contains(g, &pattern_two_k2()),
        r_graph: induced_contains(g, &crate::graph::graph_r()),
        double_star_2_2: induced_contains(g, &crate::graph::double_star(2, 2).unwrap()),
        p4_plus_k1: induced_contains(g, &pattern_p4_plus_k1()),
        p5: induced_contains(g, &path(5).unwrap()),
    }
}

fn pattern_two_k2() -> Graph {
    make_graph(4, &[(0, 1), (2, 3)]).unwrap()
}

fn pattern_p4_plus_k1() -> Graph {
    make_graph(5, &[(0, 1), (1, 2), (2, 3)]).unwrap()
}
