//! Characteristic polynomials of adjacency matrices, three independent ways,
//! plus the closed forms for the double-star family.
//!
//! All three algorithms produce the monic `det(xI - A)` normalization, and
//! their mutual agreement is the crate's central correctness oracle:
//!
//! * [`charpoly_exact`]: coefficient recovery from traces (Faddeev-LeVerrier)
//!   over big integers, where every interior division is provably exact.
//!   Above 64 vertices it switches to a Hessenberg reduction modulo enough
//!   62-bit primes to reconstruct the coefficients exactly by CRT.
//! * [`charpoly_sachs`]: signed enumeration of elementary subgraphs
//!   (components are single edges or cycles).
//! * [`charpoly_schwenk`]: vertex-deletion recursion with memoization on
//!   canonical forms.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};
use crate::poly::IntPoly;
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharpolyError {
    SizeLimitExceeded { n: usize, limit: usize },
}

impl fmt::Display for CharpolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharpolyError::SizeLimitExceeded { n, limit } => {
                write!(f, "graph on {n} vertices exceeds the {limit}-vertex limit")
            }
        }
    }
}

impl std::error::Error for CharpolyError {}

/// Exact monic characteristic polynomial `det(xI - A)`.
pub fn charpoly_exact(g: &Graph) -> IntPoly {
    if g.n() <= 64 {
        charpoly_leverrier(g)
    } else {
        charpoly_crt(g)
    }
}

/// Faddeev-LeVerrier коэффициент recovery: `M_1 = I`,
/// `c_{n-k} = -tr(A M_k)/k`, `M_{k+1} = A M_k + c_{n-k} I`. The divisions
/// by `k` are exact for integer matrices. Matrix products use the 0/1
/// structure of adjacency rows, so each step is a sum of rows.
fn charpoly_leverrier(g: &Graph) -> IntPoly {
    let n = g.n();
    if n == 0 {
        return IntPoly::one();
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::one();
            row
        })
        .collect();
    for k in 1..=n {
        let am: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut row = vec![BigInt::zero(); n];
                for j in g.neighbors(i).iter() {
                    for (t, val) in m[j].iter().enumerate() {
                        if !val.is_zero() {
                            row[t] += val;
                        }
                    }
                }
                row
            })
            .collect();
        let mut tr = BigInt::zero();
        for (i, row) in am.iter().enumerate() {
            tr += &row[i];
        }
        let (c, rem) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "LeVerrier trace division must be exact");
        coeffs[n - k] = c.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    IntPoly::from_coeffs(coeffs)
}

// ---------------------------------------------------------------------------
// Modular route for graphs above the LeVerrier comfort zone.

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin; the fixed witness set decides primality for
/// every u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes_below_2_62(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) - 1;
    while primes.len() < count {
        if is_prime_u64(candidate) {
            primes.push(candidate);
        }
        candidate -= 2;
    }
    primes
}

/// A single large prime for cheap modular screening of candidate
/// polynomials before an exact comparison.
pub(crate) fn default_filter_prime() -> u64 {
    primes_below_2_62(1)[0]
}

/// Characteristic polynomial mod `p`: similarity reduction to upper
/// Hessenberg form, then the leading-principal-minor recurrence. Returns
/// monic coefficients ascending by power, length `n + 1`.
// index loops touch two rows of `a` at once; iterator forms would need
// split borrows for no gain
#[allow(clippy::needless_range_loop)]
pub(crate) fn charpoly_mod(g: &Graph, p: u64) -> Vec<u64> {
    let n = g.n();
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(g.has_edge(i, j))).collect())
        .collect();
    // Hessenberg reduction: row operation plus the matching inverse column
    // operation keeps the characteristic polynomial fixed
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&r| a[r][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            a.swap(piv, j + 1);
            for row in a.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = invmod(a[j + 1][j], p);
        for i in j + 2..n {
            if a[i][j] == 0 {
                continue;
            }
            let f = mulmod(a[i][j], inv, p);
            for t in 0..n {
                let sub = mulmod(f, a[j + 1][t], p);
                a[i][t] = submod(a[i][t], sub, p);
            }
            for t in 0..n {
                let add = mulmod(f, a[t][i], p);
                a[t][j + 1] = addmod(a[t][j + 1], add, p);
            }
        }
    }
    // p_k(x) = (x - h_kk) p_{k-1}(x)
    //          - sum_i h_{i,k} (prod_{j=i..k-1} h_{j+1,j}) p_{i-1}(x)
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let hkk = a[k - 1][k - 1] % p;
        let mut pk = vec![0u64; k + 1];
        for (d, &c) in polys[k - 1].iter().enumerate() {
            pk[d + 1] = addmod(pk[d + 1], c, p);
            pk[d] = submod(pk[d], mulmod(hkk, c, p), p);
        }
        let mut beta = 1u64;
        for i in (1..k).rev() {
            beta = mulmod(beta, a[i][i - 1], p);
            if beta == 0 {
                break;
            }
            let coef = mulmod(a[i - 1][k - 1], beta, p);
            if coef != 0 {
                for (d, &c) in polys[i - 1].iter().enumerate() {
                    pk[d] = submod(pk[d], mulmod(coef, c, p), p);
                }
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

/// Rigorous bound: `|c_{n-s}|` is at most the number of principal `s x s`
/// minors times the Hadamard bound for a 0/1 matrix of that size.
fn coefficient_bound(n: usize) -> BigInt {
    let mut best = BigInt::one();
    let mut binom = BigInt::one();
    for s in 1..=n {
        binom = &binom * BigInt::from(n - s + 1) / BigInt::from(s);
        let hadamard = num_traits::pow::pow(BigInt::from(s), s.div_ceil(2));
        let b = &binom * hadamard;
        if b > best {
            best = b;
        }
    }
    best
}

// `k` walks coefficient positions across all residue vectors at once
#[allow(clippy::needless_range_loop)]
fn charpoly_crt(g: &Graph) -> IntPoly {
    let n = g.n();
    let need = {
        let bound = coefficient_bound(n) * BigInt::from(2) + BigInt::one();
        let mut product = BigInt::one();
        let mut count = 0usize;
        while product <= bound {
            product *= BigInt::from((1u64 << 62) - 1);
            count += 1;
        }
        count + 1
    };
    let primes = primes_below_2_62(need);
    let residues: Vec<Vec<u64>> = primes.iter().map(|&p| charpoly_mod(g, p)).collect();
    let mut modulus = BigInt::one();
    for &p in &primes {
        modulus *= BigInt::from(p);
    }
    let half = &modulus / BigInt::from(2);
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut x = BigInt::zero();
        let mut m = BigInt::one();
        for (i, &p) in primes.iter().enumerate() {
            let pi = BigInt::from(p);
            let r = BigInt::from(residues[i][k]);
            let diff = (&r - &x).mod_floor(&pi);
            let m_mod = m.mod_floor(&pi).to_u64().expect("residue below 2^62");
            let m_inv = BigInt::from(invmod(m_mod, p));
            let t = (&diff * &m_inv).mod_floor(&pi);
            x += &m * &t;
            m *= &pi;
        }
        // symmetric range representative
        if x > half {
            x -= &modulus;
        }
        coeffs.push(x);
    }
    IntPoly::from_coeffs(coeffs)
}

// ---------------------------------------------------------------------------
// Sachs: signed count of elementary subgraphs.

/// Simple cycles through `root` whose other vertices all lie in `allowed`,
/// as vertex sets. Distinct cycle subgraphs on the same vertex set are
/// reported separately, once each.
fn cycles_through(g: &Graph, root: usize, allowed: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut stack_path = vec![root];
    let mut visited = VertexSet::singleton(root);
    cycle_dfs(g, root, root, allowed, &mut stack_path, &mut visited, &mut out);
    out
}

fn cycle_dfs(
    g: &Graph,
    root: usize,
    current: usize,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    visited: &mut VertexSet,
    out: &mut Vec<VertexSet>,
) {
    for w in g.neighbors(current).intersection(allowed).minus(*visited).iter() {
        path.push(w);
        visited.insert(w);
        // close the cycle; each undirected traversal direction would report
        // it twice, so require the first step to be smaller than the last
        if path.len() >= 3 && g.has_edge(w, root) && path[1] < w {
            out.push(path.iter().copied().collect());
        }
        cycle_dfs(g, root, w, allowed, path, visited, out);
        visited.remove(w);
        path.pop();
    }
}

const SACHS_LIMIT: usize = 24;

/// Characteristic polynomial assembled from elementary subgraphs: the
/// coefficient of `x^{n-k}` is the signed count over `k`-vertex subgraphs
/// whose components are single edges or cycles, with sign `(-1)^components`
/// and weight `2^cycles`.
pub fn charpoly_sachs(g: &Graph) -> Result<IntPoly, CharpolyError> {
    let n = g.n();
    if n > SACHS_LIMIT {
        return Err(CharpolyError::SizeLimitExceeded { n, limit: SACHS_LIMIT });
    }
    // cycles indexed by their minimum vertex
    let cycles: Vec<Vec<VertexSet>> = (0..n)
        .map(|r| {
            let above: VertexSet = (r + 1..n).collect();
            cycles_through(g, r, above)
        })
        .collect();
    let mut acc = vec![BigInt::zero(); n + 1];
    sachs_rec(g, &cycles, 0, VertexSet::EMPTY, 0, 0, &mut acc);
    let coeffs: Vec<BigInt> = (0..=n).map(|power| acc[n - power].clone()).collect();
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Walks vertices in ascending order; each elementary subgraph is built
/// exactly once because every component is chosen at its minimum vertex.
fn sachs_rec(
    g: &Graph,
    cycles: &[Vec<VertexSet>],
    v: usize,
    used: VertexSet,
    comps: u32,
    cyc: u32,
    acc: &mut [BigInt],
) {
    if v == g.n() {
        let term = BigInt::one() << cyc;
        if comps % 2 == 1 {
            acc[used.len()] -= term;
        } else {
            acc[used.len()] += term;
        }
        return;
    }
    if used.contains(v) {
        sachs_rec(g, cycles, v + 1, used, comps, cyc, acc);
        return;
    }
    // v stays out of the subgraph
    sachs_rec(g, cycles, v + 1, used, comps, cyc, acc);
    // v matched by an edge to a later unused neighbor
    for u in g.neighbors(v).minus(used).iter() {
        if u > v {
            sachs_rec(g, cycles, v + 1, used.with(v).with(u), comps + 1, cyc, acc);
        }
    }
    // v absorbed into a cycle whose minimum vertex is v
    for z in &cycles[v] {
        if !z.intersects(used) {
            sachs_rec(g, cycles, v + 1, used.union(*z), comps + 1, cyc + 1, acc);
        }
    }
}

// ---------------------------------------------------------------------------
// Schwenk recursion.

/// Pivot selection for the deletion recursion. `Fixed` applies to the top
/// call only; recursive calls fall back to `MaxDegree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    MaxDegree,
    MinDegree,
    FirstVertex,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchwenkTermKind {
    /// The `x * phi(G - v)` term.
    Vertex,
    /// A `- phi(G - v - u)` term for an edge `vu`.
    Edge,
    /// A `- 2 phi(G - V(Z))` term for a cycle `Z` through `v`.
    Cycle,
}

#[derive(Debug, Clone)]
pub struct SchwenkSubcall {
    pub deleted: VertexSet,
    pub term: SchwenkTermKind,
}

/// Record of the top-level expansion: the pivot, the deleted vertex set of
/// each term, and the number of memoized sub-results reused anywhere in
/// the recursion.
#[derive(Debug, Clone)]
pub struct SchwenkTrace {
    pub root_vertex: Option<usize>,
    pub subcalls: Vec<SchwenkSubcall>,
    pub memo_hits: u64,
}

pub fn charpoly_schwenk(g: &Graph, rule: PivotRule) -> IntPoly {
    charpoly_schwenk_traced(g, rule).0
}

pub fn charpoly_schwenk_traced(g: &Graph, rule: PivotRule) -> (IntPoly, SchwenkTrace) {
    let mut trace = SchwenkTrace {
        root_vertex: None,
        subcalls: Vec::new(),
        memo_hits: 0,
    };
    if g.edge_count() == 0 {
        return (IntPoly::monomial(BigInt::one(), g.n()), trace);
    }
    let v = select_pivot(g, rule);
    trace.root_vertex = Some(v);
    let mut memo: HashMap<CanonicalForm, IntPoly> = HashMap::new();

    let minus_v = VertexSet::singleton(v);
    let mut result = schwenk_rec(&g.delete_vertices(minus_v), &mut memo, &mut trace.memo_hits).shifted(1);
    trace.subcalls.push(SchwenkSubcall {
        deleted: minus_v,
        term: SchwenkTermKind::Vertex,
    });
    for u in g.neighbors(v).iter() {
        let del = VertexSet::from_iter([v, u]);
        result = &result - &schwenk_rec(&g.delete_vertices(del), &mut memo, &mut trace.memo_hits);
        trace.subcalls.push(SchwenkSubcall {
            deleted: del,
            term: SchwenkTermKind::Edge,
        });
    }
    let everyone = VertexSet::full(g.n()).without(v);
    for z in cycles_through(g, v, everyone) {
        let sub = schwenk_rec(&g.delete_vertices(z), &mut memo, &mut trace.memo_hits);
        result = &result - &sub.scale(&BigInt::from(2));
        trace.subcalls.push(SchwenkSubcall {
            deleted: z,
            term: SchwenkTermKind::Cycle,
        });
    }
    (result, trace)
}

fn select_pivot(g: &Graph, rule: PivotRule) -> usize {
    match rule {
        PivotRule::FirstVertex => 0,
        PivotRule::Fixed(v) => {
            assert!(v < g.n(), "pivot {v} out of range");
            v
        }
        PivotRule::MaxDegree => (0..g.n()).max_by_key(|&v| (g.degree(v), g.n() - v)).unwrap(),
        PivotRule::MinDegree => (0..g.n()).min_by_key(|&v| (g.degree(v), v)).unwrap(),
    }
}

fn schwenk_rec(g: &Graph, memo: &mut HashMap<CanonicalForm, IntPoly>, hits: &mut u64) -> IntPoly {
    if g.edge_count() == 0 {
        return IntPoly::monomial(BigInt::one(), g.n());
    }
    let key = canonical_form(g);
    if let Some(p) = memo.get(&key) {
        *hits += 1;
        return p.clone();
    }
    let v = select_pivot(g, PivotRule::MaxDegree);
    let mut result = schwenk_rec(&g.delete_vertices(VertexSet::singleton(v)), memo, hits).shifted(1);
    for u in g.neighbors(v).iter() {
        let del = VertexSet::from_iter([v, u]);
        result = &result - &schwenk_rec(&g.delete_vertices(del), memo, hits);
    }
    let everyone = VertexSet::full(g.n()).without(v);
    for z in cycles_through(g, v, everyone) {
        let sub = schwenk_rec(&g.delete_vertices(z), memo, hits);
        result = &result - &sub.scale(&BigInt::from(2));
    }
    memo.insert(key, result.clone());
    result
}

// ---------------------------------------------------------------------------
// Double-star closed forms.

/// `x^{a+b+2} - (a+b+1) x^{a+b} + ab x^{a+b-2}`; the degenerate cases with
/// fewer than two leaves total are computed directly from the graph.
pub fn double_star_charpoly(a: usize, b: usize) -> IntPoly {
    if a + b < 2 {
        let g = crate::graph::double_star(a, b).expect("small double star");
        return charpoly_exact(&g);
    }
    let s = a + b;
    IntPoly::from_terms(&[
        (1, s + 2),
        (-((s + 1) as i64), s),
        ((a * b) as i64, s - 2),
    ])
}

/// The two nonnegative extreme eigenvalues of the double star, by the
/// closed form. `lambda2` uses the rationalized expression
/// `sqrt(2ab / ((a+b+1) + sqrt((a-b)^2 + 2(a+b) + 1)))`, which avoids the
/// cancellation the textbook form suffers for large parameters.
pub fn double_star_extreme_eigs(a: usize, b: usize) -> (f64, f64) {
    assert!(a + b >= 1, "at least one leaf required");
    let (af, bf) = (a as f64, b as f64);
    let s = af + bf + 1.0;
    let disc = ((af - bf) * (af - bf) + 2.0 * (af + bf) + 1.0).sqrt();
    let lambda1 = ((s + disc) / 2.0).sqrt();
    let lambda2 = if a == 0 || b == 0 {
        0.0
    } else {
        (2.0 * af * bf / (s + disc)).sqrt()
    };
    (lambda1, lambda2)
}

/// Number of two-edge matchings whose four endpoints do not induce a
/// 4-cycle.
pub fn count_non_c4_two_matchings(g: &Graph) -> u64 {
    let edges = g.edges();
    let mut count = 0u64;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let cross = u8::from(g.has_edge(a, c))
                + u8::from(g.has_edge(a, d))
                + u8::from(g.has_edge(b, c))
                + u8::from(g.has_edge(b, d));
            let induces_c4 = cross == 2
                && ((g.has_edge(a, c) && g.has_edge(b, d)) || (g.has_edge(a, d) && g.has_edge(b, c)));
            if !induces_c4 {
                count += 1;
            }
        }
    }
    count
}

/// Numeric check of eigenvalue interlacing between `g` and the induced
/// subgraph obtained by deleting `removed`. The slack absorbs legitimate
/// ties between eigenvalues computed to 1e-9.
pub fn interlacing_check(g: &Graph, removed: VertexSet) -> bool {
    const SLACK: f64 = 1e-7;
    assert!(!removed.is_empty(), "removed set must be nonempty");
    assert!(removed.len() < g.n(), "removed set must be proper");
    let mut lam = crate::poly::numeric_roots(&charpoly_exact(g)).expect("nonzero charpoly");
    lam.reverse();
    let sub = g.delete_vertices(removed);
    let mut theta = crate::poly::numeric_roots(&charpoly_exact(&sub)).expect("nonzero charpoly");
    theta.reverse();
    let n = lam.len();
    let m = theta.len();
    (0..m).all(|i| lam[i] + SLACK >= theta[i] && theta[i] + SLACK >= lam[n - m + i])
}

/// True when the coefficient pattern matches a spectrum symmetric about
/// zero: for a degree-`n` polynomial, every power of opposite parity to `n`
/// has coefficient zero.
pub fn spectrum_symmetric(p: &IntPoly) -> bool {
    let Some(n) = p.degree() else {
        return true;
    };
    (0..n).all(|k| (n - k) % 2 == 0 || p.coeff(k).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_bipartite, construction_a, construction_b, cycle, double_star, graph_r,
        make_graph, path, star, Graph,
    };

    #[test]
    fn exact_small_cases() {
        assert_eq!(
            charpoly_exact(&Graph::empty(3).unwrap()),
            IntPoly::from_terms(&[(1, 3)])
        );
        assert_eq!(
            charpoly_exact(&make_graph(2, &[(0, 1)]).unwrap()),
            IntPoly::from_i64(&[-1, 0, 1])
        );
        assert_eq!(
            charpoly_exact(&double_star(1, 4).unwrap()),
            IntPoly::from_terms(&[(1, 7), (-6, 5), (4, 3)])
        );
        assert_eq!(charpoly_exact(&Graph::empty(0).unwrap()), IntPoly::one());
        // K3: x^3 - 3x - 2
        assert_eq!(
            charpoly_exact(&cycle(3).unwrap()),
            IntPoly::from_i64(&[-2, -3, 0, 1])
        );
    }

    #[test]
    fn sachs_small_cases() {
        // C4: two 2-matchings (+1 each) cancel against the 4-cycle (-2)
        assert_eq!(
            charpoly_sachs(&cycle(4).unwrap()).unwrap(),
            IntPoly::from_terms(&[(1, 4), (-4, 2)])
        );
        // P4: a single 2-matching gives the constant term
        assert_eq!(
            charpoly_sachs(&path(4).unwrap()).unwrap(),
            IntPoly::from_terms(&[(1, 4), (-3, 2), (1, 0)])
        );
        assert_eq!(
            charpoly_sachs(&cycle(3).unwrap()).unwrap(),
            IntPoly::from_i64(&[-2, -3, 0, 1])
        );
        let too_big = Graph::empty(25).unwrap();
        assert!(charpoly_sachs(&too_big).is_err());
    }

    #[test]
    fn schwenk_single_edge_both_pivots() {
        let k2 = make_graph(2, &[(0, 1)]).unwrap();
        for rule in [PivotRule::Fixed(0), PivotRule::Fixed(1)] {
            assert_eq!(charpoly_schwenk(&k2, rule), IntPoly::from_i64(&[-1, 0, 1]));
        }
    }

    #[test]
    fn schwenk_matches_construction_formulas() {
        for a in 2..=4 {
            let expected = IntPoly::from_terms(&[
                (1, a + 4),
                (-(2 * a as i64 + 2), a + 2),
                (2 * a as i64, a),
            ]);
            let g = construction_a(a).unwrap();
            assert_eq!(charpoly_schwenk(&g, PivotRule::MaxDegree), expected);
            assert_eq!(charpoly_exact(&g), expected);
        }
        for a in 1..=3 {
            let expected = IntPoly::from_terms(&[
                (1, a + 5),
                (-(4 * a as i64 + 2), a + 3),
                (4 * a as i64, a + 1),
            ]);
            let g = construction_b(a).unwrap();
            assert_eq!(charpoly_schwenk(&g, PivotRule::MaxDegree), expected);
            assert_eq!(charpoly_exact(&g), expected);
        }
    }

    #[test]
    fn schwenk_trace_shape() {
        // pivot at a pendant of the A-construction: one vertex term, one
        // edge term, no cycle terms
        let g = construction_a(2).unwrap();
        let (_, trace) = charpoly_schwenk_traced(&g, PivotRule::Fixed(2));
        assert_eq!(trace.root_vertex, Some(2));
        assert_eq!(trace.subcalls.len(), 2);
        assert_eq!(trace.subcalls[0].term, SchwenkTermKind::Vertex);
        assert_eq!(trace.subcalls[1].term, SchwenkTermKind::Edge);

        // pivot on the 4-cycle of R sees exactly one cycle
        let (_, trace) = charpoly_schwenk_traced(&graph_r(), PivotRule::Fixed(0));
        let cycles: Vec<_> = trace
            .subcalls
            .iter()
            .filter(|c| c.term == SchwenkTermKind::Cycle)
            .collect();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].deleted.len(), 4);
    }

    #[test]
    fn multiplicativity_on_unions() {
        let c4 = cycle(4).unwrap();
        let k1 = Graph::empty(1).unwrap();
        let u = c4.disjoint_union(&k1).unwrap();
        let product = &charpoly_exact(&c4) * &charpoly_exact(&k1);
        assert_eq!(charpoly_exact(&u), product);
        assert_eq!(product, IntPoly::from_terms(&[(1, 5), (-4, 3)]));
    }

    #[test]
    fn double_star_formula_examples() {
        assert_eq!(
            double_star_charpoly(1, 1),
            IntPoly::from_terms(&[(1, 4), (-3, 2), (1, 0)])
        );
        assert_eq!(
            double_star_charpoly(3, 4),
            IntPoly::from_terms(&[(1, 9), (-8, 7), (12, 5)])
        );
        // star case: x^{n+2} - (n+1) x^n
        assert_eq!(
            double_star_charpoly(0, 4),
            IntPoly::from_terms(&[(1, 6), (-5, 4)])
        );
        // degenerate sizes route through the direct computation
        assert_eq!(double_star_charpoly(0, 0), IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(
            double_star_charpoly(0, 1),
            IntPoly::from_terms(&[(1, 3), (-2, 1)])
        );
        for (a, b) in [(1usize, 4usize), (2, 2), (0, 5)] {
            assert_eq!(
                double_star_charpoly(a, b),
                charpoly_exact(&double_star(a, b).unwrap())
            );
        }
    }

    #[test]
    fn extreme_eigs_examples() {
        let (l1, l2) = double_star_extreme_eigs(1, 1);
        assert!((l1 - 1.618_033_988_749_895).abs() < 1e-12);
        assert!((l2 - 0.618_033_988_749_895).abs() < 1e-12);

        let (l1, l2) = double_star_extreme_eigs(0, 3);
        assert!((l1 - 2.0).abs() < 1e-12);
        assert_eq!(l2, 0.0);

        // both are roots of the closed-form polynomial
        for (a, b) in [(1usize, 4usize), (2, 5), (3, 3)] {
            let p = double_star_charpoly(a, b);
            let roots = crate::poly::numeric_roots(&p).unwrap();
            let (l1, l2) = double_star_extreme_eigs(a, b);
            assert!(roots.iter().any(|r| (r - l1).abs() < 1e-9));
            assert!(roots.iter().any(|r| (r - l2).abs() < 1e-9));
        }
    }

    #[test]
    fn lambda2_increasing_and_below_one() {
        let mut prev = 0.0;
        for n in 1..=1_000_000usize {
            let (_, l2) = double_star_extreme_eigs(1, n);
            assert!(l2 < 1.0, "lambda2 must stay below 1 (n = {n})");
            assert!(l2 > prev, "lambda2 must increase (n = {n})");
            prev = l2;
        }
    }

    #[test]
    fn two_matching_counts() {
        assert_eq!(count_non_c4_two_matchings(&cycle(4).unwrap()), 0);
        assert_eq!(count_non_c4_two_matchings(&path(4).unwrap()), 1);
        for n in 1..=8 {
            let g = double_star(1, n).unwrap();
            assert_eq!(count_non_c4_two_matchings(&g), n as u64);
            // matches the low-order charpoly coefficient
            let p = charpoly_exact(&g);
            assert_eq!(p.coeff(n + 3 - 4), BigInt::from(n as i64));
        }
    }

    #[test]
    fn interlacing_examples() {
        // deleting a star leaf: (+-sqrt3, 0, 0) interlaces (+-2, 0, 0, 0)
        let k14 = star(4).unwrap();
        assert!(interlacing_check(&k14, VertexSet::singleton(4)));

        // a single surviving vertex always interlaces
        let r = graph_r();
        let all_but_one = VertexSet::full(6).without(3);
        assert!(interlacing_check(&r, all_but_one));

        assert!(interlacing_check(
            &complete_bipartite(2, 3).unwrap(),
            VertexSet::from_iter([0, 4])
        ));
    }

    #[test]
    fn spectral_symmetry_flag() {
        assert!(spectrum_symmetric(&charpoly_exact(&path(4).unwrap())));
        assert!(spectrum_symmetric(&charpoly_exact(&cycle(6).unwrap())));
        assert!(!spectrum_symmetric(&charpoly_exact(&cycle(5).unwrap())));
        assert!(spectrum_symmetric(&IntPoly::one()));
    }

    #[test]
    fn r_graph_numeric_eigenvalues() {
        let roots = crate::poly::numeric_roots(&charpoly_exact(&graph_r())).unwrap();
        let expected = [-2.247, -0.802, -0.555, 0.555, 0.802, 2.247];
        assert_eq!(roots.len(), 6);
        for (got, want) in roots.iter().zip(expected) {
            assert!((got - want).abs() < 1e-3, "{got} vs {want}");
        }
    }

    #[test]
    fn modular_route_agrees_with_leverrier() {
        for g in [
            cycle(7).unwrap(),
            double_star(3, 5).unwrap(),
            construction_b(3).unwrap(),
            complete_bipartite(4, 5).unwrap(),
            graph_r(),
        ] {
            assert_eq!(charpoly_crt(&g), charpoly_leverrier(&g));
        }
    }

    #[test]
    fn large_construction_charpolys_via_modular_route() {
        // 104 and 105 vertices: exercised through the dispatch in
        // charpoly_exact
        let a100 = construction_a(100).unwrap();
        assert_eq!(
            charpoly_exact(&a100),
            IntPoly::from_terms(&[(1, 104), (-202, 102), (200, 100)])
        );
        let b100 = construction_b(100).unwrap();
        assert_eq!(
            charpoly_exact(&b100),
            IntPoly::from_terms(&[(1, 105), (-402, 103), (400, 101)])
        );
    }
}
