//! Dense integer polynomials with exact arithmetic.
//!
//! Every spectral decision in this crate is made here, without floating
//! point: coefficients are arbitrary-precision integers, real-root counts
//! come from Sturm sequences over exact rationals, and the floating-point
//! root lists are produced by bisection on Sturm-isolated intervals for
//! display only.
//!
//! Characteristic polynomials are stored in the monic `det(xI - A)`
//! normalization. `coeffs[k]` is the coefficient of `x^k`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Integer polynomial, coefficients ascending by power, no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine-integer coefficients, ascending.
    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sum of `c * x^k` terms.
    pub fn from_terms(terms: &[(i64, usize)]) -> IntPoly {
        let deg = terms.iter().map(|&(_, k)| k).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for &(c, k) in terms {
            coeffs[k] += BigInt::from(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shifted(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k + i] = c.clone();
        }
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content. Signs are preserved.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    fn negated_if_negative_lead(mut self) -> IntPoly {
        if self.leading().is_some_and(|l| l.is_negative()) {
            for c in &mut self.coeffs {
                *c = -std::mem::take(c);
            }
        }
        self
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact sign of `p(t)`: -1, 0, or +1.
    pub fn sign_at(&self, t: &BigRational) -> i8 {
        let v = self.eval_rational(t);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    fn sign_at_pos_infinity(&self) -> i8 {
        match self.leading() {
            None => 0,
            Some(l) if l.is_positive() => 1,
            _ => -1,
        }
    }

    /// Quotient if `d` divides `self` exactly over the integers.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate().take(dd) {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(k) {
                c += d;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

/// Remainder of `|lc(b)|^(deg a - deg b + 1) * a` divided by `b`; every
/// interior division is exact over the integers, and the positive multiplier
/// keeps all point-evaluation signs aligned with the rational remainder.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let da = a.degree().expect("pseudo_rem: zero dividend");
    let db = b.degree().expect("pseudo_rem: zero divisor");
    debug_assert!(da >= db);
    let lead = b.leading().unwrap().abs();
    let mut rem = a.scale(&num_traits::pow::pow(lead.clone(), da - db + 1)).coeffs;
    for k in (0..=da - db).rev() {
        let top = std::mem::take(&mut rem[k + db]);
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(b.leading().unwrap());
        debug_assert!(r.is_zero(), "pseudo-remainder division must be exact");
        for (i, c) in b.coeffs.iter().enumerate().take(db) {
            rem[k + i] -= &q * c;
        }
    }
    rem.truncate(db);
    IntPoly::from_coeffs(rem)
}

/// Primitive gcd with positive leading coefficient.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive_part().negated_if_negative_lead();
    }
    if b.is_zero() {
        return a.primitive_part().negated_if_negative_lead();
    }
    let (mut p, mut q) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    while !q.is_zero() {
        // constant divisor of a primitive polynomial: gcd is 1
        if q.degree() == Some(0) {
            return IntPoly::one();
        }
        let r = pseudo_rem(&p, &q).primitive_part();
        p = q;
        q = r;
    }
    p.negated_if_negative_lead()
}

/// `p / gcd(p, p')` with content removed: same distinct roots, all simple.
/// Powers of `x` are stripped up front so sparse high-degree polynomials
/// stay cheap.
pub fn square_free_part(p: &IntPoly) -> Result<IntPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let q = IntPoly::from_coeffs(p.coeffs[zeros..].to_vec()).primitive_part();
    let core = if q.degree() == Some(0) {
        IntPoly::one()
    } else {
        let g = poly_gcd(&q, &q.derivative());
        q.exact_div(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    };
    let with_zero_root = if zeros > 0 { core.shifted(1) } else { core };
    Ok(with_zero_root.negated_if_negative_lead())
}

/// Yun square-free decomposition: returns pairwise-coprime square-free
/// factors with their multiplicities, ascending by multiplicity. The
/// leading-constant unit is dropped, which leaves roots unchanged.
pub fn square_free_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let a = p.primitive_part().negated_if_negative_lead();
    if a.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let da = a.derivative();
    let g = poly_gcd(&a, &da);
    if g.degree() == Some(0) {
        return Ok(vec![(a, 1)]);
    }
    let mut b = a.exact_div(&g).expect("gcd divides").primitive_part();
    let c = da.exact_div(&g).expect("gcd divides derivative");
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut mult = 1usize;
    while b.degree().unwrap_or(0) > 0 {
        let f = poly_gcd(&b, &d);
        if f.degree().unwrap_or(0) > 0 {
            out.push((f.clone(), mult));
        }
        b = b.exact_div(&f).expect("factor divides b").primitive_part();
        let c_next = d.exact_div(&f).expect("factor divides d");
        d = &c_next - &b.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Sturm chain of a square-free polynomial. Each element is content-stripped
/// with its sign preserved, which leaves sign variations intact.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone()];
    let d = p.derivative().primitive_part();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let m = chain.len();
        let (prev, last) = (&chain[m - 2], &chain[m - 1]);
        if last.degree() == Some(0) || prev.degree() < last.degree() {
            break;
        }
        let r = pseudo_rem(prev, last);
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive_part());
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut prev: i8 = 0;
    for s in signs {
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

fn variations_at(chain: &[IntPoly], t: &BigRational) -> usize {
    variations(chain.iter().map(|p| p.sign_at(t)))
}

fn variations_at_pos_infinity(chain: &[IntPoly]) -> usize {
    variations(chain.iter().map(|p| p.sign_at_pos_infinity()))
}

/// Number of distinct roots in the half-open interval `(lo, hi]`.
fn roots_in(chain: &[IntPoly], lo: &BigRational, hi: &BigRational) -> usize {
    variations_at(chain, lo) - variations_at(chain, hi)
}

/// Exact number of distinct real roots of `p` strictly greater than `t`.
pub fn count_distinct_roots_above(p: &IntPoly, t: &BigRational) -> Result<usize, PolyError> {
    let sf = square_free_part(p)?;
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&sf);
    Ok(variations_at(&chain, t) - variations_at_pos_infinity(&chain))
}

/// Strict upper bound on the absolute value of every root (Cauchy bound
/// plus one).
fn root_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p
        .coeffs
        .iter()
        .take(p.coeffs.len() - 1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    BigRational::new(max, lead) + BigRational::from_integer(BigInt::from(2))
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("isolation intervals stay in f64 range")
}

/// Isolates and refines every real root of a square-free polynomial,
/// returning them in ascending order as exact rationals within `eps`.
fn refined_roots(f: &IntPoly, eps: &BigRational) -> Vec<BigRational> {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        // exact rational root of a linear factor
        return vec![BigRational::new(-f.coeff(0), f.coeff(1))];
    }
    let chain = sturm_chain(f);
    let bound = root_bound(f);
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        let count = roots_in(&chain, &lo, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && f.sign_at(&lo) * f.sign_at(&hi) < 0 {
            roots.push(bisect_root(f, lo, hi, eps));
            continue;
        }
        let mid = (&lo + &hi) * &half;
        if f.sign_at(&mid) == 0 {
            // exact root at the midpoint; carve out a gap around it
            let mut w = (&hi - &lo) * &half * &half;
            loop {
                let (a, b) = (&mid - &w, &mid + &w);
                if f.sign_at(&a) != 0 && f.sign_at(&b) != 0 && roots_in(&chain, &a, &b) == 1 {
                    stack.push((lo.clone(), a));
                    stack.push((b, hi.clone()));
                    break;
                }
                w *= &half;
            }
            roots.push(mid);
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    roots.sort();
    roots
}

fn bisect_root(f: &IntPoly, mut lo: BigRational, mut hi: BigRational, eps: &BigRational) -> BigRational {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let lo_sign = f.sign_at(&lo);
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) * &half;
        let s = f.sign_at(&mid);
        if s == 0 {
            return mid;
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (&lo + &hi) * &half
}

/// All real roots with multiplicity, ascending, accurate well past 1e-9.
/// Display-quality output; decisions should use the exact counters.
pub fn numeric_roots(p: &IntPoly) -> Result<Vec<f64>, PolyError> {
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
    let mut tagged: Vec<(BigRational, usize)> = Vec::new();
    for (factor, mult) in square_free_decomposition(p)? {
        for root in refined_roots(&factor, &eps) {
            tagged.push((root, mult));
        }
    }
    tagged.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = Vec::new();
    for (root, mult) in tagged {
        let v = ratio_to_f64(&root);
        for _ in 0..mult {
            out.push(v);
        }
    }
    Ok(out)
}

impl fmt::Display for IntPoly {
    /// Renders as descending powers with explicit signs, e.g.
    /// `x^7 - 6*x^5 + 4*x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
