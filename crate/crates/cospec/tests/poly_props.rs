//! Property tests for the exact polynomial layer.

use cospec::poly::{count_distinct_roots_above, square_free_part, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..=max_deg + 1).prop_map(|cs| IntPoly::from_i64(&cs))
}

proptest! {
    #[test]
    fn addition_commutes(p in poly_strategy(20), q in poly_strategy(20)) {
        prop_assert_eq!(&p + &q, &q + &p);
    }

    #[test]
    fn multiplication_associates(
        p in poly_strategy(12),
        q in poly_strategy(12),
        r in poly_strategy(12),
    ) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes(
        p in poly_strategy(12),
        q in poly_strategy(12),
        r in poly_strategy(12),
    ) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn subtraction_inverts_addition(p in poly_strategy(20), q in poly_strategy(20)) {
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    /// Root counts are invariant under positive scaling of the polynomial.
    #[test]
    fn sturm_count_scale_invariant(
        p in poly_strategy(10).prop_filter("nonzero", |p| !p.is_zero()),
        scale in 1i64..=50,
        t in -5i64..=5,
    ) {
        let threshold = BigRational::from_integer(BigInt::from(t));
        let scaled = p.scale(&BigInt::from(scale));
        prop_assert_eq!(
            count_distinct_roots_above(&p, &threshold).unwrap(),
            count_distinct_roots_above(&scaled, &threshold).unwrap()
        );
    }

    /// The square-free part has the same sign pattern of roots: squaring a
    /// polynomial must not change any strict root count.
    #[test]
    fn squaring_preserves_distinct_root_counts(
        p in poly_strategy(8).prop_filter("nonzero", |p| !p.is_zero()),
        t in -5i64..=5,
    ) {
        let threshold = BigRational::from_integer(BigInt::from(t));
        let squared = &p * &p;
        prop_assert_eq!(
            count_distinct_roots_above(&p, &threshold).unwrap(),
            count_distinct_roots_above(&squared, &threshold).unwrap()
        );
    }

    /// square_free_part never keeps a repeated factor.
    #[test]
    fn square_free_part_is_square_free(
        p in poly_strategy(8).prop_filter("nonconstant", |p| p.degree().unwrap_or(0) >= 1),
    ) {
        let sf = square_free_part(&p).unwrap();
        let g = cospec::poly::poly_gcd(&sf, &sf.derivative());
        prop_assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn shift_matches_monomial_multiplication(p in poly_strategy(15), k in 0usize..6) {
        let xk = IntPoly::monomial(BigInt::from(1), k);
        prop_assert_eq!(p.shifted(k), &p * &xk);
    }
}
