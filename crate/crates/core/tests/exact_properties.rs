//! Algebraic laws of the exact arithmetic layer.

use jordan_cgc::exact::{nilpotent_series, rat, series, HPoly, HalfInt, Mat, Rational, Ring, SqrtRat};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..15).prop_map(|(n, d)| rat(n, d))
}

fn sqrt_rat() -> impl Strategy<Value = SqrtRat> {
    prop::collection::vec((1u32..30, rational()), 0..4).prop_map(|terms| {
        terms.into_iter().fold(SqrtRat::zero(), |acc, (r, q)| acc + SqrtRat::term(q, BigUint::from(r)))
    })
}

fn poly() -> impl Strategy<Value = HPoly<Rational>> {
    prop::collection::vec(rational(), 0..5).prop_map(HPoly::from_coeffs)
}

fn strictly_lower(n: usize) -> impl Strategy<Value = Mat<Rational>> {
    prop::collection::vec(rational(), n * n)
        .prop_map(move |v| Mat::from_fn(n, n, |r, c| if r > c { v[r * n + c].clone() } else { Rational::zero() }))
}

fn square(n: usize) -> impl Strategy<Value = Mat<Rational>> {
    prop::collection::vec(rational(), n * n).prop_map(move |v| Mat::from_fn(n, n, |r, c| v[r * n + c].clone()))
}

proptest! {
    #[test]
    fn sqrt_rat_ring_laws(a in sqrt_rat(), b in sqrt_rat(), c in sqrt_rat()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).is_zero());
        prop_assert_eq!(a.times(&SqrtRat::one()), a.clone());
    }

    #[test]
    fn sqrt_rat_canonical_form(q in rational(), r in 1u32..40, s in 1u32..6) {
        // q √(r s²) and (q s) √r are the same number and must be stored identically
        let big = SqrtRat::term(q.clone(), BigUint::from(r * s * s));
        let small = SqrtRat::term(q * rat(s as i64, 1), BigUint::from(r));
        prop_assert_eq!(&big, &small);
        prop_assert_eq!(big.normalized(), big.normalized().normalized());
    }

    #[test]
    fn sqrt_rat_single_term_inverse(q in rational(), r in 1u32..40) {
        prop_assume!(!q.is_zero());
        let x = SqrtRat::term(q, BigUint::from(r));
        prop_assert!(x.times(&x.inverse().unwrap()).is_one());
    }

    #[test]
    fn sqrt_of_square(q in rational()) {
        let x = SqrtRat::sqrt(&(q.clone() * q.clone()));
        prop_assert_eq!(x, SqrtRat::from_rational(if q < Rational::zero() { -q } else { q }));
    }

    #[test]
    fn poly_evaluation_is_a_homomorphism(p in poly(), q in poly(), x in rational()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        prop_assert_eq!(p.reflect().eval(&x), p.eval(&-x.clone()));
        prop_assert_eq!(p.reflect().reflect(), p);
    }

    #[test]
    fn poly_division_by_h(p in poly(), k in 0usize..4) {
        let shifted = &p * &HPoly::monomial(Rational::one(), k);
        prop_assert_eq!(shifted.div_h_pow(k).unwrap(), p);
    }

    #[test]
    fn kron_mixed_product(a in square(2), b in square(3), c in square(2), d in square(3)) {
        let lhs = &a.kron(&b) * &c.kron(&d);
        let rhs = (&a * &c).kron(&(&b * &d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exponential_of_nilpotent(n in strictly_lower(4)) {
        let e = nilpotent_series(&n, series::exp).unwrap();
        let e_neg = nilpotent_series(&n.map(Ring::negated), series::exp).unwrap();
        prop_assert!((&e * &e_neg).is_identity());
        let back = nilpotent_series(&(&e - &Mat::identity(4)), series::log1p).unwrap();
        prop_assert_eq!(back, n);
    }

    #[test]
    fn inverse_square_root_squares_to_inverse(n in strictly_lower(4)) {
        let s = nilpotent_series(&n, series::inv_sqrt1p).unwrap();
        let one_plus = &Mat::identity(4) + &n;
        prop_assert!((&(&s * &s) * &one_plus).is_identity());
    }

    #[test]
    fn half_int_arithmetic(a in -40i64..40, b in -40i64..40) {
        let (x, y) = (HalfInt::from_twice(a), HalfInt::from_twice(b));
        prop_assert_eq!((x + y).twice(), a + b);
        prop_assert_eq!(x - y + y, x);
        prop_assert_eq!(x.int_diff(y).is_some(), (a - b) % 2 == 0);
        prop_assert_eq!(x.to_rational() + y.to_rational(), (x + y).to_rational());
    }
}
