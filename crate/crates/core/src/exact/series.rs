//! Power series evaluated on nilpotent matrices, where they terminate.

use num_traits::{One, Zero};

use super::{factorial, pochhammer, rat, Mat, Rational, Ring};
use crate::error::{Error, Result};

/// `sum_k coeff(k) N^k`, stopping at the first vanishing power of `N`.
///
/// Fails with [`Error::NotNilpotent`] when `N^dim` is nonzero.
pub fn nilpotent_series<C: Ring>(n: &Mat<C>, coeff: impl Fn(usize) -> Rational) -> Result<Mat<C>> {
    if !n.is_square() {
        return Err(Error::NotSquare(n.rows(), n.cols()));
    }
    let dim = n.rows();
    let mut acc = Mat::identity(dim).scale(&C::from_rational(&coeff(0)));
    let mut power = Mat::identity(dim);
    for k in 1..=dim.max(1) {
        power = power.checked_mul(n)?;
        if power.is_zero() {
            return Ok(acc);
        }
        let c = coeff(k);
        if !c.is_zero() {
            acc = acc.checked_add(&power.scale(&C::from_rational(&c)))?;
        }
    }
    Err(Error::NotNilpotent(dim.max(1)))
}

/// `1/k!` (exponential).
pub fn exp(k: usize) -> Rational {
    Rational::from_integer(factorial(k as u64)).recip()
}

/// `(-1)^(k+1)/k` for `k >= 1`, zero at `k = 0` (`log(1+N)`).
pub fn log1p(k: usize) -> Rational {
    if k == 0 {
        return Rational::zero();
    }
    let sign = if k % 2 == 1 { 1 } else { -1 };
    rat(sign, k as i64)
}

/// `(-1)^k` (`(1+N)^{-1}`).
pub fn inv1p(k: usize) -> Rational {
    if k.is_multiple_of(2) { Rational::one() } else { -Rational::one() }
}

/// `(-1)^k (1/2)_k / k!` (`(1+N)^{-1/2}`).
pub fn inv_sqrt1p(k: usize) -> Rational {
    let c = pochhammer(&rat(1, 2), k as u64) / Rational::from_integer(factorial(k as u64));
    if k.is_multiple_of(2) { c } else { -c }
}

/// `1/(2k)!`: `cosh(A)` as a series in `A^2`.
pub fn cosh_in_square(k: usize) -> Rational {
    Rational::from_integer(factorial(2 * k as u64)).recip()
}

/// `1/(2k+1)!`: `sinh(A)/A` as a series in `A^2`.
pub fn sinhc_in_square(k: usize) -> Rational {
    Rational::from_integer(factorial(2 * k as u64 + 1)).recip()
}

/// Geometric weights `c^k`.
pub fn geometric(c: Rational) -> impl Fn(usize) -> Rational {
    move |k| {
        let mut acc = Rational::one();
        for _ in 0..k {
            acc *= &c;
        }
        acc
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{HPoly, HMat};

    fn big(n: i64) -> Rational {
        rat(n, 1)
    }

    fn shift(n: usize) -> Mat<Rational> {
        Mat::from_fn(n, n, |r, c| if r == c + 1 { Rational::one() } else { Rational::zero() })
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let z = Mat::<Rational>::zeros(3, 3);
        assert!(nilpotent_series(&z, exp).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_nilpotent() {
        let i = Mat::<Rational>::identity(2);
        assert_eq!(nilpotent_series(&i, exp), Err(Error::NotNilpotent(2)));
        let j = Mat::from_rows(vec![vec![big(0), big(1)], vec![big(1), big(0)]]).unwrap();
        assert!(nilpotent_series(&j, exp).is_err());
    }

    #[test]
    fn inverse_series_on_spin_three_halves() {
        // (1+N) * (1+N)^{-1} = 1 on a 4-dimensional space
        let n = shift(4).scale(&rat(3, 2));
        let inv = nilpotent_series(&n, inv1p).unwrap();
        let one_plus = &Mat::identity(4) + &n;
        assert!((&one_plus * &inv).is_identity());
    }

    #[test]
    fn exp_log_roundtrip() {
        let n: HMat = shift(5).map(|q| HPoly::constant(q.clone())).scale(&HPoly::h());
        let e = nilpotent_series(&n, exp).unwrap();
        let back = nilpotent_series(&(&e - &Mat::identity(5)), log1p).unwrap();
        assert_eq!(back, n);
    }

    #[test]
    fn inverse_sqrt_squares_to_inverse() {
        let n = shift(6).scale(&rat(-2, 3));
        let r = nilpotent_series(&n, inv_sqrt1p).unwrap();
        let prod = &(&r * &r) * &(&Mat::identity(6) + &n);
        assert!(prod.is_identity());
    }

    #[test]
    fn coefficient_values() {
        assert_eq!(inv_sqrt1p(0), rat(1, 1));
        assert_eq!(inv_sqrt1p(1), rat(-1, 2));
        assert_eq!(inv_sqrt1p(2), rat(3, 8));
        assert_eq!(log1p(3), rat(1, 3));
        assert_eq!(sinhc_in_square(1), rat(1, 6));
        assert_eq!(geometric(rat(-1, 4))(2), rat(1, 16));
    }
}
