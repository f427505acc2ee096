use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        if acc.is_zero() {
            return acc;
        }
        term += Rational::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(7, 3), 0), rat(1, 1));
        assert_eq!(pochhammer(&rat(-5, 1), 0), rat(1, 1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&rat(-3, 1), 4), rat(0, 1));
        assert_eq!(pochhammer(&rat(0, 1), 1), rat(0, 1));
        // (-3)_3 = (-3)(-2)(-1)
        assert_eq!(pochhammer(&rat(-3, 1), 3), rat(-6, 1));
    }

    #[test]
    fn pochhammer_of_one_is_factorial() {
        for n in 0..15u64 {
            assert_eq!(
                pochhammer(&rat(1, 1), n),
                Rational::from_integer(factorial(n))
            );
        }
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(40, 20), BigInt::from(137846528820u64));
    }
}
