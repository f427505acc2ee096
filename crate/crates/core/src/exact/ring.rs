use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

/// Commutative ring with a distinguished embedding of the rationals.
///
/// Additive and multiplicative identities come from `num_traits`.
///
/// Methods take references so that big-number entries are not cloned on
/// every operation.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + Zero + One + 'static {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn plus_assign(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn plus_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}
