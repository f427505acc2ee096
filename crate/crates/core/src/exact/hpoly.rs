use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, Ring};
use crate::error::{Error, Result};

/// Polynomial in the formal deformation parameter `h`.
///
/// `coeffs[k]` is the coefficient of `h^k`; trailing zeros are trimmed so the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> HPoly<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = HPoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: C) -> Self {
        HPoly::from_coeffs(vec![c])
    }

    /// `c * h^degree`.
    pub fn monomial(c: C, degree: usize) -> Self {
        if c.is_zero() {
            return HPoly { coeffs: Vec::new() };
        }
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        HPoly { coeffs }
    }

    /// The indeterminate `h` itself.
    pub fn h() -> Self {
        HPoly::monomial(C::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Degrees carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| k)
    }

    /// `Some((c, d))` when the polynomial is the single monomial `c h^d`.
    pub fn as_monomial(&self) -> Option<(C, usize)> {
        let mut it = self.support();
        let d = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some((self.coeffs[d].clone(), d))
    }

    /// Value at `h = 0`.
    pub fn at_zero(&self) -> C {
        self.coeff(0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return HPoly { coeffs: Vec::new() };
        }
        HPoly::from_coeffs(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    /// Exact division by `h^k`.
    pub fn div_h_pow(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisibleByH(k));
        }
        Ok(HPoly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        })
    }

    /// Substitutes `h -> -h`.
    pub fn reflect(&self) -> Self {
        HPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> HPoly<D> {
        HPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation at a ring element.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.times(x).plus(c))
    }
}

impl<C: Ring> Zero for HPoly<C> {
    fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for HPoly<C> {
    fn one() -> Self {
        HPoly { coeffs: vec![C::one()] }
    }
}

impl<C: Ring> Add for HPoly<C> {
    type Output = HPoly<C>;
    fn add(mut self, rhs: HPoly<C>) -> HPoly<C> {
        self.plus_assign(&rhs);
        self
    }
}

impl<C: Ring> Mul for HPoly<C> {
    type Output = HPoly<C>;
    fn mul(self, rhs: HPoly<C>) -> HPoly<C> {
        self.times(&rhs)
    }
}

impl<C: Ring> Ring for HPoly<C> {
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.plus_assign(rhs);
        out
    }

    fn plus_assign(&mut self, rhs: &Self) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.plus_assign(b);
        }
        self.trim();
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return HPoly { coeffs: Vec::new() };
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j].plus_assign(&a.times(b));
                }
            }
        }
        HPoly::from_coeffs(coeffs)
    }

    fn negated(&self) -> Self {
        HPoly {
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
        }
    }

    fn from_rational(q: &Rational) -> Self {
        HPoly::constant(C::from_rational(q))
    }
}

impl<C: Ring> From<C> for HPoly<C> {
    fn from(c: C) -> Self {
        HPoly::constant(c)
    }
}

impl<'a, C: Ring> Add<&'a HPoly<C>> for &'a HPoly<C> {
    type Output = HPoly<C>;
    fn add(self, rhs: &HPoly<C>) -> HPoly<C> {
        self.plus(rhs)
    }
}

impl<'a, C: Ring> Sub<&'a HPoly<C>> for &'a HPoly<C> {
    type Output = HPoly<C>;
    fn sub(self, rhs: &HPoly<C>) -> HPoly<C> {
        self.minus(rhs)
    }
}

impl<'a, C: Ring> Mul<&'a HPoly<C>> for &'a HPoly<C> {
    type Output = HPoly<C>;
    fn mul(self, rhs: &HPoly<C>) -> HPoly<C> {
        self.times(rhs)
    }
}

impl<C: Ring> Neg for &HPoly<C> {
    type Output = HPoly<C>;
    fn neg(self) -> HPoly<C> {
        self.negated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    type P = HPoly<Rational>;

    fn p(c: &[(i64, i64)]) -> P {
        HPoly::from_coeffs(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn trimming_and_degree() {
        let x = p(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(x.degree(), Some(0));
        assert_eq!(P::zero().degree(), None);
        assert!(p(&[(0, 1)]).is_zero());
    }

    #[test]
    fn product_and_division() {
        // (1 + h)(1 - h) = 1 - h^2
        let a = p(&[(1, 1), (1, 1)]);
        let b = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, p(&[(1, 1), (0, 1), (-1, 1)]));
        let h3 = P::monomial(rat(5, 2), 3);
        assert_eq!(h3.div_h_pow(2).unwrap(), P::monomial(rat(5, 2), 1));
        assert_eq!(a.div_h_pow(1), Err(Error::NotDivisibleByH(1)));
        assert_eq!(h3.as_monomial(), Some((rat(5, 2), 3)));
        assert_eq!(a.as_monomial(), None);
    }

    #[test]
    fn reflect_and_eval() {
        let a = p(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(a.reflect(), p(&[(1, 1), (-2, 1), (3, 1)]));
        assert_eq!(a.eval(&rat(1, 2)), rat(1, 1) + rat(1, 1) + rat(3, 4));
    }
}
