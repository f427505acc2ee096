use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, Ring};
use crate::error::{Error, Result};

/// Finite sum `sum_r q_r * sqrt(r)` over squarefree positive radicands `r`.
///
/// The radicand `1` holds the rational part. Zero coefficients are never
/// stored, so structural equality is numeric equality (square roots of
/// distinct squarefree integers are linearly independent over Q).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SqrtRat {
    terms: BTreeMap<BigUint, Rational>,
}

/// Splits `n` as `s^2 * r` with `r` squarefree. Returns `(s, r)`; zero maps to `(0, 1)`.
pub fn square_free_decompose(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = n.to_u64() {
        let (s, r) = decompose_u64(small);
        return (BigUint::from(s), BigUint::from(r));
    }
    let mut rem = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p: u64 = 2;
    while BigUint::from(p) * p <= rem {
        if let Some(small) = rem.to_u64() {
            let (s, r) = decompose_from(small, p);
            return (square * s, free * r);
        }
        let mut e = 0u32;
        while (&rem % p).is_zero() {
            rem /= p;
            e += 1;
        }
        square *= BigUint::from(p).pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, free * rem)
}

fn decompose_u64(n: u64) -> (u64, u64) {
    decompose_from(n, 2)
}

// Trial division starting at `start`; all primes below `start` are already removed.
fn decompose_from(mut n: u64, start: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = start;
    while p.saturating_mul(p) <= n {
        let mut e = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, free * n)
}

/// Canonical `sqrt(q)` for `q >= 0`.
pub fn sqrt_rat(q: &Rational) -> Result<SqrtRat> {
    if q.is_negative() {
        return Err(Error::NegativeSqrt(q.to_string()));
    }
    if q.is_zero() {
        return Ok(SqrtRat::zero());
    }
    // sqrt(n/d) = sqrt(n d) / d
    let n = q.numer().magnitude();
    let d = q.denom().magnitude();
    let (s, r) = square_free_decompose(&(n * d));
    let coeff = Rational::new(BigInt::from_biguint(Sign::Plus, s), q.denom().clone());
    Ok(SqrtRat::term(coeff, r))
}

impl SqrtRat {
    pub fn from_rational(q: Rational) -> Self {
        SqrtRat::term(q, BigUint::one())
    }

    pub fn from_int(n: i64) -> Self {
        SqrtRat::from_rational(Rational::from_integer(n.into()))
    }

    /// `q * sqrt(r)`; `r` is reduced to its squarefree part first.
    pub fn term(q: Rational, r: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if q.is_zero() || r.is_zero() {
            return SqrtRat { terms };
        }
        let (s, free) = square_free_decompose(&r);
        let q = q * Rational::from_integer(BigInt::from_biguint(Sign::Plus, s));
        terms.insert(free, q);
        SqrtRat { terms }
    }

    /// `sqrt(q)`; panics on negative input. See [`sqrt_rat`] for the fallible form.
    pub fn sqrt(q: &Rational) -> Self {
        sqrt_rat(q).expect("square root of a negative rational")
    }

    /// `(radicand, coefficient)` pairs in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    /// Re-establishes the canonical form; a no-op on values built through the public API.
    pub fn normalized(&self) -> Self {
        let mut out = SqrtRat::zero();
        for (r, q) in &self.terms {
            out = out + SqrtRat::term(q.clone(), r.clone());
        }
        out
    }

    /// The square as a rational, available for single-term values.
    pub fn square_rational(&self) -> Option<Rational> {
        match self.terms.iter().next() {
            None => Some(Rational::zero()),
            Some((r, q)) if self.terms.len() == 1 => {
                Some(q * q * Rational::from_integer(BigInt::from_biguint(Sign::Plus, r.clone())))
            }
            _ => None,
        }
    }

    /// Multiplicative inverse; only single-term values `q sqrt(r)` are supported.
    pub fn inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let (r, q) = self.terms.iter().next().unwrap();
        let rr = Rational::from_integer(BigInt::from_biguint(Sign::Plus, r.clone()));
        Ok(SqrtRat::term((q * rr).recip(), r.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return SqrtRat::zero();
        }
        SqrtRat {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), c * q)).collect(),
        }
    }

    /// Floating-point approximation, for display and diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, q)| q.to_f64().unwrap_or(f64::NAN) * r.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }

    fn add_term(&mut self, r: BigUint, q: Rational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(r) {
            Entry::Vacant(v) => {
                v.insert(q);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

fn mul_radicands(r: &BigUint, s: &BigUint) -> (BigUint, BigUint) {
    // For squarefree r, s: sqrt(r) sqrt(s) = g sqrt((r/g)(s/g)) with g = gcd(r, s).
    if r.is_one() {
        return (BigUint::one(), s.clone());
    }
    if s.is_one() {
        return (BigUint::one(), r.clone());
    }
    let g = r.gcd(s);
    let radicand = (r / &g) * (s / &g);
    (g, radicand)
}

impl<'a> Add<&'a SqrtRat> for &'a SqrtRat {
    type Output = SqrtRat;
    fn add(self, rhs: &SqrtRat) -> SqrtRat {
        let mut out = self.clone();
        for (r, q) in &rhs.terms {
            out.add_term(r.clone(), q.clone());
        }
        out
    }
}

impl Add for SqrtRat {
    type Output = SqrtRat;
    fn add(mut self, rhs: SqrtRat) -> SqrtRat {
        for (r, q) in rhs.terms {
            self.add_term(r, q);
        }
        self
    }
}

impl<'a> Sub<&'a SqrtRat> for &'a SqrtRat {
    type Output = SqrtRat;
    fn sub(self, rhs: &SqrtRat) -> SqrtRat {
        let mut out = self.clone();
        for (r, q) in &rhs.terms {
            out.add_term(r.clone(), -q);
        }
        out
    }
}

impl Sub for SqrtRat {
    type Output = SqrtRat;
    fn sub(self, rhs: SqrtRat) -> SqrtRat {
        &self - &rhs
    }
}

impl<'a> Mul<&'a SqrtRat> for &'a SqrtRat {
    type Output = SqrtRat;
    fn mul(self, rhs: &SqrtRat) -> SqrtRat {
        let mut out = SqrtRat::zero();
        for (r, p) in &self.terms {
            for (s, q) in &rhs.terms {
                let (g, radicand) = mul_radicands(r, s);
                let coeff = p * q * Rational::from_integer(BigInt::from_biguint(Sign::Plus, g));
                out.add_term(radicand, coeff);
            }
        }
        out
    }
}

impl Mul for SqrtRat {
    type Output = SqrtRat;
    fn mul(self, rhs: SqrtRat) -> SqrtRat {
        &self * &rhs
    }
}

impl Neg for &SqrtRat {
    type Output = SqrtRat;
    fn neg(self) -> SqrtRat {
        SqrtRat {
            terms: self.terms.iter().map(|(r, q)| (r.clone(), -q)).collect(),
        }
    }
}

impl Neg for SqrtRat {
    type Output = SqrtRat;
    fn neg(self) -> SqrtRat {
        -&self
    }
}

impl From<Rational> for SqrtRat {
    fn from(q: Rational) -> Self {
        SqrtRat::from_rational(q)
    }
}

impl Zero for SqrtRat {
    fn zero() -> Self {
        SqrtRat { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SqrtRat {
    fn one() -> Self {
        SqrtRat::from_rational(Rational::one())
    }
}

impl Ring for SqrtRat {
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
        SqrtRat::from_rational(q.clone())
    }
    fn plus_assign(&mut self, rhs: &Self) {
        for (r, q) in &rhs.terms {
            self.add_term(r.clone(), q.clone());
        }
    }
}

impl fmt::Display for SqrtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, q)) in self.terms.iter().enumerate() {
            let (neg, mag) = (q.is_negative(), q.abs());
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if r.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "√{r}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}√{r}")?;
            } else {
                write!(f, "({mag})√{r}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SqrtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SqrtRat({self})")
    }
}
