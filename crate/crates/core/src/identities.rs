//! Combinatorial identities behind the closed-form actions, checked by exact summation.
//!
//! * `f(k) = Σ_{n=1}^{k} (-1)^n (1/2)_n/n! C(k-1,n-1) = -(2k-2)!/(2^{2k-1} k!(k-1)!)`
//! * `f_n(s) = Σ_{k=1}^{s-1} t_k t_{s-k} k^n` for `n = 0, 1, 2`, against closed forms
//! * a terminating Gosper-type sum with arbitrary rational parameters
//! * the recurrences satisfied by `f` and `f_n`

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, pochhammer, rat, Rational};
use crate::jordanian::t_coeff;
use crate::report::Report;

/// Parameters of one identity instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "lemma")]
pub enum Params {
    /// `f(k)` closed form.
    L1 { k: u64 },
    /// `f_n(s)` closed form.
    L2 { s: u64, n: u32 },
    /// Terminating sum of `g(l)`, `l = 0..=n`.
    L3 {
        #[serde(serialize_with = "ser_rat")]
        alpha: Rational,
        #[serde(serialize_with = "ser_rat")]
        beta: Rational,
        #[serde(serialize_with = "ser_rat")]
        gamma: Rational,
        n: u64,
    },
}

fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl Params {
    pub fn tag(&self) -> &'static str {
        match self {
            Params::L1 { .. } => "L1",
            Params::L2 { n: 0, .. } => "L2n0",
            Params::L2 { n: 1, .. } => "L2n1",
            Params::L2 { .. } => "L2n2",
            Params::L3 { .. } => "L3",
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::L1 { k } => write!(f, "k={k}"),
            Params::L2 { s, n } => write!(f, "s={s} n={n}"),
            Params::L3 { alpha, beta, gamma, n } => write!(f, "α={alpha} β={beta} γ={gamma} n={n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCase {
    pub params: Params,
    #[serde(serialize_with = "ser_rat")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub rhs: Rational,
    pub pass: bool,
}

impl IdentityCase {
    fn new(params: Params, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs == rhs;
        IdentityCase { params, lhs, rhs, pass }
    }
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "ok  " } else { "FAIL" };
        write!(f, "{status} {} {}: {} = {}", self.params.tag(), self.params, self.lhs, self.rhs)
    }
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `Σ_{n=1}^{k} (-1)^n (1/2)_n / n! · C(k-1, n-1)`.
pub fn f_sum(k: u64) -> Rational {
    let half = rat(1, 2);
    (1..=k)
        .map(|n| {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            pochhammer(&half, n) / int(factorial(n)) * int(binomial(k - 1, n - 1)) * int(sign)
        })
        .sum()
}

/// `-(1/2^{2k-1}) (2k-2)! / (k! (k-1)!)`.
pub fn f_closed(k: u64) -> Rational {
    -t_coeff(k) / int(BigInt::from(2).pow((2 * k - 1) as u32))
}

pub fn lemma1(k: u64) -> IdentityCase {
    assert!(k >= 1, "k must be positive");
    IdentityCase::new(Params::L1 { k }, f_sum(k), f_closed(k))
}

/// `Σ_{k=1}^{s-1} t_k t_{s-k} k^n`.
pub fn f_n_sum(n: u32, s: u64) -> Rational {
    (1..s).map(|k| t_coeff(k) * t_coeff(s - k) * int(BigInt::from(k).pow(n))).sum()
}

pub fn f_n_closed(n: u32, s: u64) -> Rational {
    let num = int(factorial(2 * s - 2));
    let fm1 = int(factorial(s - 1));
    match n {
        0 => num / (int(factorial(s)) * fm1),
        1 => num / (int(2) * &fm1 * &fm1),
        2 => int(s) * num / (int(2) * &fm1 * &fm1) - int(BigInt::from(4).pow((s - 2) as u32)),
        _ => panic!("closed form known only for n = 0, 1, 2"),
    }
}

pub fn lemma2(s: u64, n: u32) -> IdentityCase {
    assert!(s >= 2, "s must be at least 2");
    IdentityCase::new(Params::L2 { s, n }, f_n_sum(n, s), f_n_closed(n, s))
}

/// `g(l) = (α)_l (β)_l / ((l+1)! (γ)_l) · ((γ-α-β) l + γ - 1 - αβ)`.
pub fn gosper_term(alpha: &Rational, beta: &Rational, gamma: &Rational, l: u64) -> Result<Rational> {
    let gl = pochhammer(gamma, l);
    if gl.is_zero() {
        return Err(Error::Pole { gamma: gamma.to_string(), l: l as usize });
    }
    let linear = (gamma - alpha - beta) * int(l) + gamma - Rational::one() - alpha * beta;
    Ok(pochhammer(alpha, l) * pochhammer(beta, l) / (int(factorial(l + 1)) * gl) * linear)
}

/// `γ - 1 - (α)_{n+1} (β)_{n+1} / ((n+1)! (γ)_n)`.
pub fn gosper_closed(alpha: &Rational, beta: &Rational, gamma: &Rational, n: u64) -> Result<Rational> {
    let gn = pochhammer(gamma, n);
    if gn.is_zero() {
        return Err(Error::Pole { gamma: gamma.to_string(), l: n as usize });
    }
    Ok(gamma - Rational::one() - pochhammer(alpha, n + 1) * pochhammer(beta, n + 1) / (int(factorial(n + 1)) * gn))
}

/// Fails with [`Error::Pole`] when some `(γ)_l`, `l ≤ n`, vanishes.
pub fn lemma3(alpha: Rational, beta: Rational, gamma: Rational, n: u64) -> Result<IdentityCase> {
    let mut lhs = Rational::zero();
    for l in 0..=n {
        lhs += gosper_term(&alpha, &beta, &gamma, l)?;
    }
    let rhs = gosper_closed(&alpha, &beta, &gamma, n)?;
    Ok(IdentityCase::new(Params::L3 { alpha, beta, gamma, n }, lhs, rhs))
}

/// Random lemma-3 instances: `|num| ≤ 12`, `1 ≤ den ≤ 12`, `n ≤ max_n`; poles are redrawn.
/// Returns the cases and the number of draws skipped because of a pole.
pub fn random_lemma3_cases(count: usize, max_n: u64, seed: u64) -> (Vec<IdentityCase>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| rat(rng.gen_range(-12..=12), rng.gen_range(1..=12));
    let mut cases = Vec::with_capacity(count);
    let mut skipped = 0;
    while cases.len() < count {
        let (a, b, g) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let n = rng.gen_range(0..=max_n);
        match lemma3(a, b, g, n) {
            Ok(c) => cases.push(c),
            Err(_) => skipped += 1,
        }
    }
    (cases, skipped)
}

/// The substitution `α = 1-k-2m1`, `β = 1+2m2`, `γ = 2-k+2m2` used for the auxiliary basis.
pub fn lemma3_label_substitution(twice_m1: i64, twice_m2: i64, k: i64, n: u64) -> Result<IdentityCase> {
    let alpha = int(1 - k - twice_m1);
    let beta = int(1 + twice_m2);
    let gamma = int(2 - k + twice_m2);
    lemma3(alpha, beta, gamma, n)
}

/// Checks the recurrences for `f` and `f_0, f_1, f_2` against the summed values, up to `max`.
pub fn verify_recurrences(max: u64) -> Report {
    let mut report = Report::new(format!("recurrences up to {max}"));
    let mut record = |name: &str, first_bad: Option<u64>| match first_bad {
        None => report.pass(name),
        Some(x) => report.fail(name, format!("fails at {x}")),
    };

    record("f(1) = -1/2", (f_sum(1) != rat(-1, 2)).then_some(1));
    record(
        "2(k+1) f(k+1) = (2k-1) f(k)",
        (1..max).find(|&k| int(2 * (k + 1)) * f_sum(k + 1) != int(2 * k as i64 - 1) * f_sum(k)),
    );

    let seeds = (0..=2).all(|n| f_n_sum(n, 2).is_one());
    record("f_n(2) = 1", (!seeds).then_some(2));
    let fact = |n: u64| int(factorial(n));
    record(
        "4(s-1) f_0(s) - (s+1) f_0(s+1) + 2(2s-2)!/(s!(s-1)!) = 0",
        (2..max).find(|&s| {
            int(4 * (s - 1)) * f_n_sum(0, s) - int(s + 1) * f_n_sum(0, s + 1)
                + int(2) * fact(2 * s - 2) / (fact(s) * fact(s - 1))
                != Rational::zero()
        }),
    );
    record(
        "4(s-1) f_1(s) - s f_1(s+1) + (2s-2)!/(s-1)!^2 = 0",
        (2..max).find(|&s| {
            int(4 * (s - 1)) * f_n_sum(1, s) - int(s) * f_n_sum(1, s + 1) + fact(2 * s - 2) / (fact(s - 1) * fact(s - 1))
                != Rational::zero()
        }),
    );
    record(
        "4 f_2(s) - f_2(s+1) + (2s-2)!/(s!(s-2)!) = 0",
        (2..max).find(|&s| {
            int(4) * f_n_sum(2, s) - f_n_sum(2, s + 1) + fact(2 * s - 2) / (fact(s) * fact(s - 2)) != Rational::zero()
        }),
    );
    report
}

/// All lemma instances in the given ranges, collected into one report.
pub fn verify_lemmas(max_k: u64, max_s: u64, random_cases: usize, max_n: u64, seed: u64) -> Report {
    let mut report = Report::new("lemmas");
    let first_bad = |cases: Vec<IdentityCase>| cases.into_iter().find(|c| !c.pass);
    let mut record = |name: String, bad: Option<IdentityCase>| match bad {
        None => report.pass(name),
        Some(c) => report.fail(name, c.to_string()),
    };
    record(format!("f(k) closed form, k = 1..={max_k}"), first_bad((1..=max_k).map(lemma1).collect()));
    for n in 0..=2 {
        record(
            format!("f_{n}(s) closed form, s = 2..={max_s}"),
            first_bad((2..=max_s).map(|s| lemma2(s, n)).collect()),
        );
    }
    let (cases, skipped) = random_lemma3_cases(random_cases, max_n, seed);
    record(
        format!("Gosper sum, {random_cases} random cases with n <= {max_n} ({skipped} poles redrawn)"),
        first_bad(cases),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lemma1_small() {
        assert_eq!(f_sum(1), rat(-1, 2));
        assert_eq!(f_sum(2), rat(-1, 8));
        assert_eq!(f_closed(2), rat(-1, 8));
        assert!((1..=40).all(|k| lemma1(k).pass));
    }

    #[test]
    fn lemma2_small() {
        for n in 0..=2 {
            assert_eq!(f_n_sum(n, 2), rat(1, 1));
        }
        assert_eq!(f_n_sum(0, 3), rat(2, 1));
        assert_eq!(f_n_sum(1, 3), rat(3, 1));
        assert_eq!(f_n_sum(2, 3), rat(5, 1));
        assert!((2..=40).all(|s| (0..=2).all(|n| lemma2(s, n).pass)));
    }

    #[test]
    fn recurrence_steps() {
        // one step from the seed: 4 f(2) = f(1)
        assert_eq!(f_sum(1) / int(4), rat(-1, 8));
        // f_0 at s = 2: 4 - 3 f_0(3) + 2 = 0
        assert_eq!(f_n_sum(0, 3), rat(2, 1));
        let r = verify_recurrences(40);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn lemma3_single_term() {
        let (a, b, g) = (rat(3, 7), rat(-5, 2), rat(11, 3));
        let c = lemma3(a.clone(), b.clone(), g.clone(), 0).unwrap();
        assert_eq!(c.lhs, &g - Rational::one() - &a * &b);
        assert!(c.pass);
    }

    #[test]
    fn lemma3_pole_is_reported() {
        assert!(matches!(lemma3(rat(1, 2), rat(1, 3), rat(-2, 1), 5), Err(Error::Pole { .. })));
    }

    #[test]
    fn lemma3_random() {
        let (cases, _) = random_lemma3_cases(500, 20, 7);
        assert_eq!(cases.len(), 500);
        assert!(cases.iter().all(|c| c.pass));
    }

    proptest! {
        #[test]
        fn lemma3_with_weight_labels(m1 in -10i64..=10, m2 in -10i64..=10, k in 0i64..8, n in 0u64..10) {
            if let Ok(c) = lemma3_label_substitution(m1, m2, k, n) {
                prop_assert!(c.pass, "{}", c);
            }
        }
    }
}
