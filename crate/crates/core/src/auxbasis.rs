//! The auxiliary basis `w_{m1,m2}` of `V^(j1) ⊗ V^(j2)` on which the
//! coproducts of `H` and `Z±` act like the undeformed primitive coproduct.
//!
//! `b^{m1,m2}_{k,l} = (-2m1-k)_l (-2m2-l)_k / (k! l!)` for `k, l ≥ 0` (else 0),
//! `a^{m1,m2}_{k,l} = (-1)^k (h/2)^{k+l} (b_{k,l} - b_{k-1,l-1})`,
//! `w_{m1,m2} = Σ_{k=0}^{j1-m1} Σ_{l=0}^{j2-m2} a_{k,l} v_{m1+k} ⊗ v_{m2+l}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, pochhammer, HMat, HPoly, HalfInt, Mat, Rational, Ring};
use crate::jordanian::Generator;
use crate::report::Report;
use crate::su2::{self, RepSpace};
use crate::tensor::{coprod, TensorSpace};

pub fn b_coeff(m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> Rational {
    if k < 0 || l < 0 {
        return Rational::zero();
    }
    let first = pochhammer(&Rational::from_integer(BigInt::from(-m1.twice() - k)), l as u64);
    if first.is_zero() {
        return first;
    }
    let second = pochhammer(&Rational::from_integer(BigInt::from(-m2.twice() - l)), k as u64);
    first * second / Rational::from_integer(factorial(k as u64) * factorial(l as u64))
}

/// `a^{m1,m2}_{k,l}`, a monomial of degree `k + l` in `h` (possibly zero).
pub fn a_coeff(m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> HPoly<Rational> {
    if k < 0 || l < 0 {
        return HPoly::zero();
    }
    let diff = b_coeff(m1, m2, k, l) - b_coeff(m1, m2, k - 1, l - 1);
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let scale = Rational::new(BigInt::from(sign), BigInt::from(2).pow((k + l) as u32));
    HPoly::monomial(diff * scale, (k + l) as usize)
}

/// A `w` vector in `v ⊗ v` coordinates (tensor index order).
#[derive(Clone, Debug, PartialEq)]
pub struct WVector {
    pub space: TensorSpace,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub coords: Vec<HPoly<Rational>>,
}

fn check_weight(sp: &RepSpace, m: HalfInt) -> Result<()> {
    if sp.contains(m) {
        Ok(())
    } else {
        Err(Error::WeightOutOfRange { j: sp.j(), m })
    }
}

pub fn w_vector(j1: HalfInt, j2: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<WVector> {
    let space = TensorSpace::new(j1, j2)?;
    check_weight(&space.left, m1)?;
    check_weight(&space.right, m2)?;
    let mut coords = vec![HPoly::zero(); space.dim()];
    for k in 0..=j1.int_diff(m1).expect("j1 - m1 is an integer") {
        for l in 0..=j2.int_diff(m2).expect("j2 - m2 is an integer") {
            let idx = space.index(m1 + k, m2 + l).expect("labels stay in range");
            coords[idx] = a_coeff(m1, m2, k, l);
        }
    }
    Ok(WVector { space, m1, m2, coords })
}

/// Columns are the `w_{m1,m2}` in tensor index order; lower unitriangular as stored.
pub fn w_matrix(j1: HalfInt, j2: HalfInt) -> Result<HMat> {
    let space = TensorSpace::new(j1, j2)?;
    let cols = space
        .basis()
        .map(|(m1, m2)| w_vector(j1, j2, m1, m2).map(|w| w.coords))
        .collect::<Result<Vec<_>>>()?;
    Mat::from_columns(&cols)
}

/// `W^{-1}`, expressing `v ⊗ v` in terms of the `w` vectors.
pub fn w_matrix_inverse(j1: HalfInt, j2: HalfInt) -> Result<HMat> {
    w_matrix(j1, j2)?.unit_lower_inverse()
}

/// `w_{m1,m2}` as coordinates, or the zero vector when a label leaves its range.
fn w_or_zero(space: &TensorSpace, m1: HalfInt, m2: HalfInt) -> Result<Vec<HPoly<Rational>>> {
    if space.left.contains(m1) && space.right.contains(m2) {
        Ok(w_vector(space.j1(), space.j2(), m1, m2)?.coords)
    } else {
        Ok(vec![HPoly::zero(); space.dim()])
    }
}

fn combine(terms: &[(i64, &[HPoly<Rational>])]) -> Vec<HPoly<Rational>> {
    let n = terms.first().map_or(0, |t| t.1.len());
    (0..n)
        .map(|i| {
            let mut acc = HPoly::zero();
            for (c, v) in terms {
                if *c != 0 {
                    acc.plus_assign(&v[i].scale(&Rational::from_integer((*c).into())));
                }
            }
            acc
        })
        .collect()
}

/// Applies `Δ(gen)` to every `w_{m1,m2}` and compares with `rhs(m1, m2)`.
fn check_action(
    report: &mut Report,
    name: &str,
    generator: Generator,
    j1: HalfInt,
    j2: HalfInt,
    rhs: impl Fn(&TensorSpace, HalfInt, HalfInt) -> Result<Vec<HPoly<Rational>>>,
) -> Result<()> {
    let space = TensorSpace::new(j1, j2)?;
    let delta = coprod(generator, j1, j2)?.matrix;
    for (m1, m2) in space.basis() {
        let w = w_vector(j1, j2, m1, m2)?;
        let lhs = delta.apply(&w.coords)?;
        if lhs != rhs(&space, m1, m2)? {
            report.fail(name, format!("fails at (m1,m2)=({m1},{m2})"));
            return Ok(());
        }
    }
    report.pass(name);
    Ok(())
}

fn title(what: &str, j1: HalfInt, j2: HalfInt) -> String {
    format!("{what}, (2j1,2j2)=({},{})", j1.twice(), j2.twice())
}

/// `Δ(H) w_{m1,m2} = 2(m1+m2) w_{m1,m2}`.
pub fn verify_prop_h(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(title("w-basis, action of ΔH", j1, j2));
    check_action(&mut report, "ΔH w = 2(m1+m2) w", Generator::H, j1, j2, |s, m1, m2| {
        let w = w_or_zero(s, m1, m2)?;
        Ok(combine(&[((m1 + m2).twice(), &w)]))
    })?;
    Ok(report)
}

/// `Δ(Z+) w_{m1,m2} = w_{m1+1,m2} + w_{m1,m2+1}`, out-of-range vectors read as zero.
pub fn verify_prop_zplus(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(title("w-basis, action of ΔZ+", j1, j2));
    check_action(&mut report, "ΔZ+ w = w_{m1+1,m2} + w_{m1,m2+1}", Generator::ZPlus, j1, j2, |s, m1, m2| {
        let a = w_or_zero(s, m1 + 1, m2)?;
        let b = w_or_zero(s, m1, m2 + 1)?;
        Ok(combine(&[(1, &a), (1, &b)]))
    })?;
    Ok(report)
}

/// `Δ(Z-) w_{m1,m2} = (j1+m1)(j1-m1+1) w_{m1-1,m2} + (j2+m2)(j2-m2+1) w_{m1,m2-1}`.
pub fn verify_prop_zminus(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(title("w-basis, action of ΔZ-", j1, j2));
    check_action(
        &mut report,
        "ΔZ- w = (j1+m1)(j1-m1+1) w_{m1-1,m2} + (j2+m2)(j2-m2+1) w_{m1,m2-1}",
        Generator::ZMinus,
        j1,
        j2,
        |s, m1, m2| {
            let a = w_or_zero(s, m1 - 1, m2)?;
            let b = w_or_zero(s, m1, m2 - 1)?;
            Ok(combine(&[(su2::lowering_factor(j1, m1), &a), (su2::lowering_factor(j2, m2), &b)]))
        },
    )?;
    Ok(report)
}

/// The actions of ΔH, ΔZ+ and ΔZ- on the w-basis, together.
pub fn verify_props(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(title("w-basis", j1, j2));
    report.absorb(verify_prop_h(j1, j2)?);
    report.absorb(verify_prop_zplus(j1, j2)?);
    report.absorb(verify_prop_zminus(j1, j2)?);
    Ok(report)
}

/// `Σ_{n=1}^{l} (b_{k,l-n} - b_{k-1,l-n-1})`.
pub fn partial_sum_lhs(m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> Rational {
    (1..=l).map(|n| b_coeff(m1, m2, k, l - n) - b_coeff(m1, m2, k - 1, l - n - 1)).sum()
}

/// `((2m1+k-l+1)/(2m1+k)) b_{k,l-1}`, or `None` when `2m1 + k = 0`.
pub fn partial_sum_rhs(m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> Option<Rational> {
    let den = m1.twice() + k;
    if den == 0 {
        return None;
    }
    let num = den - l + 1;
    Some(Rational::new(num.into(), den.into()) * b_coeff(m1, m2, k, l - 1))
}

/// `Σ_{n≥0} (b_{k-n,l-n} - b_{k-n-1,l-n-1})`, which telescopes to `b_{k,l}`.
pub fn telescoped_sum(m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> Rational {
    (0..=k.min(l).max(0)).map(|n| b_coeff(m1, m2, k - n, l - n) - b_coeff(m1, m2, k - n - 1, l - n - 1)).sum()
}

/// `true` when the matrix is lower unitriangular as stored.
pub fn is_unit_lower(m: &HMat) -> bool {
    (0..m.rows()).all(|r| {
        (0..m.cols()).all(|c| match r.cmp(&c) {
            std::cmp::Ordering::Equal => m[(r, c)].is_one(),
            std::cmp::Ordering::Less => m[(r, c)].is_zero(),
            std::cmp::Ordering::Greater => true,
        })
    })
}
