//! Generators of the Jordanian algebra `U_h(sl(2))` on the irreducible
//! representations `V^(j)`, in the v-basis.
//!
//! The algebra is generated by `H`, `X`, `Y` with
//! `[X,Y] = H`, `[H,X] = 2 sinh(hX)/h`, `[H,Y] = -Y cosh(hX) - cosh(hX) Y`,
//! and is identified with classical sl(2) through
//! `Z+ = (2/h) tanh(hX/2)`, `Z- = cosh(hX/2) Y cosh(hX/2)`.
//!
//! Each closed-form action below has a second, independent construction
//! from the classical ladder operators through terminating matrix series
//! (`*_via_*` functions). The two are compared exactly in the tests and in
//! [`verify_oracles`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    factorial, lift_to_poly, nilpotent_series, rat, series, HMat, HPoly, HalfInt, Mat, Rational, Ring,
};
use crate::report::Report;
use crate::su2::{self, RepSpace};

/// Operators that can be requested as explicit matrices on `V^(j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    H,
    X,
    Y,
    ZPlus,
    ZMinus,
    ExpHX,
    ExpNegHX,
    CoshHalfInv,
    SinhHX,
}

impl Generator {
    pub const ALL: [Generator; 9] = [
        Generator::H,
        Generator::X,
        Generator::Y,
        Generator::ZPlus,
        Generator::ZMinus,
        Generator::ExpHX,
        Generator::ExpNegHX,
        Generator::CoshHalfInv,
        Generator::SinhHX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::H => "H",
            Generator::X => "X",
            Generator::Y => "Y",
            Generator::ZPlus => "Z+",
            Generator::ZMinus => "Z-",
            Generator::ExpHX => "expHX",
            Generator::ExpNegHX => "expNegHX",
            Generator::CoshHalfInv => "coshHalfInv",
            Generator::SinhHX => "sinhHX",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown generator '{s}'")))
    }
}

/// An explicit generator matrix on `V^(j)` in the v-basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GenMatrix {
    pub generator: Generator,
    pub j: HalfInt,
    pub matrix: HMat,
}

/// `t_k = (2k-2)! / (k! (k-1)!)`, i.e. 1, 1, 2, 5, 14, ...
pub fn t_coeff(k: u64) -> Rational {
    assert!(k >= 1, "t_k is defined for k >= 1");
    Rational::new(factorial(2 * k - 2), factorial(k) * factorial(k - 1))
}

/// `(h/2)^k`.
fn half_h_pow(k: usize) -> HPoly<Rational> {
    HPoly::monomial(Rational::new(BigInt::one(), BigInt::from(2).pow(k as u32)), k)
}

/// `(h/4)^k`.
fn quarter_h_pow(k: usize) -> HPoly<Rational> {
    HPoly::monomial(Rational::new(BigInt::one(), BigInt::from(4).pow(k as u32)), k)
}

fn constant(q: Rational) -> HPoly<Rational> {
    HPoly::constant(q)
}

fn space(j: HalfInt) -> Result<RepSpace> {
    RepSpace::new(j)
}

pub fn h_matrix(j: HalfInt) -> Result<HMat> {
    Ok(lift_to_poly(&su2::h_matrix(j)?))
}

/// `e^{hX} v_m = v_m + 2 sum_{k=1}^{j-m} (h/2)^k v_{m+k}`.
pub fn exp_hx_matrix(j: HalfInt) -> Result<HMat> {
    let n = space(j)?.dim();
    Ok(Mat::from_fn(n, n, |r, c| match r.checked_sub(c) {
        Some(0) => HPoly::one(),
        Some(k) => half_h_pow(k).scale(&rat(2, 1)),
        None => HPoly::zero(),
    }))
}

/// `e^{-hX}`: the closed form of [`exp_hx_matrix`] with `h -> -h`.
pub fn exp_neg_hx_matrix(j: HalfInt) -> Result<HMat> {
    Ok(exp_hx_matrix(j)?.map(HPoly::reflect))
}

/// `X v_m = sum_{k=0}^{floor((j-m-1)/2)} (h/2)^{2k}/(2k+1) v_{m+1+2k}`.
pub fn x_matrix(j: HalfInt) -> Result<HMat> {
    let n = space(j)?.dim();
    Ok(Mat::from_fn(n, n, |r, c| {
        // r = c + 1 + 2k
        match r.checked_sub(c + 1) {
            Some(d) if d % 2 == 0 => {
                let k = d / 2;
                half_h_pow(2 * k).scale(&rat(1, 2 * k as i64 + 1))
            }
            _ => HPoly::zero(),
        }
    }))
}

/// `N2 v_m = sum_{k=1}^{floor((j-m)/2)} (h/2)^{2k} v_{m+2k}`, where `cosh^2(hX/2) = 1 + N2`.
pub fn n2_matrix(j: HalfInt) -> Result<HMat> {
    let n = space(j)?.dim();
    Ok(Mat::from_fn(n, n, |r, c| match r.checked_sub(c) {
        Some(d) if d > 0 && d % 2 == 0 => half_h_pow(d),
        _ => HPoly::zero(),
    }))
}

/// `cosh(hX/2)^{-1} v_m = v_m - 2 sum_{k=1}^{floor((j-m)/2)} t_k (h/4)^{2k} v_{m+2k}`.
pub fn cosh_half_inv_matrix(j: HalfInt) -> Result<HMat> {
    let n = space(j)?.dim();
    Ok(Mat::from_fn(n, n, |r, c| match r.checked_sub(c) {
        Some(0) => HPoly::one(),
        Some(d) if d % 2 == 0 => {
            let k = d / 2;
            quarter_h_pow(2 * k).scale(&(t_coeff(k as u64) * rat(-2, 1)))
        }
        _ => HPoly::zero(),
    }))
}

/// `Y v_m = (j+m)(j-m+1) v_{m-1} - (j-m)(j+m+1)(h/2)^2 v_{m+1}
///        + sum_{s=1}^{floor((j-m+1)/2)} (h/2)^{2s} v_{m-1+2s}`.
pub fn y_matrix(j: HalfInt) -> Result<HMat> {
    let sp = space(j)?;
    let n = sp.dim();
    let mut y = Mat::zeros(n, n);
    for c in 0..n {
        let m = sp.weight(c);
        if c >= 1 {
            y[(c - 1, c)] = constant(Rational::from_integer(su2::lowering_factor(j, m).into()));
        }
        if c + 1 < n {
            let raise = ((j - m).twice() * (j + m + 1).twice()) / 4;
            y[(c + 1, c)] = half_h_pow(2).scale(&Rational::from_integer((-raise).into()));
        }
        // s >= 1 terms land on index c - 1 + 2s.
        let mut s = 1;
        while c + 2 * s - 1 < n {
            let r = c + 2 * s - 1;
            let term = half_h_pow(2 * s);
            y[(r, c)].plus_assign(&term);
            s += 1;
        }
    }
    Ok(y)
}

fn h_times(x: &HMat, c: Rational) -> HMat {
    x.scale(&HPoly::monomial(c, 1))
}

/// `exp(c h X)` by the exponential series of the nilpotent matrix `c h X`.
pub fn exp_of(x: &HMat, c: Rational) -> Result<HMat> {
    nilpotent_series(&h_times(x, c), series::exp)
}

/// `sinh(hX)/h = sum_k h^{2k} X^{2k+1} / (2k+1)!`, computed without dividing by `h`.
pub fn sinh_hx_over_h(x: &HMat) -> Result<HMat> {
    let hx = h_times(x, rat(1, 1));
    nilpotent_series(&(&hx * &hx), series::sinhc_in_square)?.checked_mul(x)
}

/// `sinh(hX)`.
pub fn sinh_hx(x: &HMat) -> Result<HMat> {
    Ok(h_times(&sinh_hx_over_h(x)?, rat(1, 1)))
}

/// `cosh(hX)`.
pub fn cosh_hx(x: &HMat) -> Result<HMat> {
    let hx = h_times(x, rat(1, 1));
    nilpotent_series(&(&hx * &hx), series::cosh_in_square)
}

/// `cosh(hX/2)`.
pub fn cosh_half_hx(x: &HMat) -> Result<HMat> {
    let hx = h_times(x, rat(1, 2));
    nilpotent_series(&(&hx * &hx), series::cosh_in_square)
}

/// `(1 + N)^{-1}` for unipotent `1 + N`.
pub fn unipotent_inverse(u: &HMat) -> Result<HMat> {
    let n = u.checked_sub(&Mat::identity(u.rows()))?;
    nilpotent_series(&n, series::inv1p)
}

/// `Z+ = (2/h) sinh(hX/2) cosh(hX/2)^{-1}`; the factor `1/h` cancels inside the series.
pub fn z_plus_from_x(x: &HMat) -> Result<HMat> {
    let hx = h_times(x, rat(1, 2));
    let two_sinh_over_h = nilpotent_series(&(&hx * &hx), series::sinhc_in_square)?.checked_mul(x)?;
    two_sinh_over_h.checked_mul(&unipotent_inverse(&cosh_half_hx(x)?)?)
}

/// `Z- = cosh(hX/2) Y cosh(hX/2)`.
pub fn z_minus_from(x: &HMat, y: &HMat) -> Result<HMat> {
    let c = cosh_half_hx(x)?;
    c.checked_mul(y)?.checked_mul(&c)
}

/// `e^{hX} = (1 + (h/2) Z+)(1 - (h/2) Z+)^{-1}`.
pub fn exp_hx_via_zplus(j: HalfInt) -> Result<HMat> {
    let n = space(j)?.dim();
    let z = h_times(&lift_to_poly(&su2::zplus_matrix(j)?), rat(1, 2));
    let one = Mat::identity(n);
    let inv = nilpotent_series(&z.map(Ring::negated), series::inv1p)?;
    one.checked_add(&z)?.checked_mul(&inv)
}

/// `X = (1/h) log(e^{hX})` from the closed-form `e^{hX}`.
pub fn x_via_log(j: HalfInt) -> Result<HMat> {
    let e = exp_hx_matrix(j)?;
    let n1 = e.checked_sub(&Mat::identity(e.rows()))?;
    let log = nilpotent_series(&n1, series::log1p)?;
    let mut out = Mat::zeros(log.rows(), log.cols());
    for r in 0..log.rows() {
        for c in 0..log.cols() {
            out[(r, c)] = log[(r, c)].div_h_pow(1)?;
        }
    }
    Ok(out)
}

/// `N2 = (1/2)(1 + (e^{hX} + e^{-hX})/2) - 1`.
pub fn n2_via_exp(j: HalfInt) -> Result<HMat> {
    let n = space(j)?.dim();
    let sum = exp_hx_matrix(j)?.checked_add(&exp_neg_hx_matrix(j)?)?;
    let half = constant(rat(1, 2));
    let cosh_sq = Mat::identity(n).checked_add(&sum.scale(&half))?.scale(&half);
    cosh_sq.checked_sub(&Mat::identity(n))
}

/// `(1 + N2)^{-1/2} = sum_n (-1)^n (1/2)_n N2^n / n!`.
pub fn cosh_half_inv_via_series(j: HalfInt) -> Result<HMat> {
    nilpotent_series(&n2_via_exp(j)?, series::inv_sqrt1p)
}

/// `Y = cosh(hX/2)^{-1} Z- cosh(hX/2)^{-1}` from the closed-form inverse cosh.
pub fn y_via_zminus(j: HalfInt) -> Result<HMat> {
    let c = cosh_half_inv_matrix(j)?;
    c.checked_mul(&lift_to_poly(&su2::zminus_matrix(j)?))?.checked_mul(&c)
}

/// The matrix of any supported operator on `V^(j)`.
pub fn generator_matrix(generator: Generator, j: HalfInt) -> Result<GenMatrix> {
    let matrix = match generator {
        Generator::H => h_matrix(j)?,
        Generator::X => x_matrix(j)?,
        Generator::Y => y_matrix(j)?,
        Generator::ZPlus => lift_to_poly(&su2::zplus_matrix(j)?),
        Generator::ZMinus => lift_to_poly(&su2::zminus_matrix(j)?),
        Generator::ExpHX => exp_hx_matrix(j)?,
        Generator::ExpNegHX => exp_neg_hx_matrix(j)?,
        Generator::CoshHalfInv => cosh_half_inv_matrix(j)?,
        Generator::SinhHX => sinh_hx(&x_matrix(j)?)?,
    };
    Ok(GenMatrix { generator, j, matrix })
}

/// `H`, `X`, `Y` and `e^{±hX}` acting on one representation space.
///
/// For an irrep these come from the closed forms; for tensor products they
/// are built by the coproduct (see [`crate::tensor::coproduct`]).
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub h: HMat,
    pub x: HMat,
    pub y: HMat,
    pub exp_hx: HMat,
    pub exp_neg_hx: HMat,
}

impl GeneratorSet {
    pub fn irrep(j: HalfInt) -> Result<Self> {
        Ok(GeneratorSet {
            h: h_matrix(j)?,
            x: x_matrix(j)?,
            y: y_matrix(j)?,
            exp_hx: exp_hx_matrix(j)?,
            exp_neg_hx: exp_neg_hx_matrix(j)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    pub fn z_plus(&self) -> Result<HMat> {
        z_plus_from_x(&self.x)
    }

    pub fn z_minus(&self) -> Result<HMat> {
        z_minus_from(&self.x, &self.y)
    }

    /// The three defining relations, each checked as an exact matrix identity.
    pub fn check_relations(&self, report: &mut Report) -> Result<()> {
        let (h, x, y) = (&self.h, &self.x, &self.y);
        report.check_mat_eq("[X,Y] = H", &x.commutator(y)?, h);
        let two = constant(rat(2, 1));
        report.check_mat_eq("[H,X] = 2 sinh(hX)/h", &h.commutator(x)?, &sinh_hx_over_h(x)?.scale(&two));
        let c = cosh_hx(x)?;
        let rhs = -&(&(y * &c) + &(&c * y));
        report.check_mat_eq("[H,Y] = -Y cosh(hX) - cosh(hX) Y", &h.commutator(y)?, &rhs);
        Ok(())
    }
}

/// Checks the defining relations of `U_h(sl(2))` on `V^(j)`.
pub fn verify_defining_relations(j: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("defining relations, 2j={}", j.twice()));
    GeneratorSet::irrep(j)?.check_relations(&mut report)?;
    Ok(report)
}

/// Rebuilds `Z±` from `X`, `Y` through the nonlinear map and compares with sl(2).
pub fn verify_nonlinear_map(j: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("nonlinear map, 2j={}", j.twice()));
    let set = GeneratorSet::irrep(j)?;
    report.check_mat_eq("Z+ = (2/h) tanh(hX/2)", &set.z_plus()?, &lift_to_poly(&su2::zplus_matrix(j)?));
    report.check_mat_eq("Z- = cosh(hX/2) Y cosh(hX/2)", &set.z_minus()?, &lift_to_poly(&su2::zminus_matrix(j)?));
    Ok(report)
}

/// Compares each closed-form action with its independent series construction.
pub fn verify_oracles(j: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("closed forms vs series, 2j={}", j.twice()));
    let n = space(j)?.dim();
    report.check_mat_eq("e^{hX} = (1+hZ+/2)(1-hZ+/2)^{-1}", &exp_hx_matrix(j)?, &exp_hx_via_zplus(j)?);
    report.check_mat_eq(
        "e^{hX} e^{-hX} = 1",
        &exp_hx_matrix(j)?.checked_mul(&exp_neg_hx_matrix(j)?)?,
        &Mat::identity(n),
    );
    report.check_mat_eq("e^{hX} = exp series of hX", &exp_hx_matrix(j)?, &exp_of(&x_matrix(j)?, rat(1, 1))?);
    report.check_mat_eq("X = log(e^{hX})/h", &x_matrix(j)?, &x_via_log(j)?);
    report.check_mat_eq("N2 from e^{±hX}", &n2_matrix(j)?, &n2_via_exp(j)?);
    report.check_mat_eq("cosh(hX/2)^{-1} = (1+N2)^{-1/2}", &cosh_half_inv_matrix(j)?, &cosh_half_inv_via_series(j)?);
    let ci = cosh_half_inv_matrix(j)?;
    let one_plus_n2 = Mat::identity(n).checked_add(&n2_matrix(j)?)?;
    report.check_mat_eq(
        "cosh(hX/2)^{-2} (1+N2) = 1",
        &ci.checked_mul(&ci)?.checked_mul(&one_plus_n2)?,
        &Mat::identity(n),
    );
    report.check_mat_eq("Y = cosh^{-1} Z- cosh^{-1}", &y_matrix(j)?, &y_via_zminus(j)?);
    Ok(report)
}

/// Every generator at `h = 0` against its classical sl(2) counterpart.
pub fn verify_classical_limit(j: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("classical limit, 2j={}", j.twice()));
    let n = space(j)?.dim();
    let at0 = |m: HMat| crate::exact::at_h_zero(&m);
    let id = Mat::<Rational>::identity(n);
    report.check_mat_eq("H(0) = H", &at0(h_matrix(j)?), &su2::h_matrix(j)?);
    report.check_mat_eq("X(0) = Z+", &at0(x_matrix(j)?), &su2::zplus_matrix(j)?);
    report.check_mat_eq("Y(0) = Z-", &at0(y_matrix(j)?), &su2::zminus_matrix(j)?);
    report.check_mat_eq("e^{hX}(0) = 1", &at0(exp_hx_matrix(j)?), &id);
    report.check_mat_eq("e^{-hX}(0) = 1", &at0(exp_neg_hx_matrix(j)?), &id);
    report.check_mat_eq("cosh(hX/2)^{-1}(0) = 1", &at0(cosh_half_inv_matrix(j)?), &id);
    Ok(report)
}
