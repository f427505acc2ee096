//! Coproducts on tensor products `V^(j1) ⊗ V^(j2)`, realized with Kronecker products.
//!
//! With `t = e^{hX}`:
//! `Δ(X) = X⊗1 + 1⊗X`, `Δ(H) = H⊗t + t^{-1}⊗H`, `Δ(Y) = Y⊗t + t^{-1}⊗Y`,
//! and `Δ(t) = t⊗t`. `Δ(Z±)` are obtained by applying the nonlinear map to
//! `Δ(X)`, `Δ(Y)`; `Δ(Z+)` and `Δ(H)` also have series forms in `Z+` which
//! are kept here as an independent cross-check.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{at_h_zero, lift_to_poly, nilpotent_series, rat, series, HMat, HPoly, HalfInt, Mat, Rational};
use crate::jordanian::{self, Generator, GeneratorSet};
use crate::report::Report;
use crate::su2::{self, RepSpace};

/// Default cap on the dimension of triple tensor products in coassociativity checks.
pub const DEFAULT_TRIPLE_CAP: usize = 64;

/// `V^(j1) ⊗ V^(j2)` with basis `v_{m1} ⊗ v_{m2}`, `m1` the slow index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    pub left: RepSpace,
    pub right: RepSpace,
}

impl TensorSpace {
    pub fn new(j1: HalfInt, j2: HalfInt) -> Result<Self> {
        Ok(TensorSpace { left: RepSpace::new(j1)?, right: RepSpace::new(j2)? })
    }

    pub fn j1(&self) -> HalfInt {
        self.left.j()
    }

    pub fn j2(&self) -> HalfInt {
        self.right.j()
    }

    pub fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    pub fn index(&self, m1: HalfInt, m2: HalfInt) -> Option<usize> {
        Some(self.left.index(m1)? * self.right.dim() + self.right.index(m2)?)
    }

    pub fn labels(&self, index: usize) -> (HalfInt, HalfInt) {
        let d2 = self.right.dim();
        (self.left.weight(index / d2), self.right.weight(index % d2))
    }

    /// All `(m1, m2)` in index order.
    pub fn basis(&self) -> impl Iterator<Item = (HalfInt, HalfInt)> + '_ {
        (0..self.dim()).map(|i| self.labels(i))
    }
}

/// A coproduct image on a tensor space.
#[derive(Clone, Debug, PartialEq)]
pub struct CoprodMatrix {
    pub generator: Generator,
    pub space: TensorSpace,
    pub matrix: HMat,
}

/// The coproduct of generator sets acting on two spaces.
///
/// Works for any pair of representations, so it can be iterated to build
/// triple products.
pub fn coproduct(a: &GeneratorSet, b: &GeneratorSet) -> GeneratorSet {
    let one_a = Mat::identity(a.dim());
    let one_b = Mat::identity(b.dim());
    let add = |p: HMat, q: HMat| &p + &q;
    GeneratorSet {
        h: add(a.h.kron(&b.exp_hx), a.exp_neg_hx.kron(&b.h)),
        x: add(a.x.kron(&one_b), one_a.kron(&b.x)),
        y: add(a.y.kron(&b.exp_hx), a.exp_neg_hx.kron(&b.y)),
        exp_hx: a.exp_hx.kron(&b.exp_hx),
        exp_neg_hx: a.exp_neg_hx.kron(&b.exp_neg_hx),
    }
}

/// Coproduct generator set on `V^(j1) ⊗ V^(j2)`.
pub fn coproduct_irreps(j1: HalfInt, j2: HalfInt) -> Result<GeneratorSet> {
    Ok(coproduct(&GeneratorSet::irrep(j1)?, &GeneratorSet::irrep(j2)?))
}

/// `Δ(gen)` on `V^(j1) ⊗ V^(j2)`.
pub fn coprod(generator: Generator, j1: HalfInt, j2: HalfInt) -> Result<CoprodMatrix> {
    let space = TensorSpace::new(j1, j2)?;
    let d = coproduct_irreps(j1, j2)?;
    let matrix = match generator {
        Generator::H => d.h,
        Generator::X => d.x,
        Generator::Y => d.y,
        Generator::ZPlus => d.z_plus()?,
        Generator::ZMinus => d.z_minus()?,
        Generator::ExpHX => d.exp_hx,
        Generator::ExpNegHX => d.exp_neg_hx,
        Generator::CoshHalfInv => jordanian::unipotent_inverse(&jordanian::cosh_half_hx(&d.x)?)?,
        Generator::SinhHX => jordanian::sinh_hx(&d.x)?,
    };
    Ok(CoprodMatrix { generator, space, matrix })
}

/// `x⊗1 + 1⊗x` for classical matrices.
pub fn primitive_sum<C: crate::exact::Ring>(a: &Mat<C>, b: &Mat<C>) -> Mat<C> {
    &a.kron(&Mat::identity(b.rows())) + &Mat::identity(a.rows()).kron(b)
}

fn zplus_poly(j: HalfInt) -> Result<HMat> {
    Ok(lift_to_poly(&su2::zplus_matrix(j)?))
}

/// `Σ_{n≥0} (c h Z+)^n`.
fn geometric_in_zplus(z: &HMat, c: Rational) -> Result<HMat> {
    let q = z.scale(&HPoly::monomial(c, 1));
    nilpotent_series(&q, series::geometric(rat(1, 1)))
}

/// `Δ(Z+) = (1⊗Z+ + Z+⊗1) Σ_n (-h²/4)^n Z+^n ⊗ Z+^n`.
pub fn delta_zplus_series(j1: HalfInt, j2: HalfInt) -> Result<HMat> {
    let (z1, z2) = (zplus_poly(j1)?, zplus_poly(j2)?);
    let q = z1.kron(&z2).scale(&HPoly::monomial(rat(-1, 4), 2));
    let sum = nilpotent_series(&q, series::geometric(rat(1, 1)))?;
    primitive_sum(&z1, &z2).checked_mul(&sum)
}

/// `Δ(H) = H⊗1 + 1⊗H + 2H ⊗ Σ_{n≥1}(hZ+/2)^n + Σ_{n≥1}(-hZ+/2)^n ⊗ 2H`.
pub fn delta_h_series(j1: HalfInt, j2: HalfInt) -> Result<HMat> {
    let (h1, h2) = (jordanian::h_matrix(j1)?, jordanian::h_matrix(j2)?);
    let (z1, z2) = (zplus_poly(j1)?, zplus_poly(j2)?);
    let two = HPoly::constant(rat(2, 1));
    let tail = |z: &HMat, c: Rational| -> Result<HMat> {
        geometric_in_zplus(z, c)?.checked_sub(&Mat::identity(z.rows()))
    };
    let right = h1.scale(&two).kron(&tail(&z2, rat(1, 2))?);
    let left = tail(&z1, rat(-1, 2))?.kron(&h2.scale(&two));
    Ok(&(&primitive_sum(&h1, &h2) + &right) + &left)
}

/// Checks that `Δ` respects every relation on `V^(j1) ⊗ V^(j2)`, both in the
/// `H, X, Y` presentation and in the sl(2) presentation `H, Z±`.
pub fn verify_coprod_homomorphism(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("coproduct homomorphism, (2j1,2j2)=({},{})", j1.twice(), j2.twice()));
    let d = coproduct_irreps(j1, j2)?;
    d.check_relations(&mut report)?;
    let (zp, zm) = (d.z_plus()?, d.z_minus()?);
    let two = HPoly::constant(rat(2, 1));
    report.check_mat_eq("[ΔZ+, ΔZ-] = ΔH", &zp.commutator(&zm)?, &d.h);
    report.check_mat_eq("[ΔH, ΔZ+] = 2ΔZ+", &d.h.commutator(&zp)?, &zp.scale(&two));
    report.check_mat_eq("[ΔH, ΔZ-] = -2ΔZ-", &d.h.commutator(&zm)?, &zm.scale(&-&two));
    report.check_mat_eq("Δ(e^{hX}) = exp(hΔX)", &d.exp_hx, &jordanian::exp_of(&d.x, rat(1, 1))?);
    Ok(report)
}

/// Compares the series forms of `Δ(Z+)` and `Δ(H)` with the Kronecker constructions.
pub fn verify_series_forms(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("coproduct series forms, (2j1,2j2)=({},{})", j1.twice(), j2.twice()));
    report.check_mat_eq(
        "ΔZ+ series = (2/h) tanh(hΔX/2)",
        &delta_zplus_series(j1, j2)?,
        &coprod(Generator::ZPlus, j1, j2)?.matrix,
    );
    report.check_mat_eq(
        "ΔH series = H⊗t + t^{-1}⊗H",
        &delta_h_series(j1, j2)?,
        &coprod(Generator::H, j1, j2)?.matrix,
    );
    Ok(report)
}

/// Every coproduct at `h = 0` equals the primitive `x⊗1 + 1⊗x` of its classical limit.
pub fn verify_classical_limit(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("coproduct classical limit, (2j1,2j2)=({},{})", j1.twice(), j2.twice()));
    let d = coproduct_irreps(j1, j2)?;
    let (h1, h2) = (su2::h_matrix(j1)?, su2::h_matrix(j2)?);
    let (p1, p2) = (su2::zplus_matrix(j1)?, su2::zplus_matrix(j2)?);
    let (m1, m2) = (su2::zminus_matrix(j1)?, su2::zminus_matrix(j2)?);
    report.check_mat_eq("ΔH(0)", &at_h_zero(&d.h), &primitive_sum(&h1, &h2));
    report.check_mat_eq("ΔX(0)", &at_h_zero(&d.x), &primitive_sum(&p1, &p2));
    report.check_mat_eq("ΔY(0)", &at_h_zero(&d.y), &primitive_sum(&m1, &m2));
    report.check_mat_eq("ΔZ+(0)", &at_h_zero(&d.z_plus()?), &primitive_sum(&p1, &p2));
    report.check_mat_eq("ΔZ-(0)", &at_h_zero(&d.z_minus()?), &primitive_sum(&m1, &m2));
    Ok(report)
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ` on `V^(j1) ⊗ V^(j2) ⊗ V^(j3)`, with the default dimension cap.
pub fn verify_coassociativity(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> Result<Report> {
    verify_coassociativity_capped(j1, j2, j3, DEFAULT_TRIPLE_CAP)
}

pub fn verify_coassociativity_capped(j1: HalfInt, j2: HalfInt, j3: HalfInt, cap: usize) -> Result<Report> {
    let (a, b, c) = (GeneratorSet::irrep(j1)?, GeneratorSet::irrep(j2)?, GeneratorSet::irrep(j3)?);
    let dim = a.dim() * b.dim() * c.dim();
    if dim > cap {
        return Err(Error::TooLarge { dim, cap });
    }
    let mut report = Report::new(format!(
        "coassociativity, (2j1,2j2,2j3)=({},{},{})",
        j1.twice(),
        j2.twice(),
        j3.twice()
    ));
    let left = coproduct(&coproduct(&a, &b), &c);
    let right = coproduct(&a, &coproduct(&b, &c));
    report.check_mat_eq("H", &left.h, &right.h);
    report.check_mat_eq("X", &left.x, &right.x);
    report.check_mat_eq("Y", &left.y, &right.y);
    report.check_mat_eq("e^{hX}", &left.exp_hx, &right.exp_hx);
    Ok(report)
}

/// Spin triples with `dim ≤ cap`, `2j ≤ max_2j` each.
pub fn triples_within(max_2j: i64, cap: usize) -> Vec<(HalfInt, HalfInt, HalfInt)> {
    let mut out = Vec::new();
    for a in 0..=max_2j {
        for b in 0..=max_2j {
            for c in 0..=max_2j {
                if ((a + 1) * (b + 1) * (c + 1)) as usize <= cap {
                    out.push((HalfInt::from_twice(a), HalfInt::from_twice(b), HalfInt::from_twice(c)));
                }
            }
        }
    }
    out
}

/// Raising operators increase the total weight: entry `(r, c)` is nonzero only if `weight(r) > weight(c)`.
pub fn is_weight_raising(space: &TensorSpace, m: &HMat) -> bool {
    let total = |i: usize| {
        let (a, b) = space.labels(i);
        (a + b).twice()
    };
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| m[(r, c)].is_zero() || total(r) > total(c)))
}
