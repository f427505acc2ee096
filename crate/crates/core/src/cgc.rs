//! Clebsch-Gordan coefficients: classical su(2) values and the deformed
//! coefficients of `U_h(sl(2))`.
//!
//! The coupled vectors are
//! `e^{(j1 j2) j}_m = Σ_{n1,n2} 𝒞^{j1,j2,j}_{n1,n2,m}(h) e_{n1} ⊗ e_{n2}` with
//! `𝒞^{j1,j2,j}_{n1,n2,m} = Σ_{m1+m2=m} C^{j1,j2,j}_{m1,m2,m} A^{m1,m2}_{n1-m1,n2-m2}`,
//! where `A` is the auxiliary-basis coefficient `a` rewritten in the e-basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::auxbasis::{a_coeff, w_matrix, w_vector};
use crate::error::Result;
use crate::exact::{
    at_h_zero, factorial, lift_to_sqrt, EMat, HPoly, HalfInt, Mat, Rational, Ring, SqrtRat, Style,
};
use crate::jordanian::{self, Generator};
use crate::report::Report;
use crate::su2;
use crate::tensor::{coprod, TensorSpace};

pub type EPoly = HPoly<SqrtRat>;

fn fact(n: i64) -> BigInt {
    factorial(n as u64)
}

fn in_range(j: HalfInt, m: HalfInt) -> bool {
    j.twice() >= 0 && m.abs() <= j && j.int_diff(m).is_some()
}

/// `true` when `j` appears in `V^(j1) ⊗ V^(j2)`.
pub fn is_coupled_spin(j1: HalfInt, j2: HalfInt, j: HalfInt) -> bool {
    j >= (j1 - j2).abs() && j <= j1 + j2 && (j1 + j2).int_diff(j).is_some()
}

/// Spins `j1+j2, j1+j2-1, ..., |j1-j2|`.
pub fn coupled_spins(j1: HalfInt, j2: HalfInt) -> Vec<HalfInt> {
    let lo = (j1 - j2).abs();
    let mut out = Vec::new();
    let mut j = j1 + j2;
    while j >= lo {
        out.push(j);
        j = j - 1;
    }
    out
}

/// Classical su(2) Clebsch-Gordan coefficient `C^{j1,j2,j}_{m1,m2,m}` (Condon-Shortley phase).
pub fn classical_cgc(j1: HalfInt, j2: HalfInt, j: HalfInt, m1: HalfInt, m2: HalfInt, m: HalfInt) -> SqrtRat {
    if m1 + m2 != m
        || !in_range(j1, m1)
        || !in_range(j2, m2)
        || !in_range(j, m)
        || !is_coupled_spin(j1, j2, j)
    {
        return SqrtRat::zero();
    }
    let i = |x: HalfInt| x.to_integer().expect("integral by the selection rules");
    let (a, b, c) = (i(j1 + j2 - j), i(j1 - j2 + j), i(j2 - j1 + j));
    let prefactor = Rational::new(
        fact(a) * fact(b) * fact(c) * fact(i(j1 + m1)) * fact(i(j1 - m1)) * fact(i(j2 + m2))
            * fact(i(j2 - m2))
            * fact(i(j + m))
            * fact(i(j - m))
            * BigInt::from(j.twice() + 1),
        fact(i(j1 + j2 + j) + 1),
    );
    let args = |k: i64| {
        [
            k,
            a - k,
            i(j1 - m1) - k,
            i(j2 + m2) - k,
            i(j - j2 + m1) + k,
            i(j - j1 - m2) + k,
        ]
    };
    let k_min = 0.max(-i(j - j2 + m1)).max(-i(j - j1 - m2));
    let k_max = a.min(i(j1 - m1)).min(i(j2 + m2));
    let mut sum = Rational::zero();
    for k in k_min..=k_max {
        let den: BigInt = args(k).iter().map(|&n| fact(n)).product();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sum += Rational::new(BigInt::from(sign), den);
    }
    SqrtRat::sqrt(&prefactor).scale(&sum)
}

/// Classical coefficient in the v-basis: `(α_{j,m} / (α_{j1,m1} α_{j2,m2})) C`.
pub fn v_basis_cgc(j1: HalfInt, j2: HalfInt, j: HalfInt, m1: HalfInt, m2: HalfInt, m: HalfInt) -> Result<SqrtRat> {
    let c = classical_cgc(j1, j2, j, m1, m2, m);
    if c.is_zero() {
        return Ok(c);
    }
    let ratio = su2::alpha_squared(j, m)? / (su2::alpha_squared(j1, m1)? * su2::alpha_squared(j2, m2)?);
    Ok(c * SqrtRat::sqrt(&ratio))
}

/// `A^{m1,m2}_{k,l} = a^{m1,m2}_{k,l} α_{j1,m1+k} α_{j2,m2+l} / (α_{j1,m1} α_{j2,m2})`,
/// zero when any of the four weights leaves its range.
pub fn a_cap(j1: HalfInt, j2: HalfInt, m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> Result<EPoly> {
    if k < 0 || l < 0 || !in_range(j1, m1) || !in_range(j2, m2) || !in_range(j1, m1 + k) || !in_range(j2, m2 + l) {
        return Ok(HPoly::zero());
    }
    let a = a_coeff(m1, m2, k, l);
    if a.is_zero() {
        return Ok(HPoly::zero());
    }
    let ratio = su2::alpha_squared(j1, m1 + k)? * su2::alpha_squared(j2, m2 + l)?
        / (su2::alpha_squared(j1, m1)? * su2::alpha_squared(j2, m2)?);
    let s = SqrtRat::sqrt(&ratio);
    Ok(a.map(|q| s.scale(q)))
}

/// `𝒞^{j1,j2,j}_{n1,n2,m}(h)` by direct summation over `m1 + m2 = m`.
pub fn deformed_cgc(j1: HalfInt, j2: HalfInt, j: HalfInt, n1: HalfInt, n2: HalfInt, m: HalfInt) -> Result<EPoly> {
    let mut acc = EPoly::zero();
    for m1 in j1.weights() {
        let m2 = m - m1;
        let c = classical_cgc(j1, j2, j, m1, m2, m);
        if c.is_zero() {
            continue;
        }
        let (Some(k), Some(l)) = (n1.int_diff(m1), n2.int_diff(m2)) else { continue };
        let a = a_cap(j1, j2, m1, m2, k, l)?;
        acc.plus_assign(&a.map(|x| x.times(&c)));
    }
    Ok(acc)
}

/// Key of a table entry: `(j, n1, n2, m)`.
pub type CgcKey = (HalfInt, HalfInt, HalfInt, HalfInt);

/// All deformed coefficients of `V^(j1) ⊗ V^(j2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CgcTable {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub entries: BTreeMap<CgcKey, EPoly>,
}

impl CgcTable {
    pub fn get(&self, j: HalfInt, n1: HalfInt, n2: HalfInt, m: HalfInt) -> Option<&EPoly> {
        self.entries.get(&(j, n1, n2, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries that are not identically zero.
    pub fn nonzero(&self) -> impl Iterator<Item = (&CgcKey, &EPoly)> {
        self.entries.iter().filter(|(_, v)| !v.is_zero())
    }
}

pub fn deformed_cgc_table(j1: HalfInt, j2: HalfInt) -> Result<CgcTable> {
    let space = TensorSpace::new(j1, j2)?;
    let mut entries = BTreeMap::new();
    for j in coupled_spins(j1, j2) {
        for m in j.weights() {
            for (n1, n2) in space.basis() {
                entries.insert((j, n1, n2, m), deformed_cgc(j1, j2, j, n1, n2, m)?);
            }
        }
    }
    Ok(CgcTable { j1, j2, entries })
}

/// `α_{j1,n1} α_{j2,n2}` per tensor index: `v_{n1} ⊗ v_{n2} = scale · e_{n1} ⊗ e_{n2}`.
pub fn tensor_alphas(j1: HalfInt, j2: HalfInt) -> Result<Vec<SqrtRat>> {
    let (a1, a2) = (su2::alphas(j1)?, su2::alphas(j2)?);
    Ok(a1.iter().flat_map(|x| a2.iter().map(move |y| x.times(y))).collect())
}

/// Coordinates of `e^{(j1 j2) j}_m` in the `e ⊗ e` basis (tensor index order), from the table formula.
pub fn coupled_vector(j1: HalfInt, j2: HalfInt, j: HalfInt, m: HalfInt) -> Result<Vec<EPoly>> {
    let space = TensorSpace::new(j1, j2)?;
    space.basis().map(|(n1, n2)| deformed_cgc(j1, j2, j, n1, n2, m)).collect()
}

/// The same vector built from the w-basis: `Σ C^{j}_{m1,m2,m} w_{m1,m2} / (α_{j1,m1} α_{j2,m2})`,
/// with `w` rewritten from `v ⊗ v` into `e ⊗ e` coordinates.
pub fn coupled_vector_via_w(j1: HalfInt, j2: HalfInt, j: HalfInt, m: HalfInt) -> Result<Vec<EPoly>> {
    let space = TensorSpace::new(j1, j2)?;
    let scales = tensor_alphas(j1, j2)?;
    let mut out = vec![EPoly::zero(); space.dim()];
    for m1 in j1.weights() {
        let m2 = m - m1;
        let c = classical_cgc(j1, j2, j, m1, m2, m);
        if c.is_zero() {
            continue;
        }
        let base = su2::alpha(j1, m1)?.times(&su2::alpha(j2, m2)?);
        let w = w_vector(j1, j2, m1, m2)?;
        for (i, coeff) in w.coords.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let factor = c.times(&scales[i]).checked_div(&base)?;
            out[i].plus_assign(&coeff.map(|q| factor.scale(q)));
        }
    }
    Ok(out)
}

/// Column labels `(j, m)`: `j` descending, `m` descending.
pub fn coupled_labels(j1: HalfInt, j2: HalfInt) -> Vec<(HalfInt, HalfInt)> {
    coupled_spins(j1, j2).into_iter().flat_map(|j| j.weights().rev().map(move |m| (j, m))).collect()
}

/// Row labels `(n1, n2)`: `n1` descending, then `n2` descending.
pub fn product_labels(j1: HalfInt, j2: HalfInt) -> Result<Vec<(HalfInt, HalfInt)>> {
    let space = TensorSpace::new(j1, j2)?;
    Ok(space.basis().collect::<Vec<_>>().into_iter().rev().collect())
}

/// The coupling matrix `M(h)`, rows by [`product_labels`], columns by [`coupled_labels`].
pub fn coupling_matrix(j1: HalfInt, j2: HalfInt) -> Result<EMat> {
    let cols = coupled_labels(j1, j2)
        .into_iter()
        .map(|(j, m)| coupled_vector(j1, j2, j, m).map(|mut v| {
            v.reverse();
            v
        }))
        .collect::<Result<Vec<_>>>()?;
    Mat::from_columns(&cols)
}

/// Coupled vectors as columns in tensor index order, grouped by `j` descending with `m` ascending
/// inside each block, so that `Δ(g) U = U (⊕_j g^{(j)})`.
fn coupled_block_matrix(j1: HalfInt, j2: HalfInt) -> Result<EMat> {
    let mut cols = Vec::new();
    for j in coupled_spins(j1, j2) {
        for m in j.weights() {
            cols.push(coupled_vector(j1, j2, j, m)?);
        }
    }
    Mat::from_columns(&cols)
}

fn irrep_e(generator: Generator, j: HalfInt) -> Result<EMat> {
    let v = jordanian::generator_matrix(generator, j)?.matrix;
    su2::v_to_e_operator(&lift_to_sqrt(&v), &su2::alphas(j)?)
}

/// Checks that `Δ(g)` acts on the coupled vectors like `g` on each `V^(j)` in the e-basis,
/// for `g` in `H, Z+, Z-, X, Y`.
pub fn verify_coupled_action(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("coupled action, (2j1,2j2)=({},{})", j1.twice(), j2.twice()));
    let u = coupled_block_matrix(j1, j2)?;
    let scales = tensor_alphas(j1, j2)?;
    for g in [Generator::H, Generator::ZPlus, Generator::ZMinus, Generator::X, Generator::Y] {
        let delta = su2::v_to_e_operator(&lift_to_sqrt(&coprod(g, j1, j2)?.matrix), &scales)?;
        let blocks = coupled_spins(j1, j2)
            .into_iter()
            .map(|j| irrep_e(g, j))
            .collect::<Result<Vec<_>>>()?;
        report.check_mat_eq(
            format!("Δ({g}) on coupled vectors = standard action"),
            &delta.checked_mul(&u)?,
            &u.checked_mul(&Mat::direct_sum(&blocks))?,
        );
    }
    Ok(report)
}

/// Compares the two constructions of every coupled vector.
pub fn verify_path_independence(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let mut report = Report::new(format!("coupled vector paths, (2j1,2j2)=({},{})", j1.twice(), j2.twice()));
    for j in coupled_spins(j1, j2) {
        for m in j.weights() {
            let name = format!("j={j} m={m}");
            if coupled_vector(j1, j2, j, m)? == coupled_vector_via_w(j1, j2, j, m)? {
                report.pass(name);
            } else {
                report.fail(name, "table sum and w-basis construction differ");
            }
        }
    }
    Ok(report)
}

/// Degree concentration and selection rules of the deformed table:
/// zero when `m > n1+n2`, classical when `m = n1+n2`, support in `{n1+n2-m}` otherwise.
pub fn verify_structure(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let table = deformed_cgc_table(j1, j2)?;
    verify_table_structure(&table)
}

pub fn verify_table_structure(table: &CgcTable) -> Result<Report> {
    let (j1, j2) = (table.j1, table.j2);
    let mut report = Report::new(format!("table structure, (2j1,2j2)=({},{})", j1.twice(), j2.twice()));
    let mut above: Option<String> = None;
    let mut diagonal: Option<String> = None;
    let mut support: Option<String> = None;
    let mut classical: Option<String> = None;
    for (&(j, n1, n2, m), value) in &table.entries {
        let label = || format!("(j,n1,n2,m)=({j},{n1},{n2},{m}): {}", value.render(Style::Text));
        let excess = (n1 + n2 - m).twice() / 2;
        if excess < 0 && !value.is_zero() && above.is_none() {
            above = Some(label());
        }
        if excess == 0 && *value != HPoly::constant(classical_cgc(j1, j2, j, n1, n2, m)) && diagonal.is_none() {
            diagonal = Some(label());
        }
        if value.support().any(|d| d as i64 != excess) && support.is_none() {
            support = Some(label());
        }
        if value.at_zero() != classical_cgc(j1, j2, j, n1, n2, m) && classical.is_none() {
            classical = Some(label());
        }
    }
    let mut record = |name: &str, failure: Option<String>| match failure {
        None => report.pass(name),
        Some(d) => report.fail(name, d),
    };
    record("m > n1+n2 gives zero", above);
    record("m = n1+n2 gives the classical value", diagonal);
    record("support in degree n1+n2-m", support);
    record("h = 0 gives the classical table", classical);
    Ok(report)
}

/// An off-identity Gramian entry: row label `(j, m)`, column label `(j', m')`, value.
pub type Witness = ((HalfInt, HalfInt), (HalfInt, HalfInt), EPoly);

/// Outcome of the orthogonality analysis of the coupling matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct NonOrthogonality {
    pub report: Report,
    /// First Gramian entry that differs from the identity.
    pub witness: Option<Witness>,
}

/// Forms `M(h)` and its Gramian `M^T M`. At `h = 0` the Gramian must be the identity;
/// for `h ≠ 0` the first off-identity entry (if any) is reported. Invertibility of `M`
/// is shown by building `M^{-1} = C^T A^{-1}` from the classical coupling matrix and the
/// unitriangular auxiliary basis.
pub fn demonstrate_non_orthogonality(j1: HalfInt, j2: HalfInt) -> Result<NonOrthogonality> {
    let mut report = Report::new(format!("orthogonality, (2j1,2j2)=({},{})", j1.twice(), j2.twice()));
    let m = coupling_matrix(j1, j2)?;
    let gram = m.transpose().checked_mul(&m)?;
    let n = m.rows();
    report.check_mat_eq("Gramian at h=0 is the identity", &at_h_zero(&gram), &Mat::<SqrtRat>::identity(n));

    let labels = coupled_labels(j1, j2);
    let witness = gram.first_difference(&Mat::identity(n)).map(|(r, c)| (labels[r], labels[c], gram[(r, c)].clone()));
    match &witness {
        Some((a, b, v)) => report.pass(format!(
            "Gramian differs from the identity at ({},{})x({},{}): {}",
            a.0,
            a.1,
            b.0,
            b.1,
            v.render(Style::Text)
        )),
        None => report.pass("Gramian equals the identity for this pair"),
    }

    // M = A_e C in tensor order, where A_e has columns e^{j1,j2}_{m1,m2} and C is classical.
    let scales = tensor_alphas(j1, j2)?;
    let a_e = su2::v_to_e_operator(&lift_to_sqrt(&w_matrix(j1, j2)?), &scales)?;
    let a_inv = su2::v_to_e_operator(&lift_to_sqrt(&w_matrix(j1, j2)?.unit_lower_inverse()?), &scales)?;
    let space = TensorSpace::new(j1, j2)?;
    let coupled = labels.clone();
    let c = Mat::from_fn(n, n, |r, col| {
        let (m1, m2) = space.labels(r);
        let (j, mm) = coupled[col];
        HPoly::constant(classical_cgc(j1, j2, j, m1, m2, mm))
    });
    let mut m_tensor = m.clone();
    for r in 0..n {
        for col in 0..n {
            m_tensor[(r, col)] = m[(n - 1 - r, col)].clone();
        }
    }
    report.check_mat_eq("M = A C", &m_tensor, &a_e.checked_mul(&c)?);
    let m_inv = c.transpose().checked_mul(&a_inv)?;
    report.check_mat_eq("(C^T A^{-1}) M = 1", &m_inv.checked_mul(&m_tensor)?, &Mat::identity(n));
    Ok(NonOrthogonality { report, witness })
}

/// Classical coupling matrix at `h = 0` as exact values (used by tests and examples).
pub fn classical_coupling_matrix(j1: HalfInt, j2: HalfInt) -> Result<Mat<SqrtRat>> {
    Ok(at_h_zero(&coupling_matrix(j1, j2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_traits::One;

    fn hi(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn sq(n: i64, d: i64) -> SqrtRat {
        SqrtRat::sqrt(&rat(n, d))
    }

    fn pairs(max_total: i64) -> Vec<(HalfInt, HalfInt)> {
        let mut out = Vec::new();
        for a in 0..=max_total {
            for b in 0..=(max_total - a) {
                out.push((hi(a), hi(b)));
            }
        }
        out
    }

    #[test]
    fn textbook_values() {
        assert_eq!(classical_cgc(hi(1), hi(1), hi(2), hi(1), hi(1), hi(2)), SqrtRat::one());
        assert_eq!(classical_cgc(hi(1), hi(1), hi(0), hi(1), hi(-1), hi(0)), sq(1, 2));
        assert_eq!(classical_cgc(hi(1), hi(1), hi(0), hi(-1), hi(1), hi(0)), -sq(1, 2));
        assert_eq!(classical_cgc(hi(2), hi(1), hi(3), hi(0), hi(1), hi(1)), sq(2, 3));
        assert_eq!(classical_cgc(hi(2), hi(1), hi(3), hi(2), hi(-1), hi(1)), sq(1, 3));
        assert_eq!(classical_cgc(hi(2), hi(1), hi(1), hi(2), hi(-1), hi(1)), sq(2, 3));
        assert_eq!(classical_cgc(hi(2), hi(1), hi(1), hi(0), hi(1), hi(1)), -sq(1, 3));
        assert_eq!(classical_cgc(hi(4), hi(4), hi(6), hi(4), hi(0), hi(4)), sq(1, 2));
    }

    #[test]
    fn selection_rules_give_zero() {
        assert!(classical_cgc(hi(1), hi(1), hi(2), hi(1), hi(1), hi(0)).is_zero());
        assert!(classical_cgc(hi(1), hi(1), hi(4), hi(1), hi(1), hi(2)).is_zero());
        assert!(classical_cgc(hi(2), hi(2), hi(1), hi(0), hi(0), hi(0)).is_zero());
        assert!(classical_cgc(hi(2), hi(2), hi(2), hi(4), hi(-2), hi(2)).is_zero());
    }

    #[test]
    fn classical_orthonormality_brute_force() {
        for (j1, j2) in pairs(6) {
            let labels = coupled_labels(j1, j2);
            let space = TensorSpace::new(j1, j2).unwrap();
            for &(ja, ma) in &labels {
                for &(jb, mb) in &labels {
                    let dot: SqrtRat = space
                        .basis()
                        .map(|(m1, m2)| classical_cgc(j1, j2, ja, m1, m2, ma).times(&classical_cgc(j1, j2, jb, m1, m2, mb)))
                        .fold(SqrtRat::zero(), |a, b| a + b);
                    let expect = if (ja, ma) == (jb, mb) { SqrtRat::one() } else { SqrtRat::zero() };
                    assert_eq!(dot, expect, "({j1},{j2}) ({ja},{ma}) ({jb},{mb})");
                }
            }
            for (m1, m2) in space.basis() {
                let s: SqrtRat = labels
                    .iter()
                    .map(|&(j, m)| classical_cgc(j1, j2, j, m1, m2, m))
                    .map(|c| c.times(&c))
                    .fold(SqrtRat::zero(), |a, b| a + b);
                assert_eq!(s, SqrtRat::one());
            }
        }
    }

    #[test]
    fn classical_columns_follow_lowering() {
        // δ(z-) e^{(j)}_m = sqrt((j+m)(j-m+1)) e^{(j)}_{m-1} on classical coupled states.
        for (j1, j2) in pairs(6) {
            let space = TensorSpace::new(j1, j2).unwrap();
            let lower = crate::tensor::primitive_sum(&su2::zminus_matrix_e(j1).unwrap(), &su2::zminus_matrix_e(j2).unwrap());
            for j in coupled_spins(j1, j2) {
                for m in j.weights().skip(1) {
                    let col = |m: HalfInt| -> Vec<SqrtRat> {
                        space.basis().map(|(m1, m2)| classical_cgc(j1, j2, j, m1, m2, m)).collect()
                    };
                    let lhs = lower.apply(&col(m)).unwrap();
                    let c = su2::ladder_coefficient(j, m, false);
                    let rhs: Vec<SqrtRat> = col(m - 1).iter().map(|x| x.times(&c)).collect();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn v_basis_columns_follow_lowering() {
        for (j1, j2) in [(hi(1), hi(1)), (hi(2), hi(1)), (hi(3), hi(2))] {
            let space = TensorSpace::new(j1, j2).unwrap();
            let lower = crate::tensor::primitive_sum(&su2::zminus_matrix(j1).unwrap(), &su2::zminus_matrix(j2).unwrap())
                .map(|q| SqrtRat::from(q.clone()));
            for j in coupled_spins(j1, j2) {
                let col = |m: HalfInt| -> Vec<SqrtRat> {
                    space.basis().map(|(m1, m2)| v_basis_cgc(j1, j2, j, m1, m2, m).unwrap()).collect()
                };
                for m in j.weights().skip(1) {
                    let f = su2::lowering_factor(j, m);
                    let rhs: Vec<SqrtRat> = col(m - 1).iter().map(|x| x.scale(&rat(f, 1))).collect();
                    assert_eq!(lower.apply(&col(m)).unwrap(), rhs);
                }
            }
        }
        assert_eq!(v_basis_cgc(hi(1), hi(1), hi(2), hi(1), hi(-1), hi(0)).unwrap(), sq(1, 2));
        assert_eq!(v_basis_cgc(hi(1), hi(1), hi(2), hi(1), hi(1), hi(2)).unwrap(), sq(2, 1));
    }

    #[test]
    fn worked_deformed_values() {
        let (two, three) = (hi(4), hi(6));
        assert_eq!(deformed_cgc(two, two, three, hi(4), hi(0), hi(4)).unwrap(), HPoly::constant(sq(1, 2)));
        assert!(deformed_cgc(two, two, three, hi(4), hi(0), hi(6)).unwrap().is_zero());
        let expect = HPoly::monomial(sq(1, 5).scale(&rat(-18, 1)), 3);
        assert_eq!(deformed_cgc(two, two, three, hi(4), hi(0), hi(-2)).unwrap(), expect);
    }

    #[test]
    fn table_dimensions() {
        for (j1, j2) in pairs(5) {
            let total: usize = coupled_spins(j1, j2).iter().map(|j| j.twice() as usize + 1).sum();
            let d = TensorSpace::new(j1, j2).unwrap().dim();
            assert_eq!(total, d);
            assert_eq!(deformed_cgc_table(j1, j2).unwrap().len(), d * d);
        }
    }

    #[test]
    fn top_state_is_pure() {
        let (j1, j2) = (hi(3), hi(2));
        let v = coupled_vector(j1, j2, j1 + j2, j1 + j2).unwrap();
        assert!(v.last().unwrap().is_one());
        assert!(v[..v.len() - 1].iter().all(|p| p.is_zero()));
    }

    #[test]
    fn paths_agree() {
        for (j1, j2) in pairs(5) {
            let r = verify_path_independence(j1, j2).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn coupled_action_small() {
        for (a, b) in [(0, 3), (1, 1), (2, 1), (3, 2)] {
            let r = verify_coupled_action(hi(a), hi(b)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn structure_small() {
        for (j1, j2) in pairs(6) {
            let r = verify_structure(j1, j2).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn orthogonality_analysis() {
        let half = demonstrate_non_orthogonality(hi(1), hi(1)).unwrap();
        assert!(half.report.passed(), "{}", half.report);
        let two = demonstrate_non_orthogonality(hi(4), hi(4)).unwrap();
        assert!(two.report.passed(), "{}", two.report);
        let (_, _, value) = two.witness.expect("the Gramian deviates for (2,2)");
        assert!(value.support().any(|d| d > 0));
    }
}
