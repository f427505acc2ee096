//! Classical sl(2) irreducible representations `V^(j)`.
//!
//! Two bases are used. In the v-basis the matrix elements are integers:
//! `H v_m = 2m v_m`, `Z+ v_m = v_{m+1}`, `Z- v_m = (j+m)(j-m+1) v_{m-1}`.
//! The e-basis is related by `v_m = alpha_{j,m} e_m` with
//! `alpha_{j,m} = sqrt((j+m)!/(j-m)!)` and carries the standard
//! Condon-Shortley matrix elements. Basis vectors are ordered by ascending
//! `m`, so index `i` holds weight `m = -j + i`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, HalfInt, Mat, Rational, Ring, SqrtRat};

/// The representation space `V^(j)` of dimension `2j+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RepSpace {
    j: HalfInt,
}

impl RepSpace {
    pub fn new(j: HalfInt) -> Result<Self> {
        if j.twice() < 0 {
            return Err(Error::NegativeSpin(j.twice()));
        }
        Ok(RepSpace { j })
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.j.twice() as usize + 1
    }

    pub fn contains(&self, m: HalfInt) -> bool {
        m.abs() <= self.j && self.j.int_diff(m).is_some()
    }

    /// Basis index of weight `m`, if it belongs to the space.
    pub fn index(&self, m: HalfInt) -> Option<usize> {
        self.contains(m).then(|| (m + self.j).to_integer().unwrap() as usize)
    }

    pub fn weight(&self, index: usize) -> HalfInt {
        HalfInt::from_twice(2 * index as i64 - self.j.twice())
    }

    pub fn weights(&self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        self.j.weights()
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(j+m)(j-m+1)`, the v-basis lowering factor.
pub fn lowering_factor(j: HalfInt, m: HalfInt) -> i64 {
    ((j + m).twice() * (j - m + 1).twice()) / 4
}

pub fn h_matrix(j: HalfInt) -> Result<Mat<Rational>> {
    let space = RepSpace::new(j)?;
    Ok(Mat::diagonal(space.weights().map(|m| int(m.twice())).collect()))
}

pub fn zplus_matrix(j: HalfInt) -> Result<Mat<Rational>> {
    let space = RepSpace::new(j)?;
    let n = space.dim();
    Ok(Mat::from_fn(n, n, |r, c| if r == c + 1 { Rational::one() } else { Rational::zero() }))
}

pub fn zminus_matrix(j: HalfInt) -> Result<Mat<Rational>> {
    let space = RepSpace::new(j)?;
    let n = space.dim();
    Ok(Mat::from_fn(n, n, |r, c| {
        if r + 1 == c {
            int(lowering_factor(j, space.weight(c)))
        } else {
            Rational::zero()
        }
    }))
}

/// `alpha_{j,m}^2 = (j+m)!/(j-m)!`.
pub fn alpha_squared(j: HalfInt, m: HalfInt) -> Result<Rational> {
    let space = RepSpace::new(j)?;
    if !space.contains(m) {
        return Err(Error::WeightOutOfRange { j, m });
    }
    let up = (j + m).to_integer().unwrap() as u64;
    let down = (j - m).to_integer().unwrap() as u64;
    Ok(Rational::new(factorial(up), factorial(down)))
}

/// `alpha_{j,m} = sqrt((j+m)!/(j-m)!)`.
pub fn alpha(j: HalfInt, m: HalfInt) -> Result<SqrtRat> {
    Ok(SqrtRat::sqrt(&alpha_squared(j, m)?))
}

/// All `alpha_{j,m}` in basis order.
pub fn alphas(j: HalfInt) -> Result<Vec<SqrtRat>> {
    RepSpace::new(j)?.weights().map(|m| alpha(j, m)).collect()
}

/// `diag(alpha_{j,m})`: a vector with v-coordinates `c` has e-coordinates `diag(alpha) c`.
pub fn v_to_e_change(j: HalfInt) -> Result<Mat<SqrtRat>> {
    Ok(Mat::diagonal(alphas(j)?))
}

/// Rewrites a v-basis operator in the e-basis given the per-index rescalings
/// `v_i = scale_i e_i`: `O_e[r][c] = scale_r O_v[r][c] / scale_c`.
pub fn v_to_e_operator<C: Ring + From<SqrtRat>>(op: &Mat<C>, scales: &[SqrtRat]) -> Result<Mat<C>> {
    let d: Vec<C> = scales.iter().cloned().map(C::from).collect();
    let d_inv = scales
        .iter()
        .map(|s| s.inverse().map(C::from))
        .collect::<Result<Vec<C>>>()?;
    op.conjugate_diagonal(&d, &d_inv)
}

pub fn h_matrix_e(j: HalfInt) -> Result<Mat<SqrtRat>> {
    v_to_e_operator(&h_matrix(j)?.map(|q| SqrtRat::from(q.clone())), &alphas(j)?)
}

pub fn zplus_matrix_e(j: HalfInt) -> Result<Mat<SqrtRat>> {
    v_to_e_operator(&zplus_matrix(j)?.map(|q| SqrtRat::from(q.clone())), &alphas(j)?)
}

pub fn zminus_matrix_e(j: HalfInt) -> Result<Mat<SqrtRat>> {
    v_to_e_operator(&zminus_matrix(j)?.map(|q| SqrtRat::from(q.clone())), &alphas(j)?)
}

/// `sqrt((j -+ m)(j +- m + 1))`, the e-basis ladder coefficient for `Z±` acting on `e_m`.
pub fn ladder_coefficient(j: HalfInt, m: HalfInt, raising: bool) -> SqrtRat {
    let (a, b) = if raising { (j - m, j + m + 1) } else { (j + m, j - m + 1) };
    SqrtRat::sqrt(&int(a.twice() * b.twice() / 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn hi(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_matrix(hi(0)).unwrap(), Mat::diagonal(vec![rat(0, 1)]));
        assert_eq!(h_matrix(hi(1)).unwrap(), Mat::diagonal(vec![rat(-1, 1), rat(1, 1)]));
        assert_eq!(
            h_matrix(hi(2)).unwrap(),
            Mat::diagonal(vec![rat(-2, 1), rat(0, 1), rat(2, 1)])
        );
        assert_eq!(h_matrix(hi(-1)), Err(Error::NegativeSpin(-1)));
    }

    #[test]
    fn ladder_boundaries() {
        let zp = zplus_matrix(hi(1)).unwrap();
        assert_eq!(zp.column(0), vec![rat(0, 1), rat(1, 1)]);
        assert_eq!(zp.column(1), vec![rat(0, 1), rat(0, 1)]);
        // j=1: Z- v_0 = 2 v_{-1}
        let zm = zminus_matrix(hi(2)).unwrap();
        assert_eq!(zm.column(1), vec![rat(2, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(zm.column(0), vec![rat(0, 1); 3]);
    }

    #[test]
    fn sl2_relations() {
        for tj in 0..=8 {
            let j = hi(tj);
            let (h, zp, zm) = (h_matrix(j).unwrap(), zplus_matrix(j).unwrap(), zminus_matrix(j).unwrap());
            assert_eq!(zp.commutator(&zm).unwrap(), h);
            assert_eq!(h.commutator(&zp).unwrap(), zp.scale(&rat(2, 1)));
            assert_eq!(h.commutator(&zm).unwrap(), zm.scale(&rat(-2, 1)));
            let n = (tj + 1) as u32;
            assert!(zp.pow(n).unwrap().is_zero());
            assert!(zm.pow(n).unwrap().is_zero());
        }
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(hi(2), hi(2)).unwrap(), SqrtRat::sqrt(&rat(2, 1)));
        for tj in 0..=8 {
            let j = hi(tj);
            // alpha_{j,-j} = 1/sqrt((2j)!)
            let lowest = alpha(j, -j).unwrap();
            let expect = Rational::from_integer(factorial(tj as u64)).recip();
            assert_eq!(lowest.square_rational().unwrap(), expect);
        }
        assert!(matches!(alpha(hi(2), hi(4)), Err(Error::WeightOutOfRange { .. })));
        assert!(matches!(alpha(hi(2), hi(1)), Err(Error::WeightOutOfRange { .. })));
    }

    #[test]
    fn e_basis_matches_condon_shortley() {
        for tj in 0..=8 {
            let j = hi(tj);
            let space = RepSpace::new(j).unwrap();
            let zp = zplus_matrix_e(j).unwrap();
            let zm = zminus_matrix_e(j).unwrap();
            assert_eq!(zp.transpose(), zm);
            for (c, m) in space.weights().enumerate() {
                if let Some(r) = space.index(m + 1) {
                    assert_eq!(zp[(r, c)], ladder_coefficient(j, m, true));
                }
                if let Some(r) = space.index(m - 1) {
                    assert_eq!(zm[(r, c)], ladder_coefficient(j, m, false));
                }
            }
            assert_eq!(h_matrix_e(j).unwrap(), h_matrix(j).unwrap().map(|q| SqrtRat::from(q.clone())));
        }
        // j = 1/2: e-basis Z+ has entry 1
        assert_eq!(zplus_matrix_e(hi(1)).unwrap()[(1, 0)], SqrtRat::one());
    }
}
