use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::Ring;
use crate::error::{Error, Result};

/// Dense row-major matrix over a ring.
///
/// Operators act on column vectors: column `c` holds the image of basis vector `c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Ring> Mat<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch { op: "from_rows", lhs: (r, c), rhs: (r, 0) });
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(entries: Vec<C>) -> Self {
        let n = entries.len();
        let mut m = Mat::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Matrix with the given vectors as columns.
    pub fn from_columns(columns: &[Vec<C>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch { op: "from_columns", lhs: (rows, cols), rhs: (0, cols) });
        }
        Ok(Mat::from_fn(rows, cols, |r, c| columns[c][r].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, c: usize) -> Vec<C> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[C] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = &self[(r, c)];
                    if r == c { e.is_one() } else { e.is_zero() }
                })
            })
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Mat<D> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map(|e| e.times(s))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs, "add")?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs, "sub")?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect(),
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { op: "mul", lhs: self.shape(), rhs: rhs.shape() });
        }
        let mut out: Mat<C> = Mat::zeros(self.rows, rhs.cols);
        // Operator matrices here are mostly triangular and sparse; skip zero entries.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a.times(b);
                        out.data[i * rhs.cols + j].plus_assign(&prod);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C]) -> Result<Vec<C>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { op: "apply", lhs: self.shape(), rhs: (v.len(), 1) });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = C::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc.plus_assign(&a.times(x));
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product with `self` as the slow index: `(A⊗B)[(i,k),(j,l)] = A[i,j] B[k,l]`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (rr, rc) = rhs.shape();
        let mut out = Mat::zeros(self.rows * rr, self.cols * rc);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rr {
                    for l in 0..rc {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rr + k, j * rc + l)] = a.times(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs)?.checked_sub(&rhs.checked_mul(self)?)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// `D M D^{-1}` for diagonal `D = diag(d)`, given the inverse entries `d_inv`.
    pub fn conjugate_diagonal(&self, d: &[C], d_inv: &[C]) -> Result<Self> {
        if !self.is_square() || d.len() != self.rows || d_inv.len() != self.rows {
            return Err(Error::DimensionMismatch { op: "conjugate_diagonal", lhs: self.shape(), rhs: (d.len(), d.len()) });
        }
        Ok(Mat::from_fn(self.rows, self.cols, |r, c| {
            let e = &self[(r, c)];
            if e.is_zero() { C::zero() } else { d[r].times(e).times(&d_inv[c]) }
        }))
    }

    /// Inverse of a unit lower-triangular matrix by forward substitution.
    pub fn unit_lower_inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        for r in 0..n {
            if !self[(r, r)].is_one() || (r + 1..n).any(|c| !self[(r, c)].is_zero()) {
                return Err(Error::NotUnitriangular);
            }
        }
        let mut inv = Mat::identity(n);
        // Solve L X = I column by column.
        for c in 0..n {
            for r in c + 1..n {
                let mut acc = C::zero();
                for k in c..r {
                    let l = &self[(r, k)];
                    if !l.is_zero() {
                        acc.plus_assign(&l.times(&inv[(k, c)]));
                    }
                }
                inv[(r, c)] = acc.negated();
            }
        }
        Ok(inv)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(Mat::rows).sum();
        let cols = blocks.iter().map(Mat::cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// First `(row, col)` where the two matrices differ (shape mismatch reports `(0, 0)`).
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self[(r, c)] != other[(r, c)])
    }

    fn same_shape(&self, rhs: &Self, op: &'static str) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch { op, lhs: self.shape(), rhs: rhs.shape() });
        }
        Ok(())
    }
}

impl<C> Index<(usize, usize)> for Mat<C> {
    type Output = C;
    fn index(&self, (r, c): (usize, usize)) -> &C {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<C> IndexMut<(usize, usize)> for Mat<C> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

// Operator forms panic on shape mismatch; use the `checked_*` methods for fallible code.
impl<'a, C: Ring> Add<&'a Mat<C>> for &'a Mat<C> {
    type Output = Mat<C>;
    fn add(self, rhs: &Mat<C>) -> Mat<C> {
        self.checked_add(rhs).expect("matrix add")
    }
}

impl<'a, C: Ring> Sub<&'a Mat<C>> for &'a Mat<C> {
    type Output = Mat<C>;
    fn sub(self, rhs: &Mat<C>) -> Mat<C> {
        self.checked_sub(rhs).expect("matrix sub")
    }
}

impl<'a, C: Ring> Mul<&'a Mat<C>> for &'a Mat<C> {
    type Output = Mat<C>;
    fn mul(self, rhs: &Mat<C>) -> Mat<C> {
        self.checked_mul(rhs).expect("matrix mul")
    }
}

impl<C: Ring> Neg for &Mat<C> {
    type Output = Mat<C>;
    fn neg(self) -> Mat<C> {
        self.map(Ring::negated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rational};

    fn m(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn kron_identities() {
        let i2 = Mat::<Rational>::identity(2);
        let i3 = Mat::<Rational>::identity(3);
        assert!(i2.kron(&i3).is_identity());
        assert_eq!(i2.kron(&i3).shape(), (6, 6));
    }

    #[test]
    fn kron_index_formula() {
        // (A⊗B)(e_i ⊗ e_j) = (A e_i) ⊗ (B e_j), with idx(i, j) = i * 3 + j.
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1, 0], &[5, 0, 0], &[0, 0, 7]]);
        let ab = a.kron(&b);
        for i in 0..2 {
            for j in 0..3 {
                let mut e = vec![rat(0, 1); 6];
                e[i * 3 + j] = rat(1, 1);
                let got = ab.apply(&e).unwrap();
                let ai = a.column(i);
                let bj = b.column(j);
                for p in 0..2 {
                    for q in 0..3 {
                        assert_eq!(got[p * 3 + q], &ai[p] * &bj[q]);
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch() {
        let a = m(&[&[1, 2]]);
        assert!(matches!(a.checked_mul(&a), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(a.checked_add(&m(&[&[1]])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn unit_lower_inverse_roundtrip() {
        let l = m(&[&[1, 0, 0], &[2, 1, 0], &[-3, 5, 1]]);
        let inv = l.unit_lower_inverse().unwrap();
        assert!((&l * &inv).is_identity());
        assert!((&inv * &l).is_identity());
        assert_eq!(m(&[&[1, 1], &[0, 1]]).unit_lower_inverse(), Err(Error::NotUnitriangular));
    }

    #[test]
    fn direct_sum_and_commutator() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.commutator(&b).unwrap(), m(&[&[1, 0], &[0, -1]]));
        let s = Mat::direct_sum(&[m(&[&[2]]), a.clone()]);
        assert_eq!(s, m(&[&[2, 0, 0], &[0, 0, 1], &[0, 0, 0]]));
    }
}
