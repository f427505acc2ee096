//! Exact number towers and dense linear algebra.
//!
//! Everything above this layer works over one of three rings:
//! [`Rational`], [`SqrtRat`] (finite Q-combinations of square roots), and
//! [`HPoly`] (polynomials in the formal deformation parameter `h`).
//! The parameter `h` is never evaluated numerically. Every matrix function
//! used by the library terminates because its argument is nilpotent.

mod half_int;
mod hpoly;
mod mat;
mod rational;
pub mod render;
mod ring;
pub mod series;
mod sqrt_rat;

pub use half_int::HalfInt;
pub use hpoly::HPoly;
pub use mat::Mat;
pub use rational::{binomial, factorial, pochhammer, rat, Rational};
pub use render::{Render, Style};
pub use ring::Ring;
pub use series::nilpotent_series;
pub use sqrt_rat::{sqrt_rat, square_free_decompose, SqrtRat};

/// Matrix over polynomials in `h` with rational coefficients (v-basis operators).
pub type HMat = Mat<HPoly<Rational>>;

/// Matrix over polynomials in `h` with square-root coefficients (e-basis operators).
pub type EMat = Mat<HPoly<SqrtRat>>;

/// Embeds a v-basis polynomial matrix into the square-root coefficient ring.
pub fn lift_to_sqrt(m: &HMat) -> EMat {
    m.map(|p| p.map(|q| SqrtRat::from_rational(q.clone())))
}

/// Embeds a rational matrix as constant polynomials.
pub fn lift_to_poly<C: Ring>(m: &Mat<C>) -> Mat<HPoly<C>> {
    m.map(|c| HPoly::constant(c.clone()))
}

/// Evaluates every entry at `h = 0`.
pub fn at_h_zero<C: Ring>(m: &Mat<HPoly<C>>) -> Mat<C> {
    m.map(HPoly::at_zero)
}
