//! Human-readable text and LaTeX forms for exact values.

use num_bigint::BigUint;
use num_traits::{One, Signed};

use super::{HPoly, Rational, Ring, SqrtRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

/// A coefficient split into sign and magnitude, ready to prefix a power of `h`.
pub struct Parts {
    pub negative: bool,
    pub magnitude: String,
    pub is_unit: bool,
    /// The magnitude is a sum and must be parenthesised before a factor.
    pub compound: bool,
}

pub trait Render: Ring {
    fn parts(&self, style: Style) -> Parts;

    fn render(&self, style: Style) -> String {
        let p = self.parts(style);
        if p.negative { format!("-{}", p.magnitude) } else { p.magnitude }
    }
}

fn rational_magnitude(q: &Rational, style: Style) -> String {
    let q = q.abs();
    if q.is_integer() {
        return q.numer().to_string();
    }
    match style {
        Style::Text => format!("{}/{}", q.numer(), q.denom()),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom()),
    }
}

impl Render for Rational {
    fn parts(&self, style: Style) -> Parts {
        Parts {
            negative: self.is_negative(),
            magnitude: rational_magnitude(self, style),
            is_unit: self.abs().is_one(),
            compound: false,
        }
    }
}

fn surd(r: &BigUint, style: Style) -> String {
    match style {
        Style::Text => format!("√{r}"),
        Style::Latex => format!("\\sqrt{{{r}}}"),
    }
}

fn single_term(q: &Rational, r: &BigUint, style: Style) -> (bool, String) {
    let neg = q.is_negative();
    if r.is_one() {
        return (neg, rational_magnitude(q, style));
    }
    let mag = q.abs();
    let s = if mag.is_one() {
        surd(r, style)
    } else if mag.is_integer() || style == Style::Latex {
        format!("{}{}", rational_magnitude(&mag, style), surd(r, style))
    } else {
        format!("({}){}", rational_magnitude(&mag, style), surd(r, style))
    };
    (neg, s)
}

impl Render for SqrtRat {
    fn parts(&self, style: Style) -> Parts {
        let terms: Vec<_> = self.terms().collect();
        match terms.len() {
            0 => Parts { negative: false, magnitude: "0".into(), is_unit: false, compound: false },
            1 => {
                let (r, q) = terms[0];
                let (negative, magnitude) = single_term(q, r, style);
                Parts { negative, magnitude, is_unit: r.is_one() && q.abs().is_one(), compound: false }
            }
            _ => {
                let mut s = String::new();
                for (i, (r, q)) in terms.iter().enumerate() {
                    let (neg, mag) = single_term(q, r, style);
                    if i == 0 {
                        if neg {
                            s.push('-');
                        }
                    } else {
                        s.push_str(if neg { " - " } else { " + " });
                    }
                    s.push_str(&mag);
                }
                Parts { negative: false, magnitude: s, is_unit: false, compound: true }
            }
        }
    }
}

impl<C: Render> HPoly<C> {
    /// Ascending powers of `h`, e.g. `2 - (1/4)h^2`.
    pub fn render(&self, style: Style) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = c.parts(style);
            let first = out.is_empty();
            if first {
                if p.negative {
                    out.push('-');
                }
            } else {
                out.push_str(if p.negative { " - " } else { " + " });
            }
            let power = match (k, style) {
                (0, _) => String::new(),
                (1, _) => "h".to_string(),
                (_, Style::Text) => format!("h^{k}"),
                (_, Style::Latex) => format!("h^{{{k}}}"),
            };
            if k == 0 {
                out.push_str(&p.magnitude);
            } else if p.is_unit {
                out.push_str(&power);
            } else if p.compound {
                out.push_str(&format!("({}){}", p.magnitude, power));
            } else if style == Style::Text && p.magnitude.contains('√') {
                out.push_str(&format!("{} {}", p.magnitude, power));
            } else if style == Style::Text && p.magnitude.contains('/') {
                out.push_str(&format!("({}){}", p.magnitude, power));
            } else {
                out.push_str(&p.magnitude);
                out.push_str(&power);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<C: Render> std::fmt::Display for HPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render(Style::Text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn text_polynomials() {
        let p = HPoly::from_coeffs(vec![rat(2, 1), rat(0, 1), rat(-1, 4)]);
        assert_eq!(p.to_string(), "2 - (1/4)h^2");
        let q = HPoly::from_coeffs(vec![rat(0, 1), rat(1, 1), rat(3, 1)]);
        assert_eq!(q.to_string(), "h + 3h^2");
        assert_eq!(HPoly::<Rational>::from_coeffs(vec![]).to_string(), "0");
    }

    #[test]
    fn sqrt_polynomials() {
        let c = SqrtRat::sqrt(&rat(1, 5)).scale(&rat(-18, 1));
        let p = HPoly::monomial(c, 3);
        assert_eq!(p.render(Style::Text), "-(18/5)√5 h^3");
        assert_eq!(p.render(Style::Latex), "-\\frac{18}{5}\\sqrt{5}h^{3}");
        let s = HPoly::monomial(SqrtRat::sqrt(&rat(2, 1)).scale(&rat(3, 1)), 1);
        assert_eq!(s.render(Style::Text), "3√2 h");
        let m = HPoly::monomial(SqrtRat::one() + SqrtRat::sqrt(&rat(2, 1)), 2);
        assert_eq!(m.render(Style::Text), "(1 + √2)h^2");
    }
}
