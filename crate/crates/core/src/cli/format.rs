//! Text and LaTeX rendering of matrices and tables.

use crate::exact::{HPoly, Mat, Render, Style};

/// Column-aligned text, one row per line.
pub fn matrix_text<C: Render>(m: &Mat<HPoly<C>>) -> String {
    let cells: Vec<Vec<String>> =
        (0..m.rows()).map(|r| m.row(r).iter().map(|p| p.render(Style::Text)).collect()).collect();
    let widths: Vec<usize> = (0..m.cols())
        .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{}{}", " ".repeat(w - s.chars().count()), s))
            .collect();
        out.push_str("[ ");
        out.push_str(&line.join("  "));
        out.push_str(" ]\n");
    }
    out
}

pub fn matrix_latex<C: Render>(m: &Mat<HPoly<C>>) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|p| p.render(Style::Latex)).collect();
        out.push_str("  ");
        out.push_str(&row.join(" & "));
        if r + 1 < m.rows() {
            out.push_str(" \\\\");
        }
        out.push('\n');
    }
    out.push_str("\\end{pmatrix}\n");
    out
}

pub fn scalar<C: Render>(p: &HPoly<C>, style: Style) -> String {
    p.render(style)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rational};

    #[test]
    fn aligned_rows() {
        let m: Mat<HPoly<Rational>> = Mat::from_fn(2, 2, |r, c| HPoly::constant(rat((r * 10 + c) as i64, 1)));
        assert_eq!(matrix_text(&m), "[  0   1 ]\n[ 10  11 ]\n");
        assert_eq!(matrix_latex(&m), "\\begin{pmatrix}\n  0 & 1 \\\\\n  10 & 11\n\\end{pmatrix}\n");
    }
}
