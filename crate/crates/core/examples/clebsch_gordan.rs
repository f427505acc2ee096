//! Deformed Clebsch-Gordan coefficients and the coupled states they define.
//!
//!     cargo run --example clebsch_gordan -- 4 4 6     # j1 = j2 = 2, j = 3

use jordan_cgc::cgc::{self, coupled_spins, deformed_cgc_table};
use jordan_cgc::exact::{HalfInt, Style};

fn arg(n: usize) -> Option<i64> {
    std::env::args().nth(n).and_then(|s| s.parse().ok())
}

fn main() -> jordan_cgc::Result<()> {
    let (j1, j2) = (HalfInt::from_twice(arg(1).unwrap_or(4)), HalfInt::from_twice(arg(2).unwrap_or(4)));
    let j = arg(3).map(HalfInt::from_twice).unwrap_or_else(|| coupled_spins(j1, j2)[0]);

    let table = deformed_cgc_table(j1, j2)?;
    println!("nonzero coefficients for j1={j1}, j2={j2}, j={j}:");
    let mut rows: Vec<_> = table.nonzero().filter(|(k, _)| k.0 == j).collect();
    rows.sort_by_key(|(&(_, n1, n2, m), _)| (std::cmp::Reverse(m), std::cmp::Reverse(n1), std::cmp::Reverse(n2)));
    for (&(_, n1, n2, m), value) in rows {
        let classical = cgc::classical_cgc(j1, j2, j, n1, n2, m);
        println!(
            "  m={:>4} n1={:>4} n2={:>4}  {:<28} classical {}",
            m.to_string(),
            n1.to_string(),
            n2.to_string(),
            value.render(Style::Text),
            classical
        );
    }

    print!("{}", cgc::verify_structure(j1, j2)?);
    print!("{}", cgc::verify_coupled_action(j1, j2)?);
    Ok(())
}
