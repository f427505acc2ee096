//! The auxiliary basis on which ΔH and ΔZ± act like the undeformed coproduct.
//!
//!     cargo run --example auxiliary_basis -- 2 1

use jordan_cgc::auxbasis::{self, w_vector};
use jordan_cgc::exact::HalfInt;
use jordan_cgc::tensor::TensorSpace;
use num_traits::Zero;

fn arg(n: usize, default: i64) -> i64 {
    std::env::args().nth(n).and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn main() -> jordan_cgc::Result<()> {
    let (j1, j2) = (HalfInt::from_twice(arg(1, 2)), HalfInt::from_twice(arg(2, 1)));
    let space = TensorSpace::new(j1, j2)?;

    for (m1, m2) in space.basis() {
        let w = w_vector(j1, j2, m1, m2)?;
        let terms: Vec<String> = w
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let (n1, n2) = space.labels(i);
                format!("[{c}] v({n1})⊗v({n2})")
            })
            .collect();
        println!("w[{m1},{m2}] = {}", terms.join(" + "));
    }
    println!();
    print!("{}", auxbasis::verify_props(j1, j2)?);
    Ok(())
}
