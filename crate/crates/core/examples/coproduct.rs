//! Coproducts on a tensor product of two irreducible representations.
//!
//!     cargo run --example coproduct -- 1 2     # j1 = 1/2, j2 = 1

use jordan_cgc::cli::format::matrix_text;
use jordan_cgc::exact::HalfInt;
use jordan_cgc::jordanian::Generator;
use jordan_cgc::tensor::{self, coprod, TensorSpace};

fn arg(n: usize, default: i64) -> i64 {
    std::env::args().nth(n).and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn main() -> jordan_cgc::Result<()> {
    let (j1, j2) = (HalfInt::from_twice(arg(1, 1)), HalfInt::from_twice(arg(2, 2)));
    let space = TensorSpace::new(j1, j2)?;
    let labels: Vec<String> = space.basis().map(|(a, b)| format!("({a},{b})")).collect();
    println!("V^({j1}) ⊗ V^({j2}), basis v_m1 ⊗ v_m2 in order {}\n", labels.join(" "));

    for g in [Generator::H, Generator::X, Generator::Y, Generator::ZPlus] {
        println!("Δ({g}):\n{}", matrix_text(&coprod(g, j1, j2)?.matrix));
    }

    print!("{}", tensor::verify_coprod_homomorphism(j1, j2)?);
    print!("{}", tensor::verify_series_forms(j1, j2)?);
    print!("{}", tensor::verify_coassociativity(j1, j2, HalfInt::from_twice(1))?);
    Ok(())
}
