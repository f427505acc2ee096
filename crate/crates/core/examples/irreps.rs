//! Generator matrices of the deformed algebra on one irreducible representation.
//!
//!     cargo run --example irreps -- 3      # 2j = 3, i.e. j = 3/2

use jordan_cgc::cli::format::matrix_text;
use jordan_cgc::exact::HalfInt;
use jordan_cgc::jordanian::{self, generator_matrix, Generator};

fn main() -> jordan_cgc::Result<()> {
    let twice_j: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let j = HalfInt::from_twice(twice_j);
    let weights: Vec<String> = j.weights().map(|m| m.to_string()).collect();
    println!("V^({j}), v-basis, columns are images of v_m for m = {}\n", weights.join(", "));

    for g in [Generator::H, Generator::X, Generator::Y, Generator::ExpHX, Generator::CoshHalfInv] {
        println!("{g}:\n{}", matrix_text(&generator_matrix(g, j)?.matrix));
    }

    // Both the relations and the nonlinear map are checked exactly in h.
    for report in [
        jordanian::verify_defining_relations(j)?,
        jordanian::verify_nonlinear_map(j)?,
        jordanian::verify_oracles(j)?,
    ] {
        print!("{report}");
    }
    Ok(())
}
