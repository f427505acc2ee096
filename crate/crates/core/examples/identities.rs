//! Exact checks of the summation identities behind the closed-form actions.
//!
//!     cargo run --example identities

use jordan_cgc::identities::{self, lemma1, lemma2, random_lemma3_cases};
use jordan_cgc::suite::DEFAULT_SEED;

fn main() {
    for k in 1..=6 {
        println!("{}", lemma1(k));
    }
    for s in 2..=6 {
        for n in 0..=2 {
            println!("{}", lemma2(s, n));
        }
    }
    let (cases, poles) = random_lemma3_cases(5, 20, DEFAULT_SEED);
    for c in &cases {
        println!("{c}");
    }
    println!("({poles} draws hit a pole and were redrawn)\n");
    print!("{}", identities::verify_recurrences(40));
}
