//! The deformed coupling matrix is invertible but not orthogonal.
//!
//!     cargo run --example non_orthogonality -- 4

use jordan_cgc::cgc::demonstrate_non_orthogonality;
use jordan_cgc::suite::pairs;

fn main() -> jordan_cgc::Result<()> {
    let max: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for (j1, j2) in pairs(max).into_iter().filter(|(a, b)| (*a + *b).twice() >= 1) {
        let out = demonstrate_non_orthogonality(j1, j2)?;
        let status = if out.report.passed() { "ok" } else { "FAIL" };
        match out.witness {
            Some(((ja, ma), (jb, mb), v)) => {
                println!("{status:4} j1={:<4} j2={:<4} (M^T M)[({ja},{ma}),({jb},{mb})] = {v}", j1.to_string(), j2.to_string())
            }
            None => println!("{status:4} j1={:<4} j2={:<4} M^T M = 1", j1.to_string(), j2.to_string()),
        }
    }
    Ok(())
}
