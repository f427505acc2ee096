//! Machine-readable records, as written by `jordan ... --format json`.
//!
//!     cargo run --example json_output

use jordan_cgc::cli::json::{decode_matrix, encode_matrix, MatrixPayload, OutputRecord, Payload};
use jordan_cgc::cli::{rep_matrix, Basis};
use jordan_cgc::exact::HalfInt;
use jordan_cgc::jordanian::Generator;

fn main() -> jordan_cgc::Result<()> {
    let j = HalfInt::from_twice(2);
    let m = rep_matrix(Generator::Y, j, Basis::E)?;
    let record = OutputRecord::new(
        vec!["rep".into(), "--j".into(), "2".into(), "--gen".into(), "Y".into(), "--basis".into(), "e".into()],
        Payload::Matrix(MatrixPayload {
            generator: "Y".into(),
            j,
            basis: "e".into(),
            weights: j.weights().collect(),
            rows: encode_matrix(&m),
        }),
    );
    let json = record.to_json()?;
    println!("{json}");

    let Payload::Matrix(back) = OutputRecord::from_json(&json)?.payload else { unreachable!() };
    assert_eq!(decode_matrix(&back.rows)?, m);
    eprintln!("decoded matrix equals the original");
    Ok(())
}
