pub mod auxbasis;
pub mod cgc;
pub mod cli;
pub mod error;
pub mod exact;
pub mod identities;
pub mod jordanian;
pub mod report;
pub mod su2;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};
pub use exact::{HalfInt, HPoly, Mat, Rational, SqrtRat};
