//! Versioned JSON records.
//!
//! Half-integers are written as doubled integers. A `SqrtRat` is a list of
//! `{radicand, num, den}` terms with decimal-string numbers, an h-polynomial is
//! the list of its coefficients by degree, and a matrix is a list of rows.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{EMat, HPoly, HalfInt, Mat, Rational, SqrtRat};
use crate::report::Report;

pub const SCHEMA: &str = "jordan-cgc/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub radicand: String,
    pub num: String,
    pub den: String,
}

pub type JsonScalar = Vec<Term>;
pub type JsonPoly = Vec<JsonScalar>;

pub fn encode_scalar(x: &SqrtRat) -> JsonScalar {
    x.terms()
        .map(|(r, q)| Term { radicand: r.to_string(), num: q.numer().to_string(), den: q.denom().to_string() })
        .collect()
}

fn parse<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Json(format!("bad {what} '{s}'")))
}

pub fn decode_scalar(terms: &JsonScalar) -> Result<SqrtRat> {
    let mut out = SqrtRat::from_int(0);
    for t in terms {
        let r: BigUint = parse(&t.radicand, "radicand")?;
        let num: BigInt = parse(&t.num, "numerator")?;
        let den: BigInt = parse(&t.den, "denominator")?;
        if den == BigInt::from(0) {
            return Err(Error::Json("zero denominator".into()));
        }
        out = out + SqrtRat::term(Rational::new(num, den), r);
    }
    Ok(out)
}

pub fn encode_poly(p: &HPoly<SqrtRat>) -> JsonPoly {
    p.coeffs().iter().map(encode_scalar).collect()
}

pub fn decode_poly(p: &JsonPoly) -> Result<HPoly<SqrtRat>> {
    Ok(HPoly::from_coeffs(p.iter().map(decode_scalar).collect::<Result<_>>()?))
}

pub fn encode_matrix(m: &EMat) -> Vec<Vec<JsonPoly>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(encode_poly).collect()).collect()
}

pub fn decode_matrix(rows: &[Vec<JsonPoly>]) -> Result<EMat> {
    let rows = rows
        .iter()
        .map(|row| row.iter().map(decode_poly).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Mat::zeros(0, 0));
    }
    Mat::from_rows(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixPayload {
    pub generator: String,
    pub j: HalfInt,
    pub basis: String,
    /// Weights labelling rows and columns, in order.
    pub weights: Vec<HalfInt>,
    pub rows: Vec<Vec<JsonPoly>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub j: HalfInt,
    pub n1: HalfInt,
    pub n2: HalfInt,
    pub m: HalfInt,
    pub value: JsonPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablePayload {
    pub j1: HalfInt,
    pub j2: HalfInt,
    /// `(n1, n2)` with `n1` descending, then `n2` descending.
    pub row_order: Vec<(HalfInt, HalfInt)>,
    /// `(j, m)` with `j` descending, then `m` descending.
    pub column_order: Vec<(HalfInt, HalfInt)>,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub suite: String,
    pub max_2j: i64,
    pub seed: u64,
    pub passed: bool,
    pub reports: Vec<Report>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Payload {
    Matrix(MatrixPayload),
    Table(TablePayload),
    Verify(VerifyPayload),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema: String,
    /// The command line that produced the record, without the program name.
    pub command: Vec<String>,
    pub payload: Payload,
}

impl OutputRecord {
    pub fn new(command: Vec<String>, payload: Payload) -> Self {
        OutputRecord { schema: SCHEMA.to_string(), command, payload }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: OutputRecord = serde_json::from_str(s)?;
        if rec.schema != SCHEMA {
            return Err(Error::Json(format!("unsupported schema '{}'", rec.schema)));
        }
        Ok(rec)
    }
}
