//! Verification suites over ranges of spins, shared by the command line and the tests.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{rat, HPoly, HalfInt, SqrtRat};
use crate::report::Report;
use crate::{auxbasis, cgc, identities, jordanian, tensor};

/// Default bound on `2j` (and on `2j1 + 2j2` for pairs).
pub const DEFAULT_MAX_2J: i64 = 8;

/// Default seed for randomized identity cases.
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Coproduct,
    Props,
    Cgc,
    Lemmas,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["relations", "coproduct", "props", "cgc", "lemmas", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Coproduct => "coproduct",
            Suite::Props => "props",
            Suite::Cgc => "cgc",
            Suite::Lemmas => "lemmas",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Suite::Relations, Suite::Coproduct, Suite::Props, Suite::Cgc, Suite::Lemmas, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

/// Bounds for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_2j: i64,
    pub seed: u64,
    pub triple_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_2j: DEFAULT_MAX_2J, seed: DEFAULT_SEED, triple_cap: tensor::DEFAULT_TRIPLE_CAP }
    }
}

pub fn spins(max_2j: i64) -> Vec<HalfInt> {
    (0..=max_2j.max(-1)).map(HalfInt::from_twice).collect()
}

/// Pairs with `2j1 + 2j2 ≤ max_total`.
pub fn pairs(max_total: i64) -> Vec<(HalfInt, HalfInt)> {
    let mut out = Vec::new();
    for a in 0..=max_total {
        for b in 0..=(max_total - a) {
            out.push((HalfInt::from_twice(a), HalfInt::from_twice(b)));
        }
    }
    out
}

/// Runs `f` over `items` in parallel and gathers the reports in input order.
fn gather<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Vec<Report>> + Sync + Send) -> Result<Vec<Report>> {
    let chunks: Vec<Result<Vec<Report>>> = items.par_iter().map(f).collect();
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?);
    }
    Ok(out)
}

pub fn relations(b: Bounds) -> Result<Vec<Report>> {
    gather(&spins(b.max_2j), |&j| {
        Ok(vec![
            jordanian::verify_defining_relations(j)?,
            jordanian::verify_nonlinear_map(j)?,
            jordanian::verify_oracles(j)?,
            jordanian::verify_classical_limit(j)?,
        ])
    })
}

pub fn coproduct(b: Bounds) -> Result<Vec<Report>> {
    let mut out = gather(&pairs(b.max_2j), |&(j1, j2)| {
        Ok(vec![
            tensor::verify_coprod_homomorphism(j1, j2)?,
            tensor::verify_series_forms(j1, j2)?,
            tensor::verify_classical_limit(j1, j2)?,
        ])
    })?;
    let triples = tensor::triples_within(b.max_2j, b.triple_cap);
    out.extend(gather(&triples, |&(a, bb, c)| {
        Ok(vec![tensor::verify_coassociativity_capped(a, bb, c, b.triple_cap)?])
    })?);
    Ok(out)
}

pub fn props(b: Bounds) -> Result<Vec<Report>> {
    gather(&pairs(b.max_2j), |&(j1, j2)| Ok(vec![auxbasis::verify_props(j1, j2)?]))
}

/// The worked values for `j1 = j2 = 2`, `j = 3`, `n1 = 2`, `n2 = 0`.
pub fn worked_values() -> Result<Report> {
    let mut report = Report::new("worked values, j1=j2=2, j=3, (n1,n2)=(2,0)");
    let (two, three) = (HalfInt::from_int(2), HalfInt::from_int(3));
    let z = HalfInt::ZERO;
    let cases = [
        (2, HPoly::constant(SqrtRat::sqrt(&rat(1, 2))), "m=2 gives 1/√2"),
        (3, HPoly::zero(), "m=3 gives 0"),
        (-1, HPoly::monomial(SqrtRat::sqrt(&rat(1, 5)).scale(&rat(-18, 1)), 3), "m=-1 gives -18h^3/√5"),
    ];
    for (m, expect, name) in cases {
        let got = cgc::deformed_cgc(two, two, three, two, z, HalfInt::from_int(m))?;
        if got == expect {
            report.pass(name);
        } else {
            report.fail(name, format!("got {got}"));
        }
    }
    Ok(report)
}

pub fn cgc_suite(b: Bounds) -> Result<Vec<Report>> {
    let mut out = vec![worked_values()?];
    out.extend(gather(&pairs(b.max_2j), |&(j1, j2)| {
        let mut r = vec![
            cgc::verify_path_independence(j1, j2)?,
            cgc::verify_coupled_action(j1, j2)?,
            cgc::verify_structure(j1, j2)?,
        ];
        if (j1 + j2).twice() >= 1 {
            r.push(cgc::demonstrate_non_orthogonality(j1, j2)?.report);
        }
        Ok(r)
    })?);
    Ok(out)
}

pub fn lemmas(b: Bounds) -> Result<Vec<Report>> {
    let mut labels = Report::new("Gosper sum under α=1-k-2m1, β=1+2m2, γ=2-k+2m2");
    let mut poles = 0;
    let mut bad = None;
    for m1 in -8..=8 {
        for m2 in -8..=8 {
            for k in 0..=8 {
                for n in 0..=8 {
                    match identities::lemma3_label_substitution(m1, m2, k, n) {
                        Ok(c) if !c.pass => bad = bad.or(Some(c.to_string())),
                        Ok(_) => {}
                        Err(_) => poles += 1,
                    }
                }
            }
        }
    }
    let name = format!("2m1, 2m2 in -8..=8, k, n in 0..=8 ({poles} poles skipped)");
    match bad {
        None => labels.pass(name),
        Some(d) => labels.fail(name, d),
    }
    Ok(vec![identities::verify_lemmas(40, 40, 500, 20, b.seed), identities::verify_recurrences(40), labels])
}

pub fn run(suite: Suite, b: Bounds) -> Result<Vec<Report>> {
    match suite {
        Suite::Relations => relations(b),
        Suite::Coproduct => coproduct(b),
        Suite::Props => props(b),
        Suite::Cgc => cgc_suite(b),
        Suite::Lemmas => lemmas(b),
        Suite::All => {
            let mut out = relations(b)?;
            out.extend(coproduct(b)?);
            out.extend(props(b)?);
            out.extend(cgc_suite(b)?);
            out.extend(lemmas(b)?);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn pair_counts() {
        assert_eq!(pairs(0).len(), 1);
        assert_eq!(pairs(8).len(), 45);
    }

    #[test]
    fn trivial_bound_passes() {
        let b = Bounds { max_2j: 0, ..Bounds::default() };
        for s in [Suite::Relations, Suite::Coproduct, Suite::Props] {
            assert!(run(s, b).unwrap().iter().all(Report::passed));
        }
    }

    #[test]
    fn worked() {
        assert!(worked_values().unwrap().passed());
    }
}
