//! Acceptance criteria, one test each. Every comparison is exact.
//! Each test prints a single `[PASS]` or `[FAIL]` line.

use jordan_cgc::cgc::{self, classical_cgc, coupled_labels, product_labels};
use jordan_cgc::exact::{at_h_zero, rat, HPoly, HalfInt, Mat, SqrtRat};
use jordan_cgc::report::Report;
use jordan_cgc::suite::{pairs, spins, DEFAULT_SEED};
use jordan_cgc::{auxbasis, jordanian, suite, tensor};
use num_traits::Zero;

const MAX_2J: i64 = 8;

fn conclude(n: u32, what: &str, reports: &[Report]) {
    let failure = reports
        .iter()
        .find_map(|r| r.first_failure().map(|c| format!("{} / {}: {}", r.title, c.name, c.detail.clone().unwrap_or_default())));
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    match &failure {
        None => println!("[PASS] criterion {n}: {what} ({checks} checks)"),
        Some(f) => println!("[FAIL] criterion {n}: {what} -- {f}"),
    }
    assert!(failure.is_none(), "criterion {n} failed: {}", failure.unwrap());
}

fn collect<T>(items: impl IntoIterator<Item = T>, f: impl Fn(T) -> jordan_cgc::Result<Report>) -> Vec<Report> {
    items.into_iter().map(|x| f(x).expect("verification ran")).collect()
}

#[test]
fn criterion_01_worked_values() {
    let (two, three, zero) = (HalfInt::from_int(2), HalfInt::from_int(3), HalfInt::ZERO);
    let mut r = Report::new("deformed coefficients, j1=j2=2, j=3, n1=2, n2=0");
    let value = |m: i64| cgc::deformed_cgc(two, two, three, two, zero, HalfInt::from_int(m)).unwrap();
    let expect_top = HPoly::constant(SqrtRat::sqrt(&rat(1, 2)));
    let expect_low = HPoly::monomial(SqrtRat::sqrt(&rat(1, 5)).scale(&rat(-18, 1)), 3);
    for (name, got, expect) in [
        ("m=2: 1/√2", value(2), expect_top),
        ("m=3: 0", value(3), HPoly::zero()),
        ("m=-1: -18h^3/√5", value(-1), expect_low),
    ] {
        if got == expect {
            r.pass(name);
        } else {
            r.fail(name, format!("got {got}"));
        }
    }
    conclude(1, "worked deformed Clebsch-Gordan values", &[r]);
}

#[test]
fn criterion_02_defining_relations() {
    let reports = collect(spins(MAX_2J), jordanian::verify_defining_relations);
    conclude(2, "defining relations for 2j <= 8", &reports);
}

#[test]
fn criterion_03_closed_forms_match_oracles() {
    let reports = collect(spins(MAX_2J), jordanian::verify_oracles);
    conclude(3, "closed-form X, Y, cosh(hX/2)^-1 equal series oracles for 2j <= 8", &reports);
}

#[test]
fn criterion_04_auxiliary_basis_actions() {
    let reports = collect(pairs(MAX_2J), |(a, b)| auxbasis::verify_props(a, b));
    conclude(4, "ΔH, ΔZ+, ΔZ- on the auxiliary basis for 2j1+2j2 <= 8", &reports);
}

#[test]
fn criterion_05_coupled_vectors_carry_standard_action() {
    let mut reports = collect(pairs(MAX_2J), |(a, b)| cgc::verify_coupled_action(a, b));
    reports.extend(collect(pairs(MAX_2J), |(a, b)| cgc::verify_path_independence(a, b)));
    conclude(5, "coupled vectors from the table carry the standard action of H, Z±, X, Y", &reports);
}

#[test]
fn criterion_06_table_structure() {
    let reports = collect(pairs(MAX_2J), |(a, b)| cgc::verify_structure(a, b));
    conclude(6, "zero above, classical on, single-degree support below the diagonal m = n1+n2", &reports);
}

#[test]
fn criterion_07_lemmas_and_recurrences() {
    let reports = suite::lemmas(suite::Bounds { seed: DEFAULT_SEED, ..Default::default() }).unwrap();
    let random = &reports[0];
    assert!(random.checks.iter().any(|c| c.name.contains("500 random cases with n <= 20")));
    conclude(7, "lemma identities (k, s <= 40; 500 random triples) and recurrences", &reports);
}

fn classical_table_check(j1: HalfInt, j2: HalfInt) -> jordan_cgc::Result<Report> {
    let mut r = Report::new(format!("classical table at h=0, (2j1,2j2)=({},{})", j1.twice(), j2.twice()));
    let m0 = at_h_zero(&cgc::coupling_matrix(j1, j2)?);
    let rows = product_labels(j1, j2)?;
    let cols = coupled_labels(j1, j2);
    let classical = Mat::from_fn(rows.len(), cols.len(), |a, b| {
        let ((n1, n2), (j, m)) = (rows[a], cols[b]);
        classical_cgc(j1, j2, j, n1, n2, m)
    });
    r.check_mat_eq("M(0) = classical coupling matrix", &m0, &classical);
    Ok(r)
}

#[test]
fn criterion_08_classical_limit() {
    let mut reports = collect(spins(MAX_2J), jordanian::verify_classical_limit);
    reports.extend(collect(pairs(MAX_2J), |(a, b)| tensor::verify_classical_limit(a, b)));
    reports.extend(collect(pairs(MAX_2J), |(a, b)| classical_table_check(a, b)));
    conclude(8, "generators, coproducts and tables at h = 0 are classical", &reports);
}

#[test]
fn criterion_09_non_orthogonality() {
    let mut reports = Vec::new();
    let mut witness = None;
    for (a, b) in pairs(MAX_2J).into_iter().filter(|(a, b)| (*a + *b).twice() >= 1) {
        let out = cgc::demonstrate_non_orthogonality(a, b).unwrap();
        if witness.is_none() {
            if let Some((r, c, v)) = &out.witness {
                witness = Some(format!("(2j1,2j2)=({},{}), entry ({},{})x({},{}) = {v}", a.twice(), b.twice(), r.0, r.1, c.0, c.1));
            }
        }
        reports.push(out.report);
    }
    let mut summary = Report::new("Gramian deviates for some pair");
    match &witness {
        Some(w) => summary.pass(format!("witness {w}")),
        None => summary.fail("witness", "every Gramian equals the identity"),
    }
    reports.push(summary);
    conclude(9, "h=0 Gramian is the identity, deformed Gramian is not", &reports);
}

#[test]
fn criterion_10_coassociativity() {
    let triples = tensor::triples_within(MAX_2J, tensor::DEFAULT_TRIPLE_CAP);
    assert!(triples.iter().any(|(a, b, c)| (a.twice() + 1) * (b.twice() + 1) * (c.twice() + 1) == 64));
    let reports = collect(triples, |(a, b, c)| tensor::verify_coassociativity(a, b, c));
    conclude(10, "coassociativity on triple products of dimension <= 64", &reports);
}
