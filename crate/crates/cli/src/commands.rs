use num_bigint::BigInt;
use serde_json::{json, Value};

use catalan_core::cassels::{catalan_pq_search, chao_ko_search, fmn_coefficients, lebesgue_search};
use catalan_core::criteria::{
    final_deduction_check, search_double_wieferich, wieferich_pair_check, wieferich_residues,
};
use catalan_core::elementary::{
    consecutive_powers, cubic_two_search, mordell_search, quartic_search, wakulicz_search, QuarticKind, SolutionReport,
};
use catalan_core::pell::{nth_solution, sqrt3_identity_check};
use catalan_core::ufd::{factorize, EuclideanDomain};
use catalan_core::{Error, GaussianInt, Rational};

use crate::{lemmas, Command};
use catalan_cli::report::Report;

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit code 2.
    Usage(String),
    /// The computation could not complete; exit code 1.
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrime(_) | Error::InvalidInput(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

pub type CliResult = Result<Report, CliError>;

/// A tuple entry as a JSON number when it fits, else as a decimal string.
pub fn int_value(v: i128) -> Value {
    match i64::try_from(v) {
        Ok(n) => json!(n),
        Err(_) => json!(v.to_string()),
    }
}

pub fn rational_value(r: &Rational) -> Value {
    json!(r.to_string())
}

fn from_solutions(mut report: Report, s: &SolutionReport) -> Report {
    report.note(format!("equation {}", s.equation));
    for t in &s.solutions {
        report.result(Value::Array(t.iter().map(|&v| int_value(v)).collect()));
    }
    for c in &s.checks {
        report.check(c.name.clone(), c.passed);
    }
    report.check("every tuple satisfies the equation", s.verify());
    for line in &s.trace {
        report.note(line.clone());
    }
    report
}

pub fn run(command: &Command) -> CliResult {
    match command {
        Command::Pell { d, count } => pell(*d, *count),
        Command::Mordell { bound } => {
            Ok(from_solutions(Report::new("mordell").param("bound", bound), &mordell_search(*bound)?))
        }
        Command::Quartic { k, bound } => {
            let kind = if k == "2" { QuarticKind::Two } else { QuarticKind::Three };
            let report = Report::new("quartic").param("k", k).param("bound", bound);
            Ok(from_solutions(report, &quartic_search(kind, *bound)?))
        }
        Command::Wakulicz { bound, cubic_bound } => {
            let report = Report::new("wakulicz").param("bound", bound).param("cubic_bound", cubic_bound);
            let mut report = from_solutions(report, &wakulicz_search(*bound)?);
            let cubic = cubic_two_search(*cubic_bound)?;
            report.note(format!("x^3 - 2y^3 = ±1 with |x| <= {cubic_bound}: {:?}", cubic.solutions));
            for c in &cubic.checks {
                report.check(format!("x^3 - 2y^3 = ±1: {}", c.name), c.passed);
            }
            Ok(report)
        }
        Command::ChaoKo { q, bound } => {
            let report = Report::new("chao-ko").param("q", q).param("bound", bound);
            Ok(from_solutions(report, &chao_ko_search(*q, *bound)?))
        }
        Command::Lebesgue { m, bound } => {
            let report = Report::new("lebesgue").param("m", m).param("bound", bound);
            Ok(from_solutions(report, &lebesgue_search(*m, *bound)?))
        }
        Command::CatalanPq { p, q, bound } => {
            let report = Report::new("catalan-pq").param("p", p).param("q", q).param("bound", bound);
            Ok(from_solutions(report, &catalan_pq_search(*p, *q, *bound)?))
        }
        Command::ConsecutivePowers { max } => {
            Ok(from_solutions(Report::new("consecutive-powers").param("max", max), &consecutive_powers(*max)?))
        }
        Command::Wieferich { limit } => wieferich(*limit),
        Command::Deduction { q_limit } => deduction(*q_limit),
        Command::Fmn { m, n, l } => fmn(*m, *n, *l),
        Command::FactorGaussian { re, im } => factor_gaussian(*re, *im),
        Command::VerifyLemma { name } => lemmas::verify(*name),
    }
}

fn narrow_u32(name: &str, v: u64) -> Result<u32, CliError> {
    u32::try_from(v).map_err(|_| CliError::Usage(format!("{name} = {v} is too large")))
}

fn pell(d: u64, count: u64) -> CliResult {
    let mut report = Report::new("pell").param("d", d).param("count", count);
    let db = BigInt::from(d);
    let mut all_solve = true;
    for n in 0..=count {
        let s = nth_solution(&db, n)?;
        all_solve &= &s.x * &s.x - &db * &s.y * &s.y == BigInt::from(1);
        report.result(json!({ "n": n, "x": s.x.to_string(), "y": s.y.to_string() }));
    }
    report.check(format!("x^2 - {d}y^2 = 1 for every listed solution"), all_solve);
    if d == 3 {
        let bad = (0..=count.min(50)).map(sqrt3_identity_check).find(|r| !r.passed);
        if let Some(r) = &bad {
            report.note(format!("identity failure: {}", r.first_violation.clone().unwrap_or_default()));
        }
        report.check(format!("doubling identities and parity for n <= {}", count.min(50)), bad.is_none());
    }
    Ok(report)
}

fn wieferich(limit: u64) -> CliResult {
    let mut report = Report::new("wieferich").param("limit", limit);
    let pairs = search_double_wieferich(limit)?;
    let mut verified = true;
    for &(p, q) in &pairs {
        let (a, b) = wieferich_residues(p, q)?;
        verified &= a == 1 && b == 1 && wieferich_pair_check(q, p)?;
        report.result(json!([p, q]));
    }
    report.check("each pair verified in both directions at two word sizes", verified);
    Ok(report)
}

fn deduction(q_limit: u64) -> CliResult {
    let mut report = Report::new("deduction").param("q_limit", q_limit);
    let d = final_deduction_check(q_limit)?;
    for &(p, q) in &d.survivors {
        report.result(json!([p, q]));
    }
    report.note(format!("odd primes q checked: {}", d.primes_checked));
    report.note(format!("even eliminations: {}", d.even_eliminations));
    report.note(format!("3 | 1 + 2q^2 for {} primes q > 3", d.divisible_by_three));
    report.check("M3 caps k at 3", d.m3_caps_k);
    report.check(
        "3 | 1 + 2q^2 for every prime q > 3",
        d.three_failures.is_empty() && d.divisible_by_three + 1 == d.primes_checked,
    );
    report.check("survivors are exactly (19, 3)", d.survivors == [(19, 3)]);
    report.check("survivors fall under M4", d.survivors_excluded_by_m4);
    Ok(report)
}

fn fmn(m: u64, n: u64, l: u64) -> CliResult {
    let mut report = Report::new("fmn").param("m", m).param("n", n).param("l", l);
    let f = fmn_coefficients(narrow_u32("m", m)?, narrow_u32("n", n)?, narrow_u32("l", l)?)?;
    for c in &f.coefficients {
        report.result(rational_value(c));
    }
    // (j + 1)·c_{j+1} = (m/n − j)·c_j for the binomial series
    let alpha = Rational::new(BigInt::from(m), BigInt::from(n));
    let recurrence = f.coefficients.windows(2).enumerate().all(|(j, w)| {
        let j = Rational::from_integer(BigInt::from(j));
        (&j + Rational::from_integer(BigInt::from(1))) * &w[1] == (&alpha - &j) * &w[0]
    });
    report.check("constant term is 1", f.coefficients[0] == Rational::from_integer(BigInt::from(1)));
    report.check("(j + 1) c_{j+1} = (m/n - j) c_j", recurrence);
    Ok(report)
}

fn factor_gaussian(re: i64, im: i64) -> CliResult {
    let mut report = Report::new("factor-gaussian").param("re", re).param("im", im);
    let z = GaussianInt::new(re.into(), im.into());
    let f = factorize(&z)?;
    for (p, e) in &f.factors {
        report.result(json!({ "prime": p.to_string(), "norm": p.norm().to_string(), "multiplicity": e }));
    }
    report.note(format!("unit {}", f.unit));
    report.check("unit times the product of factors reconstructs the input", f.reconstruct() == z);
    report.check("the unit is one of 1, -1, i, -i", f.unit.is_unit());
    Ok(report)
}
