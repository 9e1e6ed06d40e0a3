//! `verify-lemma`: each lemma is checked on its worked instances.

use num_bigint::BigInt;
use serde_json::json;

use catalan_core::cassels::{
    chein_congruence_replay, dz_pipeline, gcd_quotient, monotonicity_probe, quotient_expansion, Monotonicity,
};
use catalan_core::criteria::lemma_simp_lift;
use catalan_core::elementary::{
    conrad_base_case, euler_descent, mordell_classify, onab_decompose, pythagorean_parametrize, MordellBranch,
};
use catalan_core::padic::{ord_factorial, rational_binomial};
use catalan_core::pell::sqrt3_identity_check;
use catalan_core::Rational;

use crate::commands::{CliError, CliResult};
use catalan_cli::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Lemma {
    /// Doubling identities and parities of x^2 - 3y^2 = 1.
    Sqrt3Identities,
    /// Primitive Pythagorean triples from coprime (u, v).
    Pythagorean,
    /// Solutions of 2x^2 - y^2 = 1 through a^2 - 2b^2 = 1.
    Onab,
    /// The case analysis for x^2 - y^3 = 1 on its solutions.
    MordellCases,
    /// u^2 - 3u + 3 square with v = 1.
    ConradBase,
    /// The rational descent for y^3 + 1 a square.
    EulerDescent,
    /// Chein's decomposition and congruence for x^2 - y^3 = 1.
    Chein,
    /// gcd((a^q - b^q)/(a - b), a - b) divides q.
    GcdQuotient,
    /// Monotonicity of (u^x ± 1)^(1/x).
    Monotonicity,
    /// Integrality and q-divisibility pattern of the Dz expansion.
    DzPipeline,
    /// x ≡ 1 (mod q) and x^(q-1) ≡ 1 (mod q^2) give x ≡ 1 (mod q^2).
    Lifting,
    /// Exact denominators of binom(a/q, k).
    Denominators,
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&n| r(n, 1)).collect()
}

pub fn verify(lemma: Lemma) -> CliResult {
    let name = clap::ValueEnum::to_possible_value(&lemma).expect("named").get_name().to_string();
    let mut report = Report::new("verify-lemma").param("name", &name);
    match lemma {
        Lemma::Sqrt3Identities => {
            for n in 0..=50 {
                let id = sqrt3_identity_check(n);
                if let Some(v) = &id.first_violation {
                    report.note(format!("n = {n}: {v}"));
                }
                report.check(format!("n = {n}"), id.passed);
            }
        }
        Lemma::Pythagorean => {
            for (x, y, z, expect) in [(3, 4, 5, (2, 1)), (5, 12, 13, (3, 2)), (8, 15, 17, (4, 1)), (20, 21, 29, (5, 2))]
            {
                let uv = pythagorean_parametrize(x, y, z)?;
                report.result(json!({ "triple": [x, y, z], "uv": [uv.0, uv.1] }));
                report.check(format!("({x}, {y}, {z}) from {expect:?}"), uv == expect);
            }
        }
        Lemma::Onab => {
            for (x, y, expect) in [(5, 7, (3, 2)), (29, 41, (3, 2)), (169, 239, (17, 12)), (985, 1393, (17, 12))] {
                let ab = onab_decompose(x, y)?;
                report.result(json!({ "xy": [x, y], "ab": [ab.0, ab.1] }));
                report.check(format!("({x}, {y}) through {expect:?}"), ab == expect);
            }
        }
        Lemma::MordellCases => {
            for (x, y) in [(3, 2), (-3, 2), (1, 0), (-1, 0), (0, -1)] {
                let t = mordell_classify(&BigInt::from(x), &BigInt::from(y))?;
                let branch = match &t.branch {
                    MordellBranch::Coprime { .. } => "coprime",
                    MordellBranch::GcdThree { .. } => "gcd 3",
                };
                report.result(
                    json!({ "xy": [x, y], "gcd": t.gcd.to_string(), "branch": branch, "steps": t.steps.len() }),
                );
                report.check(format!("({x}, {y}) replays"), !t.steps.is_empty());
            }
        }
        Lemma::ConradBase => {
            let (us, squares) = conrad_base_case();
            report.result(json!({ "u": us, "squares": squares }));
            report.check("v = 1 forces u = 1", squares == [1]);
        }
        Lemma::EulerDescent => {
            for y in [r(-1, 1), r(0, 1), r(2, 1)] {
                let e = euler_descent(&y)?;
                report.result(
                    json!({ "y": y.to_string(), "product": e.product.to_string(), "square": e.product_is_square }),
                );
                report.check(
                    format!("y = {y}: product and factors are squares"),
                    e.product_is_square && e.factors_are_squares,
                );
            }
        }
        Lemma::Chein => {
            for x in [3, -3] {
                let c = chein_congruence_replay(&BigInt::from(x), &BigInt::from(2), 3)?;
                let d = &c.decomposition;
                report.result(json!({ "x": x, "sign": d.sign, "a": d.a.to_string(), "b": d.b.to_string(), "gcd": c.gcd.to_string() }));
                report.check(format!("x = {x}: (a, b) = (-1, -1)"), d.a == BigInt::from(-1) && d.b == BigInt::from(-1));
            }
        }
        Lemma::GcdQuotient => {
            for (a, b, q, expect) in [(2, 1, 7, 1), (4, 1, 3, 3), (3, 1, 5, 1), (7, 2, 5, 5), (-3, 2, 5, 5)] {
                let (ab, bb) = (BigInt::from(a), BigInt::from(b));
                let d = gcd_quotient(&ab, &bb, q)?;
                let direct = (ab.pow(q) - bb.pow(q)) / (&ab - &bb);
                report.result(json!({ "a": a, "b": b, "q": q, "gcd": d.to_string() }));
                report.check(format!("({a}, {b}, {q}) gives {expect}"), d == BigInt::from(expect));
                report.check(format!("({a}, {b}, {q}) expansion"), quotient_expansion(&ab, &bb, q) == direct);
            }
        }
        Lemma::Monotonicity => {
            let cases = [
                (r(2, 1), Monotonicity::Plus, ints(&[1, 2, 3])),
                (r(2, 1), Monotonicity::Minus, ints(&[1, 2, 3])),
                (r(1, 1), Monotonicity::Plus, ints(&[1, 2])),
                (r(3, 2), Monotonicity::Plus, vec![r(1, 2), r(1, 1), r(5, 2), r(7, 1)]),
                (r(5, 1), Monotonicity::Minus, vec![r(1, 3), r(1, 1), r(9, 4), r(40, 1)]),
            ];
            for (u, kind, samples) in cases {
                let ok = monotonicity_probe(&u, kind, &samples)?;
                report.check(format!("u = {u}, {kind:?}, {} samples", samples.len()), ok);
            }
        }
        Lemma::DzPipeline => {
            for (p, q) in [(5, 3), (7, 3), (7, 5), (11, 7), (13, 3)] {
                for a in [2, 3, -2, 10] {
                    let dz = dz_pipeline(p, q, &BigInt::from(a))?;
                    report.check(format!("(p, q) = ({p}, {q}), a = {a}"), dz.holds());
                }
            }
        }
        Lemma::Lifting => {
            for q in [3u64, 7, 11, 4871] {
                for k in 1..=3u64 {
                    let x = BigInt::from(1 + k * q * q);
                    report.check(format!("q = {q}, x = {x}"), lemma_simp_lift(q, &x)?);
                }
                // x ≡ 1 (mod q) only: the second hypothesis must fail
                let rejected = lemma_simp_lift(q, &BigInt::from(1 + q)).is_err();
                report.check(format!("q = {q}, x = {} rejected", 1 + q), rejected);
            }
        }
        Lemma::Denominators => {
            for q in [3u64, 5, 7] {
                let mut ok = true;
                for k in 0..=40u32 {
                    for a in [1i64, 2, -1, 11, 100] {
                        if a % q as i64 == 0 {
                            continue;
                        }
                        let c = rational_binomial(&r(a, q as i64), k);
                        let e = k as u64 + ord_factorial(q, k as u64)?;
                        ok &= *c.denom() == BigInt::from(q).pow(e as u32);
                    }
                }
                report.result(json!({ "q": q, "k_max": 40, "denominator_exponent_at_40": 40 + ord_factorial(q, 40)? }));
                report.check(format!("q = {q}: denominator q^(k + ord_q(k!))"), ok);
            }
        }
    }
    if report.checks.is_empty() {
        return Err(CliError::Failed(format!("lemma {name} ran no checks")));
    }
    Ok(report)
}
