//! Checkable pieces of Chein's proof for `x² − y^q = 1`, Lebesgue's
//! equation `x^m − y² = 1`, and the two Cassels relations for
//! `x^p − y^q = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{exact_root_big, is_prime_u64};
use crate::criteria::m095_relation_check;
use crate::elementary::{scan_by_x, scan_by_y, Equation, SolutionReport};
use crate::error::{invalid, precondition, Error, Result};
use crate::padic::{ord_factorial, ord_int, rational_binomial};
use crate::{PadicOrder, Rational};

fn require_prime(name: &str, v: u64) -> Result<()> {
    if is_prime_u64(v) {
        Ok(())
    } else {
        Err(Error::NotPrime(format!("{name} = {v}")))
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `gcd((a^q − b^q)/(a − b), a − b)`, which divides `q`.
pub fn gcd_quotient(a: &BigInt, b: &BigInt, q: u32) -> Result<BigInt> {
    require_prime("q", q as u64)?;
    if a == b {
        return Err(invalid("a and b must differ"));
    }
    if !a.gcd(b).is_one() {
        return Err(invalid(format!("{a} and {b} are not coprime")));
    }
    let diff = a - b;
    let quotient = (a.pow(q) - b.pow(q)) / &diff;
    let d = quotient.gcd(&diff);
    if !(d.is_one() || d == BigInt::from(q)) {
        return Err(precondition(format!("gcd {d} does not divide {q}")));
    }
    Ok(d)
}

/// `q·b^{q−1} + Σ_{i=2}^{q} C(q, i)(a − b)^{i−1} b^{q−i}`, the binomial
/// expansion of `(a^q − b^q)/(a − b)`.
pub fn quotient_expansion(a: &BigInt, b: &BigInt, q: u32) -> BigInt {
    let diff = a - b;
    let head = BigInt::from(q) * b.pow(q - 1);
    (2..=q).fold(head, |acc, i| acc + binomial(q, i) * diff.pow(i - 1) * b.pow(q - i))
}

/// `x − 1 = 2^{q−1}a^q` and `x + 1 = 2b^q` after `x ↦ sign·x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheinDecomposition {
    pub sign: i8,
    pub a: BigInt,
    pub b: BigInt,
}

fn check_chein_input(x: &BigInt, y: &BigInt, q: u32) -> Result<()> {
    if q < 3 || q % 2 == 0 {
        return Err(invalid(format!("q = {q} must be odd and at least 3")));
    }
    if x.is_zero() || y.is_zero() {
        return Err(invalid("x and y must be nonzero"));
    }
    if x * x - y.pow(q) != BigInt::one() {
        return Err(invalid(format!("({x}, {y}) does not satisfy x² − y^{q} = 1")));
    }
    Ok(())
}

pub fn chein_decompose(x: &BigInt, y: &BigInt, q: u32) -> Result<CheinDecomposition> {
    check_chein_input(x, y, q)?;
    let half: BigInt = (x + 1) / 2;
    let sign: i8 = if half.is_odd() { 1 } else { -1 };
    let xs: BigInt = x * sign;
    let two_pow = BigInt::one() << (q - 1);
    let fail = || precondition(format!("no decomposition for ({x}, {y}, {q})"));
    let lo: BigInt = &xs - 1u32;
    if !lo.is_multiple_of(&two_pow) {
        return Err(fail());
    }
    let a = exact_root_big(&(lo / &two_pow), q).ok_or_else(fail)?;
    let b = exact_root_big(&((&xs + 1) / 2), q).ok_or_else(fail)?;
    if !a.gcd(&b).is_one() || b.is_even() {
        return Err(fail());
    }
    Ok(CheinDecomposition { sign, a, b })
}

/// The quantities of the congruence step `x ≡ ±3 (mod q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheinReplay {
    pub decomposition: CheinDecomposition,
    /// `b² − 2a`
    pub factor: BigInt,
    /// `(b^{2q} − (2a)^q) / (b² − 2a)`
    pub cofactor: BigInt,
    pub gcd: BigInt,
    /// `x mod q` for the original `x`.
    pub x_mod_q: BigInt,
}

/// Replays `b^{2q} − (2a)^q = ((x − 3)/2)²`, the gcd split, and the
/// resulting congruence on a concrete solution.
pub fn chein_congruence_replay(x: &BigInt, y: &BigInt, q: u32) -> Result<CheinReplay> {
    let dec = chein_decompose(x, y, q)?;
    let xs: BigInt = x * dec.sign;
    let two_a: BigInt = 2 * &dec.a;
    let total = dec.b.pow(2 * q) - two_a.pow(q);
    let half: BigInt = (&xs - 3) / 2;
    if total != &half * &half {
        return Err(precondition("b^{2q} − (2a)^q ≠ ((x − 3)/2)²"));
    }
    let factor = &dec.b * &dec.b - &two_a;
    if factor.is_zero() {
        return Err(precondition("b² − 2a vanishes"));
    }
    let cofactor = &total / &factor;
    let gcd = gcd_quotient(&(&dec.b * &dec.b), &two_a, q)?;
    if gcd != factor.gcd(&cofactor) {
        return Err(precondition("gcd of the two factors disagrees with the quotient lemma"));
    }
    let qb = BigInt::from(q);
    if gcd == qb && !(&xs - 3u32).is_multiple_of(&qb) {
        return Err(precondition("gcd q yet x ≢ 3 (mod q)"));
    }
    let x_mod_q = x.mod_floor(&qb);
    Ok(CheinReplay { decomposition: dec, factor, cofactor, gcd, x_mod_q })
}

/// Taylor coefficients of `F_{m,n}(X) = ((1 + X)^m − X^m)^{1/n}` at `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FmnCoefficients {
    pub m: u32,
    pub n: u32,
    pub l: u32,
    /// `binom(m/n, j)` for `j = 0..=l`.
    pub coefficients: Vec<Rational>,
}

pub fn fmn_coefficients(m: u32, n: u32, l: u32) -> Result<FmnCoefficients> {
    if n == 0 || n % 2 == 0 {
        return Err(invalid(format!("n = {n} must be odd")));
    }
    if l >= m {
        return Err(invalid(format!("degree {l} must be below m = {m}")));
    }
    let alpha = Rational::new(BigInt::from(m), BigInt::from(n));
    let coefficients = (0..=l).map(|j| rational_binomial(&alpha, j)).collect();
    Ok(FmnCoefficients { m, n, l, coefficients })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Monotonicity {
    /// `(u^x + 1)^{1/x}`, decreasing for `u ≥ 1`.
    Plus,
    /// `(u^x − 1)^{1/x}`, increasing for `u > 1`.
    Minus,
}

/// Largest `a·b` (times the bit size of `u`) compared by exact powers.
const EXACT_EXPONENT_BUDGET: u64 = 1 << 20;

/// Relative separation required of approximate comparisons.
const FLOAT_MARGIN: f64 = 1e-9;

fn exact_compare(u: &Rational, kind: Monotonicity, a: u32, b: u32) -> std::cmp::Ordering {
    let shift = |r: Rational| match kind {
        Monotonicity::Plus => r + Rational::one(),
        Monotonicity::Minus => r - Rational::one(),
    };
    // f(a) vs f(b)  <=>  (u^a ± 1)^b vs (u^b ± 1)^a
    let lhs = shift(u.pow(a as i32)).pow(b as i32);
    let rhs = shift(u.pow(b as i32)).pow(a as i32);
    lhs.cmp(&rhs)
}

fn ratio_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// `ln f(x)`, evaluated as `ln u + ln(1 ± u^{−x}) / x`.
fn log_f(ln_u: f64, kind: Monotonicity, x: f64) -> f64 {
    let t = (-x * ln_u).exp();
    let tail = match kind {
        Monotonicity::Plus => t.ln_1p(),
        Monotonicity::Minus => (-t).ln_1p(),
    };
    ln_u + tail / x
}

/// Checks strict decrease (`Plus`) or increase (`Minus`) of
/// `(u^x ± 1)^{1/x}` along the samples.
///
/// Integer samples are compared exactly; otherwise the comparison is done in
/// floating point and must clear a relative margin, failing with
/// [`Error::InsufficientPrecision`] when it does not.
pub fn monotonicity_probe(u: &Rational, kind: Monotonicity, samples: &[Rational]) -> Result<bool> {
    let one = Rational::one();
    match kind {
        Monotonicity::Plus if *u < one => return Err(invalid("u must be at least 1")),
        Monotonicity::Minus if *u <= one => return Err(invalid("u must exceed 1")),
        _ => {}
    }
    if samples.len() < 2 {
        return Err(invalid("need at least two samples"));
    }
    if samples.iter().any(|s| !s.is_positive()) || samples.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("samples must be positive and strictly increasing"));
    }
    let expected = match kind {
        Monotonicity::Plus => std::cmp::Ordering::Greater,
        Monotonicity::Minus => std::cmp::Ordering::Less,
    };
    let u_bits = (u.numer().bits() + u.denom().bits()).max(1);
    let ln_u = ratio_to_f64(u).ln();
    for w in samples.windows(2) {
        let exact = match (w[0].is_integer(), w[1].is_integer()) {
            (true, true) => {
                let (a, b) = (w[0].to_integer().to_u32(), w[1].to_integer().to_u32());
                match (a, b) {
                    (Some(a), Some(b)) if (a as u64) * (b as u64) * u_bits <= EXACT_EXPONENT_BUDGET => Some((a, b)),
                    _ => None,
                }
            }
            _ => None,
        };
        let ord = match exact {
            Some((a, b)) => exact_compare(u, kind, a, b),
            None => {
                let (fa, fb) = (log_f(ln_u, kind, ratio_to_f64(&w[0])), log_f(ln_u, kind, ratio_to_f64(&w[1])));
                if !fa.is_finite() || !fb.is_finite() || (fa - fb).abs() <= FLOAT_MARGIN * fa.abs().max(1.0) {
                    return Err(Error::InsufficientPrecision(format!("cannot separate f({}) and f({})", w[0], w[1])));
                }
                fa.partial_cmp(&fb).expect("finite")
            }
        };
        if ord != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_pq(p: u64, q: u64) -> Result<()> {
    require_prime("p", p)?;
    require_prime("q", q)?;
    if !(p > q && q > 2) {
        return Err(invalid(format!("need p > q > 2, got p = {p}, q = {q}")));
    }
    Ok(())
}

/// Nonzero solutions of `x^p − y^q = 1` with `|x|, |y| ≤ bound`, together
/// with the Cassels relations `q | x`, `p | y` and the stronger `q² | x`,
/// `p² | y` checked on each.
pub fn catalan_pq_search(p: u64, q: u64, bound: u64) -> Result<SolutionReport> {
    check_pq(p, q)?;
    let (pe, qe) = (p as u32, q as u32);
    let sols: Vec<Vec<i128>> =
        scan_by_x(pe, qe, bound, Some(bound)).into_iter().filter(|t| t[0] != 0 && t[1] != 0).collect();
    let report = SolutionReport::new(
        Equation::Catalan { m: pe, n: qe },
        sols,
        &[("p", p), ("q", q), ("x", bound), ("y", bound)],
    )?;
    let (pi, qi) = (p as i128, q as i128);
    let cassels = report.solutions.iter().all(|t| t[0] % qi == 0 && t[1] % pi == 0);
    let mut squared = true;
    for t in &report.solutions {
        squared &= m095_relation_check(p, q, &BigInt::from(t[0]), &BigInt::from(t[1]))?;
    }
    let count = report.solutions.len();
    Ok(report
        .note(format!("{count} nonzero solutions; relations are checked on each"))
        .check("no nonzero solutions", count == 0)
        .check("q | x and p | y", cassels)
        .check("q^2 | x and p^2 | y", squared))
}

/// All solutions of `x² − y^q = 1` with `|x| ≤ bound`, prime `q ≥ 5`.
pub fn chao_ko_search(q: u64, bound: u64) -> Result<SolutionReport> {
    require_prime("q", q)?;
    if q < 5 {
        return Err(invalid(format!("q = {q} must be at least 5")));
    }
    let report = SolutionReport::new(
        Equation::Catalan { m: 2, n: q as u32 },
        scan_by_y(2, q as u32, bound),
        &[("q", q), ("x", bound)],
    )?;
    let only = report.solutions_are(&[&[1, 0], &[-1, 0], &[0, -1]]);
    Ok(report.check("only (±1, 0), (0, −1)", only))
}

/// All solutions of `x^m − y² = 1` with `|x| ≤ bound`, odd `m ≥ 3`.
pub fn lebesgue_search(m: u64, bound: u64) -> Result<SolutionReport> {
    if m < 3 || m % 2 == 0 {
        return Err(invalid(format!("m = {m} must be odd and at least 3")));
    }
    let report = SolutionReport::new(
        Equation::Catalan { m: m as u32, n: 2 },
        scan_by_x(m as u32, 2, bound, None),
        &[("m", m), ("x", bound)],
    )?;
    let only = report.solutions_are(&[&[1, 0]]);
    Ok(report.check("only (1, 0)", only))
}

/// The integer `Dz = D·a^{mq−p}·y − Σ_{k≤m} D·binom(p/q, k)·a^{mq−qk}` split
/// into its parts, for an arbitrary `a` with `|a| ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DzPipeline {
    /// `⌊p/q⌋ + 1`
    pub m: u32,
    /// `m + ord_q(m!)`, so `D = q^d_exponent`.
    pub d_exponent: u64,
    /// `D·a^{mq−p}`, the coefficient of `y`.
    pub y_coefficient: BigInt,
    /// `D·binom(p/q, k)·a^{mq−qk}` for `k = 0..=m`.
    pub summands: Vec<Rational>,
    pub all_integral: bool,
    /// `q` divides the `y` coefficient and every summand with `k < m`.
    pub lower_divisible: bool,
    /// `q` does not divide the `k = m` summand.
    pub top_not_divisible: bool,
    /// `m + ord_q(m!) − (p − 1)`; negative in the proof.
    pub exponent_gap: i64,
}

impl DzPipeline {
    pub fn holds(&self) -> bool {
        self.all_integral && self.lower_divisible && self.top_not_divisible && self.exponent_gap < 0
    }
}

pub fn dz_pipeline(p: u64, q: u64, a: &BigInt) -> Result<DzPipeline> {
    check_pq(p, q)?;
    if a.abs() < BigInt::from(2) {
        return Err(invalid("|a| must be at least 2"));
    }
    let m = (p / q + 1) as u32;
    let d_exponent = m as u64 + ord_factorial(q, m as u64)?;
    let qb = BigInt::from(q);
    let d = qb.pow(d_exponent as u32);
    let mq = m as u64 * q;
    let y_coefficient = &d * a.pow((mq - p) as u32);
    let alpha = Rational::new(BigInt::from(p), qb.clone());
    let summands: Vec<Rational> = (0..=m)
        .map(|k| {
            let power = a.pow((mq - q * k as u64) as u32);
            rational_binomial(&alpha, k) * Rational::from_integer(&d * power)
        })
        .collect();
    let all_integral = summands.iter().all(|s| s.is_integer());
    let divisible = |v: &BigInt| v.is_multiple_of(&qb);
    let lower_divisible = divisible(&y_coefficient)
        && summands[..m as usize].iter().all(|s| s.is_integer() && divisible(&s.to_integer()));
    let top = &summands[m as usize];
    let top_not_divisible = top.is_integer() && !divisible(&top.to_integer());
    debug_assert_eq!(
        ord_int(&qb, &top.to_integer()).map(|o| o == PadicOrder::Finite(0)).unwrap_or(false),
        top_not_divisible
    );
    let exponent_gap = d_exponent as i64 - (p as i64 - 1);
    Ok(DzPipeline {
        m,
        d_exponent,
        y_coefficient,
        summands,
        all_integral,
        lower_divisible,
        top_not_divisible,
        exponent_gap,
    })
}
