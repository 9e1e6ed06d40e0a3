//! The elementary cases: Pythagorean triples, the quartics `x⁴ − 2y² = 1`
//! and `x⁴ − 3y² = 1`, the replay of the elementary case analysis
//! for `x² − y³ = 1`, Conrad's auxiliary quartic, and Wakulicz's equation.
//!
//! Searches return a [`SolutionReport`] whose tuples are re-verified with
//! big-integer arithmetic when the report is built.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{checked_pow_i128, exact_root_big, exact_root_i128, iroot_u128};
use crate::error::{invalid, precondition, Result};
use crate::pell::{sqrt3_index_of_y, sqrt3_pair};
use crate::ufd::{gcd_elem, pp1_extract, pp2_extract, Side};
use crate::Rational;

/// The equations searched in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Equation {
    /// `x^m − y^n = 1`, tuples `(x, y)`.
    Catalan { m: u32, n: u32 },
    /// `x⁴ − k·y² = 1`, tuples `(x, y)`.
    Quartic { k: u32 },
    /// `x⁴ − 3x²y² + 3y⁴ = z²`, tuples `(x, y, z)`.
    ConradQuartic,
    /// `u`, `v` squares and `u² − 3uv + 3v² = w²`, tuples `(u, v, w)`.
    ConradSquares,
    /// `x³ + y³ = 2z³`, tuples `(x, y, z)`.
    Wakulicz,
    /// `x³ − 2y³ = ±1`, tuples `(x, y)`.
    CubicTwo,
    /// `b = a + 1` with both perfect powers of exponent at least 2,
    /// tuples `(a, b)`.
    ConsecutivePowers,
}

fn big(v: i128) -> BigInt {
    BigInt::from(v)
}

fn is_square_big(v: &BigInt) -> bool {
    exact_root_big(v, 2).is_some()
}

/// `n = x^m` for some `x ≥ 2`, `m ≥ 2`.
pub fn is_perfect_power(n: u128) -> bool {
    if n < 4 {
        return false;
    }
    let max_exp = 128 - n.leading_zeros();
    (2..=max_exp).any(|m| {
        let r = iroot_u128(n, m);
        r >= 2 && crate::arith::checked_pow_u128(r, m) == Some(n)
    })
}

impl Equation {
    pub fn arity(&self) -> usize {
        match self {
            Equation::ConradQuartic | Equation::ConradSquares | Equation::Wakulicz => 3,
            _ => 2,
        }
    }

    /// Exact membership test.
    pub fn holds(&self, t: &[i128]) -> bool {
        if t.len() != self.arity() {
            return false;
        }
        match *self {
            Equation::Catalan { m, n } => big(t[0]).pow(m) - big(t[1]).pow(n) == BigInt::one(),
            Equation::Quartic { k } => big(t[0]).pow(4) - BigInt::from(k) * big(t[1]).pow(2) == BigInt::one(),
            Equation::ConradQuartic => {
                let (x, y, z) = (big(t[0]), big(t[1]), big(t[2]));
                x.pow(4) - 3 * x.pow(2) * y.pow(2) + 3 * y.pow(4) == z.pow(2)
            }
            Equation::ConradSquares => {
                let (u, v, w) = (big(t[0]), big(t[1]), big(t[2]));
                is_square_big(&u) && is_square_big(&v) && &u * &u - 3 * &u * &v + 3 * &v * &v == &w * &w
            }
            Equation::Wakulicz => big(t[0]).pow(3) + big(t[1]).pow(3) == 2 * big(t[2]).pow(3),
            Equation::CubicTwo => {
                let lhs: BigInt = big(t[0]).pow(3) - 2 * big(t[1]).pow(3);
                lhs.abs().is_one()
            }
            Equation::ConsecutivePowers => {
                t[0] >= 0 && t[1] == t[0] + 1 && is_perfect_power(t[0] as u128) && is_perfect_power(t[1] as u128)
            }
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equation::Catalan { m, n } => write!(f, "x^{m} - y^{n} = 1"),
            Equation::Quartic { k } => write!(f, "x^4 - {k}y^2 = 1"),
            Equation::ConradQuartic => f.write_str("x^4 - 3x^2y^2 + 3y^4 = z^2"),
            Equation::ConradSquares => f.write_str("u, v squares, u^2 - 3uv + 3v^2 = w^2"),
            Equation::Wakulicz => f.write_str("x^3 + y^3 = 2z^3"),
            Equation::CubicTwo => f.write_str("x^3 - 2y^3 = ±1"),
            Equation::ConsecutivePowers => f.write_str("a, a + 1 perfect powers"),
        }
    }
}

/// A named boolean check attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Solutions of one equation within stated bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub equation: Equation,
    /// Sorted, without duplicates.
    pub solutions: Vec<Vec<i128>>,
    pub bounds: Vec<(String, u64)>,
    pub checks: Vec<Check>,
    pub trace: Vec<String>,
}

impl SolutionReport {
    /// Sorts and deduplicates `solutions`, rejecting any tuple that does not
    /// satisfy `equation`.
    pub fn new(equation: Equation, mut solutions: Vec<Vec<i128>>, bounds: &[(&str, u64)]) -> Result<Self> {
        solutions.sort();
        solutions.dedup();
        if let Some(bad) = solutions.iter().find(|t| !equation.holds(t)) {
            return Err(invalid(format!("{bad:?} does not satisfy {equation}")));
        }
        Ok(SolutionReport {
            equation,
            solutions,
            bounds: bounds.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            checks: Vec::new(),
            trace: Vec::new(),
        })
    }

    pub fn check(mut self, name: impl Into<String>, passed: bool) -> Self {
        self.checks.push(Check { name: name.into(), passed });
        self
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.trace.push(line.into());
        self
    }

    /// Re-verifies every tuple (for reports that were deserialized).
    pub fn verify(&self) -> bool {
        self.solutions.iter().all(|t| self.equation.holds(t))
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn contains(&self, t: &[i128]) -> bool {
        self.solutions.binary_search_by(|s| s.as_slice().cmp(t)).is_ok()
    }

    /// True iff the solution set is exactly `expected` (in any order).
    pub fn solutions_are(&self, expected: &[&[i128]]) -> bool {
        let mut e: Vec<Vec<i128>> = expected.iter().map(|t| t.to_vec()).collect();
        e.sort();
        e.dedup();
        e == self.solutions
    }
}

/// Integer `k`-th roots of `v`: both signs for even `k`.
fn int_roots(v: &BigInt, k: u32) -> Vec<i128> {
    let root = match v.to_i128() {
        Some(small) => exact_root_i128(small, k),
        None => exact_root_big(v, k).and_then(|r| r.to_i128()),
    };
    match root {
        Some(r) if k % 2 == 0 && r != 0 => vec![-r, r],
        Some(r) => vec![r],
        None => Vec::new(),
    }
}

fn pow_big(base: i128, k: u32) -> BigInt {
    match checked_pow_i128(base, k) {
        Some(v) => BigInt::from(v),
        None => big(base).pow(k),
    }
}

/// All `(x, y)` with `x^m − y^n = 1` and `|x| ≤ x_bound`, scanning `y`.
///
/// `|y|^n ≤ x_bound^m + 1` bounds the scan; for odd `n` additionally `y ≥ −1`
/// when `m` is even.
pub(crate) fn scan_by_y(m: u32, n: u32, x_bound: u64) -> Vec<Vec<i128>> {
    let top = BigInt::from(x_bound).pow(m) + 1u32;
    let y_max = top.nth_root(n).to_i128().expect("root of a bounded value fits i128") as i64;
    let y_min = if m % 2 == 0 && n % 2 == 1 { -1 } else { -y_max };
    let xb = x_bound as i128;
    (y_min..=y_max)
        .into_par_iter()
        .flat_map_iter(|y| {
            let v = pow_big(y as i128, n) + 1u32;
            int_roots(&v, m).into_iter().filter(move |x| x.abs() <= xb).map(move |x| vec![x, y as i128])
        })
        .collect()
}

/// All `(x, y)` with `x^m − y^n = 1`, `|x| ≤ x_bound` and, if given,
/// `|y| ≤ y_bound`, scanning `x`.
pub(crate) fn scan_by_x(m: u32, n: u32, x_bound: u64, y_bound: Option<u64>) -> Vec<Vec<i128>> {
    let xb = x_bound as i64;
    (-xb..=xb)
        .into_par_iter()
        .flat_map_iter(|x| {
            let v = pow_big(x as i128, m) - 1u32;
            int_roots(&v, n)
                .into_iter()
                .filter(move |y| y_bound.map_or(true, |b| y.unsigned_abs() <= b as u128))
                .map(move |y| vec![x as i128, y])
        })
        .collect()
}

/// Coprime `(u, v)` with `z = u² + v²` and `{x, y} = {u² − v², 2uv}`.
pub fn pythagorean_parametrize(x: u64, y: u64, z: u64) -> Result<(u64, u64)> {
    let (x, y, z) = (x as u128, y as u128, z as u128);
    if x * x + y * y != z * z {
        return Err(invalid(format!("({x}, {y}, {z}) is not a Pythagorean triple")));
    }
    if x.gcd(&y) != 1 || y.gcd(&z) != 1 || x.gcd(&z) != 1 {
        return Err(invalid(format!("({x}, {y}, {z}) is not pairwise coprime")));
    }
    let (odd, even) = if x % 2 == 1 { (x, y) } else { (y, x) };
    let halves = [BigInt::from((z + odd) / 2), BigInt::from((z - odd) / 2)];
    let roots = pp1_extract(&halves, 2)?;
    let u = roots[0].abs().to_u64().expect("u ≤ z");
    let v = roots[1].abs().to_u64().expect("v ≤ z");
    let (uu, vv) = (u as u128, v as u128);
    debug_assert_eq!(2 * uu * vv, even);
    debug_assert_eq!(uu * uu - vv * vv, odd);
    Ok((u, v))
}

/// `(a, b)` with `a² − 2b² = 1` and `x ∈ {2a² − 1 + 2ab, 2a² − 1 − 2ab}` for
/// a solution of `2x² − y² = 1`.
pub fn onab_decompose(x: u64, y: u64) -> Result<(u64, u64)> {
    let (xw, yw) = (x as u128, y as u128);
    if 2 * xw * xw != yw * yw + 1 {
        return Err(invalid(format!("2·{x}² − {y}² ≠ 1")));
    }
    let y0 = (y - 1) / 2;
    let (u, v) = pythagorean_parametrize(y0, y0 + 1, x)?;
    let (a, b) = if 2 * (u as u128) * (v as u128) == y0 as u128 { (u - v, v) } else { (u + v, u) };
    let (aw, bw) = (a as u128, b as u128);
    let lhs = aw * aw;
    let ok = lhs == 2 * bw * bw + 1 && {
        let base = 2 * aw * aw - 1;
        xw == base + 2 * aw * bw || xw + 2 * aw * bw == base
    };
    if !ok {
        return Err(invalid(format!("decomposition of ({x}, {y}) failed to verify")));
    }
    Ok((a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuarticKind {
    /// `x⁴ − 2y² = 1`
    Two,
    /// `x⁴ − 3y² = 1`
    Three,
}

impl QuarticKind {
    pub fn k(self) -> u32 {
        match self {
            QuarticKind::Two => 2,
            QuarticKind::Three => 3,
        }
    }
}

/// All solutions with `|x| ≤ bound`.
pub fn quartic_search(kind: QuarticKind, bound: u64) -> Result<SolutionReport> {
    if bound < 1 {
        return Err(invalid("bound must be at least 1"));
    }
    let k = kind.k() as i128;
    let sols: Vec<Vec<i128>> = (0..=bound as i64)
        .into_par_iter()
        .flat_map_iter(|x| {
            let x = x as i128;
            let v = pow_big(x, 4) - 1u32;
            let mut out = Vec::new();
            if v.is_multiple_of(&BigInt::from(k)) {
                for y in int_roots(&(v / k), 2) {
                    out.push(vec![x, y]);
                    out.push(vec![-x, y]);
                }
            }
            out
        })
        .collect();
    let report = SolutionReport::new(Equation::Quartic { k: kind.k() }, sols, &[("x", bound)])?;
    let trivial = report.solutions_are(&[&[1, 0], &[-1, 0]]);
    Ok(report.check("only (±1, 0)", trivial))
}

/// All integer solutions of `x² − y³ = 1` with `|x| ≤ bound`.
pub fn mordell_search(bound: u64) -> Result<SolutionReport> {
    if bound < 3 {
        return Err(invalid("bound must be at least 3"));
    }
    let report = SolutionReport::new(Equation::Catalan { m: 2, n: 3 }, scan_by_y(2, 3, bound), &[("x", bound)])?;
    let five = report.solutions_are(&[&[3, 2], &[-3, 2], &[1, 0], &[-1, 0], &[0, -1]]);
    Ok(report.check("exactly (±3, 2), (±1, 0), (0, −1)", five))
}

/// Consecutive perfect powers `a, a + 1` with `a + 1 ≤ max`.
pub fn consecutive_powers(max: u64) -> Result<SolutionReport> {
    if max < 4 {
        return Err(invalid("max must be at least 4"));
    }
    let limit = max as u128;
    let mut powers = Vec::new();
    let mut m = 2u32;
    while (1u128 << m) <= limit {
        let top = iroot_u128(limit, m);
        for x in 2..=top {
            powers.push(crate::arith::checked_pow_u128(x, m).expect("x^m ≤ max"));
        }
        m += 1;
    }
    powers.sort_unstable();
    powers.dedup();
    let count = powers.len() as u64;
    let pairs = powers.windows(2).filter(|w| w[1] == w[0] + 1).map(|w| vec![w[0] as i128, w[1] as i128]).collect();
    let report = SolutionReport::new(Equation::ConsecutivePowers, pairs, &[("max", max)])?;
    let only = report.solutions_are(&[&[8, 9]]);
    Ok(report.note(format!("{count} perfect powers up to {max}")).check("only (8, 9)", only))
}

/// The proof branch taken by a concrete solution of `x² − y³ = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MordellBranch {
    /// `gcd(y + 1, y² − y + 1) = 1`: both factors are squares.
    Coprime { squares: (BigInt, BigInt), roots: (BigInt, BigInt) },
    /// `gcd = 3`: `y + 1 = 3a²`, `y² − y + 1 = 3b²`, `X = 2b`, `2y − 1 = 3Y`.
    GcdThree { a: BigInt, b: BigInt, big_x: BigInt, big_y: BigInt, pell: Option<PellTail> },
}

/// The Pell part of the gcd-3 branch for `Y ≥ 0`: `Y = y_n`, `n = 2m + 1`,
/// `a² = x_m·y_{m+1}` and the final gcd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellTail {
    pub n: u64,
    pub m: u64,
    pub x_m: BigInt,
    pub y_m1: BigInt,
    pub sub_gcd: BigInt,
    /// For `sub_gcd = 1`, the root of the square `x_m`; for `sub_gcd = 2`,
    /// `c` with `y_{m+1} = 2c²`.
    pub root: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MordellTrace {
    pub x: BigInt,
    pub y: BigInt,
    pub gcd: BigInt,
    pub branch: MordellBranch,
    /// Every identity checked, in order.
    pub steps: Vec<String>,
}

fn require(cond: bool, what: &str, steps: &mut Vec<String>) -> Result<()> {
    if !cond {
        return Err(precondition(format!("identity failed: {what}")));
    }
    steps.push(what.to_string());
    Ok(())
}

/// Replays the case analysis for `x² − y³ = 1` on a concrete solution,
/// re-verifying each identity.
pub fn mordell_classify(x: &BigInt, y: &BigInt) -> Result<MordellTrace> {
    if x * x - y.pow(3) != BigInt::one() {
        return Err(invalid(format!("({x}, {y}) does not satisfy x² − y³ = 1")));
    }
    let mut steps = Vec::new();
    let f1: BigInt = y + 1;
    let f2: BigInt = y * y - y + 1;
    require(&f1 * &f2 == x * x, "x² = (y + 1)(y² − y + 1)", &mut steps)?;
    require(!f1.is_negative(), "y + 1 ≥ 0", &mut steps)?;
    let g = gcd_elem(&f1, &f2);
    require(g.is_one() || g == BigInt::from(3), "gcd(y + 1, y² − y + 1) ∈ {1, 3}", &mut steps)?;

    if g.is_one() {
        let roots = pp1_extract(&[f1.clone(), f2.clone()], 2)?;
        let (r1, r2) = (roots[0].abs(), roots[1].abs());
        require(&r1 * &r1 == f1 && &r2 * &r2 == f2, "y + 1 and y² − y + 1 are squares", &mut steps)?;
        let a = r2.clone();
        let two_y = 2 * y;
        require(
            (2 * &a - &two_y + 1) * (2 * &a + &two_y - 1) == BigInt::from(3),
            "3 = (2a − 2y + 1)(2a + 2y − 1)",
            &mut steps,
        )?;
        require(y.is_zero(), "y = 0 (y = 1 leaves y + 1 = 2 not a square)", &mut steps)?;
        return Ok(MordellTrace {
            x: x.clone(),
            y: y.clone(),
            gcd: g,
            branch: MordellBranch::Coprime { squares: (f1, f2), roots: (r1, r2) },
            steps,
        });
    }

    let three = BigInt::from(3);
    let w = pp2_extract(&f1, &f2, &three, 2)?;
    let (a, b) = match w.single {
        Side::First => (w.d.abs(), w.e.abs()),
        Side::Second => (w.e.abs(), w.d.abs()),
    };
    require(f1 == 3 * &a * &a, "y + 1 = 3a²", &mut steps)?;
    require(f2 == 3 * &b * &b, "y² − y + 1 = 3b²", &mut steps)?;
    let big_x = 2 * &b;
    let two_y_minus_one: BigInt = 2 * y - 1;
    require(two_y_minus_one.is_multiple_of(&three), "3 | 2y − 1", &mut steps)?;
    let big_y: BigInt = two_y_minus_one / 3;
    require(&big_x * &big_x - 3 * &big_y * &big_y == BigInt::one(), "X² − 3Y² = 1", &mut steps)?;
    require(big_y == 2 * &a * &a - 1, "Y = 2a² − 1", &mut steps)?;

    let pell = if big_y.is_negative() {
        require(big_y == BigInt::from(-1) && a.is_zero(), "(X, Y, a) = (2, −1, 0)", &mut steps)?;
        None
    } else {
        let n = sqrt3_index_of_y(&big_y).ok_or_else(|| precondition("Y is not a Pell coordinate y_n"))?;
        require(n % 2 == 1, "n is odd", &mut steps)?;
        let m = (n - 1) / 2;
        let (x_m, y_m) = sqrt3_pair(m);
        let (_, y_m1) = sqrt3_pair(m + 1);
        require(big_y == 2 * &x_m * &y_m1 - 1, "y_{2m+1} = 2x_m y_{m+1} − 1", &mut steps)?;
        require(&a * &a == &x_m * &y_m1, "a² = x_m y_{m+1}", &mut steps)?;
        require(y_m1 == &x_m + 2 * &y_m, "y_{m+1} = x_m + 2y_m", &mut steps)?;
        let sub_gcd = gcd_elem(&x_m, &y_m1);
        require(sub_gcd.is_one() || sub_gcd == BigInt::from(2), "gcd(x_m, y_{m+1}) ∈ {1, 2}", &mut steps)?;
        let root = if sub_gcd.is_one() {
            let r = pp1_extract(&[x_m.clone(), y_m1.clone()], 2)?[0].abs();
            require(&r * &r == x_m, "x_m is a square", &mut steps)?;
            require(x_m.is_one() && m == 0 && n == 1, "x_m = 1, m = 0, n = 1", &mut steps)?;
            r
        } else {
            let w = pp2_extract(&x_m, &y_m1, &BigInt::from(2), 2)?;
            let c = match w.single {
                Side::First => w.e.abs(),
                Side::Second => w.d.abs(),
            };
            require(y_m1 == 2 * &c * &c, "y_{m+1} = 2c²", &mut steps)?;
            c
        };
        Some(PellTail { n, m, x_m, y_m1, sub_gcd, root })
    };
    Ok(MordellTrace {
        x: x.clone(),
        y: y.clone(),
        gcd: g,
        branch: MordellBranch::GcdThree { a, b, big_x, big_y, pell },
        steps,
    })
}

/// All `(x, y, z)` in `[1, bound]³` with `gcd(x, y) = 1`, `3 ∤ x` and
/// `x⁴ − 3x²y² + 3y⁴ = z²`.
pub fn conrad_quartic_search(bound: u64) -> Result<SolutionReport> {
    if bound < 1 {
        return Err(invalid("bound must be at least 1"));
    }
    let b = bound as i64;
    let sols: Vec<Vec<i128>> = (1..=b)
        .into_par_iter()
        .filter(|x| x % 3 != 0)
        .flat_map_iter(|x| {
            (1..=b).filter_map(move |y| {
                if x.gcd(&y) != 1 {
                    return None;
                }
                let (x, y) = (x as i128, y as i128);
                let v = x.pow(4) - 3 * x * x * y * y + 3 * y.pow(4);
                exact_root_i128(v, 2).map(|z| vec![x, y, z])
            })
        })
        .collect();
    let report = SolutionReport::new(Equation::ConradQuartic, sols, &[("x", bound), ("y", bound)])?;
    let only = report.solutions_are(&[&[1, 1, 1]]);
    Ok(report.check("only (1, 1, 1)", only))
}

/// Coprime `u, v ≤ bound`, both squares, `3 ∤ u`, with `u² − 3uv + 3v²` a
/// square.
pub fn conrad_squares_search(bound: u64) -> Result<SolutionReport> {
    if bound < 1 {
        return Err(invalid("bound must be at least 1"));
    }
    let top = iroot_u128(bound as u128, 2) as i128;
    let mut sols = Vec::new();
    for s in 1..=top {
        let u = s * s;
        if u % 3 == 0 {
            continue;
        }
        for t in 1..=top {
            let v = t * t;
            if u.gcd(&v) != 1 {
                continue;
            }
            if let Some(w) = exact_root_i128(u * u - 3 * u * v + 3 * v * v, 2) {
                sols.push(vec![u, v, w]);
            }
        }
    }
    let base = conrad_base_case();
    let report = SolutionReport::new(Equation::ConradSquares, sols, &[("u", bound), ("v", bound)])?;
    let only = report.solutions_are(&[&[1, 1, 1]]);
    Ok(report
        .note(format!("v = 1: u² − 3u + 3 square for u ∈ {:?}", base.0))
        .check("v = 1 forces u = 1", base.1 == vec![1])
        .check("only u = v = 1", only))
}

/// For `v = 1`: every integer `u` with `u² − 3u + 3` a square, found from the
/// factorizations of `3 = (2a − 2u + 3)(2a + 2u − 3)`, and those `u ≥ 1`
/// that are squares.
pub fn conrad_base_case() -> (Vec<i64>, Vec<i64>) {
    let mut us = Vec::new();
    for s in [-3i64, -1, 1, 3] {
        let t = 3 / s;
        // s = 2a − (2u − 3), t = 2a + (2u − 3)
        let diff = t - s;
        if diff % 2 != 0 {
            continue;
        }
        let two_u = diff / 2 + 3;
        if two_u % 2 == 0 {
            let u = two_u / 2;
            debug_assert!(exact_root_i128((u * u - 3 * u + 3) as i128, 2).is_some());
            us.push(u);
        }
    }
    us.sort_unstable();
    us.dedup();
    let squares = us.iter().copied().filter(|&u| u >= 1 && exact_root_i128(u as i128, 2).is_some()).collect();
    (us, squares)
}

/// Solutions of `x³ + y³ = 2z³` in the box `|x|, |y|, |z| ≤ bound`.
///
/// Checks that only `x = y = z` and `(x, −x, 0)` occur and that the induced
/// solutions of `x³ − 2y³ = ±1` (`y ↦ ∓1`) are `(±1, 0)`, `(1, 1)`,
/// `(−1, −1)`.
pub fn wakulicz_search(bound: u64) -> Result<SolutionReport> {
    if bound < 1 {
        return Err(invalid("bound must be at least 1"));
    }
    let b = bound as i64;
    let sols: Vec<Vec<i128>> = (-b..=b)
        .into_par_iter()
        .flat_map_iter(|x| {
            (-b..=b).filter_map(move |y| {
                let (x, y) = (x as i128, y as i128);
                let s = x * x * x + y * y * y;
                if s % 2 != 0 {
                    return None;
                }
                exact_root_i128(s / 2, 3).filter(|z| z.abs() <= b as i128).map(|z| vec![x, y, z])
            })
        })
        .collect();
    let report = SolutionReport::new(Equation::Wakulicz, sols, &[("x", bound), ("y", bound), ("z", bound)])?;
    let families = report.solutions.iter().all(|t| (t[0] == t[1] && t[1] == t[2]) || (t[0] == -t[1] && t[2] == 0));
    let expected = (2 * bound + 1) * 2 - 1;
    let complete = report.solutions.len() as u64 == expected;
    // x³ − 2y³ = s becomes x³ + (−s)³ = 2y³.
    let derived: Vec<Vec<i128>> = [1i128, -1]
        .iter()
        .flat_map(|&s| {
            report.solutions.iter().filter(move |t| t[1] == -s).map(|t| vec![t[0], t[2]]).collect::<Vec<_>>()
        })
        .collect();
    let derived = SolutionReport::new(Equation::CubicTwo, derived, &[])?;
    let cubic_ok = derived.solutions_are(&[&[1, 0], &[-1, 0], &[1, 1], &[-1, -1]]);
    Ok(report
        .note(format!("induced x^3 - 2y^3 = ±1 solutions: {:?}", derived.solutions))
        .check("only x = y = z and (x, −x, 0)", families)
        .check("both families fully present", complete)
        .check("x^3 - 2y^3 = ±1 induced set is (±1, 0), (1, 1), (−1, −1)", cubic_ok))
}

/// Solutions of `x³ − 2y³ = ±1` with `|x| ≤ bound`.
pub fn cubic_two_search(bound: u64) -> Result<SolutionReport> {
    if bound < 1 {
        return Err(invalid("bound must be at least 1"));
    }
    let b = bound as i64;
    let sols: Vec<Vec<i128>> = (-b..=b)
        .into_par_iter()
        .flat_map_iter(|x| {
            let x3 = pow_big(x as i128, 3);
            [1i32, -1]
                .into_iter()
                .filter_map(|s| {
                    let v = &x3 - s;
                    if v.is_odd() {
                        return None;
                    }
                    int_roots(&(v / 2), 3).first().map(|&y| vec![x as i128, y])
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let report = SolutionReport::new(Equation::CubicTwo, sols, &[("x", bound)])?;
    let only = report.solutions_are(&[&[1, 0], &[-1, 0], &[1, 1], &[-1, -1]]);
    Ok(report.check("only (±1, 0), (1, 1), (−1, −1)", only))
}

/// The rational descent applied to `y = a/b` with `y³ + 1` a square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerDescent {
    pub a: BigInt,
    pub b: BigInt,
    /// `c = a + b`.
    pub c: BigInt,
    /// `b(a³ + b³)`.
    pub product: BigInt,
    pub product_is_square: bool,
    /// The three pairwise coprime factors that must each be a square:
    /// `b, c, c² − 3bc + 3b²` when `3 ∤ c`, else `b, c/3, b² − 3bd + 3d²`.
    pub factors: Option<[BigInt; 3]>,
    pub factors_are_squares: bool,
}

/// Runs the descent on a rational `y ≥ −1` for which `y³ + 1` is a square.
pub fn euler_descent(y: &Rational) -> Result<EulerDescent> {
    let v = y.pow(3) + Rational::one();
    let square = exact_root_big(v.numer(), 2).is_some() && exact_root_big(v.denom(), 2).is_some();
    if !square {
        return Err(invalid(format!("{y}³ + 1 is not a rational square")));
    }
    let (a, b) = (y.numer().clone(), y.denom().clone());
    let c = &a + &b;
    let product = &b * (a.pow(3) + b.pow(3));
    let product_is_square = !product.is_negative() && is_square_big(&product);
    if c.is_zero() {
        return Ok(EulerDescent { a, b, c, product, product_is_square, factors: None, factors_are_squares: true });
    }
    let factors = if c.is_multiple_of(&BigInt::from(3)) {
        let d = &c / 3;
        let third = &b * &b - 3 * &b * &d + 3 * &d * &d;
        [b.clone(), d, third]
    } else {
        let third = &c * &c - 3 * &b * &c + 3 * &b * &b;
        [b.clone(), c.clone(), third]
    };
    let factors_are_squares = factors.iter().all(is_square_big);
    Ok(EulerDescent { a, b, c, product, product_is_square, factors: Some(factors), factors_are_squares })
}
