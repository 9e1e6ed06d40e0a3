//! Pell equations `x² − d·y² = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{exact_root_big, isqrt_big};
use crate::error::{invalid, Result};
use crate::scalar::{pow, Int};

/// A natural solution `x + y√d = (a + b√d)^index`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PellSolution<T> {
    pub x: T,
    pub y: T,
    pub index: u64,
}

impl<T: Int> PellSolution<T> {
    /// Checks `x² − d·y² = 1`, `x > 0`, `y ≥ 0` and that index 0 is `(1, 0)`.
    pub fn new(d: &T, x: T, y: T, index: u64) -> Result<Self> {
        if x.clone() * x.clone() - d.clone() * y.clone() * y.clone() != T::one() {
            return Err(invalid(format!("({x}, {y}) does not solve x² − {d}y² = 1")));
        }
        if !x.is_positive() || y.is_negative() {
            return Err(invalid("solutions are kept in the quadrant x > 0, y ≥ 0"));
        }
        if (index == 0) != y.is_zero() {
            return Err(invalid("index 0 is exactly the trivial solution"));
        }
        Ok(PellSolution { x, y, index })
    }
}

fn check_d<T: Int>(d: &T) -> Result<BigInt> {
    let db = d.big();
    if db < BigInt::from(2) {
        return Err(invalid(format!("d = {d} must be at least 2")));
    }
    if exact_root_big(&db, 2).is_some() {
        return Err(invalid(format!("d = {d} is a perfect square")));
    }
    Ok(db)
}

fn narrow<T: Int>(v: &BigInt) -> Result<T> {
    T::from_bigint(v).ok_or_else(|| invalid(format!("{v} does not fit the scalar type")))
}

/// The fundamental solution, read off the convergents of the continued
/// fraction of `√d`.
pub fn minimal_solution<T: Int>(d: &T) -> Result<PellSolution<T>> {
    let db = check_d(d)?;
    let a0 = isqrt_big(&db);
    let (mut m, mut den, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    // convergents h/k
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    loop {
        if &h * &h - &db * &k * &k == BigInt::one() {
            return PellSolution::new(d, narrow(&h)?, narrow(&k)?, 1);
        }
        m = &den * &a - m;
        den = (&db - &m * &m) / den;
        a = (&a0 + &m) / &den;
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}

/// Smallest solution found by scanning `y = 1..=y_limit` for a square
/// `1 + d·y²`.
pub fn minimal_solution_by_search(d: u64, y_limit: u64) -> Option<(u128, u128)> {
    (1..=y_limit as u128).find_map(|y| {
        let target = 1 + d as u128 * y * y;
        crate::arith::exact_root_u128(target, 2).map(|x| (x, y))
    })
}

/// `(x_n, y_n)` with `x_n + y_n√d = (a + b√d)^n`, by binomial expansion.
pub fn nth_solution<T: Int>(d: &T, n: u64) -> Result<PellSolution<T>> {
    let fundamental = minimal_solution(d)?;
    let (a, b, db) = (fundamental.x.big(), fundamental.y.big(), d.big());
    let n32 = u32::try_from(n).map_err(|_| invalid("index too large"))?;
    let mut x = BigInt::zero();
    let mut y = BigInt::zero();
    let mut binom = BigInt::one();
    for j in 0..=n32 {
        let term = &binom * pow(&a, n32 - j) * pow(&b, j) * pow(&db, j / 2);
        if j % 2 == 0 {
            x += term;
        } else {
            y += term;
        }
        binom = binom * BigInt::from(n32 - j) / BigInt::from(j + 1);
    }
    PellSolution::new(d, narrow(&x)?, narrow(&y)?, n)
}

/// Every natural solution with `x ≤ x_bound`, increasing in `x`.
pub fn enumerate_solutions<T: Int>(d: &T, x_bound: &T) -> Result<Vec<PellSolution<T>>> {
    let fundamental = minimal_solution(d)?;
    let (a, b, db) = (fundamental.x.big(), fundamental.y.big(), d.big());
    let bound = x_bound.big();
    let mut out = Vec::new();
    let (mut x, mut y) = (BigInt::one(), BigInt::zero());
    let mut index = 0;
    while x <= bound {
        out.push(PellSolution::new(d, narrow(&x)?, narrow(&y)?, index)?);
        let nx = &a * &x + &db * &b * &y;
        let ny = &a * &y + &b * &x;
        x = nx;
        y = ny;
        index += 1;
    }
    Ok(out)
}

/// Outcome of checking the doubling identities for `x² − 3y² = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n: u64,
    pub passed: bool,
    pub first_violation: Option<String>,
}

/// Checks, for `x_k + y_k√3 = (2 + √3)^k` and index `n`:
/// `x_{2n} = 2x_n² − 1`, `y_{2n} = 2x_n y_n`, `x_{2n+1} = (y_n + y_{n+1})² + 1`,
/// `y_{2n+1} = 2x_n y_{n+1} − 1`, the recurrence `x_{k+1} = 2x_k + 3y_k`,
/// `y_{k+1} = x_k + 2y_k` against the binomial expansion for every
/// `k ≤ 2n + 1`, and that `x_k` is odd exactly for even `k` with `x_k`, `y_k`
/// of different parity.
pub fn sqrt3_identity_check(n: u64) -> IdentityReport {
    let d = BigInt::from(3);
    let top = 2 * n + 1;
    let mut seq: Vec<(BigInt, BigInt)> = vec![(BigInt::one(), BigInt::zero())];
    for _ in 0..top {
        let (x, y) = seq.last().expect("nonempty");
        seq.push((2 * x + 3 * y, x + 2 * y));
    }
    let fail = |msg: String| IdentityReport { n, passed: false, first_violation: Some(msg) };
    for (k, (x, y)) in seq.iter().enumerate() {
        let expanded = match nth_solution(&d, k as u64) {
            Ok(s) => s,
            Err(e) => return fail(format!("expansion failed at k={k}: {e}")),
        };
        if (&expanded.x, &expanded.y) != (x, y) {
            return fail(format!("recurrence disagrees with (2+√3)^{k}"));
        }
        if x.is_odd() != (k % 2 == 0) {
            return fail(format!("parity of x_{k} = {x}"));
        }
        if x.is_odd() == y.is_odd() {
            return fail(format!("x_{k}, y_{k} share parity"));
        }
    }
    let i = n as usize;
    let (xn, yn) = &seq[i];
    let yn1 = &seq[i + 1].1;
    let (x2n, y2n) = &seq[2 * i];
    let (x2n1, y2n1) = &seq[2 * i + 1];
    if *x2n != 2 * xn * xn - 1 {
        return fail(format!("x_{{2n}} = 2x_n² − 1 at n={n}"));
    }
    if *y2n != 2 * xn * yn {
        return fail(format!("y_{{2n}} = 2x_n y_n at n={n}"));
    }
    let s = yn + yn1;
    if *x2n1 != &s * &s + 1 {
        return fail(format!("x_{{2n+1}} = (y_n + y_{{n+1}})² + 1 at n={n}"));
    }
    if *y2n1 != 2 * xn * yn1 - 1 {
        return fail(format!("y_{{2n+1}} = 2x_n y_{{n+1}} − 1 at n={n}"));
    }
    IdentityReport { n, passed: true, first_violation: None }
}

/// Composition of two solutions: `(x₁x₂ + d·y₁y₂, x₁y₂ + x₂y₁)`.
pub fn compose<T: Int>(d: &T, s: (&T, &T), t: (&T, &T)) -> (T, T) {
    (
        s.0.clone() * t.0.clone() + d.clone() * s.1.clone() * t.1.clone(),
        s.0.clone() * t.1.clone() + t.0.clone() * s.1.clone(),
    )
}

/// Index of `y` among `y_0 < y_1 < …` for `d = 3`, if it occurs.
pub fn sqrt3_index_of_y(y: &BigInt) -> Option<u64> {
    if y.is_negative() {
        return None;
    }
    let (mut x, mut cur) = (BigInt::one(), BigInt::zero());
    let mut k = 0u64;
    while &cur <= y {
        if &cur == y {
            return Some(k);
        }
        let nx = 2 * &x + 3 * &cur;
        let ny = &x + 2 * &cur;
        x = nx;
        cur = ny;
        k += 1;
    }
    None
}

pub(crate) fn sqrt3_pair(k: u64) -> (BigInt, BigInt) {
    let s = nth_solution(&BigInt::from(3), k).expect("d = 3 is valid");
    (s.x, s.y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_examples() {
        let s = minimal_solution(&3i64).unwrap();
        assert_eq!((s.x, s.y, s.index), (2, 1, 1));
        let s = minimal_solution(&2i64).unwrap();
        assert_eq!((s.x, s.y), (3, 2));
        let s = minimal_solution(&5i64).unwrap();
        assert_eq!((s.x, s.y), (9, 4));
        let s = minimal_solution(&BigInt::from(61)).unwrap();
        assert_eq!((s.x, s.y), (BigInt::from(1_766_319_049u64), BigInt::from(226_153_980u64)));
        assert!(minimal_solution(&4i64).is_err());
        assert!(minimal_solution(&1i64).is_err());
        assert!(minimal_solution(&0i64).is_err());
    }

    #[test]
    fn continued_fraction_matches_search() {
        for d in 2..200u64 {
            if exact_root_big(&BigInt::from(d), 2).is_some() {
                continue;
            }
            let cf = minimal_solution(&BigInt::from(d)).unwrap();
            if let Some((x, y)) = minimal_solution_by_search(d, 100_000) {
                assert_eq!((cf.x, cf.y), (BigInt::from(x), BigInt::from(y)), "d={d}");
            } else {
                assert!(cf.y > BigInt::from(100_000), "d={d}");
            }
        }
    }

    #[test]
    fn nth_examples() {
        let s = nth_solution(&3i64, 0).unwrap();
        assert_eq!((s.x, s.y), (1, 0));
        let s = nth_solution(&3i64, 2).unwrap();
        assert_eq!((s.x, s.y), (7, 4));
        let s = nth_solution(&3i64, 3).unwrap();
        assert_eq!((s.x, s.y), (26, 15));
    }

    #[test]
    fn enumerate_examples() {
        let pairs =
            |d: i64, b: i64| enumerate_solutions(&d, &b).unwrap().into_iter().map(|s| (s.x, s.y)).collect::<Vec<_>>();
        assert_eq!(pairs(3, 30), vec![(1, 0), (2, 1), (7, 4), (26, 15)]);
        assert_eq!(pairs(3, 1), vec![(1, 0)]);
        assert_eq!(pairs(2, 20), vec![(1, 0), (3, 2), (17, 12)]);
        let idx: Vec<u64> = enumerate_solutions(&3i64, &30).unwrap().iter().map(|s| s.index).collect();
        assert_eq!(idx, vec![0, 1, 2, 3]);
    }

    #[test]
    fn identity_examples() {
        for n in [0, 1, 25] {
            let r = sqrt3_identity_check(n);
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn solution_constructor_rejects() {
        assert!(PellSolution::new(&3i64, 2, 2, 1).is_err());
        assert!(PellSolution::new(&3i64, -2, 1, 1).is_err());
        assert!(PellSolution::new(&3i64, 1, 0, 1).is_err());
    }

    #[test]
    fn index_lookup() {
        assert_eq!(sqrt3_index_of_y(&BigInt::from(15)), Some(3));
        assert_eq!(sqrt3_index_of_y(&BigInt::from(1)), Some(1));
        assert_eq!(sqrt3_index_of_y(&BigInt::from(14)), None);
    }
}
