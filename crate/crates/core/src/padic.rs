//! p-adic orders of rationals and the valuation lemmas built on them.
//!
//! Rationals are `num_rational::Ratio<T>`, which is always kept in lowest
//! terms with a positive denominator, so denominators can be read off
//! directly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{invalid, Error, Result};
use crate::scalar::Int;

/// `ord_p` of a rational: an integer, or `+∞` for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PadicOrder {
    Finite(i64),
    Infinity,
}

impl PadicOrder {
    pub fn finite(self) -> Option<i64> {
        match self {
            PadicOrder::Finite(k) => Some(k),
            PadicOrder::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == PadicOrder::Infinity
    }
}

impl Ord for PadicOrder {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PadicOrder::Finite(a), PadicOrder::Finite(b)) => a.cmp(b),
            (PadicOrder::Finite(_), PadicOrder::Infinity) => Ordering::Less,
            (PadicOrder::Infinity, PadicOrder::Finite(_)) => Ordering::Greater,
            (PadicOrder::Infinity, PadicOrder::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for PadicOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `+∞` absorbs.
impl Add for PadicOrder {
    type Output = PadicOrder;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (PadicOrder::Finite(a), PadicOrder::Finite(b)) => PadicOrder::Finite(a + b),
            _ => PadicOrder::Infinity,
        }
    }
}

impl fmt::Display for PadicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicOrder::Finite(k) => write!(f, "{k}"),
            PadicOrder::Infinity => f.write_str("+inf"),
        }
    }
}

fn check_prime<T: Int>(p: &T) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

/// Exponent of `p` in a nonzero integer (sign ignored).
pub(crate) fn ord_int_unchecked<T: Int>(p: &T, n: &T) -> u64 {
    debug_assert!(!n.is_zero());
    let mut k = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        rest = q;
        k += 1;
    }
}

/// `ord_p(a)` for an integer.
pub fn ord_int<T: Int>(p: &T, a: &T) -> Result<PadicOrder> {
    check_prime(p)?;
    if a.is_zero() {
        return Ok(PadicOrder::Infinity);
    }
    Ok(PadicOrder::Finite(ord_int_unchecked(p, a) as i64))
}

/// `ord_p(a)`: the `k` with `a = p^k · b`, numerator and denominator of `b`
/// coprime to `p`; `+∞` for `a = 0`.
pub fn ord<T: Int>(p: &T, a: &Ratio<T>) -> Result<PadicOrder> {
    check_prime(p)?;
    if a.is_zero() {
        return Ok(PadicOrder::Infinity);
    }
    let up = ord_int_unchecked(p, a.numer()) as i64;
    let down = ord_int_unchecked(p, a.denom()) as i64;
    Ok(PadicOrder::Finite(up - down))
}

/// `ord_q(m!) = Σ_{j≥1} ⌊m / q^j⌋`.
pub fn ord_factorial(q: u64, m: u64) -> Result<u64> {
    check_prime(&(q as i128))?;
    let mut total = 0;
    let mut power = q as u128;
    while power <= m as u128 {
        total += m / power as u64;
        power *= q as u128;
    }
    Ok(total)
}

fn check_progression<T: Int>(a: &T, d: &T, m: u64, p: &T) -> Result<()> {
    check_prime(p)?;
    if !d.is_positive() {
        return Err(invalid("common difference must be positive"));
    }
    if (d.clone() % p.clone()).is_zero() {
        return Err(invalid(format!("{p} divides the common difference {d}")));
    }
    if m == 0 {
        return Err(invalid("progression must have at least one term"));
    }
    // a + jd = 0 for some 0 <= j < m makes the product vanish
    if !a.is_positive() && (a.clone() % d.clone()).is_zero() {
        let j = (-a.clone()) / d.clone();
        if j < T::from_u64(m).expect("term count fits") {
            return Err(invalid("progression product is zero"));
        }
    }
    Ok(())
}

/// `ord_p(∏_{j<m} (a + jd))`, summed term by term.
pub fn ord_progression_product<T: Int>(a: &T, d: &T, m: u64, p: &T) -> Result<u64> {
    check_progression(a, d, m, p)?;
    let mut total = 0;
    let mut term = a.clone();
    for _ in 0..m {
        total += ord_int_unchecked(p, &term);
        term = term + d.clone();
    }
    Ok(total)
}

/// One level `j` of the multiples-of-`p^j` count behind the progression
/// product's order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgressionLevel {
    pub level: u32,
    /// Number of terms divisible by `p^level`.
    pub multiples: u64,
    /// `⌊m / p^level⌋`.
    pub floor: u64,
    /// `multiples - floor`; always 0 or 1.
    pub epsilon: u64,
}

/// Per-level decomposition: counts multiples of `p^j` among the `m` terms
/// for every `j` with `p^j` not exceeding the largest term magnitude.
pub fn progression_levels<T: Int>(a: &T, d: &T, m: u64, p: &T) -> Result<Vec<ProgressionLevel>> {
    check_progression(a, d, m, p)?;
    let terms: Vec<T> = (0..m).map(|j| a.clone() + d.clone() * T::from_u64(j).expect("index fits")).collect();
    let max_abs = terms.iter().map(|t| t.abs()).max().expect("m >= 1");
    let mut levels = Vec::new();
    let mut power = p.clone();
    let mut level = 1u32;
    while power <= max_abs {
        let multiples = terms.iter().filter(|t| ((*t).clone() % power.clone()).is_zero()).count() as u64;
        let floor = T::from_u64(m).map(|mm| mm / power.clone()).and_then(|f| f.to_u64()).expect("floor fits");
        if multiples < floor || multiples > floor + 1 {
            return Err(Error::Precondition(format!("level {level}: {multiples} multiples against floor {floor}")));
        }
        levels.push(ProgressionLevel { level, multiples, floor, epsilon: multiples - floor });
        power = power * p.clone();
        level += 1;
    }
    Ok(levels)
}

/// `binom(alpha, k) = ∏_{i<k} (alpha - i) / k!` in lowest terms.
pub fn rational_binomial<T: Int>(alpha: &Ratio<T>, k: u32) -> Ratio<T> {
    let mut acc = Ratio::<T>::one();
    for i in 0..k {
        let i_t = Ratio::from_integer(T::from_u32(i).expect("index fits"));
        let next = Ratio::from_integer(T::from_u32(i + 1).expect("index fits"));
        acc = acc * (alpha.clone() - i_t) / next;
    }
    acc
}

/// True iff the last term has strictly smaller `ord_p` than all others.
/// When it does, the exact sum is checked to be nonzero.
pub fn dominant_term_nonzero<T: Int>(terms: &[Ratio<T>], p: &T) -> Result<bool> {
    if terms.len() < 2 {
        return Err(invalid("need at least two terms"));
    }
    let (last, rest) = terms.split_last().expect("len >= 2");
    let last_ord = ord(p, last)?;
    let mut dominant = true;
    for t in rest {
        if ord(p, t)? <= last_ord {
            dominant = false;
        }
    }
    if dominant {
        let sum = terms.iter().cloned().fold(Ratio::zero(), |acc, t| acc + t);
        assert!(!sum.is_zero(), "dominant p-adic term yet zero sum");
    }
    Ok(dominant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn order_examples() {
        assert_eq!(ord(&3, &r(0, 1)).unwrap(), PadicOrder::Infinity);
        assert_eq!(ord(&2, &r(12, 1)).unwrap(), PadicOrder::Finite(2));
        assert_eq!(ord(&5, &r(7, 50)).unwrap(), PadicOrder::Finite(-2));
        assert_eq!(ord(&4, &r(7, 50)), Err(Error::NotPrime("4".into())));
        assert_eq!(ord_int(&7i64, &-49).unwrap(), PadicOrder::Finite(2));
    }

    #[test]
    fn infinity_arithmetic() {
        assert_eq!(PadicOrder::Finite(3) + PadicOrder::Infinity, PadicOrder::Infinity);
        assert!(PadicOrder::Finite(i64::MAX) < PadicOrder::Infinity);
        assert_eq!(PadicOrder::Finite(-2) + PadicOrder::Finite(5), PadicOrder::Finite(3));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(ord_factorial(7, 6).unwrap(), 0);
        assert_eq!(ord_factorial(2, 4).unwrap(), 3);
        assert_eq!(ord_factorial(3, 9).unwrap(), 4);
        assert!(ord_factorial(9, 9).is_err());
    }

    #[test]
    fn progression_examples() {
        assert_eq!(ord_progression_product(&1i64, &1, 6, &7).unwrap(), 0);
        assert_eq!(ord_progression_product(&2i64, &3, 4, &5).unwrap(), 1);
        assert_eq!(ord_progression_product(&1i64, &1, 9, &3).unwrap(), 4);
        assert!(ord_progression_product(&1i64, &5, 3, &5).is_err());
        assert!(ord_progression_product(&-6i64, &3, 4, &5).is_err());
        // -6, -3, 0 is not reached with m = 2
        assert!(ord_progression_product(&-6i64, &3, 2, &5).is_ok());
    }

    #[test]
    fn factorial_progression_has_zero_epsilons() {
        for p in [2i64, 3, 5, 7] {
            for m in 1..60u64 {
                for lvl in progression_levels(&1i64, &1, m, &p).unwrap() {
                    assert_eq!(lvl.epsilon, 0, "p={p} m={m}");
                }
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(rational_binomial(&r(5, 3), 0), r(1, 1));
        assert_eq!(rational_binomial(&r(5, 3), 2), r(5, 9));
        assert_eq!(rational_binomial(&r(7, 5), 3), r(-7, 125));
        // integral alpha reproduces ordinary binomials
        assert_eq!(
            rational_binomial(&Ratio::from_integer(BigInt::from(10)), 4),
            Ratio::from_integer(BigInt::from(210))
        );
    }

    #[test]
    fn dominant_examples() {
        assert!(dominant_term_nonzero(&[r(1, 2), r(1, 4)], &2).unwrap());
        assert!(!dominant_term_nonzero(&[r(1, 1), r(1, 1)], &2).unwrap());
        assert!(dominant_term_nonzero(&[r(4, 1), r(2, 1), r(1, 1)], &2).unwrap());
        assert!(dominant_term_nonzero(&[r(1, 1)], &2).is_err());
        // zero in front never spoils dominance
        assert!(dominant_term_nonzero(&[r(0, 1), r(3, 1)], &3).unwrap());
    }
}
