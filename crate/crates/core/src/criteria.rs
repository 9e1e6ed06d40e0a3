//! Mihăilescu's criteria as predicates on exponent pairs, the
//! double-Wieferich search, and the replay of the final deduction.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_prime_u64, mod_pow, primes_up_to};
use crate::error::{invalid, precondition, Error, Result};

fn require_odd_prime(name: &str, v: u64) -> Result<()> {
    if !is_prime_u64(v) {
        return Err(Error::NotPrime(format!("{name} = {v}")));
    }
    if v == 2 {
        return Err(invalid(format!("{name} must be odd")));
    }
    Ok(())
}

fn require_distinct_odd_primes(p: u64, q: u64) -> Result<()> {
    require_odd_prime("p", p)?;
    require_odd_prime("q", q)?;
    if p == q {
        return Err(invalid("p and q must be distinct"));
    }
    Ok(())
}

fn residue_u64(base: u64, exp: u64, modulus: u128) -> Option<u128> {
    let m = u64::try_from(modulus).ok()?;
    mod_pow::<u64>(base % m, exp, m).map(u128::from)
}

fn residue_u128(base: u64, exp: u64, modulus: u128) -> Option<u128> {
    mod_pow::<u128>(base as u128, exp, modulus)
}

fn residue_big(base: u64, exp: u64, modulus: u128) -> u128 {
    BigUint::from(base).modpow(&BigUint::from(exp), &BigUint::from(modulus)).to_u128().expect("residue below modulus")
}

/// `base^exp mod modulus`, computed by square-and-multiply in two word sizes
/// (falling back to big integers where a word is too narrow) and required
/// to agree.
pub fn cross_checked_residue(base: u64, exp: u64, modulus: u128) -> u128 {
    let narrow = residue_u64(base, exp, modulus).unwrap_or_else(|| residue_big(base, exp, modulus));
    let wide = residue_u128(base, exp, modulus).unwrap_or_else(|| residue_big(base, exp, modulus));
    assert_eq!(narrow, wide, "word sizes disagree on {base}^{exp} mod {modulus}");
    narrow
}

/// The two residues `p^{q−1} mod q²` and `q^{p−1} mod p²`.
pub fn wieferich_residues(p: u64, q: u64) -> Result<(u128, u128)> {
    require_distinct_odd_primes(p, q)?;
    let (pw, qw) = (p as u128, q as u128);
    Ok((cross_checked_residue(p, q - 1, qw * qw), cross_checked_residue(q, p - 1, pw * pw)))
}

/// M1: `p^{q−1} ≡ 1 (mod q²)` and `q^{p−1} ≡ 1 (mod p²)`.
pub fn wieferich_pair_check(p: u64, q: u64) -> Result<bool> {
    let (a, b) = wieferich_residues(p, q)?;
    Ok(a == 1 && b == 1)
}

/// All pairs `p < q` of odd primes up to `limit` passing M1, ascending.
/// Parallel over `q`; the order does not depend on the thread count.
pub fn search_double_wieferich(limit: u64) -> Result<Vec<(u64, u64)>> {
    if limit < 5 {
        return Err(invalid("limit must be at least 5"));
    }
    let primes: Vec<u64> = primes_up_to(limit).into_iter().filter(|&p| p > 2).collect();
    let mut pairs: Vec<(u64, u64)> = (0..primes.len())
        .into_par_iter()
        .flat_map_iter(|j| {
            let q = primes[j];
            let q2 = (q as u128) * (q as u128);
            primes[..j]
                .iter()
                .filter(move |&&p| {
                    // cheap direction first, then the full check
                    mod_pow::<u128>(p as u128, q - 1, q2) == Some(1)
                        && wieferich_pair_check(p, q).expect("validated primes")
                })
                .map(move |&p| (p, q))
                .collect::<Vec<_>>()
        })
        .collect();
    pairs.sort_unstable();
    Ok(pairs)
}

/// M2 as a predicate: `p ≡ 1 (mod q)` or `q ≡ 1 (mod p)`.
///
/// Only the restricted hypothesis `p, q ≥ 7` is supported; smaller primes
/// are rejected.
pub fn m2_check(p: u64, q: u64) -> Result<bool> {
    require_distinct_odd_primes(p, q)?;
    if p < 7 || q < 7 {
        return Err(precondition(format!("M2 is stated for p, q ≥ 7, got ({p}, {q})")));
    }
    Ok(p % q == 1 || q % p == 1)
}

/// M3 as a predicate: `p < 4q²` and `q < 4p²`.
pub fn m3_check(p: u64, q: u64) -> Result<bool> {
    require_distinct_odd_primes(p, q)?;
    let (pw, qw) = (p as u128, q as u128);
    Ok(pw < 4 * qw * qw && qw < 4 * pw * pw)
}

/// M4 scope: the exponents include 3 or 5.
pub fn m4_applies(p: u64, q: u64) -> bool {
    [3, 5].contains(&p) || [3, 5].contains(&q)
}

/// For prime `q` and `x ≡ 1 (mod q)` with `x^{q−1} ≡ 1 (mod q²)`, returns
/// whether `x ≡ 1 (mod q²)`. Inputs violating the hypotheses are rejected.
pub fn lemma_simp_lift(q: u64, x: &BigInt) -> Result<bool> {
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(format!("q = {q}")));
    }
    let qb = BigInt::from(q);
    let q2 = &qb * &qb;
    if !x.mod_floor(&qb).is_one() {
        return Err(precondition(format!("{x} ≢ 1 (mod {q})")));
    }
    if !x.modpow(&BigInt::from(q - 1), &q2).is_one() {
        return Err(precondition(format!("{x}^{} ≢ 1 (mod {q}²)", q - 1)));
    }
    let lifted = x.mod_floor(&q2).is_one();
    assert!(lifted, "hypotheses hold but {x} ≢ 1 (mod {q}²)");
    Ok(lifted)
}

/// The strengthened Cassels relations on a solution: `p² | y` and `q² | x`. The input must solve
/// `x^p − y^q = 1` with `x, y ≠ 0` and primes `p > q > 2`.
pub fn m095_relation_check(p: u64, q: u64, x: &BigInt, y: &BigInt) -> Result<bool> {
    require_distinct_odd_primes(p, q)?;
    if p < q {
        return Err(invalid("need p > q"));
    }
    if x.is_zero() || y.is_zero() {
        return Err(invalid("x and y must be nonzero"));
    }
    if x.pow(p as u32) - y.pow(q as u32) != BigInt::one() {
        return Err(precondition(format!("({x}, {y}) does not satisfy x^{p} − y^{q} = 1")));
    }
    let (pb, qb) = (BigInt::from(p), BigInt::from(q));
    Ok(y.is_multiple_of(&(&pb * &pb)) && x.is_multiple_of(&(&qb * &qb)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaVerdict {
    pub p: u64,
    pub q: u64,
    pub m1: bool,
    /// False outside the supported range `p, q ≥ 7` (see `notes`).
    pub m2: bool,
    pub m3: bool,
    pub resolved_by_m4: bool,
    pub notes: Vec<String>,
}

impl CriteriaVerdict {
    /// Whether the pair survives every criterion that applies to it.
    pub fn survives(&self) -> bool {
        !self.resolved_by_m4 && self.m1 && self.m2 && self.m3
    }
}

pub fn criteria_verdict(p: u64, q: u64) -> Result<CriteriaVerdict> {
    require_distinct_odd_primes(p, q)?;
    let mut notes = Vec::new();
    let resolved_by_m4 = m4_applies(p, q);
    if resolved_by_m4 {
        notes.push("p or q in {3, 5}: no solutions by M4".to_string());
    }
    let m1 = wieferich_pair_check(p, q)?;
    let m2 = match m2_check(p, q) {
        Ok(v) => v,
        Err(Error::Precondition(msg)) => {
            notes.push(format!("M2 not evaluated: {msg}"));
            false
        }
        Err(e) => return Err(e),
    };
    let m3 = m3_check(p, q)?;
    Ok(CriteriaVerdict { p, q, m1, m2, m3, resolved_by_m4, notes })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeductionReport {
    pub q_limit: u64,
    pub primes_checked: u64,
    /// Pairs `(1 + q², q)` and `(1 + 3q², q)` dismissed as even.
    pub even_eliminations: u64,
    /// Primes `q > 3` for which `3 | 1 + 2q²`.
    pub divisible_by_three: u64,
    /// Primes `q > 3` for which it did not fire (expected empty).
    pub three_failures: Vec<u64>,
    /// `k = 4` violates M3 for every `q`.
    pub m3_caps_k: bool,
    pub survivors: Vec<(u64, u64)>,
    pub survivors_excluded_by_m4: bool,
}

impl DeductionReport {
    pub fn passed(&self) -> bool {
        self.survivors == [(19, 3)]
            && self.survivors_excluded_by_m4
            && self.three_failures.is_empty()
            && self.m3_caps_k
            && self.divisible_by_three + 1 == self.primes_checked
    }
}

/// Replays the deduction: for each odd prime `q ≤ q_limit`, `p = 1 + kq²`
/// with `k ∈ {1, 2, 3}` (M3 caps `k`); odd `k` makes `p` even, and for
/// `q > 3` the value `1 + 2q²` is a multiple of 3 exceeding 3. Whatever is
/// left must be prime and is listed as a survivor.
pub fn final_deduction_check(q_limit: u64) -> Result<DeductionReport> {
    if q_limit < 3 {
        return Err(invalid("q_limit must be at least 3"));
    }
    let primes: Vec<u64> = primes_up_to(q_limit).into_iter().filter(|&q| q > 2).collect();
    let mut report = DeductionReport {
        q_limit,
        primes_checked: primes.len() as u64,
        even_eliminations: 0,
        divisible_by_three: 0,
        three_failures: Vec::new(),
        m3_caps_k: true,
        survivors: Vec::new(),
        survivors_excluded_by_m4: true,
    };
    for &q in &primes {
        let q2 = (q as u128) * (q as u128);
        report.m3_caps_k &= 1 + 4 * q2 >= 4 * q2;
        for k in 1..=3u128 {
            let p = 1 + k * q2;
            if p % 2 == 0 {
                report.even_eliminations += 1;
                continue;
            }
            if q > 3 {
                if p % 3 == 0 {
                    report.divisible_by_three += 1;
                    continue;
                }
                report.three_failures.push(q);
            }
            if is_prime(&BigInt::from(p)) {
                let p = p as u64;
                report.survivors_excluded_by_m4 &= m4_applies(p, q);
                report.survivors.push((p, q));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wieferich_examples() {
        assert!(!wieferich_pair_check(3, 5).unwrap());
        assert!(wieferich_pair_check(83, 4871).unwrap());
        assert!(wieferich_pair_check(4871, 83).unwrap());
        assert!(!wieferich_pair_check(3, 7).unwrap());
        assert_eq!(wieferich_residues(3, 5).unwrap().0, 6);
        assert_eq!(wieferich_residues(3, 7).unwrap().0, 43);
        assert!(wieferich_pair_check(3, 3).is_err());
        assert!(matches!(wieferich_pair_check(9, 5), Err(Error::NotPrime(_))));
        assert!(wieferich_pair_check(2, 5).is_err());
    }

    #[test]
    fn residue_word_sizes_agree_past_u64() {
        let p = 4_294_967_311u64; // first prime above 2^32
        assert_eq!(
            cross_checked_residue(3, p - 1, (p as u128) * (p as u128)),
            residue_big(3, p - 1, (p as u128) * (p as u128))
        );
    }

    #[test]
    fn small_searches() {
        assert!(search_double_wieferich(5).unwrap().is_empty());
        assert!(search_double_wieferich(100).unwrap().is_empty());
        assert!(search_double_wieferich(4).is_err());
    }

    #[test]
    fn m2_m3_examples() {
        assert!(m2_check(29, 7).unwrap());
        assert!(!m2_check(11, 7).unwrap());
        assert!(matches!(m2_check(19, 3), Err(Error::Precondition(_))));
        assert!(m3_check(19, 3).unwrap());
        assert!(!m3_check(37, 3).unwrap());
    }

    #[test]
    fn simp_lemma_examples() {
        assert!(lemma_simp_lift(3, &BigInt::from(10)).unwrap());
        assert!(lemma_simp_lift(7, &BigInt::from(1)).unwrap());
        assert!(lemma_simp_lift(5, &BigInt::from(26)).unwrap());
        assert!(matches!(lemma_simp_lift(3, &BigInt::from(4)), Err(Error::Precondition(_))));
        assert!(matches!(lemma_simp_lift(3, &BigInt::from(2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn m095_rejections() {
        let b = |v: i64| BigInt::from(v);
        assert!(m095_relation_check(5, 3, &b(0), &b(-1)).is_err());
        assert!(matches!(m095_relation_check(5, 3, &b(2), &b(3)), Err(Error::Precondition(_))));
        assert!(m095_relation_check(3, 5, &b(2), &b(3)).is_err());
    }

    #[test]
    fn deduction_small() {
        let r = final_deduction_check(3).unwrap();
        assert_eq!(r.survivors, vec![(19, 3)]);
        assert!(r.passed());
        let r = final_deduction_check(1000).unwrap();
        assert!(r.passed());
        assert_eq!(r.even_eliminations, 2 * r.primes_checked);
        let r = final_deduction_check(5).unwrap();
        assert_eq!((r.divisible_by_three, r.survivors.clone()), (1, vec![(19, 3)]));
    }

    #[test]
    fn verdicts() {
        let v = criteria_verdict(19, 3).unwrap();
        assert!(v.resolved_by_m4 && !v.survives());
        let v = criteria_verdict(83, 4871).unwrap();
        assert!(v.m1 && !v.m2 && !v.resolved_by_m4);
    }
}
