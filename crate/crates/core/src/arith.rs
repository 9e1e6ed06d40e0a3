//! Rational-integer number theory: primality, factorization, modular powers
//! and exact integer roots.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, PrimInt, ToPrimitive, Unsigned, Zero};

use crate::scalar::Int;

/// Trial division handles every cofactor whose smallest prime is below this.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// `base^exp mod modulus` by square-and-multiply in the word type `W`.
///
/// Returns `None` when an intermediate product would not fit in `W`, i.e.
/// when `(modulus - 1)^2` exceeds the word.
pub fn mod_pow<W: PrimInt + Unsigned>(base: W, mut exp: u64, modulus: W) -> Option<W> {
    if modulus.is_zero() {
        return None;
    }
    let limit = modulus - W::one();
    limit.checked_mul(&limit)?;
    let mut result = W::one() % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = (result * b) % modulus;
        }
        exp >>= 1;
        if exp > 0 {
            b = (b * b) % modulus;
        }
    }
    Some(result)
}

#[inline]
pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod_u64(result, b, m);
        }
        b = mul_mod_u64(b, b, m);
        exp >>= 1;
    }
    result
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin with a fixed witness set; exact below 2^64, probabilistic
/// (but deterministic in its answer) above.
pub fn is_prime_biguint(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    const EXTRA: [u64; 8] = [41, 43, 47, 53, 59, 61, 67, 71];
    for &p in MR_WITNESSES.iter().chain(EXTRA.iter()) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in MR_WITNESSES.iter().chain(EXTRA.iter()) {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality of a (signed) integer; negative numbers and 0, 1 are not prime.
pub fn is_prime<T: Int>(n: &T) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    match n.big().to_biguint() {
        Some(u) => is_prime_biguint(&u),
        None => false,
    }
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

fn pollard_rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    // Fixed sequence of polynomial constants, so factorizations are reproducible.
    for c in 1u64.. {
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

fn pollard_rho_big(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

fn push_factor(out: &mut Vec<(BigUint, u32)>, p: BigUint) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += 1,
        None => out.push((p, 1)),
    }
}

fn split_big(n: BigUint, out: &mut Vec<(BigUint, u32)>) {
    if n.is_one() {
        return;
    }
    if let Some(small) = n.to_u64() {
        let mut stack = vec![small];
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime_u64(m) {
                push_factor(out, BigUint::from(m));
            } else {
                let d = pollard_rho_u64(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
        return;
    }
    if is_prime_biguint(&n) {
        push_factor(out, n);
        return;
    }
    let d = pollard_rho_big(&n);
    let rest = &n / &d;
    split_big(d, out);
    split_big(rest, out);
}

/// Prime factorization of `n >= 1` as ascending `(prime, multiplicity)` pairs.
///
/// Trial division below [`TRIAL_DIVISION_LIMIT`], Pollard rho on whatever
/// remains.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p = 2u64;
    while p < TRIAL_DIVISION_LIMIT {
        let pp = BigUint::from(p);
        if &pp * &pp > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&pp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((pp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let mut big_part = Vec::new();
        split_big(rest, &mut big_part);
        out.extend(big_part);
    }
    out.sort();
    out
}

pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    factor_biguint(&BigUint::from(n)).into_iter().map(|(p, e)| (p.to_u64().expect("factor of a u64 fits"), e)).collect()
}

/// Factorization of `|n|` for a nonzero integer of any [`Int`] type.
pub fn factor_int<T: Int>(n: &T) -> Vec<(T, u32)> {
    let mag = n.big().magnitude().clone();
    factor_biguint(&mag)
        .into_iter()
        .map(|(p, e)| (T::from_bigint(&BigInt::from(p)).expect("factor no larger than input"), e))
        .collect()
}

/// Floor of the `k`-th root of `n` by bisection.
pub fn iroot_u128(n: u128, k: u32) -> u128 {
    assert!(k >= 1);
    if k == 1 || n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut lo = 1u128;
    let mut hi = 1u128 << (bits / k + 1).min(127);
    // invariant: lo^k <= n < hi^k
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match checked_pow_u128(mid, k) {
            Some(v) if v <= n => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

pub fn checked_pow_u128(base: u128, k: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

pub fn checked_pow_i128(base: i128, k: u32) -> Option<i128> {
    let mut acc: i128 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// `Some(r)` with `r^k = n` when `n` is a perfect `k`-th power.
pub fn exact_root_u128(n: u128, k: u32) -> Option<u128> {
    let r = iroot_u128(n, k);
    (checked_pow_u128(r, k) == Some(n)).then_some(r)
}

/// Signed exact root: negative `n` only has a root for odd `k`.
pub fn exact_root_i128(n: i128, k: u32) -> Option<i128> {
    if n >= 0 {
        exact_root_u128(n as u128, k).map(|r| r as i128)
    } else if k % 2 == 1 {
        exact_root_u128(n.unsigned_abs(), k).map(|r| -(r as i128))
    } else {
        None
    }
}

pub fn is_square_u128(n: u128) -> bool {
    exact_root_u128(n, 2).is_some()
}

/// Exact `k`-th root of a big integer, if one exists.
pub fn exact_root_big(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.sign() == Sign::Minus && k % 2 == 0 {
        return None;
    }
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

/// Floor square root of a non-negative big integer.
pub fn isqrt_big(n: &BigInt) -> BigInt {
    assert!(n.sign() != Sign::Minus);
    n.sqrt()
}

/// A square root of -1 modulo a prime `p ≡ 1 (mod 4)`.
pub fn sqrt_minus_one_mod(p: &BigUint) -> BigUint {
    let one = BigUint::one();
    let exp = (p - &one) >> 2;
    let minus_one = p - &one;
    let mut c = BigUint::from(2u32);
    loop {
        let t = c.modpow(&exp, p);
        if (&t * &t) % p == minus_one {
            return t;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_is_prime(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), brute_is_prime(n), "n = {n}");
        }
        // strong pseudoprimes to several small bases
        for n in [3_215_031_751u64, 2_152_302_898_747, 3_474_749_660_383, 341_550_071_728_321] {
            assert!(!is_prime_u64(n));
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn big_primality() {
        let m127 = (BigUint::one() << 127) - BigUint::one();
        assert!(is_prime_biguint(&m127));
        assert!(!is_prime_biguint(&(&m127 * BigUint::from(3u32))));
    }

    #[test]
    fn factorization_reconstructs() {
        for n in [1u64, 2, 12, 360, 999_983 * 999_979, 600_851_475_143, u64::MAX] {
            let f = factor_u64(n);
            let prod: u128 = f.iter().map(|&(p, e)| (p as u128).pow(e)).product();
            assert_eq!(prod, n as u128);
            assert!(f.iter().all(|&(p, _)| is_prime_u64(p)));
        }
        let big = BigUint::from(1_000_000_007u64)
            * BigUint::from(998_244_353u64)
            * BigUint::from(18_446_744_073_709_551_557u64);
        let f = factor_biguint(&big);
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn signed_factorization() {
        let f = factor_int(&-12i64);
        assert_eq!(f, vec![(2, 2), (3, 1)]);
    }

    #[test]
    fn mod_pow_word_sizes_agree() {
        for m in [2u64, 7, 25, 4871 * 4871] {
            for b in [0u64, 1, 2, 83, 4870] {
                for e in [0u64, 1, 5, 82, 4870] {
                    let narrow = mod_pow::<u64>(b, e, m).unwrap();
                    let wide = mod_pow::<u128>(b as u128, e, m as u128).unwrap();
                    assert_eq!(narrow as u128, wide);
                    assert_eq!(narrow, pow_mod_u64(b, e, m));
                }
            }
        }
        assert_eq!(mod_pow::<u32>(3, 4, 25), Some(6));
        assert_eq!(mod_pow::<u32>(3, 4, 1 << 20), None);
    }

    #[test]
    fn integer_roots() {
        assert_eq!(iroot_u128(0, 3), 0);
        assert_eq!(iroot_u128(26, 3), 2);
        assert_eq!(iroot_u128(27, 3), 3);
        assert_eq!(iroot_u128(u128::MAX, 2), u64::MAX as u128);
        assert_eq!(exact_root_i128(-8, 3), Some(-2));
        assert_eq!(exact_root_i128(-8, 2), None);
        assert_eq!(exact_root_big(&BigInt::from(-243), 5), Some(BigInt::from(-3)));
        assert_eq!(exact_root_big(&BigInt::from(10), 2), None);
    }

    #[test]
    fn sqrt_of_minus_one() {
        for p in [5u32, 13, 17, 29, 1_000_000_009] {
            let p = BigUint::from(p);
            let t = sqrt_minus_one_mod(&p);
            assert_eq!((&t * &t + 1u32) % &p, BigUint::zero());
        }
    }

    #[test]
    fn sieve() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(100_000).len(), 9592);
    }
}
