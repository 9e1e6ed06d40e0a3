//! Unique factorization over Euclidean domains.
//!
//! A [`EuclideanDomain`] supplies ring operations, a division with
//! remainder whose measure strictly decreases, and a choice of one canonical
//! representative per associate class. On top of that this module builds
//! irreducible factorizations as finite maps from canonical irreducibles to
//! multiplicities, and the power principles used throughout the elementary
//! cases: a pairwise coprime product that is an `l`-th power consists of
//! `l`-th powers (up to units), and the variant where the two factors share
//! exactly one irreducible `p`.

use std::collections::BTreeMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::factor_int;
use crate::error::{invalid, precondition, Error, Result};
use crate::scalar::Int;

/// A commutative domain with a Euclidean division.
///
/// `divrem(a, b)` must return `(q, r)` with `a = b·q + r` and either
/// `r = 0` or `measure(r) < measure(b)`.
pub trait EuclideanDomain:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// The well-ordered size used by the division; zero only for `0`.
    fn measure(&self) -> BigUint;

    fn divrem(&self, divisor: &Self) -> Result<(Self, Self)>;

    /// The full (finite) unit group.
    fn units() -> Vec<Self>;

    fn is_unit(&self) -> bool {
        self.measure().is_one()
    }

    /// Returns `(c, u)` with `self = u·c`, `u` a unit and `c` the canonical
    /// representative of the associate class. `0` maps to `(0, 1)`.
    fn canonical_associate(&self) -> (Self, Self);

    /// A unit `u` with `a = u·b`, if the two are associate.
    fn unit_between(a: &Self, b: &Self) -> Option<Self> {
        Self::units().into_iter().find(|u| u.clone() * b.clone() == *a)
    }

    fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        Self::units().into_iter().find(|v| (v.clone() * self.clone()).is_one())
    }
}

/// A Euclidean domain with an effective irreducible factorization.
pub trait FactorizationDomain: EuclideanDomain {
    /// Canonical irreducible factors of a nonzero non-unit with
    /// multiplicities, in any order. Units yield an empty list.
    fn irreducible_factors(&self) -> Vec<(Self, u32)>;
}

impl<T: Int> EuclideanDomain for T {
    fn measure(&self) -> BigUint {
        self.big().magnitude().clone()
    }

    fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.div_mod_floor(divisor))
    }

    fn units() -> Vec<Self> {
        vec![T::one(), -T::one()]
    }

    fn canonical_associate(&self) -> (Self, Self) {
        if self.is_negative() {
            (-self.clone(), -T::one())
        } else {
            (self.clone(), T::one())
        }
    }
}

impl<T: Int> FactorizationDomain for T {
    fn irreducible_factors(&self) -> Vec<(Self, u32)> {
        if self.is_zero() {
            return Vec::new();
        }
        factor_int(self)
    }
}

/// `a | b`, decided by Euclidean division.
pub fn divides_elem<R: EuclideanDomain>(a: &R, b: &R) -> bool {
    if a.is_zero() {
        return b.is_zero();
    }
    b.divrem(a).map(|(_, r)| r.is_zero()).unwrap_or(false)
}

/// Exact quotient `b / a`, if `a | b` and `a ≠ 0`.
pub fn exact_div<R: EuclideanDomain>(b: &R, a: &R) -> Option<R> {
    if a.is_zero() {
        return None;
    }
    let (q, r) = b.divrem(a).ok()?;
    r.is_zero().then_some(q)
}

pub fn are_associate<R: EuclideanDomain>(a: &R, b: &R) -> bool {
    R::unit_between(a, b).is_some()
}

/// Canonical gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
pub fn gcd_elem<R: EuclideanDomain>(a: &R, b: &R) -> R {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.divrem(&y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    x.canonical_associate().0
}

pub fn are_coprime<R: EuclideanDomain>(a: &R, b: &R) -> bool {
    gcd_elem(a, b).is_unit()
}

/// An irreducible factorization: a unit times a product of canonical
/// irreducibles raised to positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization<R: Ord> {
    pub unit: R,
    pub factors: BTreeMap<R, u32>,
}

impl<R: FactorizationDomain> Factorization<R> {
    /// The element `unit · ∏ factor^multiplicity`.
    pub fn reconstruct(&self) -> R {
        self.factors.iter().fold(self.unit.clone(), |acc, (p, &e)| acc * p.pow(e))
    }

    /// The canonical associate of the factored element (unit dropped).
    pub fn canonical_value(&self) -> R {
        self.factors.iter().fold(R::one(), |acc, (p, &e)| acc * p.pow(e))
    }

    pub fn multiplicity(&self, p: &R) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Irreducible factorization of a nonzero element.
pub fn factorize<R: FactorizationDomain>(a: &R) -> Result<Factorization<R>> {
    if a.is_zero() {
        return Err(invalid("zero has no irreducible factorization"));
    }
    let mut factors = BTreeMap::new();
    for (p, e) in a.irreducible_factors() {
        debug_assert_eq!(p.canonical_associate().0, p);
        *factors.entry(p).or_insert(0) += e;
    }
    let core = factors.iter().fold(R::one(), |acc, (p, &e)| acc * p.pow(e));
    let unit = exact_div(a, &core).expect("factors divide the element");
    assert!(unit.is_unit(), "factorization left a non-unit cofactor {unit}");
    Ok(Factorization { unit, factors })
}

/// `X | Y` on factorizations: every multiplicity of `X` is at most that of `Y`.
pub fn divides<R: FactorizationDomain>(x: &Factorization<R>, y: &Factorization<R>) -> bool {
    x.factors.iter().all(|(p, &e)| y.multiplicity(p) >= e)
}

/// Common keys with minimum multiplicities, unit 1.
pub fn gcd_fact<R: FactorizationDomain>(x: &Factorization<R>, y: &Factorization<R>) -> Factorization<R> {
    let factors = x
        .factors
        .iter()
        .filter_map(|(p, &e)| {
            let f = y.multiplicity(p);
            (f > 0).then(|| (p.clone(), e.min(f)))
        })
        .collect();
    Factorization { unit: R::one(), factors }
}

fn unit_root<R: EuclideanDomain>(u: &R, l: u32) -> Option<R> {
    R::units().into_iter().find(|v| v.pow(l) == *u)
}

/// Given pairwise coprime `parts` whose product is associate to an `l`-th
/// power, returns `b_i` with `a_i ∼ b_i^l`.
///
/// Whenever the unit of `a_i` is itself an `l`-th power (always true in `Z`
/// for odd `l`), that root is folded in and `a_i = b_i^l` holds exactly.
pub fn pp1_extract<R: FactorizationDomain>(parts: &[R], l: u32) -> Result<Vec<R>> {
    if l < 2 {
        return Err(invalid("exponent must be at least 2"));
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if !are_coprime(a, b) {
                return Err(precondition(format!("{a} and {b} are not coprime")));
            }
        }
    }
    if parts.iter().any(|a| a.is_zero()) {
        // Coprimality forces every other part to be a unit.
        return Ok(parts
            .iter()
            .map(|a| if a.is_zero() { R::zero() } else { unit_root(a, l).unwrap_or_else(R::one) })
            .collect());
    }
    let mut out = Vec::with_capacity(parts.len());
    for a in parts {
        let fa = factorize(a)?;
        let mut b = unit_root(&fa.unit, l).unwrap_or_else(R::one);
        for (p, &e) in &fa.factors {
            if e % l != 0 {
                return Err(precondition(format!(
                    "product is not an {l}-th power: irreducible {p} has multiplicity {e}"
                )));
            }
            b = b * p.pow(e / l);
        }
        out.push(b);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    First,
    Second,
}

/// Witness for `{a, b} ∼ {p·d^k, p^{k-1}·e^k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pp2Witness<R> {
    pub d: R,
    pub e: R,
    /// Which input carries the single factor `p`.
    pub single: Side,
    /// Units with `single_input = unit_single·p·d^k` and
    /// `other_input = unit_other·p^{k-1}·e^k`.
    pub unit_single: R,
    pub unit_other: R,
}

/// Power principle with one shared irreducible: `gcd(a, b) ∼ p` and
/// `ab ∼ c^k` give coprime `d, e` with `{a, b} ∼ {p d^k, p^{k-1} e^k}`.
pub fn pp2_extract<R: FactorizationDomain>(a: &R, b: &R, p: &R, k: u32) -> Result<Pp2Witness<R>> {
    if k < 2 {
        return Err(invalid("exponent must be at least 2"));
    }
    let fp = factorize(p)?;
    if fp.factors.len() != 1 || fp.factors.values().next() != Some(&1) {
        return Err(invalid(format!("{p} is not irreducible")));
    }
    let p_canon = fp.factors.keys().next().expect("one key").clone();
    let g = gcd_elem(a, b);
    if g != p_canon {
        return Err(precondition(format!("gcd({a}, {b}) = {g} is not associate to {p}")));
    }
    if a.is_zero() || b.is_zero() {
        let (single, nonzero) = if a.is_zero() { (Side::Second, b) } else { (Side::First, a) };
        let unit_single = R::unit_between(nonzero, &p_canon).expect("associate to p");
        return Ok(Pp2Witness { d: R::one(), e: R::zero(), single, unit_single, unit_other: R::one() });
    }
    let fa = factorize(a)?;
    let fb = factorize(b)?;
    for (q, &e) in fa.factors.iter().chain(fb.factors.iter()) {
        if *q == p_canon {
            continue;
        }
        if e % k != 0 {
            return Err(precondition(format!("product is not a {k}-th power: irreducible {q} has multiplicity {e}")));
        }
    }
    let (ma, mb) = (fa.multiplicity(&p_canon), fb.multiplicity(&p_canon));
    let (single, fs, fo, m_other) = if ma == 1 {
        (Side::First, &fa, &fb, mb)
    } else if mb == 1 {
        (Side::Second, &fb, &fa, ma)
    } else {
        unreachable!("gcd is p so one side has p exactly once")
    };
    if (m_other + 1) % k != 0 {
        return Err(precondition(format!("product is not a {k}-th power: {p} has multiplicity {}", m_other + 1)));
    }
    let root_of = |f: &Factorization<R>| {
        f.factors.iter().filter(|(q, _)| **q != p_canon).fold(R::one(), |acc, (q, &e)| acc * q.pow(e / k))
    };
    let d = root_of(fs);
    let e = root_of(fo) * p_canon.pow((m_other + 1 - k) / k);
    Ok(Pp2Witness { d, e, single, unit_single: fs.unit.clone(), unit_other: fo.unit.clone() })
}

/// Bezout coefficients: `(c, d)` with `c·a + d·b = 1` for coprime `a, b`.
pub fn bachet<R: EuclideanDomain>(a: &R, b: &R) -> Result<(R, R)> {
    if a.is_zero() && b.is_zero() {
        return Err(invalid("both arguments are zero"));
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (R::one(), R::zero());
    let (mut t0, mut t1) = (R::zero(), R::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        r0 = std::mem::replace(&mut r1, r);
        let s = s0 - q.clone() * s1.clone();
        s0 = std::mem::replace(&mut s1, s);
        let t = t0 - q * t1.clone();
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = r0.unit_inverse().ok_or_else(|| precondition(format!("{a} and {b} are not coprime (gcd {r0})")))?;
    Ok((s0 * inv.clone(), t0 * inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fz(n: i64) -> Factorization<i64> {
        factorize(&n).unwrap()
    }

    #[test]
    fn integer_factorization_example() {
        let f = fz(-12);
        assert_eq!(f.unit, -1);
        assert_eq!(f.factors, BTreeMap::from([(2, 2), (3, 1)]));
        assert_eq!(f.reconstruct(), -12);
        assert!(fz(-1).is_unit());
        assert!(factorize(&0i64).is_err());
    }

    #[test]
    fn divisibility_and_gcd() {
        assert!(divides(&fz(6), &fz(12)));
        assert!(divides(&fz(35), &fz(35)));
        assert!(!divides(&fz(4), &fz(6)));
        assert_eq!(gcd_fact(&fz(12), &fz(18)).canonical_value(), 6);
        assert_eq!(gcd_fact(&fz(-35), &fz(35)), fz(35));
        assert!(gcd_fact(&fz(8), &fz(27)).factors.is_empty());
    }

    #[test]
    fn pp1_examples() {
        assert_eq!(pp1_extract(&[4i64, 9], 2).unwrap(), vec![2, 3]);
        assert_eq!(pp1_extract(&[1i64], 5).unwrap(), vec![1]);
        assert_eq!(pp1_extract(&[-8i64, 27], 3).unwrap(), vec![-2, 3]);
        assert_eq!(pp1_extract(&[0i64, -1], 3).unwrap(), vec![0, -1]);
        let err = pp1_extract(&[4i64, 3], 2).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("irreducible 3 has multiplicity 1")));
        assert!(pp1_extract(&[4i64, 6], 2).is_err());
    }

    #[test]
    fn pp2_examples() {
        let w = pp2_extract(&2i64, &4, &2, 3).unwrap();
        assert_eq!((w.d, w.e, w.single), (1, 1, Side::First));
        let w = pp2_extract(&3i64, &27, &3, 2).unwrap();
        assert_eq!((w.d, w.e, w.single), (1, 3, Side::First));
        let w = pp2_extract(&0i64, &3, &3, 4).unwrap();
        assert_eq!((w.d, w.e, w.single), (1, 0, Side::Second));
        let w = pp2_extract(&-24i64, &-9, &3, 3).unwrap();
        // -24 = -3·2^3, -9 = -3^2·1^3
        assert_eq!((w.d, w.e, w.single, w.unit_single, w.unit_other), (2, 1, Side::First, -1, -1));
        assert!(pp2_extract(&2i64, &6, &3, 2).is_err());
        assert!(pp2_extract(&3i64, &6, &3, 2).is_err());
        assert!(pp2_extract(&3i64, &9, &9, 2).is_err());
    }

    #[test]
    fn bachet_examples() {
        assert_eq!(bachet(&3i64, &5).unwrap(), (2, -1));
        assert_eq!(bachet(&1i64, &17).unwrap(), (1, 0));
        assert!(bachet(&4i64, &6).is_err());
        assert!(bachet(&0i64, &0).is_err());
        let (c, d) = bachet(&-7i64, &10).unwrap();
        assert_eq!(c * -7 + d * 10, 1);
    }
}
