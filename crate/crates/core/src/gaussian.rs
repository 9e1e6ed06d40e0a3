//! Gaussian integers `Z[i]` and quadratic integers `Z[√d]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{exact_root_big, factor_biguint, sqrt_minus_one_mod};
use crate::error::{invalid, Error, Result};
use crate::scalar::{round_half_down, Int};
use crate::ufd::{gcd_elem, EuclideanDomain, FactorizationDomain};

/// `re + im·i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

impl<T: Int> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian::new(T::zero(), T::one())
    }

    pub fn from_int(n: T) -> Self {
        Gaussian::new(n, T::zero())
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    /// Division with remainder `z = w·q + r`, `2·N(r) ≤ N(w)`.
    ///
    /// The exact quotient `z·w̄ / N(w)` is rounded coordinate-wise, halves
    /// toward negative infinity.
    pub fn divrem(&self, w: &Self) -> Result<(Self, Self)> {
        if w.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = w.norm();
        let num = self.clone() * w.conj();
        let q = Gaussian::new(round_half_down(&num.re, &n), round_half_down(&num.im, &n));
        let r = self.clone() - w.clone() * q.clone();
        Ok((q, r))
    }

    fn map_big(&self) -> Gaussian<BigInt> {
        Gaussian::new(self.re.big(), self.im.big())
    }

    fn from_big(z: &Gaussian<BigInt>) -> Self {
        Gaussian::new(
            T::from_bigint(&z.re).expect("factor fits scalar"),
            T::from_bigint(&z.im).expect("factor fits scalar"),
        )
    }
}

impl<T: Int> fmt::Display for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl<T: Int> Add for Gaussian<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: Int> Sub for Gaussian<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: Int> Mul for Gaussian<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gaussian::new(
            self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl<T: Int> Neg for Gaussian<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian::new(-self.re, -self.im)
    }
}

impl<T: Int> Zero for Gaussian<T> {
    fn zero() -> Self {
        Gaussian::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<T: Int> One for Gaussian<T> {
    fn one() -> Self {
        Gaussian::new(T::one(), T::zero())
    }
}

/// `{1, -1, i, -i}`.
pub fn units<T: Int>() -> [Gaussian<T>; 4] {
    [Gaussian::one(), -Gaussian::one(), Gaussian::i(), -Gaussian::i()]
}

pub fn is_unit<T: Int>(z: &Gaussian<T>) -> bool {
    units().contains(z)
}

impl<T: Int> EuclideanDomain for Gaussian<T> {
    fn measure(&self) -> BigUint {
        self.norm().big().magnitude().clone()
    }

    fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        Gaussian::divrem(self, divisor)
    }

    fn units() -> Vec<Self> {
        units().to_vec()
    }

    /// The associate with `re > 0, im ≥ 0`.
    fn canonical_associate(&self) -> (Self, Self) {
        if self.is_zero() {
            return (Self::zero(), Self::one());
        }
        for u in units::<T>() {
            let c = u.clone() * self.clone();
            if c.re.is_positive() && !c.im.is_negative() {
                // self = ū·c since u·ū = 1
                return (c, u.conj());
            }
        }
        unreachable!("one associate lies in the half-open first quadrant")
    }
}

impl<T: Int> FactorizationDomain for Gaussian<T> {
    /// Factors the norm in `Z` and lifts: 2 ramifies as `(1+i)²`, primes
    /// `≡ 3 (mod 4)` stay inert, primes `≡ 1 (mod 4)` split as
    /// `gcd(p, t+i)` and its conjugate with `t² ≡ -1`.
    fn irreducible_factors(&self) -> Vec<(Self, u32)> {
        if self.is_zero() {
            return Vec::new();
        }
        let z = self.map_big();
        let norm = z.norm();
        let mut rest = z;
        let mut out = Vec::new();
        let mut take = |pi: Gaussian<BigInt>, rest: &mut Gaussian<BigInt>| {
            let mut e = 0;
            loop {
                let (q, r) = rest.divrem(&pi).expect("nonzero prime");
                if !r.is_zero() {
                    break;
                }
                *rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((Gaussian::<T>::from_big(&pi), e));
            }
        };
        for (p, _) in factor_biguint(norm.magnitude()) {
            let pb = BigInt::from(p.clone());
            let residue = (&p % 4u32).to_u32().expect("small");
            if p == BigUint::from(2u32) {
                take(Gaussian::new(BigInt::one(), BigInt::one()), &mut rest);
            } else if residue == 3 {
                take(Gaussian::from_int(pb), &mut rest);
            } else {
                let t = BigInt::from(sqrt_minus_one_mod(&p));
                let pi = gcd_elem(&Gaussian::from_int(pb), &Gaussian::new(t, BigInt::one()));
                let pi_bar = pi.conj().canonical_associate().0;
                take(pi, &mut rest);
                take(pi_bar, &mut rest);
            }
        }
        debug_assert!(is_unit(&rest));
        out
    }
}

/// Canonical gcd; rejects `gcd(0, 0)`.
pub fn gaussian_gcd<T: Int>(z: &Gaussian<T>, w: &Gaussian<T>) -> Result<Gaussian<T>> {
    if z.is_zero() && w.is_zero() {
        return Err(invalid("gcd(0, 0) is undefined"));
    }
    Ok(gcd_elem(z, w))
}

/// `a + b√d` for a fixed non-square `d ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quadratic<T> {
    pub a: T,
    pub b: T,
    pub d: T,
}

fn check_nonsquare<T: Int>(d: &T) -> Result<()> {
    if d < &(T::one() + T::one()) {
        return Err(invalid(format!("d = {d} must be at least 2")));
    }
    if exact_root_big(&d.big(), 2).is_some() {
        return Err(invalid(format!("d = {d} is a perfect square")));
    }
    Ok(())
}

impl<T: Int> Quadratic<T> {
    pub fn new(a: T, b: T, d: T) -> Result<Self> {
        check_nonsquare(&d)?;
        Ok(Quadratic { a, b, d })
    }

    pub fn one(d: T) -> Result<Self> {
        Quadratic::new(T::one(), T::zero(), d)
    }

    /// `a² - d·b²`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - self.d.clone() * self.b.clone() * self.b.clone()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::RingMismatch(format!("Z[√{}] vs Z[√{}]", self.d, other.d)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Quadratic { a: self.a.clone() + other.a.clone(), b: self.b.clone() + other.b.clone(), d: self.d.clone() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        Quadratic {
            a: self.a.clone() * o.a.clone() + self.d.clone() * self.b.clone() * o.b.clone(),
            b: self.a.clone() * o.b.clone() + self.b.clone() * o.a.clone(),
            d: self.d.clone(),
        }
    }

    fn reduce(&self, modulus: &T) -> Self {
        Quadratic { a: self.a.mod_floor(modulus), b: self.b.mod_floor(modulus), d: self.d.clone() }
    }

    pub fn pow(&self, mut m: u64) -> Self {
        let mut acc = Quadratic { a: T::one(), b: T::zero(), d: self.d.clone() };
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            m >>= 1;
            if m > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `(a + b√d)^m` with both coordinates reduced into `[0, modulus)` after
    /// every step.
    pub fn pow_mod(&self, mut m: u64, modulus: &T) -> Result<Self> {
        if !modulus.is_positive() {
            return Err(invalid("modulus must be at least 1"));
        }
        let mut acc = Quadratic { a: T::one(), b: T::zero(), d: self.d.clone() }.reduce(modulus);
        let mut base = self.reduce(modulus);
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul_unchecked(&base).reduce(modulus);
            }
            m >>= 1;
            if m > 0 {
                base = base.mul_unchecked(&base).reduce(modulus);
            }
        }
        Ok(acc)
    }
}

impl<T: Int> fmt::Display for Quadratic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}√{}", self.a, self.b, self.d)
    }
}
