//! Cyclotomic integers `Z[ζ_p]` for `p ∈ {3, 5}` with norm-Euclidean
//! division.
//!
//! Elements are stored on the power basis `1, ζ, …, ζ^{p-2}`. Products are
//! computed as cyclic convolutions modulo `ζ^p = 1` and then reduced with
//! `ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::scalar::{round_half_down, Int};

/// Primes whose cyclotomic integers this module supports.
pub const SUPPORTED_PRIMES: [u32; 2] = [3, 5];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cyclotomic<T> {
    p: u32,
    coords: Vec<T>,
}

fn check_p(p: u32) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(invalid(format!("cyclotomic arithmetic is implemented for p in {SUPPORTED_PRIMES:?}, got {p}")))
    }
}

impl<T: Int> Cyclotomic<T> {
    pub fn new(p: u32, coords: Vec<T>) -> Result<Self> {
        check_p(p)?;
        if coords.len() != (p - 1) as usize {
            return Err(invalid(format!("Z[ζ_{p}] elements need {} coordinates", p - 1)));
        }
        Ok(Cyclotomic { p, coords })
    }

    pub fn from_int(p: u32, n: T) -> Result<Self> {
        check_p(p)?;
        let mut coords = vec![T::zero(); (p - 1) as usize];
        coords[0] = n;
        Ok(Cyclotomic { p, coords })
    }

    /// `ζ^k` for any `k`.
    pub fn zeta_pow(p: u32, k: u32) -> Result<Self> {
        check_p(p)?;
        let mut full = vec![T::zero(); p as usize];
        full[(k % p) as usize] = T::one();
        Ok(Self::from_full(p, full))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Rational integer value, if the element lies in `Z`.
    pub fn as_integer(&self) -> Option<T> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    /// Reduces a length-`p` vector modulo `1 + ζ + … + ζ^{p-1}`.
    fn from_full(p: u32, mut full: Vec<T>) -> Self {
        let top = full.pop().expect("length p");
        let coords = full.into_iter().map(|c| c - top.clone()).collect();
        Cyclotomic { p, coords }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::RingMismatch(format!("Z[ζ_{}] vs Z[ζ_{}]", self.p, other.p)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| f(a.clone(), b.clone())).collect();
        Cyclotomic { p: self.p, coords }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { p: self.p, coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let p = self.p as usize;
        let mut full = vec![T::zero(); p];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                let slot = &mut full[(i + j) % p];
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Self::from_full(self.p, full)
    }

    /// The Galois conjugate `ζ ↦ ζ^k`, `k` prime to `p`.
    pub fn conjugate(&self, k: u32) -> Self {
        let p = self.p as usize;
        let mut full = vec![T::zero(); p];
        for (j, c) in self.coords.iter().enumerate() {
            full[(j * k as usize) % p] = c.clone();
        }
        Self::from_full(self.p, full)
    }

    /// Product of the conjugates other than the identity; `x · x* = N(x)`.
    fn conjugate_cofactor(&self) -> Self {
        (2..self.p)
            .fold(Self::from_int(self.p, T::one()).expect("checked p"), |acc, k| acc.mul_unchecked(&self.conjugate(k)))
    }

    /// Field norm: the product of all `p - 1` conjugates.
    pub fn norm(&self) -> T {
        self.mul_unchecked(&self.conjugate_cofactor()).as_integer().expect("norm of a cyclotomic integer is rational")
    }

    /// Division with remainder `z = w·q + r`, `|N(r)| < |N(w)|`.
    ///
    /// The exact quotient `z·w* / N(w)` is rounded coordinate-wise (halves
    /// toward negative infinity). When that misses the bound, every offset
    /// in `{-1, 0, 1}^{p-1}` around the rounded point is tried and the one
    /// with smallest remainder norm kept.
    pub fn divrem(&self, w: &Self) -> Result<(Self, Self)> {
        self.same_ring(w)?;
        if w.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cof = w.conjugate_cofactor();
        let mut n = w.mul_unchecked(&cof).as_integer().expect("rational norm");
        let mut num = self.mul_unchecked(&cof);
        if n.is_negative() {
            n = -n;
            num = num.neg();
        }
        let q0 = Cyclotomic { p: self.p, coords: num.coords.iter().map(|c| round_half_down(c, &n)).collect() };
        let remainder = |q: &Self| self.zip_with(&w.mul_unchecked(q), |a, b| a - b);
        let r0 = remainder(&q0);
        if r0.norm().abs() < n {
            return Ok((q0, r0));
        }
        let dims = (self.p - 1) as usize;
        let mut best: Option<(T, Self, Self)> = None;
        for code in 0..3usize.pow(dims as u32) {
            let mut c = code;
            let mut q = q0.clone();
            for coord in q.coords.iter_mut() {
                let offset = T::of((c % 3) as i64 - 1);
                *coord = coord.clone() + offset;
                c /= 3;
            }
            let r = remainder(&q);
            let rn = r.norm().abs();
            if best.as_ref().map_or(true, |(b, _, _)| rn < *b) {
                best = Some((rn, q, r));
            }
        }
        match best {
            Some((rn, q, r)) if rn < n => Ok((q, r)),
            _ => Err(Error::DivisionFailed { dividend: self.to_string(), divisor: w.to_string() }),
        }
    }
}

impl<T: Int> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => c.to_string(),
                1 => format!("{c}ζ"),
                _ => format!("{c}ζ^{j}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl<T: Int> Cyclotomic<T> {
    pub fn one(p: u32) -> Result<Self> {
        Self::from_int(p, T::one())
    }

    pub fn is_one(&self) -> bool {
        self.as_integer().is_some_and(|n| n.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Cyclotomic<i64>;

    fn c3(a: i64, b: i64) -> C {
        C::new(3, vec![a, b]).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let x = C::new(5, vec![3, -1, 4, 1]).unwrap();
        assert_eq!(x.mul(&C::one(5).unwrap()).unwrap(), x);
        let zeta2 = C::zeta_pow(3, 2).unwrap();
        assert_eq!(zeta2, c3(-1, -1));
        let one_plus_zeta2 = C::one(3).unwrap().add(&zeta2).unwrap();
        assert_eq!(c3(1, 1).mul(&one_plus_zeta2).unwrap(), C::one(3).unwrap());
        let one_minus_zeta2 = C::one(3).unwrap().sub(&zeta2).unwrap();
        assert_eq!(c3(1, -1).mul(&one_minus_zeta2).unwrap(), C::from_int(3, 3).unwrap());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(C::one(3).unwrap().norm(), 1);
        assert_eq!(c3(1, -1).norm(), 3);
        assert_eq!(C::from_int(3, 2).unwrap().norm(), 4);
        assert_eq!(C::from_int(5, 2).unwrap().norm(), 16);
        assert_eq!(C::new(5, vec![1, -1, 0, 0]).unwrap().norm(), 5);
    }

    #[test]
    fn division_examples() {
        let z = C::new(5, vec![7, -2, 0, 9]).unwrap();
        let (q, r) = z.divrem(&C::one(5).unwrap()).unwrap();
        assert_eq!((q, r.is_zero()), (z.clone(), true));
        let (q, r) = C::from_int(3, 3).unwrap().divrem(&c3(1, -1)).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, c3(2, 1)); // 1 - ζ² = 2 + ζ
        assert!(matches!(z.divrem(&C::from_int(5, 0).unwrap()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn validation() {
        assert!(C::new(7, vec![0; 6]).is_err());
        assert!(C::new(5, vec![0; 2]).is_err());
        assert!(matches!(C::one(3).unwrap().mul(&C::one(5).unwrap()), Err(Error::RingMismatch(_))));
    }
}
