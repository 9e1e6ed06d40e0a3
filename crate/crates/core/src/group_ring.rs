//! Integral group rings `Z[G]` of finite abelian groups.
//!
//! `G` is a product of cyclic groups, written additively on coordinates
//! but treated multiplicatively: the product of two group elements adds
//! coordinates modulo the cyclic orders. A ring element is a finitely
//! supported map `G → T`, multiplied by convolution.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::scalar::Int;

/// `C_{n_1} × … × C_{n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
}

/// Coordinates in `[0, n_i)`.
pub type GroupElement = Vec<u32>;

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.iter().any(|&n| n < 2) {
            return Err(invalid("every cyclic factor must have order at least 2"));
        }
        Ok(FiniteAbelianGroup { orders })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&n| n as u64).product()
    }

    pub fn identity(&self) -> GroupElement {
        vec![0; self.orders.len()]
    }

    /// Reduces arbitrary coordinates into canonical range.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.orders.len() {
            return Err(invalid(format!("expected {} coordinates", self.orders.len())));
        }
        Ok(coords.iter().zip(&self.orders).map(|(&c, &n)| c.rem_euclid(n as i64) as u32).collect())
    }

    pub fn op(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        a.iter().zip(b).zip(&self.orders).map(|((&x, &y), &n)| ((x as u64 + y as u64) % n as u64) as u32).collect()
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![Vec::new()];
        for &n in &self.orders {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..n).map(move |c| {
                        let mut e = prefix.clone();
                        e.push(c);
                        e
                    })
                })
                .collect();
        }
        out
    }
}

/// A finitely supported map `G → T` with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupRingElem<T> {
    group: FiniteAbelianGroup,
    coeffs: BTreeMap<GroupElement, T>,
}

impl<T: Int> GroupRingElem<T> {
    pub fn zero(group: &FiniteAbelianGroup) -> Self {
        GroupRingElem { group: group.clone(), coeffs: BTreeMap::new() }
    }

    /// `1_S`: coefficient 1 at the identity.
    pub fn one(group: &FiniteAbelianGroup) -> Self {
        Self::monomial(group, group.identity(), T::one())
    }

    pub fn monomial(group: &FiniteAbelianGroup, g: GroupElement, c: T) -> Self {
        Self::from_terms(group, [(g, c)])
    }

    /// Sums the given terms; repeated group elements accumulate.
    pub fn from_terms(group: &FiniteAbelianGroup, terms: impl IntoIterator<Item = (GroupElement, T)>) -> Self {
        let mut coeffs: BTreeMap<GroupElement, T> = BTreeMap::new();
        for (g, c) in terms {
            assert_eq!(g.len(), group.orders.len(), "element has wrong arity");
            let g = g.iter().zip(&group.orders).map(|(&x, &n)| x % n).collect();
            let slot = coeffs.entry(g).or_insert_with(T::zero);
            *slot = slot.clone() + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        GroupRingElem { group: group.clone(), coeffs }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coeff(&self, g: &GroupElement) -> T {
        self.coeffs.get(g).cloned().unwrap_or_else(T::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&GroupElement, &T)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", self.group.orders, other.group.orders)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let terms = self.coeffs.iter().chain(other.coeffs.iter()).map(|(g, c)| (g.clone(), c.clone()));
        Ok(Self::from_terms(&self.group, terms))
    }

    pub fn neg(&self) -> Self {
        let terms = self.coeffs.iter().map(|(g, c)| (g.clone(), -c.clone()));
        Self::from_terms(&self.group, terms)
    }

    /// Convolution: `(F·F')(g) = Σ_{e·f = g} F(e) F'(f)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut terms = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (e, a) in &self.coeffs {
            for (f, b) in &other.coeffs {
                terms.push((self.group.op(e, f), a.clone() * b.clone()));
            }
        }
        Ok(Self::from_terms(&self.group, terms))
    }
}

impl<T: Int> fmt::Display for GroupRingElem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(g, c)| format!("{c}·g{g:?}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = GroupRingElem<i64>;

    #[test]
    fn identity_and_examples() {
        let c2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let one_plus_g = E::from_terms(&c2, [(vec![0], 1), (vec![1], 1)]);
        assert_eq!(E::one(&c2).mul(&one_plus_g).unwrap(), one_plus_g);
        assert_eq!(one_plus_g.mul(&one_plus_g).unwrap(), E::from_terms(&c2, [(vec![0], 2), (vec![1], 2)]));

        let c3 = FiniteAbelianGroup::cyclic(3).unwrap();
        let norm = E::from_terms(&c3, [(vec![0], 1), (vec![1], 1), (vec![2], 1)]);
        let one_minus_g = E::from_terms(&c3, [(vec![0], 1), (vec![1], -1)]);
        assert!(norm.mul(&one_minus_g).unwrap().is_zero());
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let c3 = FiniteAbelianGroup::cyclic(3).unwrap();
        let x = E::from_terms(&c3, [(vec![1], 4), (vec![1], -4), (vec![4], 2)]);
        assert_eq!(x.support().count(), 1);
        assert_eq!(x.coeff(&vec![1]), 2);
        assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = E::one(&FiniteAbelianGroup::cyclic(2).unwrap());
        let b = E::one(&FiniteAbelianGroup::cyclic(3).unwrap());
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch(_))));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn group_enumeration() {
        let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.elements().len(), 6);
        assert_eq!(g.op(&vec![1, 2], &vec![1, 2]), vec![0, 1]);
        assert_eq!(g.element(&[-1, 7]).unwrap(), vec![1, 1]);
        assert!(FiniteAbelianGroup::new(vec![1]).is_err());
    }
}
