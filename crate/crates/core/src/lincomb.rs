//! Finitely supported formal linear combinations with exact coefficients.

use std::collections::btree_map::{self, BTreeMap};

use crate::field::FieldElement;

/// A sparse vector indexed by `K`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, FieldElement>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: FieldElement) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Option<&FieldElement> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, FieldElement> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, FieldElement> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, other: &Self, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Applies a key map, merging collisions.
    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&K) -> bool) -> Self {
        LinComb { terms: self.terms.iter().filter(|(k, _)| pred(k)).map(|(k, v)| (k.clone(), v.clone())).collect() }
    }
}

impl<K: Ord + Clone> FromIterator<(K, FieldElement)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, FieldElement)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a FieldElement);
    type IntoIter = btree_map::Iter<'a, K, FieldElement>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn cancellation_removes_terms() {
        let q = FieldCtx::rationals();
        let mut v = LinComb::term(1u8, q.from_i64(2));
        v.add_term(1, q.from_i64(-2));
        assert!(v.is_zero());
        v.add_term(3, q.zero());
        assert!(v.is_zero());
    }

    #[test]
    fn linear_ops() {
        let q = FieldCtx::rationals();
        let a: LinComb<u8> = [(1, q.from_i64(1)), (2, q.from_i64(3))].into_iter().collect();
        let b = a.scale(&q.from_i64(2));
        assert_eq!(b.sub(&a).sub(&a), LinComb::zero());
        assert_eq!(a.map_keys(|_| 0u8).coeff(&0), Some(&q.from_i64(4)));
    }
}
