//! Sparse integer linear combinations over an ordered basis.
//!
//! Every algebra in the crate (double posets, permutations, compositions and
//! their tensor squares) is a free ℤ-module; this is the shared carrier.
//! Coefficients are checked `i64`, zero coefficients are never stored, and
//! terms iterate in the basis order so printed output is stable.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

pub(crate) fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, 1);
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (K, i64)>>(terms: I) -> Result<Self> {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c)?;
        }
        Ok(out)
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

    pub fn coefficient(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, i64> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, i64> {
        self.terms.keys()
    }

    /// Adds `coeff · key`, pruning the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = checked_add(*o.get(), coeff)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Adds `k · other` into `self`.
    pub fn add_scaled(&mut self, k: i64, other: &Self) -> Result<()> {
        if k == 0 {
            return Ok(());
        }
        for (key, &c) in &other.terms {
            self.add_term(key.clone(), checked_mul(k, c)?)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(1, other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(-1, other)?;
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero();
        out.add_scaled(k, self)?;
        Ok(out)
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L, F>(&self, mut f: F) -> Result<LinComb<L>>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> Result<LinComb<L>>,
    {
        let mut out = LinComb::zero();
        for (key, &c) in &self.terms {
            out.add_scaled(c, &f(key)?)?;
        }
        Ok(out)
    }

    /// Applies a bilinear map given on pairs of basis elements.
    pub fn map_bilinear<K2, L, F>(&self, other: &LinComb<K2>, mut f: F) -> Result<LinComb<L>>
    where
        K2: Ord + Clone,
        L: Ord + Clone,
        F: FnMut(&K, &K2) -> Result<LinComb<L>>,
    {
        let mut out = LinComb::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_scaled(checked_mul(ca, cb)?, &f(a, b)?)?;
            }
        }
        Ok(out)
    }

    /// Evaluates a bilinear form given on pairs of basis elements.
    pub fn pair_with<K2, F>(&self, other: &LinComb<K2>, mut f: F) -> Result<i64>
    where
        K2: Ord + Clone,
        F: FnMut(&K, &K2) -> Result<i64>,
    {
        let mut total = 0i64;
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let v = f(a, b)?;
                if v != 0 {
                    total = checked_add(total, checked_mul(checked_mul(ca, cb)?, v)?)?;
                }
            }
        }
        Ok(total)
    }
}

impl<K: Ord + Clone, V: Ord + Clone> LinComb<(K, V)> {
    /// Componentwise product on a tensor square: `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn tensor_product<F, G>(&self, other: &Self, mut left: F, mut right: G) -> Result<Self>
    where
        F: FnMut(&K, &K) -> Result<LinComb<K>>,
        G: FnMut(&V, &V) -> Result<LinComb<V>>,
    {
        let mut out = Self::zero();
        for ((a, b), &c1) in &self.terms {
            for ((c, d), &c2) in &other.terms {
                let coeff = checked_mul(c1, c2)?;
                let l = left(a, c)?;
                let r = right(b, d)?;
                for (x, &cx) in l.iter() {
                    for (y, &cy) in r.iter() {
                        let k = checked_mul(coeff, checked_mul(cx, cy)?)?;
                        out.add_term((x.clone(), y.clone()), k)?;
                    }
                }
            }
        }
        Ok(out)
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a i64);
    type IntoIter = btree_map::Iter<'a, K, i64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Prints `<coeff>*<key>` terms joined by ` + `, or `0`.
impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{k}")?;
        }
        Ok(())
    }
}

/// Prints a tensor combination as `<coeff>*<left>|<right>` terms.
pub struct TensorDisplay<'a, K: Ord, V: Ord>(pub &'a LinComb<(K, V)>);

impl<K: Ord + fmt::Display, V: Ord + fmt::Display> fmt::Display for TensorDisplay<'_, K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((k, v), c)) in self.0.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{k}|{v}")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
