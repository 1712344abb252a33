//! Finite linear combinations with exact rational coefficients.
//!
//! [`Combo`] is the common carrier for polynomials in the admissible algebra,
//! combinations of tableaux, differential polynomials and term combinations.
//! Terms are kept in a `BTreeMap`, so iteration follows the key order and the
//! leading term is the last entry.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact coefficient field.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A linear combination `Σ cᵢ·kᵢ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combo<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

impl<K: Ord> Default for Combo<K> {
    fn default() -> Self {
        Combo {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combo<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K) -> Self {
        Self::term(key, Coeff::one())
    }

    pub fn term(key: K, c: Coeff) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
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

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    /// Adds `c·key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Adds `c·other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Combo {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &Coeff)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &K> {
        self.terms.keys()
    }

    /// The maximal key with its coefficient.
    pub fn leading(&self) -> Option<(&K, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Linear extension of a map sending each key to a combination.
    pub fn flat_map<L, F>(&self, mut f: F) -> Combo<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> Combo<L>,
    {
        let mut out = Combo::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Bilinear extension of a map on pairs of keys.
    pub fn bilinear<K2, L, F>(&self, other: &Combo<K2>, mut f: F) -> Combo<L>
    where
        K2: Ord + Clone,
        L: Ord + Clone,
        F: FnMut(&K, &K2) -> Combo<L>,
    {
        let mut out = Combo::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_scaled(&f(k1, k2), &(c1 * c2));
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coeff)> for Combo<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut out = Combo::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> IntoIterator for Combo<K> {
    type Item = (K, Coeff);
    type IntoIter = std::collections::btree_map::IntoIter<K, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone> AddAssign<&Combo<K>> for Combo<K> {
    fn add_assign(&mut self, rhs: &Combo<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Combo<K>> for Combo<K> {
    fn sub_assign(&mut self, rhs: &Combo<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone> Add for &Combo<K> {
    type Output = Combo<K>;
    fn add(self, rhs: &Combo<K>) -> Combo<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &Combo<K> {
    type Output = Combo<K>;
    fn sub(self, rhs: &Combo<K>) -> Combo<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Combo<K> {
    type Output = Combo<K>;
    fn add(mut self, rhs: Combo<K>) -> Combo<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for Combo<K> {
    type Output = Combo<K>;
    fn sub(mut self, rhs: Combo<K>) -> Combo<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for Combo<K> {
    type Output = Combo<K>;
    fn neg(self) -> Combo<K> {
        Combo {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Combo<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})·{k:?}")?;
        }
        Ok(())
    }
}
