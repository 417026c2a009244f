use std::collections::BTreeMap;

use super::field::Fp;

/// A finite F_p-linear combination of basis keys. Zero coefficients are never stored,
/// and iteration follows the key order, so every derived output is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lin<K: Ord> {
    terms: BTreeMap<K, u32>,
}

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: u32) -> Self {
        let mut l = Self::zero();
        if c != 0 {
            l.terms.insert(k, c);
        }
        l
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, u32)> + '_ {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> u32 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, k: K, c: u32, fp: &Fp) {
        if c == 0 {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c % fp.p());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = fp.add(*e.get(), c);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Lin<K>, c: u32, fp: &Fp) {
        if c == 0 {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), fp.mul(v, c), fp);
        }
    }

    pub fn scaled(&self, c: u32, fp: &Fp) -> Lin<K> {
        let mut out = Lin::zero();
        out.add_scaled(self, c, fp);
        out
    }

    pub fn sub(&self, other: &Lin<K>, fp: &Fp) -> Lin<K> {
        let mut out = self.clone();
        out.add_scaled(other, fp.neg(1), fp);
        out
    }

    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2, fp: &Fp) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c, fp);
        }
        out
    }

    /// Apply a linear map given on basis keys.
    pub fn apply<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Lin<K2>, fp: &Fp) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c, fp);
        }
        out
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (K, u32)>, fp: &Fp) -> Self {
        let mut out = Lin::zero();
        for (k, c) in iter {
            out.add_term(k, c, fp);
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, u32> {
        self.terms
    }
}
