use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::algebra::{Fp, GroupIdx, Monomial, SkewElem, SkewRing};
use crate::error::{Error, Result};
use crate::twisted::{Generator, TwistedResolution};

/// A cochain `X_n → A`, stored by its values on free generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    values: BTreeMap<Generator, SkewElem>,
}

impl Cochain {
    pub fn zero(degree: usize) -> Self {
        Cochain { degree, values: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Sets the value on a generator, replacing any previous value.
    pub fn set(&mut self, e: Generator, value: SkewElem) -> Result<()> {
        if e.degree() != self.degree {
            return Err(Error::WrongDegree { expected: self.degree, found: e.degree() });
        }
        if value.is_zero() {
            self.values.remove(&e);
        } else {
            self.values.insert(e, value);
        }
        Ok(())
    }

    pub fn with(mut self, e: Generator, value: SkewElem) -> Result<Self> {
        self.set(e, value)?;
        Ok(self)
    }

    pub fn get(&self, e: &Generator) -> Option<&SkewElem> {
        self.values.get(e)
    }

    /// Nonzero values sorted by (bar word, wedge).
    pub fn values(&self) -> impl Iterator<Item = (&Generator, &SkewElem)> + '_ {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Cochain, c: u32, fp: &Fp) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        for (e, v) in &other.values {
            let mut cur = self.values.remove(e).unwrap_or_default();
            cur.add_scaled(v, c, fp);
            if !cur.is_zero() {
                self.values.insert(e.clone(), cur);
            }
        }
        Ok(())
    }

    pub fn scaled(&self, c: u32, fp: &Fp) -> Cochain {
        let mut out = Cochain::zero(self.degree);
        out.add_scaled(self, c, fp).expect("same degree");
        out
    }

    pub fn sub(&self, other: &Cochain, fp: &Fp) -> Result<Cochain> {
        let mut out = self.clone();
        out.add_scaled(other, fp.neg(1), fp)?;
        Ok(out)
    }

    /// Internal degrees occurring: a term of polynomial degree `k` on a generator with wedge
    /// length `j` has internal degree `k - j`.
    pub fn internal_degrees(&self) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for (e, v) in &self.values {
            for k in v.degrees() {
                out.insert(k as i64 - e.wedge.len() as i64);
            }
        }
        out
    }

    /// `Some(d)` when every term has internal degree `d`; `None` for zero or mixed cochains.
    pub fn internal_degree(&self) -> Option<i64> {
        let ds = self.internal_degrees();
        if ds.len() == 1 {
            ds.into_iter().next()
        } else {
            None
        }
    }

    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.internal_degrees().iter().all(|&k| k == d)
    }

    /// The internal-degree-`d` part.
    pub fn component(&self, d: i64, fp: &Fp) -> Cochain {
        let mut out = Cochain::zero(self.degree);
        for (e, v) in &self.values {
            let mut keep = SkewElem::zero();
            for (g, m, c) in v.flat() {
                if m.degree() as i64 - e.wedge.len() as i64 == d {
                    keep.add_term(m.clone(), g, c, fp);
                }
            }
            if !keep.is_zero() {
                out.values.insert(e.clone(), keep);
            }
        }
        out
    }

    /// A cochain with uniformly random coefficients on every basis value of the given internal
    /// degree.
    pub fn random(res: &TwistedResolution, degree: usize, internal: i64, rng: &mut impl Rng) -> Cochain {
        let ring = res.ring();
        let fp = ring.fp();
        let mut out = Cochain::zero(degree);
        for e in res.generators(degree) {
            let mut v = SkewElem::zero();
            for (g, m) in value_basis(ring, e.wedge.len(), internal) {
                v.add_term(m, g, rng.gen_range(0..fp.p() as u32), fp);
            }
            out.set(e, v).expect("generator of the right degree");
        }
        out
    }
}

/// `(g, monomial)` pairs spanning the values allowed on a generator with wedge length `j` in
/// internal degree `d`.
pub fn value_basis(ring: &SkewRing, j: usize, d: i64) -> Vec<(GroupIdx, Monomial)> {
    let k = j as i64 + d;
    if k < 0 {
        return Vec::new();
    }
    let monos = Monomial::all_of_degree(ring.nvars(), k as usize);
    let mut out = Vec::new();
    for g in 0..ring.group().order() {
        for m in &monos {
            out.push((g, m.clone()));
        }
    }
    out
}
