use std::collections::{BTreeMap, HashMap};

use parking_lot::Mutex;

use super::field::Fp;
use super::group::{FiniteMatrixGroup, GroupIdx};
use super::lin::Lin;
use super::poly::{Monomial, Poly};
use super::wedge::Wedge;

/// Element of the skew group algebra `A = S(V) ⋊ G`: a finite sum `Σ s_g · g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SkewElem {
    terms: BTreeMap<GroupIdx, Poly>,
}

impl SkewElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_part(s: Poly, g: GroupIdx) -> Self {
        let mut e = Self::zero();
        if !s.is_zero() {
            e.terms.insert(g, s);
        }
        e
    }

    pub fn group(g: GroupIdx, nvars: usize) -> Self {
        Self::from_part(Poly::constant(nvars, 1), g)
    }

    pub fn one(nvars: usize) -> Self {
        Self::group(0, nvars)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GroupIdx, &Poly)> + '_ {
        self.terms.iter().map(|(&g, s)| (g, s))
    }

    /// Flat iteration over `(group element, monomial, coefficient)`.
    pub fn flat(&self) -> impl Iterator<Item = (GroupIdx, &Monomial, u32)> + '_ {
        self.terms.iter().flat_map(|(&g, s)| s.iter().map(move |(m, c)| (g, m, c)))
    }

    pub fn component(&self, g: GroupIdx) -> Option<&Poly> {
        self.terms.get(&g)
    }

    pub fn add_part(&mut self, s: &Poly, g: GroupIdx, c: u32, fp: &Fp) {
        let slot = self.terms.entry(g).or_default();
        slot.add_scaled(s, c, fp);
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_term(&mut self, m: Monomial, g: GroupIdx, c: u32, fp: &Fp) {
        let slot = self.terms.entry(g).or_default();
        slot.add_term(m, c, fp);
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, other: &SkewElem, c: u32, fp: &Fp) {
        for (g, s) in other.iter() {
            self.add_part(s, g, c, fp);
        }
    }

    pub fn scaled(&self, c: u32, fp: &Fp) -> SkewElem {
        let mut out = SkewElem::zero();
        out.add_scaled(self, c, fp);
        out
    }

    pub fn sub(&self, other: &SkewElem, fp: &Fp) -> SkewElem {
        let mut out = self.clone();
        out.add_scaled(other, fp.neg(1), fp);
        out
    }

    /// Set of polynomial degrees of the terms.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.flat().map(|(_, m, _)| m.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

/// Session-wide algebra context: the field, the variables, the group and its action.
///
/// Group elements act on column vectors; on variables the action is
/// `x_i ↦ Σ_j M_{ji} x_j`, extended multiplicatively.
#[derive(Debug)]
pub struct SkewRing {
    fp: Fp,
    names: Vec<String>,
    group: FiniteMatrixGroup,
    forms: Vec<Vec<Vec<(usize, u32)>>>,
    mono_cache: Mutex<HashMap<(GroupIdx, Monomial), Poly>>,
}

impl SkewRing {
    pub fn new(fp: Fp, names: Vec<String>, group: FiniteMatrixGroup) -> Self {
        let n = names.len();
        assert_eq!(group.dim(), n, "group dimension must match the variable count");
        let forms = (0..group.order())
            .map(|g| {
                let m = group.matrix(g);
                (0..n)
                    .map(|i| (0..n).filter(|&j| m.get(j, i) != 0).map(|j| (j, m.get(j, i))).collect())
                    .collect()
            })
            .collect();
        SkewRing { fp, names, group, forms, mono_cache: Mutex::new(HashMap::new()) }
    }

    #[inline]
    pub fn fp(&self) -> &Fp {
        &self.fp
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn group(&self) -> &FiniteMatrixGroup {
        &self.group
    }

    pub fn one(&self) -> SkewElem {
        SkewElem::one(self.nvars())
    }

    pub fn one_poly(&self) -> Poly {
        Poly::constant(self.nvars(), 1)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::monomial(Monomial::var(self.nvars(), i))
    }

    /// `^g x^m`
    pub fn act_monomial(&self, g: GroupIdx, m: &Monomial) -> Poly {
        if g == 0 || m.is_one() {
            return Poly::monomial(m.clone());
        }
        let key = (g, m.clone());
        if let Some(p) = self.mono_cache.lock().get(&key) {
            return p.clone();
        }
        let fp = &self.fp;
        let n = self.nvars();
        let mut acc = self.one_poly();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let form = Poly::from_terms(
                self.forms[g][i].iter().map(|&(j, c)| (Monomial::var(n, j), c)),
                fp,
            );
            for _ in 0..e {
                acc = acc.mul(&form, fp);
            }
        }
        self.mono_cache.lock().insert(key, acc.clone());
        acc
    }

    /// `^g s`: a degree-preserving algebra automorphism of S(V).
    pub fn act_poly(&self, g: GroupIdx, s: &Poly) -> Poly {
        if g == 0 {
            return s.clone();
        }
        s.apply(|m| self.act_monomial(g, m), &self.fp)
    }

    /// `Λ^j(g)` applied to a basis wedge, expanded over increasing-index wedges.
    pub fn act_wedge(&self, g: GroupIdx, w: Wedge) -> Lin<Wedge> {
        let fp = &self.fp;
        let mut acc = Lin::single(Wedge::EMPTY, 1);
        if g == 0 {
            return Lin::single(w, 1);
        }
        for i in w.indices() {
            let mut next = Lin::zero();
            for (j, c) in acc.iter() {
                for &(k, mk) in &self.forms[g][i] {
                    if j.contains(k) {
                        continue;
                    }
                    let s = fp.sign(j.count_above(k));
                    next.add_term(j.with(k), fp.mul(fp.mul(c, mk), s), fp);
                }
            }
            acc = next;
        }
        acc
    }

    /// `(s g)(s' g') = s · ^g s' · g g'`
    pub fn mul(&self, a: &SkewElem, b: &SkewElem) -> SkewElem {
        let fp = &self.fp;
        let mut out = SkewElem::zero();
        for (g, s) in a.iter() {
            for (h, t) in b.iter() {
                let prod = s.mul(&self.act_poly(g, t), fp);
                out.add_part(&prod, self.group.mul(g, h), 1, fp);
            }
        }
        out
    }

    pub fn display(&self, a: &SkewElem) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.iter()
            .map(|(g, s)| {
                let gs = self.group_label(g);
                if s.len() == 1 && s.keys().next().is_some_and(|m| m.is_one()) {
                    let c = self.fp.to_signed(s.iter().next().unwrap().1);
                    match c {
                        1 => gs,
                        -1 => format!("-{gs}"),
                        c => format!("{c}·{gs}"),
                    }
                } else {
                    format!("({})·{gs}", s.display_with(&self.names, &self.fp))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Label such as `1`, `g0`, `g0^2`, `g0g1` from the shortest generator word.
    pub fn group_label(&self, g: GroupIdx) -> String {
        let w = self.group.word(g);
        if w.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            out.push_str(&format!("g{}", w[i]));
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }
}
