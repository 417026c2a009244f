//! The twisted product resolution `X = C ⊗^G D` of `A = S(V) ⋊ G`.
//!
//! Elements of `X ⊗_A X` and `X ⊗_A X ⊗_A X` are carried as formal sums of pairs/triples of
//! basis tensors; [`TwistedResolution::normalize_pair`] and
//! [`TwistedResolution::normalize_triple`] map them to a canonical form when equality in the
//! quotient matters.

use std::sync::Arc;

use crate::algebra::{GroupIdx, Lin, Monomial, Poly, SkewElem, SkewRing, Wedge};
use crate::error::{Error, Result};
use crate::resolutions::bar::{self, BarTensor, ChainC};
use crate::resolutions::koszul::{self, ChainD, ContractionOrder, KoszulHomotopy, KoszulTensor};

/// `c ⊗ d ∈ C_i ⊗ D_j`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XTensor {
    pub c: BarTensor,
    pub d: KoszulTensor,
}

pub type ChainX = Lin<XTensor>;
pub type PairX = Lin<(XTensor, XTensor)>;
pub type TripleX = Lin<(XTensor, XTensor, XTensor)>;

/// Element of `(C ⊗ C) ⊗ (D ⊗ D)`: the form `(c, c', d̃, d')` reached through `1 ⊗ τ^{-1} ⊗ 1`.
pub type PreImage = (BarTensor, BarTensor, KoszulTensor, KoszulTensor);
pub type TriplePreImage = (BarTensor, BarTensor, BarTensor, KoszulTensor, KoszulTensor, KoszulTensor);

impl XTensor {
    pub fn new(c: BarTensor, d: KoszulTensor) -> Self {
        XTensor { c, d }
    }

    pub fn degree(&self) -> usize {
        self.c.degree() + self.d.degree()
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.c.degree(), self.d.degree())
    }

    pub fn internal_degree(&self) -> usize {
        self.d.internal_degree()
    }
}

/// Free `A`-bimodule generator `(1 ⊗ ḡ_1 ⊗ … ⊗ ḡ_i ⊗ 1) ⊗ (1 ⊗ x_I ⊗ 1)` of `X_{i,|I|}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub bar: Vec<GroupIdx>,
    pub wedge: Wedge,
}

impl Generator {
    pub fn new(bar: Vec<GroupIdx>, wedge: Wedge) -> Self {
        Generator { bar, wedge }
    }

    pub fn degree(&self) -> usize {
        self.bar.len() + self.wedge.len()
    }

    pub fn tensor(&self, nvars: usize) -> XTensor {
        XTensor::new(
            BarTensor::generator(&self.bar).expect("generator bars avoid the identity"),
            KoszulTensor::generator(nvars, self.wedge),
        )
    }
}

/// One summand of [`TwistedResolution::decompose`]: `coeff · left · e · right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTerm {
    pub left: SkewElem,
    pub generator: Generator,
    pub right: SkewElem,
    pub coeff: u32,
}

/// The resolution `X` together with the homotopy data used by the bracket.
#[derive(Debug)]
pub struct TwistedResolution {
    ring: Arc<SkewRing>,
    homotopy: KoszulHomotopy,
}

impl TwistedResolution {
    pub fn new(ring: Arc<SkewRing>, order: ContractionOrder) -> Self {
        TwistedResolution { ring, homotopy: KoszulHomotopy::new(order) }
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> Arc<SkewRing> {
        self.ring.clone()
    }

    pub fn homotopy(&self) -> &KoszulHomotopy {
        &self.homotopy
    }

    pub fn order(&self) -> ContractionOrder {
        self.homotopy.order()
    }

    /// Same ring, contraction taken in the opposite variable order.
    pub fn with_reversed_order(&self) -> TwistedResolution {
        TwistedResolution::new(self.ring.clone(), self.order().reversed())
    }

    fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn unit_tensor(&self) -> XTensor {
        XTensor::new(BarTensor::unit(), KoszulTensor::generator(self.nvars(), Wedge::EMPTY))
    }

    fn combine(&self, c: &ChainC, d: &ChainD) -> ChainX {
        let fp = self.ring.fp();
        let mut out = ChainX::zero();
        for (ct, cc) in c.iter() {
            for (dt, dc) in d.iter() {
                out.add_term(XTensor::new(ct.clone(), dt.clone()), fp.mul(cc, dc), fp);
            }
        }
        out
    }

    /// `∂(c ⊗ d) = ∂c ⊗ d + (-1)^i c ⊗ ∂d`
    pub fn diff(&self, t: &XTensor) -> Result<ChainX> {
        if t.degree() == 0 {
            return Err(Error::DegreeTooLow(0));
        }
        let fp = self.ring.fp();
        let mut out = ChainX::zero();
        if t.c.degree() > 0 {
            let dc = bar::diff(&self.ring, &t.c)?;
            out.add_scaled(&self.combine(&dc, &ChainD::single(t.d.clone(), 1)), 1, fp);
        }
        if t.d.degree() > 0 {
            let dd = koszul::diff(&self.ring, &t.d)?;
            out.add_scaled(&self.combine(&ChainC::single(t.c.clone(), 1), &dd), fp.sign(t.c.degree()), fp);
        }
        Ok(out)
    }

    pub fn diff_chain(&self, x: &ChainX) -> Result<ChainX> {
        let mut out = ChainX::zero();
        for (t, k) in x.iter() {
            out.add_scaled(&self.diff(t)?, k, self.ring.fp());
        }
        Ok(out)
    }

    /// `s'g' · (c ⊗ d) · sg = g'cg ⊗ (^{(g'hg)^{-1}} s')(^{g^{-1}}(d s))` for `c ∈ C_h`.
    pub fn act(&self, left: &SkewElem, t: &XTensor, right: &SkewElem) -> ChainX {
        let ring = &*self.ring;
        let fp = ring.fp();
        let group = ring.group();
        let h = bar::grade(ring, &t.c);
        let base = ChainD::single(t.d.clone(), 1);
        let mut out = ChainX::zero();
        for (g, s) in right.iter() {
            let ds = koszul::right_mul(ring, &base, s);
            let twisted = koszul::act_chain(ring, group.inv(g), &ds);
            for (gl, sl) in left.iter() {
                let c2 = bar::translate(ring, gl, &t.c, g);
                let big = group.mul(group.mul(gl, h), g);
                let sl2 = ring.act_poly(group.inv(big), sl);
                let d2 = koszul::left_mul(ring, &sl2, &twisted);
                for (dt, k) in d2.iter() {
                    out.add_term(XTensor::new(c2.clone(), dt.clone()), k, fp);
                }
            }
        }
        out
    }

    pub fn act_chain(&self, left: &SkewElem, x: &ChainX, right: &SkewElem) -> ChainX {
        x.apply(|t| self.act(left, t, right), self.ring.fp())
    }

    /// Write `t = Σ_J c_J (σ' g_0) · e_J · (σ g_{i+1})` over free generators `e_J`, with
    /// `σ = ^{g_{i+1}} x^b`, `σ' = ^{grade(c)} x^a` and `Σ_J c_J x_J = ^{g_{i+1}} x_I`.
    pub fn decompose(&self, t: &XTensor) -> Vec<GeneratorTerm> {
        let ring = &*self.ring;
        let g0 = t.c.first();
        let ge = t.c.last();
        let full = bar::grade(ring, &t.c);
        let left = SkewElem::from_part(ring.act_monomial(full, &t.d.left), g0);
        let right = SkewElem::from_part(ring.act_monomial(ge, &t.d.right), ge);
        ring.act_wedge(ge, t.d.wedge)
            .iter()
            .map(|(j, c)| GeneratorTerm {
                left: left.clone(),
                generator: Generator::new(t.c.middle().to_vec(), *j),
                right: right.clone(),
                coeff: c,
            })
            .collect()
    }

    /// `τ(c ⊗ d) = (-1)^{ij} ^g d ⊗ c` for `c ∈ (C_i)_g`, `d ∈ D_j`.
    pub fn tau(&self, c: &BarTensor, d: &KoszulTensor) -> (usize, ChainD) {
        let g = bar::grade(&self.ring, c);
        ((c.degree() * d.degree()) % 2, koszul::act(&self.ring, g, d))
    }

    /// `(c ⊗ d) ⊗_A (c' ⊗ d') ↦ (-1)^{jk} c ⊗ c' ⊗ ^{g^{-1}}d ⊗ d'` for `c' ∈ (C_k)_g`, `d ∈ D_j`.
    pub fn tau_inverse(&self, u: &XTensor, w: &XTensor) -> Lin<PreImage> {
        let ring = &*self.ring;
        let fp = ring.fp();
        let g = bar::grade(ring, &w.c);
        let s = fp.sign(u.d.degree() * w.c.degree());
        let twisted = koszul::act(ring, ring.group().inv(g), &u.d);
        twisted.map_keys(|d| (u.c.clone(), w.c.clone(), d.clone(), w.d.clone()), fp).scaled(s, fp)
    }

    /// `Δ_X = (1 ⊗ τ ⊗ 1)(Δ_C ⊗ Δ_D)`
    pub fn delta(&self, t: &XTensor) -> PairX {
        let ring = &*self.ring;
        let fp = ring.fp();
        let mut out = PairX::zero();
        let dd = koszul::delta(&t.d);
        for (c1, c2) in bar::delta(&t.c) {
            for (s, d1, d2) in &dd {
                let (ts, d1g) = self.tau(&c2, d1);
                let sign = fp.sign(s + ts);
                for (d1t, k) in d1g.iter() {
                    out.add_term(
                        (XTensor::new(c1.clone(), d1t.clone()), XTensor::new(c2.clone(), d2.clone())),
                        fp.mul(sign, k),
                        fp,
                    );
                }
            }
        }
        out
    }

    /// `Δ^{(2)} = (Δ_X ⊗ 1) Δ_X`
    pub fn delta2(&self, t: &XTensor) -> TripleX {
        let fp = self.ring.fp();
        let mut out = TripleX::zero();
        for ((u, w), k) in self.delta(t).iter() {
            for ((u1, u2), k2) in self.delta(u).iter() {
                out.add_term((u1.clone(), u2.clone(), w.clone()), fp.mul(k, k2), fp);
            }
        }
        out
    }

    /// `(1 ⊗ Δ_X) Δ_X`, used to check coassociativity.
    pub fn delta2_right(&self, t: &XTensor) -> TripleX {
        let fp = self.ring.fp();
        let mut out = TripleX::zero();
        for ((u, w), k) in self.delta(t).iter() {
            for ((w1, w2), k2) in self.delta(w).iter() {
                out.add_term((u.clone(), w1.clone(), w2.clone()), fp.mul(k, k2), fp);
            }
        }
        out
    }

    /// Augmentation `X_0 → A`, the bimodule map with `(1⊗1)⊗(1⊗1) ↦ 1`.
    pub fn mu(&self, t: &XTensor) -> Result<SkewElem> {
        if t.degree() != 0 {
            return Err(Error::WrongDegree { expected: 0, found: t.degree() });
        }
        let ring = &*self.ring;
        let mut out = SkewElem::zero();
        for term in self.decompose(t) {
            let v = ring.mul(&term.left, &term.right);
            out.add_scaled(&v, term.coeff, ring.fp());
        }
        Ok(out)
    }

    pub fn mu_chain(&self, x: &ChainX) -> Result<SkewElem> {
        let mut out = SkewElem::zero();
        for (t, k) in x.iter() {
            out.add_scaled(&self.mu(t)?, k, self.ring.fp());
        }
        Ok(out)
    }

    /// `φ_X = (φ_C ⊗ μ_D ⊗ 1 + ε_C(1 ⊗ μ_C) ⊗ φ_D)(1 ⊗ τ^{-1} ⊗ 1)` on one pair.
    pub fn phi_pair(&self, u: &XTensor, w: &XTensor) -> ChainX {
        let ring = &*self.ring;
        let fp = ring.fp();
        let mut out = ChainX::zero();
        for ((c, c2, dt, d2), k) in self.tau_inverse(u, w).iter() {
            if dt.degree() == 0 {
                if let Some((s, merged)) = bar::phi(ring, c, c2) {
                    let m = koszul::augment(dt).expect("degree zero");
                    out.add_term(XTensor::new(merged, d2.times_left(&m)), fp.mul(k, fp.sign(s)), fp);
                }
            }
            if c2.degree() == 0 {
                let g = bar::augment(ring, c2).expect("degree zero");
                let cg = bar::translate(ring, 0, c, g);
                let pd = self.homotopy.phi(ring, dt, d2);
                let s = fp.mul(k, fp.sign(c.degree()));
                for (t, kd) in pd.iter() {
                    out.add_term(XTensor::new(cg.clone(), t.clone()), fp.mul(s, kd), fp);
                }
            }
        }
        out
    }

    pub fn phi(&self, pairs: &PairX) -> ChainX {
        pairs.apply(|(u, w)| self.phi_pair(u, w), self.ring.fp())
    }

    /// Differential on `X ⊗_A X`: `∂u ⊗ w + (-1)^{|u|} u ⊗ ∂w`.
    pub fn diff_pair(&self, u: &XTensor, w: &XTensor) -> PairX {
        let fp = self.ring.fp();
        let mut out = PairX::zero();
        if u.degree() > 0 {
            for (t, k) in self.diff(u).expect("positive degree").iter() {
                out.add_term((t.clone(), w.clone()), k, fp);
            }
        }
        if w.degree() > 0 {
            let s = fp.sign(u.degree());
            for (t, k) in self.diff(w).expect("positive degree").iter() {
                out.add_term((u.clone(), t.clone()), fp.mul(s, k), fp);
            }
        }
        out
    }

    pub fn diff_pairs(&self, x: &PairX) -> PairX {
        x.apply(|(u, w)| self.diff_pair(u, w), self.ring.fp())
    }

    /// `(μ_X ⊗ 1)(u ⊗ w) = μ_X(u)·w`, zero unless `|u| = 0`.
    pub fn mu_left(&self, u: &XTensor, w: &XTensor) -> ChainX {
        match self.mu(u) {
            Ok(a) => self.act(&a, w, &self.ring.one()),
            Err(_) => ChainX::zero(),
        }
    }

    /// `(1 ⊗ μ_X)(u ⊗ w) = u·μ_X(w)`, zero unless `|w| = 0`.
    pub fn mu_right(&self, u: &XTensor, w: &XTensor) -> ChainX {
        match self.mu(w) {
            Ok(a) => self.act(&self.ring.one(), u, &a),
            Err(_) => ChainX::zero(),
        }
    }

    /// `(μ_C ⊗ 1 ⊗ μ_D ⊗ 1 − 1 ⊗ μ_C ⊗ 1 ⊗ μ_D)` on the pre-image form.
    pub fn mu_difference_preimage(&self, x: &Lin<PreImage>) -> ChainX {
        let ring = &*self.ring;
        let fp = ring.fp();
        let mut out = ChainX::zero();
        for ((c, c2, dt, d2), k) in x.iter() {
            if c.degree() == 0 && dt.degree() == 0 {
                let g = bar::augment(ring, c).unwrap();
                let m = koszul::augment(dt).unwrap();
                out.add_term(XTensor::new(bar::translate(ring, g, c2, 0), d2.times_left(&m)), k, fp);
            }
            if c2.degree() == 0 && d2.degree() == 0 {
                let g = bar::augment(ring, c2).unwrap();
                let m = koszul::augment(d2).unwrap();
                out.add_term(XTensor::new(bar::translate(ring, 0, c, g), dt.times_right(&m)), fp.neg(k), fp);
            }
        }
        out
    }

    /// Canonical form of `u ⊗_A w` in `(C ⊗_{kG} C) ⊗ (D ⊗_S D)`.
    pub fn normalize_pair(&self, u: &XTensor, w: &XTensor) -> Lin<PreImage> {
        let ring = &*self.ring;
        let fp = ring.fp();
        self.tau_inverse(u, w).map_keys(
            |(c, c2, dt, d2)| {
                let (c, c2) = balance_bar(ring, c, c2);
                let (dt, d2) = balance_koszul(dt, d2);
                (c, c2, dt, d2)
            },
            fp,
        )
    }

    pub fn normalize_pairs(&self, x: &PairX) -> Lin<PreImage> {
        x.apply(|(u, w)| self.normalize_pair(u, w), self.ring.fp())
    }

    /// Canonical form of `u ⊗_A v ⊗_A w` in `(C ⊗_{kG} C ⊗_{kG} C) ⊗ (D ⊗_S D ⊗_S D)`.
    pub fn normalize_triple(&self, u: &XTensor, v: &XTensor, w: &XTensor) -> Lin<TriplePreImage> {
        let ring = &*self.ring;
        let fp = ring.fp();
        let group = ring.group();
        let g3 = bar::grade(ring, &w.c);
        let g2 = bar::grade(ring, &v.c);
        let s = fp.sign(v.d.degree() * w.c.degree() + u.d.degree() * (v.c.degree() + w.c.degree()));
        let d2 = koszul::act(ring, group.inv(g3), &v.d);
        let d1 = koszul::act(ring, group.inv(group.mul(g2, g3)), &u.d);
        let mut out = Lin::zero();
        for (a, ka) in d1.iter() {
            for (b, kb) in d2.iter() {
                let (c1, c2) = balance_bar(ring, &u.c, &v.c);
                let (c2, c3) = balance_bar(ring, &c2, &w.c);
                let (e1, e2) = balance_koszul(a, b);
                let (e2, e3) = balance_koszul(&e2, &w.d);
                out.add_term((c1, c2, c3, e1, e2, e3), fp.mul(s, fp.mul(ka, kb)), fp);
            }
        }
        out
    }

    pub fn normalize_triples(&self, x: &TripleX) -> Lin<TriplePreImage> {
        x.apply(|(u, v, w)| self.normalize_triple(u, v, w), self.ring.fp())
    }

    /// Free generators of `X_n`, sorted by (bar word, wedge).
    pub fn generators(&self, n: usize) -> Vec<Generator> {
        let order = self.ring.group().order();
        let mut out = Vec::new();
        for i in 0..=n {
            let j = n - i;
            if j > self.nvars() {
                continue;
            }
            for mid in bar::middles(order, i) {
                for w in Wedge::all_of_size(self.nvars(), j) {
                    out.push(Generator::new(mid.clone(), w));
                }
            }
        }
        out.sort();
        out
    }

    /// k-basis of `X_{i,j}` in internal degree `q`.
    pub fn basis(&self, i: usize, j: usize, q: usize) -> Vec<XTensor> {
        let ds = koszul::basis(self.nvars(), j, q);
        let mut out = Vec::new();
        for c in bar::basis(&self.ring, i) {
            for d in &ds {
                out.push(XTensor::new(c.clone(), d.clone()));
            }
        }
        out
    }

    /// `s ↦ s · x` helper for polynomials acting on the left of a generator tensor.
    pub fn poly_times(&self, s: &Poly, t: &XTensor) -> ChainX {
        self.act(&SkewElem::from_part(s.clone(), 0), t, &self.ring.one())
    }
}

fn balance_bar(ring: &SkewRing, c: &BarTensor, c2: &BarTensor) -> (BarTensor, BarTensor) {
    let g = c.last();
    let mut e = c.entries().to_vec();
    *e.last_mut().unwrap() = 0;
    let l = BarTensor::new(e).expect("outer entries are unconstrained");
    (l, bar::translate(ring, g, c2, 0))
}

fn balance_koszul(d: &KoszulTensor, d2: &KoszulTensor) -> (KoszulTensor, KoszulTensor) {
    let n = d.left.nvars();
    (
        KoszulTensor::new(d.left.clone(), d.wedge, Monomial::one(n)),
        d2.times_left(&d.right),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::transvection;

    const V: usize = 0;
    const W: usize = 1;

    fn res(p: u64) -> TwistedResolution {
        TwistedResolution::new(Arc::new(transvection(p)), ContractionOrder::Descending)
    }

    pub(super) fn x(c: &[usize], a: (u16, u16), idx: &[usize], b: (u16, u16)) -> XTensor {
        XTensor::new(
            BarTensor::new(c.to_vec()).unwrap(),
            KoszulTensor::new(Monomial(vec![a.0, a.1]), Wedge::from_indices(idx).unwrap(), Monomial(vec![b.0, b.1])),
        )
    }

    #[test]
    fn differential_examples() {
        let r = res(3);
        let fp = *r.ring().fp();
        let m1 = fp.neg(1);
        assert_eq!(
            r.diff(&x(&[0, 0], (0, 0), &[V], (0, 0))).unwrap(),
            ChainX::from_terms([(x(&[0, 0], (1, 0), &[], (0, 0)), 1), (x(&[0, 0], (0, 0), &[], (1, 0)), m1)], &fp)
        );
        assert_eq!(
            r.diff(&x(&[0, 1, 0], (0, 0), &[], (0, 0))).unwrap(),
            ChainX::from_terms([(x(&[1, 0], (0, 0), &[], (0, 0)), 1), (x(&[0, 1], (0, 0), &[], (0, 0)), m1)], &fp)
        );
        assert_eq!(
            r.diff(&x(&[0, 1, 0], (0, 0), &[V], (0, 0))).unwrap(),
            ChainX::from_terms(
                [
                    (x(&[1, 0], (0, 0), &[V], (0, 0)), 1),
                    (x(&[0, 1], (0, 0), &[V], (0, 0)), m1),
                    (x(&[0, 1, 0], (1, 0), &[], (0, 0)), m1),
                    (x(&[0, 1, 0], (0, 0), &[], (1, 0)), 1),
                ],
                &fp
            )
        );
    }

    #[test]
    fn bimodule_action_examples() {
        let r = res(3);
        let ring = r.ring();
        let one = ring.one();
        let unit = r.unit_tensor();
        let w = SkewElem::from_part(ring.var(W), 0);
        assert_eq!(r.act(&w, &unit, &one), ChainX::single(x(&[0, 0], (0, 1), &[], (0, 0)), 1));
        let g = SkewElem::group(1, 2);
        assert_eq!(r.act(&g, &unit, &one), ChainX::single(x(&[1, 0], (0, 0), &[], (0, 0)), 1));
        let v = SkewElem::from_part(ring.var(V), 0);
        let ginv = SkewElem::group(2, 2);
        assert_eq!(
            r.act(&v, &x(&[0, 1, 0], (0, 0), &[], (0, 0)), &ginv),
            ChainX::single(x(&[0, 1, 2], (1, 0), &[], (0, 0)), 1)
        );
    }

    #[test]
    fn decomposition_examples() {
        let r = res(3);
        let ring = r.ring();
        let t = x(&[0, 1, 0], (0, 0), &[V, W], (0, 0));
        let d = r.decompose(&t);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].generator, Generator::new(vec![1], Wedge::from_indices(&[V, W]).unwrap()));
        assert_eq!(d[0].left, ring.one());

        let d = r.decompose(&x(&[1, 0], (0, 0), &[], (0, 0)));
        assert_eq!(d[0].left, SkewElem::group(1, 2));
        assert_eq!(d[0].right, ring.one());

        let d = r.decompose(&x(&[0, 0], (0, 0), &[W], (1, 0)));
        assert_eq!(d[0].left, ring.one());
        assert_eq!(d[0].right, SkewElem::from_part(ring.var(V), 0));
        assert_eq!(d[0].generator.wedge, Wedge::from_indices(&[W]).unwrap());
    }

    #[test]
    fn decomposition_round_trips() {
        let r = res(3);
        let fp = *r.ring().fp();
        for (i, j) in [(0, 0), (0, 1), (1, 1), (2, 0), (1, 2)] {
            for t in r.basis(i, j, 2) {
                let mut back = ChainX::zero();
                for term in r.decompose(&t) {
                    let e = term.generator.tensor(2);
                    back.add_scaled(&r.act(&term.left, &e, &term.right), term.coeff, &fp);
                }
                assert_eq!(back, ChainX::single(t.clone(), 1), "{t:?}");
            }
        }
    }

    #[test]
    fn tau_examples() {
        let r = res(3);
        let fp = *r.ring().fp();
        let n = 2;
        let g1 = BarTensor::new(vec![0, 1, 0]).unwrap();
        let dw = KoszulTensor::generator(n, Wedge::from_indices(&[W]).unwrap());
        let (s, d) = r.tau(&g1, &dw);
        assert_eq!(s, 1);
        let want = ChainD::from_terms(
            [
                (KoszulTensor::generator(n, Wedge::from_indices(&[V]).unwrap()), 1),
                (dw.clone(), 1),
            ],
            &fp,
        );
        assert_eq!(d, want);
        let (s, d) = r.tau(&BarTensor::unit(), &dw);
        assert_eq!((s, d), (0, ChainD::single(dw.clone(), 1)));
        let vw = KoszulTensor::generator(n, Wedge::from_indices(&[V, W]).unwrap());
        assert_eq!(r.tau(&g1, &vw), (0, ChainD::single(vw, 1)));
    }

    #[test]
    fn tau_inverse_examples() {
        let r = res(3);
        let fp = *r.ring().fp();
        let n = 2;
        let dv = KoszulTensor::generator(n, Wedge::from_indices(&[V]).unwrap());
        let dw = KoszulTensor::generator(n, Wedge::from_indices(&[W]).unwrap());
        let u = XTensor::new(BarTensor::unit(), dv.clone());
        let w = XTensor::new(BarTensor::unit(), dw.clone());
        assert_eq!(
            r.tau_inverse(&u, &w),
            Lin::single((BarTensor::unit(), BarTensor::unit(), dv.clone(), dw.clone()), 1)
        );
        let u = XTensor::new(BarTensor::unit(), dw.clone());
        let g1 = BarTensor::new(vec![0, 1, 0]).unwrap();
        let w = XTensor::new(g1.clone(), KoszulTensor::generator(n, Wedge::EMPTY));
        // −(1⊗1, 1⊗g⊗1, 1⊗(w − v)⊗1, 1⊗1)
        let one = KoszulTensor::generator(n, Wedge::EMPTY);
        let want = Lin::from_terms(
            [
                ((BarTensor::unit(), g1.clone(), dw.clone(), one.clone()), fp.neg(1)),
                ((BarTensor::unit(), g1.clone(), dv.clone(), one.clone()), 1),
            ],
            &fp,
        );
        assert_eq!(r.tau_inverse(&u, &w), want);
    }

    #[test]
    fn augmentation_examples() {
        let r = res(3);
        let ring = r.ring();
        assert_eq!(r.mu(&r.unit_tensor()).unwrap(), ring.one());
        assert_eq!(r.mu(&x(&[1, 0], (0, 0), &[], (0, 0))).unwrap(), SkewElem::group(1, 2));
        let vw = ring.var(V).mul(&ring.var(W), ring.fp());
        assert_eq!(r.mu(&x(&[0, 0], (1, 0), &[], (0, 1))).unwrap(), SkewElem::from_part(vw, 0));
        assert!(r.mu(&x(&[0, 0], (0, 0), &[V], (0, 0))).is_err());
    }

    #[test]
    fn unit_diagonals() {
        let r = res(3);
        let u = r.unit_tensor();
        assert_eq!(r.delta(&u), PairX::single((u.clone(), u.clone()), 1));
        assert_eq!(r.delta2(&u), TripleX::single((u.clone(), u.clone(), u.clone()), 1));
    }

    #[test]
    fn phi_on_unit_pair_vanishes() {
        let r = res(3);
        let u = r.unit_tensor();
        assert!(r.phi_pair(&u, &u).is_zero());
    }

    fn g(x: &[usize], idx: &[usize]) -> XTensor {
        super::tests::x(x, (0, 0), idx, (0, 0))
    }

    #[test]
    fn diagonal_on_top_koszul_generator() {
        let r = res(3);
        let fp = *r.ring().fp();
        let u = [0, 0];
        let want = PairX::from_terms(
            [
                ((g(&u, &[]), g(&u, &[V, W])), 1),
                ((g(&u, &[V]), g(&u, &[W])), 1),
                ((g(&u, &[W]), g(&u, &[V])), fp.neg(1)),
                ((g(&u, &[V, W]), g(&u, &[])), 1),
            ],
            &fp,
        );
        assert_eq!(r.delta(&g(&u, &[V, W])), want);
    }

    #[test]
    fn diagonal_with_twist() {
        for p in [3, 5] {
            let r = res(p);
            let fp = *r.ring().fp();
            for i in 1..p as usize {
                let u = [0, 0];
                let gi = [0, i, 0];
                let l = [0, i, 0];
                let rt = [0, 0];
                let m1 = fp.neg(1);
                let iv = fp.from_i64(i as i64);
                let want = PairX::from_terms(
                    [
                        ((g(&u, &[]), g(&gi, &[V, W])), 1),
                        ((g(&u, &[V]), g(&gi, &[W])), m1),
                        ((g(&u, &[V]), g(&gi, &[V])), iv),
                        ((g(&u, &[W]), g(&gi, &[V])), 1),
                        ((g(&u, &[V, W]), g(&gi, &[])), 1),
                        ((g(&l, &[]), g(&rt, &[V, W])), 1),
                        ((g(&l, &[V]), g(&rt, &[W])), 1),
                        ((g(&l, &[W]), g(&rt, &[V])), m1),
                        ((g(&l, &[V, W]), g(&rt, &[])), 1),
                    ],
                    &fp,
                );
                // The eight displayed summands become nine keys once iv+w is split.
                assert_eq!(r.delta(&g(&gi, &[V, W])), want, "p={p} i={i}");
            }
        }
    }

    #[test]
    fn iterated_diagonal_on_top_koszul_generator() {
        let r = res(3);
        let fp = *r.ring().fp();
        let u = [0, 0];
        let t = |a: &[usize], b: &[usize], c: &[usize]| (g(&u, a), g(&u, b), g(&u, c));
        let m1 = fp.neg(1);
        let want = TripleX::from_terms(
            [
                (t(&[], &[], &[V, W]), 1),
                (t(&[], &[V], &[W]), 1),
                (t(&[V], &[], &[W]), 1),
                (t(&[], &[W], &[V]), m1),
                (t(&[W], &[], &[V]), m1),
                (t(&[], &[V, W], &[]), 1),
                (t(&[V], &[W], &[]), 1),
                (t(&[W], &[V], &[]), m1),
                (t(&[V, W], &[], &[]), 1),
            ],
            &fp,
        );
        let top = g(&u, &[V, W]);
        assert_eq!(r.delta2(&top), want);
        assert_eq!(r.normalize_triples(&r.delta2(&top)), r.normalize_triples(&r.delta2_right(&top)));
    }

    #[test]
    fn iterated_diagonal_with_twist_has_27_summands() {
        let r = res(3);
        let top = g(&[0, 1, 0], &[V, W]);
        let mut summands = 0;
        for ((u, _), _) in r.delta(&top).iter() {
            summands += bar::delta(&u.c).len() * koszul::delta(&u.d).len();
        }
        // iv+w contributes two keys where the display has one summand
        assert_eq!(summands, 27 + 2);
        let expected: usize = [(1, 1), (1, 2), (1, 2), (1, 4), (2, 1), (2, 2), (2, 2), (2, 4)]
            .iter()
            .map(|(a, b)| a * b)
            .sum();
        assert_eq!(expected, 27);
    }

    #[test]
    fn phi_is_not_right_linear_over_the_group() {
        // φ_D comes from an ordered contraction, which the transvection does not preserve
        let r = res(3);
        let ring = r.ring();
        let fp = *ring.fp();
        let one = ring.one();
        let g = SkewElem::group(1, 2);
        let u = x(&[0, 0], (0, 0), &[], (0, 1));
        let w = x(&[0, 0], (0, 1), &[], (0, 0));
        let mut moved = PairX::zero();
        for (w2, k) in r.act(&one, &w, &g).iter() {
            moved.add_term((u.clone(), w2.clone()), k, &fp);
        }
        assert_ne!(r.phi(&moved), r.act_chain(&one, &r.phi_pair(&u, &w), &g));
        let s = SkewElem::from_part(ring.var(0), 0);
        let mut moved = PairX::zero();
        for (w2, k) in r.act(&one, &w, &s).iter() {
            moved.add_term((u.clone(), w2.clone()), k, &fp);
        }
        assert_eq!(r.phi(&moved), r.act_chain(&one, &r.phi_pair(&u, &w), &s));
    }
}
