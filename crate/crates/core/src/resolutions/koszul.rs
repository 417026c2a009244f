//! Koszul resolution `D` of `S = S(V)`: `D_j = S ⊗ Λ^j V ⊗ S`, its diagonal, `G`-action,
//! a k-linear contraction, and the homotopy `φ_D` built from it.

use std::collections::HashMap;

use parking_lot::Mutex;

use crate::algebra::{GroupIdx, Lin, Monomial, Poly, SkewRing, Wedge};
use crate::error::{Error, Result};

/// `x^a ⊗ x_I ⊗ x^b`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KoszulTensor {
    pub left: Monomial,
    pub wedge: Wedge,
    pub right: Monomial,
}

pub type ChainD = Lin<KoszulTensor>;

impl KoszulTensor {
    pub fn new(left: Monomial, wedge: Wedge, right: Monomial) -> Self {
        KoszulTensor { left, wedge, right }
    }

    /// `1 ⊗ x_I ⊗ 1`
    pub fn generator(nvars: usize, wedge: Wedge) -> Self {
        KoszulTensor { left: Monomial::one(nvars), wedge, right: Monomial::one(nvars) }
    }

    pub fn degree(&self) -> usize {
        self.wedge.len()
    }

    /// `|a| + |I| + |b|`, preserved by every differential.
    pub fn internal_degree(&self) -> usize {
        self.left.degree() + self.wedge.len() + self.right.degree()
    }

    pub fn times_left(&self, m: &Monomial) -> Self {
        KoszulTensor { left: m.mul(&self.left), wedge: self.wedge, right: self.right.clone() }
    }

    pub fn times_right(&self, m: &Monomial) -> Self {
        KoszulTensor { left: self.left.clone(), wedge: self.wedge, right: self.right.mul(m) }
    }
}

/// Which variable the contraction peels off first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ContractionOrder {
    Ascending,
    #[default]
    Descending,
}

impl ContractionOrder {
    pub fn reversed(self) -> Self {
        match self {
            ContractionOrder::Ascending => ContractionOrder::Descending,
            ContractionOrder::Descending => ContractionOrder::Ascending,
        }
    }

    fn vars(self, n: usize) -> Vec<usize> {
        match self {
            ContractionOrder::Ascending => (0..n).collect(),
            ContractionOrder::Descending => (0..n).rev().collect(),
        }
    }
}

/// `∂(x^a ⊗ x_{i_1}∧…∧x_{i_j} ⊗ x^b) = Σ_l (-1)^{l+1} (x^a x_{i_l} ⊗ x_{I∖i_l} ⊗ x^b − x^a ⊗ x_{I∖i_l} ⊗ x_{i_l} x^b)`
pub fn diff(ring: &SkewRing, t: &KoszulTensor) -> Result<ChainD> {
    if t.degree() == 0 {
        return Err(Error::DegreeTooLow(0));
    }
    let fp = ring.fp();
    let mut out = ChainD::zero();
    for (l, i) in t.wedge.indices().enumerate() {
        let rest = t.wedge.without(i);
        let s = fp.sign(l);
        out.add_term(KoszulTensor::new(t.left.times_var(i), rest, t.right.clone()), s, fp);
        out.add_term(KoszulTensor::new(t.left.clone(), rest, t.right.times_var(i)), fp.neg(s), fp);
    }
    Ok(out)
}

pub fn diff_chain(ring: &SkewRing, c: &ChainD) -> Result<ChainD> {
    let mut out = ChainD::zero();
    for (t, k) in c.iter() {
        out.add_scaled(&diff(ring, t)?, k, ring.fp());
    }
    Ok(out)
}

/// `μ_D(x^a ⊗ x^b) = x^{a+b}`
pub fn augment(t: &KoszulTensor) -> Result<Monomial> {
    if t.degree() != 0 {
        return Err(Error::WrongDegree { expected: 0, found: t.degree() });
    }
    Ok(t.left.mul(&t.right))
}

/// `Δ(x^a ⊗ x_I ⊗ x^b) = Σ_{S⊆I} ± (x^a ⊗ x_S ⊗ 1) ⊗_S (1 ⊗ x_{I∖S} ⊗ x^b)` with the shuffle
/// sign of `x_S ∧ x_{I∖S} = ± x_I`. Returned as `(sign exponent, left, right)`.
pub fn delta(t: &KoszulTensor) -> Vec<(usize, KoszulTensor, KoszulTensor)> {
    let n = t.left.nvars();
    t.wedge
        .subsets()
        .into_iter()
        .map(|s| {
            let rest = Wedge(t.wedge.0 & !s.0);
            (
                Wedge::shuffle_sign(s, rest),
                KoszulTensor::new(t.left.clone(), s, Monomial::one(n)),
                KoszulTensor::new(Monomial::one(n), rest, t.right.clone()),
            )
        })
        .collect()
}

/// Diagonal `G`-action `^g x^a ⊗ ^g x_I ⊗ ^g x^b`.
pub fn act(ring: &SkewRing, g: GroupIdx, t: &KoszulTensor) -> ChainD {
    let fp = ring.fp();
    if g == 0 {
        return ChainD::single(t.clone(), 1);
    }
    let l = ring.act_monomial(g, &t.left);
    let w = ring.act_wedge(g, t.wedge);
    let r = ring.act_monomial(g, &t.right);
    let mut out = ChainD::zero();
    for (a, ca) in l.iter() {
        for (i, ci) in w.iter() {
            let cai = fp.mul(ca, ci);
            for (b, cb) in r.iter() {
                out.add_term(KoszulTensor::new(a.clone(), *i, b.clone()), fp.mul(cai, cb), fp);
            }
        }
    }
    out
}

pub fn act_chain(ring: &SkewRing, g: GroupIdx, c: &ChainD) -> ChainD {
    if g == 0 {
        return c.clone();
    }
    c.apply(|t| act(ring, g, t), ring.fp())
}

/// `s · d`
pub fn left_mul(ring: &SkewRing, s: &Poly, c: &ChainD) -> ChainD {
    let fp = ring.fp();
    let mut out = ChainD::zero();
    for (m, cm) in s.iter() {
        for (t, ct) in c.iter() {
            out.add_term(t.times_left(m), fp.mul(cm, ct), fp);
        }
    }
    out
}

/// `d · s`
pub fn right_mul(ring: &SkewRing, c: &ChainD, s: &Poly) -> ChainD {
    let fp = ring.fp();
    let mut out = ChainD::zero();
    for (t, ct) in c.iter() {
        for (m, cm) in s.iter() {
            out.add_term(t.times_right(m), fp.mul(cm, ct), fp);
        }
    }
    out
}

/// `h_{-1}(s) = 1 ⊗ s`
pub fn contraction_unit(ring: &SkewRing, s: &Poly) -> ChainD {
    let n = ring.nvars();
    s.map_keys(|m| KoszulTensor::new(Monomial::one(n), Wedge::EMPTY, m.clone()), ring.fp())
}

/// k-linear contracting homotopy of the Koszul complex: the tensor product of the
/// one-variable contractions `x^a ⊗ x^b ↦ Σ_{t<a} x^t ⊗ e ⊗ x^{a+b-1-t}`, taken in `order`.
/// Satisfies `∂h + h∂ = id − (1 ⊗ μ_D)` exactly.
pub fn contraction(ring: &SkewRing, order: ContractionOrder, t: &KoszulTensor) -> ChainD {
    let fp = ring.fp();
    let mut out = ChainD::zero();
    let mut left = t.left.clone();
    let mut right = t.right.clone();
    for i in order.vars(ring.nvars()) {
        if t.wedge.contains(i) {
            break;
        }
        let (a, b) = (left.0[i], right.0[i]);
        let wedge = t.wedge.with(i);
        let s = fp.sign(t.wedge.count_below(i));
        for e in 0..a {
            out.add_term(
                KoszulTensor::new(left.with_exp(i, e), wedge, right.with_exp(i, a + b - 1 - e)),
                s,
                fp,
            );
        }
        left.0[i] = 0;
        right.0[i] = a + b;
    }
    out
}

pub fn contraction_chain(ring: &SkewRing, order: ContractionOrder, c: &ChainD) -> ChainD {
    c.apply(|t| contraction(ring, order, t), ring.fp())
}

/// Homotopy `φ_D : D ⊗_S D → D` from `μ_D ⊗ 1` to `1 ⊗ μ_D`.
///
/// On each free generator `e = (1 ⊗ x_I ⊗ x^c) ⊗_S (1 ⊗ x_J ⊗ 1)` it is
/// `h((μ⊗1 − 1⊗μ)(e) − φ_D(∂e))`, memoized; elsewhere it is extended `S`-bilinearly.
#[derive(Debug)]
pub struct KoszulHomotopy {
    order: ContractionOrder,
    memo: Mutex<HashMap<(Wedge, Monomial, Wedge), ChainD>>,
}

impl KoszulHomotopy {
    pub fn new(order: ContractionOrder) -> Self {
        KoszulHomotopy { order, memo: Mutex::new(HashMap::new()) }
    }

    pub fn order(&self) -> ContractionOrder {
        self.order
    }

    pub fn phi(&self, ring: &SkewRing, left: &KoszulTensor, right: &KoszulTensor) -> ChainD {
        let middle = left.right.mul(&right.left);
        let core = self.on_generator(ring, left.wedge, &middle, right.wedge);
        if left.left.is_one() && right.right.is_one() {
            return core;
        }
        core.map_keys(|t| t.times_left(&left.left).times_right(&right.right), ring.fp())
    }

    pub fn phi_pairs(&self, ring: &SkewRing, pairs: &Lin<(KoszulTensor, KoszulTensor)>) -> ChainD {
        pairs.apply(|(l, r)| self.phi(ring, l, r), ring.fp())
    }

    fn on_generator(&self, ring: &SkewRing, i: Wedge, c: &Monomial, j: Wedge) -> ChainD {
        let key = (i, c.clone(), j);
        if let Some(v) = self.memo.lock().get(&key) {
            return v.clone();
        }
        let fp = ring.fp();
        let n = ring.nvars();
        let e_left = KoszulTensor::new(Monomial::one(n), i, c.clone());
        let e_right = KoszulTensor::generator(n, j);

        let mut rhs = ChainD::zero();
        if i.is_empty() {
            rhs.add_term(KoszulTensor::new(c.clone(), j, Monomial::one(n)), 1, fp);
        }
        if j.is_empty() {
            rhs.add_term(e_left.clone(), fp.neg(1), fp);
        }
        // φ_D(∂e), with ∂(x ⊗ y) = ∂x ⊗ y + (-1)^{|x|} x ⊗ ∂y
        if !i.is_empty() {
            for (t, k) in diff(ring, &e_left).expect("positive degree").iter() {
                rhs.add_scaled(&self.phi(ring, t, &e_right), fp.neg(k), fp);
            }
        }
        if !j.is_empty() {
            let s = fp.sign(i.len());
            for (t, k) in diff(ring, &e_right).expect("positive degree").iter() {
                rhs.add_scaled(&self.phi(ring, &e_left, t), fp.neg(fp.mul(s, k)), fp);
            }
        }
        let value = contraction_chain(ring, self.order, &rhs);
        self.memo.lock().entry(key).or_insert(value).clone()
    }
}

/// All Koszul tensors of homological degree `j` and internal degree `q`.
pub fn basis(nvars: usize, j: usize, q: usize) -> Vec<KoszulTensor> {
    let mut out = Vec::new();
    if q < j {
        return out;
    }
    for w in Wedge::all_of_size(nvars, j) {
        for la in 0..=q - j {
            for a in Monomial::all_of_degree(nvars, la) {
                for b in Monomial::all_of_degree(nvars, q - j - la) {
                    out.push(KoszulTensor::new(a.clone(), w, b));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::transvection;

    const V: usize = 0;
    const W: usize = 1;

    fn mono(v: u16, w: u16) -> Monomial {
        Monomial(vec![v, w])
    }

    fn kt(a: (u16, u16), idx: &[usize], b: (u16, u16)) -> KoszulTensor {
        KoszulTensor::new(mono(a.0, a.1), Wedge::from_indices(idx).unwrap(), mono(b.0, b.1))
    }

    #[test]
    fn differential_examples() {
        let r = transvection(3);
        let fp = *r.fp();
        let m1 = fp.neg(1);
        assert_eq!(
            diff(&r, &kt((0, 0), &[V], (0, 0))).unwrap(),
            ChainD::from_terms([(kt((1, 0), &[], (0, 0)), 1), (kt((0, 0), &[], (1, 0)), m1)], &fp)
        );
        assert_eq!(
            diff(&r, &kt((0, 0), &[V, W], (0, 0))).unwrap(),
            ChainD::from_terms(
                [
                    (kt((1, 0), &[W], (0, 0)), 1),
                    (kt((0, 0), &[W], (1, 0)), m1),
                    (kt((0, 1), &[V], (0, 0)), m1),
                    (kt((0, 0), &[V], (0, 1)), 1),
                ],
                &fp
            )
        );
        assert_eq!(
            diff(&r, &kt((0, 1), &[V], (0, 0))).unwrap(),
            ChainD::from_terms([(kt((1, 1), &[], (0, 0)), 1), (kt((0, 1), &[], (1, 0)), m1)], &fp)
        );
        assert!(diff(&r, &kt((1, 0), &[], (0, 0))).is_err());
    }

    #[test]
    fn augmentation_examples() {
        assert_eq!(augment(&kt((1, 0), &[], (0, 0))), Ok(mono(1, 0)));
        assert_eq!(augment(&kt((0, 0), &[], (0, 1))), Ok(mono(0, 1)));
        assert_eq!(augment(&kt((1, 1), &[], (0, 1))), Ok(mono(1, 2)));
        assert!(augment(&kt((0, 0), &[V], (0, 0))).is_err());
    }

    #[test]
    fn diagonal_examples() {
        let d = delta(&kt((0, 0), &[V, W], (0, 0)));
        assert_eq!(
            d,
            vec![
                (0, kt((0, 0), &[], (0, 0)), kt((0, 0), &[V, W], (0, 0))),
                (0, kt((0, 0), &[V], (0, 0)), kt((0, 0), &[W], (0, 0))),
                (1, kt((0, 0), &[W], (0, 0)), kt((0, 0), &[V], (0, 0))),
                (0, kt((0, 0), &[V, W], (0, 0)), kt((0, 0), &[], (0, 0))),
            ]
        );
        assert_eq!(delta(&kt((0, 0), &[V], (0, 0))).len(), 2);
        assert_eq!(
            delta(&kt((0, 0), &[], (0, 0))),
            vec![(0, kt((0, 0), &[], (0, 0)), kt((0, 0), &[], (0, 0)))]
        );
    }

    #[test]
    fn group_action_examples() {
        let r = transvection(3);
        let fp = *r.fp();
        assert_eq!(
            act(&r, 1, &kt((0, 0), &[W], (0, 0))),
            ChainD::from_terms([(kt((0, 0), &[V], (0, 0)), 1), (kt((0, 0), &[W], (0, 0)), 1)], &fp)
        );
        let t = kt((1, 2), &[V], (0, 1));
        assert_eq!(act(&r, 0, &t), ChainD::single(t, 1));
        let vw = kt((0, 0), &[V, W], (0, 0));
        assert_eq!(act(&r, 1, &vw), ChainD::single(vw, 1));
    }

    #[test]
    fn contraction_examples() {
        let r = transvection(3);
        let fp = *r.fp();
        let asc = ContractionOrder::Ascending;
        assert_eq!(
            contraction(&r, asc, &kt((1, 0), &[], (0, 0))),
            ChainD::single(kt((0, 0), &[V], (0, 0)), 1)
        );
        assert!(contraction(&r, asc, &kt((0, 0), &[], (1, 0))).is_zero());
        assert_eq!(
            contraction(&r, asc, &kt((1, 1), &[], (0, 0))),
            ChainD::from_terms([(kt((0, 1), &[V], (0, 0)), 1), (kt((0, 0), &[W], (1, 0)), 1)], &fp)
        );
        // the other order peels w first
        assert_eq!(
            contraction(&r, asc.reversed(), &kt((1, 1), &[], (0, 0))),
            ChainD::from_terms([(kt((1, 0), &[W], (0, 0)), 1), (kt((0, 0), &[V], (0, 1)), 1)], &fp)
        );
    }

    #[test]
    fn contraction_is_a_homotopy_to_the_unit_projection() {
        let r = transvection(5);
        let fp = *r.fp();
        for order in [ContractionOrder::Ascending, ContractionOrder::Descending] {
            for j in 0..=2 {
                for q in 0..=4 {
                    for t in basis(2, j, q) {
                        let h = contraction(&r, order, &t);
                        let mut lhs = if j == 2 { ChainD::zero() } else { diff_chain(&r, &h).unwrap() };
                        if j > 0 {
                            let dt = diff(&r, &t).unwrap();
                            lhs.add_scaled(&contraction_chain(&r, order, &dt), 1, &fp);
                        }
                        let mut rhs = ChainD::single(t.clone(), 1);
                        if j == 0 {
                            let unit = contraction_unit(&r, &Poly::monomial(augment(&t).unwrap()));
                            rhs.add_scaled(&unit, fp.neg(1), &fp);
                        }
                        assert_eq!(lhs, rhs, "{t:?} {order:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn homotopy_examples() {
        let r = transvection(3);
        for order in [ContractionOrder::Ascending, ContractionOrder::Descending] {
            let h = KoszulHomotopy::new(order);
            let one = kt((0, 0), &[], (0, 0));
            let v = kt((0, 0), &[V], (0, 0));
            assert!(h.phi(&r, &one, &one).is_zero());
            assert!(h.phi(&r, &v, &one).is_zero());
            assert!(h.phi(&r, &one, &v).is_zero());
        }
    }

    #[test]
    fn contraction_orders_disagree_on_mixed_pairs() {
        let r = transvection(3);
        let h = KoszulHomotopy::new(ContractionOrder::Descending);
        let got = h.phi(&r, &kt((0, 0), &[W], (0, 0)), &kt((1, 0), &[], (0, 0)));
        assert_eq!(got, ChainD::single(kt((0, 0), &[V, W], (0, 0)), 1));
        let got = h.phi(&r, &kt((0, 0), &[], (1, 0)), &kt((0, 0), &[W], (0, 0)));
        assert!(got.is_zero());

        let asc = KoszulHomotopy::new(ContractionOrder::Ascending);
        let got = asc.phi(&r, &kt((0, 0), &[W], (0, 0)), &kt((1, 0), &[], (0, 0)));
        assert!(got.is_zero());
    }
}
