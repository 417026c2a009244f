//! Reduced bar resolution `C` of `kG`: `C_i = kG ⊗ (kG/k·1)^{⊗i} ⊗ kG`.

use crate::algebra::{GroupIdx, Lin, SkewRing};
use crate::error::{Error, Result};

/// `g_0 ⊗ ḡ_1 ⊗ ... ⊗ ḡ_i ⊗ g_{i+1}`. Middle entries are never the identity; constructors
/// return `None` for the (zero) tensors that would violate this.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarTensor(Vec<GroupIdx>);

pub type ChainC = Lin<BarTensor>;

impl BarTensor {
    pub fn new(entries: Vec<GroupIdx>) -> Option<BarTensor> {
        assert!(entries.len() >= 2, "a bar tensor has at least two entries");
        let n = entries.len();
        if entries[1..n - 1].contains(&0) {
            None
        } else {
            Some(BarTensor(entries))
        }
    }

    /// `1 ⊗ 1`
    pub fn unit() -> BarTensor {
        BarTensor(vec![0, 0])
    }

    /// The free bimodule generator `1 ⊗ ḡ_1 ⊗ ... ⊗ ḡ_i ⊗ 1`.
    pub fn generator(middle: &[GroupIdx]) -> Option<BarTensor> {
        let mut e = Vec::with_capacity(middle.len() + 2);
        e.push(0);
        e.extend_from_slice(middle);
        e.push(0);
        BarTensor::new(e)
    }

    pub fn entries(&self) -> &[GroupIdx] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 2
    }

    pub fn first(&self) -> GroupIdx {
        self.0[0]
    }

    pub fn last(&self) -> GroupIdx {
        *self.0.last().unwrap()
    }

    pub fn middle(&self) -> &[GroupIdx] {
        &self.0[1..self.0.len() - 1]
    }
}

/// `g_l · t · g_r` (multiplies the outer entries).
pub fn translate(ring: &SkewRing, gl: GroupIdx, t: &BarTensor, gr: GroupIdx) -> BarTensor {
    let g = ring.group();
    let mut e = t.0.clone();
    let n = e.len();
    e[0] = g.mul(gl, e[0]);
    e[n - 1] = g.mul(e[n - 1], gr);
    BarTensor(e)
}

/// Product `g_0 g_1 ⋯ g_{i+1}`: the `G`-degree of the tensor.
pub fn grade(ring: &SkewRing, t: &BarTensor) -> GroupIdx {
    ring.group().mul_all(&t.0)
}

/// `μ_C(g_0 ⊗ g_1) = g_0 g_1`
pub fn augment(ring: &SkewRing, t: &BarTensor) -> Result<GroupIdx> {
    if t.degree() != 0 {
        return Err(Error::WrongDegree { expected: 0, found: t.degree() });
    }
    Ok(ring.group().mul(t.0[0], t.0[1]))
}

/// Bar differential `Σ_l (-1)^l g_0 ⊗ ... ⊗ g_l g_{l+1} ⊗ ... ⊗ g_{i+1}`; merged middle slots
/// equal to the identity drop out.
pub fn diff(ring: &SkewRing, t: &BarTensor) -> Result<ChainC> {
    let i = t.degree();
    if i == 0 {
        return Err(Error::DegreeTooLow(0));
    }
    let fp = ring.fp();
    let g = ring.group();
    let mut out = ChainC::zero();
    for l in 0..=i {
        let mut e = Vec::with_capacity(t.0.len() - 1);
        e.extend_from_slice(&t.0[..l]);
        e.push(g.mul(t.0[l], t.0[l + 1]));
        e.extend_from_slice(&t.0[l + 2..]);
        if let Some(bt) = BarTensor::new(e) {
            out.add_term(bt, fp.sign(l), fp);
        }
    }
    Ok(out)
}

pub fn diff_chain(ring: &SkewRing, c: &ChainC) -> Result<ChainC> {
    let mut out = ChainC::zero();
    for (t, k) in c.iter() {
        out.add_scaled(&diff(ring, t)?, k, ring.fp());
    }
    Ok(out)
}

/// Diagonal `Σ_j (g_0 ⊗ ... ⊗ g_j ⊗ 1) ⊗_{kG} (1 ⊗ g_{j+1} ⊗ ... ⊗ g_{i+1})`; all signs are `+`.
pub fn delta(t: &BarTensor) -> Vec<(BarTensor, BarTensor)> {
    let n = t.0.len();
    (0..n - 1)
        .map(|j| {
            let mut l = t.0[..=j].to_vec();
            l.push(0);
            let mut r = vec![0];
            r.extend_from_slice(&t.0[j + 1..]);
            (BarTensor(l), BarTensor(r))
        })
        .collect()
}

/// Homotopy on `C ⊗_{kG} C`:
/// `(a_0 ⊗ ... ⊗ a_p) ⊗ (a'_p ⊗ ... ⊗ a_{n+1}) ↦ (-1)^{p-1} a_0 ⊗ ... ⊗ a_p a'_p ⊗ ... ⊗ a_{n+1}`,
/// returned as `(sign exponent, tensor)`; `None` when the merged slot is the identity.
pub fn phi(ring: &SkewRing, left: &BarTensor, right: &BarTensor) -> Option<(usize, BarTensor)> {
    let g = ring.group();
    let p = left.0.len() - 1;
    let mut e = Vec::with_capacity(left.0.len() + right.0.len() - 1);
    e.extend_from_slice(&left.0[..p]);
    e.push(g.mul(left.0[p], right.0[0]));
    e.extend_from_slice(&right.0[1..]);
    BarTensor::new(e).map(|t| ((p + 1) % 2, t))
}

/// All bar tensors of degree `i` with outer entries ranging over `G` (a k-basis of `C_i`).
pub fn basis(ring: &SkewRing, i: usize) -> Vec<BarTensor> {
    let order = ring.group().order();
    let mut out = Vec::new();
    for mid in middles(order, i) {
        for g0 in 0..order {
            for ge in 0..order {
                let mut e = vec![g0];
                e.extend_from_slice(&mid);
                e.push(ge);
                out.push(BarTensor(e));
            }
        }
    }
    out
}

/// All tuples of `i` non-identity group elements, lexicographically.
pub fn middles(order: usize, i: usize) -> Vec<Vec<GroupIdx>> {
    let mut out = vec![Vec::new()];
    for _ in 0..i {
        let mut next = Vec::new();
        for m in &out {
            for g in 1..order {
                let mut m2 = m.clone();
                m2.push(g);
                next.push(m2);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::transvection;

    fn bt(e: &[usize]) -> BarTensor {
        BarTensor::new(e.to_vec()).unwrap()
    }

    #[test]
    fn differential_examples() {
        let r = transvection(3);
        let fp = *r.fp();
        // 1⊗g⊗1 ↦ g⊗1 − 1⊗g
        let d = diff(&r, &bt(&[0, 1, 0])).unwrap();
        let want = ChainC::from_terms([(bt(&[1, 0]), 1), (bt(&[0, 1]), fp.neg(1))], &fp);
        assert_eq!(d, want);
        // 1⊗g⊗g^{-1}⊗1: middle merge vanishes
        let d = diff(&r, &bt(&[0, 1, 2, 0])).unwrap();
        let want = ChainC::from_terms([(bt(&[1, 2, 0]), 1), (bt(&[0, 1, 2]), 1)], &fp);
        assert_eq!(d, want);
        // 1⊗g⊗g⊗1 ↦ g⊗g⊗1 − 1⊗g²⊗1 + 1⊗g⊗g
        let d = diff(&r, &bt(&[0, 1, 1, 0])).unwrap();
        let want = ChainC::from_terms(
            [(bt(&[1, 1, 0]), 1), (bt(&[0, 2, 0]), fp.neg(1)), (bt(&[0, 1, 1]), 1)],
            &fp,
        );
        assert_eq!(d, want);
        assert_eq!(diff(&r, &BarTensor::unit()), Err(Error::DegreeTooLow(0)));
    }

    #[test]
    fn augmentation_and_grading() {
        let r = transvection(3);
        assert_eq!(augment(&r, &BarTensor::unit()), Ok(0));
        assert_eq!(augment(&r, &bt(&[1, 1])), Ok(2));
        assert_eq!(augment(&r, &bt(&[1, 2])), Ok(0));
        assert!(augment(&r, &bt(&[0, 1, 0])).is_err());
        assert_eq!(grade(&r, &bt(&[0, 1, 0])), 1);
        assert_eq!(grade(&r, &bt(&[1, 1, 1])), 0);
        assert_eq!(grade(&r, &BarTensor::unit()), 0);
    }

    #[test]
    fn diagonal_examples() {
        let t = bt(&[0, 1, 1, 0]);
        assert_eq!(
            delta(&t),
            vec![
                (BarTensor::unit(), bt(&[0, 1, 1, 0])),
                (bt(&[0, 1, 0]), bt(&[0, 1, 0])),
                (bt(&[0, 1, 1, 0]), BarTensor::unit()),
            ]
        );
        assert_eq!(delta(&BarTensor::unit()), vec![(BarTensor::unit(), BarTensor::unit())]);
    }

    #[test]
    fn homotopy_examples() {
        let r = transvection(5);
        assert_eq!(phi(&r, &bt(&[0, 1]), &bt(&[0, 3, 0])), Some((0, bt(&[0, 1, 3, 0]))));
        assert_eq!(phi(&r, &BarTensor::unit(), &bt(&[0, 3, 0])), None);
        assert_eq!(phi(&r, &bt(&[0, 1, 2]), &bt(&[1, 0])), Some((1, bt(&[0, 1, 3, 0]))));
    }
}
