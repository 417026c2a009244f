use crate::algebra::{SkewElem, Wedge};
use crate::error::{Error, Result};
use crate::twisted::{ChainX, GeneratorTerm, PairX, TwistedResolution, XTensor};

use super::Cochain;

/// `f(t)` for the bimodule extension of `f`; zero when degrees differ.
pub fn eval(res: &TwistedResolution, f: &Cochain, t: &XTensor) -> SkewElem {
    if t.degree() != f.degree() {
        return SkewElem::zero();
    }
    eval_terms(res, f, &res.decompose(t))
}

pub fn eval_terms(res: &TwistedResolution, f: &Cochain, terms: &[GeneratorTerm]) -> SkewElem {
    let ring = res.ring();
    let fp = ring.fp();
    let mut out = SkewElem::zero();
    for term in terms {
        if let Some(v) = f.get(&term.generator) {
            let x = ring.mul(&ring.mul(&term.left, v), &term.right);
            out.add_scaled(&x, term.coeff, fp);
        }
    }
    out
}

pub fn eval_chain(res: &TwistedResolution, f: &Cochain, x: &ChainX) -> SkewElem {
    let fp = res.ring().fp();
    let mut out = SkewElem::zero();
    for (t, k) in x.iter() {
        out.add_scaled(&eval(res, f, t), k, fp);
    }
    out
}

/// Free-generator expansion of a chain, coefficients folded into each term.
pub fn decompose_chain(res: &TwistedResolution, x: &ChainX) -> Vec<GeneratorTerm> {
    let fp = res.ring().fp();
    let mut out = Vec::new();
    for (t, k) in x.iter() {
        for mut term in res.decompose(t) {
            term.coeff = fp.mul(term.coeff, k);
            out.push(term);
        }
    }
    out
}

/// `∂*f = f ∘ ∂`
pub fn coboundary(res: &TwistedResolution, f: &Cochain) -> Cochain {
    let n = f.degree() + 1;
    let mut out = Cochain::zero(n);
    if f.is_zero() {
        return out;
    }
    for e in res.generators(n) {
        let d = res.diff(&e.tensor(res.ring().nvars())).expect("positive degree");
        let v = eval_chain(res, f, &d);
        out.set(e, v).expect("generator of degree n");
    }
    out
}

pub fn is_cocycle(res: &TwistedResolution, f: &Cochain) -> bool {
    coboundary(res, f).is_zero()
}

/// `f ∘ f2 = f ∘ φ_X ∘ (1 ⊗ f2 ⊗ 1) ∘ Δ^{(2)}`, with `(1⊗f2⊗1)(x⊗y⊗z) = (-1)^{|x|m} x⊗f2(y)⊗z`.
pub fn circle(res: &TwistedResolution, f: &Cochain, f2: &Cochain) -> Result<Cochain> {
    let (n, m) = (f.degree(), f2.degree());
    if n + m == 0 {
        return Err(Error::DegreeTooLow(0));
    }
    let target = n + m - 1;
    let mut out = Cochain::zero(target);
    if f.is_zero() || f2.is_zero() {
        return Ok(out);
    }
    for e in res.generators(target) {
        let v = circle_on(res, f, f2, &e.tensor(res.ring().nvars()));
        out.set(e, v).expect("generator of the target degree");
    }
    Ok(out)
}

/// `(f ∘ f2)(t)` for a single basis tensor.
pub fn circle_on(res: &TwistedResolution, f: &Cochain, f2: &Cochain, t: &XTensor) -> SkewElem {
    let ring = res.ring();
    let fp = ring.fp();
    let m = f2.degree();
    let one = ring.one();
    let mut pairs = PairX::zero();
    for ((u, v, w), k) in res.delta2(t).iter() {
        if v.degree() != m {
            continue;
        }
        let a = eval(res, f2, v);
        if a.is_zero() {
            continue;
        }
        let s = fp.mul(k, fp.sign(u.degree() * m));
        for (w2, kw) in res.act(&a, w, &one).iter() {
            pairs.add_term((u.clone(), w2.clone()), fp.mul(s, kw), fp);
        }
    }
    eval_chain(res, f, &res.phi(&pairs))
}

/// `[f, f2] = f ∘ f2 − (-1)^{(n-1)(m-1)} f2 ∘ f`
pub fn bracket(res: &TwistedResolution, f: &Cochain, f2: &Cochain) -> Result<Cochain> {
    let fp = res.ring().fp();
    let (n, m) = (f.degree(), f2.degree());
    let mut out = circle(res, f, f2)?;
    let sign = fp.sign((n + 1) * (m + 1));
    out.add_scaled(&circle(res, f2, f)?, fp.neg(sign), fp)?;
    Ok(out)
}

/// `(f ⌣ f2)(e) = Σ (-1)^{m|u|} f(u) f2(w)` over `Δ_X(e) = Σ u ⊗ w`.
pub fn cup(res: &TwistedResolution, f: &Cochain, f2: &Cochain) -> Cochain {
    let ring = res.ring();
    let fp = ring.fp();
    let (n, m) = (f.degree(), f2.degree());
    let mut out = Cochain::zero(n + m);
    if f.is_zero() || f2.is_zero() {
        return out;
    }
    for e in res.generators(n + m) {
        let mut val = SkewElem::zero();
        for ((u, w), k) in res.delta(&e.tensor(ring.nvars())).iter() {
            if u.degree() != n {
                continue;
            }
            let a = eval(res, f, u);
            if a.is_zero() {
                continue;
            }
            let b = eval(res, f2, w);
            val.add_scaled(&ring.mul(&a, &b), fp.mul(k, fp.sign(m * n)), fp);
        }
        out.set(e, val).expect("generator of degree n+m");
    }
    out
}

/// The 0-cochain with value 1 on `(1⊗1)⊗(1⊗1)`.
pub fn unit_cochain(res: &TwistedResolution) -> Cochain {
    Cochain::zero(0)
        .with(crate::twisted::Generator::new(Vec::new(), Wedge::EMPTY), res.ring().one())
        .expect("degree zero")
}
