//! The transvection example: `G = ⟨g⟩` with `g = [[1,1],[0,1]]` acting on `V = span(v, w)` over `F_p`.

use crate::algebra::{Monomial, Poly, SkewElem, SkewRing, Wedge};
use crate::bracket::Cochain;
use crate::error::{Error, Result};
use crate::session::{build_ring, Session};
use crate::twisted::Generator;

pub const MAX_DEMO_PRIME: u64 = 31;

pub const V: usize = 0;
pub const W: usize = 1;

pub fn transvection_ring(p: u64) -> Result<SkewRing> {
    if !crate::algebra::field::is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    if p > MAX_DEMO_PRIME {
        return Err(Error::Validation(format!("demo prime {p} exceeds the cap {MAX_DEMO_PRIME}")));
    }
    build_ring(p, &["v".to_string(), "w".to_string()], &[vec![vec![1, 1], vec![0, 1]]])
}

/// `g^i` as a group index.
pub fn power(ring: &SkewRing, i: usize) -> usize {
    let g = ring.group().eval_word(&[0]).expect("one generator");
    ring.group().pow(g, i)
}

/// `λ((1⊗g^i⊗1)⊗(1⊗w⊗1)) = i·g^{i-1}`, zero on the `v` generators.
pub fn lambda(ring: &SkewRing) -> Cochain {
    let fp = ring.fp();
    let p = fp.p() as usize;
    let mut f = Cochain::zero(2);
    for i in 1..p {
        let e = Generator::new(vec![power(ring, i)], Wedge::from_indices(&[W]).unwrap());
        let value = SkewElem::group(power(ring, i - 1), ring.nvars()).scaled(fp.from_i64(i as i64), fp);
        f.set(e, value).expect("degree 2");
    }
    f
}

/// `κ((1⊗1)⊗(1⊗v∧w⊗1)) = g`
pub fn kappa(ring: &SkewRing) -> Cochain {
    let e = Generator::new(Vec::new(), Wedge::from_indices(&[V, W]).unwrap());
    Cochain::zero(2).with(e, SkewElem::group(power(ring, 1), ring.nvars())).expect("degree 2")
}

/// `δ((1⊗1)⊗(1⊗v⊗1)) = v`, `δ((1⊗1)⊗(1⊗w⊗1)) = 0`
pub fn delta(ring: &SkewRing) -> Cochain {
    let e = Generator::new(Vec::new(), Wedge::from_indices(&[V]).unwrap());
    let v = SkewElem::from_part(Poly::monomial(Monomial::one(ring.nvars()).times_var(V)), 0);
    Cochain::zero(1).with(e, v).expect("degree 1")
}

pub const LAMBDA_INTERNAL: i64 = -1;
pub const KAPPA_INTERNAL: i64 = -2;
pub const DELTA_INTERNAL: i64 = 0;

/// Session with cochains `lambda`, `kappa` and `delta`.
pub fn transvection_session(p: u64) -> Result<Session> {
    let ring = transvection_ring(p)?;
    let (l, k, d) = (lambda(&ring), kappa(&ring), delta(&ring));
    let mut s = Session::new(ring);
    s.insert("lambda", l, Some(LAMBDA_INTERNAL));
    s.insert("kappa", k, Some(KAPPA_INTERNAL));
    s.insert("delta", d, Some(DELTA_INTERNAL));
    Ok(s)
}
