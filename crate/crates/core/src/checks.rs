//! Exhaustive and randomized verification of the identities the resolution and the bracket rely
//! on. Every check returns a [`CheckOutcome`] instead of panicking.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::linalg::{Echelon, SparseRow};
use crate::algebra::{GroupIdx, Lin, Monomial, SkewElem, SkewRing};
use crate::bracket::{self, Cochain};
use crate::resolutions::bar::{self, BarTensor, ChainC};
use crate::resolutions::koszul::{self, ChainD, KoszulTensor};
use crate::twisted::{ChainX, PairX, PreImage, TwistedResolution, XTensor};

const KEPT_FAILURES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), cases: 0, failures: 0, examples: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEPT_FAILURES {
                self.examples.push(detail());
            }
        }
    }
}

/// `(i, j)` with `lo ≤ i + j ≤ hi` and `j ≤ nvars`.
fn bidegrees(nvars: usize, lo: usize, hi: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in lo..=hi {
        for j in 0..=n.min(nvars) {
            out.push((n - j, j));
        }
    }
    out
}

/// Basis tensors of `X` with total degree in `[lo, hi]` and internal degree `≤ qmax`.
pub fn x_basis(res: &TwistedResolution, lo: usize, hi: usize, qmax: usize) -> Vec<XTensor> {
    let mut out = Vec::new();
    for (i, j) in bidegrees(res.ring().nvars(), lo, hi) {
        for q in j..=qmax {
            out.extend(res.basis(i, j, q));
        }
    }
    out
}

pub fn d_squared(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("diff_X squared is zero");
    for t in x_basis(res, 2, hmax, qmax) {
        let dd = res.diff(&t).and_then(|d| res.diff_chain(&d));
        out.case(matches!(&dd, Ok(z) if z.is_zero()), || format!("{t:?}"));
    }
    out
}

fn c_pair_diff(ring: &SkewRing, c: &BarTensor, c2: &BarTensor) -> Lin<(BarTensor, BarTensor)> {
    let fp = ring.fp();
    let mut out = Lin::zero();
    if c.degree() > 0 {
        for (t, k) in bar::diff(ring, c).unwrap().iter() {
            out.add_term((t.clone(), c2.clone()), k, fp);
        }
    }
    if c2.degree() > 0 {
        let s = fp.sign(c.degree());
        for (t, k) in bar::diff(ring, c2).unwrap().iter() {
            out.add_term((c.clone(), t.clone()), fp.mul(s, k), fp);
        }
    }
    out
}

fn phi_c_chain(ring: &SkewRing, x: &Lin<(BarTensor, BarTensor)>) -> ChainC {
    let fp = ring.fp();
    let mut out = ChainC::zero();
    for ((a, b), k) in x.iter() {
        if let Some((s, t)) = bar::phi(ring, a, b) {
            out.add_term(t, fp.mul(k, fp.sign(s)), fp);
        }
    }
    out
}

/// Basis of `C_i` with last entry the identity: representatives for `C ⊗_{kG} C`.
fn bar_left_basis(ring: &SkewRing, i: usize) -> Vec<BarTensor> {
    bar::basis(ring, i).into_iter().filter(|c| c.last() == 0).collect()
}

/// `∂φ_C + φ_C∂ = μ_C ⊗ 1 − 1 ⊗ μ_C` on `C ⊗_{kG} C` up to total degree `hmax`.
pub fn phi_c_homotopy(res: &TwistedResolution, hmax: usize) -> CheckOutcome {
    let ring = res.ring();
    let fp = ring.fp();
    let mut out = CheckOutcome::new("phi_C homotopy identity");
    for n in 0..=hmax {
        for i in 0..=n {
            for c in bar_left_basis(ring, i) {
                for c2 in bar::basis(ring, n - i) {
                    let pc = phi_c_chain(ring, &Lin::single((c.clone(), c2.clone()), 1));
                    let mut lhs = bar::diff_chain(ring, &pc).unwrap_or_default();
                    lhs.add_scaled(&phi_c_chain(ring, &c_pair_diff(ring, &c, &c2)), 1, fp);
                    let mut rhs = ChainC::zero();
                    if let Ok(g) = bar::augment(ring, &c) {
                        rhs.add_term(bar::translate(ring, g, &c2, 0), 1, fp);
                    }
                    if let Ok(g) = bar::augment(ring, &c2) {
                        rhs.add_term(bar::translate(ring, 0, &c, g), fp.neg(1), fp);
                    }
                    out.case(lhs == rhs, || format!("{c:?} ⊗ {c2:?}"));
                }
            }
        }
    }
    out
}

fn d_pair_diff(ring: &SkewRing, d: &KoszulTensor, d2: &KoszulTensor) -> Lin<(KoszulTensor, KoszulTensor)> {
    let fp = ring.fp();
    let mut out = Lin::zero();
    if d.degree() > 0 {
        for (t, k) in koszul::diff(ring, d).unwrap().iter() {
            out.add_term((t.clone(), d2.clone()), k, fp);
        }
    }
    if d2.degree() > 0 {
        let s = fp.sign(d.degree());
        for (t, k) in koszul::diff(ring, d2).unwrap().iter() {
            out.add_term((d.clone(), t.clone()), fp.mul(s, k), fp);
        }
    }
    out
}

/// Koszul tensors of degree `j`, internal degree `q`, right monomial 1.
fn koszul_left_basis(nvars: usize, j: usize, q: usize) -> Vec<KoszulTensor> {
    koszul::basis(nvars, j, q).into_iter().filter(|d| d.right.is_one()).collect()
}

/// `∂φ_D + φ_D∂ = μ_D ⊗ 1 − 1 ⊗ μ_D` on `D ⊗_S D`.
pub fn phi_d_homotopy(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let ring = res.ring();
    let fp = ring.fp();
    let nv = ring.nvars();
    let h = res.homotopy();
    let mut out = CheckOutcome::new("phi_D homotopy identity");
    for (j, l) in bidegrees(nv, 0, hmax).into_iter().filter(|&(j, _)| j <= nv) {
        for q in 0..=qmax {
            for q1 in j..=q {
                for d in koszul_left_basis(nv, j, q1) {
                    if q - q1 < l {
                        continue;
                    }
                    for d2 in koszul::basis(nv, l, q - q1) {
                        let pd = h.phi(ring, &d, &d2);
                        let mut lhs = koszul::diff_chain(ring, &pd).unwrap_or_default();
                        lhs.add_scaled(&h.phi_pairs(ring, &d_pair_diff(ring, &d, &d2)), 1, fp);
                        let mut rhs = ChainD::zero();
                        if let Ok(m) = koszul::augment(&d) {
                            rhs.add_term(d2.times_left(&m), 1, fp);
                        }
                        if let Ok(m) = koszul::augment(&d2) {
                            rhs.add_term(d.times_right(&m), fp.neg(1), fp);
                        }
                        out.case(lhs == rhs, || format!("{d:?} ⊗ {d2:?}"));
                    }
                }
            }
        }
    }
    out
}

/// Basis of `(C ⊗_{kG} C) ⊗ (D ⊗_S D)` (pre-image form) with total homological degree `≤ hmax`
/// and internal degree `≤ qmax`.
pub fn preimage_basis(res: &TwistedResolution, hmax: usize, qmax: usize) -> Vec<PreImage> {
    let ring = res.ring();
    let nv = ring.nvars();
    let mut dpairs: Vec<(KoszulTensor, KoszulTensor)> = Vec::new();
    for j in 0..=nv.min(hmax) {
        for l in 0..=nv.min(hmax - j) {
            for q in 0..=qmax {
                for q1 in j..=q {
                    if q - q1 < l {
                        continue;
                    }
                    for d in koszul_left_basis(nv, j, q1) {
                        for d2 in koszul::basis(nv, l, q - q1) {
                            dpairs.push((d.clone(), d2));
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for (d, d2) in &dpairs {
        let used = d.degree() + d2.degree();
        for i in 0..=hmax - used {
            for k in 0..=hmax - used - i {
                for c in bar_left_basis(ring, i) {
                    for c2 in bar::basis(ring, k) {
                        out.push((c.clone(), c2, d.clone(), d2.clone()));
                    }
                }
            }
        }
    }
    out
}

/// The Lemma 4.1 map `(c, c', d̃, d') ↦ (-1)^{jk} (c ⊗ ^g d̃) ⊗ (c' ⊗ d')`, `g = grade(c')`.
pub fn pair_from_preimage(res: &TwistedResolution, x: &PreImage) -> PairX {
    let ring = res.ring();
    let fp = ring.fp();
    let (c, c2, d, d2) = x;
    let g = bar::grade(ring, c2);
    let s = fp.sign(d.degree() * c2.degree());
    let mut out = PairX::zero();
    for (dt, k) in koszul::act(ring, g, d).iter() {
        out.add_term((XTensor::new(c.clone(), dt.clone()), XTensor::new(c2.clone(), d2.clone())), fp.mul(s, k), fp);
    }
    out
}

fn mu_difference(res: &TwistedResolution, x: &PairX) -> ChainX {
    let fp = res.ring().fp();
    let mut out = ChainX::zero();
    for ((u, w), k) in x.iter() {
        out.add_scaled(&res.mu_left(u, w), k, fp);
        out.add_scaled(&res.mu_right(u, w), fp.neg(k), fp);
    }
    out
}

/// `∂φ_X + φ_X∂ = μ_X ⊗ 1 − 1 ⊗ μ_X` on the pre-image basis.
pub fn phi_x_homotopy(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let fp = res.ring().fp();
    let mut out = CheckOutcome::new("phi_X homotopy identity");
    for pre in preimage_basis(res, hmax, qmax) {
        let x = pair_from_preimage(res, &pre);
        let px = res.phi(&x);
        let mut lhs = if px.is_zero() { ChainX::zero() } else { res.diff_chain(&px).unwrap_or_default() };
        lhs.add_scaled(&res.phi(&res.diff_pairs(&x)), 1, fp);
        let rhs = mu_difference(res, &x);
        out.case(lhs == rhs, || format!("{pre:?}"));
    }
    out
}

/// `μ_X ⊗ 1 − 1 ⊗ μ_X = (μ_C ⊗ 1 ⊗ μ_D ⊗ 1 − 1 ⊗ μ_C ⊗ 1 ⊗ μ_D)(1 ⊗ τ^{-1} ⊗ 1)`.
pub fn mux_identity(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let fp = res.ring().fp();
    let mut out = CheckOutcome::new("augmentation difference through tau inverse");
    for pre in preimage_basis(res, hmax, qmax) {
        let x = pair_from_preimage(res, &pre);
        let lhs = mu_difference(res, &x);
        let mut rhs = ChainX::zero();
        for ((u, w), k) in x.iter() {
            rhs.add_scaled(&res.mu_difference_preimage(&res.tau_inverse(u, w)), k, fp);
        }
        out.case(lhs == rhs, || format!("{pre:?}"));
    }
    out
}

/// `Δ∂ = (∂ ⊗ 1 + (-1)^{|u|} 1 ⊗ ∂)Δ`, compared in `X ⊗_A X`.
pub fn delta_chain_map(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let fp = res.ring().fp();
    let mut out = CheckOutcome::new("diagonal is a chain map");
    for t in x_basis(res, 1, hmax, qmax) {
        let mut lhs = PairX::zero();
        for (s, k) in res.diff(&t).unwrap().iter() {
            lhs.add_scaled(&res.delta(s), k, fp);
        }
        let rhs = res.diff_pairs(&res.delta(&t));
        out.case(res.normalize_pairs(&lhs) == res.normalize_pairs(&rhs), || format!("{t:?}"));
    }
    out
}

pub fn coassociativity(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("diagonal is coassociative");
    for t in x_basis(res, 0, hmax, qmax) {
        let a = res.normalize_triples(&res.delta2(&t));
        let b = res.normalize_triples(&res.delta2_right(&t));
        out.case(a == b, || format!("{t:?}"));
    }
    out
}

pub fn counit(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let fp = res.ring().fp();
    let mut out = CheckOutcome::new("diagonal is counital");
    for t in x_basis(res, 0, hmax, qmax) {
        let d = res.delta(&t);
        let mut left = ChainX::zero();
        let mut right = ChainX::zero();
        for ((u, w), k) in d.iter() {
            left.add_scaled(&res.mu_left(u, w), k, fp);
            right.add_scaled(&res.mu_right(u, w), k, fp);
        }
        let id = ChainX::single(t.clone(), 1);
        out.case(left == id && right == id, || format!("{t:?}"));
    }
    out
}

pub fn decompose_round_trip(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let fp = res.ring().fp();
    let nv = res.ring().nvars();
    let mut out = CheckOutcome::new("free generator decomposition round trip");
    for t in x_basis(res, 0, hmax, qmax) {
        let mut back = ChainX::zero();
        for term in res.decompose(&t) {
            back.add_scaled(&res.act(&term.left, &term.generator.tensor(nv), &term.right), term.coeff, fp);
        }
        out.case(back == ChainX::single(t.clone(), 1), || format!("{t:?}"));
    }
    out
}

/// A random element of `A` with up to three terms of polynomial degree `≤ max_deg`.
pub fn random_skew(ring: &SkewRing, max_deg: usize, rng: &mut impl Rng) -> SkewElem {
    let fp = ring.fp();
    let mut out = SkewElem::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let deg = rng.gen_range(0..=max_deg);
        let monos = Monomial::all_of_degree(ring.nvars(), deg);
        let m = monos[rng.gen_range(0..monos.len())].clone();
        let g: GroupIdx = rng.gen_range(0..ring.group().order());
        out.add_term(m, g, rng.gen_range(1..fp.p() as u32), fp);
    }
    out
}

fn random_tensor(res: &TwistedResolution, hmax: usize, rng: &mut impl Rng) -> XTensor {
    let n = rng.gen_range(0..=hmax);
    let nv = res.ring().nvars();
    let j = rng.gen_range(0..=n.min(nv));
    let q = j + rng.gen_range(0..=2);
    let b = res.basis(n - j, j, q);
    b[rng.gen_range(0..b.len())].clone()
}

/// `a·(b·t·c)·d = (ab)·t·(cd)`, `∂` commutes with the action, `φ_X` is balanced, left
/// `A`-linear and right `S`-linear, on random inputs.
pub fn bimodule_laws(res: &TwistedResolution, hmax: usize, trials: usize, rng: &mut impl Rng) -> Vec<CheckOutcome> {
    let ring = res.ring();
    let one = ring.one();
    let mut assoc = CheckOutcome::new("bimodule action is associative");
    let mut diff = CheckOutcome::new("diff_X is a bimodule map");
    let mut balanced = CheckOutcome::new("phi_X is balanced over A");
    let mut linear = CheckOutcome::new("phi_X is left A-linear and right S-linear");
    for _ in 0..trials {
        let t = random_tensor(res, hmax, rng);
        let [a, b, c, d] = [0; 4].map(|_| random_skew(ring, 1, rng));
        let lhs = res.act_chain(&a, &res.act(&b, &t, &c), &d);
        let rhs = res.act(&ring.mul(&a, &b), &t, &ring.mul(&c, &d));
        assoc.case(lhs == rhs, || format!("{t:?}"));
        if t.degree() > 0 {
            let lhs = res.diff_chain(&res.act(&a, &t, &d)).unwrap();
            let rhs = res.act_chain(&a, &res.diff(&t).unwrap(), &d);
            diff.case(lhs == rhs, || format!("{t:?}"));
        }
        let w = random_tensor(res, hmax.saturating_sub(t.degree()), rng);
        let fp = ring.fp();
        let mut left = PairX::zero();
        for (u2, k) in res.act(&one, &t, &b).iter() {
            left.add_term((u2.clone(), w.clone()), k, fp);
        }
        let mut right = PairX::zero();
        for (w2, k) in res.act(&b, &w, &one).iter() {
            right.add_term((t.clone(), w2.clone()), k, fp);
        }
        balanced.case(res.phi(&left) == res.phi(&right), || format!("{t:?} | {w:?}"));
        let d = SkewElem::from_part(d.component(0).cloned().unwrap_or_else(|| ring.one_poly()), 0);
        let mut outer = PairX::zero();
        for (u2, k) in res.act(&a, &t, &one).iter() {
            for (w2, k2) in res.act(&one, &w, &d).iter() {
                outer.add_term((u2.clone(), w2.clone()), fp.mul(k, k2), fp);
            }
        }
        let lhs = res.phi(&outer);
        let rhs = res.act_chain(&a, &res.phi_pair(&t, &w), &d);
        linear.case(lhs == rhs, || format!("{t:?} | {w:?}"));
    }
    vec![assoc, diff, balanced, linear]
}

/// `f(a·t·b) = a f(t) b` for random cochains.
pub fn cochain_linearity(res: &TwistedResolution, trials: usize, rng: &mut impl Rng) -> CheckOutcome {
    let ring = res.ring();
    let mut out = CheckOutcome::new("cochains extend to bimodule maps");
    for _ in 0..trials {
        let n = rng.gen_range(0..=2);
        let d = rng.gen_range(-1..=1);
        let f = Cochain::random(res, n, d, rng);
        let j = rng.gen_range(0..=n.min(ring.nvars()));
        let q = j + rng.gen_range(0..=2);
        let b = res.basis(n - j, j, q);
        let t = b[rng.gen_range(0..b.len())].clone();
        let (a, c) = (random_skew(ring, 1, rng), random_skew(ring, 1, rng));
        let lhs = bracket::eval_chain(res, &f, &res.act(&a, &t, &c));
        let rhs = ring.mul(&ring.mul(&a, &bracket::eval(res, &f, &t)), &c);
        out.case(lhs == rhs, || format!("{t:?}"));
    }
    out
}

/// `∂*∂* = 0` on random homogeneous cochains of degree 1 and 2, internal degrees −2..=2.
pub fn coboundary_squared(res: &TwistedResolution, trials: usize, rng: &mut impl Rng) -> CheckOutcome {
    let mut out = CheckOutcome::new("coboundary squared is zero");
    for _ in 0..trials {
        let n = rng.gen_range(1..=2);
        let d = rng.gen_range(-2..=2);
        let f = Cochain::random(res, n, d, rng);
        let dd = bracket::coboundary(res, &bracket::coboundary(res, &f));
        out.case(dd.is_zero(), || format!("degree {n}, internal degree {d}"));
    }
    out
}

/// Antisymmetry, closure on cocycles, internal-degree additivity and independence of the
/// contraction order, over all ordered pairs of the given cochains.
pub fn bracket_laws(res: &TwistedResolution, cochains: &[(String, Cochain)]) -> Vec<CheckOutcome> {
    let fp = res.ring().fp();
    let other = res.with_reversed_order();
    let mut anti = CheckOutcome::new("bracket is graded antisymmetric");
    let mut closed = CheckOutcome::new("bracket of cocycles is a cocycle");
    let mut degree = CheckOutcome::new("bracket adds internal degrees");
    let mut robust = CheckOutcome::new("bracket class is independent of the contraction order");
    let cocycle: Vec<bool> = cochains.iter().map(|(_, f)| bracket::is_cocycle(res, f)).collect();
    for (a, (na, f)) in cochains.iter().enumerate() {
        for (b, (nb, g)) in cochains.iter().enumerate() {
            if f.degree() + g.degree() == 0 {
                continue;
            }
            let fg = bracket::bracket(res, f, g).unwrap();
            let gf = bracket::bracket(res, g, f).unwrap();
            let sign = fp.sign((f.degree() + 1) * (g.degree() + 1));
            let mut sum = fg.clone();
            sum.add_scaled(&gf, sign, fp).unwrap();
            anti.case(sum.is_zero(), || format!("[{na},{nb}]"));
            if let (Some(d1), Some(d2)) = (f.internal_degree(), g.internal_degree()) {
                degree.case(fg.is_homogeneous_of(d1 + d2), || format!("[{na},{nb}]"));
            }
            if cocycle[a] && cocycle[b] {
                closed.case(bracket::is_cocycle(res, &fg), || format!("[{na},{nb}]"));
                let alt = bracket::bracket(&other, f, g).unwrap();
                let same = bracket::class_equal(res, &fg, &alt).map(|c| c.equal).unwrap_or(false);
                robust.case(same, || format!("[{na},{nb}]"));
            }
        }
    }
    vec![anti, closed, degree, robust]
}

/// Block key for rank computations: total group degree and multidegree of the Koszul part.
fn block_key(res: &TwistedResolution, t: &XTensor) -> (GroupIdx, Vec<u16>) {
    let mut md: Vec<u16> = t.d.left.0.iter().zip(&t.d.right.0).map(|(a, b)| a + b).collect();
    for i in t.d.wedge.indices() {
        md[i] += 1;
    }
    (bar::grade(res.ring(), &t.c), md)
}

/// Rank of `∂_n` restricted to internal degree `q`.
pub fn diff_rank(res: &TwistedResolution, n: usize, q: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let fp = *res.ring().fp();
    let mut blocks: HashMap<(GroupIdx, Vec<u16>), (Echelon, HashMap<XTensor, usize>)> = HashMap::new();
    for (i, j) in bidegrees(res.ring().nvars(), n, n) {
        for t in res.basis(i, j, q) {
            let d = res.diff(&t).expect("positive degree");
            if d.is_zero() {
                continue;
            }
            let key = block_key(res, &t);
            let (ech, cols) = blocks.entry(key).or_insert_with(|| (Echelon::new(fp), HashMap::new()));
            let row: SparseRow = d
                .iter()
                .map(|(s, k)| {
                    let next = cols.len();
                    (*cols.entry(s.clone()).or_insert(next), k)
                })
                .collect();
            ech.insert(row);
        }
    }
    blocks.values().map(|(e, _)| e.rank()).sum()
}

pub fn dimension(res: &TwistedResolution, n: usize, q: usize) -> usize {
    bidegrees(res.ring().nvars(), n, n).into_iter().map(|(i, j)| res.basis(i, j, q).len()).sum()
}

/// `dim H_n = dim X_n − rank ∂_n − rank ∂_{n+1}` vanishes for `1 ≤ n ≤ hmax`, `q ≤ qmax`.
pub fn exactness(res: &TwistedResolution, hmax: usize, qmax: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("X is exact in positive degrees");
    for q in 0..=qmax {
        let mut ranks = vec![0; hmax + 2];
        for (n, r) in ranks.iter_mut().enumerate().skip(1) {
            *r = diff_rank(res, n, q);
        }
        for n in 1..=hmax {
            let dim = dimension(res, n, q);
            let h = dim - ranks[n] - ranks[n + 1];
            out.case(h == 0, || format!("H_{n} in internal degree {q} has dimension {h}"));
        }
    }
    out
}

/// `dim H_0 = dim A` in internal degree `q` (the cokernel of `∂_1` is `A`).
pub fn augmentation_cokernel(res: &TwistedResolution, qmax: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("X resolves A in degree zero");
    let ring = res.ring();
    for q in 0..=qmax {
        let dim = dimension(res, 0, q) - diff_rank(res, 1, q);
        let want = ring.group().order() * Monomial::all_of_degree(ring.nvars(), q).len();
        out.case(dim == want, || format!("internal degree {q}: {dim} vs {want}"));
    }
    out
}
