use std::collections::BTreeMap;

use crate::algebra::linalg::{Echelon, SparseRow, RHS};
use crate::algebra::{GroupIdx, Monomial, SkewElem};
use crate::error::{Error, Result};
use crate::twisted::{Generator, TwistedResolution};

use super::cochain::value_basis;
use super::ops::{coboundary, decompose_chain};
use super::Cochain;

/// Outcome of [`solve_coboundary`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoboundarySolution {
    /// `∂*witness` equals the input exactly.
    Witness(Cochain),
    /// The linear system is inconsistent.
    NotACoboundary { unknowns: usize, equations: usize, rank: usize },
}

impl CoboundarySolution {
    pub fn witness(&self) -> Option<&Cochain> {
        match self {
            CoboundarySolution::Witness(w) => Some(w),
            CoboundarySolution::NotACoboundary { .. } => None,
        }
    }

    pub fn is_coboundary(&self) -> bool {
        self.witness().is_some()
    }
}

type Unknown = (Generator, GroupIdx, Monomial);

/// Basis of the candidate `(n-1)`-cochains of internal degree `d`, sorted.
pub fn unknowns(res: &TwistedResolution, n: usize, d: i64) -> Vec<Unknown> {
    let mut out = Vec::new();
    for e in res.generators(n) {
        for (g, m) in value_basis(res.ring(), e.wedge.len(), d) {
            out.push((e.clone(), g, m));
        }
    }
    out
}

/// Finds `η` of degree `n-1` and internal degree `d` with `∂*η = z`, or certifies that none exists.
pub fn solve_coboundary(res: &TwistedResolution, z: &Cochain, d: i64) -> Result<CoboundarySolution> {
    let n = z.degree();
    if n == 0 {
        return Err(Error::DegreeTooLow(0));
    }
    if !z.is_homogeneous_of(d) {
        return Err(Error::InhomogeneousInput(d));
    }
    let ring = res.ring();
    let fp = *ring.fp();
    let unknown_list = unknowns(res, n - 1, d);
    let mut by_generator: BTreeMap<&Generator, Vec<usize>> = BTreeMap::new();
    for (i, (e, _, _)) in unknown_list.iter().enumerate() {
        by_generator.entry(e).or_default().push(i);
    }

    let mut ech = Echelon::new(fp);
    let mut equations = 0;
    for e in res.generators(n) {
        let t = e.tensor(ring.nvars());
        let terms = decompose_chain(res, &res.diff(&t)?);
        // rows keyed by the (group, monomial) coordinate of (∂*η)(e)
        let mut rows: BTreeMap<(GroupIdx, Monomial), SparseRow> = BTreeMap::new();
        for term in &terms {
            let Some(cols) = by_generator.get(&term.generator) else { continue };
            for &col in cols {
                let (_, g, m) = &unknown_list[col];
                let basis_val = SkewElem::from_part(crate::algebra::Poly::monomial(m.clone()), *g);
                let x = ring.mul(&ring.mul(&term.left, &basis_val), &term.right);
                for (h, mono, c) in x.flat() {
                    rows.entry((h, mono.clone())).or_default().push((col, fp.mul(c, term.coeff)));
                }
            }
        }
        if let Some(v) = z.get(&e) {
            for (h, mono, c) in v.flat() {
                rows.entry((h, mono.clone())).or_default().push((RHS, c));
            }
        }
        for (_, row) in rows {
            equations += 1;
            ech.insert(row);
        }
    }

    let Some(sol) = ech.solution() else {
        return Ok(CoboundarySolution::NotACoboundary {
            unknowns: unknown_list.len(),
            equations,
            rank: ech.rank(),
        });
    };
    let mut witness = Cochain::zero(n - 1);
    let mut values: BTreeMap<Generator, SkewElem> = BTreeMap::new();
    for (col, c) in sol {
        let (e, g, m) = &unknown_list[col];
        values.entry(e.clone()).or_default().add_term(m.clone(), *g, c, &fp);
    }
    for (e, v) in values {
        witness.set(e, v)?;
    }
    if coboundary(res, &witness) != *z {
        return Err(Error::Validation("coboundary witness failed re-substitution".into()));
    }
    Ok(CoboundarySolution::Witness(witness))
}

/// Class comparison result: `witness` satisfies `∂*witness = z1 − z2` when `equal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassComparison {
    pub equal: bool,
    pub witness: Option<Cochain>,
    /// Internal degrees in which `z1 − z2` failed to be a coboundary.
    pub obstructions: Vec<i64>,
}

/// Solves `z = ∂*η` one internal degree at a time.
pub fn solve_any(res: &TwistedResolution, z: &Cochain) -> Result<ClassComparison> {
    let fp = *res.ring().fp();
    if z.degree() == 0 {
        return Ok(ClassComparison { equal: z.is_zero(), witness: None, obstructions: Vec::new() });
    }
    let mut witness = Cochain::zero(z.degree() - 1);
    let mut obstructions = Vec::new();
    for d in z.internal_degrees() {
        match solve_coboundary(res, &z.component(d, &fp), d)? {
            CoboundarySolution::Witness(w) => witness.add_scaled(&w, 1, &fp)?,
            CoboundarySolution::NotACoboundary { .. } => obstructions.push(d),
        }
    }
    let equal = obstructions.is_empty();
    Ok(ClassComparison { equal, witness: equal.then_some(witness), obstructions })
}

pub fn class_equal(res: &TwistedResolution, z1: &Cochain, z2: &Cochain) -> Result<ClassComparison> {
    if z1.degree() != z2.degree() {
        return Err(Error::DegreeMismatch(z1.degree(), z2.degree()));
    }
    solve_any(res, &z1.sub(z2, res.ring().fp())?)
}
