//! Sparse Gaussian elimination over `F_p`.
//!
//! Rows are kept in echelon form keyed by leading column, with leading coefficient 1. Columns are
//! compared as `usize`, so pivot choice follows the caller's column numbering.

use std::collections::BTreeMap;

use super::Fp;

pub type SparseRow = Vec<(usize, u32)>;

/// Column index reserved for the right-hand side of an augmented system.
pub const RHS: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct Echelon {
    fp: Fp,
    pivots: BTreeMap<usize, SparseRow>,
}

fn normalize(mut row: SparseRow, fp: &Fp) -> SparseRow {
    row.sort_unstable_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = fp.add(last.1, v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// `a - k·b` for sorted sparse rows.
fn sub_scaled(a: &[(usize, u32)], k: u32, b: &[(usize, u32)], fp: &Fp) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, fp.neg(fp.mul(k, b[j].1))));
            j += 1;
        } else {
            let v = fp.sub(a[i].1, fp.mul(k, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new(fp: Fp) -> Self {
        Echelon { fp, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the pivots; returns the leading column it was stored under, if any.
    pub fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let fp = self.fp;
        let mut row = normalize(row, &fp);
        while let Some(&(c, v)) = row.first() {
            match self.pivots.get(&c) {
                Some(p) => row = sub_scaled(&row, v, p, &fp),
                None => {
                    let inv = fp.inv(v);
                    for e in row.iter_mut() {
                        e.1 = fp.mul(e.1, inv);
                    }
                    self.pivots.insert(c, row);
                    return Some(c);
                }
            }
        }
        None
    }

    /// True when some reduced row is `0 = nonzero`.
    pub fn inconsistent(&self) -> bool {
        self.pivots.contains_key(&RHS)
    }

    /// A solution of the augmented system with all free unknowns set to zero.
    pub fn solution(&self) -> Option<BTreeMap<usize, u32>> {
        if self.inconsistent() {
            return None;
        }
        let fp = self.fp;
        let mut x: BTreeMap<usize, u32> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut val = 0;
            for &(k, a) in &row[1..] {
                if k == RHS {
                    val = fp.add(val, a);
                } else if let Some(&xk) = x.get(&k) {
                    val = fp.sub(val, fp.mul(a, xk));
                }
            }
            if val != 0 {
                x.insert(c, val);
            }
        }
        Some(x)
    }
}

/// Rank of a sparse matrix given by rows.
pub fn rank(fp: Fp, rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new(fp);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let fp = Fp::new(3).unwrap();
        assert_eq!(rank(fp, vec![vec![(0, 1), (1, 1)], vec![(0, 2), (1, 2)]]), 1);
        assert_eq!(rank(fp, vec![vec![(0, 1)], vec![(1, 1)], vec![(0, 1), (1, 1)]]), 2);
        assert_eq!(rank(fp, Vec::<SparseRow>::new()), 0);
    }

    #[test]
    fn solves_consistent_systems() {
        let fp = Fp::new(5).unwrap();
        let mut e = Echelon::new(fp);
        // x0 + 2 x1 = 3, x1 + x2 = 1, x0 + 3 x1 + x2 = 4
        e.insert(vec![(0, 1), (1, 2), (RHS, 3)]);
        e.insert(vec![(1, 1), (2, 1), (RHS, 1)]);
        e.insert(vec![(0, 1), (1, 3), (2, 1), (RHS, 4)]);
        let x = e.solution().unwrap();
        let get = |k| x.get(&k).copied().unwrap_or(0);
        assert_eq!(fp.add(get(0), fp.mul(2, get(1))), 3);
        assert_eq!(fp.add(get(1), get(2)), 1);
    }

    #[test]
    fn detects_inconsistency() {
        let fp = Fp::new(3).unwrap();
        let mut e = Echelon::new(fp);
        e.insert(vec![(0, 1), (RHS, 1)]);
        e.insert(vec![(0, 2), (RHS, 1)]);
        assert!(e.inconsistent());
        assert!(e.solution().is_none());
    }
}
