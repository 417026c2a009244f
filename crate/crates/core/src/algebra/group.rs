use std::collections::{HashMap, VecDeque};

use super::field::Fp;
use crate::error::{Error, Result};

pub const DEFAULT_GROUP_CAP: usize = 100_000;
const TABLE_LIMIT: usize = 1024;

/// Index of an element in a [`FiniteMatrixGroup`]. Index 0 is always the identity.
pub type GroupIdx = usize;

/// Square matrix over F_p, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    pub n: usize,
    pub entries: Vec<u32>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>], fp: &Fp) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadShape { expected: n });
        }
        let entries = rows.iter().flatten().map(|&x| fp.from_i64(x)).collect();
        Ok(Matrix { n, entries })
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.n + c]
    }

    pub fn mul(&self, other: &Matrix, fp: &Fp) -> Matrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = fp.add(*e, fp.mul(a, other.get(k, j)));
                }
            }
        }
        Matrix { n, entries }
    }

    /// Inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self, fp: &Fp) -> Option<Matrix> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Matrix::identity(n).entries;
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * n + col] != 0)?;
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
            }
            let s = fp.inv(a[col * n + col]);
            for j in 0..n {
                a[col * n + j] = fp.mul(a[col * n + j], s);
                inv[col * n + j] = fp.mul(inv[col * n + j], s);
            }
            for r in 0..n {
                let f = a[r * n + col];
                if r == col || f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = fp.sub(a[r * n + j], fp.mul(f, a[col * n + j]));
                    inv[r * n + j] = fp.sub(inv[r * n + j], fp.mul(f, inv[col * n + j]));
                }
            }
        }
        Some(Matrix { n, entries: inv })
    }

    pub fn rows(&self, fp: &Fp) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| fp.to_signed(self.get(r, c))).collect())
            .collect()
    }
}

/// A finite group of invertible matrices, closed and indexed once at construction.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    fp: Fp,
    dim: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    words: Vec<Vec<usize>>,
    index: HashMap<Matrix, GroupIdx>,
    inverses: Vec<GroupIdx>,
    table: Option<Vec<u32>>,
}

impl FiniteMatrixGroup {
    /// Closure of `generators` under multiplication. Elements are listed breadth-first from
    /// the identity, multiplying on the right by the generators in input order.
    pub fn generate(fp: Fp, dim: usize, generators: Vec<Matrix>, cap: usize) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.n != dim {
                return Err(Error::BadShape { expected: dim });
            }
            if g.inverse(&fp).is_none() {
                return Err(Error::NonInvertibleGenerator(i));
            }
        }
        let id = Matrix::identity(dim);
        let mut elements = vec![id.clone()];
        let mut words = vec![Vec::new()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, g) in generators.iter().enumerate() {
                let y = elements[x].mul(g, &fp);
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                let mut w = words[x].clone();
                w.push(gi);
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
                words.push(w);
            }
        }
        let inverses = elements
            .iter()
            .map(|m| index[&m.inverse(&fp).expect("group elements are invertible")])
            .collect();
        let mut group = FiniteMatrixGroup {
            fp,
            dim,
            generators,
            elements,
            words,
            index,
            inverses,
            table: None,
        };
        let order = group.order();
        if order <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    table.push(group.mul_slow(a, b) as u32);
                }
            }
            group.table = Some(table);
        }
        Ok(group)
    }

    fn mul_slow(&self, a: GroupIdx, b: GroupIdx) -> GroupIdx {
        self.index[&self.elements[a].mul(&self.elements[b], &self.fp)]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> GroupIdx {
        0
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn matrix(&self, g: GroupIdx) -> &Matrix {
        &self.elements[g]
    }

    /// A shortest word in the generators representing `g`.
    pub fn word(&self, g: GroupIdx) -> &[usize] {
        &self.words[g]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<GroupIdx> {
        self.index.get(m).copied()
    }

    /// Evaluate a word in the generators; `None` if a letter is out of range.
    pub fn eval_word(&self, word: &[usize]) -> Option<GroupIdx> {
        let mut m = Matrix::identity(self.dim);
        for &l in word {
            m = m.mul(self.generators.get(l)?, &self.fp);
        }
        self.index_of(&m)
    }

    #[inline]
    pub fn mul(&self, a: GroupIdx, b: GroupIdx) -> GroupIdx {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    pub fn mul_all(&self, xs: &[GroupIdx]) -> GroupIdx {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: GroupIdx) -> GroupIdx {
        self.inverses[a]
    }

    pub fn pow(&self, a: GroupIdx, e: usize) -> GroupIdx {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(p: u64, gens: &[Vec<Vec<i64>>]) -> Result<FiniteMatrixGroup> {
        let fp = Fp::new(p).unwrap();
        let gens = gens.iter().map(|g| Matrix::from_rows(g, &fp).unwrap()).collect();
        FiniteMatrixGroup::generate(fp, 2, gens, DEFAULT_GROUP_CAP)
    }

    #[test]
    fn transvection_has_order_p() {
        for p in [2, 3, 5, 7] {
            let g = group(p, &[vec![vec![1, 1], vec![0, 1]]]).unwrap();
            assert_eq!(g.order(), p as usize);
            assert_eq!(g.pow(1, p as usize), 0);
        }
    }

    #[test]
    fn identity_generator() {
        let g = group(5, &[vec![vec![1, 0], vec![0, 1]]]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn swap_closure_brute_force() {
        let g = group(2, &[vec![vec![0, 1], vec![1, 0]]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn errors() {
        assert_eq!(
            group(3, &[vec![vec![1, 0], vec![0, 0]]]).unwrap_err(),
            Error::NonInvertibleGenerator(0)
        );
        let fp = Fp::new(5).unwrap();
        let gens = vec![
            Matrix::from_rows(&[vec![1, 1], vec![0, 1]], &fp).unwrap(),
            Matrix::from_rows(&[vec![1, 0], vec![1, 1]], &fp).unwrap(),
        ];
        // SL(2,5) has order 120
        assert_eq!(
            FiniteMatrixGroup::generate(fp, 2, gens.clone(), 50).unwrap_err(),
            Error::GroupTooLarge(50)
        );
        assert_eq!(FiniteMatrixGroup::generate(fp, 2, gens, 1000).unwrap().order(), 120);
    }

    #[test]
    fn closed_under_products_and_inverses() {
        let fp = Fp::new(3).unwrap();
        let gens = vec![
            Matrix::from_rows(&[vec![1, 1], vec![0, 1]], &fp).unwrap(),
            Matrix::from_rows(&[vec![0, 1], vec![1, 0]], &fp).unwrap(),
        ];
        let g = FiniteMatrixGroup::generate(fp, 2, gens, 1000).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..g.order() {
                let m = g.matrix(a).mul(g.matrix(b), &fp);
                assert_eq!(g.index_of(&m), Some(g.mul(a, b)));
            }
            assert_eq!(g.eval_word(g.word(a)), Some(a));
        }
    }
}
