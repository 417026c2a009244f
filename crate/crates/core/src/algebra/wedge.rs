use super::field::Fp;

/// Basis wedge monomial `x_{i_1} ∧ ... ∧ x_{i_j}` with strictly increasing indices,
/// stored as a bit set (at most 32 variables).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Wedge(pub u32);

pub const MAX_VARS: usize = 32;

impl Wedge {
    pub const EMPTY: Wedge = Wedge(0);

    pub fn from_indices(idx: &[usize]) -> Option<Wedge> {
        let mut bits = 0u32;
        for &i in idx {
            if i >= MAX_VARS || bits & (1 << i) != 0 {
                return None;
            }
            bits |= 1 << i;
        }
        Some(Wedge(bits))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..MAX_VARS).filter(move |&i| self.0 & (1 << i) != 0)
    }

    /// Number of indices of `self` strictly below `i`.
    #[inline]
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u32 << i) - 1)).count_ones() as usize
    }

    #[inline]
    pub fn count_above(self, i: usize) -> usize {
        (self.0 >> (i + 1)).count_ones() as usize
    }

    pub fn without(self, i: usize) -> Wedge {
        Wedge(self.0 & !(1 << i))
    }

    pub fn with(self, i: usize) -> Wedge {
        Wedge(self.0 | (1 << i))
    }

    pub fn is_disjoint(self, other: Wedge) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Wedge) -> Wedge {
        Wedge(self.0 | other.0)
    }

    /// Sign `s` with `x_S ∧ x_T = s · x_{S ∪ T}` for disjoint `S`, `T`: the parity of
    /// pairs `(a, b)` with `a ∈ S`, `b ∈ T`, `a > b`.
    pub fn shuffle_sign(s: Wedge, t: Wedge) -> usize {
        t.indices().map(|b| s.count_above(b)).sum::<usize>() % 2
    }

    /// All subsets of `self` (as wedges), in increasing bit order.
    pub fn subsets(self) -> Vec<Wedge> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u32;
        loop {
            out.push(Wedge(sub));
            if sub == self.0 {
                break;
            }
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        out.sort();
        out
    }

    /// All wedges of size `k` in `n` variables.
    pub fn all_of_size(n: usize, k: usize) -> Vec<Wedge> {
        (0u32..(1u32 << n)).filter(|b| b.count_ones() as usize == k).map(Wedge).collect()
    }

    pub fn display_with(self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.indices().map(|i| names[i].clone()).collect::<Vec<_>>().join("∧")
    }
}

/// Sort a list of distinct variable indices into a wedge, returning the permutation sign as
/// a residue, or `None` on a repeated index.
pub fn wedge_from_unsorted(idx: &[usize], fp: &Fp) -> Option<(Wedge, u32)> {
    let w = Wedge::from_indices(idx)?;
    let mut inversions = 0;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    Some((w, fp.sign(inversions)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_signs() {
        let v = Wedge::from_indices(&[0]).unwrap();
        let w = Wedge::from_indices(&[1]).unwrap();
        assert_eq!(Wedge::shuffle_sign(v, w), 0);
        assert_eq!(Wedge::shuffle_sign(w, v), 1);
        let fp = Fp::new(5).unwrap();
        assert_eq!(wedge_from_unsorted(&[1, 0], &fp), Some((v.union(w), 4)));
        assert_eq!(wedge_from_unsorted(&[1, 1], &fp), None);
    }

    #[test]
    fn subsets_enumerated() {
        let i = Wedge::from_indices(&[0, 2, 3]).unwrap();
        let subs = i.subsets();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.0 & !i.0 == 0));
    }
}
