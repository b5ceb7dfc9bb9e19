//! Exact sparse linear algebra over ℚ.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Rational, w: &SparseVec<K>) {
    for (k, x) in w {
        let e = v.entry(k.clone()).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

struct BasisVec<K> {
    vec: SparseVec<K>,
    combo: SparseVec<usize>,
}

/// Incrementally built column space with provenance: each inserted column
/// gets an id, and [`ColumnSpace::express`] returns a combination of
/// column ids producing a target vector.
pub struct ColumnSpace<K> {
    basis: BTreeMap<K, BasisVec<K>>,
    columns: usize,
}

impl<K: Ord + Clone> Default for ColumnSpace<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> ColumnSpace<K> {
    pub fn new() -> Self {
        Self {
            basis: BTreeMap::new(),
            columns: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Reduces `v` against the basis; returns the residue and the
    /// combination of columns that was subtracted.
    fn reduce(&self, mut v: SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut combo = SparseVec::new();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.basis.contains_key(k)).cloned(),
                Some(c) => v
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.basis.contains_key(k))
                    .cloned(),
            };
            let Some(k) = next else { break };
            let b = &self.basis[&k];
            let c = -(&v[&k] / &b.vec[&k]);
            axpy(&mut v, &c, &b.vec);
            axpy(&mut combo, &c, &b.combo);
            cursor = Some(k);
        }
        (v, combo)
    }

    /// Adds a column; returns its id and whether it raised the rank.
    pub fn insert(&mut self, v: SparseVec<K>) -> (usize, bool) {
        let id = self.columns;
        self.columns += 1;
        let (r, mut combo) = self.reduce(v);
        let Some(pivot) = r.keys().next().cloned() else {
            return (id, false);
        };
        combo.insert(id, Rational::from_integer(1.into()));
        self.basis.insert(pivot, BasisVec { vec: r, combo });
        (id, true)
    }

    /// Coefficients `c` with `Σ c[id]·column[id] = target`, if any.
    pub fn express(&self, target: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let (r, combo) = self.reduce(target.clone());
        if r.is_empty() {
            Some(combo.into_iter().map(|(k, c)| (k, -c)).collect())
        } else {
            None
        }
    }

    pub fn contains(&self, target: &SparseVec<K>) -> bool {
        self.reduce(target.clone()).0.is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(vs: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut s = ColumnSpace::new();
    for v in vs {
        s.insert(v);
    }
    s.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn v(xs: &[(u32, i64)]) -> SparseVec<u32> {
        xs.iter().map(|(k, c)| (*k, rat(*c))).collect()
    }

    #[test]
    fn express_recovers_combination() {
        let mut s = ColumnSpace::new();
        s.insert(v(&[(0, 1), (1, 1)]));
        s.insert(v(&[(1, 1), (2, 1)]));
        s.insert(v(&[(0, 1), (2, -1)]));
        assert_eq!(s.rank(), 2);
        let t = v(&[(0, 2), (1, 3), (2, 1)]);
        let c = s.express(&t).unwrap();
        let cols = [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (2, -1)])];
        let mut sum = SparseVec::new();
        for (id, x) in &c {
            axpy(&mut sum, x, &cols[*id]);
        }
        assert_eq!(sum, t);
        assert!(s.express(&v(&[(0, 1)])).is_none());
    }

    #[test]
    fn rank_of_dependent_family() {
        assert_eq!(rank([v(&[(0, 1)]), v(&[(0, 2)]), v(&[(5, 1)])]), 2);
        assert_eq!(rank(Vec::<SparseVec<u32>>::new()), 0);
    }
}
