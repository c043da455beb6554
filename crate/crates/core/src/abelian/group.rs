use serde::{Deserialize, Serialize};

use super::GroupError;
use crate::matrix::{smith_normal_form, Int, IntMat};

/// A finitely generated abelian group in invariant factor form:
/// free part Z^r plus torsion Z_{d1} + ... + Z_{dk} with d1 | d2 | ... | dk
/// and every di >= 2. Factors equal to 1 are never stored, so the
/// representation is a unique normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<Int>,
}

/// An element: integer vector on the free part, reduced residues on the
/// torsion part. All arithmetic goes through the owning group so the
/// torsion entries stay in [0, di).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub free: Vec<Int>,
    pub torsion: Vec<Int>,
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, invariant_factors: Vec<Int>) -> Result<Self, GroupError> {
        for w in invariant_factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(GroupError::InvalidInvariantFactors(invariant_factors));
            }
        }
        if invariant_factors.iter().any(|&d| d < 2) {
            return Err(GroupError::InvalidInvariantFactors(invariant_factors));
        }
        Ok(FgAbelianGroup { free_rank, invariant_factors })
    }

    pub fn trivial() -> Self {
        FgAbelianGroup { free_rank: 0, invariant_factors: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { free_rank: rank, invariant_factors: Vec::new() }
    }

    pub fn cyclic(n: Int) -> Self {
        assert!(n >= 1);
        if n == 1 {
            Self::trivial()
        } else {
            FgAbelianGroup { free_rank: 0, invariant_factors: vec![n] }
        }
    }

    /// Z^ambient_rank modulo the lattice spanned by the given columns,
    /// in invariant factor form.
    pub fn from_relations(relations: &[Vec<Int>], ambient_rank: usize) -> Result<Self, GroupError> {
        if relations.iter().any(|c| c.len() != ambient_rank) {
            return Err(GroupError::ShapeMismatch);
        }
        if relations.is_empty() {
            return Ok(Self::free(ambient_rank));
        }
        let m = IntMat::from_cols(ambient_rank, relations);
        let snf = smith_normal_form(&m);
        let nonzero: Vec<Int> = snf.invariant_factors().into_iter().map(Int::abs).collect();
        let free_rank = ambient_rank - nonzero.len();
        let invariant_factors = nonzero.into_iter().filter(|&d| d > 1).collect();
        Ok(FgAbelianGroup { free_rank, invariant_factors })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    /// Number of generators in the canonical presentation.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn order(&self) -> Option<Int> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    pub fn torsion_order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            free: vec![0; self.free_rank],
            torsion: vec![0; self.invariant_factors.len()],
        }
    }

    pub fn check_shape(&self, e: &GroupElement) -> Result<(), GroupError> {
        if e.free.len() != self.free_rank || e.torsion.len() != self.invariant_factors.len() {
            return Err(GroupError::ShapeMismatch);
        }
        Ok(())
    }

    /// Reduces arbitrary coordinates into a canonical element.
    pub fn element(&self, free: Vec<Int>, torsion: Vec<Int>) -> Result<GroupElement, GroupError> {
        if free.len() != self.free_rank || torsion.len() != self.invariant_factors.len() {
            return Err(GroupError::ShapeMismatch);
        }
        let torsion = torsion
            .into_iter()
            .zip(&self.invariant_factors)
            .map(|(t, &d)| t.rem_euclid(d))
            .collect();
        Ok(GroupElement { free, torsion })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.invariant_factors)
            .map(|((x, y), &d)| (x + y).rem_euclid(d))
            .collect();
        GroupElement { free, torsion }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let free = a.free.iter().map(|x| -x).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&self.invariant_factors)
            .map(|(x, &d)| (-x).rem_euclid(d))
            .collect();
        GroupElement { free, torsion }
    }

    pub fn mul_scalar(&self, a: &GroupElement, n: Int) -> GroupElement {
        let free = a.free.iter().map(|x| x * n).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&self.invariant_factors)
            .map(|(x, &d)| (x * n).rem_euclid(d))
            .collect();
        GroupElement { free, torsion }
    }

    /// The i-th canonical generator (free generators first).
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut e = self.zero();
        if i < self.free_rank {
            e.free[i] = 1;
        } else {
            e.torsion[i - self.free_rank] = 1;
        }
        e
    }

    /// Element coordinates in the ambient lattice Z^(r+k) used by subgroup
    /// witnesses: free coordinates first, then one coordinate per factor.
    pub fn ambient_rank(&self) -> usize {
        self.generator_count()
    }

    /// Mixed-radix index of a torsion element of a finite group,
    /// least significant factor first.
    pub fn element_index(&self, e: &GroupElement) -> usize {
        debug_assert!(self.is_finite());
        let mut idx = 0usize;
        for (t, &d) in e.torsion.iter().zip(&self.invariant_factors).rev() {
            idx = idx * (d as usize) + *t as usize;
        }
        idx
    }

    pub fn element_from_index(&self, mut idx: usize) -> GroupElement {
        debug_assert!(self.is_finite());
        let mut torsion = Vec::with_capacity(self.invariant_factors.len());
        for &d in &self.invariant_factors {
            torsion.push((idx % d as usize) as Int);
            idx /= d as usize;
        }
        GroupElement { free: Vec::new(), torsion }
    }

    /// All elements of a finite group, in index order.
    pub fn elements(&self) -> Result<Vec<GroupElement>, GroupError> {
        let order = self.order().ok_or(GroupError::NotFinite)?;
        Ok((0..order as usize).map(|i| self.element_from_index(i)).collect())
    }
}

impl std::fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_free() {
        let g = FgAbelianGroup::from_relations(&[], 1).unwrap();
        assert_eq!(g, FgAbelianGroup::free(1));
    }

    #[test]
    fn canonical_form_direct_sum() {
        let g = FgAbelianGroup::from_relations(&[vec![2, 0], vec![0, 2]], 2).unwrap();
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.invariant_factors(), &[2, 2]);
    }

    #[test]
    fn canonical_form_from_minor_gcds() {
        // Columns (2,2) and (0,4): gcd of entries 2, |det| = 8, so [2, 4].
        let g = FgAbelianGroup::from_relations(&[vec![2, 2], vec![0, 4]], 2).unwrap();
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.invariant_factors(), &[2, 4]);
    }

    #[test]
    fn factors_of_one_are_dropped() {
        let g = FgAbelianGroup::from_relations(&[vec![1, 0], vec![0, 3]], 2).unwrap();
        assert_eq!(g, FgAbelianGroup::cyclic(3));
    }

    #[test]
    fn rejects_non_chain() {
        assert!(FgAbelianGroup::new(0, vec![2, 3]).is_err());
        assert!(FgAbelianGroup::new(0, vec![1, 2]).is_err());
        assert!(FgAbelianGroup::new(1, vec![2, 4, 8]).is_ok());
    }

    #[test]
    fn element_arithmetic_reduces_mod_factors() {
        let g = FgAbelianGroup::new(1, vec![2, 4]).unwrap();
        let a = g.element(vec![3], vec![1, 3]).unwrap();
        let b = g.element(vec![-1], vec![1, 2]).unwrap();
        let s = g.add(&a, &b);
        assert_eq!(s.free, vec![2]);
        assert_eq!(s.torsion, vec![0, 1]);
        let z = g.add(&a, &g.neg(&a));
        assert_eq!(z, g.zero());
    }

    #[test]
    fn element_indexing_round_trips() {
        let g = FgAbelianGroup::new(0, vec![2, 6]).unwrap();
        let all = g.elements().unwrap();
        assert_eq!(all.len(), 12);
        for (i, e) in all.iter().enumerate() {
            assert_eq!(g.element_index(e), i);
            assert_eq!(&g.element_from_index(i), e);
        }
    }
}
