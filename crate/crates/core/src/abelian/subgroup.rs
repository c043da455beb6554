use serde::{Deserialize, Serialize};

use super::group::{FgAbelianGroup, GroupElement};
use super::GroupError;
use crate::matrix::{hermite_cols, solve_integer, Int, IntMat};

/// Hard cap on the number of Hermite-form candidates visited during
/// subgroup enumeration; counts explode for large torsion.
pub const ENUMERATION_BOUND: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Index {
    Finite(Int),
    Infinite,
}

/// A subgroup of a finitely generated abelian group, canonicalized.
///
/// The group G = Z^n / L where n counts the canonical generators and L is
/// the torsion relation lattice. A subgroup corresponds to a unique lattice
/// M with L <= M <= Z^n; we store the column Hermite form of M, so equal
/// subgroups always get equal witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupWitness {
    generators: IntMat,
    index: Index,
}

impl SubgroupWitness {
    /// Canonical generator matrix of the lattice M (columns, ambient coords).
    pub fn generator_matrix(&self) -> &IntMat {
        &self.generators
    }

    pub fn generator_columns(&self) -> Vec<Vec<Int>> {
        (0..self.generators.cols()).map(|j| self.generators.col(j)).collect()
    }

    pub fn index(&self) -> Index {
        self.index
    }

    /// Generators as elements of G (coordinates reduced by the torsion).
    pub fn generators_in_group(&self, g: &FgAbelianGroup) -> Vec<GroupElement> {
        let r = g.free_rank();
        self.generator_columns()
            .into_iter()
            .map(|col| {
                let free = col[..r].to_vec();
                let torsion = col[r..].to_vec();
                g.element(free, torsion).expect("witness columns match ambient")
            })
            .collect()
    }

    pub fn contains_column(&self, v: &[Int]) -> bool {
        solve_integer(&self.generators, v).is_some()
    }
}

/// Columns of the torsion relation lattice L inside Z^n.
fn torsion_relations(g: &FgAbelianGroup) -> Vec<Vec<Int>> {
    let n = g.ambient_rank();
    let r = g.free_rank();
    g.invariant_factors()
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut col = vec![0; n];
            col[r + i] = d;
            col
        })
        .collect()
}

/// The subgroup of G generated by the given columns (ambient coordinates).
pub fn subgroup_from_columns(
    g: &FgAbelianGroup,
    columns: &[Vec<Int>],
) -> Result<SubgroupWitness, GroupError> {
    let n = g.ambient_rank();
    if columns.iter().any(|c| c.len() != n) {
        return Err(GroupError::AmbientMismatch);
    }
    let mut all = columns.to_vec();
    all.extend(torsion_relations(g));
    let h = hermite_cols(&IntMat::from_cols(n, &all));
    let index = lattice_index(&h, n);
    Ok(SubgroupWitness { generators: h, index })
}

fn lattice_index(h: &IntMat, ambient: usize) -> Index {
    if h.cols() < ambient {
        Index::Infinite
    } else {
        Index::Finite(h.det().abs())
    }
}

/// All subgroups of G with index exactly `ell`, canonicalized and in a
/// deterministic order. Errors out when the candidate count exceeds the
/// enumeration bound.
pub fn index_subgroups(g: &FgAbelianGroup, ell: Int) -> Result<Vec<SubgroupWitness>, GroupError> {
    assert!(ell >= 1, "index must be positive");
    let n = g.ambient_rank();
    if n == 0 {
        return Ok(if ell == 1 {
            vec![SubgroupWitness { generators: IntMat::zeros(0, 0), index: Index::Finite(1) }]
        } else {
            Vec::new()
        });
    }

    let tuples = diagonal_tuples(ell, n);
    let mut candidates: u128 = 0;
    for t in &tuples {
        let mut c: u128 = 1;
        for (i, &d) in t.iter().enumerate() {
            c = c.saturating_mul((d as u128).saturating_pow(i as u32));
        }
        candidates = candidates.saturating_add(c);
        if candidates > ENUMERATION_BOUND {
            return Err(GroupError::ResourceExceeded { candidates, bound: ENUMERATION_BOUND });
        }
    }

    let relations = torsion_relations(g);
    let mut out = Vec::new();
    for diag in tuples {
        enumerate_hermite(&diag, &mut |h| {
            if relations.iter().all(|rel| forward_solve(h, rel)) {
                out.push(SubgroupWitness { generators: h.clone(), index: Index::Finite(ell) });
            }
        });
    }
    Ok(out)
}

/// Ordered factorizations of ell into n positive factors, lexicographic.
fn diagonal_tuples(ell: Int, n: usize) -> Vec<Vec<Int>> {
    let mut out = Vec::new();
    let mut cur = vec![1; n];
    fn rec(ell: Int, pos: usize, n: usize, cur: &mut Vec<Int>, out: &mut Vec<Vec<Int>>) {
        if pos == n - 1 {
            cur[pos] = ell;
            out.push(cur.clone());
            return;
        }
        let mut d = 1;
        while d <= ell {
            if ell % d == 0 {
                cur[pos] = d;
                rec(ell / d, pos + 1, n, cur, out);
            }
            d += 1;
        }
    }
    rec(ell, 0, n, &mut cur, &mut out);
    out
}

/// Visits every lower-triangular Hermite matrix with the given diagonal:
/// entry (i, j) for j < i ranges over [0, diag[i]). Row-major odometer.
fn enumerate_hermite(diag: &[Int], visit: &mut impl FnMut(&IntMat)) {
    let n = diag.len();
    let mut positions = Vec::new();
    for i in 0..n {
        if diag[i] > 1 {
            for j in 0..i {
                positions.push((i, j));
            }
        }
    }
    let mut h = IntMat::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = diag[i];
    }
    if positions.is_empty() {
        visit(&h);
        return;
    }
    let radices: Vec<Int> = positions.iter().map(|&(i, _)| diag[i]).collect();
    let mut digits = vec![0 as Int; positions.len()];
    loop {
        for (k, &(i, j)) in positions.iter().enumerate() {
            h[(i, j)] = digits[k];
        }
        visit(&h);
        // odometer, last position fastest
        let mut k = positions.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < radices[k] {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Membership of v in the lattice of a full-rank lower-triangular matrix.
fn forward_solve(h: &IntMat, v: &[Int]) -> bool {
    let n = h.rows();
    let mut x = vec![0 as Int; n];
    for i in 0..n {
        let mut rem = v[i];
        for j in 0..i {
            rem -= h[(i, j)] * x[j];
        }
        if rem % h[(i, i)] != 0 {
            return false;
        }
        x[i] = rem / h[(i, i)];
    }
    true
}

/// Invariant factor form of the subgroup itself (not the quotient):
/// M / L where M is the witness lattice and L the torsion relations.
pub fn structure_of_subgroup(
    g: &FgAbelianGroup,
    w: &SubgroupWitness,
) -> Result<FgAbelianGroup, GroupError> {
    let b = w.generator_matrix();
    let m = b.cols();
    let mut rel_in_basis: Vec<Vec<Int>> = Vec::new();
    for rel in torsion_relations(g) {
        let coords = solve_integer(b, &rel).ok_or(GroupError::AmbientMismatch)?;
        rel_in_basis.push(coords);
    }
    FgAbelianGroup::from_relations(&rel_in_basis, m)
}

/// The quotient G / S in invariant factor form.
pub fn quotient_by(g: &FgAbelianGroup, w: &SubgroupWitness) -> Result<FgAbelianGroup, GroupError> {
    FgAbelianGroup::from_relations(&w.generator_columns(), g.ambient_rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_two_in_z() {
        let z = FgAbelianGroup::free(1);
        let subs = index_subgroups(&z, 2).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].generator_columns(), vec![vec![2]]);
    }

    #[test]
    fn index_two_in_klein() {
        let g = FgAbelianGroup::new(0, vec![2, 2]).unwrap();
        let subs = index_subgroups(&g, 2).unwrap();
        assert_eq!(subs.len(), 3);
    }

    #[test]
    fn index_two_in_z2() {
        let g = FgAbelianGroup::free(2);
        let subs = index_subgroups(&g, 2).unwrap();
        assert_eq!(subs.len(), 3);
    }

    #[test]
    fn full_group_is_only_index_one_subgroup() {
        let g = FgAbelianGroup::new(1, vec![4]).unwrap();
        let subs = index_subgroups(&g, 1).unwrap();
        assert_eq!(subs.len(), 1);
        let w = &subs[0];
        assert_eq!(structure_of_subgroup(&g, w).unwrap(), g);
    }

    #[test]
    fn structure_examples() {
        // 2Z inside Z is Z.
        let z = FgAbelianGroup::free(1);
        let w = subgroup_from_columns(&z, &[vec![2]]).unwrap();
        assert_eq!(structure_of_subgroup(&z, &w).unwrap(), FgAbelianGroup::free(1));

        // Diagonal of the Klein group is Z2.
        let klein = FgAbelianGroup::new(0, vec![2, 2]).unwrap();
        let w = subgroup_from_columns(&klein, &[vec![1, 1]]).unwrap();
        assert_eq!(structure_of_subgroup(&klein, &w).unwrap(), FgAbelianGroup::cyclic(2));

        // <(2,0),(0,1)> inside Z^2 has rank 2.
        let z2 = FgAbelianGroup::free(2);
        let w = subgroup_from_columns(&z2, &[vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(structure_of_subgroup(&z2, &w).unwrap(), FgAbelianGroup::free(2));
        assert_eq!(w.index(), Index::Finite(2));
    }

    #[test]
    fn witness_canonicalization_deduplicates() {
        let klein = FgAbelianGroup::new(0, vec![2, 2]).unwrap();
        let a = subgroup_from_columns(&klein, &[vec![1, 1]]).unwrap();
        let b = subgroup_from_columns(&klein, &[vec![1, 1], vec![1, 1], vec![0, 2]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_computation() {
        let z = FgAbelianGroup::free(1);
        let w = subgroup_from_columns(&z, &[vec![6]]).unwrap();
        assert_eq!(quotient_by(&z, &w).unwrap(), FgAbelianGroup::cyclic(6));
    }

    #[test]
    fn enumeration_bound_trips() {
        let factors = vec![2; 21];
        let g = FgAbelianGroup::new(0, factors).unwrap();
        match index_subgroups(&g, 2) {
            Err(GroupError::ResourceExceeded { .. }) => {}
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn trivial_group_cases() {
        let t = FgAbelianGroup::trivial();
        assert_eq!(index_subgroups(&t, 1).unwrap().len(), 1);
        assert!(index_subgroups(&t, 2).unwrap().is_empty());
    }
}
