use super::group::FgAbelianGroup;
use super::subgroup::{
    index_subgroups, quotient_by, structure_of_subgroup, subgroup_from_columns, Index,
    SubgroupWitness,
};
use super::GroupError;
use crate::circle::{realize_embedding, IrrationalBasis, RotationNumber};
use crate::matrix::Int;

/// Whether a finitely generated abelian group is isomorphic to a dense
/// subgroup of the circle: it must be infinite, and its torsion must be
/// cyclic since every finite subgroup of the circle is cyclic.
pub fn embeds_densely_in_circle(h: &FgAbelianGroup) -> bool {
    h.free_rank() >= 1 && h.invariant_factors().len() <= 1
}

/// Witness that a group admits a minimal effective action on `quotient_order`
/// circles: a subgroup H of that index which embeds densely in the circle,
/// the quotient K, and a concrete realization of H by rotations.
#[derive(Debug, Clone)]
pub struct ExtensionCertificate {
    pub subgroup: SubgroupWitness,
    pub subgroup_structure: FgAbelianGroup,
    pub quotient: FgAbelianGroup,
    pub quotient_order: Int,
    pub embedding: Vec<RotationNumber>,
}

/// Witness for a minimal but not necessarily effective action: a quotient
/// of the group (given by the kernel of the projection) together with an
/// effective certificate for that quotient.
#[derive(Debug, Clone)]
pub struct NonEffectiveCertificate {
    pub kernel: SubgroupWitness,
    pub quotient: FgAbelianGroup,
    pub chain: ExtensionCertificate,
}

/// Searches for a subgroup H of index `ell` with a dense circle embedding.
/// Returns the first hit in the deterministic enumeration order, or None.
pub fn decide_effective(
    g: &FgAbelianGroup,
    ell: Int,
    basis: &IrrationalBasis,
) -> Result<Option<ExtensionCertificate>, GroupError> {
    for witness in index_subgroups(g, ell)? {
        let structure = structure_of_subgroup(g, &witness)?;
        if !embeds_densely_in_circle(&structure) {
            continue;
        }
        let quotient = quotient_by(g, &witness)?;
        debug_assert_eq!(quotient.order(), Some(ell));
        let embedding = realize_embedding(&structure, basis)
            .map_err(|e| GroupError::Catalog(e.to_string()))?;
        return Ok(Some(ExtensionCertificate {
            subgroup: witness,
            subgroup_structure: structure,
            quotient,
            quotient_order: ell,
            embedding,
        }));
    }
    Ok(None)
}

/// Decides whether some quotient of G admits a minimal effective action on
/// `ell` circles. For finitely generated G this holds exactly when the free
/// rank is positive: project onto one free factor and use the subgroup
/// ell*Z of Z. The returned certificate carries the explicit projection
/// kernel and the full chain for the quotient.
pub fn decide_non_effective(
    g: &FgAbelianGroup,
    ell: Int,
    basis: &IrrationalBasis,
) -> Option<NonEffectiveCertificate> {
    if g.free_rank() == 0 {
        return None;
    }
    let n = g.ambient_rank();
    // Kernel of projection to the first free coordinate: the other free
    // generators plus the whole torsion part.
    let mut cols = Vec::new();
    for i in 1..n {
        let mut col = vec![0; n];
        col[i] = 1;
        cols.push(col);
    }
    let kernel = subgroup_from_columns(g, &cols).expect("kernel columns are ambient");
    debug_assert_eq!(kernel.index(), Index::Infinite);
    let quotient = FgAbelianGroup::free(1);
    let chain = decide_effective(&quotient, ell, basis)
        .expect("enumeration over Z is tiny")
        .expect("Z admits every index");
    Some(NonEffectiveCertificate { kernel, quotient, chain })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis() -> IrrationalBasis {
        IrrationalBasis::default()
    }

    #[test]
    fn embedding_criterion() {
        assert!(embeds_densely_in_circle(&FgAbelianGroup::free(1)));
        assert!(!embeds_densely_in_circle(&FgAbelianGroup::new(0, vec![2, 2]).unwrap()));
        assert!(!embeds_densely_in_circle(&FgAbelianGroup::new(1, vec![2, 2]).unwrap()));
        assert!(embeds_densely_in_circle(&FgAbelianGroup::new(1, vec![6]).unwrap()));
        assert!(!embeds_densely_in_circle(&FgAbelianGroup::trivial()));
    }

    #[test]
    fn z_admits_every_index() {
        let z = FgAbelianGroup::free(1);
        for ell in 1..=12 {
            let cert = decide_effective(&z, ell, &basis()).unwrap().unwrap();
            assert_eq!(cert.subgroup.generator_columns(), vec![vec![ell]]);
            assert_eq!(cert.subgroup_structure, FgAbelianGroup::free(1));
            assert_eq!(cert.quotient, FgAbelianGroup::cyclic(ell));
            assert_eq!(cert.embedding.len(), 1);
        }
    }

    #[test]
    fn finite_groups_never_effective() {
        let g = FgAbelianGroup::new(0, vec![2, 6]).unwrap();
        for ell in [1, 2, 3, 4, 6, 12] {
            assert!(decide_effective(&g, ell, &basis()).unwrap().is_none());
        }
    }

    #[test]
    fn kills_one_torsion_factor() {
        // Z + Z2 + Z2 at index 2: some index-2 subgroup is Z + Z2.
        let g = FgAbelianGroup::new(1, vec![2, 2]).unwrap();
        let cert = decide_effective(&g, 2, &basis()).unwrap().unwrap();
        assert_eq!(cert.subgroup_structure, FgAbelianGroup::new(1, vec![2]).unwrap());
        assert_eq!(cert.quotient, FgAbelianGroup::cyclic(2));
        assert_eq!(cert.embedding.len(), 2);
    }

    #[test]
    fn non_effective_iff_positive_rank() {
        let g = FgAbelianGroup::new(1, vec![2, 2]).unwrap();
        for ell in 1..=6 {
            let cert = decide_non_effective(&g, ell, &basis()).unwrap();
            assert_eq!(cert.quotient, FgAbelianGroup::free(1));
            assert_eq!(cert.chain.quotient, FgAbelianGroup::cyclic(ell));
        }
        let finite = FgAbelianGroup::new(0, vec![4]).unwrap();
        assert!(decide_non_effective(&finite, 2, &basis()).is_none());

        let z2 = FgAbelianGroup::free(2);
        let cert = decide_non_effective(&z2, 6, &basis()).unwrap();
        assert_eq!(cert.chain.subgroup.generator_columns(), vec![vec![6]]);
    }

    #[test]
    fn effective_implies_non_effective() {
        let g = FgAbelianGroup::new(1, vec![3]).unwrap();
        for ell in 1..=6 {
            if decide_effective(&g, ell, &basis()).unwrap().is_some() {
                assert!(decide_non_effective(&g, ell, &basis()).is_some());
            }
        }
    }
}
