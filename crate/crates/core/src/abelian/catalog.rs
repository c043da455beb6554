use serde::{Deserialize, Serialize};

use super::GroupError;
use crate::matrix::Int;

/// Non-finitely-generated groups supported through a fixed catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CatalogGroup {
    /// All elements of finite order in the circle.
    TorsionOfCircle,
    /// Direct sum of cyclic groups of pairwise distinct primes, given in
    /// increasing order.
    DistinctPrimeCyclics(Vec<Int>),
    /// The additive rationals.
    Rationals,
    /// The Pruefer p-group.
    Prufer(Int),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogDecision {
    pub admits: bool,
    pub explanation: String,
}

fn is_prime(n: Int) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Decides minimal-action existence on `ell` circles for the catalog
/// classes. Divisible groups admit no finite quotient beyond the trivial
/// one, so they only act minimally on a single circle; the prime-cyclic
/// direct sum splits off exactly the squarefree products of its primes.
pub fn decide_catalog(class: &CatalogGroup, ell: Int) -> Result<CatalogDecision, GroupError> {
    assert!(ell >= 1, "circle count must be positive");
    match class {
        CatalogGroup::TorsionOfCircle => Ok(divisible_decision("tor(S^1)", "dense in the circle by construction", ell)),
        CatalogGroup::Rationals => Ok(divisible_decision("Q", "an infinite subgroup of the circle, hence dense", ell)),
        CatalogGroup::Prufer(p) => {
            if !is_prime(*p) {
                return Err(GroupError::Catalog(format!("{p} is not prime")));
            }
            Ok(divisible_decision(
                &format!("Z({p}^inf)"),
                "the p-power torsion of the circle, infinite hence dense",
                ell,
            ))
        }
        CatalogGroup::DistinctPrimeCyclics(primes) => {
            for w in primes.windows(2) {
                if w[0] >= w[1] {
                    return Err(GroupError::Catalog("primes must be strictly increasing".into()));
                }
            }
            if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
                return Err(GroupError::Catalog(format!("{p} is not prime")));
            }
            let factorization = squarefree_factorization(ell, primes);
            match factorization {
                Some(used) => Ok(CatalogDecision {
                    admits: true,
                    explanation: if used.is_empty() {
                        format!("{ell} is the empty product; the whole group is an infinite subgroup of the circle torsion")
                    } else {
                        format!(
                            "{ell} = {} splits off a finite summand of that order; the complement is infinite and embeds in the circle torsion",
                            used.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" * ")
                        )
                    },
                }),
                None => Ok(CatalogDecision {
                    admits: false,
                    explanation: format!(
                        "{ell} is not a product of distinct primes from the sequence; every finite quotient has squarefree order over the listed primes"
                    ),
                }),
            }
        }
    }
}

fn divisible_decision(name: &str, dense_reason: &str, ell: Int) -> CatalogDecision {
    if ell == 1 {
        CatalogDecision {
            admits: true,
            explanation: format!("{name} is {dense_reason}; one circle needs no quotient"),
        }
    } else {
        CatalogDecision {
            admits: false,
            explanation: format!(
                "{name} is divisible, so every finite quotient is divisible and therefore trivial; no quotient of order {ell} exists"
            ),
        }
    }
}

/// Writes ell as a product of distinct primes from the list, if possible.
fn squarefree_factorization(mut ell: Int, primes: &[Int]) -> Option<Vec<Int>> {
    let mut used = Vec::new();
    for &p in primes {
        if ell % p == 0 {
            ell /= p;
            used.push(p);
            if ell % p == 0 {
                return None; // not squarefree
            }
        }
    }
    if ell == 1 {
        Some(used)
    } else {
        None // leftover factor outside the listed primes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_circle_only_one() {
        assert!(decide_catalog(&CatalogGroup::TorsionOfCircle, 1).unwrap().admits);
        assert!(!decide_catalog(&CatalogGroup::TorsionOfCircle, 3).unwrap().admits);
    }

    #[test]
    fn prime_sum_squarefree_products() {
        let class = CatalogGroup::DistinctPrimeCyclics(vec![2, 3, 5, 7, 11]);
        assert!(decide_catalog(&class, 30).unwrap().admits); // 2*3*5
        assert!(!decide_catalog(&class, 4).unwrap().admits); // not squarefree
        assert!(decide_catalog(&class, 1).unwrap().admits); // empty product
        assert!(!decide_catalog(&class, 13).unwrap().admits); // prime not listed
    }

    #[test]
    fn divisible_classes() {
        assert!(decide_catalog(&CatalogGroup::Rationals, 1).unwrap().admits);
        assert!(!decide_catalog(&CatalogGroup::Rationals, 2).unwrap().admits);
        assert!(decide_catalog(&CatalogGroup::Prufer(5), 1).unwrap().admits);
        assert!(!decide_catalog(&CatalogGroup::Prufer(5), 5).unwrap().admits);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(decide_catalog(&CatalogGroup::Prufer(6), 1).is_err());
        assert!(decide_catalog(&CatalogGroup::DistinctPrimeCyclics(vec![3, 2]), 1).is_err());
        assert!(decide_catalog(&CatalogGroup::DistinctPrimeCyclics(vec![2, 9]), 1).is_err());
    }
}
