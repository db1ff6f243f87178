//! Multipliers: pairs of endomorphisms acting like two-sided multiplications.
//!
//! A multiplier m = (m₁, m₂) represents "m·a = m₁(a), a·m = m₂(a)"; the two
//! components must satisfy m₂(a)b = a·m₁(b). For a nondegenerate product the
//! inner multipliers (left/right multiplication by an element) embed the
//! algebra into M(A).

use crate::algebra::{Algebra, TripleWitness};
use crate::element::Element;
use crate::error::MhError;
use crate::linmap::LinMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplier {
    /// m₁: a ↦ m·a.
    pub left: LinMap,
    /// m₂: a ↦ a·m.
    pub right: LinMap,
}

impl Multiplier {
    pub fn identity(alg: &Algebra) -> Self {
        Multiplier {
            left: LinMap::identity(&alg.space),
            right: LinMap::identity(&alg.space),
        }
    }

    pub fn from_element(alg: &Algebra, a: &Element) -> Self {
        Multiplier {
            left: alg.left_mul_map(a),
            right: alg.right_mul_map(a),
        }
    }

    /// m₂(a)·b = a·m₁(b) on all basis pairs.
    pub fn check_compatible(&self, alg: &Algebra) -> Result<(), TripleWitness> {
        let d = alg.dim();
        for i in 0..d {
            let ma = self.right.col(i);
            for j in 0..d {
                let mb = self.left.col(j);
                let lhs = alg.multiply(ma, &Element::basis(&alg.space, j));
                let rhs = alg.multiply(&Element::basis(&alg.space, i), mb);
                if lhs != rhs {
                    return Err(TripleWitness {
                        indices: vec![i, j],
                        labels: vec![alg.space.label(i), alg.space.label(j)],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        Ok(())
    }

    /// (mn)₁ = m₁∘n₁ and (mn)₂ = n₂∘m₂.
    pub fn product(&self, other: &Multiplier) -> Multiplier {
        Multiplier {
            left: self.left.compose(&other.left),
            right: other.right.compose(&self.right),
        }
    }

    /// m* = (m₂*, m₁*) where f*(a) := (f(a*))*.
    pub fn star(&self, alg: &Algebra) -> Result<Multiplier, MhError> {
        let st = alg
            .star
            .as_ref()
            .ok_or_else(|| MhError::Unsupported(format!("algebra {} has no involution", alg.name)))?;
        let star_conj = |m: &LinMap| {
            LinMap::from_fn(&alg.space, &alg.space, |i| {
                let a_star = st.apply_antilinear(&Element::basis(&alg.space, i));
                st.apply_antilinear(&m.apply(&a_star))
            })
        };
        Ok(Multiplier {
            left: star_conj(&self.right),
            right: star_conj(&self.left),
        })
    }

    /// Recovers the element a with m = (a·, ·a) in a unital algebra.
    pub fn to_element(&self, alg: &Algebra) -> Result<Element, MhError> {
        let one = alg.unit_element()?;
        Ok(self.left.apply(one))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::space::{AtomSpace, Space};

    fn kc2() -> Algebra {
        let sp = Space::atomic(AtomSpace::new("kC2", vec!["e".into(), "g".into()]).unwrap());
        let one = Scalar::one;
        let unit = Element::basis(&sp, 0);
        Algebra::from_triples(
            "kC2",
            sp,
            &[(0, 0, 0, one()), (0, 1, 1, one()), (1, 0, 1, one()), (1, 1, 0, one())],
            Some(unit),
        )
    }

    #[test]
    fn inner_multipliers_multiply_like_elements() {
        let alg = kc2();
        let g = Element::basis(&alg.space, 1);
        let mg = Multiplier::from_element(&alg, &g);
        mg.check_compatible(&alg).unwrap();
        let gg = mg.product(&mg);
        gg.check_compatible(&alg).unwrap();
        assert_eq!(
            gg.to_element(&alg).unwrap(),
            alg.multiply(&g, &g),
            "multiplier product matches element product"
        );
        let id = Multiplier::identity(&alg);
        assert_eq!(mg.product(&id), mg);
    }

    #[test]
    fn incompatible_pair_is_caught() {
        let alg = kc2();
        let g = Element::basis(&alg.space, 1);
        let bad = Multiplier {
            left: alg.left_mul_map(&g),
            right: LinMap::identity(&alg.space),
        };
        assert!(bad.check_compatible(&alg).is_err());
    }
}
