//! Bilinear pairings between Hopf objects and the actions they induce.
//!
//! A pairing ⟨·,·⟩: Q × Q̂ → k is stored as a dense matrix over the two
//! bases. The duality laws trade products on one side for coproducts on the
//! other; a nondegenerate pairing turns coactions with legs in Q into
//! actions of Q̂, which is how the function algebra ends up acting on
//! anything a group algebra coacts on and vice versa.

use crate::action::{LeftAction, LeftCoaction, RightAction, RightCoaction};
use crate::element::Element;
use crate::error::MhError;
use crate::hopf::HopfRef;
use crate::scalar::Scalar;
use crate::space::Space;

#[derive(Clone, Debug)]
pub struct Pairing {
    pub left: HopfRef,
    pub right: HopfRef,
    /// ⟨left_i, right_j⟩ at i·dim(right) + j.
    values: Vec<Scalar>,
}

impl Pairing {
    pub fn new(left: HopfRef, right: HopfRef, values: Vec<Scalar>) -> Self {
        assert_eq!(values.len(), left.dim() * right.dim());
        Pairing {
            left,
            right,
            values,
        }
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> &Scalar {
        &self.values[i * self.right.dim() + j]
    }

    pub fn eval(&self, x: &Element, f: &Element) -> Scalar {
        debug_assert!(Space::same_basis(&x.space, self.left.space()));
        debug_assert!(Space::same_basis(&f.space, self.right.space()));
        let mut out = Scalar::zero();
        for (i, cx) in &x.terms {
            for (j, cf) in &f.terms {
                out = &out + &(&(cx * cf) * self.eval_basis(*i, *j));
            }
        }
        out
    }

    /// The same pairing with the slots swapped.
    pub fn transpose(&self) -> Pairing {
        let (dl, dr) = (self.left.dim(), self.right.dim());
        let mut values = vec![Scalar::zero(); dl * dr];
        for i in 0..dl {
            for j in 0..dr {
                values[j * dl + i] = self.values[i * dr + j].clone();
            }
        }
        Pairing {
            left: self.right.clone(),
            right: self.left.clone(),
            values,
        }
    }

    /// The five duality laws on all basis tuples: products pair with
    /// coproducts in both slots, units with counits, antipode with antipode.
    pub fn check_duality_laws(&self) -> Result<(), MhError> {
        let (q, f) = (&self.left, &self.right);
        let (dl, dr) = (q.dim(), f.dim());
        let fail = |law: &str, detail: String| {
            Err(MhError::Verification(format!(
                "pairing of {} with {} fails {law} {detail}",
                q.algebra.name, f.algebra.name
            )))
        };
        for x in 0..dl {
            for y in 0..dl {
                let xy = q.algebra.mul_basis(x, y);
                for j in 0..dr {
                    let mut lhs = Scalar::zero();
                    for (k, c) in &xy.terms {
                        lhs = &lhs + &(c * self.eval_basis(*k, j));
                    }
                    let mut rhs = Scalar::zero();
                    for (p, c) in &f.co.delta_basis(j).terms {
                        let (f1, f2) = (p / dr, p % dr);
                        rhs = &rhs + &(c * &(self.eval_basis(x, f1) * self.eval_basis(y, f2)));
                    }
                    if lhs != rhs {
                        return fail(
                            "the product-coproduct law in the first slot",
                            format!(
                                "at ({}, {}, {}): lhs = {}, rhs = {}",
                                q.space().label(x),
                                q.space().label(y),
                                f.space().label(j),
                                lhs,
                                rhs
                            ),
                        );
                    }
                }
            }
        }
        for i in 0..dr {
            for j in 0..dr {
                let fg = f.algebra.mul_basis(i, j);
                for x in 0..dl {
                    let mut lhs = Scalar::zero();
                    for (k, c) in &fg.terms {
                        lhs = &lhs + &(c * self.eval_basis(x, *k));
                    }
                    let mut rhs = Scalar::zero();
                    for (p, c) in &q.co.delta_basis(x).terms {
                        let (x1, x2) = (p / dl, p % dl);
                        rhs = &rhs + &(c * &(self.eval_basis(x1, i) * self.eval_basis(x2, j)));
                    }
                    if lhs != rhs {
                        return fail(
                            "the product-coproduct law in the second slot",
                            format!(
                                "at ({}, {}, {}): lhs = {}, rhs = {}",
                                q.space().label(x),
                                f.space().label(i),
                                f.space().label(j),
                                lhs,
                                rhs
                            ),
                        );
                    }
                }
            }
        }
        let one_q = q.algebra.unit_element()?;
        for j in 0..dr {
            let lhs = self.eval(one_q, &Element::basis(f.space(), j));
            if lhs != f.co.counit[j] {
                return fail(
                    "the unit-counit law in the first slot",
                    format!("at {}: ⟨1,·⟩ = {lhs}", f.space().label(j)),
                );
            }
        }
        let one_f = f.algebra.unit_element()?;
        for x in 0..dl {
            let lhs = self.eval(&Element::basis(q.space(), x), one_f);
            if lhs != q.co.counit[x] {
                return fail(
                    "the unit-counit law in the second slot",
                    format!("at {}: ⟨·,1⟩ = {lhs}", q.space().label(x)),
                );
            }
        }
        for x in 0..dl {
            let sx = q.co.antipode.col(x);
            for j in 0..dr {
                let lhs = self.eval(sx, &Element::basis(f.space(), j));
                let rhs = self.eval(
                    &Element::basis(q.space(), x),
                    f.co.antipode.col(j),
                );
                if lhs != rhs {
                    return fail(
                        "the antipode exchange law",
                        format!(
                            "at ({}, {}): lhs = {lhs}, rhs = {rhs}",
                            q.space().label(x),
                            f.space().label(j)
                        ),
                    );
                }
            }
        }
        Ok(())
    }

    /// Both radicals must vanish: no nonzero element of either side pairs to
    /// zero against everything on the other side.
    pub fn check_nondegenerate(&self) -> Result<(), MhError> {
        let (dl, dr) = (self.left.dim(), self.right.dim());
        let rows: Vec<Element> = (0..dl)
            .map(|i| {
                Element::from_terms(
                    self.right.space(),
                    (0..dr).map(|j| (j, self.values[i * dr + j].clone())).collect(),
                )
            })
            .collect();
        if let Some(v) = crate::linmap::kernel_of_columns(dr, &rows).first() {
            let e = Element::from_terms(
                self.left.space(),
                v.iter().cloned().enumerate().collect(),
            );
            return Err(MhError::Verification(format!(
                "pairing is degenerate in the first slot: {} pairs to zero",
                e.display_string()
            )));
        }
        let cols: Vec<Element> = (0..dr)
            .map(|j| {
                Element::from_terms(
                    self.left.space(),
                    (0..dl).map(|i| (i, self.values[i * dr + j].clone())).collect(),
                )
            })
            .collect();
        if let Some(v) = crate::linmap::kernel_of_columns(dl, &cols).first() {
            let e = Element::from_terms(
                self.right.space(),
                v.iter().cloned().enumerate().collect(),
            );
            return Err(MhError::Verification(format!(
                "pairing is degenerate in the second slot: {} pairs to zero",
                e.display_string()
            )));
        }
        Ok(())
    }

    /// x̂▷v = Σ v₀ ⟨v₍₁₎, x̂⟩: the left action of the second slot induced by
    /// a right coaction whose legs pair through the first slot.
    pub fn dual_left_action(&self, coaction: &RightCoaction) -> LeftAction {
        assert!(Space::same_basis(
            coaction.coactor.space(),
            self.left.space()
        ));
        let dl = self.left.dim();
        let source = coaction.source().clone();
        let sweedler: Vec<Element> = (0..source.dim())
            .map(|a| coaction.sweedler(a).clone())
            .collect();
        let values = self.values.clone();
        let dr = self.right.dim();
        let src = source.clone();
        LeftAction::from_rule(&self.right, &source, move |x, a| {
            let mut out = Element::zero(&src);
            for (p, c) in &sweedler[a].terms {
                let (a0, l) = (p / dl, p % dl);
                out.add_scaled(
                    &Element::single(&src, a0, values[l * dr + x].clone()),
                    c,
                );
            }
            out
        })
    }

    /// v◁x̂ = Σ ⟨v₍₋₁₎, x̂⟩ v₀: the right action of the second slot induced
    /// by a left coaction whose legs pair through the first slot.
    pub fn dual_right_action(&self, coaction: &LeftCoaction) -> RightAction {
        assert!(Space::same_basis(
            coaction.coactor.space(),
            self.left.space()
        ));
        let source = coaction.source().clone();
        let da = source.dim();
        let sweedler: Vec<Element> = (0..da)
            .map(|a| coaction.sweedler(a).clone())
            .collect();
        let values = self.values.clone();
        let dr = self.right.dim();
        let src = source.clone();
        RightAction::from_rule(&self.right, &source, move |a, x| {
            let mut out = Element::zero(&src);
            for (p, c) in &sweedler[a].terms {
                let (l, a0) = (p / da, p % da);
                out.add_scaled(
                    &Element::single(&src, a0, values[l * dr + x].clone()),
                    c,
                );
            }
            out
        })
    }
}

/// ⟨g, δ_h⟩ = [g = h], the canonical pairing of a group algebra with the
/// function algebra over the same group table.
pub fn group_pairing(kg: &HopfRef, fg: &HopfRef) -> Pairing {
    let n = kg.dim();
    assert_eq!(fg.dim(), n);
    let mut values = vec![Scalar::zero(); n * n];
    for i in 0..n {
        values[i * n + i] = Scalar::one();
    }
    Pairing::new(kg.clone(), fg.clone(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, packs, FiniteGroup};
    use std::sync::Arc;

    fn hopfs(g: &FiniteGroup) -> (HopfRef, HopfRef) {
        (
            Arc::new(catalog::group_algebra(g)),
            Arc::new(catalog::function_algebra(g)),
        )
    }

    #[test]
    fn group_pairings_satisfy_the_duality_laws() {
        for g in [FiniteGroup::cyclic(4), FiniteGroup::s3()] {
            let (kg, fg) = hopfs(&g);
            let p = group_pairing(&kg, &fg);
            p.check_duality_laws()
                .unwrap_or_else(|e| panic!("duality fails on {}: {e}", g.name));
            p.check_nondegenerate()
                .unwrap_or_else(|e| panic!("degenerate on {}: {e}", g.name));
            p.transpose()
                .check_duality_laws()
                .unwrap_or_else(|e| panic!("transposed duality fails on {}: {e}", g.name));
        }
    }

    #[test]
    fn rank_deficient_pairing_is_rejected_with_a_radical_witness() {
        let g = FiniteGroup::cyclic(2);
        let (kg, fg) = hopfs(&g);
        let ones = vec![Scalar::one(); 4];
        let p = Pairing::new(kg, fg, ones);
        let err = p.check_nondegenerate().expect_err("constant matrix has rank 1");
        assert!(
            err.to_string().contains("degenerate"),
            "unexpected message: {err}"
        );
    }

    #[test]
    fn dual_actions_of_the_group_pairing_are_the_translations() {
        let g = FiniteGroup::s3();
        let (kg, fg) = hopfs(&g);
        // Coaction legs live in f(S3); the actor slot must be kS3.
        let p = group_pairing(&kg, &fg).transpose();
        let left = p.dual_left_action(&packs::delta_right_coaction(&fg));
        let right = p.dual_right_action(&packs::delta_left_coaction(&fg));
        let expect_left = packs::translation_left_action(&g, &kg, &fg);
        let expect_right = packs::translation_right_action(&g, &kg, &fg);
        assert!(
            left.map == expect_left.map,
            "dual left action must be g▷δ_h = δ_(hg⁻¹)"
        );
        assert!(
            right.map == expect_right.map,
            "dual right action must be δ_h◁g = δ_(g⁻¹h)"
        );
        left.check_module().expect("dual left action is a module");
        right.check_module().expect("dual right action is a module");
    }
}
