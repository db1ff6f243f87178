//! Ready-made (co)action bundles on the catalog algebras.
//!
//! The conventions fixed in the catalog module carry over: the left
//! translation action of kG on k(G) is g▷δ_h = δ_{hg⁻¹}, the right one is
//! δ_h◁g = δ_{g⁻¹h}, and coproduct coactions read a Hopf object's Δ as a
//! coaction on its own algebra.

use crate::action::{ActionPack, LeftAction, LeftCoaction, RightAction, RightCoaction};
use crate::element::Element;
use crate::hopf::HopfRef;
use crate::scalar::Scalar;
use crate::space::Space;

use super::FiniteGroup;

/// g▷δ_h = δ_{hg⁻¹}, the left action of kG on k(G) dual to right
/// translation. `kg` and `fg` must come from the same group table.
pub fn translation_left_action(g: &FiniteGroup, kg: &HopfRef, fg: &HopfRef) -> LeftAction {
    assert_eq!(kg.dim(), g.order());
    assert_eq!(fg.dim(), g.order());
    let g = g.clone();
    let target = fg.space().clone();
    let tgt = target.clone();
    LeftAction::from_rule(kg, &target, move |x, h| {
        Element::basis(&tgt, g.mul(h, g.inv(x)))
    })
}

/// δ_h◁g = δ_{g⁻¹h}, the right action of kG on k(G) dual to left
/// translation.
pub fn translation_right_action(g: &FiniteGroup, kg: &HopfRef, fg: &HopfRef) -> RightAction {
    assert_eq!(kg.dim(), g.order());
    assert_eq!(fg.dim(), g.order());
    let g = g.clone();
    let target = fg.space().clone();
    let tgt = target.clone();
    RightAction::from_rule(kg, &target, move |h, x| {
        Element::basis(&tgt, g.mul(g.inv(x), h))
    })
}

/// The coproduct of `q` read as a left coaction of q on its own algebra.
pub fn delta_left_coaction(q: &HopfRef) -> LeftCoaction {
    let co = q.clone();
    LeftCoaction::from_rule(q, q.space(), move |a| co.co.delta_basis(a).clone())
}

/// The coproduct of `q` read as a right coaction of q on its own algebra.
pub fn delta_right_coaction(q: &HopfRef) -> RightCoaction {
    let co = q.clone();
    RightCoaction::from_rule(q, q.space(), move |a| co.co.delta_basis(a).clone())
}

/// x▷c = Σ x₁ c S(x₂), the adjoint action of a Hopf object on its own
/// algebra.
pub fn adjoint_left_action(q: &HopfRef) -> LeftAction {
    let co = q.clone();
    let target = q.space().clone();
    let tgt = target.clone();
    LeftAction::from_rule(q, &target, move |x, c| {
        let alg = &co.algebra;
        let dq = alg.dim();
        let mut out = Element::zero(&tgt);
        for (p, cc) in &co.co.delta_basis(x).terms {
            let (x1, x2) = (p / dq, p % dq);
            let sx2 = co.co.antipode.col(x2);
            for (m, cm) in &alg.mul_basis(x1, c).terms {
                for (s, cs) in &sx2.terms {
                    out.add_scaled(alg.mul_basis(*m, *s), &(&(cc * cm) * cs));
                }
            }
        }
        out
    })
}

/// Γ(a) = Σ_g δ_g ⊗ (g⁻¹▷a), the left k(G)-coaction carried by a left
/// kG-module algebra; here the module is k(G) itself under translation,
/// giving Γ(δ_h) = Σ_g δ_g ⊗ δ_{hg}.
pub fn translation_left_coaction(g: &FiniteGroup, fq: &HopfRef, fa: &HopfRef) -> LeftCoaction {
    assert_eq!(fq.dim(), g.order());
    assert_eq!(fa.dim(), g.order());
    let g = g.clone();
    let tgt = Space::tensor(&[fq.space(), fa.space()]);
    let n = g.order();
    LeftCoaction::from_rule(fq, fa.space(), move |h| {
        Element::from_terms(
            &tgt,
            (0..n)
                .map(|gi| (gi * n + g.mul(h, gi), Scalar::one()))
                .collect(),
        )
    })
}

/// δ_h◁x = δ_{x⁻¹hx}, the right conjugation action of kG on k(G).
pub fn conjugation_right_action(g: &FiniteGroup, kg: &HopfRef, fg: &HopfRef) -> RightAction {
    assert_eq!(kg.dim(), g.order());
    assert_eq!(fg.dim(), g.order());
    let g = g.clone();
    let target = fg.space().clone();
    let tgt = target.clone();
    RightAction::from_rule(kg, &target, move |h, x| {
        Element::basis(&tgt, g.mul(g.mul(g.inv(x), h), x))
    })
}

/// δ_u▷h = [u = h]·h, the left action of k(G) on kG dual to the coproduct
/// of kG. Both objects must list the same group in the same order.
pub fn grading_left_action(fg: &HopfRef, kg: &HopfRef) -> LeftAction {
    assert_eq!(fg.dim(), kg.dim());
    let target = kg.space().clone();
    let tgt = target.clone();
    LeftAction::from_rule(fg, &target, move |u, h| {
        if u == h {
            Element::basis(&tgt, h)
        } else {
            Element::zero(&tgt)
        }
    })
}

/// h◁δ_u = [u = h]·h, the right-handed reading of the grading action.
pub fn grading_right_action(fg: &HopfRef, kg: &HopfRef) -> RightAction {
    assert_eq!(fg.dim(), kg.dim());
    let target = kg.space().clone();
    let tgt = target.clone();
    RightAction::from_rule(fg, &target, move |h, u| {
        if u == h {
            Element::basis(&tgt, h)
        } else {
            Element::zero(&tgt)
        }
    })
}

/// x▷a = xa, multiplication of `q` on its own algebra. A module but not a
/// module algebra unless the product is commutative; useful as a deliberately
/// broken input for compatibility checks.
pub fn left_multiplication_action(q: &HopfRef) -> LeftAction {
    let co = q.clone();
    let target = q.space().clone();
    LeftAction::from_rule(q, &target, move |x, a| co.algebra.mul_basis(x, a).clone())
}

/// k(G) with both translation actions of kG attached.
pub fn translation_bimodule_pack(g: &FiniteGroup, kg: &HopfRef, fg: &HopfRef) -> ActionPack {
    ActionPack::new(fg.algebra.clone())
        .with_left_action(translation_left_action(g, kg, fg))
        .with_right_action(translation_right_action(g, kg, fg))
}

/// A Hopf object's own algebra with Δ read as both coactions.
pub fn delta_bicomodule_pack(q: &HopfRef) -> ActionPack {
    ActionPack::new(q.algebra.clone())
        .with_left_coaction(delta_left_coaction(q))
        .with_right_coaction(delta_right_coaction(q))
}

/// x▷a = ε(x)a over `q`, on the space of `on`.
pub fn trivial_left_action(q: &HopfRef, on: &HopfRef) -> LeftAction {
    LeftAction::trivial(q, on.space())
}

/// a◁x = ε(x)a over `q`, on the space of `on`.
pub fn trivial_right_action(q: &HopfRef, on: &HopfRef) -> RightAction {
    RightAction::trivial(q, on.space())
}

/// Γ(a) = 1⊗a over `q`, on the space of `on`.
pub fn trivial_left_coaction(q: &HopfRef, on: &HopfRef) -> LeftCoaction {
    LeftCoaction::trivial(q, on.space())
}

/// Υ(a) = a⊗1 over `q`, on the space of `on`.
pub fn trivial_right_coaction(q: &HopfRef, on: &HopfRef) -> RightCoaction {
    RightCoaction::trivial(q, on.space())
}
