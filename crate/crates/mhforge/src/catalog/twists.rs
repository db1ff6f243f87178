//! Named twist elements over the catalog group algebras.
//!
//! Each builder returns a plain element of the tensor square; certification
//! of the cocycle and counit laws happens in `DrinfeldTwist::certified`.
//! Every element here is its own inverse.

use crate::element::Element;
use crate::hopf::HopfRef;
use crate::scalar::Scalar;

/// The symmetric bicharacter twist on the Klein group algebra: all sixteen
/// group pairs, weighted by (-1)^(a(g)b(h)+b(g)a(h))/4 in the bitmask
/// coordinates g = (a(g), b(g)) of kC2xC2.
pub fn klein_bicharacter_twist(kg: &HopfRef) -> Element {
    assert_eq!(kg.dim(), 4, "the Klein twist needs the 4-dim group algebra");
    let quarter = Scalar::rational(1, 4);
    let mut terms = Vec::with_capacity(16);
    for g in 0..4usize {
        for h in 0..4usize {
            let exponent = (g & 1) * ((h >> 1) & 1) + ((g >> 1) & 1) * (h & 1);
            let c = if exponent % 2 == 0 {
                quarter.clone()
            } else {
                -&quarter
            };
            terms.push((g * 4 + h, c));
        }
    }
    Element::from_terms(&kg.co.sq, terms)
}

/// The one-directional phase twist on the Klein group algebra, four pairs
/// with coefficients ±1/2: (e⊗e + e⊗b + a⊗e − a⊗b)/2. Unlike the symmetric
/// twist its flip differs from itself, so the products it deforms can lose
/// commutativity.
pub fn klein_phase_twist(kg: &HopfRef) -> Element {
    assert_eq!(kg.dim(), 4, "the phase twist needs the 4-dim group algebra");
    let half = Scalar::rational(1, 2);
    Element::from_terms(
        &kg.co.sq,
        vec![
            (0, half.clone()),
            (2, half.clone()),
            (4, half.clone()),
            (6, -&half),
        ],
    )
}

/// The twist supported on a single involution s of a group algebra:
/// (1⊗1 + 1⊗s + s⊗1 − s⊗s)/2. On a noncommutative group algebra it moves
/// the coproduct, which makes it the smallest instance whose deformation
/// is visible at the Hopf level.
pub fn involution_twist(q: &HopfRef, s: usize) -> Element {
    let alg = &q.algebra;
    let one = alg.unit_element().expect("group algebras are unital");
    let sv = Element::basis(&alg.space, s);
    assert_eq!(
        &alg.multiply(&sv, &sv),
        one,
        "the support of the involution twist must square to the unit"
    );
    let half = Scalar::rational(1, 2);
    let mut out = one.tensor(one, &q.co.sq).scale(&half);
    out = out.add(&one.tensor(&sv, &q.co.sq).scale(&half));
    out = out.add(&sv.tensor(one, &q.co.sq).scale(&half));
    out.add(&sv.tensor(&sv, &q.co.sq).scale(&half).neg())
}
