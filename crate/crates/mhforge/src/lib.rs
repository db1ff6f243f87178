//! mhforge: exact construction and exhaustive verification of twisted tensor
//! products of (multiplier) Hopf algebras.
//!
//! Everything is computed over Q or Q(i) with sparse exact arithmetic. The
//! library builds twisted products A#B from a twist pair (R, T), the smash /
//! twisted-smash / L-R-smash family from (co)actions, two-sided products,
//! Long twisted products, Drinfeld twist deformations and the Drinfeld
//! double — and certifies every defining law and isomorphism claim by
//! checking all basis tuples, reporting an exact counterexample when one
//! exists.

pub mod action;
pub mod algebra;
pub mod catalog;
pub mod element;
pub mod error;
pub mod hopf;
pub mod linmap;
pub mod multiplier;
pub mod pairing;
pub mod par;
pub mod scalar;
pub mod smash;
pub mod space;
pub mod tensor;
pub mod twist;

pub use action::{ActionPack, LeftAction, LeftCoaction, LongVariant, RightAction, RightCoaction};
pub use algebra::{
    center_dimension, certify_algebra_isomorphism, Algebra, AlgebraRef, TripleWitness,
};
pub use element::Element;
pub use error::MhError;
pub use hopf::{CoStructure, HopfObject, HopfRef};
pub use linmap::LinMap;
pub use multiplier::Multiplier;
pub use pairing::Pairing;
pub use scalar::Scalar;
pub use smash::{
    coproduct_exchange_pair, iterated_smash_associativity, left_f_smash, left_smash,
    lr_left_over_coproduct, lr_left_smash,
    lr_right_smash, lr_vs_twisted_left, lr_vs_twisted_right, mixed_smash_associativity,
    right_f_smash, right_smash, smash_duality, twisted_left_smash, twisted_right_smash,
    BialgebraMap, CoproductLegs, MixedAssociativity, ProductIso, SmashDuality,
};
pub use space::{AtomSpace, Space, SpaceRef};
pub use twist::{
    build_hopf_twisted, build_multiplier_hopf_twisted, condition_survey, coproduct_candidates,
    integral_twisted, modular_twisted, ConditionStatus, LawWitness, TwistPair, TwistedProduct,
};
