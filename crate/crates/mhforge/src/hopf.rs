//! Comultiplications in covered form, counits, antipodes, integrals.
//!
//! Coproducts are handled through the canonical maps T₁(x⊗y) = Δ(x)(1⊗y)
//! and T₂(x⊗y) = (x⊗1)Δ(y) on A⊗A. All laws are phrased against T₁/T₂, so
//! the same checks serve unital Hopf algebras and the covered discipline of
//! non-unital comultiplications; a materialized Δ: A→A⊗A exists only in the
//! unital case and feeds the candidate inverses of T₁/T₂.

use std::sync::Arc;

use crate::algebra::{multiply_componentwise, Algebra, AlgebraRef, TripleWitness};
use crate::element::Element;
use crate::error::MhError;
use crate::linmap::LinMap;
use crate::scalar::Scalar;
use crate::space::{Space, SpaceRef};

#[derive(Clone, Debug)]
pub struct CoStructure {
    /// The tensor square A⊗A both canonical maps act on.
    pub sq: SpaceRef,
    pub t1: LinMap,
    pub t2: LinMap,
    /// Counit coefficients per basis vector.
    pub counit: Vec<Scalar>,
    pub antipode: LinMap,
    pub antipode_inv: Option<LinMap>,
    /// Materialized coproduct (unital case), source of Sweedler legs.
    pub delta: Option<LinMap>,
}

#[derive(Clone, Debug)]
pub struct HopfObject {
    pub algebra: AlgebraRef,
    pub co: CoStructure,
}

pub type HopfRef = Arc<HopfObject>;

impl CoStructure {
    /// Builds T₁/T₂ from a materialized coproduct on a unital algebra:
    /// T₁(x⊗y) = Δ(x)·(1⊗y), T₂(x⊗y) = (x⊗1)·Δ(y).
    pub fn from_delta(
        alg: &Algebra,
        delta: LinMap,
        counit: Vec<Scalar>,
        antipode: LinMap,
    ) -> Result<Self, MhError> {
        let sq = Space::tensor(&[&alg.space, &alg.space]);
        let one = alg.unit_element()?;
        let d = alg.dim();
        assert_eq!(counit.len(), d);
        let t1 = LinMap::from_fn(&sq, &sq, |i| {
            let (x, y) = (i / d, i % d);
            let rhs = one.tensor(&Element::basis(&alg.space, y), &sq);
            multiply_componentwise(&[alg, alg], delta.col(x), &rhs)
        });
        let t2 = LinMap::from_fn(&sq, &sq, |i| {
            let (x, y) = (i / d, i % d);
            let lhs = Element::basis(&alg.space, x).tensor(one, &sq);
            multiply_componentwise(&[alg, alg], &lhs, delta.col(y))
        });
        let antipode_inv = antipode.inverse().ok();
        Ok(CoStructure {
            sq,
            t1,
            t2,
            counit,
            antipode,
            antipode_inv,
            delta: Some(delta),
        })
    }

    pub fn delta_basis(&self, i: usize) -> &Element {
        self.delta
            .as_ref()
            .expect("materialized coproduct required")
            .col(i)
    }
}

/// Applies a functional to the first leg of an element of A⊗A.
pub fn contract_left(phi: &[Scalar], e: &Element, target: &SpaceRef) -> Element {
    let d = target.dim();
    let terms = e
        .terms
        .iter()
        .map(|(i, c)| (i % d, &phi[i / d] * c))
        .collect();
    Element::from_terms(target, terms)
}

/// Applies a functional to the second leg of an element of A⊗A.
pub fn contract_right(phi: &[Scalar], e: &Element, target: &SpaceRef) -> Element {
    let d = target.dim();
    let terms = e
        .terms
        .iter()
        .map(|(i, c)| (i / d, &phi[i % d] * c))
        .collect();
    Element::from_terms(target, terms)
}

impl HopfObject {
    pub fn new(algebra: AlgebraRef, co: CoStructure) -> Self {
        HopfObject { algebra, co }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn space(&self) -> &SpaceRef {
        &self.algebra.space
    }

    pub fn delta(&self, e: &Element) -> Element {
        let dm = self.co.delta.as_ref().expect("materialized coproduct required");
        dm.apply(e)
    }

    pub fn counit(&self, e: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, c) in &e.terms {
            acc = &acc + &(&self.co.counit[*i] * c);
        }
        acc
    }

    pub fn antipode(&self, e: &Element) -> Element {
        self.co.antipode.apply(e)
    }

    pub fn antipode_inv(&self) -> Result<&LinMap, MhError> {
        self.co.antipode_inv.as_ref().ok_or_else(|| {
            MhError::Unsupported(format!("antipode of {} is not invertible", self.algebra.name))
        })
    }

    /// Counit is an algebra map and kills nothing it shouldn't: ε(xy) =
    /// ε(x)ε(y) on all basis pairs, plus ε(1) = 1 when a unit exists.
    pub fn check_counit_multiplicative(&self) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let d = alg.dim();
        if let Some(u) = &alg.unit {
            let e1 = self.counit(u);
            if !e1.is_one() {
                return Err(TripleWitness {
                    indices: vec![],
                    labels: vec!["1".into()],
                    lhs: Element::zero(&alg.space),
                    rhs: Element::zero(&alg.space),
                });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = self.counit(alg.mul_basis(i, j));
                let rhs = &self.co.counit[i] * &self.co.counit[j];
                if lhs != rhs {
                    return Err(TripleWitness {
                        indices: vec![i, j],
                        labels: vec![alg.space.label(i), alg.space.label(j)],
                        lhs: Element::single(&alg.space, 0, lhs),
                        rhs: Element::single(&alg.space, 0, rhs),
                    });
                }
            }
        }
        Ok(())
    }

    /// Covered homomorphism law: T₁(ab⊗c) = Δ(a)·T₁(b⊗c), where the
    /// multiplier Δ(a) acts through T₁ itself. Works without a unit.
    pub fn check_delta_homomorphism(&self) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let d = alg.dim();
        let sq = &self.co.sq;
        for a in 0..d {
            for b in 0..d {
                let ab = alg.mul_basis(a, b);
                for c in 0..d {
                    let mut lhs = Element::zero(sq);
                    for (t, s) in &ab.terms {
                        lhs.add_scaled(self.co.t1.col(t * d + c), s);
                    }
                    // Δ(a)·(u⊗v) = T₁(a⊗v)·(u⊗1), applied to each term of
                    // T₁(b⊗c).
                    let inner = self.co.t1.col(b * d + c);
                    let mut rhs = Element::zero(sq);
                    for (i, s) in &inner.terms {
                        let (u, v) = (i / d, i % d);
                        let t1av = self.co.t1.col(a * d + v);
                        let mover = Element::from_terms(
                            sq,
                            t1av
                                .terms
                                .iter()
                                .map(|(k, cc)| {
                                    let (p, q) = (k / d, k % d);
                                    let pu = alg.mul_basis(p, u);
                                    (pu, q, cc)
                                })
                                .flat_map(|(pu, q, cc)| {
                                    pu.terms
                                        .iter()
                                        .map(move |(w, cw)| (w * d + q, cc * cw))
                                        .collect::<Vec<_>>()
                                })
                                .collect(),
                        );
                        rhs.add_scaled(&mover, s);
                    }
                    if lhs != rhs {
                        return Err(TripleWitness {
                            indices: vec![a, b, c],
                            labels: vec![
                                alg.space.label(a),
                                alg.space.label(b),
                                alg.space.label(c),
                            ],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Materialized-coproduct homomorphism: Δ(xy) = Δ(x)Δ(y).
    pub fn check_delta_multiplicative(&self) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let Some(delta) = &self.co.delta else { return Ok(()) };
        let d = alg.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = delta.apply(alg.mul_basis(i, j));
                let rhs = multiply_componentwise(&[alg, alg], delta.col(i), delta.col(j));
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

    /// Coassociativity in covered form: (T₂⊗id)(id⊗T₁) = (id⊗T₁)(T₂⊗id) on
    /// A⊗A⊗A, evaluated by direct index arithmetic on basis triples.
    pub fn check_coassociativity(&self) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let d = alg.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    // (T₂⊗id)(id⊗T₁): T₁ on legs (2,3), then T₂ on legs (1,2).
                    let mut side_a: Vec<(usize, Scalar)> = Vec::new();
                    for (p, c) in &self.co.t1.col(j * d + k).terms {
                        let (j1, k1) = (p / d, p % d);
                        for (q, c2) in &self.co.t2.col(i * d + j1).terms {
                            let (i2, j2) = (q / d, q % d);
                            side_a.push((i2 * d * d + j2 * d + k1, c * c2));
                        }
                    }
                    // (id⊗T₁)(T₂⊗id): T₂ on legs (1,2), then T₁ on legs (2,3).
                    let mut side_b: Vec<(usize, Scalar)> = Vec::new();
                    for (p, c) in &self.co.t2.col(i * d + j).terms {
                        let (i1, j1) = (p / d, p % d);
                        for (q, c2) in &self.co.t1.col(j1 * d + k).terms {
                            let (j2, k2) = (q / d, q % d);
                            side_b.push((i1 * d * d + j2 * d + k2, c * c2));
                        }
                    }
                    let cube = Space::tensor(&[&alg.space, &alg.space, &alg.space]);
                    let ea = Element::from_terms(&cube, side_a);
                    let eb = Element::from_terms(&cube, side_b);
                    if ea != eb {
                        return Err(TripleWitness {
                            indices: vec![i, j, k],
                            labels: vec![
                                alg.space.label(i),
                                alg.space.label(j),
                                alg.space.label(k),
                            ],
                            lhs: ea,
                            rhs: eb,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// (ε⊗id)T₁(a⊗b) = ab and (id⊗ε)T₂(a⊗b) = ab on all basis pairs.
    pub fn check_counit_laws(&self) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let d = alg.dim();
        for i in 0..d {
            for j in 0..d {
                let prod = alg.mul_basis(i, j);
                let left = contract_left(&self.co.counit, self.co.t1.col(i * d + j), &alg.space);
                if &left != prod {
                    return Err(TripleWitness {
                        indices: vec![i, j],
                        labels: vec![alg.space.label(i), alg.space.label(j)],
                        lhs: left,
                        rhs: prod.clone(),
                    });
                }
                let right = contract_right(&self.co.counit, self.co.t2.col(i * d + j), &alg.space);
                if &right != prod {
                    return Err(TripleWitness {
                        indices: vec![i, j],
                        labels: vec![alg.space.label(i), alg.space.label(j)],
                        lhs: right,
                        rhs: prod.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// m(S⊗id)T₁(a⊗b) = ε(a)b and m(id⊗S)T₂(a⊗b) = ε(b)a on all basis pairs.
    pub fn check_antipode_laws(&self) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let d = alg.dim();
        let s = &self.co.antipode;
        for i in 0..d {
            for j in 0..d {
                let mut lhs = Element::zero(&alg.space);
                for (p, c) in &self.co.t1.col(i * d + j).terms {
                    let (x, y) = (p / d, p % d);
                    lhs.add_scaled(&alg.multiply(s.col(x), &Element::basis(&alg.space, y)), c);
                }
                let rhs = Element::single(&alg.space, j, self.co.counit[i].clone());
                if lhs != rhs {
                    return Err(TripleWitness {
                        indices: vec![i, j],
                        labels: vec![alg.space.label(i), alg.space.label(j)],
                        lhs,
                        rhs,
                    });
                }
                let mut lhs2 = Element::zero(&alg.space);
                for (p, c) in &self.co.t2.col(i * d + j).terms {
                    let (x, y) = (p / d, p % d);
                    lhs2.add_scaled(&alg.multiply(&Element::basis(&alg.space, x), s.col(y)), c);
                }
                let rhs2 = Element::single(&alg.space, i, self.co.counit[j].clone());
                if lhs2 != rhs2 {
                    return Err(TripleWitness {
                        indices: vec![i, j],
                        labels: vec![alg.space.label(i), alg.space.label(j)],
                        lhs: lhs2,
                        rhs: rhs2,
                    });
                }
            }
        }
        Ok(())
    }

    /// Certifies bijectivity of T₁ and T₂. The antipode-built candidate
    /// inverses are tried first (T₁⁻¹(x⊗y) = Σ x₁⊗S(x₂)y and the mirrored
    /// form); exact elimination is the fallback so a rank-deficient map
    /// yields a kernel witness.
    pub fn check_t_bijective(&self) -> Result<(LinMap, LinMap), MhError> {
        let alg = &self.algebra;
        let d = alg.dim();
        let sq = &self.co.sq;
        if let (Some(delta), s) = (&self.co.delta, &self.co.antipode) {
            let t1_cand = LinMap::from_fn(sq, sq, |i| {
                let (x, y) = (i / d, i % d);
                let mut out = Element::zero(sq);
                for (p, c) in &delta.col(x).terms {
                    let (x1, x2) = (p / d, p % d);
                    let tail = alg.multiply(s.col(x2), &Element::basis(&alg.space, y));
                    out.add_scaled(&Element::basis(&alg.space, x1).tensor(&tail, sq), c);
                }
                out
            });
            let t2_cand = LinMap::from_fn(sq, sq, |i| {
                let (x, y) = (i / d, i % d);
                let mut out = Element::zero(sq);
                for (p, c) in &delta.col(y).terms {
                    let (y1, y2) = (p / d, p % d);
                    let head = alg.multiply(&Element::basis(&alg.space, x), s.col(y1));
                    out.add_scaled(&head.tensor(&Element::basis(&alg.space, y2), sq), c);
                }
                out
            });
            if self.co.t1.is_two_sided_inverse(&t1_cand)
                && self.co.t2.is_two_sided_inverse(&t2_cand)
            {
                return Ok((t1_cand, t2_cand));
            }
        }
        let t1_inv = self.co.t1.inverse()?;
        let t2_inv = self.co.t2.inverse()?;
        Ok((t1_inv, t2_inv))
    }

    /// The full multiplier-Hopf contract on a finite instance: counit and
    /// antipode covered laws, coassociativity, homomorphism property, and
    /// bijectivity of the canonical maps.
    pub fn check_multiplier_hopf(&self) -> Result<(), MhError> {
        let fail = |law: &str, w: TripleWitness| {
            MhError::Verification(format!("{} fails {law} {}", self.algebra.name, w.describe()))
        };
        self.check_delta_homomorphism()
            .map_err(|w| fail("coproduct homomorphism law", w))?;
        self.check_delta_multiplicative()
            .map_err(|w| fail("coproduct multiplicativity", w))?;
        self.check_coassociativity()
            .map_err(|w| fail("coassociativity", w))?;
        self.check_counit_multiplicative()
            .map_err(|w| fail("counit homomorphism law", w))?;
        self.check_counit_laws().map_err(|w| fail("counit law", w))?;
        self.check_antipode_laws()
            .map_err(|w| fail("antipode law", w))?;
        self.check_t_bijective()?;
        Ok(())
    }

    /// Regularity: the antipode is invertible and the co-opposite structure
    /// is again multiplier Hopf.
    pub fn check_regular(&self) -> Result<(), MhError> {
        self.antipode_inv()?;
        let si = self.co.antipode_inv.as_ref().expect("checked above");
        if !self.co.antipode.is_two_sided_inverse(si) {
            return Err(MhError::Verification(format!(
                "antipode inverse of {} is one-sided only",
                self.algebra.name
            )));
        }
        self.cop()?.check_multiplier_hopf()
    }

    /// Co-opposite Hopf object: Δ^cop = τΔ, same counit, antipode S⁻¹.
    pub fn cop(&self) -> Result<HopfObject, MhError> {
        let alg = &self.algebra;
        let delta = self.co.delta.as_ref().ok_or_else(|| {
            MhError::Unsupported("co-opposite needs a materialized coproduct".into())
        })?;
        let d = alg.dim();
        let flipped = LinMap::from_fn(&alg.space, &self.co.sq, |i| {
            let terms = delta
                .col(i)
                .terms
                .iter()
                .map(|(p, c)| ((p % d) * d + p / d, c.clone()))
                .collect();
            Element::from_terms(&self.co.sq, terms)
        });
        let s_inv = self.antipode_inv()?.clone();
        let mut a2 = (**alg).clone();
        a2.name = format!("{}^cop", alg.name);
        let co = CoStructure::from_delta(&a2, flipped, self.co.counit.clone(), s_inv)?;
        Ok(HopfObject::new(Arc::new(a2), co))
    }

    /// Opposite Hopf object: reversed product, same coproduct, antipode S⁻¹.
    pub fn op(&self) -> Result<HopfObject, MhError> {
        let alg = &self.algebra;
        let delta = self.co.delta.as_ref().ok_or_else(|| {
            MhError::Unsupported("opposite needs a materialized coproduct".into())
        })?;
        let opp = Arc::new(alg.opposite());
        let s_inv = self.antipode_inv()?.clone();
        let co = CoStructure::from_delta(&opp, delta.clone(), self.co.counit.clone(), s_inv)?;
        Ok(HopfObject::new(opp, co))
    }

    /// Left invariance: (id⊗φ)Δ(a) = φ(a)1, covered as
    /// (id⊗φ)T₂(x⊗y) = φ(y)x on all basis pairs.
    pub fn check_left_integral(&self, phi: &[Scalar]) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let d = alg.dim();
        if phi.iter().all(|c| c.is_zero()) {
            return Err(TripleWitness {
                indices: vec![],
                labels: vec!["zero functional".into()],
                lhs: Element::zero(&alg.space),
                rhs: Element::zero(&alg.space),
            });
        }
        for x in 0..d {
            for y in 0..d {
                let lhs = contract_right(phi, self.co.t2.col(x * d + y), &alg.space);
                let rhs = Element::single(&alg.space, x, phi[y].clone());
                if lhs != rhs {
                    return Err(TripleWitness {
                        indices: vec![x, y],
                        labels: vec![alg.space.label(x), alg.space.label(y)],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        Ok(())
    }

    /// Right invariance: (ψ⊗id)Δ(x) = ψ(x)1, covered as
    /// (ψ⊗id)T₁(x⊗y) = ψ(x)y on all basis pairs.
    pub fn check_right_integral(&self, psi: &[Scalar]) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let d = alg.dim();
        if psi.iter().all(|c| c.is_zero()) {
            return Err(TripleWitness {
                indices: vec![],
                labels: vec!["zero functional".into()],
                lhs: Element::zero(&alg.space),
                rhs: Element::zero(&alg.space),
            });
        }
        for x in 0..d {
            for y in 0..d {
                let lhs = contract_left(psi, self.co.t1.col(x * d + y), &alg.space);
                let rhs = Element::single(&alg.space, y, psi[x].clone());
                if lhs != rhs {
                    return Err(TripleWitness {
                        indices: vec![x, y],
                        labels: vec![alg.space.label(x), alg.space.label(y)],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        Ok(())
    }

    /// The modular element δ with (φ⊗id)Δ(b) = φ(b)δ for a left integral φ,
    /// certified in covered form (φ⊗id)T₁(b⊗c) = φ(b)·δc on all basis pairs.
    pub fn modular_element(&self, phi: &[Scalar]) -> Result<Element, MhError> {
        let alg = &self.algebra;
        let d = alg.dim();
        let a0 = (0..d)
            .find(|&i| !phi[i].is_zero())
            .ok_or_else(|| MhError::Input("zero functional has no modular element".into()))?;
        let scale = phi[a0].inverse().expect("nonzero");
        let delta_el = contract_left(phi, self.co.delta.as_ref().unwrap().col(a0), &alg.space)
            .scale(&scale);
        for b in 0..d {
            for c in 0..d {
                let lhs = contract_left(phi, self.co.t1.col(b * d + c), &alg.space);
                let rhs = alg
                    .multiply(&delta_el, &Element::basis(&alg.space, c))
                    .scale(&phi[b]);
                if lhs != rhs {
                    return Err(MhError::Verification(format!(
                        "modular law fails at ({}, {}): lhs = {}, rhs = {}",
                        alg.space.label(b),
                        alg.space.label(c),
                        lhs.display_string(),
                        rhs.display_string()
                    )));
                }
            }
        }
        Ok(delta_el)
    }

    /// Hopf-*-compatibility: Δ(a*) = (*⊗*)Δ(a) on all basis vectors.
    pub fn check_star_coproduct(&self) -> Result<(), TripleWitness> {
        let alg = &self.algebra;
        let (Some(delta), Some(st)) = (&self.co.delta, &alg.star) else {
            return Ok(());
        };
        let d = alg.dim();
        for i in 0..d {
            let a_star = st.apply_antilinear(&Element::basis(&alg.space, i));
            let lhs = delta.apply(&a_star);
            let rhs = Element::from_terms(
                &self.co.sq,
                delta
                    .col(i)
                    .terms
                    .iter()
                    .flat_map(|(p, c)| {
                        let s1 = st.apply_antilinear(&Element::basis(&alg.space, p / d));
                        let s2 = st.apply_antilinear(&Element::basis(&alg.space, p % d));
                        let mut out = Vec::new();
                        for (u, cu) in &s1.terms {
                            for (v, cv) in &s2.terms {
                                out.push((u * d + v, &(cu * cv) * &c.conj()));
                            }
                        }
                        out
                    })
                    .collect(),
            );
            if lhs != rhs {
                return Err(TripleWitness {
                    indices: vec![i],
                    labels: vec![alg.space.label(i)],
                    lhs,
                    rhs,
                });
            }
        }
        Ok(())
    }
}
