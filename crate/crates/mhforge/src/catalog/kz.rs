//! Windowed slices of K(ℤ), the finitely supported functions on ℤ.
//!
//! K(ℤ) has no unit (the constant 1 is not finitely supported), so the
//! coproduct Δ(f)(x, y) = f(x + y) only exists through its covers
//! T₁(δ_a⊗δ_b) = Δ(δ_a)(1⊗δ_b) = δ_{a−b}⊗δ_b and
//! T₂(δ_a⊗δ_b) = (δ_a⊗1)Δ(δ_b) = δ_a⊗δ_{b−a}.
//! A window of radius N holds {δ_n : |n| ≤ N}; the covers leave it, landing
//! in the radius-2N window, so every law here is checked across window
//! sizes rather than inside one space. Basis labels are sign-prefixed and
//! zero-padded ("m03" for δ₋₃, "p00" for δ₀) so that every window agrees
//! with every larger one label by label.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraRef, LocalUnitStrategy};
use crate::element::Element;
use crate::error::MhError;
use crate::linmap::LinMap;
use crate::scalar::Scalar;
use crate::space::{AtomSpace, Space, SpaceRef};

#[derive(Clone, Debug)]
pub struct KzWindow {
    pub radius: i64,
    pub algebra: AlgebraRef,
    /// ε(δ_n) = [n = 0].
    pub counit: Vec<Scalar>,
    /// S(δ_n) = δ_{−n}.
    pub antipode: LinMap,
    /// Two-sided invariant functional: summation over the window.
    pub integral: Vec<Scalar>,
}

/// Contracts the first leg of a two-leg element whose second leg has the
/// given dimension.
fn contract_first(phi: &[Scalar], e: &Element, second_dim: usize, target: &SpaceRef) -> Element {
    Element::from_terms(
        target,
        e.terms
            .iter()
            .map(|(i, c)| (i % second_dim, &phi[i / second_dim] * c))
            .collect(),
    )
}

/// Contracts the second leg of a two-leg element whose second leg has the
/// given dimension.
fn contract_second(phi: &[Scalar], e: &Element, second_dim: usize, target: &SpaceRef) -> Element {
    Element::from_terms(
        target,
        e.terms
            .iter()
            .map(|(i, c)| (i / second_dim, &phi[i % second_dim] * c))
            .collect(),
    )
}

impl KzWindow {
    pub fn label_of(n: i64) -> String {
        format!("{}{:02}", if n < 0 { 'm' } else { 'p' }, n.abs())
    }

    pub fn new(radius: i64) -> Self {
        assert!(radius >= 1);
        let dim = (2 * radius + 1) as usize;
        let labels = (-radius..=radius).map(Self::label_of).collect();
        let sp = Space::atomic(AtomSpace::new(format!("KZ:{radius}"), labels).expect("kz labels"));
        let mut alg = Algebra::from_rule(format!("KZ:{radius}"), sp.clone(), None, {
            let sp = sp.clone();
            move |i, j| {
                if i == j {
                    Element::basis(&sp, i)
                } else {
                    Element::zero(&sp)
                }
            }
        });
        alg.local_units = LocalUnitStrategy::OrthogonalIdempotents;
        alg.star = Some(LinMap::identity(&sp));
        let counit = (0..dim)
            .map(|i| {
                if i as i64 == radius {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        let antipode = LinMap::from_fn(&sp, &sp, |i| Element::basis(&sp, dim - 1 - i));
        KzWindow {
            radius,
            algebra: Arc::new(alg),
            counit,
            antipode,
            integral: vec![Scalar::one(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        (2 * self.radius + 1) as usize
    }

    pub fn space(&self) -> &SpaceRef {
        &self.algebra.space
    }

    pub fn index(&self, n: i64) -> usize {
        debug_assert!(n.abs() <= self.radius);
        (n + self.radius) as usize
    }

    pub fn value(&self, i: usize) -> i64 {
        i as i64 - self.radius
    }

    /// T₁(δ_a⊗δ_b) = δ_{a−b}⊗δ_b, landing in big⊗self. The receiving window
    /// must hold radius ≥ 2N so no support is clipped.
    pub fn t1_into(&self, big: &KzWindow) -> Result<LinMap, MhError> {
        if big.radius < 2 * self.radius {
            return Err(MhError::Input(format!(
                "window {} cannot hold covers of window {}",
                big.radius, self.radius
            )));
        }
        let d = self.dim();
        let src = Space::tensor(&[self.space(), self.space()]);
        let tgt = Space::tensor(&[big.space(), self.space()]);
        Ok(LinMap::from_fn(&src, &tgt, |i| {
            let (a, b) = (self.value(i / d), self.value(i % d));
            Element::basis(&tgt, big.index(a - b) * d + self.index(b))
        }))
    }

    /// T₂(δ_a⊗δ_b) = δ_a⊗δ_{b−a}, landing in self⊗big.
    pub fn t2_into(&self, big: &KzWindow) -> Result<LinMap, MhError> {
        if big.radius < 2 * self.radius {
            return Err(MhError::Input(format!(
                "window {} cannot hold covers of window {}",
                big.radius, self.radius
            )));
        }
        let d = self.dim();
        let src = Space::tensor(&[self.space(), self.space()]);
        let tgt = Space::tensor(&[self.space(), big.space()]);
        Ok(LinMap::from_fn(&src, &tgt, |i| {
            let (a, b) = (self.value(i / d), self.value(i % d));
            Element::basis(&tgt, self.index(a) * big.dim() + big.index(b - a))
        }))
    }

    /// Per-block bijectivity of the covers: with the second leg frozen at
    /// δ_b, T₁ is injective on the window, and every δ_c⊗δ_b in the window
    /// square has exactly one preimage with first leg drawn from the double
    /// window. Mirrored for T₂.
    pub fn check_block_bijective(&self) -> Result<(), MhError> {
        let big = KzWindow::new(2 * self.radius);
        let t1 = self.t1_into(&big)?;
        let t2 = self.t2_into(&big)?;
        let d = self.dim();
        for b in 0..d {
            let mut seen = vec![false; big.dim()];
            for a in 0..d {
                let col = t1.col(a * d + b);
                if col.terms.len() != 1 || !col.terms[0].1.is_one() {
                    return Err(MhError::Verification(format!(
                        "T1 column at ({a}, {b}) is not a basis vector"
                    )));
                }
                let (first, second) = (col.terms[0].0 / d, col.terms[0].0 % d);
                if second != b {
                    return Err(MhError::Verification(format!(
                        "T1 moved the frozen leg at ({a}, {b})"
                    )));
                }
                if seen[first] {
                    return Err(MhError::Verification(format!(
                        "T1 block at second leg {b} is not injective"
                    )));
                }
                seen[first] = true;
            }
        }
        // Surjectivity onto the small window: solve T₁(u⊗δ_b) = δ_c⊗δ_b with
        // u from the double window.
        let t1_big = big.t1_into(&KzWindow::new(4 * self.radius))?;
        for c in 0..d {
            for b in 0..d {
                let want_first = self.value(c);
                let mut hits = 0usize;
                for u in 0..big.dim() {
                    let col = t1_big.col(u * big.dim() + big.index(self.value(b)));
                    let first_val = KzWindow::new(4 * self.radius).value(col.terms[0].0 / big.dim());
                    if first_val == want_first {
                        hits += 1;
                    }
                }
                if hits != 1 {
                    return Err(MhError::Verification(format!(
                        "T1 window preimage count {hits} at ({}, {})",
                        Self::label_of(self.value(c)),
                        Self::label_of(self.value(b))
                    )));
                }
            }
        }
        for a in 0..d {
            let mut seen = vec![false; big.dim()];
            for b in 0..d {
                let col = t2.col(a * d + b);
                let (first, second) = (col.terms[0].0 / big.dim(), col.terms[0].0 % big.dim());
                if first != a {
                    return Err(MhError::Verification(format!(
                        "T2 moved the frozen leg at ({a}, {b})"
                    )));
                }
                if seen[second] {
                    return Err(MhError::Verification(format!(
                        "T2 block at first leg {a} is not injective"
                    )));
                }
                seen[second] = true;
            }
        }
        Ok(())
    }

    /// Covered counit laws (ε⊗id)T₁(a⊗b) = ab and (id⊗ε)T₂(a⊗b) = ab, with
    /// the contracted leg evaluated through the double window's counit.
    pub fn check_counit_covered(&self) -> Result<(), MhError> {
        let big = KzWindow::new(2 * self.radius);
        let t1 = self.t1_into(&big)?;
        let t2 = self.t2_into(&big)?;
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                let prod = self.algebra.mul_basis(a, b);
                let lhs1 = contract_first(&big.counit, t1.col(a * d + b), d, self.space());
                if &lhs1 != prod {
                    return Err(MhError::Verification(format!(
                        "counit cover fails through T1 at ({}, {})",
                        self.space().label(a),
                        self.space().label(b)
                    )));
                }
                let lhs2 = contract_second(&big.counit, t2.col(a * d + b), big.dim(), self.space());
                if &lhs2 != prod {
                    return Err(MhError::Verification(format!(
                        "counit cover fails through T2 at ({}, {})",
                        self.space().label(a),
                        self.space().label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Covered antipode laws m(S⊗id)T₁(a⊗b) = ε(a)δ_b and
    /// m(id⊗S)T₂(a⊗b) = ε(b)δ_a, products taken in the double window.
    pub fn check_antipode_covered(&self) -> Result<(), MhError> {
        let big = KzWindow::new(2 * self.radius);
        let t1 = self.t1_into(&big)?;
        let t2 = self.t2_into(&big)?;
        let d = self.dim();
        let embed = |i: usize| big.index(self.value(i));
        for a in 0..d {
            for b in 0..d {
                let mut lhs = Element::zero(big.space());
                for (p, c) in &t1.col(a * d + b).terms {
                    let (x, y) = (p / d, p % d);
                    let sx = big.antipode.col(x);
                    for (sxi, sc) in &sx.terms {
                        lhs.add_scaled(big.algebra.mul_basis(*sxi, embed(y)), &(c * sc));
                    }
                }
                let rhs = Element::single(big.space(), embed(b), self.counit[a].clone());
                if lhs != rhs {
                    return Err(MhError::Verification(format!(
                        "antipode cover fails through T1 at ({}, {})",
                        self.space().label(a),
                        self.space().label(b)
                    )));
                }
                let mut lhs2 = Element::zero(big.space());
                for (p, c) in &t2.col(a * d + b).terms {
                    let (x, y) = (p / big.dim(), p % big.dim());
                    for (syi, sc) in &big.antipode.col(y).terms {
                        lhs2.add_scaled(big.algebra.mul_basis(embed(x), *syi), &(c * sc));
                    }
                }
                let rhs2 = Element::single(big.space(), embed(a), self.counit[b].clone());
                if lhs2 != rhs2 {
                    return Err(MhError::Verification(format!(
                        "antipode cover fails through T2 at ({}, {})",
                        self.space().label(a),
                        self.space().label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Left and right invariance of the summation functional, contracted
    /// through the double window: (id⊗φ)T₂(x⊗y) = φ(y)x and
    /// (φ⊗id)T₁(x⊗y) = φ(x)y.
    pub fn check_integral_covered(&self) -> Result<(), MhError> {
        let big = KzWindow::new(2 * self.radius);
        let t1 = self.t1_into(&big)?;
        let t2 = self.t2_into(&big)?;
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                let left = contract_second(&big.integral, t2.col(x * d + y), big.dim(), self.space());
                if left != Element::single(self.space(), x, self.integral[y].clone()) {
                    return Err(MhError::Verification(format!(
                        "left invariance fails at ({}, {})",
                        self.space().label(x),
                        self.space().label(y)
                    )));
                }
                let right = contract_first(&big.integral, t1.col(x * d + y), d, self.space());
                if right != Element::single(self.space(), y, self.integral[x].clone()) {
                    return Err(MhError::Verification(format!(
                        "right invariance fails at ({}, {})",
                        self.space().label(x),
                        self.space().label(y)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Structure constants and covers of the smaller window must be the
    /// label-for-label restriction of the larger window's.
    pub fn check_window_stable(&self, big: &KzWindow) -> Result<(), MhError> {
        if big.radius < self.radius {
            return Err(MhError::Input("stability check needs the larger window second".into()));
        }
        let d = self.dim();
        let lift = |i: usize| big.index(self.value(i));
        for i in 0..d {
            for j in 0..d {
                let small = self.algebra.mul_basis(i, j);
                let lifted: Vec<(usize, Scalar)> = small
                    .terms
                    .iter()
                    .map(|(k, c)| (lift(*k), c.clone()))
                    .collect();
                let in_big = big.algebra.mul_basis(lift(i), lift(j));
                if lifted != in_big.terms {
                    return Err(MhError::Verification(format!(
                        "product of ({}, {}) changes between windows {} and {}",
                        self.space().label(i),
                        self.space().label(j),
                        self.radius,
                        big.radius
                    )));
                }
            }
        }
        if big.radius >= 2 * self.radius {
            let cover_small = KzWindow::new(2 * self.radius);
            let cover_big = KzWindow::new(2 * big.radius);
            let t1s = self.t1_into(&cover_small)?;
            let t1b = big.t1_into(&cover_big)?;
            for i in 0..d {
                for j in 0..d {
                    let s = t1s.col(i * d + j);
                    let b = t1b.col(lift(i) * big.dim() + lift(j));
                    let (sv, bv) = (
                        (
                            cover_small.value(s.terms[0].0 / d),
                            self.value(s.terms[0].0 % d),
                        ),
                        (
                            cover_big.value(b.terms[0].0 / big.dim()),
                            big.value(b.terms[0].0 % big.dim()),
                        ),
                    );
                    if sv != bv {
                        return Err(MhError::Verification(format!(
                            "T1 cover of ({}, {}) changes between windows",
                            self.space().label(i),
                            self.space().label(j)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The full windowed certification: nondegeneracy, no global unit,
    /// block bijectivity, covered counit/antipode/integral laws.
    pub fn check_all(&self) -> Result<(), MhError> {
        self.algebra
            .check_associativity()
            .map_err(|w| MhError::Verification(format!("associativity fails {}", w.describe())))?;
        self.algebra
            .check_nondegenerate()
            .map_err(|e| MhError::Verification(format!("degenerate pairing at {}", e.display_string())))?;
        if self.algebra.unit.is_some() {
            return Err(MhError::Verification("window algebra must not carry a unit".into()));
        }
        self.check_block_bijective()?;
        self.check_counit_covered()?;
        self.check_antipode_covered()?;
        self.check_integral_covered()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_match_pointwise_evaluation() {
        let w = KzWindow::new(3);
        let big = KzWindow::new(6);
        let t1 = w.t1_into(&big).unwrap();
        let d = w.dim();
        // T₁(δ₂⊗δ₋₁) = δ₃⊗δ₋₁.
        let col = t1.col(w.index(2) * d + w.index(-1));
        assert_eq!(
            col.terms,
            vec![(big.index(3) * d + w.index(-1), Scalar::one())]
        );
        let t2 = w.t2_into(&big).unwrap();
        // T₂(δ₂⊗δ₋₁) = δ₂⊗δ₋₃.
        let col = t2.col(w.index(2) * d + w.index(-1));
        assert_eq!(
            col.terms,
            vec![(w.index(2) * big.dim() + big.index(-3), Scalar::one())]
        );
    }

    #[test]
    fn window_four_passes_full_certification() {
        let w = KzWindow::new(4);
        w.check_all().unwrap();
    }

    #[test]
    fn windows_are_stable_under_enlargement() {
        let small = KzWindow::new(4);
        let big = KzWindow::new(8);
        small.check_window_stable(&big).unwrap();
    }

    #[test]
    fn no_unit_but_local_units_exist() {
        let w = KzWindow::new(4);
        assert!(w.algebra.unit.is_none());
        let sp = w.space();
        let batch = vec![
            Element::from_terms(
                sp,
                vec![(w.index(-2), Scalar::from_int(3)), (w.index(1), Scalar::one())],
            ),
            Element::basis(sp, w.index(4)),
        ];
        let (e, _) = w.algebra.find_local_units(&batch).unwrap();
        for x in &batch {
            assert_eq!(&w.algebra.multiply(&e, x), x);
            assert_eq!(&w.algebra.multiply(x, &e), x);
        }
    }
}
