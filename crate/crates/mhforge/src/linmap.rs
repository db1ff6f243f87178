//! Sparse linear maps between named bases, stored column-wise.
//!
//! The column of a source basis vector is its image; unlisted columns are
//! zero. Leg embedding turns a map on a few tensor factors into a map on a
//! larger product acting as the identity elsewhere, which is how all the
//! subscripted operators (R₁₂, T₁₃, ...) are materialized.

use crate::element::Element;
use crate::error::MhError;
use crate::scalar::Scalar;
use crate::space::{Space, SpaceRef};

#[derive(Clone, Debug)]
pub struct LinMap {
    pub source: SpaceRef,
    pub target: SpaceRef,
    cols: Vec<Element>,
}

impl PartialEq for LinMap {
    fn eq(&self, other: &Self) -> bool {
        self.cols == other.cols
    }
}
impl Eq for LinMap {}

impl LinMap {
    pub fn from_cols(source: &SpaceRef, target: &SpaceRef, cols: Vec<Element>) -> Self {
        assert_eq!(cols.len(), source.dim());
        for c in &cols {
            debug_assert!(Space::same_basis(&c.space, target));
        }
        LinMap {
            source: source.clone(),
            target: target.clone(),
            cols,
        }
    }

    pub fn from_fn(source: &SpaceRef, target: &SpaceRef, f: impl Fn(usize) -> Element) -> Self {
        let cols = (0..source.dim()).map(f).collect();
        LinMap::from_cols(source, target, cols)
    }

    pub fn identity(space: &SpaceRef) -> Self {
        LinMap::from_fn(space, space, |i| Element::basis(space, i))
    }

    pub fn zero(source: &SpaceRef, target: &SpaceRef) -> Self {
        LinMap::from_fn(source, target, |_| Element::zero(target))
    }

    pub fn col(&self, i: usize) -> &Element {
        &self.cols[i]
    }

    pub fn apply(&self, e: &Element) -> Element {
        debug_assert!(Space::same_basis(&e.space, &self.source));
        let mut out = Element::zero(&self.target);
        for (i, c) in &e.terms {
            out.add_scaled(&self.cols[*i], c);
        }
        out
    }

    /// Conjugate-linear application: coefficients are conjugated before the
    /// columns are combined. Involutions of *-algebras go through here.
    pub fn apply_antilinear(&self, e: &Element) -> Element {
        self.apply(&e.conj_coeffs())
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &LinMap) -> LinMap {
        debug_assert!(
            Space::same_basis(&inner.target, &self.source),
            "compose shape mismatch: {} then {}",
            inner.target.name(),
            self.source.name()
        );
        LinMap::from_fn(&inner.source, &self.target, |i| self.apply(&inner.cols[i]))
    }

    /// Composition of a pipeline, applied left to right (`chain([f, g, h]) =
    /// h ∘ g ∘ f`).
    pub fn chain(maps: &[&LinMap]) -> LinMap {
        assert!(!maps.is_empty());
        let mut acc = maps[0].clone();
        for m in &maps[1..] {
            acc = m.compose(&acc);
        }
        acc
    }

    /// Kronecker product: (self ⊗ other)(u⊗v) = self(u) ⊗ other(v).
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        let source = Space::tensor(&[&self.source, &other.source]);
        let target = Space::tensor(&[&self.target, &other.target]);
        let ostride = other.source.dim();
        LinMap::from_fn(&source, &target, |i| {
            let (a, b) = (i / ostride, i % ostride);
            self.cols[a].tensor(&other.cols[b], &target)
        })
    }

    /// The flip τ: A⊗B → B⊗A (block transposition of the two factor groups).
    pub fn flip(a: &SpaceRef, b: &SpaceRef) -> LinMap {
        let source = Space::tensor(&[a, b]);
        let target = Space::tensor(&[b, a]);
        let (da, db) = (a.dim(), b.dim());
        LinMap::from_fn(&source, &target, |i| {
            let (x, y) = (i / db, i % db);
            Element::basis(&target, y * da + x)
        })
    }

    /// Embeds `m` into a larger tensor product, acting on the factors at the
    /// given positions (**1-based**, matching subscript notation: R₂₃ is
    /// `embed_legs(&r, &[2, 3], &ambient)`) and as the identity elsewhere.
    /// `m` must have equally many source and target factors; the ambient
    /// target substitutes m's target factors at the same positions.
    pub fn embed_legs(m: &LinMap, legs: &[usize], ambient_source: &SpaceRef) -> Result<LinMap, MhError> {
        let n = ambient_source.n_factors();
        if m.source.n_factors() != legs.len() || m.target.n_factors() != legs.len() {
            return Err(MhError::Input(format!(
                "embed_legs: map has {}→{} factors but {} legs given",
                m.source.n_factors(),
                m.target.n_factors(),
                legs.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in legs {
            if p == 0 || p > n {
                return Err(MhError::Input(format!("embed_legs: leg {p} out of range 1..={n}")));
            }
            if seen[p - 1] {
                return Err(MhError::Input(format!("embed_legs: duplicate leg {p}")));
            }
            seen[p - 1] = true;
        }
        for (k, &p) in legs.iter().enumerate() {
            let amb = &ambient_source.factors()[p - 1];
            let ms = &m.source.factors()[k];
            if !(amb.name == ms.name && amb.labels() == ms.labels()) {
                return Err(MhError::SpaceMismatch {
                    expected: ms.name.clone(),
                    found: amb.name.clone(),
                });
            }
        }
        let legs0: Vec<usize> = legs.iter().map(|&p| p - 1).collect();
        let ambient_target = {
            let mut factors = ambient_source.factors().to_vec();
            for (k, &p) in legs0.iter().enumerate() {
                factors[p] = m.target.factors()[k].clone();
            }
            Space::product(factors)
        };
        let map = LinMap::from_fn(ambient_source, &ambient_target, |i| {
            let digits = ambient_source.decompose(i);
            let sub: Vec<usize> = legs0.iter().map(|&p| digits[p]).collect();
            let sub_index = m.source.compose(&sub);
            let image = &m.cols[sub_index];
            let mut terms = Vec::with_capacity(image.terms.len());
            for (j, c) in &image.terms {
                let jd = m.target.decompose(*j);
                let mut out = digits.clone();
                for (k, &p) in legs0.iter().enumerate() {
                    out[p] = jd[k];
                }
                terms.push((ambient_target.compose(&out), c.clone()));
            }
            Element::from_terms(&ambient_target, terms)
        });
        Ok(map)
    }

    /// First column where the two maps disagree, with both images.
    pub fn first_difference<'a>(&'a self, other: &'a LinMap) -> Option<(usize, &'a Element, &'a Element)> {
        debug_assert!(Space::same_basis(&self.source, &other.source));
        (0..self.cols.len()).find_map(|i| {
            if self.cols[i] != other.cols[i] {
                Some((i, &self.cols[i], &other.cols[i]))
            } else {
                None
            }
        })
    }

    /// Basis of the kernel, as coefficient vectors over the source basis.
    /// Empty exactly when the map is injective.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        kernel_of_columns(self.target.dim(), &self.cols)
    }

    /// Exact two-sided inverse via Gauss-Jordan elimination, or a nonzero
    /// kernel vector when the map is singular.
    pub fn inverse(&self) -> Result<LinMap, MhError> {
        let n = self.source.dim();
        if self.target.dim() != n {
            return Err(MhError::Input(format!(
                "inverse: map {}→{} is not square",
                self.source.name(),
                self.target.name()
            )));
        }
        // Dense augmented elimination [M | I]; rows indexed by target basis.
        let mut m: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); n]; n];
        for (j, colv) in self.cols.iter().enumerate() {
            for (i, c) in &colv.terms {
                m[*i][j] = c.clone();
            }
        }
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = vec![Scalar::zero(); n];
                row[i] = Scalar::one();
                row
            })
            .collect();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
        let mut row = 0usize;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            aug.swap(row, p);
            let inv = m[row][col].inverse().expect("pivot is nonzero");
            if !inv.is_one() {
                for k in 0..n {
                    m[row][k] = &m[row][k] * &inv;
                    aug[row][k] = &aug[row][k] * &inv;
                }
            }
            for r in 0..n {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in 0..n {
                        let t = &m[row][k] * &f;
                        m[r][k] = &m[r][k] - &t;
                        let t = &aug[row][k] * &f;
                        aug[r][k] = &aug[r][k] - &t;
                    }
                }
            }
            pivot_of_col[col] = Some(row);
            row += 1;
            if row == n {
                break;
            }
        }
        if row < n {
            // Singular: build a kernel vector from the first free column.
            let free = pivot_of_col.iter().position(|p| p.is_none()).expect("free column exists");
            let mut kv = vec![Scalar::zero(); n];
            kv[free] = Scalar::one();
            for (col, p) in pivot_of_col.iter().enumerate() {
                if let Some(r) = p {
                    kv[col] = -&m[*r][free];
                }
            }
            let witness = Element::from_terms(
                &self.source,
                kv.into_iter().enumerate().map(|(i, c)| (i, c)).collect(),
            );
            return Err(MhError::Singular {
                map: format!("{}→{}", self.source.name(), self.target.name()),
                witness: witness.display_string(),
            });
        }
        let cols = (0..n)
            .map(|j| {
                Element::from_terms(
                    &self.source,
                    (0..n).map(|i| (i, aug[i][j].clone())).collect(),
                )
            })
            .collect();
        Ok(LinMap::from_cols(&self.target, &self.source, cols))
    }

    /// Checks that `cand` is a two-sided inverse of `self`.
    pub fn is_two_sided_inverse(&self, cand: &LinMap) -> bool {
        cand.compose(self) == LinMap::identity(&self.source)
            && self.compose(cand) == LinMap::identity(&self.target)
    }
}

/// Kernel of the matrix whose t-th column is `cols[t]` (vectors in a space of
/// dimension `target_dim`), returned as coefficient vectors over the columns.
pub fn kernel_of_columns(target_dim: usize, cols: &[Element]) -> Vec<Vec<Scalar>> {
    let k = cols.len();
    if k == 0 {
        return Vec::new();
    }
    let mut m: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); k]; target_dim];
    for (j, colv) in cols.iter().enumerate() {
        for (i, c) in &colv.terms {
            m[*i][j] = c.clone();
        }
    }
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut row = 0usize;
    for col in 0..k {
        let Some(p) = (row..target_dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in m[row].iter_mut() {
                *x = &*x * &inv;
            }
        }
        for r in 0..target_dim {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c2 in 0..k {
                    let t = &m[row][c2] * &f;
                    m[r][c2] = &m[r][c2] - &t;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == target_dim {
            break;
        }
    }
    let mut kernel = Vec::new();
    for free in 0..k {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Scalar::zero(); k];
        v[free] = Scalar::one();
        for (col, p) in pivot_of_col.iter().enumerate() {
            if let Some(r) = p {
                v[col] = -&m[*r][free];
            }
        }
        kernel.push(v);
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::AtomSpace;
    use proptest::prelude::*;

    fn space(n: usize, name: &str) -> SpaceRef {
        Space::atomic(
            AtomSpace::new(name, (0..n).map(|i| format!("{name}{i}")).collect()).unwrap(),
        )
    }

    #[test]
    fn flip_squares_to_identity() {
        let a = space(2, "a");
        let b = space(3, "b");
        let t = LinMap::flip(&a, &b);
        let t2 = LinMap::flip(&b, &a);
        assert_eq!(t2.compose(&t), LinMap::identity(&t.source));
        assert_eq!(t.compose(&t2), LinMap::identity(&t2.source));
    }

    #[test]
    fn embed_acts_on_selected_legs_only() {
        let a = space(2, "a");
        let b = space(2, "b");
        let abab = Space::tensor(&[&a, &b, &a, &b]);
        let t = LinMap::flip(&a, &b);
        // Flip on legs (1, 4)? Legs must match factor types: flip's source is
        // a⊗b, so legs (1, 4) of a⊗b⊗a⊗b fit.
        let e14 = LinMap::embed_legs(&t, &[1, 4], &abab).unwrap();
        let i = abab.index_of("a1|b0|a0|b1").unwrap();
        let img = e14.apply(&Element::basis(&abab, i));
        assert_eq!(img.terms.len(), 1);
        assert_eq!(e14.target.label(img.terms[0].0), "b1|b0|a0|a1");
    }

    #[test]
    fn embed_identity_is_identity() {
        let a = space(3, "a");
        let aa = Space::tensor(&[&a, &a]);
        let e = LinMap::embed_legs(&LinMap::identity(&a), &[2], &aa).unwrap();
        assert_eq!(e, LinMap::identity(&aa));
    }

    #[test]
    fn embed_rejects_bad_legs() {
        let a = space(2, "a");
        let b = space(3, "b");
        let ab = Space::tensor(&[&a, &b]);
        let t = LinMap::flip(&a, &b);
        assert!(LinMap::embed_legs(&t, &[1], &ab).is_err());
        assert!(LinMap::embed_legs(&t, &[2, 1], &ab).is_err());
        assert!(LinMap::embed_legs(&t, &[1, 3], &ab).is_err());
    }

    #[test]
    fn inverse_of_flip_is_flip() {
        let a = space(2, "a");
        let b = space(3, "b");
        let t = LinMap::flip(&a, &b);
        let inv = t.inverse().unwrap();
        assert!(t.is_two_sided_inverse(&inv));
    }

    #[test]
    fn singular_map_yields_kernel_witness() {
        let a = space(2, "a");
        let m = LinMap::from_fn(&a, &a, |_| Element::basis(&a, 0));
        match m.inverse() {
            Err(MhError::Singular { witness, .. }) => {
                assert!(witness.contains("a0") || witness.contains("a1"));
            }
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn composition_is_associative(seed in 0u64..1000) {
            // Three pseudo-random sparse maps on a 4-dim space.
            let v = space(4, "v");
            let mk = |salt: u64| {
                LinMap::from_fn(&v, &v, |i| {
                    let h = salt.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(i as u64 * 0x2545f491);
                    let j = (h >> 16) as usize % 4;
                    let c = ((h >> 32) % 5) as i64 - 2;
                    Element::single(&v, j, Scalar::from_int(c))
                })
            };
            let (f, g, h) = (mk(seed), mk(seed + 1), mk(seed + 2));
            let lhs = f.compose(&g).compose(&h);
            let rhs = f.compose(&g.compose(&h));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn embed_commutes_with_composition(seed in 0u64..500) {
            let a = space(3, "a");
            let aaa = Space::tensor(&[&a, &a, &a]);
            let mk = |salt: u64| {
                LinMap::from_fn(&a, &a, |i| {
                    let h = salt.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(i as u64);
                    Element::single(&a, (h >> 8) as usize % 3, Scalar::from_int(((h >> 24) % 3) as i64 - 1))
                })
            };
            let (f, g) = (mk(seed), mk(seed + 7));
            let fg = f.compose(&g);
            let lhs = LinMap::embed_legs(&fg, &[2], &aaa).unwrap();
            let rhs = LinMap::embed_legs(&f, &[2], &aaa)
                .unwrap()
                .compose(&LinMap::embed_legs(&g, &[2], &aaa).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_recomposes_to_identity(seed in 0u64..300) {
            // Unit upper-triangular times unit lower-triangular is always
            // invertible; entries are small integers.
            let v = space(4, "v");
            let entry = |s: u64, i: usize, j: usize| {
                let h = s.wrapping_mul(0x9e3779b97f4a7c15)
                    .wrapping_add(((i * 7 + j) as u64).wrapping_mul(0x517cc1b727220a95));
                ((h >> 20) % 5) as i64 - 2
            };
            let upper = LinMap::from_fn(&v, &v, |j| {
                let mut terms = vec![(j, Scalar::one())];
                for i in 0..j {
                    terms.push((i, Scalar::from_int(entry(seed, i, j))));
                }
                Element::from_terms(&v, terms)
            });
            let lower = LinMap::from_fn(&v, &v, |j| {
                let mut terms = vec![(j, Scalar::one())];
                for i in (j + 1)..4 {
                    terms.push((i, Scalar::from_int(entry(seed + 3, i, j))));
                }
                Element::from_terms(&v, terms)
            });
            let m = upper.compose(&lower);
            let inv = m.inverse().unwrap();
            prop_assert!(m.is_two_sided_inverse(&inv));
        }
    }
}
