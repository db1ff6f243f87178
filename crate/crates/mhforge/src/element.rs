//! Sparse vectors over a named basis.

use std::fmt;

use crate::scalar::Scalar;
use crate::space::{Space, SpaceRef};

/// A finite linear combination of basis vectors, stored as index/coefficient
/// pairs sorted by index with no zero coefficients. Those two invariants make
/// `==` on `terms` literal equality of vectors.
#[derive(Clone, Debug)]
pub struct Element {
    pub space: SpaceRef,
    pub terms: Vec<(usize, Scalar)>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(Space::same_basis(&self.space, &other.space));
        self.terms == other.terms
    }
}
impl Eq for Element {}

impl Element {
    pub fn zero(space: &SpaceRef) -> Self {
        Element {
            space: space.clone(),
            terms: Vec::new(),
        }
    }

    pub fn basis(space: &SpaceRef, i: usize) -> Self {
        assert!(i < space.dim());
        Element {
            space: space.clone(),
            terms: vec![(i, Scalar::one())],
        }
    }

    pub fn single(space: &SpaceRef, i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            return Element::zero(space);
        }
        Element {
            space: space.clone(),
            terms: vec![(i, c)],
        }
    }

    /// Builds from arbitrary (index, coefficient) pairs: sorts, merges
    /// duplicates, drops zeros.
    pub fn from_terms(space: &SpaceRef, mut raw: Vec<(usize, Scalar)>) -> Self {
        raw.sort_by_key(|(i, _)| *i);
        let mut terms: Vec<(usize, Scalar)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match terms.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &c,
                _ => terms.push((i, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Element {
            space: space.clone(),
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        match self.terms.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        debug_assert!(Space::same_basis(&self.space, &other.space));
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut p, mut q) = (0, 0);
        while p < self.terms.len() && q < other.terms.len() {
            let (i, j) = (self.terms[p].0, other.terms[q].0);
            if i < j {
                terms.push(self.terms[p].clone());
                p += 1;
            } else if j < i {
                terms.push(other.terms[q].clone());
                q += 1;
            } else {
                let c = &self.terms[p].1 + &other.terms[q].1;
                if !c.is_zero() {
                    terms.push((i, c));
                }
                p += 1;
                q += 1;
            }
        }
        terms.extend_from_slice(&self.terms[p..]);
        terms.extend_from_slice(&other.terms[q..]);
        Element {
            space: self.space.clone(),
            terms,
        }
    }

    /// self += c * other; the in-place form the exhaustive scans live on.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if c.is_one() {
            *self = self.add(other);
            return;
        }
        let scaled = other.scale(c);
        *self = self.add(&scaled);
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(&self.space);
        }
        if c.is_one() {
            return self.clone();
        }
        Element {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(i, k)| (*i, k * c)).collect(),
        }
    }

    /// Applies complex conjugation to every coefficient (used by involutions
    /// and conjugate-linear maps).
    pub fn conj_coeffs(&self) -> Element {
        Element {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(i, c)| (*i, c.conj())).collect(),
        }
    }

    /// Tensor product into the given product space, which must be the tensor
    /// of the operands' spaces (factor lists concatenate).
    pub fn tensor(&self, other: &Element, target: &SpaceRef) -> Element {
        debug_assert_eq!(
            target.n_factors(),
            self.space.n_factors() + other.space.n_factors()
        );
        let stride = other.space.dim();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                terms.push((i * stride + j, a * b));
            }
        }
        // Term lists of both operands are sorted, so the product list is
        // already sorted: i*stride+j is monotone in (i, j).
        Element {
            space: target.clone(),
            terms,
        }
    }

    pub fn display_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(i, c)| {
                let l = self.space.label(*i);
                if c.is_one() {
                    l
                } else {
                    format!("({})*{}", c, l)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::AtomSpace;

    fn v3() -> SpaceRef {
        Space::atomic(AtomSpace::new("V", vec!["a".into(), "b".into(), "c".into()]).unwrap())
    }

    #[test]
    fn normalization_drops_zeros_and_merges() {
        let v = v3();
        let e = Element::from_terms(
            &v,
            vec![
                (2, Scalar::one()),
                (0, Scalar::from_int(3)),
                (2, Scalar::from_int(-1)),
            ],
        );
        assert_eq!(e.terms, vec![(0, Scalar::from_int(3))]);
    }

    #[test]
    fn add_cancels() {
        let v = v3();
        let a = Element::basis(&v, 1);
        assert!(a.add(&a.neg()).is_zero());
        assert_eq!(a.add(&a), a.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn tensor_is_bilinear_on_terms() {
        let v = v3();
        let vv = Space::tensor(&[&v, &v]);
        let a = Element::basis(&v, 0).add(&Element::basis(&v, 1).scale(&Scalar::from_int(2)));
        let b = Element::basis(&v, 2);
        let t = a.tensor(&b, &vv);
        assert_eq!(t.coeff(vv.index_of("a|c").unwrap()), Scalar::one());
        assert_eq!(t.coeff(vv.index_of("b|c").unwrap()), Scalar::from_int(2));
        assert!(Element::zero(&v).tensor(&b, &vv).is_zero());
    }
}
