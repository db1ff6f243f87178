//! Named bases and their tensor products.
//!
//! A `Space` is an ordered list of atomic factors. Atomic spaces own their
//! basis labels; a tensor space never stores tuple labels, it derives them
//! from a mixed-radix decomposition of the flat index. Factor order is
//! significant and fixed at construction, so iteration order over any basis
//! is deterministic everywhere in the library.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::MhError;

/// Separator used when printing and parsing tuple labels. Atomic labels are
/// rejected if they contain it.
pub const TUPLE_SEP: char = '|';

/// An atomic basis: a name and an ordered list of unique labels.
#[derive(Debug)]
pub struct AtomSpace {
    pub name: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl AtomSpace {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Arc<Self>, MhError> {
        let name = name.into();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.contains(TUPLE_SEP) {
                return Err(MhError::Input(format!(
                    "basis label {l:?} contains reserved separator {TUPLE_SEP:?}"
                )));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(MhError::Input(format!("duplicate basis label {l:?} in {name}")));
            }
        }
        Ok(Arc::new(AtomSpace { name, labels, index }))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// An ordered basis, possibly a tensor product of several atomic factors.
#[derive(Clone, Debug)]
pub struct Space {
    factors: Vec<Arc<AtomSpace>>,
    /// dims[k] = product of factor dims strictly after position k, so
    /// index = sum digit[k] * dims[k] (first factor is most significant).
    strides: Vec<usize>,
    dim: usize,
    name: String,
}

pub type SpaceRef = Arc<Space>;

impl Space {
    pub fn atomic(atom: Arc<AtomSpace>) -> SpaceRef {
        Space::product(vec![atom])
    }

    pub fn product(factors: Vec<Arc<AtomSpace>>) -> SpaceRef {
        assert!(!factors.is_empty(), "space needs at least one factor");
        let mut strides = vec![1usize; factors.len()];
        for k in (0..factors.len() - 1).rev() {
            strides[k] = strides[k + 1] * factors[k + 1].dim();
        }
        let dim = strides[0] * factors[0].dim();
        let name = factors
            .iter()
            .map(|f| f.name.clone())
            .collect::<Vec<_>>()
            .join("(x)");
        Arc::new(Space {
            factors,
            strides,
            dim,
            name,
        })
    }

    /// Tensor product; factor lists concatenate (A⊗B)⊗C = A⊗B⊗C.
    pub fn tensor(parts: &[&SpaceRef]) -> SpaceRef {
        let mut factors = Vec::new();
        for p in parts {
            factors.extend(p.factors.iter().cloned());
        }
        Space::product(factors)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn factors(&self) -> &[Arc<AtomSpace>] {
        &self.factors
    }

    pub fn n_factors(&self) -> usize {
        self.factors.len()
    }

    /// Mixed-radix digits of a flat index, one per factor.
    pub fn decompose(&self, mut i: usize) -> Vec<usize> {
        debug_assert!(i < self.dim);
        let mut digits = Vec::with_capacity(self.factors.len());
        for s in &self.strides {
            digits.push(i / s);
            i %= s;
        }
        digits
    }

    pub fn compose(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.factors.len());
        digits.iter().zip(&self.strides).map(|(d, s)| d * s).sum()
    }

    pub fn label(&self, i: usize) -> String {
        let digits = self.decompose(i);
        digits
            .iter()
            .zip(&self.factors)
            .map(|(&d, f)| f.label(d).to_string())
            .collect::<Vec<_>>()
            .join(&TUPLE_SEP.to_string())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        let parts: Vec<&str> = label.split(TUPLE_SEP).collect();
        if parts.len() != self.factors.len() {
            return None;
        }
        let mut digits = Vec::with_capacity(parts.len());
        for (p, f) in parts.iter().zip(&self.factors) {
            digits.push(f.index_of(p)?);
        }
        Some(self.compose(&digits))
    }

    /// Structural equality of bases. Arc identity short-circuits the common
    /// case; otherwise factor names and labels must agree position by
    /// position.
    pub fn same_basis(a: &SpaceRef, b: &SpaceRef) -> bool {
        if Arc::ptr_eq(a, b) {
            return true;
        }
        if a.dim != b.dim || a.factors.len() != b.factors.len() {
            return false;
        }
        a.factors
            .iter()
            .zip(&b.factors)
            .all(|(x, y)| Arc::ptr_eq(x, y) || (x.name == y.name && x.labels == y.labels))
    }

    /// The space obtained by substituting `replacement`'s factors at the
    /// given (distinct, ascending-sorted internally) positions. `positions`
    /// and `replacement`'s factor list have equal length.
    pub fn replace_factors(&self, positions: &[usize], replacement: &SpaceRef) -> SpaceRef {
        assert_eq!(positions.len(), replacement.factors.len());
        let mut factors = self.factors.clone();
        for (k, &p) in positions.iter().enumerate() {
            factors[p] = replacement.factors[k].clone();
        }
        Space::product(factors)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Arc<AtomSpace> {
        AtomSpace::new("V", vec!["a".into(), "b".into(), "c".into()]).unwrap()
    }

    #[test]
    fn tuple_indexing_round_trips() {
        let v = Space::atomic(abc());
        let w = Space::atomic(AtomSpace::new("W", vec!["x".into(), "y".into()]).unwrap());
        let vw = Space::tensor(&[&v, &w]);
        assert_eq!(vw.dim(), 6);
        for i in 0..vw.dim() {
            let l = vw.label(i);
            assert_eq!(vw.index_of(&l), Some(i), "label {l}");
        }
        assert_eq!(vw.label(0), "a|x");
        assert_eq!(vw.label(5), "c|y");
        // First factor is most significant: a|x, a|y, b|x, ...
        assert_eq!(vw.label(2), "b|x");
    }

    #[test]
    fn nested_tensor_flattens() {
        let v = Space::atomic(abc());
        let vv = Space::tensor(&[&v, &v]);
        let vvv = Space::tensor(&[&vv, &v]);
        assert_eq!(vvv.n_factors(), 3);
        assert_eq!(vvv.dim(), 27);
        let digits = vvv.decompose(vvv.index_of("b|c|a").unwrap());
        assert_eq!(digits, vec![1, 2, 0]);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(AtomSpace::new("V", vec!["a".into(), "a".into()]).is_err());
        assert!(AtomSpace::new("V", vec!["a|b".into()]).is_err());
    }
}
