//! Sparse term rewriting over block tensor products.
//!
//! Composite identities like R∘(m⊗id) = (id⊗m)∘R₁₂∘R₂₃ act on tensor
//! products whose legs are whole algebras, possibly themselves products.
//! Working with flat indices would tie every identity to one fixed ambient
//! space, so laws are evaluated here on sparse digit-vector terms: each term
//! is a tuple of per-block basis indices with a coefficient, and the
//! rewriting steps (apply a map to one or two legs, multiply adjacent legs)
//! update the digit layout as they go.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::linmap::LinMap;
use crate::scalar::Scalar;

/// One sparse term: basis index per block, with a coefficient.
pub type BTerm = (Vec<usize>, Scalar);

/// Digit layout of both sides of a rewriting step: the per-block dims.
pub type Dims = Vec<usize>;

/// A single basis tensor as a term list.
pub fn basis_term(digits: &[usize]) -> Vec<BTerm> {
    vec![(digits.to_vec(), Scalar::one())]
}

/// Sorts digit-wise, merges duplicates, drops zeros.
pub fn canonicalize(mut terms: Vec<BTerm>) -> Vec<BTerm> {
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<BTerm> = Vec::with_capacity(terms.len());
    for (digits, c) in terms {
        if let Some(last) = out.last_mut() {
            if last.0 == digits {
                last.1 = &last.1 + &c;
                continue;
            }
        }
        out.push((digits, c));
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub fn terms_equal(a: Vec<BTerm>, b: Vec<BTerm>) -> bool {
    canonicalize(a) == canonicalize(b)
}

/// Renders a canonical term list, digits labeled through the given spaces.
pub fn render(terms: &[BTerm], spaces: &[&crate::space::SpaceRef]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(digits, c)| {
            let labels: Vec<String> = digits
                .iter()
                .zip(spaces)
                .map(|(i, s)| s.label(*i))
                .collect();
            format!("{}*({})", c, labels.join(" (x) "))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Applies a map to legs (p, q), 1-based. The map's source must have dims
/// (dims[p-1], dims[q-1]) flattened as i*dims[q-1]+j; its target splits as
/// `out` = (e1, e2), which replace the dims at p and q in place.
pub fn apply_pair(
    m: &LinMap,
    out: (usize, usize),
    p: usize,
    q: usize,
    dims: &mut Dims,
    terms: Vec<BTerm>,
) -> Vec<BTerm> {
    let (sp, sq) = (dims[p - 1], dims[q - 1]);
    debug_assert_eq!(m.source.dim(), sp * sq);
    debug_assert_eq!(m.target.dim(), out.0 * out.1);
    let mut res = Vec::new();
    for (digits, c) in &terms {
        let col = m.col(digits[p - 1] * sq + digits[q - 1]);
        for (t, ct) in &col.terms {
            let mut nd = digits.clone();
            nd[p - 1] = t / out.1;
            nd[q - 1] = t % out.1;
            res.push((nd, c * ct));
        }
    }
    dims[p - 1] = out.0;
    dims[q - 1] = out.1;
    canonicalize(res)
}

/// Applies a map to the single leg p; the dim at p becomes the map's target
/// dim.
pub fn apply_single(m: &LinMap, p: usize, dims: &mut Dims, terms: Vec<BTerm>) -> Vec<BTerm> {
    debug_assert_eq!(m.source.dim(), dims[p - 1]);
    let mut res = Vec::new();
    for (digits, c) in &terms {
        for (t, ct) in &m.col(digits[p - 1]).terms {
            let mut nd = digits.clone();
            nd[p - 1] = *t;
            res.push((nd, c * ct));
        }
    }
    dims[p - 1] = m.target.dim();
    canonicalize(res)
}

/// Expands the single leg p into two legs using a map whose target splits as
/// `out` = (e1, e2); the layout grows by one block.
pub fn apply_split(
    m: &LinMap,
    out: (usize, usize),
    p: usize,
    dims: &mut Dims,
    terms: Vec<BTerm>,
) -> Vec<BTerm> {
    debug_assert_eq!(m.source.dim(), dims[p - 1]);
    debug_assert_eq!(m.target.dim(), out.0 * out.1);
    let mut res = Vec::new();
    for (digits, c) in &terms {
        for (t, ct) in &m.col(digits[p - 1]).terms {
            let mut nd = digits.clone();
            nd[p - 1] = t / out.1;
            nd.insert(p, t % out.1);
            res.push((nd, c * ct));
        }
    }
    dims[p - 1] = out.0;
    dims.insert(p, out.1);
    canonicalize(res)
}

/// Multiplies adjacent legs p, p+1 through the algebra's table, fusing them
/// into one block.
pub fn mul_adjacent(alg: &Algebra, p: usize, dims: &mut Dims, terms: Vec<BTerm>) -> Vec<BTerm> {
    debug_assert_eq!(dims[p - 1], alg.dim());
    debug_assert_eq!(dims[p], alg.dim());
    let mut res = Vec::new();
    for (digits, c) in &terms {
        for (t, ct) in &alg.mul_basis(digits[p - 1], digits[p]).terms {
            let mut nd = digits.clone();
            nd[p - 1] = *t;
            nd.remove(p);
            res.push((nd, c * ct));
        }
    }
    dims.remove(p);
    canonicalize(res)
}

/// Swaps legs p and p+1.
pub fn swap_adjacent(p: usize, dims: &mut Dims, terms: Vec<BTerm>) -> Vec<BTerm> {
    let res = terms
        .into_iter()
        .map(|(mut digits, c)| {
            digits.swap(p - 1, p);
            (digits, c)
        })
        .collect();
    dims.swap(p - 1, p);
    canonicalize(res)
}

/// Contracts leg p with a functional, scaling the coefficient.
pub fn contract(phi: &[Scalar], p: usize, dims: &mut Dims, terms: Vec<BTerm>) -> Vec<BTerm> {
    debug_assert_eq!(phi.len(), dims[p - 1]);
    let res = terms
        .into_iter()
        .map(|(mut digits, c)| {
            let i = digits.remove(p - 1);
            (digits, &c * &phi[i])
        })
        .collect();
    dims.remove(p - 1);
    canonicalize(res)
}

/// Flattens a term list over a two-block layout into an element of the flat
/// product space.
pub fn to_element2(terms: &[BTerm], dims: &Dims, space: &crate::space::SpaceRef) -> Element {
    debug_assert_eq!(dims.len(), 2);
    debug_assert_eq!(space.dim(), dims[0] * dims[1]);
    Element::from_terms(
        space,
        terms
            .iter()
            .map(|(d, c)| (d[0] * dims[1] + d[1], c.clone()))
            .collect(),
    )
}

/// Splits an element of a two-block space into digit terms.
pub fn from_element2(e: &Element, dims: &Dims) -> Vec<BTerm> {
    debug_assert_eq!(e.space.dim(), dims[0] * dims[1]);
    e.terms
        .iter()
        .map(|(i, c)| (vec![i / dims[1], i % dims[1]], c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{AtomSpace, Space};

    fn two_dim(name: &str) -> crate::space::SpaceRef {
        Space::atomic(AtomSpace::new(name, vec!["u".into(), "v".into()]).unwrap())
    }

    #[test]
    fn pair_map_rewrites_legs_in_place() {
        let a = two_dim("A");
        let sq = Space::tensor(&[&a, &a]);
        let flip = LinMap::flip(&a, &a);
        let mut dims = vec![2, 2, 2];
        let t = basis_term(&[0, 1, 0]);
        let r = apply_pair(&flip, (2, 2), 2, 3, &mut dims, t);
        assert_eq!(r, vec![(vec![0, 0, 1], Scalar::one())]);
        assert_eq!(dims, vec![2, 2, 2]);
        let id = LinMap::identity(&sq);
        let mut dims2 = vec![2, 2, 2];
        let r2 = apply_pair(&id, (2, 2), 1, 3, &mut dims2, basis_term(&[1, 0, 1]));
        assert_eq!(r2, vec![(vec![1, 0, 1], Scalar::one())]);
    }

    #[test]
    fn split_then_contract_round_trips() {
        let a = two_dim("A");
        let sq = Space::tensor(&[&a, &a]);
        // Δ(e_i) = e_i ⊗ e_i, ε = (1, 1): (ε⊗id)Δ = id.
        let delta = LinMap::from_fn(&a, &sq, |i| Element::basis(&sq, i * 2 + i));
        let eps = vec![Scalar::one(), Scalar::one()];
        for i in 0..2 {
            let mut dims = vec![2];
            let t = apply_split(&delta, (2, 2), 1, &mut dims, basis_term(&[i]));
            assert_eq!(dims, vec![2, 2]);
            let t = contract(&eps, 1, &mut dims, t);
            assert_eq!(t, basis_term(&[i]));
            assert_eq!(dims, vec![2]);
        }
    }

    #[test]
    fn canonicalize_merges_and_drops() {
        let one = Scalar::one();
        let terms = vec![
            (vec![1, 0], one.clone()),
            (vec![0, 1], one.clone()),
            (vec![1, 0], -&one),
            (vec![0, 1], one.clone()),
        ];
        let c = canonicalize(terms);
        assert_eq!(c, vec![(vec![0, 1], &one + &one)]);
    }
}
