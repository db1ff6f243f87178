//! Canonical certified instances: group algebras kG, dual function algebras
//! k(G), the 4-dim Sweedler/Taft Hopf algebra, and the windowed K(ℤ) family.
//!
//! Convention freeze for regular actions, used everywhere downstream:
//! left translation g▷δ_h = δ_{hg⁻¹}, right translation δ_h◁g = δ_{g⁻¹h}.

pub mod kz;
pub mod packs;

pub use packs::*;

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::MhError;
use crate::hopf::{CoStructure, HopfObject};
use crate::linmap::LinMap;
use crate::scalar::Scalar;
use crate::space::{AtomSpace, Space};

/// A finite group given by its full multiplication table. The identity sits
/// at index 0; axioms are verified on construction.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<usize>,
    ) -> Result<Self, MhError> {
        let name = name.into();
        let n = labels.len();
        if table.len() != n * n {
            return Err(MhError::Input(format!(
                "group {name}: table has {} entries, needs {}",
                table.len(),
                n * n
            )));
        }
        if table.iter().any(|&k| k >= n) {
            return Err(MhError::Input(format!("group {name}: index out of range")));
        }
        for i in 0..n {
            if table[i] != i || table[i * n] != i {
                return Err(MhError::Input(format!(
                    "group {name}: element 0 is not an identity"
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]] {
                        return Err(MhError::Input(format!(
                            "group {name}: associativity fails at ({}, {}, {})",
                            labels[i], labels[j], labels[k]
                        )));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 && table[j * n + i] == 0 {
                    inv[i] = j;
                }
            }
            if inv[i] == usize::MAX {
                return Err(MhError::Input(format!(
                    "group {name}: {} has no inverse",
                    labels[i]
                )));
            }
        }
        Ok(FiniteGroup {
            name,
            labels,
            table,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1 && n <= 24);
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push((i + j) % n);
            }
        }
        FiniteGroup::new(format!("C{n}"), labels, table).expect("cyclic group law")
    }

    /// Klein four-group, bitmask encoding: e = 00, a = 01, b = 10, ab = 11.
    pub fn c2xc2() -> Self {
        let labels = vec!["e".into(), "a".into(), "b".into(), "ab".into()];
        let mut table = Vec::with_capacity(16);
        for i in 0..4 {
            for j in 0..4 {
                table.push(i ^ j);
            }
        }
        FiniteGroup::new("C2xC2", labels, table).expect("klein group law")
    }

    /// Symmetric group on three points; r = (123), s = (12), composition
    /// applies the right factor first.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2], // e
            [1, 2, 0], // r
            [2, 0, 1], // r2
            [1, 0, 2], // s
            [0, 2, 1], // sr
            [2, 1, 0], // sr2
        ];
        let labels = vec![
            "e".into(),
            "r".into(),
            "r2".into(),
            "s".into(),
            "sr".into(),
            "sr2".into(),
        ];
        let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = Vec::with_capacity(36);
        for p in &perms {
            for q in &perms {
                let comp = [p[q[0]], p[q[1]], p[q[2]]];
                table.push(index_of(comp));
            }
        }
        FiniteGroup::new("S3", labels, table).expect("s3 group law")
    }

    /// Resolves C2, C3, C4, C2xC2, S3.
    pub fn by_name(name: &str) -> Result<Self, MhError> {
        match name {
            "C2xC2" => Ok(FiniteGroup::c2xc2()),
            "S3" => Ok(FiniteGroup::s3()),
            _ => {
                if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
                    if (1..=24).contains(&n) {
                        return Ok(FiniteGroup::cyclic(n));
                    }
                }
                Err(MhError::Input(format!("unknown group {name}")))
            }
        }
    }
}

fn hopf_from_parts(
    alg: Algebra,
    delta: impl Fn(usize) -> Vec<(usize, Scalar)>,
    counit: Vec<Scalar>,
    antipode: impl Fn(usize) -> Vec<(usize, Scalar)>,
    star: Option<LinMap>,
) -> HopfObject {
    let sp = alg.space.clone();
    let sq = Space::tensor(&[&sp, &sp]);
    let dmap = LinMap::from_fn(&sp, &sq, |i| Element::from_terms(&sq, delta(i)));
    let smap = LinMap::from_fn(&sp, &sp, |i| Element::from_terms(&sp, antipode(i)));
    let mut alg = alg;
    alg.star = star;
    let co = CoStructure::from_delta(&alg, dmap, counit, smap).expect("unital catalog instance");
    HopfObject::new(Arc::new(alg), co)
}

/// The group algebra kG: Δg = g⊗g, εg = 1, Sg = g⁻¹, g* = g⁻¹.
pub fn group_algebra(g: &FiniteGroup) -> HopfObject {
    let n = g.order();
    let sp = Space::atomic(
        AtomSpace::new(format!("k{}", g.name), g.labels.clone()).expect("group labels"),
    );
    let alg = Algebra::from_rule(format!("k{}", g.name), sp.clone(), Some(Element::basis(&sp, 0)), {
        let g = g.clone();
        let sp = sp.clone();
        move |i, j| Element::basis(&sp, g.mul(i, j))
    });
    let star = LinMap::from_fn(&sp, &sp, |i| Element::basis(&sp, g.inv(i)));
    hopf_from_parts(
        alg,
        |i| vec![(i * n + i, Scalar::one())],
        vec![Scalar::one(); n],
        |i| vec![(g.inv(i), Scalar::one())],
        Some(star),
    )
}

/// Both-sided integral on kG: the coefficient of the identity element.
pub fn group_algebra_integral(g: &FiniteGroup) -> Vec<Scalar> {
    let mut phi = vec![Scalar::zero(); g.order()];
    phi[0] = Scalar::one();
    phi
}

/// The function algebra k(G): pointwise product on basis {δ_g}, labeled
/// d<g>; Δδ_g = Σ_{uv=g} δ_u⊗δ_v, εδ_g = [g = e], Sδ_g = δ_{g⁻¹},
/// δ_g* = δ_g.
pub fn function_algebra(g: &FiniteGroup) -> HopfObject {
    let n = g.order();
    let labels: Vec<String> = g.labels.iter().map(|l| format!("d{l}")).collect();
    let sp = Space::atomic(AtomSpace::new(format!("f{}", g.name), labels).expect("group labels"));
    let unit = Element::from_terms(&sp, (0..n).map(|i| (i, Scalar::one())).collect());
    let alg = Algebra::from_rule(format!("f{}", g.name), sp.clone(), Some(unit), {
        let sp = sp.clone();
        move |i, j| {
            if i == j {
                Element::basis(&sp, i)
            } else {
                Element::zero(&sp)
            }
        }
    });
    let star = LinMap::identity(&sp);
    let mut counit = vec![Scalar::zero(); n];
    counit[0] = Scalar::one();
    hopf_from_parts(
        alg,
        |k| {
            let mut terms = Vec::with_capacity(n);
            for u in 0..n {
                for v in 0..n {
                    if g.mul(u, v) == k {
                        terms.push((u * n + v, Scalar::one()));
                    }
                }
            }
            terms
        },
        counit,
        |i| vec![(g.inv(i), Scalar::one())],
        Some(star),
    )
}

/// Both-sided integral on k(G): summation over the group.
pub fn function_algebra_integral(g: &FiniteGroup) -> Vec<Scalar> {
    vec![Scalar::one(); g.order()]
}

/// The 4-dim Hopf algebra on {1, g, x, gx} with g² = 1, x² = 0, xg = −gx;
/// Δg = g⊗g, Δx = x⊗1 + g⊗x. Non-unimodular and S² ≠ id, which makes it the
/// smallest stress test for modular elements and regularity.
pub fn taft4() -> HopfObject {
    let sp = Space::atomic(
        AtomSpace::new(
            "taft4",
            vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        )
        .expect("taft labels"),
    );
    let one = Scalar::one();
    let m1 = -&one;
    // Rows i, columns j of the product e_i·e_j; indices 1=unit, g, x, gx.
    #[rustfmt::skip]
    let triples: Vec<(usize, usize, usize, Scalar)> = vec![
        (0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (0, 2, 2, one.clone()), (0, 3, 3, one.clone()),
        (1, 0, 1, one.clone()), (1, 1, 0, one.clone()), (1, 2, 3, one.clone()), (1, 3, 2, one.clone()),
        (2, 0, 2, one.clone()), (2, 1, 3, m1.clone()),
        (3, 0, 3, one.clone()), (3, 1, 2, m1.clone()),
    ];
    let alg = Algebra::from_triples("taft4", sp.clone(), &triples, Some(Element::basis(&sp, 0)));
    hopf_from_parts(
        alg,
        |i| match i {
            0 => vec![(0, Scalar::one())],
            1 => vec![(1 * 4 + 1, Scalar::one())],
            2 => vec![(2 * 4 + 0, Scalar::one()), (1 * 4 + 2, Scalar::one())],
            _ => vec![(3 * 4 + 1, Scalar::one()), (0 * 4 + 3, Scalar::one())],
        },
        vec![Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()],
        |i| match i {
            0 => vec![(0, Scalar::one())],
            1 => vec![(1, Scalar::one())],
            2 => vec![(3, -&Scalar::one())],
            _ => vec![(2, Scalar::one())],
        },
        None,
    )
}

/// Left integral on taft4: the gx-coefficient functional.
pub fn taft4_left_integral() -> Vec<Scalar> {
    vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()]
}

/// Right integral on taft4: the x-coefficient functional.
pub fn taft4_right_integral() -> Vec<Scalar> {
    vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()]
}

/// Resolves the finite unital catalog names: k<Group>, f<Group>, taft4.
/// Windowed K(ℤ) and Drinfeld doubles have their own entry points.
pub fn by_name(name: &str) -> Result<HopfObject, MhError> {
    if name == "taft4" {
        return Ok(taft4());
    }
    if let Some(gname) = name.strip_prefix('k') {
        if let Ok(g) = FiniteGroup::by_name(gname) {
            return Ok(group_algebra(&g));
        }
    }
    if let Some(gname) = name.strip_prefix('f') {
        if let Ok(g) = FiniteGroup::by_name(gname) {
            return Ok(function_algebra(&g));
        }
    }
    Err(MhError::Input(format!("unknown catalog name {name}")))
}

/// A two-sided integral for a named catalog instance, when one is known.
pub fn integral_by_name(name: &str, side: IntegralSide) -> Result<Vec<Scalar>, MhError> {
    if name == "taft4" {
        return Ok(match side {
            IntegralSide::Left => taft4_left_integral(),
            IntegralSide::Right => taft4_right_integral(),
        });
    }
    if let Some(gname) = name.strip_prefix('k') {
        if let Ok(g) = FiniteGroup::by_name(gname) {
            return Ok(group_algebra_integral(&g));
        }
    }
    if let Some(gname) = name.strip_prefix('f') {
        if let Ok(g) = FiniteGroup::by_name(gname) {
            return Ok(function_algebra_integral(&g));
        }
    }
    Err(MhError::Input(format!("no known integral for {name}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralSide {
    Left,
    Right,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_table_matches_dihedral_relations() {
        let g = FiniteGroup::s3();
        let idx = |l: &str| g.labels.iter().position(|x| x == l).unwrap();
        // rs = sr² and sr·sr = e.
        assert_eq!(g.mul(idx("r"), idx("s")), idx("sr2"));
        assert_eq!(g.mul(idx("s"), idx("r")), idx("sr"));
        assert_eq!(g.mul(idx("sr"), idx("sr")), idx("e"));
        assert_eq!(g.inv(idx("r")), idx("r2"));
        assert_eq!(g.inv(idx("s")), idx("s"));
    }

    #[test]
    fn group_and_function_algebras_are_multiplier_hopf() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::s3(), FiniteGroup::c2xc2()] {
            let kg = group_algebra(&g);
            kg.algebra.check_associativity().unwrap();
            kg.algebra.check_unit().unwrap();
            kg.algebra.check_star().unwrap();
            kg.check_multiplier_hopf().unwrap();
            kg.check_star_coproduct().unwrap();
            let fgr = function_algebra(&g);
            fgr.algebra.check_associativity().unwrap();
            fgr.algebra.check_star().unwrap();
            fgr.check_multiplier_hopf().unwrap();
            fgr.check_star_coproduct().unwrap();
        }
    }

    #[test]
    fn group_integrals_are_two_sided() {
        let g = FiniteGroup::s3();
        let kg = group_algebra(&g);
        let phi = group_algebra_integral(&g);
        kg.check_left_integral(&phi).unwrap();
        kg.check_right_integral(&phi).unwrap();
        let fgr = function_algebra(&g);
        let psi = function_algebra_integral(&g);
        fgr.check_left_integral(&psi).unwrap();
        fgr.check_right_integral(&psi).unwrap();
    }

    #[test]
    fn taft4_is_regular_and_non_unimodular() {
        let h = taft4();
        h.algebra.check_associativity().unwrap();
        h.algebra.check_unit().unwrap();
        h.check_multiplier_hopf().unwrap();
        h.check_regular().unwrap();
        // S² sends x to −x.
        let s = &h.co.antipode;
        let x = Element::basis(&h.algebra.space, 2);
        assert_eq!(s.apply(&s.apply(&x)), x.neg());
        let phi = taft4_left_integral();
        h.check_left_integral(&phi).unwrap();
        assert!(h.check_right_integral(&phi).is_err(), "phi is left only");
        let psi = taft4_right_integral();
        h.check_right_integral(&psi).unwrap();
        // Modular element is g: (φ⊗id)Δ(a) = φ(a)g.
        let delta = h.modular_element(&phi).unwrap();
        assert_eq!(delta, Element::basis(&h.algebra.space, 1));
    }

    #[test]
    fn unimodular_instances_have_trivial_modular_element() {
        let g = FiniteGroup::s3();
        let kg = group_algebra(&g);
        let delta = kg.modular_element(&group_algebra_integral(&g)).unwrap();
        assert_eq!(&delta, kg.algebra.unit_element().unwrap());
    }
}
