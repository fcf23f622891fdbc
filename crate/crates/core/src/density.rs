//! The subgroup `G_*` and normal-closure checks on truncations of
//! `(∏ A_n) ⋊ C_2`.

use alloc::vec::Vec;

use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};
use crate::group::{normal_subgroups, tau_product, Elem, Fingerprint, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GStarDecomposition {
    pub g_star: ElementSet,
    pub derived: ElementSet,
    /// Kernels of the nonabelian simple quotients.
    pub simple_kernels: Vec<ElementSet>,
    pub abelian_part: Fingerprint,
    pub simple_factors: Vec<Fingerprint>,
    /// `|G/G_*| = |G/G'| · ∏ |G/K_i|`, i.e. `G/G_*` is the full product.
    pub product_form: bool,
}

/// Intersection of `G'` with the kernels of all nonabelian simple quotients.
pub fn g_star(g: &GroupTable, lattice_cap: usize) -> Result<GStarDecomposition> {
    let lat = normal_subgroups(g, lattice_cap)?;
    let derived = g.derived_subgroup();
    let simple_kernels: Vec<ElementSet> = lat
        .maximal()
        .into_iter()
        .filter(|k| !derived.is_subset(k))
        .cloned()
        .collect();
    let mut g_star = derived.clone();
    for k in &simple_kernels {
        g_star.intersect_with(k);
    }
    let abelian_part = Fingerprint::of(&g.quotient(&derived)?.table);
    let simple_factors = simple_kernels
        .iter()
        .map(|k| Ok(Fingerprint::of(&g.quotient(k)?.table)))
        .collect::<Result<Vec<_>>>()?;
    let expected = simple_factors
        .iter()
        .fold(abelian_part.order as u128, |acc, f| acc.saturating_mul(f.order as u128));
    let product_form = (g.order() / g_star.len()) as u128 == expected;
    Ok(GStarDecomposition {
        g_star,
        derived,
        simple_kernels,
        abelian_part,
        simple_factors,
        product_form,
    })
}

/// `(∏ A_n) ⋊ ⟨τ⟩` with `τ` acting on each factor as conjugation by `(1 2)`.
pub fn build_tau_product(ns: &[u32], cap: usize) -> Result<GroupTable> {
    tau_product(ns, cap)
}

/// Normal closure of `x` and whether it is the whole group.
pub fn dense_closure_check(g: &GroupTable, x: Elem) -> (bool, ElementSet) {
    let c = g.normal_closure(&[x]);
    (c.is_full(), c)
}

/// For each degree, whether `τ` normally generates `A_n ⋊ C_2`. The
/// closure of `τ` in the full product projects onto each such factor,
/// so this is exact without building the product.
pub fn tau_coordinate_check(ns: &[u32], cap: usize) -> Result<Vec<(u32, bool)>> {
    ns.iter()
        .map(|&n| {
            let g = tau_product(&[n], cap)?;
            let tau = g.distinguished("tau").ok_or(CoreError::FactorDataMissing)?;
            Ok((n, dense_closure_check(&g, tau).0))
        })
        .collect()
}

/// `G' ⊆ N`.
pub fn abelian_quotient_check(g: &GroupTable, n: &ElementSet) -> Result<bool> {
    if !g.is_subgroup(n) || !g.is_normal(n) {
        return Err(CoreError::NotNormal);
    }
    Ok(g.derived_subgroup().is_subset(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildOptions, DEFAULT_ENUMERATION_CAP, DEFAULT_LATTICE_CAP};
    use crate::spec::GroupSpec;

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), &BuildOptions::default()).unwrap()
    }

    #[test]
    fn g_star_examples() {
        let s4 = build("S_4");
        let d = g_star(&s4, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(d.g_star, s4.derived_subgroup());
        assert_eq!(d.g_star.len(), 12);
        assert!(d.simple_kernels.is_empty());
        let a5 = build("A_5");
        let d = g_star(&a5, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(d.g_star, a5.trivial_set());
        let p = build("A_5 x C_6");
        let d = g_star(&p, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(d.g_star.len(), 1);
        assert!(d.product_form);
        for s in ["S_4", "A_5 x A_5", "SL(2,5)", "S_3 x A_5", "D_6"] {
            let g = build(s);
            let d = g_star(&g, DEFAULT_LATTICE_CAP).unwrap();
            assert!(d.g_star.is_subset(&d.derived), "{s}");
            assert!(d.product_form, "{s}");
        }
    }

    #[test]
    fn tau_products() {
        let g = build_tau_product(&[5], DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(Fingerprint::of(&g), Fingerprint::of(&build("S_5")));
        assert_eq!(build_tau_product(&[], DEFAULT_ENUMERATION_CAP).unwrap().order(), 2);
        assert_eq!(build_tau_product(&[5, 5], DEFAULT_ENUMERATION_CAP).unwrap_err(), CoreError::RepeatedDegree(5));
        assert!(build_tau_product(&[5, 6], 1000).unwrap_err().is_cap());
    }

    #[test]
    fn tau_56_is_normally_generated_by_tau() {
        let g = build_tau_product(&[5, 6], DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(g.order(), 43200);
        assert_eq!(g.order() / g.derived_subgroup().len(), 2);
        let tau = g.distinguished("tau").unwrap();
        assert!(dense_closure_check(&g, tau).0);
        assert_eq!(tau_coordinate_check(&[5, 6, 7], DEFAULT_ENUMERATION_CAP).unwrap(), alloc::vec![(5, true), (6, true), (7, true)]);
    }

    #[test]
    fn closure_examples() {
        let s4 = build("S_4");
        assert!(dense_closure_check(&s4, s4.parse_element("(12)").unwrap()).0);
        let c6 = build("C_6");
        for x in c6.elements() {
            let (whole, cl) = dense_closure_check(&c6, x);
            assert_eq!(cl, c6.generate(&[x]));
            assert_eq!(whole, c6.element_order(x) == 6);
        }
    }

    #[test]
    fn abelian_quotients() {
        let s4 = build("S_4");
        let a4 = s4.derived_subgroup();
        assert!(abelian_quotient_check(&s4, &a4).unwrap());
        let v4 = s4.normal_closure(&[s4.parse_element("(12)(34)").unwrap()]);
        assert!(!abelian_quotient_check(&s4, &v4).unwrap());
        assert!(abelian_quotient_check(&s4, &s4.full_set()).unwrap());
        let h = s4.generate(&[s4.parse_element("(12)").unwrap()]);
        assert_eq!(abelian_quotient_check(&s4, &h).unwrap_err(), CoreError::NotNormal);
    }
}
