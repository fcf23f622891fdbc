//! Direct, central and cyclic semidirect products.

use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{
    build::{alternating_gens, perm_group, BuildOptions},
    close, Automorphism, Elem, ElementForm, FactorData, GroupTable,
};
use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};
use crate::perm::Perm;
use crate::spec::{GroupSpec, Identification};

fn checked_order(orders: impl IntoIterator<Item = usize>, cap: usize) -> Result<usize> {
    let mut total: u128 = 1;
    for o in orders {
        total = total.saturating_mul(o as u128);
    }
    if total > cap as u128 {
        return Err(CoreError::CapExceeded {
            what: "group order",
            size: total,
            cap: cap as u128,
        });
    }
    Ok(total as usize)
}

fn tuple(f: &ElementForm) -> &[u32] {
    match f {
        ElementForm::Tuple(t) => t,
        _ => unreachable!("product element"),
    }
}

/// `F_1 × ... × F_k`, generated by the embedded factor generators.
pub fn direct_product(factors: &[Arc<GroupTable>], cap: usize) -> Result<GroupTable> {
    checked_order(factors.iter().map(|f| f.order()), cap)?;
    let k = factors.len();
    let mut gens = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for &g in f.generators() {
            let mut t = alloc::vec![0u32; k];
            t[i] = g;
            gens.push(ElementForm::Tuple(t));
        }
    }
    let closure = close(
        ElementForm::Tuple(alloc::vec![0; k]),
        &gens,
        |a, b| {
            let (a, b) = (tuple(a), tuple(b));
            ElementForm::Tuple(
                factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.mul(a[i], b[i]))
                    .collect(),
            )
        },
        cap,
    )?;
    let index: HashMap<Vec<u32>, Elem> = closure
        .elements
        .iter()
        .enumerate()
        .map(|(i, f)| (tuple(f).to_vec(), i as Elem))
        .collect();
    let mut t = GroupTable::from_closure("direct".into(), closure, gens.len());
    let order = t.order();
    let data = factors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let embedding: Vec<Elem> = f
                .elements()
                .map(|x| {
                    let mut c = alloc::vec![0u32; k];
                    c[i] = x;
                    index[&c]
                })
                .collect();
            let subgroup = ElementSet::from_indices(order, embedding.iter().copied());
            FactorData {
                table: f.clone(),
                embedding,
                subgroup,
            }
        })
        .collect();
    t.set_factors(data);
    t.set_components(factors.to_vec());
    Ok(t)
}

/// Least element of order `|Z|` generating a cyclic centre.
fn cyclic_center_generator(f: &GroupTable) -> Option<Elem> {
    let z = f.center();
    z.iter().find(|&x| f.element_order(x) == z.len())
}

/// Direct product of the factors modulo the identification subgroup.
pub fn central_product(
    factors: &[Arc<GroupTable>],
    ident: &Identification,
    cap: usize,
) -> Result<GroupTable> {
    let k = factors.len();
    let d = direct_product(factors, cap.saturating_mul(64))?;
    let index_of = |c: &[u32]| -> Elem {
        let f = ElementForm::Tuple(c.to_vec());
        d.index_of(&f).expect("tuple in product")
    };
    let glue_gens: Vec<Elem> = match ident {
        Identification::Trivial => Vec::new(),
        Identification::Centers => {
            let zs = factors
                .iter()
                .map(|f| cyclic_center_generator(f))
                .collect::<Option<Vec<_>>>()
                .ok_or(CoreError::IdentificationNotIsomorphism)?;
            let m = factors[0].center().len();
            if factors.iter().any(|f| f.center().len() != m) {
                return Err(CoreError::IdentificationNotIsomorphism);
            }
            (0..k.saturating_sub(1))
                .map(|i| {
                    let mut c = alloc::vec![0u32; k];
                    c[i] = zs[i];
                    c[i + 1] = factors[i + 1].inv(zs[i + 1]);
                    index_of(&c)
                })
                .collect()
        }
        Identification::Glue(rows) => {
            let mut out = Vec::new();
            for row in rows {
                if row.len() != k {
                    return Err(CoreError::LengthMismatch {
                        expected: k,
                        got: row.len(),
                    });
                }
                for (f, &x) in factors.iter().zip(row) {
                    if x as usize >= f.order() {
                        return Err(CoreError::OutOfRange {
                            index: x as usize,
                            len: f.order(),
                        });
                    }
                    if !f.generators().iter().all(|&g| f.mul(x, g) == f.mul(g, x)) {
                        return Err(CoreError::IdentificationNotCentral);
                    }
                }
                out.push(index_of(row));
            }
            out
        }
    };
    let glue = d.generate(&glue_gens);
    for fd in d.factors() {
        if fd.subgroup.intersection(&glue).len() != 1 {
            return Err(CoreError::IdentificationNotIsomorphism);
        }
    }
    let order = d.order() / glue.len();
    if order > cap {
        return Err(CoreError::CapExceeded {
            what: "group order",
            size: order as u128,
            cap: cap as u128,
        });
    }
    let q = d.quotient(&glue)?;
    let mut t = q.table;
    let factors_data: Vec<FactorData> = d
        .factors()
        .iter()
        .map(|fd| {
            let embedding: Vec<Elem> = fd.embedding.iter().map(|&x| q.projection[x as usize]).collect();
            let subgroup = ElementSet::from_indices(t.order(), embedding.iter().copied());
            FactorData {
                table: fd.table.clone(),
                embedding,
                subgroup,
            }
        })
        .collect();
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (&factors_data[i], &factors_data[j]);
            for &x in a.table.generators() {
                for &y in b.table.generators() {
                    let (x, y) = (a.embedding[x as usize], b.embedding[y as usize]);
                    debug_assert_eq!(t.mul(x, y), t.mul(y, x));
                }
            }
        }
    }
    t.set_factors(factors_data);
    Ok(t)
}

/// `N ⋊ <t>` with `t` of order `m` and `t^-1 x t = f(x)`.
pub fn semidirect_cyclic(
    n: Arc<GroupTable>,
    m: u32,
    f: &Automorphism,
    cap: usize,
) -> Result<GroupTable> {
    let m = m as usize;
    if m == 0 {
        return Err(CoreError::InvalidSpec("cyclic order must be positive".into()));
    }
    if !f.pow(m).is_identity() {
        return Err(CoreError::InvalidSpec(
            "automorphism order does not divide the cyclic order".into(),
        ));
    }
    checked_order([n.order(), m], cap)?;
    // conj_by[a] = f^-a, since t^a y t^-a = f^-a(y)
    let finv = f.inverse();
    let mut conj_by = alloc::vec![Automorphism::identity(&n)];
    for a in 1..m {
        let next = conj_by[a - 1].then(&finv);
        conj_by.push(next);
    }
    let mut gens: Vec<ElementForm> = n
        .generators()
        .iter()
        .map(|&g| ElementForm::Tuple(alloc::vec![g, 0]))
        .collect();
    if m > 1 {
        gens.push(ElementForm::Tuple(alloc::vec![0, 1]));
    }
    let closure = close(
        ElementForm::Tuple(alloc::vec![0, 0]),
        &gens,
        |a, b| {
            let (a, b) = (tuple(a), tuple(b));
            let y = conj_by[a[1] as usize].apply(b[0]);
            ElementForm::Tuple(alloc::vec![n.mul(a[0], y), ((a[1] + b[1]) as usize % m) as u32])
        },
        cap,
    )?;
    let cyc = Arc::new(perm_group(
        m,
        if m > 1 {
            alloc::vec![Perm::from_cycles(m, &[(0..m).collect()])?]
        } else {
            Vec::new()
        },
        &BuildOptions::default(),
    )?);
    let mut t = GroupTable::from_closure("semidirect".into(), closure, gens.len());
    let tel = if m > 1 { t.generators()[gens.len() - 1] } else { 0 };
    t.add_distinguished("t", tel);
    let order = t.order();
    let mut embedding = alloc::vec![0; n.order()];
    for x in t.elements() {
        let c = tuple(t.form(x));
        if c[1] == 0 {
            embedding[c[0] as usize] = x;
        }
    }
    let subgroup = ElementSet::from_indices(order, embedding.iter().copied());
    t.set_factors(alloc::vec![FactorData {
        table: n.clone(),
        embedding,
        subgroup,
    }]);
    t.set_components(alloc::vec![n, cyc]);
    Ok(t)
}

/// `(A_{n_1} × ... × A_{n_k}) ⋊ <τ>` with `τ` acting on every factor as
/// conjugation by the transposition `(1 2)`.
pub fn tau_product(ns: &[u32], cap: usize) -> Result<GroupTable> {
    let mut seen = alloc::collections::BTreeSet::new();
    for &n in ns {
        if !seen.insert(n) {
            return Err(CoreError::RepeatedDegree(n));
        }
        if n < 5 {
            return Err(CoreError::InvalidSpec(alloc::format!(
                "tau product needs degrees at least 5, got {n}"
            )));
        }
    }
    if let Some(order) = GroupSpec::Tau(ns.to_vec()).projected_order() {
        if order > cap as u128 {
            return Err(CoreError::CapExceeded {
                what: "group order",
                size: order,
                cap: cap as u128,
            });
        }
    }
    let opts = BuildOptions::with_cap(cap);
    let factors = ns
        .iter()
        .map(|&n| {
            let mut a = perm_group(n as usize, alternating_gens(n as usize), &opts)?;
            a.set_name(GroupSpec::Alternating(n).render());
            Ok(Arc::new(a))
        })
        .collect::<Result<Vec<_>>>()?;
    let d = Arc::new(direct_product(&factors, cap)?);
    let mut images = Vec::new();
    for (i, fd) in d.factors().iter().enumerate() {
        let a = &fd.table;
        let s = Perm::from_cycles(ns[i] as usize, &[alloc::vec![0, 1]])?;
        for &g in a.generators() {
            let ElementForm::Perm(p) = a.form(g) else { unreachable!() };
            let q = s.then(p).then(&s);
            let y = a.index_of(&ElementForm::Perm(q)).expect("A_n is normal in S_n");
            images.push(fd.embedding[y as usize]);
        }
    }
    let gens = d.generators().to_vec();
    let f = Automorphism::from_images(&d, &gens, &images)?;
    let mut t = semidirect_cyclic(d, 2, &f, cap)?;
    let tau = t.distinguished("t").unwrap_or(0);
    t.add_distinguished("tau", tau);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, ClassTable, Fingerprint};

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), &crate::group::BuildOptions::default()).unwrap()
    }

    #[test]
    fn direct_product_orders_and_factors() {
        let g = build("A_4 x C_2");
        assert_eq!(g.order(), 24);
        assert_eq!(g.factors().len(), 2);
        assert_eq!(g.factors()[0].subgroup.len(), 12);
        assert!(g.is_normal(&g.factors()[1].subgroup));
        let x = g.parse_element("<(123) | (12)>").unwrap();
        assert_eq!(g.display(x), "<(123) | (12)>");
    }

    #[test]
    fn central_products() {
        let g = build("central(SL(2,3), SL(2,3))");
        assert_eq!(g.order(), 288);
        assert_eq!(build("central(SL(2,5), SL(2,5))").order(), 7200);
        assert_eq!(build("central(SL(2,3), C_2; trivial)").order(), 48);
        let f = g.factors();
        for &x in f[0].table.generators() {
            for &y in f[1].table.generators() {
                let (x, y) = (f[0].embedding[x as usize], f[1].embedding[y as usize]);
                assert_eq!(g.mul(x, y), g.mul(y, x));
            }
        }
    }

    #[test]
    fn central_quotient_matches_product_of_central_quotients() {
        let g = build("central(SL(2,3), SL(2,3))");
        let q = g.quotient(&g.center()).unwrap().table;
        let a = build("PSL(2,3) x PSL(2,3)");
        assert_eq!(ClassTable::new(&q).size_multiset(), ClassTable::new(&a).size_multiset());
    }

    #[test]
    fn bad_identifications() {
        let a = Arc::new(build("S_3"));
        let b = Arc::new(build("C_2"));
        let err = central_product(&[a.clone(), b.clone()], &Identification::Glue(alloc::vec![alloc::vec![1, 1]]), 1000);
        assert_eq!(err.unwrap_err(), CoreError::IdentificationNotCentral);
        let c = Arc::new(build("C_4"));
        let err = central_product(&[c.clone(), b], &Identification::Glue(alloc::vec![alloc::vec![1, 1]]), 1000);
        assert_eq!(err.unwrap_err(), CoreError::IdentificationNotIsomorphism);
        let err = central_product(&[c, Arc::new(build("C_3"))], &Identification::Centers, 1000);
        assert_eq!(err.unwrap_err(), CoreError::IdentificationNotIsomorphism);
    }

    /// The same group as a permutation group on disjoint blocks of points,
    /// with `τ = (1 2)(6 7)...`.
    fn tau_oracle(ns: &[usize]) -> GroupTable {
        let total: usize = ns.iter().sum();
        let mut gens = Vec::new();
        let mut tau_cycles = Vec::new();
        let mut off = 0;
        for &n in ns {
            for g in alternating_gens(n) {
                let mut img: Vec<u16> = (0..total as u16).collect();
                for x in 0..n {
                    img[off + x] = (off + g.image(x)) as u16;
                }
                gens.push(Perm::from_images(img).unwrap());
            }
            tau_cycles.push(alloc::vec![off, off + 1]);
            off += n;
        }
        if total == 0 {
            gens.push(Perm::from_images(alloc::vec![1, 0]).unwrap());
            return perm_group(2, gens, &BuildOptions::default()).unwrap();
        }
        gens.push(Perm::from_cycles(total, &tau_cycles).unwrap());
        perm_group(total, gens, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn tau_products() {
        let g = tau_product(&[5], 1 << 20).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(Fingerprint::of(&g), Fingerprint::of(&build("S_5")));
        assert_eq!(Fingerprint::of(&g), Fingerprint::of(&tau_oracle(&[5])));
        let e = tau_product(&[], 100).unwrap();
        assert_eq!(e.order(), 2);
        let tau = e.distinguished("tau").unwrap();
        assert_ne!(tau, 0);
        assert_eq!(tau_product(&[5, 5], 1 << 20).unwrap_err(), CoreError::RepeatedDegree(5));
    }

    #[test]
    fn tau_product_5_6_matches_oracle() {
        let g = tau_product(&[5, 6], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 43200);
        let tau = g.distinguished("tau").unwrap();
        assert_eq!(g.element_order(tau), 2);
        let o = tau_oracle(&[5, 6]);
        assert_eq!(o.order(), 43200);
        assert_eq!(ClassTable::new(&g).size_multiset(), ClassTable::new(&o).size_multiset());
    }

    const DEFAULT_CAP: usize = crate::group::DEFAULT_ENUMERATION_CAP;

    #[test]
    fn semidirect_from_spec() {
        let g = build("semidirect(C_5; 4; 2)");
        assert_eq!(g.order(), 20);
        assert!(!g.is_abelian());
        assert_eq!(g.center().len(), 1);
    }
}
