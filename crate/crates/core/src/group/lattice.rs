//! Normal subgroups as unions of conjugacy classes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ClassAlgebra, ClassTable, GroupTable};
use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};

pub const DEFAULT_LATTICE_CAP: usize = 200;

/// Every normal subgroup of a group, sorted by `(order, class set)`.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    classes: ClassTable,
    algebra: ClassAlgebra,
    class_sets: Vec<ElementSet>,
    subgroups: Vec<ElementSet>,
}

/// Join-closure of the normal closures of single classes.
pub fn normal_subgroups(g: &GroupTable, cap: usize) -> Result<NormalLattice> {
    let ct = ClassTable::new(g);
    if ct.len() > cap {
        return Err(CoreError::LatticeCapExceeded {
            classes: ct.len(),
            cap,
        });
    }
    let alg = ClassAlgebra::new(g, &ct);
    NormalLattice::from_parts(ct, alg)
}

impl NormalLattice {
    pub fn from_parts(ct: ClassTable, alg: ClassAlgebra) -> Result<NormalLattice> {
        let n = ct.len();
        let mut found: BTreeSet<ElementSet> = BTreeSet::new();
        let mut list: Vec<ElementSet> = Vec::new();
        let trivial = ElementSet::singleton(n, 0);
        found.insert(trivial.clone());
        list.push(trivial);
        for i in 1..n {
            let c = alg.closure(&ElementSet::singleton(n, i as u32));
            if found.insert(c.clone()) {
                list.push(c);
            }
        }
        let minimal_generators = list.clone();
        let mut i = 0;
        while i < list.len() {
            let a = list[i].clone();
            for b in &minimal_generators {
                if b.is_subset(&a) {
                    continue;
                }
                let j = alg.closure(&a.union(b));
                if found.insert(j.clone()) {
                    list.push(j);
                }
            }
            i += 1;
        }
        list.sort_by(|a, b| {
            let (sa, sb) = (ct.union(a).len(), ct.union(b).len());
            sa.cmp(&sb).then_with(|| a.cmp(b))
        });
        let subgroups = list.iter().map(|s| ct.union(s)).collect();
        Ok(NormalLattice {
            classes: ct,
            algebra: alg,
            class_sets: list,
            subgroups,
        })
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn algebra(&self) -> &ClassAlgebra {
        &self.algebra
    }

    pub fn subgroups(&self) -> &[ElementSet] {
        &self.subgroups
    }

    pub fn class_sets(&self) -> &[ElementSet] {
        &self.class_sets
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn contains(&self, s: &ElementSet) -> bool {
        self.subgroups.contains(s)
    }

    /// Normal subgroups contained in `n`.
    pub fn below(&self, n: &ElementSet) -> Vec<&ElementSet> {
        self.subgroups.iter().filter(|s| s.is_subset(n)).collect()
    }

    /// Proper normal subgroups not contained in a larger proper one.
    pub fn maximal(&self) -> Vec<&ElementSet> {
        let top = self.subgroups.last().expect("whole group");
        let proper: Vec<&ElementSet> = self.subgroups.iter().filter(|s| *s != top).collect();
        proper
            .iter()
            .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .copied()
            .collect()
    }

    /// Nontrivial normal subgroups containing no smaller nontrivial one.
    pub fn minimal(&self) -> Vec<&ElementSet> {
        let nontrivial: Vec<&ElementSet> = self.subgroups.iter().filter(|s| s.len() > 1).collect();
        nontrivial
            .iter()
            .filter(|s| !nontrivial.iter().any(|t| t.len() < s.len() && t.is_subset(s)))
            .copied()
            .collect()
    }

    /// Intersection of all maximal normal subgroups; the trivial group has none.
    pub fn radical_of_maximals(&self) -> ElementSet {
        let maxes = self.maximal();
        let top = self.subgroups.last().expect("whole group").clone();
        maxes.into_iter().fold(top, |acc, m| acc.intersection(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildOptions};
    use crate::spec::GroupSpec;

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), &BuildOptions::default()).unwrap()
    }

    /// Every union of classes that is a subgroup.
    fn brute_force(g: &GroupTable) -> Vec<usize> {
        let ct = ClassTable::new(g);
        let n = ct.len();
        let mut sizes = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let cs = ElementSet::from_indices(n, (0..n as u32).filter(|i| mask >> i & 1 == 1));
            let s = ct.union(&cs);
            if g.is_subgroup(&s) {
                sizes.push(s.len());
            }
        }
        sizes.sort_unstable();
        sizes
    }

    fn sizes(l: &NormalLattice) -> Vec<usize> {
        l.subgroups().iter().map(|s| s.len()).collect()
    }

    #[test]
    fn known_lattices() {
        let s4 = build("S_4");
        let l = normal_subgroups(&s4, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(sizes(&l), [1, 4, 12, 24]);
        assert_eq!(sizes(&normal_subgroups(&build("A_5"), 200).unwrap()), [1, 60]);
        assert_eq!(sizes(&normal_subgroups(&build("C_4"), 200).unwrap()), [1, 2, 4]);
    }

    #[test]
    fn matches_class_union_brute_force() {
        for s in ["S_4", "D_6", "SL(2,3)", "C_2 x C_2 x C_3", "A_4 x C_2", "GL(2,3)"] {
            let g = build(s);
            let l = normal_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
            assert_eq!(sizes(&l), brute_force(&g), "{s}");
        }
    }

    #[test]
    fn closed_under_meet_and_join() {
        for s in ["D_8", "SL(2,3)", "A_4 x C_3"] {
            let g = build(s);
            let l = normal_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
            for a in l.subgroups() {
                assert!(g.is_normal(a));
                assert!(l.classes().is_union_of_classes(a));
                for b in l.subgroups() {
                    assert!(l.contains(&a.intersection(b)));
                    assert!(l.contains(&g.normal_closure_of_set(&a.union(b))));
                }
            }
        }
    }

    #[test]
    fn maximal_and_minimal() {
        let g = build("SL(2,5)");
        let l = normal_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(sizes(&l), [1, 2, 120]);
        assert_eq!(l.maximal().len(), 1);
        assert_eq!(l.maximal()[0].len(), 2);
        assert_eq!(l.minimal()[0].len(), 2);
    }

    #[test]
    fn cap() {
        let err = normal_subgroups(&build("C_7"), 5).unwrap_err();
        assert!(err.is_cap());
    }
}
