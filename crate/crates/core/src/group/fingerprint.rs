use alloc::vec::Vec;

use super::{ClassAlgebra, ClassTable, GroupTable};
use crate::bitset::ElementSet;

/// Isomorphism invariants: order, class-size multiset and the order of
/// the abelianization. Equal fingerprints do not prove isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub abelianization: usize,
}

impl Fingerprint {
    pub fn of(g: &GroupTable) -> Fingerprint {
        let ct = ClassTable::new(g);
        Fingerprint {
            order: g.order(),
            class_sizes: ct.size_multiset(),
            abelianization: g.order() / g.derived_subgroup().len(),
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.abelianization == 1
    }
}

impl GroupTable {
    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().len() == self.order()
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().is_none_or(|s| s.len() == 1)
    }

    /// `G, G', G'', ...` down to the first repeated term.
    pub fn derived_series(&self) -> Vec<ElementSet> {
        let mut series = alloc::vec![self.full_set()];
        loop {
            let cur = series.last().expect("nonempty");
            let (gens, _) = self.generators_of(cur);
            let mut comms = Vec::new();
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    comms.push(self.commutator(gens[i], gens[j]));
                }
            }
            let next = self.normal_closure(&comms);
            if next == *cur {
                return series;
            }
            series.push(next);
        }
    }

    /// Nontrivial with no proper nontrivial normal subgroup.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        let ct = ClassTable::new(self);
        let alg = ClassAlgebra::new(self, &ct);
        (1..ct.len()).all(|i| alg.closure(&ElementSet::singleton(ct.len(), i as u32)).is_full())
    }

    pub fn is_nonabelian_simple(&self) -> bool {
        !self.is_abelian() && self.is_simple()
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{build_group, BuildOptions, GroupTable};
    use crate::spec::GroupSpec;

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), &BuildOptions::default()).unwrap()
    }

    #[test]
    fn simplicity() {
        for s in ["A_5", "A_6", "PSL(2,7)", "C_5"] {
            assert!(build(s).is_simple(), "{s}");
        }
        for s in ["S_4", "SL(2,5)", "A_4", "C_6", "trivial"] {
            assert!(!build(s).is_simple(), "{s}");
        }
        assert!(!build("C_5").is_nonabelian_simple());
    }

    #[test]
    fn derived_series_and_solubility() {
        let s4 = build("S_4");
        let lens: alloc::vec::Vec<usize> = s4.derived_series().iter().map(|s| s.len()).collect();
        assert_eq!(lens, [24, 12, 4, 1]);
        assert!(s4.is_soluble());
        assert!(!build("SL(2,5)").is_soluble());
        assert!(build("SL(2,5)").is_perfect());
        assert!(!build("SL(2,3)").is_perfect());
    }

    #[test]
    fn psl27_and_psl32_share_a_fingerprint() {
        let a = super::Fingerprint::of(&build("PSL(2,7)"));
        let b = super::Fingerprint::of(&build("SL(3,2)"));
        assert_eq!(a, b);
        assert!(a.is_perfect());
    }
}
