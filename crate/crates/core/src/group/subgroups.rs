use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use super::{close, Elem, ElementForm, GroupTable};
use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};

/// Largest group order for which every subgroup is enumerated.
pub const DEFAULT_SUBGROUP_CAP: usize = 2000;

/// A subgroup rebuilt as a group in its own right.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    pub table: GroupTable,
    /// Subgroup element → parent element.
    pub embedding: Vec<Elem>,
    /// Parent element → subgroup element, `Elem::MAX` outside.
    pub restriction: Vec<Elem>,
}

impl SubgroupTable {
    pub fn to_parent(&self, x: Elem) -> Elem {
        self.embedding[x as usize]
    }

    pub fn to_parent_set(&self, s: &ElementSet, parent_order: usize) -> ElementSet {
        ElementSet::from_indices(parent_order, s.iter().map(|x| self.to_parent(x)))
    }

    /// A parent set restricted to the subgroup.
    pub fn from_parent_set(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.table.order(),
            s.iter()
                .map(|x| self.restriction[x as usize])
                .filter(|&x| x != Elem::MAX),
        )
    }
}

impl GroupTable {
    pub fn subgroup_table(&self, h: &ElementSet) -> Result<SubgroupTable> {
        if !self.is_subgroup(h) {
            return Err(CoreError::NotSubgroup);
        }
        let (gens, _) = self.generators_of(h);
        let forms: Vec<ElementForm> = gens.iter().map(|&g| ElementForm::Sub(g)).collect();
        let closure = close(
            ElementForm::Sub(0),
            &forms,
            |a, b| match (a, b) {
                (ElementForm::Sub(x), ElementForm::Sub(y)) => ElementForm::Sub(self.mul(*x, *y)),
                _ => unreachable!(),
            },
            usize::MAX,
        )?;
        let embedding: Vec<Elem> = closure
            .elements
            .iter()
            .map(|f| match f {
                ElementForm::Sub(x) => *x,
                _ => unreachable!(),
            })
            .collect();
        let mut restriction = alloc::vec![Elem::MAX; self.order()];
        for (i, &x) in embedding.iter().enumerate() {
            restriction[x as usize] = i as Elem;
        }
        let mut table = GroupTable::from_closure(alloc::format!("{}<H>", self.name()), closure, gens.len());
        table.set_lift(Arc::new(self.clone()), restriction.clone());
        Ok(SubgroupTable {
            table,
            embedding,
            restriction,
        })
    }

    /// One generator for each cyclic subgroup (its least index).
    pub fn cyclic_subgroup_generators(&self) -> Vec<Elem> {
        let mut seen: HashSet<ElementSet> = HashSet::new();
        let mut out = Vec::new();
        for x in self.elements() {
            if seen.insert(self.generate(&[x])) {
                out.push(x);
            }
        }
        out
    }

    /// All subgroups, as the join-closure of the cyclic subgroups.
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<ElementSet>> {
        if self.order() > cap {
            return Err(CoreError::CapExceeded {
                what: "subgroup enumeration order",
                size: self.order() as u128,
                cap: cap as u128,
            });
        }
        let cyclic = self.cyclic_subgroup_generators();
        let mut found: HashSet<ElementSet> = HashSet::new();
        let mut list: Vec<(ElementSet, Vec<Elem>)> = Vec::new();
        let t = self.trivial_set();
        found.insert(t.clone());
        list.push((t, Vec::new()));
        let limit = 64 * cap;
        let mut i = 0;
        while i < list.len() {
            let (h, gens) = list[i].clone();
            for &x in &cyclic {
                let (mut k, mut kg) = (h.clone(), gens.clone());
                if !self.extend_subgroup(&mut k, &mut kg, x) {
                    continue;
                }
                if !found.contains(&k) {
                    if found.len() >= limit {
                        return Err(CoreError::CapExceeded {
                            what: "subgroup count",
                            size: found.len() as u128 + 1,
                            cap: limit as u128,
                        });
                    }
                    found.insert(k.clone());
                    list.push((k, kg));
                }
            }
            i += 1;
        }
        let mut out: Vec<ElementSet> = list.into_iter().map(|(h, _)| h).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Least number of elements generating the group.
    pub fn min_generators(&self, cap: usize) -> Result<usize> {
        if self.order() == 1 {
            return Ok(0);
        }
        let cyclic = self.cyclic_subgroup_generators();
        let mut level: HashMap<ElementSet, Vec<Elem>> = HashMap::new();
        level.insert(self.trivial_set(), Vec::new());
        let mut seen: HashSet<ElementSet> = HashSet::new();
        seen.insert(self.trivial_set());
        for d in 1.. {
            let mut next: HashMap<ElementSet, Vec<Elem>> = HashMap::new();
            for (h, gens) in &level {
                for &x in &cyclic {
                    let (mut k, mut kg) = (h.clone(), gens.clone());
                    if !self.extend_subgroup(&mut k, &mut kg, x) {
                        continue;
                    }
                    if k.is_full() {
                        return Ok(d);
                    }
                    if seen.insert(k.clone()) {
                        if seen.len() > 64 * cap {
                            return Err(CoreError::CapExceeded {
                                what: "subgroup count",
                                size: seen.len() as u128,
                                cap: 64 * cap as u128,
                            });
                        }
                        next.insert(k, kg);
                    }
                }
            }
            level = next;
        }
        unreachable!()
    }

    /// True when the given elements generate the group.
    pub fn generates(&self, xs: &[Elem]) -> bool {
        self.generate(xs).is_full()
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

    #[test]
    fn subgroup_counts() {
        assert_eq!(build("S_3").all_subgroups(2000).unwrap().len(), 6);
        assert_eq!(build("S_4").all_subgroups(2000).unwrap().len(), 30);
        assert_eq!(build("A_5").all_subgroups(2000).unwrap().len(), 59);
        assert_eq!(build("C_2 x C_2 x C_2").all_subgroups(2000).unwrap().len(), 16);
    }

    #[test]
    fn subgroup_counts_match_brute_force_on_small_groups() {
        for s in ["D_4", "C_6", "C_2 x C_2 x C_2"] {
            let g = build(s);
            let n = g.order();
            let mut count = 0;
            for mask in 0u32..(1 << n) {
                let set = ElementSet::from_indices(n, (0..n as u32).filter(|i| mask >> i & 1 == 1));
                if g.is_subgroup(&set) {
                    count += 1;
                }
            }
            assert_eq!(g.all_subgroups(2000).unwrap().len(), count, "{s}");
        }
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(build("trivial").min_generators(2000).unwrap(), 0);
        assert_eq!(build("C_6").min_generators(2000).unwrap(), 1);
        assert_eq!(build("S_4").min_generators(2000).unwrap(), 2);
        assert_eq!(build("C_2 x C_2 x C_2").min_generators(2000).unwrap(), 3);
        assert_eq!(build("C_2 x C_3").min_generators(2000).unwrap(), 1);
    }

    #[test]
    fn subgroup_table_round_trip() {
        let g = build("S_4");
        let h = g.derived_subgroup();
        let st = g.subgroup_table(&h).unwrap();
        assert_eq!(st.table.order(), 12);
        for x in st.table.elements() {
            for y in st.table.elements() {
                assert_eq!(st.to_parent(st.table.mul(x, y)), g.mul(st.to_parent(x), st.to_parent(y)));
            }
        }
        assert_eq!(st.to_parent_set(&st.table.full_set(), 24), h);
        let x = st.table.parse_element("(123)").unwrap();
        assert_eq!(st.to_parent(x), g.parse_element("(123)").unwrap());
        assert!(st.table.parse_element("(12)").is_err());
    }

    #[test]
    fn enumeration_cap() {
        assert!(build("S_5").all_subgroups(100).unwrap_err().is_cap());
    }
}
