use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{close, Elem, ElementForm, GroupTable};
use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};

/// `G/N` together with the natural projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: GroupTable,
    /// Element of `G` → element of `G/N`.
    pub projection: Vec<Elem>,
}

impl Quotient {
    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x as usize]
    }

    pub fn project_set(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.table.order(), s.iter().map(|x| self.project(x)))
    }

    /// Full preimage of a set of cosets.
    pub fn preimage(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.projection.len(),
            (0..self.projection.len() as Elem).filter(|&x| s.contains(self.project(x))),
        )
    }
}

impl GroupTable {
    /// Cosets of a normal subgroup, each named by its least element index.
    pub fn quotient(&self, n: &ElementSet) -> Result<Quotient> {
        if !self.is_subgroup(n) {
            return Err(CoreError::NotSubgroup);
        }
        if !self.is_conjugation_invariant(n) {
            return Err(CoreError::NotNormal);
        }
        let rep = self.coset_reps(n);
        let gens: Vec<ElementForm> = self
            .generators()
            .iter()
            .map(|&g| ElementForm::Coset(rep[g as usize]))
            .collect();
        let closure = close(
            ElementForm::Coset(0),
            &gens,
            |a, b| match (a, b) {
                (ElementForm::Coset(x), ElementForm::Coset(y)) => {
                    ElementForm::Coset(rep[self.mul(*x, *y) as usize])
                }
                _ => unreachable!(),
            },
            usize::MAX,
        )?;
        let index: HashMap<Elem, Elem> = closure
            .elements
            .iter()
            .enumerate()
            .map(|(i, f)| match f {
                ElementForm::Coset(r) => (*r, i as Elem),
                _ => unreachable!(),
            })
            .collect();
        let projection: Vec<Elem> = rep.iter().map(|r| index[r]).collect();
        let mut table = GroupTable::from_closure(
            alloc::format!("{}/N", self.name()),
            closure,
            gens.len(),
        );
        let parent = Arc::new(self.clone());
        table.set_lift(parent, projection.clone());
        for (name, x) in &self.distinguished {
            let name: String = name.clone();
            table.add_distinguished(&name, projection[*x as usize]);
        }
        Ok(Quotient { table, projection })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildOptions, ClassTable};
    use crate::spec::GroupSpec;

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), &BuildOptions::default()).unwrap()
    }

    fn assert_projection_is_homomorphism(g: &GroupTable, q: &Quotient) {
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(q.project(g.mul(x, y)), q.table.mul(q.project(x), q.project(y)));
            }
        }
    }

    #[test]
    fn sl23_mod_center_is_a4_shaped() {
        let g = build("SL(2,3)");
        let q = g.quotient(&g.center()).unwrap();
        assert_eq!(q.table.order(), 12);
        assert_eq!(ClassTable::new(&q.table).size_multiset(), alloc::vec![1, 3, 4, 4]);
        assert_projection_is_homomorphism(&g, &q);
    }

    #[test]
    fn s4_mod_v4() {
        let g = build("S_4");
        let v = g.normal_closure(&[g.parse_element("(12)(34)").unwrap()]);
        let q = g.quotient(&v).unwrap();
        assert_eq!(q.table.order(), 6);
        assert!(!q.table.is_abelian());
        assert_eq!(ClassTable::new(&q.table).size_multiset(), alloc::vec![1, 2, 3]);
        assert_projection_is_homomorphism(&g, &q);
        assert_eq!(q.preimage(&q.table.trivial_set()), v);
    }

    #[test]
    fn trivial_quotient_is_isomorphic() {
        let g = build("D_5");
        let q = g.quotient(&g.trivial_set()).unwrap();
        assert_eq!(q.table.order(), g.order());
        assert_projection_is_homomorphism(&g, &q);
        let x = g.parse_element("(12345)").unwrap();
        assert_eq!(q.table.parse_element("(12345)").unwrap(), q.project(x));
    }

    #[test]
    fn non_normal_and_non_subgroup() {
        let g = build("S_3");
        let t = g.parse_element("(12)").unwrap();
        assert_eq!(g.quotient(&g.generate(&[t])).unwrap_err(), CoreError::NotNormal);
        let s = ElementSet::from_indices(6, [0, t, g.parse_element("(13)").unwrap()]);
        assert_eq!(g.quotient(&s).unwrap_err(), CoreError::NotSubgroup);
    }

    #[test]
    fn psl_displays_a_representative() {
        let g = build("PSL(2,5)");
        assert_eq!(g.order(), 60);
        let x = g.parse_element("1,1;0,1").unwrap();
        assert_eq!(g.parse_element(&g.display(x)).unwrap(), x);
    }
}
