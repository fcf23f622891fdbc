//! Subgroup generation, closures and product sets.

use alloc::vec::Vec;

use super::{Elem, GroupTable};
use crate::bitset::ElementSet;

impl GroupTable {
    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[Elem]) -> ElementSet {
        let mut h = self.trivial_set();
        self.saturate(&mut h, gens);
        h
    }

    /// Closes `h` under right multiplication by `gens`. When `h` is
    /// contained in `<gens>` the result is `<gens>`.
    fn saturate(&self, h: &mut ElementSet, gens: &[Elem]) {
        let mut queue: Vec<Elem> = h.to_vec();
        let mut i = 0;
        while i < queue.len() {
            let y = queue[i];
            for &g in gens {
                let z = self.mul(y, g);
                if h.insert(z) {
                    queue.push(z);
                }
            }
            i += 1;
        }
    }

    /// Grows `h = <gens>` to `<gens, x>`; returns false if `x` was already in it.
    pub fn extend_subgroup(&self, h: &mut ElementSet, gens: &mut Vec<Elem>, x: Elem) -> bool {
        if h.contains(x) {
            return false;
        }
        gens.push(x);
        self.saturate(h, gens);
        true
    }

    /// A small generating set for the subgroup generated by the members of `s`,
    /// together with that subgroup.
    pub fn generators_of(&self, s: &ElementSet) -> (Vec<Elem>, ElementSet) {
        let mut h = self.trivial_set();
        let mut gens = Vec::new();
        for x in s.iter() {
            self.extend_subgroup(&mut h, &mut gens, x);
        }
        (gens, h)
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        if s.universe() != self.order() || !s.contains(0) {
            return false;
        }
        let mut h = self.trivial_set();
        let mut gens = Vec::new();
        for x in s.iter() {
            self.extend_subgroup(&mut h, &mut gens, x);
            if h.len() > s.len() || !h.is_subset(s) {
                return false;
            }
        }
        h == *s
    }

    /// Invariance of a set under conjugation by every generator.
    pub fn is_conjugation_invariant(&self, s: &ElementSet) -> bool {
        (0..self.generators().len()).all(|k| s.iter().all(|x| s.contains(self.conj_gen(x, k))))
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        self.is_subgroup(s) && self.is_conjugation_invariant(s)
    }

    /// Smallest normal subgroup containing `xs`.
    pub fn normal_closure(&self, xs: &[Elem]) -> ElementSet {
        let mut gens: Vec<Elem> = Vec::new();
        let mut h = self.trivial_set();
        for &x in xs {
            self.extend_subgroup(&mut h, &mut gens, x);
        }
        let ng = self.generators().len();
        let mut i = 0;
        while i < gens.len() {
            let g = gens[i];
            for k in 0..ng {
                let c = self.conj_gen(g, k);
                self.extend_subgroup(&mut h, &mut gens, c);
            }
            i += 1;
        }
        h
    }

    pub fn normal_closure_of_set(&self, s: &ElementSet) -> ElementSet {
        let (gens, _) = self.generators_of(s);
        self.normal_closure(&gens)
    }

    pub fn derived_subgroup(&self) -> ElementSet {
        let g = self.generators();
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                comms.push(self.commutator(g[i], g[j]));
            }
        }
        self.normal_closure(&comms)
    }

    /// `[N, G]` for a normal subgroup `N`.
    pub fn commutator_with_group(&self, n: &ElementSet) -> ElementSet {
        let (ngens, _) = self.generators_of(n);
        let mut comms = Vec::new();
        for &x in &ngens {
            for &s in self.generators() {
                comms.push(self.commutator(x, s));
            }
        }
        self.normal_closure(&comms)
    }

    pub fn center(&self) -> ElementSet {
        let gens = self.generators();
        ElementSet::from_indices(
            self.order(),
            self.elements().filter(|&x| {
                (0..gens.len()).all(|k| self.conj_gen(x, k) == x)
            }),
        )
    }

    pub fn centralizer(&self, x: Elem) -> ElementSet {
        ElementSet::from_indices(
            self.order(),
            self.elements().filter(|&y| self.mul(x, y) == self.mul(y, x)),
        )
    }

    /// Elements commuting with every member of `s`.
    pub fn centralizer_of_set(&self, s: &ElementSet) -> ElementSet {
        let (gens, _) = self.generators_of(s);
        ElementSet::from_indices(
            self.order(),
            self.elements()
                .filter(|&y| gens.iter().all(|&x| self.mul(x, y) == self.mul(y, x))),
        )
    }

    /// `A·B = {ab}`. Iterates over the smaller factor in the outer loop.
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        if a.is_empty() || b.is_empty() {
            return out;
        }
        if b.len() <= a.len() {
            for y in b.iter() {
                for x in a.iter() {
                    out.insert(self.mul(x, y));
                }
                if out.is_full() {
                    break;
                }
            }
        } else {
            for x in a.iter() {
                for y in b.iter() {
                    out.insert(self.mul(x, y));
                }
                if out.is_full() {
                    break;
                }
            }
        }
        out
    }

    /// `A^{*t}`, with `A^{*0} = {e}`.
    pub fn power_set(&self, a: &ElementSet, t: usize) -> ElementSet {
        let mut acc = self.trivial_set();
        for _ in 0..t {
            acc = self.product_set(&acc, a);
        }
        acc
    }

    /// Product of a list of sets, `{e}` for the empty list.
    pub fn product_of_sets(&self, sets: &[ElementSet]) -> ElementSet {
        sets.iter()
            .fold(self.trivial_set(), |acc, s| self.product_set(&acc, s))
    }

    /// Least element index in each coset `xN`, indexed by element.
    pub fn coset_reps(&self, n: &ElementSet) -> Vec<Elem> {
        let order = self.order();
        let mut rep = alloc::vec![Elem::MAX; order];
        let members = n.to_vec();
        for x in self.elements() {
            if rep[x as usize] != Elem::MAX {
                continue;
            }
            for &m in &members {
                rep[self.mul(x, m) as usize] = x;
            }
        }
        rep
    }

    /// Image of a set under a map given as an index table.
    pub fn image_of(&self, map: &[Elem], s: &ElementSet, target_order: usize) -> ElementSet {
        ElementSet::from_indices(target_order, s.iter().map(|x| map[x as usize]))
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{build_group, BuildOptions};
    use crate::spec::GroupSpec;

    fn build(s: &str) -> crate::group::GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), &BuildOptions::default()).unwrap()
    }

    #[test]
    fn axioms_exhaustive_small() {
        for s in ["S_4", "SL(2,3)", "D_5", "C_6", "PSL(2,5)"] {
            let g = build(s);
            for x in g.elements() {
                assert_eq!(g.mul(x, g.inv(x)), 0, "{s}");
                assert_eq!(g.mul(0, x), x);
                assert_eq!(g.mul(x, 0), x);
                for y in g.elements() {
                    let xy = g.mul(x, y);
                    assert_eq!(g.conj(x, y), g.mul(g.inv(y), xy));
                    for z in g.elements().step_by(7) {
                        assert_eq!(g.mul(xy, z), g.mul(x, g.mul(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn derived_and_center() {
        let s4 = build("S_4");
        assert_eq!(s4.derived_subgroup().len(), 12);
        assert_eq!(s4.center().len(), 1);
        let sl = build("SL(2,5)");
        assert_eq!(sl.center().len(), 2);
        assert_eq!(sl.derived_subgroup().len(), 120);
        let a4 = build("A_4");
        assert_eq!(a4.derived_subgroup().len(), 4);
    }

    #[test]
    fn subgroup_and_normality() {
        let s4 = build("S_4");
        let t = s4.parse_element("(12)").unwrap();
        let h = s4.generate(&[t]);
        assert_eq!(h.len(), 2);
        assert!(s4.is_subgroup(&h));
        assert!(!s4.is_normal(&h));
        assert_eq!(s4.normal_closure(&[t]).len(), 24);
        let v = s4.normal_closure(&[s4.parse_element("(12)(34)").unwrap()]);
        assert_eq!(v.len(), 4);
        assert!(s4.is_normal(&v));
        let mut not_closed = h.clone();
        not_closed.insert(s4.parse_element("(123)").unwrap());
        assert!(!s4.is_subgroup(&not_closed));
    }

    #[test]
    fn product_sets() {
        let s3 = build("S_3");
        let t = s3.parse_element("(12)").unwrap();
        let a = crate::bitset::ElementSet::from_indices(6, [0, t]);
        let p = s3.power_set(&a, 2);
        assert_eq!(p, a);
        assert_eq!(s3.power_set(&a, 0), s3.trivial_set());
    }
}
