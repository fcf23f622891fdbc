//! Conjugacy classes and products of classes.

use alloc::vec::Vec;

use super::{Elem, GroupTable};
use crate::bitset::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Least element index in the class.
    pub rep: Elem,
    pub size: usize,
    pub members: ElementSet,
}

/// The partition of a group into conjugacy classes, sorted by
/// `(size, rep)`; the identity class is always first.
#[derive(Clone, Debug)]
pub struct ClassTable {
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl ClassTable {
    pub fn new(g: &GroupTable) -> ClassTable {
        let order = g.order();
        let ng = g.generators().len();
        let mut seen = ElementSet::empty(order);
        let mut classes = Vec::new();
        for x in g.elements() {
            if seen.contains(x) {
                continue;
            }
            let mut members = ElementSet::singleton(order, x);
            seen.insert(x);
            let mut queue = alloc::vec![x];
            let mut i = 0;
            while i < queue.len() {
                let y = queue[i];
                for k in 0..ng {
                    let z = g.conj_gen(y, k);
                    if members.insert(z) {
                        seen.insert(z);
                        queue.push(z);
                    }
                }
                i += 1;
            }
            classes.push(ConjClass {
                rep: x,
                size: members.len(),
                members,
            });
        }
        classes.sort_by_key(|c| (c.size, c.rep));
        let mut class_of = alloc::vec![0u32; order];
        for (i, c) in classes.iter().enumerate() {
            for x in c.members.iter() {
                class_of[x as usize] = i as u32;
            }
        }
        ClassTable { classes, class_of }
    }

    /// Rebuilds a table from cached `(rep, size)` rows plus the class index
    /// of every element. Returns `None` when the data are inconsistent.
    pub fn from_parts(order: usize, class_of: Vec<u32>, reps: &[Elem]) -> Option<ClassTable> {
        if class_of.len() != order {
            return None;
        }
        let mut members: Vec<ElementSet> = reps.iter().map(|_| ElementSet::empty(order)).collect();
        for (x, &c) in class_of.iter().enumerate() {
            members.get_mut(c as usize)?.insert(x as Elem);
        }
        let classes = reps
            .iter()
            .zip(members)
            .map(|(&rep, members)| ConjClass {
                rep,
                size: members.len(),
                members,
            })
            .collect::<Vec<_>>();
        if classes.iter().any(|c| !c.members.contains(c.rep)) {
            return None;
        }
        Some(ClassTable { classes, class_of })
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    #[inline]
    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn class_index_table(&self) -> &[u32] {
        &self.class_of
    }

    pub fn class(&self, i: usize) -> &ConjClass {
        &self.classes[i]
    }

    /// Classes meeting `s`, as a set over class indices.
    pub fn classes_meeting(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.len(), s.iter().map(|x| self.class_of(x) as u32))
    }

    /// Union of the given classes, as a set of elements.
    pub fn union(&self, cs: &ElementSet) -> ElementSet {
        let order = self.class_of.len();
        let mut out = ElementSet::empty(order);
        for c in cs.iter() {
            out.union_with(&self.classes[c as usize].members);
        }
        out
    }

    pub fn is_union_of_classes(&self, s: &ElementSet) -> bool {
        self.union(&self.classes_meeting(s)) == *s
    }

    /// Multiset of class sizes, ascending.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.classes.iter().map(|c| c.size).collect();
        v.sort_unstable();
        v
    }
}

/// Which classes occur in each product of two classes.
///
/// Since products of unions of classes are again unions of classes, this
/// table answers every product-set question about normal subsets at the
/// level of class indices.
#[derive(Clone, Debug)]
pub struct ClassAlgebra {
    n: usize,
    support: Vec<ElementSet>,
}

impl ClassAlgebra {
    /// For each target class `k` and each `c` in `C_j`, the element
    /// `r_k c^-1` lies in exactly one class `C_i`, recording `k ∈ C_i C_j`.
    pub fn new(g: &GroupTable, ct: &ClassTable) -> ClassAlgebra {
        let n = ct.len();
        let mut support = alloc::vec![ElementSet::empty(n); n * n];
        for j in 0..n {
            let cj: Vec<Elem> = ct.class(j).members.iter().map(|c| g.inv(c)).collect();
            for k in 0..n {
                let r = ct.class(k).rep;
                for &ci in &cj {
                    let i = ct.class_of(g.mul(r, ci));
                    support[i * n + j].insert(k as u32);
                }
            }
        }
        ClassAlgebra { n, support }
    }

    pub fn num_classes(&self) -> usize {
        self.n
    }

    /// Classes occurring in `C_i C_j`.
    pub fn support(&self, i: usize, j: usize) -> &ElementSet {
        &self.support[i * self.n + j]
    }

    /// Product of two unions of classes.
    pub fn product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.n);
        for i in a.iter() {
            for j in b.iter() {
                out.union_with(self.support(i as usize, j as usize));
                if out.is_full() {
                    return out;
                }
            }
        }
        out
    }

    /// `A^{*t}` with `A^{*0} = {identity class}`.
    pub fn power(&self, a: &ElementSet, t: usize) -> ElementSet {
        let mut acc = ElementSet::singleton(self.n, 0);
        for _ in 0..t {
            acc = self.product(&acc, a);
        }
        acc
    }

    /// Normal subgroup generated by a union of classes.
    pub fn closure(&self, s: &ElementSet) -> ElementSet {
        let mut cur = s.clone();
        cur.insert(0);
        loop {
            let next = self.product(&cur, &cur).union(&cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}
