use alloc::vec::Vec;

use super::{Elem, GroupTable};
use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};

/// An automorphism stored as a full index permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    map: Vec<Elem>,
    source: Vec<(Elem, Elem)>,
}

impl Automorphism {
    pub fn identity(g: &GroupTable) -> Automorphism {
        Automorphism {
            map: g.elements().collect(),
            source: g.generators().iter().map(|&x| (x, x)).collect(),
        }
    }

    /// Conjugation `x ↦ a^-1 x a`.
    pub fn inner(g: &GroupTable, a: Elem) -> Automorphism {
        Automorphism {
            map: g.elements().map(|x| g.conj(x, a)).collect(),
            source: g.generators().iter().map(|&x| (x, g.conj(x, a))).collect(),
        }
    }

    /// The homomorphism extending `gens[i] ↦ images[i]`, provided it exists
    /// and is bijective.
    pub fn from_images(g: &GroupTable, gens: &[Elem], images: &[Elem]) -> Result<Automorphism> {
        if gens.len() != images.len() {
            return Err(CoreError::LengthMismatch {
                expected: gens.len(),
                got: images.len(),
            });
        }
        let order = g.order();
        for &x in gens.iter().chain(images) {
            if x as usize >= order {
                return Err(CoreError::OutOfRange {
                    index: x as usize,
                    len: order,
                });
            }
        }
        const UNSET: Elem = Elem::MAX;
        let mut map = alloc::vec![UNSET; order];
        map[0] = 0;
        let mut queue = alloc::vec![0];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (&s, &t) in gens.iter().zip(images) {
                let y = g.mul(x, s);
                let fy = g.mul(map[x as usize], t);
                if map[y as usize] == UNSET {
                    map[y as usize] = fy;
                    queue.push(y);
                } else if map[y as usize] != fy {
                    return Err(CoreError::NotAHomomorphism);
                }
            }
            i += 1;
        }
        if queue.len() != order {
            return Err(CoreError::GensDoNotGenerate);
        }
        let image = ElementSet::from_indices(order, map.iter().copied());
        if !image.is_full() {
            return Err(CoreError::NotBijective);
        }
        Ok(Automorphism {
            map,
            source: gens.iter().copied().zip(images.iter().copied()).collect(),
        })
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x as usize]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn source(&self) -> &[(Elem, Elem)] {
        &self.source
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = alloc::vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y as usize] = x as Elem;
        }
        Automorphism {
            source: self.source.iter().map(|&(a, b)| (b, a)).collect(),
            map: inv,
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            map: self.map.iter().map(|&y| other.map[y as usize]).collect(),
            source: self
                .source
                .iter()
                .map(|&(a, b)| (a, other.apply(b)))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Automorphism {
        let mut acc = Automorphism {
            map: (0..self.map.len() as Elem).collect(),
            source: self.source.iter().map(|&(a, _)| (a, a)).collect(),
        };
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| x as Elem == y)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.then(self);
            k += 1;
        }
        k
    }

    pub fn fixed_points(&self) -> ElementSet {
        ElementSet::from_indices(
            self.map.len(),
            (0..self.map.len() as Elem).filter(|&x| self.apply(x) == x),
        )
    }

    pub fn image_of(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(s.universe(), s.iter().map(|x| self.apply(x)))
    }

    /// Checks `f(xy) = f(x) f(y)` over every pair.
    pub fn verify_exhaustive(&self, g: &GroupTable) -> bool {
        g.elements().all(|x| {
            g.elements()
                .all(|y| self.apply(g.mul(x, y)) == g.mul(self.apply(x), self.apply(y)))
        })
    }
}
