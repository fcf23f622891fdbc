//! Fully enumerated finite groups.
//!
//! A [`GroupTable`] is built by breadth-first closure over a generating set.
//! Every element index carries a word in the generators (its path in the
//! BFS tree), and the table stores right multiplication by each generator
//! and conjugation by each generator. A general product `x * y` walks the
//! word of `y` through the right-multiplication table, so no `order²`
//! Cayley table is ever materialised.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;

use hashbrown::HashMap;

use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};
use crate::fp::Matrix;
use crate::perm::Perm;

mod auto;
mod build;
mod classes;
mod fingerprint;
mod lattice;
mod ops;
mod product;
mod quotient;
mod residuals;
mod subgroups;

pub use auto::Automorphism;
pub use build::{build_group, BuildOptions, GeneratorData, GeneratorLoader, DEFAULT_ENUMERATION_CAP};
pub use classes::{ClassAlgebra, ClassTable, ConjClass};
pub use fingerprint::Fingerprint;
pub use lattice::{normal_subgroups, NormalLattice, DEFAULT_LATTICE_CAP};
pub use product::{central_product, direct_product, semidirect_cyclic, tau_product};
pub use quotient::Quotient;
pub use residuals::Residuals;
pub use subgroups::{SubgroupTable, DEFAULT_SUBGROUP_CAP};

/// Element index inside a [`GroupTable`]. Index 0 is always the identity.
pub type Elem = u32;

/// Canonical representation of an element, unique within its table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementForm {
    Perm(Perm),
    Matrix(Matrix),
    /// Component indices in the factor tables of a product.
    Tuple(Vec<u32>),
    /// Least element index of a coset in the parent table.
    Coset(u32),
    /// Element index in the parent table.
    Sub(u32),
}

/// A factor of a direct or central product, as seen inside the product.
#[derive(Clone, Debug)]
pub struct FactorData {
    pub table: Arc<GroupTable>,
    /// Factor element index → product element index.
    pub embedding: Vec<Elem>,
    /// Image of the factor inside the product.
    pub subgroup: ElementSet,
}

/// Link from a quotient or subgroup table back to the table it came from.
#[derive(Clone, Debug)]
pub(crate) struct Lift {
    pub parent: Arc<GroupTable>,
    /// Parent element → element of this table (`Elem::MAX` when absent).
    pub map: Vec<Elem>,
}

#[derive(Clone)]
pub struct GroupTable {
    name: String,
    forms: Vec<ElementForm>,
    gens: Vec<Elem>,
    gen_inv: Vec<Elem>,
    /// `rmul[x * ngens + k] = x * g_k`
    rmul: Vec<Elem>,
    /// `conj[k * order + x] = g_k^-1 x g_k`
    conj: Vec<Elem>,
    inv: Vec<Elem>,
    word_off: Vec<u32>,
    words: Vec<u16>,
    factors: Vec<FactorData>,
    components: Vec<Arc<GroupTable>>,
    distinguished: Vec<(String, Elem)>,
    lift: Option<Lift>,
}

pub(crate) struct Closure<E> {
    pub elements: Vec<E>,
    pub rmul: Vec<Elem>,
    pub parent: Vec<(Elem, u16)>,
}

/// Breadth-first closure of `gens` under right multiplication.
pub(crate) fn close<E, F>(identity: E, gens: &[E], mut mul: F, cap: usize) -> Result<Closure<E>>
where
    E: Clone + Eq + Hash,
    F: FnMut(&E, &E) -> E,
{
    let ng = gens.len();
    if ng > u16::MAX as usize {
        return Err(CoreError::InvalidSpec("too many generators".into()));
    }
    let mut index: HashMap<E, Elem> = HashMap::new();
    let mut elements = alloc::vec![identity.clone()];
    index.insert(identity, 0);
    let mut parent = alloc::vec![(0u32, 0u16)];
    let mut rmul = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for (k, g) in gens.iter().enumerate() {
            let y = mul(&elements[i], g);
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    if j >= cap {
                        return Err(CoreError::CapExceeded {
                            what: "group order",
                            size: j as u128 + 1,
                            cap: cap as u128,
                        });
                    }
                    index.insert(y.clone(), j as Elem);
                    elements.push(y);
                    parent.push((i as Elem, k as u16));
                    j as Elem
                }
            };
            rmul.push(j);
        }
        i += 1;
    }
    debug_assert_eq!(rmul.len(), elements.len() * ng);
    Ok(Closure {
        elements,
        rmul,
        parent,
    })
}

impl GroupTable {
    pub(crate) fn from_closure(
        name: String,
        closure: Closure<ElementForm>,
        ngens: usize,
    ) -> GroupTable {
        let Closure {
            elements: forms,
            rmul,
            parent,
        } = closure;
        let order = forms.len();
        let ng = ngens;

        let mut word_off = Vec::with_capacity(order + 1);
        let mut words: Vec<u16> = Vec::new();
        word_off.push(0);
        for x in 0..order {
            if x > 0 {
                let (p, k) = parent[x];
                let (a, b) = (word_off[p as usize] as usize, word_off[p as usize + 1] as usize);
                words.extend_from_within(a..b);
                words.push(k);
            }
            word_off.push(words.len() as u32);
        }

        let gens: Vec<Elem> = (0..ng).map(|k| rmul[k]).collect();
        let gen_inv: Vec<Elem> = (0..ng)
            .map(|k| {
                let mut prev = 0;
                let mut x = gens[k];
                while x != 0 {
                    prev = x;
                    x = rmul[x as usize * ng + k];
                }
                prev
            })
            .collect();

        let mut t = GroupTable {
            name,
            forms,
            gens,
            gen_inv,
            rmul,
            conj: Vec::new(),
            inv: Vec::new(),
            word_off,
            words,
            factors: Vec::new(),
            components: Vec::new(),
            distinguished: Vec::new(),
            lift: None,
        };

        // left multiplication by g_k^-1, filled in BFS order
        let mut conj = alloc::vec![0; ng * order];
        for k in 0..ng {
            let mut lmul = alloc::vec![0u32; order];
            lmul[0] = t.gen_inv[k];
            for x in 1..order {
                let (p, h) = parent[x];
                lmul[x] = t.rmul[lmul[p as usize] as usize * ng + h as usize];
            }
            for x in 0..order {
                conj[k * order + x] = lmul[t.rmul[x * ng + k] as usize];
            }
        }
        t.conj = conj;

        let mut inv = alloc::vec![0u32; order];
        for x in 1..order {
            let (p, k) = parent[x];
            inv[x] = t.mul(t.gen_inv[k as usize], inv[p as usize]);
        }
        t.inv = inv;
        t
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn set_name(&mut self, name: String) {
        self.name = name;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.forms.len()
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    /// Generator element indices, in construction order.
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.order() as Elem
    }

    pub fn form(&self, x: Elem) -> &ElementForm {
        &self.forms[x as usize]
    }

    pub fn forms(&self) -> &[ElementForm] {
        &self.forms
    }

    pub fn factors(&self) -> &[FactorData] {
        &self.factors
    }

    pub(crate) fn set_factors(&mut self, f: Vec<FactorData>) {
        self.factors = f;
    }

    pub(crate) fn set_components(&mut self, c: Vec<Arc<GroupTable>>) {
        self.components = c;
    }

    pub(crate) fn set_lift(&mut self, parent: Arc<GroupTable>, map: Vec<Elem>) {
        self.lift = Some(Lift { parent, map });
    }

    /// Factor tables of a product, in order.
    pub fn components(&self) -> &[Arc<GroupTable>] {
        &self.components
    }

    pub fn distinguished_elements(&self) -> &[(String, Elem)] {
        &self.distinguished
    }

    pub fn distinguished(&self, name: &str) -> Option<Elem> {
        self.distinguished
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, x)| x)
    }

    pub(crate) fn add_distinguished(&mut self, name: &str, x: Elem) {
        self.distinguished.push((name.into(), x));
    }

    /// Word of `x` in the generators, as generator positions.
    #[inline]
    pub fn word(&self, x: Elem) -> &[u16] {
        let x = x as usize;
        &self.words[self.word_off[x] as usize..self.word_off[x + 1] as usize]
    }

    #[inline]
    pub fn mul_gen(&self, x: Elem, k: usize) -> Elem {
        self.rmul[x as usize * self.gens.len() + k]
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let ng = self.gens.len();
        let mut acc = x;
        for &k in self.word(y) {
            acc = self.rmul[acc as usize * ng + k as usize];
        }
        acc
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x as usize]
    }

    /// `y^-1 x y`
    #[inline]
    pub fn conj(&self, x: Elem, y: Elem) -> Elem {
        let order = self.order();
        let mut acc = x;
        for &k in self.word(y) {
            acc = self.conj[k as usize * order + acc as usize];
        }
        acc
    }

    /// `g_k^-1 x g_k`
    #[inline]
    pub fn conj_gen(&self, x: Elem, k: usize) -> Elem {
        self.conj[k * self.order() + x as usize]
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.inv(x), self.conj(x, y))
    }

    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut y = x;
        let mut n = 1;
        while y != 0 {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gens;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn index_of(&self, form: &ElementForm) -> Option<Elem> {
        self.forms.iter().position(|f| f == form).map(|i| i as Elem)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    pub fn trivial_set(&self) -> ElementSet {
        ElementSet::singleton(self.order(), 0)
    }

    /// Renders an element in the notation of its table.
    pub fn display(&self, x: Elem) -> String {
        match &self.forms[x as usize] {
            ElementForm::Perm(p) => alloc::format!("{p}"),
            ElementForm::Matrix(m) => alloc::format!("{m}"),
            ElementForm::Tuple(c) if c.len() == self.components.len() => {
                let parts: Vec<String> = c
                    .iter()
                    .zip(&self.components)
                    .map(|(&i, t)| t.display(i))
                    .collect();
                alloc::format!("<{}>", parts.join(" | "))
            }
            ElementForm::Tuple(c) => alloc::format!("{c:?}"),
            ElementForm::Coset(r) | ElementForm::Sub(r) => match &self.lift {
                Some(l) => l.parent.display(*r),
                None => alloc::format!("#{r}"),
            },
        }
    }

    /// Parses an element written as a permutation, a matrix, `#index`,
    /// `<a | b | ..>` for products, or a distinguished name such as `tau`.
    pub fn parse_element(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let unknown = || CoreError::UnknownElement(s.into());
        if let Some(x) = self.distinguished(s) {
            return Ok(x);
        }
        if s == "e" || s == "id" {
            return Ok(0);
        }
        if let Some(rest) = s.strip_prefix('#') {
            let i: usize = rest.parse().map_err(|_| unknown())?;
            if i >= self.order() {
                return Err(CoreError::OutOfRange {
                    index: i,
                    len: self.order(),
                });
            }
            return Ok(i as Elem);
        }
        if let Some(l) = &self.lift {
            let y = l.parent.parse_element(s)?;
            return match l.map[y as usize] {
                Elem::MAX => Err(unknown()),
                x => Ok(x),
            };
        }
        match self.forms.first() {
            Some(ElementForm::Perm(p)) => {
                let q = Perm::parse(p.degree(), s)?;
                self.index_of(&ElementForm::Perm(q)).ok_or_else(unknown)
            }
            Some(ElementForm::Matrix(m)) => {
                let q = Matrix::parse(m.prime(), s)?;
                self.index_of(&ElementForm::Matrix(q)).ok_or_else(unknown)
            }
            Some(ElementForm::Tuple(_)) if !self.components.is_empty() => {
                let inner = s
                    .strip_prefix('<')
                    .and_then(|r| r.strip_suffix('>'))
                    .ok_or_else(unknown)?;
                let parts: Vec<&str> = inner.split('|').collect();
                if parts.len() != self.components.len() {
                    return Err(unknown());
                }
                let comps = parts
                    .iter()
                    .zip(&self.components)
                    .map(|(p, t)| t.parse_element(p))
                    .collect::<Result<Vec<_>>>()?;
                self.index_of(&ElementForm::Tuple(comps)).ok_or_else(unknown)
            }
            _ => Err(unknown()),
        }
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order())
            .field("generators", &self.gens.len())
            .finish()
    }
}

impl fmt::Debug for ElementForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementForm::Perm(p) => write!(f, "{p}"),
            ElementForm::Matrix(m) => write!(f, "{m}"),
            ElementForm::Tuple(t) => write!(f, "{t:?}"),
            ElementForm::Coset(r) => write!(f, "#{r}N"),
            ElementForm::Sub(r) => write!(f, "#{r}"),
        }
    }
}
