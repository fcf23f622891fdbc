//! Covering numbers of conjugacy classes.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};
use crate::group::{ClassAlgebra, ClassTable, Elem, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Covering {
    Finite(usize),
    /// The powers cycle through proper subsets; this is the last one seen.
    Never(ElementSet),
}

impl Covering {
    pub fn value(&self) -> Option<usize> {
        match self {
            Covering::Finite(n) => Some(*n),
            Covering::Never(_) => None,
        }
    }
}

/// Least `n` with `C^{*n} = G`, on class-index sets.
pub fn covering_number(alg: &ClassAlgebra, ct: &ClassTable, class: usize) -> Covering {
    let c = ElementSet::singleton(ct.len(), class as u32);
    let mut acc = c.clone();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut n = 1;
    loop {
        if acc.is_full() {
            return Covering::Finite(n);
        }
        if !seen.insert(acc.clone()) {
            return Covering::Never(ct.union(&acc));
        }
        acc = alg.product(&acc, &c);
        n += 1;
    }
}

/// The same quantity by element-level product sets.
pub fn covering_number_bfs(g: &GroupTable, class: &ElementSet) -> Covering {
    let mut acc = class.clone();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut n = 1;
    loop {
        if acc.is_full() {
            return Covering::Finite(n);
        }
        if !seen.insert(acc.clone()) {
            return Covering::Never(acc);
        }
        acc = g.product_set(&acc, class);
        n += 1;
    }
}

/// `(S_1 ⋯ S_k)^{*t}` and whether it is all of `G`.
pub fn product_covers(g: &GroupTable, sets: &[ElementSet], t: usize) -> (bool, ElementSet) {
    let p = g.product_of_sets(sets);
    let achieved = g.power_set(&p, t);
    (achieved.is_full(), achieved)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverRow {
    pub class_index: usize,
    pub rep: Elem,
    pub class_size: usize,
    pub covering: Covering,
    /// `cn · log|C| / log|G|`, absent for central classes.
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverReport {
    pub group: String,
    pub order: usize,
    pub rows: Vec<CoverRow>,
}

impl CoverReport {
    pub fn max_ratio(&self) -> Option<f64> {
        self.rows.iter().filter_map(|r| r.ratio).reduce(f64::max)
    }

    pub fn max_noncentral_cn(&self) -> Option<usize> {
        self.rows
            .iter()
            .filter(|r| r.class_size > 1)
            .filter_map(|r| r.covering.value())
            .max()
    }

    /// Noncentral classes that never cover.
    pub fn failures(&self) -> impl Iterator<Item = &CoverRow> {
        self.rows.iter().filter(|r| r.class_size > 1 && r.covering.value().is_none())
    }
}

pub fn cover_report(g: &GroupTable) -> CoverReport {
    let ct = ClassTable::new(g);
    let alg = ClassAlgebra::new(g, &ct);
    cover_report_with(g, &ct, &alg)
}

pub fn cover_report_with(g: &GroupTable, ct: &ClassTable, alg: &ClassAlgebra) -> CoverReport {
    CoverReport {
        group: g.name().into(),
        order: g.order(),
        rows: (0..ct.len()).map(|i| cover_row(g, ct, alg, i)).collect(),
    }
}

/// The row for class `i`.
pub fn cover_row(g: &GroupTable, ct: &ClassTable, alg: &ClassAlgebra, i: usize) -> CoverRow {
    let c = ct.class(i);
    let covering = covering_number(alg, ct, i);
    let ratio = match covering {
        Covering::Finite(n) if c.size > 1 => Some(n as f64 * libm::log(c.size as f64) / libm::log(g.order() as f64)),
        _ => None,
    };
    CoverRow {
        class_index: i,
        rep: c.rep,
        class_size: c.size,
        covering,
        ratio,
    }
}

/// Perfect with `G/Z(G)` simple.
pub fn is_quasisimple(g: &GroupTable) -> Result<bool> {
    if g.order() == 1 || !g.is_perfect() {
        return Ok(false);
    }
    let z = g.center();
    Ok(g.quotient(&z)?.table.is_nonabelian_simple())
}

pub fn require_quasisimple(g: &GroupTable) -> Result<()> {
    if is_quasisimple(g)? {
        Ok(())
    } else {
        Err(CoreError::NotSimple(g.name().into()))
    }
}

/// Per-member reports with the corpus aggregates.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusReport {
    pub members: Vec<CoverReport>,
    /// Largest ratio over all noncentral classes.
    pub c_ls: f64,
    /// `(α, largest covering number)` sorted by `α`.
    pub c_alpha: Vec<(u32, usize)>,
}

/// Aggregates per-member reports; `alphas[i]` belongs to `reports[i]`.
pub fn ls_ratio(reports: Vec<CoverReport>, alphas: &[u32]) -> CorpusReport {
    let c_ls = reports.iter().filter_map(|r| r.max_ratio()).fold(0.0, f64::max);
    let mut c_alpha: Vec<(u32, usize)> = Vec::new();
    for (r, &a) in reports.iter().zip(alphas) {
        let cn = r.max_noncentral_cn().unwrap_or(0);
        match c_alpha.iter_mut().find(|(k, _)| *k == a) {
            Some((_, m)) => *m = (*m).max(cn),
            None => c_alpha.push((a, cn)),
        }
    }
    c_alpha.sort_unstable();
    CorpusReport {
        members: reports,
        c_ls,
        c_alpha,
    }
}
