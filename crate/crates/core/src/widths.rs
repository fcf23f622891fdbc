//! Twisted-commutator sets and the widths of their products.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};
use crate::group::{normal_subgroups, Automorphism, ClassTable, Elem, Fingerprint, GroupTable, NormalLattice};
use crate::spectrum::class_sizes_an;

/// What `[N, twist]` is twisted by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    Element(Elem),
    Automorphism(Automorphism),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedSet {
    pub twist: Twist,
    pub members: ElementSet,
}

/// `[G, a] = {g⁻¹ a⁻¹ g a}` or `[G, f] = {g⁻¹ f(g)}`.
pub fn twisted_commutator_set(g: &GroupTable, twist: Twist) -> TwistedSet {
    twisted_commutator_set_on(g, &g.full_set(), twist)
}

/// `[N, a]` with `n` ranging over `N` only.
pub fn twisted_commutator_set_on(g: &GroupTable, n: &ElementSet, twist: Twist) -> TwistedSet {
    let members = match &twist {
        Twist::Element(a) => ElementSet::from_indices(g.order(), n.iter().map(|x| g.commutator(x, *a))),
        Twist::Automorphism(f) => ElementSet::from_indices(g.order(), n.iter().map(|x| g.mul(g.inv(x), f.apply(x)))),
    };
    TwistedSet { twist, members }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Width {
    Reached(usize),
    Unreachable,
}

impl Width {
    pub fn value(self) -> Option<usize> {
        match self {
            Width::Reached(t) => Some(t),
            Width::Unreachable => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthReport {
    pub target: ElementSet,
    pub factors: Vec<ElementSet>,
    pub minimal_t: Width,
    /// Last set reached: the target's cover on success, the stable set otherwise.
    pub achieved: ElementSet,
    pub paper_bound: Option<u64>,
}

/// Least `t` with `(∏ factors)^{*t} · modulo ⊇ target`.
pub fn minimal_width(
    g: &GroupTable,
    target: &ElementSet,
    factors: &[ElementSet],
    modulo: &ElementSet,
    ceiling: Option<usize>,
) -> Result<WidthReport> {
    if !g.is_subgroup(target) {
        return Err(CoreError::TargetNotSubgroup);
    }
    if !g.is_subgroup(modulo) || !g.is_normal(modulo) {
        return Err(CoreError::ModuloNotNormal);
    }
    let step = g.product_of_sets(factors);
    let mut acc = modulo.clone();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut t = 0;
    let minimal_t = loop {
        if target.is_subset(&acc) {
            break Width::Reached(t);
        }
        if !seen.insert(acc.clone()) || ceiling.is_some_and(|c| t >= c) || step.is_empty() {
            break Width::Unreachable;
        }
        acc = g.product_set(&acc, &step);
        t += 1;
    };
    Ok(WidthReport {
        target: target.clone(),
        factors: factors.to_vec(),
        minimal_t,
        achieved: acc,
        paper_bound: None,
    })
}

pub fn segal_bound(d: usize) -> u64 {
    72 * d as u64 + 46
}

/// Width of `G'` in the sets `[G, a_i]` for a finite soluble `G`.
pub fn segal_check(g: &GroupTable, a: &[Elem]) -> Result<WidthReport> {
    if !g.is_soluble() {
        return Err(CoreError::NotSoluble);
    }
    let derived = g.derived_subgroup();
    let mut gens = a.to_vec();
    gens.extend(g.generators_of(&derived).0);
    if !g.generates(&gens) {
        return Err(CoreError::ImagesDoNotGenerateAbelianization);
    }
    let factors: Vec<ElementSet> = a
        .iter()
        .map(|&x| twisted_commutator_set(g, Twist::Element(x)).members)
        .collect();
    let bound = segal_bound(a.len());
    let mut report = minimal_width(g, &derived, &factors, &g.trivial_set(), Some(2 * bound as usize))?;
    report.paper_bound = Some(bound);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub a: Elem,
    pub conjugate: Elem,
}

/// Pairs `(a, x)` with `a ∈ [G,f⁻¹]`, `x ∈ a^G` and `x ∉ [G,f][G,f⁻¹]`.
pub fn lemma_useful_check(g: &GroupTable, f: &Automorphism) -> Vec<Violation> {
    let ct = ClassTable::new(g);
    lemma_useful_check_with(g, &ct, f)
}

pub fn lemma_useful_check_with(g: &GroupTable, ct: &ClassTable, f: &Automorphism) -> Vec<Violation> {
    let plus = twisted_commutator_set(g, Twist::Automorphism(f.clone())).members;
    let minus = twisted_commutator_set(g, Twist::Automorphism(f.inverse())).members;
    let prod = g.product_set(&plus, &minus);
    let mut out = Vec::new();
    let mut done = ElementSet::empty(ct.len());
    for a in minus.iter() {
        let c = ct.class_of(a);
        if !done.insert(c as u32) {
            continue;
        }
        for x in ct.class(c).members.iter() {
            if !prod.contains(x) {
                out.push(Violation { a, conjugate: x });
            }
        }
    }
    out
}

/// The automorphism of a product exchanging factors `i` and `j`.
pub fn factor_swap(t: &GroupTable, i: usize, j: usize) -> Result<Automorphism> {
    let fs = t.factors();
    if fs.is_empty() {
        return Err(CoreError::FactorDataMissing);
    }
    let (fi, fj) = (
        fs.get(i).ok_or(CoreError::OutOfRange { index: i, len: fs.len() })?,
        fs.get(j).ok_or(CoreError::OutOfRange { index: j, len: fs.len() })?,
    );
    if Fingerprint::of(&fi.table) != Fingerprint::of(&fj.table) || fi.table.forms() != fj.table.forms() {
        return Err(CoreError::PreconditionViolated("swapped factors differ".into()));
    }
    let mut gens = Vec::new();
    let mut images = Vec::new();
    for (k, f) in fs.iter().enumerate() {
        let partner = if k == i { fj } else if k == j { fi } else { f };
        for &x in f.table.generators() {
            gens.push(f.embedding[x as usize]);
            images.push(partner.embedding[x as usize]);
        }
    }
    Automorphism::from_images(t, &gens, &images)
}

/// `x` paired with a twist index, showing factor `factor` is moved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub factor: usize,
    pub auto: usize,
    pub t: Elem,
    /// `[t, a⁻¹] = t⁻¹ a⁻¹(t)`.
    pub v: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QsimpleReport {
    pub eligible: bool,
    pub minimal_c: Width,
    pub witnesses: Vec<Witness>,
    pub achieved: ElementSet,
}

/// Product of all factors other than `j`.
fn complement_of_factor(t: &GroupTable, j: usize) -> ElementSet {
    let gens: Vec<Elem> = t
        .factors()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != j)
        .flat_map(|(_, f)| f.subgroup.iter())
        .collect();
    let (g, _) = t.generators_of(&ElementSet::from_indices(t.order(), gens));
    t.generate(&g)
}

/// Checks `∩ C_T(a_i)` contains no factor and measures the least `c`
/// with `T = (∏ [T,a_i][T,a_i⁻¹])^{*c}`.
///
/// The projection of `v` to factor `j` counts as nontrivial when `v` lies
/// outside the product of the remaining factors.
pub fn qsimple_check(t: &GroupTable, autos: &[Automorphism], ceiling: Option<usize>) -> Result<QsimpleReport> {
    let fs = t.factors();
    if fs.is_empty() {
        return Err(CoreError::FactorDataMissing);
    }
    let mut fixed = t.full_set();
    for a in autos {
        fixed.intersect_with(&a.fixed_points());
    }
    let eligible = fs.iter().all(|f| !f.subgroup.is_subset(&fixed));
    let mut factors = Vec::new();
    let mut minus_sets = Vec::new();
    for a in autos {
        let plus = twisted_commutator_set(t, Twist::Automorphism(a.clone())).members;
        let minus = twisted_commutator_set(t, Twist::Automorphism(a.inverse())).members;
        factors.push(plus);
        factors.push(minus.clone());
        minus_sets.push((a.inverse(), minus));
    }
    let mut witnesses = Vec::new();
    for j in 0..fs.len() {
        let rest = complement_of_factor(t, j);
        'autos: for (i, (inv, _)) in minus_sets.iter().enumerate() {
            for x in t.elements() {
                let v = t.mul(t.inv(x), inv.apply(x));
                if !rest.contains(v) {
                    witnesses.push(Witness { factor: j, auto: i, t: x, v });
                    break 'autos;
                }
            }
        }
    }
    let report = minimal_width(t, &t.full_set(), &factors, &t.trivial_set(), ceiling)?;
    Ok(QsimpleReport {
        eligible,
        minimal_c: report.minimal_t,
        witnesses,
        achieved: report.achieved,
    })
}

/// Least `c` with `T = (∏ [T,a_i])^{*c}` for `a` generating `T/Z(T)`.
pub fn inner_check(t: &GroupTable, a: &[Elem], ceiling: Option<usize>) -> Result<WidthReport> {
    if t.is_abelian() {
        return Err(CoreError::NotQuasisemisimple("group is abelian".into()));
    }
    let z = t.center();
    let mut gens = a.to_vec();
    gens.extend(t.generators_of(&z).0);
    if !t.generates(&gens) {
        return Err(CoreError::NotGeneratingModCenter);
    }
    let factors: Vec<ElementSet> = a
        .iter()
        .map(|&x| twisted_commutator_set(t, Twist::Element(x)).members)
        .collect();
    minimal_width(t, &t.full_set(), &factors, &t.trivial_set(), ceiling)
}

/// Elements `g_i' ∈ g_i M` generating `G`, padded with the identity to
/// length `k`. `None` never happens on valid input.
pub fn gaschutz_lift(g: &GroupTable, m: &ElementSet, gens: &[Elem], k: usize) -> Result<Option<Vec<Elem>>> {
    if !g.is_subgroup(m) || !g.is_normal(m) {
        return Err(CoreError::NotNormal);
    }
    if gens.len() > k {
        return Err(CoreError::LengthMismatch { expected: k, got: gens.len() });
    }
    let mut all = gens.to_vec();
    all.extend(g.generators_of(m).0);
    if !g.generates(&all) {
        return Err(CoreError::NotGeneratingModSubgroup);
    }
    let mut padded = gens.to_vec();
    padded.resize(k, g.identity());
    if g.generates(&padded) {
        return Ok(Some(padded));
    }
    let members = m.to_vec();
    let mut chosen = Vec::with_capacity(k);
    fn go(
        g: &GroupTable,
        padded: &[Elem],
        members: &[Elem],
        chosen: &mut Vec<Elem>,
        h: &ElementSet,
        h_gens: &[Elem],
    ) -> bool {
        let i = chosen.len();
        if i == padded.len() {
            return h.is_full();
        }
        let mut tried: HashSet<ElementSet> = HashSet::new();
        for &mm in members {
            let x = g.mul(padded[i], mm);
            let (mut h2, mut g2) = (h.clone(), h_gens.to_vec());
            g.extend_subgroup(&mut h2, &mut g2, x);
            if !tried.insert(h2.clone()) {
                continue;
            }
            chosen.push(x);
            if go(g, padded, members, chosen, &h2, &g2) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if go(g, &padded, &members, &mut chosen, &g.trivial_set(), &[]) {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Acceptability {
    pub acceptable: bool,
    pub reason: String,
}

/// Nonabelian simple, or a direct square of one.
pub fn simple_or_square(q: &GroupTable, lattice_cap: usize) -> Result<bool> {
    if q.is_abelian() || !q.is_perfect() {
        return Ok(false);
    }
    if q.is_simple() {
        return Ok(true);
    }
    let lat = normal_subgroups(q, lattice_cap)?;
    let minimal = lat.minimal();
    if minimal.len() != 2 || minimal[0].len() != minimal[1].len() {
        return Ok(false);
    }
    let (a, b) = (minimal[0], minimal[1]);
    if a.len() * b.len() != q.order() || a.intersection(b).len() != 1 {
        return Ok(false);
    }
    let ta = q.subgroup_table(a)?.table;
    let tb = q.subgroup_table(b)?.table;
    Ok(ta.is_nonabelian_simple() && Fingerprint::of(&ta) == Fingerprint::of(&tb))
}

fn section(g: &GroupTable, b: &ElementSet, a: &ElementSet) -> Result<GroupTable> {
    let st = g.subgroup_table(b)?;
    let a_in_b = st.from_parent_set(a);
    Ok(st.table.quotient(&a_in_b)?.table)
}

/// `[N, Γ] = N` and no section `B/A` of `Γ`-normal subgroups inside `N`
/// is `S` or `S × S` for a nonabelian simple `S`.
pub fn acceptable_check(gamma: &GroupTable, n: &ElementSet, lattice_cap: usize) -> Result<Acceptability> {
    if !gamma.is_subgroup(n) || !gamma.is_normal(n) {
        return Err(CoreError::NotNormal);
    }
    if gamma.commutator_with_group(n) != *n {
        return Ok(Acceptability {
            acceptable: false,
            reason: "[N, G] is a proper subgroup of N".into(),
        });
    }
    let lat = normal_subgroups(gamma, lattice_cap)?;
    let inside: Vec<&ElementSet> = lat.subgroups().iter().filter(|s| s.is_subset(n)).collect();
    for &b in &inside {
        if b.len() < 60 {
            continue;
        }
        let bt = gamma.subgroup_table(b)?;
        let db = bt.to_parent_set(&bt.table.derived_subgroup(), gamma.order());
        for &a in &inside {
            if !a.is_subset(b) || b.len() / a.len() < 60 || b.len() % (4 * a.len()) != 0 {
                continue;
            }
            // B/A perfect iff B = B'A
            let da = gamma.generate(&db.union(a).to_vec());
            if da != *b {
                continue;
            }
            let q = section(gamma, b, a)?;
            if simple_or_square(&q, lattice_cap)? {
                return Ok(Acceptability {
                    acceptable: false,
                    reason: alloc::format!("section of order {} is simple or a simple square", q.order()),
                });
            }
        }
    }
    Ok(Acceptability {
        acceptable: true,
        reason: String::new(),
    })
}

/// Least `t` with `H = ([H,g_1] ⋯ [H,g_r])^{*t}` for acceptable `H`.
pub fn keyc_check(gamma: &GroupTable, h: &ElementSet, g: &[Elem], lattice_cap: usize) -> Result<WidthReport> {
    let acc = acceptable_check(gamma, h, lattice_cap)?;
    if !acc.acceptable {
        return Err(CoreError::NotAcceptable(acc.reason));
    }
    let mut all = g.to_vec();
    all.extend(gamma.generators_of(h).0);
    if !gamma.generates(&all) {
        return Err(CoreError::NotGeneratingModSubgroup);
    }
    let factors: Vec<ElementSet> = g
        .iter()
        .map(|&x| twisted_commutator_set_on(gamma, h, Twist::Element(x)).members)
        .collect();
    minimal_width(gamma, h, &factors, &gamma.trivial_set(), None)
}

/// Order, class sizes and abelianization of `A_k`.
pub fn alternating_fingerprint(k: u32) -> Result<Fingerprint> {
    let order = crate::spectrum::factorial(k).ok_or(CoreError::Overflow("|A_k|"))? / if k >= 2 { 2 } else { 1 };
    let class_sizes = class_sizes_an(k)?.into_iter().map(|s| s as usize).collect();
    let abelianization = match k {
        0..=2 => 1,
        3 | 4 => 3,
        _ => 1,
    };
    Ok(Fingerprint {
        order: order as usize,
        class_sizes,
        abelianization,
    })
}

fn largest_alternating_dividing(order: usize) -> u32 {
    let mut best = 0;
    let mut k = 3u32;
    loop {
        let ak = match crate::spectrum::factorial(k) {
            Some(f) if f / 2 <= order as u128 => (f / 2) as usize,
            _ => return best,
        };
        if order.is_multiple_of(ak) {
            best = k;
        }
        k += 1;
    }
}

fn sections_match(
    g: &GroupTable,
    lat: &NormalLattice,
    fp: &Fingerprint,
) -> Result<bool> {
    for b in lat.subgroups() {
        for a in lat.subgroups() {
            if a.len() * fp.order != b.len() || !a.is_subset(b) {
                continue;
            }
            if Fingerprint::of(&section(g, b, a)?) == *fp {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Largest `k` such that some section `H/N` is isomorphic to `A_k`,
/// recognised by fingerprint; 0 when 3 does not divide the order.
pub fn alpha(g: &GroupTable, subgroup_cap: usize, lattice_cap: usize) -> Result<u32> {
    let top = largest_alternating_dividing(g.order());
    if top < 3 {
        return Ok(0);
    }
    if top == 3 {
        return Ok(3);
    }
    // sections between normal subgroups of G
    let lat = normal_subgroups(g, lattice_cap)?;
    if sections_match(g, &lat, &alternating_fingerprint(top)?)? {
        return Ok(top);
    }
    let subgroups = g.all_subgroups(subgroup_cap)?;
    for k in (4..=top).rev() {
        let fp = alternating_fingerprint(k)?;
        if !g.order().is_multiple_of(fp.order) {
            continue;
        }
        for h in subgroups.iter().filter(|h| h.len() % fp.order == 0) {
            let st = g.subgroup_table(h)?;
            let hl = normal_subgroups(&st.table, lattice_cap)?;
            if sections_match(&st.table, &hl, &fp)? {
                return Ok(k);
            }
        }
    }
    Ok(3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildOptions, DEFAULT_LATTICE_CAP, DEFAULT_SUBGROUP_CAP};
    use crate::spec::GroupSpec;

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), &BuildOptions::default()).unwrap()
    }

    fn el(g: &GroupTable, s: &str) -> Elem {
        g.parse_element(s).unwrap()
    }

    #[test]
    fn twisted_sets() {
        let g = build("S_3");
        let s = twisted_commutator_set(&g, Twist::Element(el(&g, "(12)")));
        let expect = ElementSet::from_indices(6, [el(&g, "()"), el(&g, "(123)"), el(&g, "(132)")]);
        assert_eq!(s.members, expect);
        let e = twisted_commutator_set(&g, Twist::Element(g.identity()));
        assert_eq!(e.members, g.trivial_set());
        let a4 = build("A_4");
        let v4 = a4.derived_subgroup();
        let t = twisted_commutator_set_on(&a4, &v4, Twist::Element(el(&a4, "(123)")));
        assert_eq!(t.members, v4);
    }

    #[test]
    fn inner_twist_matches_element_twist() {
        let g = build("S_4");
        for a in g.elements() {
            let x = twisted_commutator_set(&g, Twist::Element(a)).members;
            let y = twisted_commutator_set(&g, Twist::Automorphism(Automorphism::inner(&g, a))).members;
            assert_eq!(x, y);
        }
    }

    #[test]
    fn width_examples() {
        let a4 = build("A_4");
        let v4 = a4.derived_subgroup();
        let f = twisted_commutator_set_on(&a4, &v4, Twist::Element(el(&a4, "(123)"))).members;
        let r = minimal_width(&a4, &v4, std::slice::from_ref(&f), &a4.trivial_set(), None).unwrap();
        assert_eq!(r.minimal_t, Width::Reached(1));
        let r0 = minimal_width(&a4, &a4.trivial_set(), &[f], &a4.trivial_set(), None).unwrap();
        assert_eq!(r0.minimal_t, Width::Reached(0));
        let bad = ElementSet::from_indices(12, [1]);
        assert_eq!(
            minimal_width(&a4, &bad, &[], &a4.trivial_set(), None).unwrap_err(),
            CoreError::TargetNotSubgroup
        );
    }

    #[test]
    fn segal_examples() {
        let s4 = build("S_4");
        let r = segal_check(&s4, &[el(&s4, "(12)"), el(&s4, "(1234)")]).unwrap();
        assert_eq!(r.paper_bound, Some(190));
        assert!(r.minimal_t.value().unwrap() <= 190);
        let c6 = build("C_6");
        assert_eq!(segal_check(&c6, &[1]).unwrap().minimal_t, Width::Reached(0));
        assert_eq!(segal_check(&build("A_5"), &[1]).unwrap_err(), CoreError::NotSoluble);
        assert_eq!(
            segal_check(&s4, &[el(&s4, "(123)")]).unwrap_err(),
            CoreError::ImagesDoNotGenerateAbelianization
        );
    }

    #[test]
    fn lemma_useful_small() {
        for s in ["S_3", "SL(2,3)", "A_5", "D_6"] {
            let g = build(s);
            for a in g.elements() {
                assert!(lemma_useful_check(&g, &Automorphism::inner(&g, a)).is_empty(), "{s}");
            }
        }
    }

    #[test]
    fn swap_is_automorphism() {
        let t = build("central(SL(2,3), SL(2,3))");
        let sw = factor_swap(&t, 0, 1).unwrap();
        assert!(sw.verify_exhaustive(&t));
        assert_eq!(sw.order(), 2);
        assert!(lemma_useful_check(&t, &sw).is_empty());
    }

    #[test]
    fn qsimple_identity_not_eligible() {
        let t = build("central(SL(2,3), SL(2,3))");
        let r = qsimple_check(&t, &[Automorphism::identity(&t)], Some(4)).unwrap();
        assert!(!r.eligible);
        assert!(r.witnesses.is_empty());
        assert_eq!(qsimple_check(&build("A_5"), &[], None).unwrap_err(), CoreError::FactorDataMissing);
    }

    #[test]
    fn qsimple_swap_on_perfect_factors() {
        let t = build("central(SL(2,5), SL(2,5))");
        let sw = factor_swap(&t, 0, 1).unwrap();
        let r = qsimple_check(&t, &[sw], Some(16)).unwrap();
        assert!(r.eligible);
        assert!(r.minimal_c.value().is_some());
        assert_eq!(r.witnesses.len(), 2);
    }

    #[test]
    fn inner_examples() {
        let a5 = build("A_5");
        let r = inner_check(&a5, &[el(&a5, "(12345)"), el(&a5, "(123)")], Some(16)).unwrap();
        assert!(r.minimal_t.value().is_some());
        assert!(inner_check(&build("C_5"), &[1], None).is_err());
    }

    #[test]
    fn gaschutz_examples() {
        let s3 = build("S_3");
        let a3 = s3.derived_subgroup();
        let lift = gaschutz_lift(&s3, &a3, &[el(&s3, "(12)"), s3.identity()], 2).unwrap().unwrap();
        assert!(s3.generates(&lift));
        for (x, y) in lift.iter().zip([el(&s3, "(12)"), s3.identity()]) {
            assert!(a3.contains(s3.mul(s3.inv(y), *x)));
        }
        let gens = [el(&s3, "(12)"), el(&s3, "(123)")];
        assert_eq!(gaschutz_lift(&s3, &s3.trivial_set(), &gens, 2).unwrap().unwrap(), gens.to_vec());
        let v = build("C_2 x C_2");
        let m = v.generate(&[v.generators()[0]]);
        let x = v.generators()[0];
        let other = v.generators()[1];
        assert!(gaschutz_lift(&v, &m, &[other, v.identity()], 2).unwrap().unwrap().len() == 2);
        assert_eq!(gaschutz_lift(&v, &m, &[x], 1).unwrap_err(), CoreError::NotGeneratingModSubgroup);
    }

    #[test]
    fn acceptable_examples() {
        let a4 = build("A_4");
        assert!(acceptable_check(&a4, &a4.derived_subgroup(), DEFAULT_LATTICE_CAP).unwrap().acceptable);
        let sl = build("SL(2,5)");
        assert!(!acceptable_check(&sl, &sl.full_set(), DEFAULT_LATTICE_CAP).unwrap().acceptable);
        let s4 = build("S_4");
        assert!(!acceptable_check(&s4, &s4.full_set(), DEFAULT_LATTICE_CAP).unwrap().acceptable);
        let sq = build("A_5 x A_5");
        let q = simple_or_square(&sq, DEFAULT_LATTICE_CAP).unwrap();
        assert!(q);
        assert!(!simple_or_square(&build("A_5 x A_6"), DEFAULT_LATTICE_CAP).unwrap());
    }

    #[test]
    fn keyc_examples() {
        let a4 = build("A_4");
        let v4 = a4.derived_subgroup();
        let r = keyc_check(&a4, &v4, &[el(&a4, "(123)")], DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(r.minimal_t, Width::Reached(1));
        let r0 = keyc_check(&a4, &a4.trivial_set(), &[el(&a4, "(123)"), el(&a4, "(12)(34)")], DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(r0.minimal_t, Width::Reached(0));
        let s4 = build("S_4");
        let v = s4.derived_subgroup();
        let v4 = s4.subgroup_table(&v).unwrap().table.derived_subgroup();
        let v4 = s4.subgroup_table(&v).unwrap().to_parent_set(&v4, 24);
        let r = keyc_check(&s4, &v4, &[el(&s4, "(12)"), el(&s4, "(1234)")], DEFAULT_LATTICE_CAP).unwrap();
        assert!(r.minimal_t.value().is_some());
    }

    #[test]
    fn alpha_examples() {
        let a = |s: &str| alpha(&build(s), DEFAULT_SUBGROUP_CAP, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(a("S_5"), 5);
        assert_eq!(a("S_4"), 4);
        assert_eq!(a("C_2"), 0);
        assert_eq!(a("C_3"), 3);
        assert_eq!(a("SL(2,5)"), 5);
        assert_eq!(a("PSL(2,7)"), 4);
        assert_eq!(a("A_6"), 6);
        assert_eq!(a("tau(5,6)"), 6);
        assert_eq!(a("D_6"), 3);
    }

    #[test]
    fn alternating_fingerprints_match_tables() {
        for k in 3..=7 {
            let g = build(&alloc::format!("A_{k}"));
            assert_eq!(Fingerprint::of(&g), alternating_fingerprint(k).unwrap());
        }
    }
}
