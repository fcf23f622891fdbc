//! Finite truncations of families of simple groups: index sets where a
//! tuple has small classes, their intersections, and covering
//! certificates when the intersection is empty.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bitset::ElementSet;
use crate::error::{CoreError, Result};
use crate::group::{build_group, BuildOptions, ClassAlgebra, ClassTable, Elem, ElementForm, GroupTable};
use crate::perm::Perm;
use crate::spec::GroupSpec;
use crate::spectrum::{spectrum_an, CycleType};

/// One entry of a family description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberSpec {
    Group(GroupSpec),
    /// `A_n` for `from ≤ n ≤ to`, handled by formula.
    AlternatingRange { from: u32, to: u32 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilySpec {
    pub members: Vec<MemberSpec>,
}

/// A built coordinate group.
#[derive(Clone, Debug)]
pub struct Enumerated {
    pub spec: GroupSpec,
    pub group: Arc<GroupTable>,
    pub classes: Arc<ClassTable>,
    pub algebra: Arc<ClassAlgebra>,
}

impl Enumerated {
    pub fn new(spec: GroupSpec, group: GroupTable) -> Result<Enumerated> {
        if !group.is_nonabelian_simple() {
            return Err(CoreError::NotSimple(spec.render()));
        }
        let classes = ClassTable::new(&group);
        let algebra = ClassAlgebra::new(&group, &classes);
        Ok(Enumerated {
            spec,
            group: Arc::new(group),
            classes: Arc::new(classes),
            algebra: Arc::new(algebra),
        })
    }

    /// `log|x^G| / log|G|`.
    pub fn h(&self, x: Elem) -> f64 {
        let size = self.classes.class(self.classes.class_of(x)).size;
        libm::log(size as f64) / libm::log(self.group.order() as f64)
    }
}

#[derive(Clone, Debug)]
pub enum Coordinate {
    Symbolic(u32),
    Enumerated(Enumerated),
}

impl Coordinate {
    pub fn describe(&self) -> String {
        match self {
            Coordinate::Symbolic(n) => alloc::format!("A_{n}"),
            Coordinate::Enumerated(e) => e.spec.render(),
        }
    }
}

/// A truncated family, coordinates numbered from 1.
#[derive(Clone, Debug, Default)]
pub struct Family {
    pub coords: Vec<Coordinate>,
}

impl Family {
    /// Builds every enumerable member; ranges stay symbolic.
    pub fn build(spec: &FamilySpec, opts: &BuildOptions<'_>) -> Result<Family> {
        let mut coords = Vec::new();
        for m in &spec.members {
            match m {
                MemberSpec::AlternatingRange { from, to } => {
                    if *from < 5 {
                        return Err(CoreError::NotSimple(alloc::format!("A_{from}")));
                    }
                    coords.extend((*from..=*to).map(Coordinate::Symbolic));
                }
                MemberSpec::Group(g) => {
                    let table = build_group(g, opts)?;
                    coords.push(Coordinate::Enumerated(Enumerated::new(g.clone(), table)?));
                }
            }
        }
        Ok(Family { coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, j: usize) -> Result<&Coordinate> {
        j.checked_sub(1)
            .and_then(|i| self.coords.get(i))
            .ok_or(CoreError::OutOfRange { index: j, len: self.coords.len() })
    }

    /// `h` of the `j`-th coordinate of `t`.
    pub fn h(&self, j: usize, d: &Datum) -> Result<f64> {
        match (self.coord(j)?, d) {
            (_, Datum::Identity) => Ok(0.0),
            (Coordinate::Symbolic(_), Datum::Cycle(c)) => Ok(spectrum_an(c)?.h),
            (Coordinate::Symbolic(_), Datum::Element(_)) => Err(CoreError::NotEnumerable(j)),
            (Coordinate::Enumerated(e), d) => Ok(e.h(self.element(j, e, d)?)),
        }
    }

    fn element(&self, j: usize, e: &Enumerated, d: &Datum) -> Result<Elem> {
        match d {
            Datum::Identity => Ok(e.group.identity()),
            Datum::Element(x) => {
                if (*x as usize) < e.group.order() {
                    Ok(*x)
                } else {
                    Err(CoreError::OutOfRange { index: *x as usize, len: e.group.order() })
                }
            }
            Datum::Cycle(c) => {
                let n = match e.group.form(0) {
                    ElementForm::Perm(p) => p.degree(),
                    _ => return Err(CoreError::NotEnumerable(j)),
                };
                if c.degree() as usize != n {
                    return Err(CoreError::PreconditionViolated(alloc::format!(
                        "cycle type of degree {} on coordinate {j}",
                        c.degree()
                    )));
                }
                let p = Perm::from_cycles(n, &c.to_perm_cycles())?;
                e.group
                    .index_of(&ElementForm::Perm(p))
                    .ok_or_else(|| CoreError::UnknownElement(alloc::format!("{c}")))
            }
        }
    }
}

/// One coordinate of a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Datum {
    Identity,
    Cycle(CycleType),
    Element(Elem),
}

/// A tuple `t = (t_j)`, one datum per coordinate.
pub type Tuple = Vec<Datum>;

fn check_len(f: &Family, t: &Tuple) -> Result<()> {
    if t.len() != f.len() {
        return Err(CoreError::LengthMismatch { expected: f.len(), got: t.len() });
    }
    Ok(())
}

/// All `h_j(t_j)`.
pub fn h_profile(f: &Family, t: &Tuple) -> Result<Vec<f64>> {
    check_len(f, t)?;
    t.iter().enumerate().map(|(i, d)| f.h(i + 1, d)).collect()
}

/// `A(t, ε) = {j : h_j(t_j) < ε}`, 1-based.
pub fn a_set(f: &Family, t: &Tuple, eps: f64) -> Result<Vec<usize>> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(CoreError::PreconditionViolated(alloc::format!("eps {eps} must be positive")));
    }
    Ok(h_profile(f, t)?
        .into_iter()
        .enumerate()
        .filter(|&(_, h)| h < eps)
        .map(|(i, _)| i + 1)
        .collect())
}

/// Coordinate `j` has a class of `h ≥ ε_i` at `t_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct BigClass {
    pub index: usize,
    pub pair: usize,
    pub h: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FipReport {
    pub has_fip: bool,
    /// Least common index when the intersection is nonempty.
    pub witness: Option<usize>,
    /// One entry per coordinate when the intersection is empty.
    pub certificate: Vec<BigClass>,
}

pub fn fip_check(f: &Family, pairs: &[(Tuple, f64)]) -> Result<FipReport> {
    if pairs.is_empty() {
        return Err(CoreError::PreconditionViolated("no pairs".into()));
    }
    let mut profiles = Vec::new();
    for (t, eps) in pairs {
        a_set(f, t, *eps)?;
        profiles.push(h_profile(f, t)?);
    }
    let mut certificate = Vec::new();
    for j in 0..f.len() {
        match pairs.iter().enumerate().find(|(i, (_, eps))| profiles[*i][j] >= *eps) {
            Some((i, _)) => certificate.push(BigClass {
                index: j + 1,
                pair: i,
                h: profiles[i][j],
            }),
            None => {
                return Ok(FipReport {
                    has_fip: true,
                    witness: Some(j + 1),
                    certificate: Vec::new(),
                })
            }
        }
    }
    Ok(FipReport {
        has_fip: false,
        witness: None,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateCover {
    pub index: usize,
    /// Least `N` with `(∏_i t_{i,j}^G)^{*N} = S_j`; `None` if symbolic.
    pub exponent: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverCertificate {
    pub n: usize,
    pub verified: bool,
    pub coordinates: Vec<CoordinateCover>,
}

/// Checks that every coordinate has a class of `h ≥ ε` among the tuples,
/// then finds the per-coordinate exponents of the class product.
/// Symbolic coordinates pass the precondition but carry no exponent.
pub fn cover_certificate(f: &Family, tuples: &[Tuple], eps: f64) -> Result<CoverCertificate> {
    let profiles: Vec<Vec<f64>> = tuples.iter().map(|t| h_profile(f, t)).collect::<Result<_>>()?;
    let mut coordinates = Vec::new();
    let mut verified = true;
    for j in 1..=f.len() {
        if !profiles.iter().any(|p| p[j - 1] >= eps) {
            return Err(CoreError::PreconditionViolated(alloc::format!(
                "coordinate {j} has no class with h >= {eps}"
            )));
        }
        let exponent = match f.coord(j)? {
            Coordinate::Symbolic(_) => None,
            Coordinate::Enumerated(e) => {
                let nc = e.classes.len();
                let mut prod = ElementSet::singleton(nc, 0);
                for t in tuples {
                    let x = f.element(j, e, &t[j - 1])?;
                    prod = e.algebra.product(&prod, &ElementSet::singleton(nc, e.classes.class_of(x) as u32));
                }
                let mut acc = prod.clone();
                let mut k = 1;
                let mut seen = hashbrown::HashSet::new();
                loop {
                    if acc.is_full() {
                        break Some(k);
                    }
                    if !seen.insert(acc.clone()) {
                        verified = false;
                        break None;
                    }
                    acc = e.algebra.product(&acc, &prod);
                    k += 1;
                }
            }
        };
        coordinates.push(CoordinateCover { index: j, exponent });
    }
    let n = coordinates.iter().filter_map(|c| c.exponent).max().unwrap_or(0);
    Ok(CoverCertificate { n, verified, coordinates })
}

/// Whether the two verdicts are complementary: exactly one of
/// "intersection nonempty" and "certificate precondition holds".
#[derive(Clone, Debug, PartialEq)]
pub struct Dichotomy {
    pub fip: FipReport,
    pub certificate: Option<CoverCertificate>,
}

impl Dichotomy {
    pub fn exclusive(&self) -> bool {
        self.fip.has_fip != self.certificate.as_ref().is_some_and(|c| c.verified)
    }
}

/// Runs both checks with a common `ε`.
pub fn dichotomy(f: &Family, tuples: &[Tuple], eps: f64) -> Result<Dichotomy> {
    let pairs: Vec<(Tuple, f64)> = tuples.iter().map(|t| (t.clone(), eps)).collect();
    let fip = fip_check(f, &pairs)?;
    let certificate = match cover_certificate(f, tuples, eps) {
        Ok(c) => Some(c),
        Err(CoreError::PreconditionViolated(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Dichotomy { fip, certificate })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalQuotient {
    pub index: usize,
    pub member: String,
    /// Every nonidentity class has positive `h`, so the kernel is
    /// exactly `{g : g_j = e}`; `None` for symbolic coordinates.
    pub kernel_is_coordinate_kernel: Option<bool>,
}

pub fn principal_quotient(f: &Family, j: usize) -> Result<PrincipalQuotient> {
    let c = f.coord(j)?;
    let check = match c {
        Coordinate::Symbolic(_) => None,
        Coordinate::Enumerated(e) => Some(e.classes.classes().iter().skip(1).all(|c| c.size > 1)),
    };
    Ok(PrincipalQuotient {
        index: j,
        member: c.describe(),
        kernel_is_coordinate_kernel: check,
    })
}

/// `h_j(t_j) = 0`.
pub fn in_principal_kernel(f: &Family, j: usize, t: &Tuple) -> Result<bool> {
    check_len(f, t)?;
    Ok(f.h(j, &t[j - 1])? == 0.0)
}

/// Triples of class indices violating `h(ab) ≤ h(a) + h(b)`.
pub fn subadditivity_violations(e: &Enumerated) -> Vec<(usize, usize, usize)> {
    let n = e.classes.len();
    let log_g = libm::log(e.group.order() as f64);
    let h: Vec<f64> = e.classes.classes().iter().map(|c| libm::log(c.size as f64) / log_g).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in e.algebra.support(i, j).iter() {
                if h[k as usize] > h[i] + h[j] + 1e-12 {
                    out.push((i, j, k as usize));
                }
            }
        }
    }
    out
}

/// Least `h` over nonidentity classes.
pub fn min_nontrivial_h(e: &Enumerated) -> f64 {
    let log_g = libm::log(e.group.order() as f64);
    e.classes
        .classes()
        .iter()
        .skip(1)
        .map(|c| libm::log(c.size as f64) / log_g)
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(members: &[&str], range: Option<(u32, u32)>) -> Family {
        let mut spec = FamilySpec::default();
        for m in members {
            spec.members.push(MemberSpec::Group(GroupSpec::parse(m).unwrap()));
        }
        if let Some((from, to)) = range {
            spec.members.push(MemberSpec::AlternatingRange { from, to });
        }
        Family::build(&spec, &BuildOptions::default()).unwrap()
    }

    fn identities(f: &Family) -> Tuple {
        alloc::vec![Datum::Identity; f.len()]
    }

    #[test]
    fn identity_tuple_is_everywhere_small() {
        let f = fam(&["A_5"], Some((5, 40)));
        for eps in [0.01, 0.5, 1.0] {
            assert_eq!(a_set(&f, &identities(&f), eps).unwrap(), (1..=f.len()).collect::<Vec<_>>());
        }
        assert!(fip_check(&f, &[(identities(&f), 0.3)]).unwrap().has_fip);
    }

    #[test]
    fn three_cycles_cofinite() {
        let f = fam(&[], Some((5, 200)));
        let t: Tuple = (5..=200).map(|n| Datum::Cycle(CycleType::cycle(n, 3).unwrap())).collect();
        let a = a_set(&f, &t, 0.2).unwrap();
        // contiguous tail
        let first = a[0];
        assert_eq!(a, (first..=f.len()).collect::<Vec<_>>());
        assert!(first > 1);
        for &j in &a {
            let n = j as f64 + 4.0;
            let lhs = libm::log(n * (n - 1.0) * (n - 2.0) / 3.0);
            assert!(lhs < 0.2 * libm::lgamma(n + 1.0) - 0.2 * core::f64::consts::LN_2 + 1e-9);
        }
    }

    #[test]
    fn long_cycles_leave_small_sets_empty() {
        let f = fam(&[], Some((100, 200)));
        let t: Tuple = (100..=200)
            .map(|n| Datum::Cycle(CycleType::cycle(n, if n % 2 == 1 { n } else { n - 1 }).unwrap()))
            .collect();
        assert!(a_set(&f, &t, 0.5).unwrap().is_empty());
    }

    #[test]
    fn monotone_in_eps() {
        let f = fam(&["A_5", "PSL(2,7)"], Some((5, 60)));
        let mut t = alloc::vec![Datum::Element(5), Datum::Element(3)];
        t.extend((5..=60).map(|n| Datum::Cycle(CycleType::cycle(n, 5).unwrap())));
        let mut prev = Vec::new();
        for i in 1..=20 {
            let a = a_set(&f, &t, i as f64 / 20.0).unwrap();
            assert!(prev.iter().all(|j| a.contains(j)));
            prev = a;
        }
    }

    #[test]
    fn engineered_split_has_no_fip() {
        let f = fam(&[], Some((5, 80)));
        let long = |n: u32| Datum::Cycle(CycleType::cycle(n, if n % 2 == 1 { n } else { n - 1 }).unwrap());
        let t1: Tuple = (5..=80).map(|n| if n % 2 == 1 { long(n) } else { Datum::Identity }).collect();
        let t2: Tuple = (5..=80).map(|n| if n % 2 == 0 { long(n) } else { Datum::Identity }).collect();
        let r = fip_check(&f, &[(t1.clone(), 0.3), (t2.clone(), 0.3)]).unwrap();
        assert!(!r.has_fip);
        assert_eq!(r.certificate.len(), f.len());
        assert!(r.certificate.iter().all(|c| c.h >= 0.3));
        let d = dichotomy(&f, &[t1, t2], 0.3).unwrap();
        assert!(d.exclusive());
    }

    #[test]
    fn certificates() {
        let f = fam(&["A_5", "A_6", "PSL(2,7)"], None);
        let big = |j: usize| {
            let Coordinate::Enumerated(e) = f.coord(j).unwrap() else { unreachable!() };
            let c = e.classes.classes().iter().max_by_key(|c| c.size).unwrap();
            Datum::Element(c.rep)
        };
        let t: Tuple = (1..=3).map(big).collect();
        let c = cover_certificate(&f, std::slice::from_ref(&t), 0.3).unwrap();
        assert!(c.verified);
        assert!(c.n >= 1 && c.n <= 4);
        let mut holed = t.clone();
        holed[1] = Datum::Identity;
        assert!(matches!(
            cover_certificate(&f, &[holed.clone()], 0.3),
            Err(CoreError::PreconditionViolated(_))
        ));
        let mut other = identities(&f);
        other[1] = t[1].clone();
        assert!(cover_certificate(&f, &[holed, other], 0.3).unwrap().verified);
    }

    #[test]
    fn principal_examples() {
        let f = fam(&["A_5", "A_6"], None);
        let p = principal_quotient(&f, 1).unwrap();
        assert_eq!(p.member, "A_5");
        assert_eq!(p.kernel_is_coordinate_kernel, Some(true));
        let Coordinate::Enumerated(e) = f.coord(1).unwrap() else { unreachable!() };
        let x = e.group.parse_element("(123)").unwrap();
        let t = alloc::vec![Datum::Element(x), Datum::Identity];
        assert!(!in_principal_kernel(&f, 1, &t).unwrap());
        assert!((f.h(1, &t[0]).unwrap() - libm::log(20.0) / libm::log(60.0)).abs() < 1e-12);
        assert!(in_principal_kernel(&f, 2, &t).unwrap());
        assert!(principal_quotient(&f, 3).is_err());
    }

    #[test]
    fn subadditive_coordinates() {
        let f = fam(&["A_5", "A_6", "PSL(2,7)", "PSL(2,11)"], None);
        for c in &f.coords {
            let Coordinate::Enumerated(e) = c else { unreachable!() };
            assert!(subadditivity_violations(e).is_empty());
            assert!(min_nontrivial_h(e) > 0.3);
        }
    }

    #[test]
    fn rejects_nonsimple_members() {
        let spec = FamilySpec {
            members: alloc::vec![MemberSpec::Group(GroupSpec::parse("S_5").unwrap())],
        };
        assert!(Family::build(&spec, &BuildOptions::default()).is_err());
    }
}
