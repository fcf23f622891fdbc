//! Symbolic class sizes in `A_n` and the class-size spectrum `h`.
//!
//! `h(g) = log|g^G| / log|G|`. For alternating groups every quantity is a
//! function of the cycle type, so degrees far beyond enumeration are fine.

use alloc::vec::Vec;

use libm::{lgamma, log};

use crate::error::{CoreError, Result};

/// A partition of `n`, parts sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    n: u32,
    parts: Vec<u32>,
}

impl CycleType {
    pub fn new(n: u32, mut parts: Vec<u32>) -> Result<CycleType> {
        if parts.contains(&0) {
            return Err(CoreError::InvalidSpec("cycle type has a zero part".into()));
        }
        let sum: u64 = parts.iter().map(|&p| p as u64).sum();
        if sum > n as u64 {
            return Err(CoreError::InvalidSpec(alloc::format!(
                "parts sum to {sum}, more than the degree {n}"
            )));
        }
        parts.extend(core::iter::repeat_n(1, (n as u64 - sum) as usize));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { n, parts })
    }

    pub fn identity(n: u32) -> CycleType {
        CycleType {
            n,
            parts: alloc::vec![1; n as usize],
        }
    }

    /// A single `m`-cycle in `S_n`.
    pub fn cycle(n: u32, m: u32) -> Result<CycleType> {
        if m == 0 || m > n {
            return Err(CoreError::InvalidSpec(alloc::format!("no {m}-cycle in degree {n}")));
        }
        CycleType::new(n, alloc::vec![m])
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts larger than one.
    pub fn nontrivial_parts(&self) -> &[u32] {
        let k = self.parts.iter().take_while(|&&p| p > 1).count();
        &self.parts[..k]
    }

    pub fn is_even(&self) -> bool {
        (self.n as usize - self.parts.len()).is_multiple_of(2)
    }

    /// The `S_n` class splits into two `A_n` classes.
    pub fn splits_in_an(&self) -> bool {
        self.n >= 2
            && self.parts.iter().all(|p| p % 2 == 1)
            && self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// `(k, m_k)` for every part size `k` with multiplicity `m_k`.
    fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `ln z_λ`, the log of the centralizer order in `S_n`.
    pub fn log_centralizer_sn(&self) -> f64 {
        self.multiplicities()
            .iter()
            .map(|&(k, m)| m as f64 * log(k as f64) + lgamma(m as f64 + 1.0))
            .sum()
    }

    /// `z_λ` when it fits in a `u128`.
    pub fn centralizer_sn(&self) -> Option<u128> {
        let mut z: u128 = 1;
        for (k, m) in self.multiplicities() {
            z = z.checked_mul((k as u128).checked_pow(m)?)?;
            z = z.checked_mul(factorial(m)?)?;
        }
        Some(z)
    }

    pub fn to_perm_cycles(&self) -> Vec<Vec<usize>> {
        let mut next = 0usize;
        let mut out = Vec::new();
        for &p in self.nontrivial_parts() {
            out.push((next..next + p as usize).collect());
            next += p as usize;
        }
        out
    }
}

impl core::fmt::Display for CycleType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let parts: Vec<alloc::string::String> = self.parts.iter().map(|p| alloc::format!("{p}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: u32) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |a, b| a.checked_mul(b))
}

/// Partitions of `n` with parts in descending order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for first in (1..=max.min(n)).rev() {
            cur.push(first);
            go(n - first, first, out, cur);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut out, &mut Vec::new());
    out
}

/// Sorted class sizes of `A_n`, split classes listed twice.
pub fn class_sizes_an(n: u32) -> Result<Vec<u128>> {
    let mut out = Vec::new();
    for parts in partitions(n) {
        let t = CycleType::new(n, parts)?;
        if !t.is_even() {
            continue;
        }
        let size = class_size_an(&t)?.exact.ok_or(CoreError::Overflow("class size"))?;
        out.push(size);
        if t.splits_in_an() {
            out.push(size);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Size of a class, exact when representable, always as a natural log.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassSize {
    pub exact: Option<u128>,
    pub log: f64,
}

/// `|A_n|` as a natural log.
pub fn log_order_an(n: u32) -> f64 {
    if n < 2 {
        0.0
    } else {
        lgamma(n as f64 + 1.0) - core::f64::consts::LN_2
    }
}

/// Class size in `A_n` of an even cycle type: `n!/z_λ`, halved when the
/// parts are odd and pairwise distinct.
pub fn class_size_an(t: &CycleType) -> Result<ClassSize> {
    if !t.is_even() {
        return Err(CoreError::OddParity);
    }
    let split = t.splits_in_an();
    let mut log_size = lgamma(t.n as f64 + 1.0) - t.log_centralizer_sn();
    if split {
        log_size -= core::f64::consts::LN_2;
    }
    let exact = factorial(t.n)
        .zip(t.centralizer_sn())
        .map(|(f, z)| f / z / if split { 2 } else { 1 });
    if let Some(e) = exact {
        log_size = log(e as f64);
    }
    Ok(ClassSize {
        exact,
        log: log_size.max(0.0),
    })
}

/// `h` together with the logs it was computed from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumValue {
    pub log_class_size: f64,
    pub log_group_size: f64,
    pub h: f64,
}

impl SpectrumValue {
    pub fn from_logs(log_class_size: f64, log_group_size: f64) -> SpectrumValue {
        let h = if log_group_size > 0.0 {
            (log_class_size / log_group_size).clamp(0.0, 1.0)
        } else {
            0.0
        };
        SpectrumValue {
            log_class_size,
            log_group_size,
            h,
        }
    }

    pub fn from_sizes(class_size: u128, group_order: u128) -> SpectrumValue {
        SpectrumValue::from_logs(log(class_size as f64), log(group_order as f64))
    }
}

pub fn spectrum_an(t: &CycleType) -> Result<SpectrumValue> {
    let c = class_size_an(t)?;
    Ok(SpectrumValue::from_logs(c.log, log_order_an(t.n)))
}

/// Which quantity the cycle length tracks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CycleLengthRule {
    /// Length about `βn`, so that `h → β`.
    #[default]
    Beta,
    /// Length about `αn = (1-β)n`, taken literally.
    Alpha,
}

/// The odd integer nearest to `x`, ties going down, clamped to
/// `[3, largest odd ≤ n]`.
pub fn nearest_odd_length(x: f64, n: u32) -> u32 {
    let top = if n % 2 == 1 { n } else { n - 1 };
    let mut lo = libm::floor(x) as i64;
    if lo % 2 == 0 {
        lo -= 1;
    }
    let hi = lo + 2;
    let pick = if x - lo as f64 <= hi as f64 - x { lo } else { hi };
    pick.clamp(3, top as i64) as u32
}

/// A single odd cycle whose class has `h` close to `β`.
pub fn spectrum_element_an(n: u32, beta: f64, rule: CycleLengthRule) -> Result<(CycleType, SpectrumValue)> {
    if n < 5 {
        return Err(CoreError::PreconditionViolated(alloc::format!("degree {n} is below 5")));
    }
    if !(0.0..=1.0).contains(&beta) {
        return Err(CoreError::PreconditionViolated(alloc::format!("beta {beta} outside [0,1]")));
    }
    let target = match rule {
        CycleLengthRule::Beta => beta,
        CycleLengthRule::Alpha => 1.0 - beta,
    } * n as f64;
    let m = nearest_odd_length(target, n);
    let t = CycleType::cycle(n, m)?;
    let v = spectrum_an(&t)?;
    Ok((t, v))
}

/// Limit of an `h` sequence along the cofinite filter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LimitReport {
    Converged(f64),
    NoCofiniteLimit { tail_min: f64, tail_max: f64 },
}

/// Reports convergence when the last quarter of the values varies by less
/// than `tol`.
pub fn limit_report(hs: &[f64], tol: f64) -> LimitReport {
    if hs.is_empty() {
        return LimitReport::NoCofiniteLimit {
            tail_min: f64::NAN,
            tail_max: f64::NAN,
        };
    }
    let tail = &hs[hs.len() - (hs.len() / 4).max(1)..];
    let lo = tail.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi - lo < tol {
        LimitReport::Converged(*hs.last().expect("nonempty"))
    } else {
        LimitReport::NoCofiniteLimit {
            tail_min: lo,
            tail_max: hi,
        }
    }
}

/// `h` along a family of alternating groups, one cycle type per degree.
pub fn h_sequence(degrees: &[u32], elems: &[CycleType], tol: f64) -> Result<(Vec<SpectrumValue>, LimitReport)> {
    if degrees.len() != elems.len() {
        return Err(CoreError::LengthMismatch {
            expected: degrees.len(),
            got: elems.len(),
        });
    }
    let mut out = Vec::with_capacity(elems.len());
    for (&n, t) in degrees.iter().zip(elems) {
        if t.degree() != n {
            return Err(CoreError::PreconditionViolated(alloc::format!(
                "cycle type {t} does not live in A_{n}"
            )));
        }
        out.push(spectrum_an(t)?);
    }
    let hs: Vec<f64> = out.iter().map(|v| v.h).collect();
    let report = limit_report(&hs, tol);
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildOptions, ClassTable, ElementForm};
    use crate::spec::GroupSpec;
    use proptest::prelude::*;

    #[test]
    fn small_class_sizes() {
        let t = CycleType::new(5, alloc::vec![3]).unwrap();
        assert_eq!(class_size_an(&t).unwrap().exact, Some(20));
        let t = CycleType::cycle(5, 5).unwrap();
        assert_eq!(class_size_an(&t).unwrap().exact, Some(12));
        assert_eq!(class_size_an(&CycleType::identity(9)).unwrap().exact, Some(1));
        let odd = CycleType::cycle(5, 2).unwrap();
        assert_eq!(class_size_an(&odd).unwrap_err(), CoreError::OddParity);
    }

    /// Exhaustive comparison with enumerated alternating groups.
    #[test]
    fn agrees_with_enumeration_up_to_degree_9() {
        for n in 3..=9u32 {
            let g = build_group(&GroupSpec::Alternating(n), &BuildOptions::default()).unwrap();
            let ct = ClassTable::new(&g);
            let mut by_type: Vec<(Vec<u32>, usize)> = Vec::new();
            for c in ct.classes() {
                let ElementForm::Perm(p) = g.form(c.rep) else { unreachable!() };
                by_type.push((p.cycle_lengths(), c.size));
            }
            for parts in partitions(n) {
                let t = CycleType::new(n, parts.clone()).unwrap();
                if !t.is_even() {
                    continue;
                }
                let found: Vec<usize> = by_type.iter().filter(|(p, _)| *p == parts).map(|x| x.1).collect();
                assert_eq!(found.len(), if t.splits_in_an() { 2 } else { 1 }, "A_{n} {t}");
                let size = class_size_an(&t).unwrap().exact.unwrap() as usize;
                assert!(found.iter().all(|&s| s == size), "A_{n} {t}");
            }
        }
    }

    #[test]
    fn log_path_matches_exact_path() {
        for n in [10u32, 15, 20] {
            for m in [3u32, 5, 7, 9] {
                let t = CycleType::cycle(n, m).unwrap();
                let exact = class_size_an(&t).unwrap().exact.unwrap() as f64;
                let split = if t.splits_in_an() { core::f64::consts::LN_2 } else { 0.0 };
                let approx = lgamma(n as f64 + 1.0) - t.log_centralizer_sn() - split;
                assert!((log(exact) - approx).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn nearest_odd() {
        assert_eq!(nearest_odd_length(5000.0, 10_000), 4999);
        assert_eq!(nearest_odd_length(5001.2, 10_000), 5001);
        assert_eq!(nearest_odd_length(0.0, 10_000), 3);
        assert_eq!(nearest_odd_length(10_000.0, 10_000), 9999);
        assert_eq!(nearest_odd_length(6.0, 7), 5);
        assert_eq!(nearest_odd_length(6.1, 7), 7);
    }

    #[test]
    fn spectrum_examples() {
        let (t, v) = spectrum_element_an(10_000, 0.5, CycleLengthRule::Beta).unwrap();
        assert_eq!(t.nontrivial_parts(), [4999]);
        assert!(v.h > 0.5 && v.h < 0.56, "{}", v.h);
        let (t, v) = spectrum_element_an(10_000, 0.0, CycleLengthRule::Beta).unwrap();
        assert_eq!(t.nontrivial_parts(), [3]);
        assert!(v.h < 0.001);
        let (_, v) = spectrum_element_an(10_000, 1.0, CycleLengthRule::Beta).unwrap();
        assert!(v.h > 0.99);
    }

    #[test]
    fn h_sequences() {
        let degrees: Vec<u32> = (5..=2000).collect();
        let threes: Vec<CycleType> = degrees.iter().map(|&n| CycleType::cycle(n, 3).unwrap()).collect();
        let (hs, _) = h_sequence(&degrees, &threes, 0.01).unwrap();
        assert!(hs.last().unwrap().h < 0.02);
        assert!(hs.windows(2).all(|w| w[1].h <= w[0].h));
        let ids: Vec<CycleType> = degrees.iter().map(|&n| CycleType::identity(n)).collect();
        let (hs, rep) = h_sequence(&degrees, &ids, 0.01).unwrap();
        assert!(hs.iter().all(|v| v.h == 0.0));
        assert_eq!(rep, LimitReport::Converged(0.0));
        let longest: Vec<CycleType> = degrees
            .iter()
            .map(|&n| CycleType::cycle(n, if n % 2 == 1 { n } else { n - 1 }).unwrap())
            .collect();
        let (hs, _) = h_sequence(&degrees, &longest, 0.01).unwrap();
        assert!(hs.last().unwrap().h > 0.99);
        assert!(h_sequence(&degrees[1..], &ids, 0.1).is_err());
    }

    proptest! {
        #[test]
        fn h_in_unit_interval(n in 5u32..5000, beta in 0.0f64..=1.0) {
            let (t, v) = spectrum_element_an(n, beta, CycleLengthRule::Beta).unwrap();
            prop_assert!(t.is_even());
            prop_assert_eq!(t.parts().iter().sum::<u32>(), n);
            prop_assert!((0.0..=1.0).contains(&v.h));
        }

        #[test]
        fn parity_matches_permutation(parts in proptest::collection::vec(1u32..6, 1..6)) {
            let n: u32 = parts.iter().sum::<u32>() + 2;
            let t = CycleType::new(n, parts).unwrap();
            let p = crate::perm::Perm::from_cycles(n as usize, &t.to_perm_cycles()).unwrap();
            prop_assert_eq!(p.is_even(), t.is_even());
            let mut lens = p.cycle_lengths();
            lens.sort_unstable_by(|a, b| b.cmp(a));
            prop_assert_eq!(lens, t.parts().to_vec());
        }
    }
}
