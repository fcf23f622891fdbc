//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Products act on the right: `x^(ab) = (x^a)^b`, so `a.then(b)` applies
//! `a` first. Cycle notation is 1-based, e.g. `(1,2,3)(4,5)` or, when all
//! points are single digits, `(123)(45)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{CoreError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u16).collect())
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<u16>) -> Result<Perm> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(CoreError::Parse(alloc::format!(
                    "images {images:?} are not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of degree `n` from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut img: Vec<u16> = (0..n as u16).collect();
        let mut used = alloc::vec![false; n];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x >= n || used[x] {
                    return Err(CoreError::Parse(alloc::format!(
                        "bad cycle {c:?} for degree {n}"
                    )));
                }
                used[x] = true;
                img[x] = c[(k + 1) % c.len()] as u16;
            }
        }
        Ok(Perm(img))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_lengths(&self) -> Vec<u32> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image(x);
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn is_even(&self) -> bool {
        let lens = self.cycle_lengths();
        (self.degree() - lens.len()).is_multiple_of(2)
    }

    /// Parses 1-based cycle notation for a permutation of degree `n`.
    pub fn parse(n: usize, s: &str) -> Result<Perm> {
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "e" || s == "id" {
            return Ok(Perm::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let r = rest.trim_start();
            if r.is_empty() {
                break;
            }
            if !r.starts_with('(') {
                return Err(CoreError::Parse(alloc::format!("expected '(' in {s:?}")));
            }
            let close = r
                .find(')')
                .ok_or_else(|| CoreError::Parse(alloc::format!("unclosed cycle in {s:?}")))?;
            let body = &r[1..close];
            cycles.push(parse_cycle_body(body)?);
            rest = &r[close + 1..];
        }
        let cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .filter(|c| !c.is_empty())
            .collect();
        for c in &cycles {
            if c.iter().any(|&x| x >= n) {
                return Err(CoreError::Parse(alloc::format!(
                    "point out of range for degree {n} in {s:?}"
                )));
            }
        }
        Perm::from_cycles(n, &cycles)
    }
}

fn parse_cycle_body(body: &str) -> Result<Vec<usize>> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let tokens: Vec<&str> = if body.contains(',') || body.contains(' ') {
        body.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect()
    } else {
        // single-digit points written without separators
        (0..body.len()).map(|i| &body[i..i + 1]).collect()
    };
    tokens
        .iter()
        .map(|t| {
            let v: usize = t
                .parse()
                .map_err(|_| CoreError::Parse(alloc::format!("bad point {t:?}")))?;
            if v == 0 {
                return Err(CoreError::Parse("points are 1-based".to_string()));
            }
            Ok(v - 1)
        })
        .collect()
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        let compact = self.degree() <= 9;
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            if compact {
                write!(f, "({})", parts.concat())?;
            } else {
                write!(f, "({})", parts.join(","))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_product() {
        let a = Perm::parse(3, "(12)").unwrap();
        let b = Perm::parse(3, "(23)").unwrap();
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1
        assert_eq!(a.then(&b), Perm::parse(3, "(132)").unwrap());
    }

    #[test]
    fn parse_and_display() {
        let p = Perm::parse(11, "(1,10)(2,3)").unwrap();
        assert_eq!(p.image(0), 9);
        assert_eq!(alloc::format!("{p}"), "(1,10)(2,3)");
        let q = Perm::parse(5, "(12)(345)").unwrap();
        assert_eq!(alloc::format!("{q}"), "(12)(345)");
        assert_eq!(Perm::parse(4, "()").unwrap(), Perm::identity(4));
        assert!(Perm::parse(3, "(14)").is_err());
        assert!(Perm::parse(3, "(11)").is_err());
    }

    #[test]
    fn parity_and_types() {
        let p = Perm::parse(5, "(12345)").unwrap();
        assert!(p.is_even());
        assert_eq!(p.cycle_lengths(), alloc::vec![5]);
        let t = Perm::parse(5, "(12)").unwrap();
        assert!(!t.is_even());
        assert_eq!(t.cycle_lengths(), alloc::vec![2, 1, 1, 1]);
        assert!(p.then(&p.inverse()).is_identity());
    }
}
