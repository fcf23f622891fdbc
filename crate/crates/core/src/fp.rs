//! Arithmetic over prime fields and square matrices over them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{CoreError, Result};

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero element.
pub fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p as u64 - 2, p)
}

/// Least generator of the multiplicative group of `F_p`.
pub fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let n = p - 1;
    let mut factors = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow(g, (n / q) as u64, p) != 1))
        .expect("F_p^* is cyclic")
}

/// An `n x n` matrix over `F_p`, entries row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: u16,
    p: u32,
    entries: Vec<u16>,
}

impl Matrix {
    pub fn new(n: usize, p: u32, entries: Vec<u32>) -> Result<Matrix> {
        if entries.len() != n * n {
            return Err(CoreError::LengthMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        if p > u16::MAX as u32 {
            return Err(CoreError::InvalidSpec(alloc::format!("prime {p} too large")));
        }
        Ok(Matrix {
            n: n as u16,
            p,
            entries: entries.into_iter().map(|x| (x % p) as u16).collect(),
        })
    }

    pub fn identity(n: usize, p: u32) -> Matrix {
        let mut e = alloc::vec![0u16; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Matrix {
            n: n as u16,
            p,
            entries: e,
        }
    }

    pub fn zero(n: usize, p: u32) -> Matrix {
        Matrix {
            n: n as u16,
            p,
            entries: alloc::vec![0; n * n],
        }
    }

    /// Scalar matrix `c * I`.
    pub fn scalar(n: usize, p: u32, c: u32) -> Matrix {
        let mut m = Matrix::zero(n, p);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn prime(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim() + j] as u32
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let n = self.dim();
        self.entries[i * n + j] = (v % self.p) as u16;
    }

    pub fn entries(&self) -> Vec<u32> {
        self.entries.iter().map(|&x| x as u32).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim();
        let p = self.p as u64;
        let mut out = alloc::vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.entries[i * n + k] as u64 * other.entries[k * n + j] as u64;
                }
                out[i * n + j] = (acc % p) as u16;
            }
        }
        Matrix {
            n: self.n,
            p: self.p,
            entries: out,
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let p = self.p;
        Matrix {
            n: self.n,
            p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| add(a as u32, b as u32, p) as u16)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let p = self.p;
        Matrix {
            n: self.n,
            p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| sub(a as u32, b as u32, p) as u16)
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let p = self.p;
        Matrix {
            n: self.n,
            p,
            entries: self
                .entries
                .iter()
                .map(|&a| mul(a as u32, c, p) as u16)
                .collect(),
        }
    }

    fn rows(&self) -> Vec<Vec<u32>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn det(&self) -> u32 {
        let n = self.dim();
        let p = self.p;
        let mut a = self.rows();
        let mut det = 1u32;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
                return 0;
            };
            if piv != col {
                a.swap(piv, col);
                det = sub(0, det, p);
            }
            det = mul(det, a[col][col], p);
            let iv = inv(a[col][col], p);
            for r in col + 1..n {
                if a[r][col] != 0 {
                    let f = mul(a[r][col], iv, p);
                    for c in col..n {
                        a[r][c] = sub(a[r][c], mul(f, a[col][c], p), p);
                    }
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows(), self.p)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim();
        let p = self.p;
        let mut a: Vec<Vec<u32>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| u32::from(i == j)));
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(piv, col);
            let iv = inv(a[col][col], p);
            for c in 0..2 * n {
                a[col][c] = mul(a[col][c], iv, p);
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..2 * n {
                        a[r][c] = sub(a[r][c], mul(f, a[col][c], p), p);
                    }
                }
            }
        }
        let entries = a.into_iter().flat_map(|r| r[n..].to_vec()).collect();
        Matrix::new(n, p, entries).ok()
    }

    pub fn is_scalar(&self) -> bool {
        let n = self.dim();
        let c = self.get(0, 0);
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == if i == j { c } else { 0 }))
    }

    /// Parses semicolon-separated rows of comma-separated entries, e.g. `1,1;0,1`.
    pub fn parse(p: u32, s: &str) -> Result<Matrix> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let rows: Vec<Vec<u32>> = s
            .split(';')
            .map(|r| {
                r.split(',')
                    .map(|t| {
                        let t = t.trim();
                        t.parse::<i64>()
                            .map(|v| v.rem_euclid(p as i64) as u32)
                            .map_err(|_| CoreError::Parse(alloc::format!("bad entry {t:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CoreError::Parse(alloc::format!("matrix {s:?} is not square")));
        }
        Matrix::new(n, p, rows.into_iter().flatten().collect())
    }
}

/// Rank of a list of row vectors over `F_p`.
pub fn rank_of_rows(mut a: Vec<Vec<u32>>, p: u32) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let iv = inv(a[rank][col], p);
        for c in col..cols {
            a[rank][c] = mul(a[rank][c], iv, p);
        }
        for r in 0..rows {
            if r != rank && a[r][col] != 0 {
                let f = a[r][col];
                for c in col..cols {
                    a[r][c] = sub(a[r][c], mul(f, a[rank][c], p), p);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Basis of the null space `{x : A x = 0}` of a `rows x cols` system.
pub fn null_space(mut a: Vec<Vec<u32>>, cols: usize, p: u32) -> Vec<Vec<u32>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let iv = inv(a[rank][col], p);
        for c in 0..cols {
            a[rank][c] = mul(a[rank][c], iv, p);
        }
        for r in 0..rows {
            if r != rank && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..cols {
                    a[r][c] = sub(a[r][c], mul(f, a[rank][c], p), p);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![0u32; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = sub(0, a[r][f], p);
            }
            v
        })
        .collect()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let rows: Vec<String> = (0..n)
            .map(|i| {
                let r: Vec<String> = (0..n).map(|j| alloc::format!("{}", self.get(i, j))).collect();
                r.join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
