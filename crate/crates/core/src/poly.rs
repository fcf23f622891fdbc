//! Polynomials over `F_p`, coefficients little-endian with no trailing
//! zeros, and their factorization into monic irreducibles.

use alloc::vec::Vec;

use crate::fp;

pub type Poly = Vec<u32>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn is_one(a: &[u32]) -> bool {
    a.len() == 1 && a[0] == 1
}

pub fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![0u64; a.len() + b.len() - 1];
    let p64 = p as u64;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

pub fn add(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut out = alloc::vec![0u32; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        *o = fp::add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0), p);
    }
    trim(out)
}

pub fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut out = alloc::vec![0u32; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        *o = fp::sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0), p);
    }
    trim(out)
}

/// `(q, r)` with `a = q b + r`; `b` nonzero.
pub fn divrem(a: &[u32], b: &[u32], p: u32) -> (Poly, Poly) {
    let db = degree(b).expect("nonzero divisor");
    let lead_inv = fp::inv(b[db], p);
    let mut r = trim(a.to_vec());
    let mut q = alloc::vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = fp::mul(r[dr], lead_inv, p);
        q[dr - db] = c;
        for i in 0..=db {
            r[dr - db + i] = fp::sub(r[dr - db + i], fp::mul(c, b[i], p), p);
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &[u32], b: &[u32], p: u32) -> Poly {
    divrem(a, b, p).1
}

pub fn monic(a: &[u32], p: u32) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => {
            let iv = fp::inv(lead, p);
            a.iter().map(|&c| fp::mul(c, iv, p)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn derivative(a: &[u32], p: u32) -> Poly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| fp::mul(c, (i as u64 % p as u64) as u32, p))
            .collect(),
    )
}

pub fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Poly {
    rem(&mul(a, b, p), f, p)
}

pub fn powmod(a: &[u32], mut e: u64, f: &[u32], p: u32) -> Poly {
    let mut base = rem(a, f, p);
    let mut acc = rem(&[1], f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, f, p);
        }
        base = mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

/// The monic polynomials of degree `d`, in a fixed order.
pub fn monic_of_degree(d: usize, p: u32) -> impl Iterator<Item = Poly> {
    let count = (p as u64).pow(d as u32);
    (0..count).map(move |mut code| {
        let mut c = alloc::vec![0u32; d + 1];
        for slot in c.iter_mut().take(d) {
            *slot = (code % p as u64) as u32;
            code /= p as u64;
        }
        c[d] = 1;
        c
    })
}

/// Squarefree parts `(s, e)` with `f = ∏ s^e` for monic `f`.
pub fn squarefree_decomposition(f: &[u32], p: u32) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if degree(f).unwrap_or(0) == 0 {
        return out;
    }
    let mut c = gcd(f, &derivative(f, p), p);
    let mut w = divrem(f, &c, p).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(&w, &c, p);
        let fac = divrem(&w, &y, p).0;
        if !is_one(&fac) {
            out.push((fac, i));
        }
        w = y;
        c = divrem(&c, &w, p).0;
        i += 1;
    }
    if !is_one(&c) {
        // c is a p-th power
        let root: Poly = c.iter().step_by(p as usize).copied().collect();
        for (s, e) in squarefree_decomposition(&root, p) {
            out.push((s, e * p as usize));
        }
    }
    out
}

/// Groups `(g, d)`: `g` is the product of the degree-`d` irreducible
/// factors of the squarefree monic `f`.
pub fn distinct_degree(f: &[u32], p: u32) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x: Poly = alloc::vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    while degree(&rest).unwrap_or(0) >= 2 * d {
        h = powmod(&h, p as u64, &rest, p);
        let g = gcd(&rest, &sub(&h, &x, p), p);
        if !is_one(&g) {
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(dr) = degree(&rest) {
        if dr > 0 {
            out.push((rest, dr));
        }
    }
    out
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// Splits a product of distinct degree-`d` irreducibles (Cantor–Zassenhaus).
pub fn equal_degree(f: &[u32], d: usize, p: u32) -> Vec<Poly> {
    let n = degree(f).unwrap_or(0);
    if n <= d {
        return alloc::vec![f.to_vec()];
    }
    let mut rng = SplitMix(0x5eed ^ n as u64 ^ (p as u64) << 32);
    loop {
        let a = trim((0..n).map(|_| (rng.next() % p as u64) as u32).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let probe = if p == 2 {
            // trace a + a^2 + ... + a^{2^{d-1}}
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = mulmod(&t, &t, f, p);
                acc = add(&acc, &t, p);
            }
            acc
        } else {
            // a^{(p^d - 1)/2} = (a · a^p ⋯ a^{p^{d-1}})^{(p-1)/2}
            let mut t = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                t = powmod(&t, p as u64, f, p);
                norm = mulmod(&norm, &t, f, p);
            }
            sub(&powmod(&norm, (p as u64 - 1) / 2, f, p), &[1], p)
        };
        let g = gcd(f, &probe, p);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, p);
            out.extend(equal_degree(&divrem(f, &g, p).0, d, p));
            return out;
        }
    }
}

/// Monic irreducible factors of `f` with multiplicities, sorted.
pub fn factor(f: &[u32], p: u32) -> Vec<(Poly, usize)> {
    let f = monic(&trim(f.to_vec()), p);
    let mut out = Vec::new();
    for (s, e) in squarefree_decomposition(&f, p) {
        for (g, d) in distinct_degree(&s, p) {
            for phi in equal_degree(&g, d, p) {
                out.push((phi, e));
            }
        }
    }
    out.sort();
    out
}

/// Factorization by trial division over all monic candidates.
pub fn factor_by_trial_division(f: &[u32], p: u32) -> Vec<(Poly, usize)> {
    let mut rest = monic(&trim(f.to_vec()), p);
    let mut out = Vec::new();
    let mut d = 1;
    while degree(&rest).unwrap_or(0) >= 2 * d {
        for phi in monic_of_degree(d, p) {
            let mut mult = 0;
            loop {
                let (q, r) = divrem(&rest, &phi, p);
                if !r.is_empty() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((phi, mult));
            }
        }
        d += 1;
    }
    if degree(&rest).unwrap_or(0) >= 1 {
        match out.iter_mut().find(|(phi, _)| *phi == rest) {
            Some((_, m)) => *m += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort();
    out
}
