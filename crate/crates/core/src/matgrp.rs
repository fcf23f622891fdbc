//! Centralizers in `SL(n,p)` without enumerating the group, and block
//! elements with a prescribed fixed space.

use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::fp::{self, Matrix};
use crate::poly::{self, factor};
use crate::spectrum::SpectrumValue;

pub const DEFAULT_ALGEBRA_CAP: u128 = 10_000_000;

/// `det(xI - g)` by reduction to upper Hessenberg form.
pub fn characteristic_polynomial(g: &Matrix) -> Vec<u32> {
    let n = g.dim();
    let p = g.prime();
    let mut h: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| g.get(i, j)).collect()).collect();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let iv = fp::inv(h[j + 1][j], p);
        for k in j + 2..n {
            let f = fp::mul(h[k][j], iv, p);
            if f == 0 {
                continue;
            }
            for c in 0..n {
                h[k][c] = fp::sub(h[k][c], fp::mul(f, h[j + 1][c], p), p);
            }
            for row in h.iter_mut() {
                row[j + 1] = fp::add(row[j + 1], fp::mul(f, row[k], p), p);
            }
        }
    }
    // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{m=i+1..k} h_{m,m-1}) p_i
    let mut ps: Vec<Vec<u32>> = alloc::vec![alloc::vec![1]];
    for k in 0..n {
        let mut next = poly::mul(&ps[k], &[fp::sub(0, h[k][k], p), 1], p);
        let mut prod = 1u32;
        for i in (0..k).rev() {
            prod = fp::mul(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let c = fp::mul(h[i][k], prod, p);
            if c != 0 {
                next = poly::sub(&next, &poly::mul(&ps[i], &[c], p), p);
            }
        }
        ps.push(next);
    }
    ps.pop().expect("nonempty")
}

/// `φ(g)` by Horner's rule.
pub fn eval_poly(phi: &[u32], g: &Matrix) -> Matrix {
    let n = g.dim();
    let p = g.prime();
    let mut acc = Matrix::zero(n, p);
    for &c in phi.iter().rev() {
        acc = acc.mul(g).add(&Matrix::scalar(n, p, c));
    }
    acc
}

/// Elementary divisor data of one irreducible factor: the partition `λ`
/// with `g` having Jordan-type blocks `φ^{λ_i}` on the `φ`-primary part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryPart {
    pub phi: Vec<u32>,
    pub partition: Vec<u32>,
}

pub fn primary_decomposition(g: &Matrix) -> Vec<PrimaryPart> {
    let n = g.dim();
    let p = g.prime();
    let mut out = Vec::new();
    for (phi, mult) in factor(&characteristic_polynomial(g), p) {
        let d = phi.len() - 1;
        let a = eval_poly(&phi, g);
        // conj[k] = number of parts ≥ k+1
        let mut conj = Vec::new();
        let mut power = a.clone();
        let mut prev_null = 0;
        loop {
            let null = n - power.rank();
            if null == prev_null || null - prev_null == 0 {
                break;
            }
            conj.push(((null - prev_null) / d) as u32);
            prev_null = null;
            if null == mult * d {
                break;
            }
            power = power.mul(&a);
        }
        let mut partition = Vec::new();
        let len = conj.first().copied().unwrap_or(0);
        for i in 0..len {
            partition.push(conj.iter().filter(|&&c| c > i).count() as u32);
        }
        out.push(PrimaryPart { phi, partition });
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn checked_pow(b: u128, e: u64) -> Result<u128> {
    let e = u32::try_from(e).map_err(|_| CoreError::Overflow("power"))?;
    b.checked_pow(e).ok_or(CoreError::Overflow("power"))
}

/// A positive integer `p^a · ∏(p^e - 1) · num / den`, kept factored so
/// that its logarithm survives when the value does not fit in `u128`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeOrder {
    pub p: u32,
    pub p_exponent: u64,
    /// Exponents `e` of the factors `p^e - 1`.
    pub cyclotomic: Vec<u64>,
    pub num: u64,
    pub den: u64,
}

impl PrimeOrder {
    fn new(p: u32) -> PrimeOrder {
        PrimeOrder {
            p,
            p_exponent: 0,
            cyclotomic: Vec::new(),
            num: 1,
            den: 1,
        }
    }

    pub fn exact(&self) -> Result<u128> {
        let p = self.p as u128;
        let mut acc = checked_pow(p, self.p_exponent)?.checked_mul(self.num as u128);
        for &e in &self.cyclotomic {
            acc = acc.and_then(|a| checked_pow(p, e).ok().and_then(|q| a.checked_mul(q - 1)));
        }
        let acc = acc.ok_or(CoreError::Overflow("group order"))?;
        debug_assert_eq!(acc % self.den as u128, 0);
        Ok(acc / self.den as u128)
    }

    pub fn log(&self) -> f64 {
        let lp = libm::log(self.p as f64);
        let mut acc = self.p_exponent as f64 * lp + libm::log(self.num as f64) - libm::log(self.den as f64);
        for &e in &self.cyclotomic {
            // log(p^e - 1) = e log p + log(1 - p^-e)
            acc += e as f64 * lp + libm::log1p(-libm::exp(-(e as f64) * lp));
        }
        acc
    }
}

pub fn order_gl_factored(n: usize, p: u32) -> PrimeOrder {
    let mut o = PrimeOrder::new(p);
    // |GL(n,p)| = p^{n(n-1)/2} ∏_{i=1..n} (p^i - 1)
    o.p_exponent = (n * n.saturating_sub(1) / 2) as u64;
    o.cyclotomic = (1..=n as u64).collect();
    o
}

pub fn order_sl_factored(n: usize, p: u32) -> PrimeOrder {
    let mut o = order_gl_factored(n, p);
    o.den = p as u64 - 1;
    o
}

pub fn order_gl(n: usize, p: u32) -> Result<u128> {
    order_gl_factored(n, p).exact()
}

pub fn order_sl(n: usize, p: u32) -> Result<u128> {
    order_sl_factored(n, p).exact()
}

/// `|C_GL(g)|` from the elementary divisors.
pub fn centralizer_gl_factored(g: &Matrix) -> PrimeOrder {
    let mut o = PrimeOrder::new(g.prime());
    for part in primary_decomposition(g) {
        let d = (part.phi.len() - 1) as u64;
        let lam = &part.partition;
        let len = lam.first().copied().unwrap_or(0);
        let conj_sq: u64 = (0..len)
            .map(|i| {
                let c = lam.iter().filter(|&&x| x > i).count() as u64;
                c * c
            })
            .sum();
        let mut mults: Vec<u64> = Vec::new();
        let mut i = 0;
        while i < lam.len() {
            let j = lam[i..].iter().take_while(|&&x| x == lam[i]).count();
            mults.push(j as u64);
            i += j;
        }
        o.p_exponent += d * (conj_sq - mults.iter().map(|m| m * (m + 1) / 2).sum::<u64>());
        for &m in &mults {
            o.cyclotomic.extend((1..=m).map(|j| d * j));
        }
    }
    o.cyclotomic.sort_unstable();
    o
}

/// `|C_SL(g)|`: the determinant maps `C_GL(g)` onto the subgroup of
/// `F_p^*` of index `gcd(p-1, g0)`, `g0` the gcd of all partition parts.
pub fn centralizer_sl_factored(g: &Matrix) -> Result<PrimeOrder> {
    if g.det() != 1 {
        return Err(CoreError::PreconditionViolated("matrix is not in SL".into()));
    }
    let p = g.prime() as u64;
    let g0 = primary_decomposition(g)
        .iter()
        .flat_map(|pp| pp.partition.iter().map(|&k| k as u64))
        .fold(0, gcd);
    let mut o = centralizer_gl_factored(g);
    o.num = gcd(p - 1, g0);
    o.den = p - 1;
    Ok(o)
}

pub fn centralizer_order_gl(g: &Matrix) -> Result<u128> {
    centralizer_gl_factored(g).exact()
}

pub fn centralizer_order_sl(g: &Matrix) -> Result<u128> {
    centralizer_sl_factored(g)?.exact()
}

/// Counts the determinant-one members of the centralizer algebra
/// `{X : gX = Xg}` by enumeration.
pub fn centralizer_order_sl_enumerated(g: &Matrix, cap: u128) -> Result<u128> {
    let n = g.dim();
    let p = g.prime();
    let vars = n * n;
    let mut rows = Vec::with_capacity(vars);
    for i in 0..n {
        for j in 0..n {
            // (gX - Xg)_{ij} = sum_k g_ik X_kj - X_ik g_kj
            let mut row = alloc::vec![0u32; vars];
            for k in 0..n {
                row[k * n + j] = fp::add(row[k * n + j], g.get(i, k), p);
                row[i * n + k] = fp::sub(row[i * n + k], g.get(k, j), p);
            }
            rows.push(row);
        }
    }
    let basis = fp::null_space(rows, vars, p);
    let size = checked_pow(p as u128, basis.len() as u64).unwrap_or(u128::MAX);
    if size > cap {
        return Err(CoreError::AlgebraTooLarge { size, cap });
    }
    let mut coeffs = alloc::vec![0u32; basis.len()];
    let mut count = 0u128;
    loop {
        let mut e = alloc::vec![0u32; vars];
        for (c, v) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                for (x, &b) in e.iter_mut().zip(v) {
                    *x = fp::add(*x, fp::mul(*c, b, p), p);
                }
            }
        }
        if Matrix::new(n, p, e)?.det() == 1 {
            count += 1;
        }
        let mut i = 0;
        while i < coeffs.len() {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
    }
    Ok(count)
}

/// Companion matrix of a monic polynomial.
pub fn companion(phi: &[u32], p: u32) -> Matrix {
    let k = phi.len() - 1;
    let mut m = Matrix::zero(k, p);
    for i in 1..k {
        m.set(i, i - 1, 1);
    }
    for i in 0..k {
        m.set(i, k - 1, fp::sub(0, phi[i], p));
    }
    m
}

pub fn block_diagonal(blocks: &[Matrix], p: u32) -> Matrix {
    let n: usize = blocks.iter().map(|b| b.dim()).sum();
    let mut m = Matrix::zero(n, p);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                m.set(off + i, off + j, b.get(i, j));
            }
        }
        off += b.dim();
    }
    m
}

/// The decomposition `V = V0 ⊕ V1 ⊕ V2` behind a spectrum element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockConstruction {
    pub dim_v0: usize,
    pub dim_v1: usize,
    /// Polynomials whose companion matrices act on `V1` and `V2`.
    pub polys: [Vec<u32>; 2],
}

#[derive(Clone, Debug)]
pub struct SlSpectrumElement {
    pub element: Matrix,
    pub blocks: BlockConstruction,
    pub centralizer: PrimeOrder,
    /// `None` once the value leaves `u128`.
    pub centralizer_order: Option<u128>,
    pub class_size: Option<u128>,
    pub value: SpectrumValue,
}

/// Degree-`k` polynomials without the root 1 whose companion matrices
/// have determinants multiplying to one.
fn block_polynomials(k: usize, p: u32) -> Result<[Vec<u32>; 2]> {
    let x_k_plus = |low: &[u32]| {
        let mut f = alloc::vec![0u32; k + 1];
        f[k] = 1;
        for (i, &c) in low.iter().enumerate() {
            f[i] = fp::add(f[i], c, p);
        }
        f
    };
    match (p, k) {
        (2, 1) => Err(CoreError::NoFixedPointFreeScalar),
        (2, k) if k % 2 == 0 => Ok([alloc::vec![1; k + 1], x_k_plus(&[1, 1])]),
        (2, k) => Ok([x_k_plus(&[1, 1]), x_k_plus(&{
            let mut low = alloc::vec![0u32; k];
            low[0] = 1;
            low[k - 1] = 1;
            low
        })]),
        (3, 1) => Ok([alloc::vec![1, 1], alloc::vec![1, 1]]),
        (3, _) => Ok([x_k_plus(&[1]), x_k_plus(&[1, 2])]),
        _ => {
            let c = 2;
            Ok([x_k_plus(&[fp::sub(0, c, p)]), x_k_plus(&[fp::sub(0, fp::inv(c, p), p)])])
        }
    }
}

/// Chooses `dim V0` near `sqrt(1-β)·n` with `n - dim V0` even.
pub fn choose_dim_v0(n: usize, beta: f64) -> usize {
    let target = libm::sqrt((1.0 - beta).max(0.0)) * n as f64;
    let mut best: Option<(f64, usize)> = None;
    for d0 in (n % 2..=n).step_by(2) {
        let err = libm::fabs(d0 as f64 - target);
        if best.is_none_or(|(e, _)| err < e - 1e-12) {
            best = Some((err, d0));
        }
    }
    let d0 = best.expect("some parity-compatible dimension").1;
    if d0 == n {
        n - 2
    } else {
        d0
    }
}

/// A determinant-one element fixing `V0` pointwise and acting on `V1`,
/// `V2` as cyclic transformations without fixed vectors.
pub fn spectrum_element_sl(n: usize, p: u32, beta: f64) -> Result<SlSpectrumElement> {
    if !fp::is_prime(p) {
        return Err(CoreError::InvalidSpec(alloc::format!("{p} is not prime")));
    }
    if n < 3 {
        return Err(CoreError::InfeasibleDecomposition(alloc::format!(
            "dimension {n} leaves no room for V0 ⊕ V1 ⊕ V2"
        )));
    }
    if !(0.0..=1.0).contains(&beta) {
        return Err(CoreError::PreconditionViolated(alloc::format!("beta {beta} outside [0,1]")));
    }
    let d0 = choose_dim_v0(n, beta);
    let k = (n - d0) / 2;
    let polys = block_polynomials(k, p)?;
    let mut blocks = Vec::new();
    if d0 > 0 {
        blocks.push(Matrix::identity(d0, p));
    }
    blocks.push(companion(&polys[0], p));
    blocks.push(companion(&polys[1], p));
    let element = block_diagonal(&blocks, p);
    debug_assert_eq!(element.det(), 1);
    let centralizer = centralizer_sl_factored(&element)?;
    let order = order_sl_factored(n, p);
    let centralizer_order = centralizer.exact().ok();
    let class_size = order.exact().ok().zip(centralizer_order).map(|(o, c)| o / c);
    let value = SpectrumValue::from_logs(order.log() - centralizer.log(), order.log());
    Ok(SlSpectrumElement {
        element,
        blocks: BlockConstruction {
            dim_v0: d0,
            dim_v1: k,
            polys,
        },
        centralizer,
        centralizer_order,
        class_size,
        value,
    })
}
