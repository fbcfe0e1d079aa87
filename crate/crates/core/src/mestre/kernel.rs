//! Numeric stage: roots of `P`, a kernel vector of the antisymmetric matrix
//! `M_jk = 1/(α_k − α_j)`, and rationalization of `R = Σ λ_j P_j`.
//!
//! Nothing computed here is trusted; every candidate is checked exactly
//! downstream.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratcore::numeric::{isolate_roots, rationalize, Cx, RootCloud};
use crate::ratcore::RatPoly;

/// Sub-Pfaffians of an antisymmetric matrix, memoized on index bitmasks.
struct Pfaffians<'a> {
    m: &'a [Vec<Cx>],
    p: u32,
    memo: HashMap<u64, Cx>,
}

impl<'a> Pfaffians<'a> {
    fn pf(&mut self, mask: u64) -> Cx {
        if mask == 0 {
            return Cx::real(BigInt::one() << self.p);
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let idx: Vec<usize> = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
        let first = idx[0];
        let mut acc = Cx::zero();
        for (k, &j) in idx.iter().enumerate().skip(1) {
            let rest = mask & !(1 << first) & !(1 << j);
            let term = self.m[first][j].mul(&self.pf(rest), self.p);
            acc = if k % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

/// Kernel vector `λ_i = (−1)^i Pf(M with row and column i removed)`.
pub fn kernel_vector(cloud: &RootCloud) -> Result<Vec<Cx>> {
    let n = cloud.len();
    if n % 2 == 0 || n < 3 {
        return Err(Error::Precondition("kernel vector needs odd degree ≥ 3".into()));
    }
    if n > 63 {
        return Err(Error::Precondition("degree too large".into()));
    }
    let p = cloud.prec;
    let one = Cx::real(BigInt::one() << p);
    let a = &cloud.mids;
    let mut m = vec![vec![Cx::zero(); n]; n];
    for j in 0..n {
        for k in 0..n {
            if j != k {
                m[j][k] = one
                    .div(&a[k].sub(&a[j]), p)
                    .ok_or_else(|| Error::RepeatedRoots)?;
            }
        }
    }
    let full: u64 = (1u64 << n) - 1;
    let mut pf = Pfaffians { m: &m, p, memo: HashMap::new() };
    let lam: Vec<Cx> = (0..n)
        .map(|i| {
            let v = pf.pf(full & !(1 << i));
            if i % 2 == 0 {
                v
            } else {
                v.neg()
            }
        })
        .collect();
    let size = lam.iter().map(Cx::l1).max().unwrap_or_default();
    if size.bits() < (p / 2) as u64 {
        return Err(Error::Numeric(
            "all sub-Pfaffians vanish: kernel is not one-dimensional".into(),
        ));
    }
    // residual ‖Mλ‖ relative to the entry scale
    let mscale = m.iter().flatten().map(Cx::l1).max().unwrap_or_default();
    for row in &m {
        let r = row.iter().zip(&lam).fold(Cx::zero(), |acc, (x, y)| acc.add(&x.mul(y, p)));
        let bound = (&mscale * &size * n as u64) >> (p + p / 2);
        if r.l1() > bound + 1u32 {
            return Err(Error::Numeric("kernel residual too large".into()));
        }
    }
    Ok(lam)
}

/// `R = Σ λ_j ∏_{k≠j}(X − α_k)`, complex coefficients little-endian.
fn combine(cloud: &RootCloud, lam: &[Cx]) -> Vec<Cx> {
    let n = cloud.len();
    let p = cloud.prec;
    let mut r = vec![Cx::zero(); n];
    for j in 0..n {
        let mut pj = vec![Cx::real(BigInt::one() << p)];
        for (k, a) in cloud.mids.iter().enumerate() {
            if k == j {
                continue;
            }
            let mut next = vec![Cx::zero(); pj.len() + 1];
            for (i, c) in pj.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c);
                next[i] = next[i].sub(&c.mul(a, p));
            }
            pj = next;
        }
        for (i, c) in pj.iter().enumerate() {
            r[i] = r[i].add(&c.mul(&lam[j], p));
        }
    }
    r
}

/// Rational candidate for `R`, normalized by its largest coefficient, or
/// `None` when some coefficient is not recognizably rational at this
/// precision.
pub fn rationalize_r(cloud: &RootCloud, lam: &[Cx]) -> Option<RatPoly> {
    let p = cloud.prec;
    let r = combine(cloud, lam);
    let big = r.iter().max_by_key(|c| c.l1())?.clone();
    if big.is_zero() {
        return None;
    }
    let tiny = BigInt::one() << (p / 2);
    let mut out = Vec::with_capacity(r.len());
    for c in &r {
        let q = c.div(&big, p)?;
        if q.im.magnitude() >= tiny.magnitude() {
            return None;
        }
        out.push(rationalize(&q.re, p)?);
    }
    if out.iter().all(Zero::is_zero) {
        return None;
    }
    Some(RatPoly::new(out))
}

/// Root cloud plus kernel vector at the given precision.
pub fn numeric_kernel(p: &RatPoly, prec: u32) -> Result<(RootCloud, Vec<Cx>)> {
    if !p.is_squarefree() {
        return Err(Error::RepeatedRoots);
    }
    let (_, prim) = p.primitive_part();
    let cloud = isolate_roots(&prim.int_coeffs(), prec)?;
    let lam = kernel_vector(&cloud)?;
    Ok((cloud, lam))
}

