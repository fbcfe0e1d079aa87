//! Arbitrary-precision complex root isolation.
//!
//! Numbers are fixed point: a [`Cx`] at precision `p` stands for
//! `(re + i·im) / 2^p`. Roots are approximated by Aberth iteration and then
//! enclosed in disks of radius `n·|W_i|`, where `W_i` is the Weierstrass
//! correction evaluated exactly at the dyadic midpoints. Pairwise disjoint
//! disks each contain exactly one root.

use num_bigint::BigInt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

impl Cx {
    pub fn zero() -> Self {
        Cx { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn real(re: BigInt) -> Self {
        Cx { re, im: BigInt::zero() }
    }

    /// The integer `n` at precision `p`.
    pub fn from_int(n: &BigInt, p: u32) -> Self {
        Cx::real(n << p)
    }

    pub fn from_rat(x: &Rat, p: u32) -> Self {
        Cx::real((x.numer() << p) / x.denom())
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn neg(&self) -> Cx {
        Cx { re: -&self.re, im: -&self.im }
    }

    pub fn mul(&self, o: &Cx, p: u32) -> Cx {
        Cx {
            re: (&self.re * &o.re - &self.im * &o.im) >> p,
            im: (&self.re * &o.im + &self.im * &o.re) >> p,
        }
    }

    pub fn div(&self, o: &Cx, p: u32) -> Option<Cx> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let nr = &self.re * &o.re + &self.im * &o.im;
        let ni = &self.im * &o.re - &self.re * &o.im;
        Some(Cx { re: (nr << p) / &den, im: (ni << p) / &den })
    }

    /// Cheap size measure `|re| + |im|` in scaled units.
    pub fn l1(&self) -> BigInt {
        self.re.abs() + self.im.abs()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Changes precision from `from` to `to`.
    pub fn rescale(&self, from: u32, to: u32) -> Cx {
        if to >= from {
            Cx { re: &self.re << (to - from), im: &self.im << (to - from) }
        } else {
            Cx { re: &self.re >> (from - to), im: &self.im >> (from - to) }
        }
    }

    pub fn to_f64(&self, p: u32) -> (f64, f64) {
        let s = |x: &BigInt| {
            let bits = x.bits() as i64;
            if bits > 1000 {
                let sh = (bits - 1000) as u32;
                (x >> sh).to_f64().unwrap_or(0.0) * 2f64.powi(sh as i32 - p as i32)
            } else {
                x.to_f64().unwrap_or(0.0) * 2f64.powi(-(p as i32))
            }
        };
        (s(&self.re), s(&self.im))
    }
}

/// Ceiling of the square root of a nonnegative integer.
pub fn ceil_sqrt(x: &BigInt) -> BigInt {
    let r = x.sqrt();
    if &(&r * &r) == x {
        r
    } else {
        r + 1
    }
}

/// Certified root enclosures of an integer polynomial.
#[derive(Clone, Debug)]
pub struct RootCloud {
    pub prec: u32,
    pub mids: Vec<Cx>,
    /// Upper bounds on the enclosure radii, at scale `2^prec`.
    pub radii: Vec<BigInt>,
}

impl RootCloud {
    pub fn len(&self) -> usize {
        self.mids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mids.is_empty()
    }

    /// Largest radius, as a fixed-point integer at scale `2^prec`.
    pub fn max_radius(&self) -> BigInt {
        self.radii.iter().max().cloned().unwrap_or_default()
    }

    /// Whether disk `i` meets the real axis.
    pub fn may_be_real(&self, i: usize) -> bool {
        self.mids[i].im.abs() <= self.radii[i]
    }
}

fn log2_ceil_abs(x: &BigInt) -> i64 {
    x.bits() as i64
}

fn eval_and_deriv(c: &[Cx], z: &Cx, p: u32) -> (Cx, Cx) {
    let mut v = c.last().unwrap().clone();
    let mut d = Cx::zero();
    for a in c.iter().rev().skip(1) {
        d = d.mul(z, p).add(&v);
        v = v.mul(z, p).add(a);
    }
    (v, d)
}

fn initial_guesses(coeffs: &[BigInt], p: u32) -> Vec<Cx> {
    let n = coeffs.len() - 1;
    let lc = &coeffs[n];
    // Fujiwara-style bound, in powers of two.
    let lb = log2_ceil_abs(lc);
    let e = (1..=n)
        .filter(|&i| !coeffs[n - i].is_zero())
        .map(|i| (log2_ceil_abs(&coeffs[n - i]) - lb + i as i64) / i as i64 + 1)
        .max()
        .unwrap_or(0);
    let center = Cx::real((-&coeffs[n - 1] << p) / (lc * BigInt::from(n as u64)));
    (0..n)
        .map(|j| {
            let th = 2.0 * std::f64::consts::PI * j as f64 / n as f64 + 0.7;
            let to_fixed = |v: f64| {
                let m = BigInt::from((v * (1u64 << 52) as f64).round() as i64);
                let sh = p as i64 + e - 52;
                if sh >= 0 {
                    m << sh as u32
                } else {
                    m >> (-sh) as u32
                }
            };
            Cx { re: to_fixed(th.cos()), im: to_fixed(th.sin()) }.add(&center)
        })
        .collect()
}

/// Runs Aberth iterations; returns whether the corrections fell below
/// `2^16` ulps.
fn aberth(c: &[Cx], zs: &mut [Cx], p: u32, max_iter: usize) -> bool {
    let n = zs.len();
    let tol = BigInt::one() << 16u32;
    let one = Cx::real(BigInt::one() << p);
    for _ in 0..max_iter {
        let mut worst = BigInt::zero();
        for i in 0..n {
            let (v, d) = eval_and_deriv(c, &zs[i], p);
            if v.is_zero() {
                continue;
            }
            let Some(w) = v.div(&d, p) else {
                zs[i].re += BigInt::one() << p.saturating_sub(8);
                worst = &tol + 1;
                continue;
            };
            let mut s = Cx::zero();
            for j in 0..n {
                if j != i {
                    if let Some(t) = one.div(&zs[i].sub(&zs[j]), p) {
                        s = s.add(&t);
                    }
                }
            }
            let den = one.sub(&w.mul(&s, p));
            let delta = w.div(&den, p).unwrap_or(w);
            let size = delta.l1();
            if size > worst {
                worst = size;
            }
            zs[i] = zs[i].sub(&delta);
        }
        if worst <= tol {
            return true;
        }
    }
    false
}

/// Gaussian-integer product.
fn gmul(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

/// Weierstrass enclosures around the given midpoints, computed exactly.
fn certify(coeffs: &[BigInt], zs: &[Cx], p: u32) -> Option<Vec<BigInt>> {
    let n = zs.len();
    let lc = &coeffs[n];
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let z = (zs[i].re.clone(), zs[i].im.clone());
        // N = Σ c_k Z^k S^{n−k}, S = 2^p
        let mut acc = (lc.clone(), BigInt::zero());
        for t in 1..=n {
            acc = gmul(&acc, &z);
            acc.0 += &coeffs[n - t] << (p as usize * t);
        }
        let mut g = (lc.clone(), BigInt::zero());
        for (j, w) in zs.iter().enumerate() {
            if j != i {
                g = gmul(&g, &(&z.0 - &w.re, &z.1 - &w.im));
            }
        }
        let g2 = &g.0 * &g.0 + &g.1 * &g.1;
        if g2.is_zero() {
            return None;
        }
        let n2 = &acc.0 * &acc.0 + &acc.1 * &acc.1;
        let num = n2 * BigInt::from((n * n) as u64);
        let q = (&num + &g2 - 1u32) / &g2;
        radii.push(ceil_sqrt(&q) + 1u32);
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = zs[i].sub(&zs[j]);
            let dist2 = &d.re * &d.re + &d.im * &d.im;
            let rs = &radii[i] + &radii[j];
            if dist2 <= &rs * &rs {
                return None;
            }
        }
    }
    Some(radii)
}

/// Isolates all complex roots of a squarefree integer polynomial at
/// precision `prec`. Fails when the enclosures are not yet disjoint.
pub fn isolate_roots(coeffs: &[BigInt], prec: u32) -> Result<RootCloud> {
    let n = coeffs.len().saturating_sub(1);
    if coeffs.is_empty() || coeffs[n].is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if n == 0 {
        return Ok(RootCloud { prec, mids: vec![], radii: vec![] });
    }
    let p0 = prec.min(64);
    let c0: Vec<Cx> = coeffs.iter().map(|a| Cx::from_int(a, p0)).collect();
    let mut zs = initial_guesses(coeffs, p0);
    aberth(&c0, &mut zs, p0, 300 + 40 * n);
    let mut p = p0;
    while p < prec {
        let np = (2 * p).min(prec);
        zs = zs.iter().map(|z| z.rescale(p, np)).collect();
        p = np;
        let c: Vec<Cx> = coeffs.iter().map(|a| Cx::from_int(a, p)).collect();
        aberth(&c, &mut zs, p, 40 + 4 * n);
    }
    let radii = certify(coeffs, &zs, prec)
        .ok_or_else(|| Error::Numeric(format!("root enclosures overlap at {prec} bits")))?;
    Ok(RootCloud { prec, mids: zs, radii })
}

/// Retries [`isolate_roots`] with doubled precision until `accept` holds.
pub fn isolate_roots_until(
    coeffs: &[BigInt],
    start: u32,
    doublings: u32,
    accept: impl Fn(&RootCloud) -> bool,
) -> Result<RootCloud> {
    let mut prec = start;
    let mut last = None;
    for _ in 0..=doublings {
        match isolate_roots(coeffs, prec) {
            Ok(cloud) if accept(&cloud) => return Ok(cloud),
            Ok(_) => last = Some(Error::Numeric(format!("enclosures too wide at {prec} bits"))),
            Err(e) => last = Some(e),
        }
        prec *= 2;
    }
    Err(last.unwrap_or_else(|| Error::Numeric("no attempt".into())))
}

/// Continued-fraction rationalization of `x / 2^p`: the first convergent
/// `h/k` with `|x/2^p − h/k| < 2^{−3p/4}` and `k ≤ 2^{p/4}`.
pub fn rationalize(x: &BigInt, p: u32) -> Option<Rat> {
    let den = BigInt::one() << p;
    let kmax = BigInt::one() << (p / 4);
    let err_scale = BigInt::one() << (3 * p / 4);
    let (mut a, mut b) = (x.clone(), den.clone());
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    while !b.is_zero() {
        let q = num_integer::Integer::div_floor(&a, &b);
        let r = &a - &q * &b;
        let h2 = &q * &h1 + &h0;
        let k2 = &q * &k1 + &k0;
        if k2 > kmax {
            return None;
        }
        // |x/2^p − h/k| < 2^{−3p/4}  ⇔  |x·k − h·2^p| · 2^{3p/4} < k · 2^p
        let diff = (x * &k2 - &h2 * &den).abs();
        if diff * &err_scale < &k2 * &den {
            return Some(Rat::new(h2, k2));
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        a = std::mem::replace(&mut b, r);
    }
    None
}

/// Magnitude test `|x| < 2^{−e}` for a fixed-point value at precision `p`.
pub fn below_pow2(x: &BigInt, p: u32, e: u32) -> bool {
    if e >= p {
        return x.is_zero();
    }
    x.abs() < (BigInt::one() << (p - e))
}
