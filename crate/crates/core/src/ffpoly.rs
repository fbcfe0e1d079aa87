//! Polynomials over prime fields 𝔽ₚ and their factorization shapes.
//!
//! Factoring runs squarefree check, distinct-degree splitting, then
//! Cantor–Zassenhaus equal-degree splitting (trace map when `p = 2`). The
//! random source is a ChaCha generator seeded per call, so results are
//! reproducible.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ratcore::RatPoly;

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in `[lo, hi]`, ascending.
pub fn primes_between(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&n| is_prime(n))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

/// Degrees of the monic irreducible factors, largest first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FactorPattern {
    pub degrees: Vec<usize>,
}

impl FactorPattern {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        FactorPattern { degrees }
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// `{k, 1, 1, …}`: one factor of degree `k`, the rest linear.
    pub fn is_cycle_with_fixed(&self, k: usize) -> bool {
        self.degrees.first() == Some(&k) && self.degrees[1..].iter().all(|&d| d == 1)
    }

    /// Whether a permutation with this cycle type is even.
    pub fn is_even(&self) -> bool {
        self.degrees.iter().map(|d| d - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for FactorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.degrees.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = FpPoly { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = o.coeffs.get(i).copied().unwrap_or(0);
                ((a as u128 + b as u128) % self.p as u128) as u64
            })
            .collect();
        FpPoly::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        FpPoly::new(self.p, self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut v = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % p;
            }
        }
        FpPoly::new(self.p, v.into_iter().map(|c| c as u64).collect())
    }

    pub fn scale(&self, c: u64) -> Self {
        FpPoly::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(&l) => self.scale(inv_mod(l, self.p)),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
            .collect();
        FpPoly::new(self.p, v)
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let inv = inv_mod(*d.coeffs.last().unwrap(), p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((FpPoly::zero(p), self.clone()));
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            if c != 0 {
                for (j, &dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - mul_mod(c, dj, p)) % p;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((FpPoly::new(p, q), FpPoly::new(p, r)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).expect("nonzero modulus").1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`, exponent given as a big integer.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = FpPoly::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }
}

/// Coefficientwise reduction of `f` mod `p`. `None` when a denominator is
/// divisible by `p`, the degree drops, or the reduction is not separable.
pub fn reduce_mod_p(f: &RatPoly, p: u64) -> Result<Option<FpPoly>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pb = num_bigint::BigInt::from(p);
    let mut v = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        let d = (c.denom() % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
        if d == 0 {
            return Ok(None);
        }
        let n = c.numer().mod_floor_u64(p);
        v.push(mul_mod(n, inv_mod(d, p), p));
    }
    let g = FpPoly::new(p, v);
    if g.degree() != f.degree() || !g.is_squarefree() {
        return Ok(None);
    }
    Ok(Some(g))
}

trait ModU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModU64 for num_bigint::BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let r = self.mod_floor(&num_bigint::BigInt::from(p));
        r.to_u64_digits().1.first().copied().unwrap_or(0)
    }
}

/// Monic irreducible factors of a separable polynomial.
pub fn factor_squarefree(f: &FpPoly) -> Result<Vec<FpPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_squarefree() && f.degree() != Some(0) {
        return Err(Error::NotSeparable);
    }
    let p = f.p;
    let mut rng = ChaCha8Rng::seed_from_u64(0xA17E_5EED ^ p ^ ((f.coeffs.len() as u64) << 48));
    let mut rest = f.monic();
    let mut out = Vec::new();
    let x = FpPoly::x(p);
    let pbig = BigUint::from(p);
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&pbig, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            split_equal_degree(&g, d, &mut rng, &mut out);
            rest = rest.divrem(&g)?.0;
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    Ok(out)
}

fn split_equal_degree(g: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = g.degree().unwrap();
    if n == d {
        out.push(g.clone());
        return;
    }
    let p = g.p;
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.rem(g);
            let mut s = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(g);
                s = s.add(&t);
            }
            s
        } else {
            a.pow_mod(&exp, g).sub(&FpPoly::one(p))
        };
        let c = g.gcd(&b);
        let k = c.degree().unwrap_or(0);
        if k > 0 && k < n {
            let other = g.divrem(&c).expect("nonzero").0.monic();
            split_equal_degree(&c, d, rng, out);
            split_equal_degree(&other, d, rng, out);
            return;
        }
    }
}

pub fn factor_pattern(f: &FpPoly) -> Result<FactorPattern> {
    let fs = factor_squarefree(f)?;
    Ok(FactorPattern::new(fs.iter().map(|g| g.degree().unwrap()).collect()))
}

pub fn is_irreducible_mod_p(f: &FpPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    match factor_pattern(f) {
        Ok(pat) => pat.degrees == [n],
        Err(_) => false,
    }
}
