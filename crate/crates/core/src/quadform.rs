//! When does `q(x, y) = 3x² − 2xy + 3y²` represent −1 over ℚ(√m)?
//!
//! Two independent answers: the closed criterion (`m < 0`, `m ≢ 1 mod 8`)
//! and a local–global computation on `q₁ = ⟨1, 2, 1, 2m⟩`. A constructive
//! chain then produces an explicit `(u, c)` with `q(u, c) = −1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratcore::rat::{factor_small, is_squarefree};
use crate::ratcore::{int, rat, rat_sqrt, QuadElem, Rat, Ring};

/// `3x² − 2xy + 3y²`, in any ring.
pub fn q_form<R>(x: &R, y: &R) -> R
where
    for<'a> &'a R: std::ops::Mul<&'a R, Output = R> + std::ops::Add<&'a R, Output = R> + std::ops::Sub<&'a R, Output = R>,
    R: crate::ratcore::Ring,
{
    let xx = x * x;
    let yy = y * y;
    let xy = x * y;
    let three_xx = &(&xx + &xx) + &xx;
    let three_yy = &(&yy + &yy) + &yy;
    &(&three_xx - &(&xy + &xy)) + &three_yy
}

fn check_squarefree(m: i64) -> Result<()> {
    if m == 0 || m == 1 || !is_squarefree(m) {
        return Err(Error::BadFieldParameter(m));
    }
    Ok(())
}

/// `m < 0` and `m mod 8 ≠ 1`.
pub fn decide_strong_field(m: i64) -> Result<bool> {
    check_squarefree(m)?;
    Ok(m < 0 && m.rem_euclid(8) != 1)
}

/// A diagonal form `⟨a₁, …, a_r⟩` with nonzero entries.
#[derive(Clone, PartialEq, Debug)]
pub struct DiagForm {
    coeffs: Vec<Rat>,
}

impl DiagForm {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.iter().any(Zero::is_zero) {
            return Err(Error::Precondition("diagonal form has a zero coefficient".into()));
        }
        Ok(DiagForm { coeffs })
    }

    pub fn from_ints(c: &[i64]) -> Result<Self> {
        DiagForm::new(c.iter().map(|&x| int(x)).collect())
    }

    /// `⟨1, 2, 1, 2m⟩`.
    pub fn q1(m: i64) -> Self {
        DiagForm { coeffs: vec![int(1), int(2), int(1), int(2 * m)] }
    }

    /// `⟨1, 2, 1⟩`.
    pub fn q0() -> Self {
        DiagForm { coeffs: vec![int(1), int(2), int(1)] }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, v: &[Rat]) -> Rat {
        self.coeffs.iter().zip(v).map(|(a, x)| a * x * x).sum()
    }

    pub fn eval_quad(&self, v: &[QuadElem]) -> QuadElem {
        let m = v[0].m();
        self.coeffs
            .iter()
            .zip(v)
            .fold(QuadElem::rational(m, int(0)), |acc, (a, x)| &acc + &(&QuadElem::rational(m, a.clone()) * &(x * x)))
    }

    /// Integral coefficients in the same square class.
    fn integral(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|a| a.numer() * a.denom()).collect()
    }
}

/// A completion of ℚ.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Place {
    Real,
    Prime(u64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "R"),
            Place::Prime(p) => write!(f, "Q_{p}"),
        }
    }
}

fn split_p(a: &BigInt, p: u64) -> (u32, BigInt) {
    let pb = BigInt::from(p);
    let mut e = 0;
    let mut u = a.clone();
    while u.is_multiple_of(&pb) {
        u /= &pb;
        e += 1;
    }
    (e, u)
}

fn modp(a: &BigInt, p: u64) -> u64 {
    a.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// A zero mod `p` with some unit coordinate, by exhaustive search.
fn unit_form_has_zero(units: &[u64], p: u64) -> bool {
    let r = units.len();
    if r == 0 {
        return false;
    }
    // normalize the first nonzero coordinate to 1
    for lead in 0..r {
        let rest = r - lead - 1;
        let total = (p as u128).pow(rest as u32);
        let mut idx = 0u128;
        while idx < total {
            let mut s = units[lead] as u128 % p as u128;
            let mut t = idx;
            for &a in &units[lead + 1..] {
                let x = (t % p as u128) as u128;
                t /= p as u128;
                s = (s + a as u128 * (x * x % p as u128)) % p as u128;
            }
            if s == 0 {
                return true;
            }
            idx += 1;
        }
    }
    false
}

/// Whether the form has a nontrivial zero over the given completion.
///
/// Odd `p`: split into unit and `p`-unit parts and search each for a zero
/// mod `p` (which lifts by Hensel). `p = 2`: exponents are reduced to 0 or 1
/// and primitive vectors mod 32 are searched; any primitive 2-adic zero
/// reduces to one with `q ≡ 0 mod 32`, and conversely such a vector lifts.
pub fn isotropic_local(form: &DiagForm, place: Place) -> Result<bool> {
    let ints = form.integral();
    match place {
        Place::Real => Ok(ints.iter().any(|a| a.is_positive()) && ints.iter().any(|a| a.is_negative())),
        Place::Prime(2) => Ok(two_adic_search(&ints, 5)),
        Place::Prime(p) => {
            if !crate::ffpoly::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let (mut even, mut odd) = (Vec::new(), Vec::new());
            for a in &ints {
                let (e, u) = split_p(a, p);
                if e % 2 == 0 { even.push(modp(&u, p)) } else { odd.push(modp(&u, p)) }
            }
            Ok(unit_form_has_zero(&even, p) || unit_form_has_zero(&odd, p))
        }
    }
}

/// Primitive zero mod `2^k` with an odd coordinate, exponents reduced mod 2.
pub fn two_adic_search(ints: &[BigInt], k: u32) -> bool {
    let modulus = 1u64 << k;
    let coeffs: Vec<u64> = ints
        .iter()
        .map(|a| {
            let (e, u) = split_p(a, 2);
            (modp(&u, modulus) << (e % 2)) % modulus
        })
        .collect();
    let r = coeffs.len();
    let total = modulus.pow(r as u32);
    let mut v = vec![0u64; r];
    for idx in 0..total {
        let mut t = idx;
        for x in v.iter_mut() {
            *x = t % modulus;
            t /= modulus;
        }
        if v.iter().all(|x| x % 2 == 0) {
            continue;
        }
        let s = coeffs.iter().zip(&v).fold(0u64, |acc, (a, x)| (acc + a * (x * x % modulus)) % modulus);
        if s == 0 {
            return true;
        }
    }
    false
}

/// The 2-adic shortcut: `q₁(m)` is anisotropic over ℚ₂ iff `m ≡ 1 mod 8`.
pub fn q1_anisotropic_at_two(m: i64) -> bool {
    m.rem_euclid(8) == 1
}

/// One line of the local table.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct LocalCheck {
    pub place: Place,
    pub isotropic: bool,
}

/// Hasse–Minkowski on `q₁(m)`: ℝ, ℚ₂ and the odd primes dividing `m`.
pub fn local_table(m: i64) -> Result<Vec<LocalCheck>> {
    check_squarefree(m)?;
    let q1 = DiagForm::q1(m);
    let mut places = vec![Place::Real, Place::Prime(2)];
    places.extend(factor_small(m.unsigned_abs()).into_iter().map(|(p, _)| p).filter(|&p| p != 2).map(Place::Prime));
    places
        .into_iter()
        .map(|pl| Ok(LocalCheck { place: pl, isotropic: isotropic_local(&q1, pl)? }))
        .collect()
}

pub fn decide_via_local_global(m: i64) -> Result<bool> {
    Ok(local_table(m)?.iter().all(|c| c.isotropic))
}

/// An isotropic integer vector of `q₁(m)`, by increasing sup-norm of the
/// last three coordinates; the first is recovered by an exact square root.
pub fn isotropic_vector_q1(m: i64, max_bound: i64) -> Option<[i64; 4]> {
    let mut lo = 0;
    let mut bound = 16;
    while lo < max_bound {
        let hi = bound.min(max_bound);
        for s in (lo + 1)..=hi {
            for x4 in 1..=s {
                for x2 in -s..=s {
                    for x3 in -s..=s {
                        if x2.abs().max(x3.abs()).max(x4) != s {
                            continue;
                        }
                        let rest = 2 * x2 * x2 + x3 * x3 + 2 * m * x4 * x4;
                        if rest > 0 {
                            continue;
                        }
                        let x1 = (-rest).sqrt();
                        if x1 * x1 == -rest {
                            return Some([x1, x2, x3, x4]);
                        }
                    }
                }
            }
        }
        lo = hi;
        bound *= 2;
    }
    None
}

/// The intermediate objects of the constructive chain, each verified.
#[derive(Clone, PartialEq, Debug)]
pub struct Chain {
    pub q1_zero: [i64; 4],
    /// `q₀(v) = −2m`.
    pub rep: [Rat; 3],
    /// An isotropic vector of `q₀` over ℚ(√m).
    pub q0_zero: [QuadElem; 3],
    /// `s² + 2t² = −1`.
    pub st: (QuadElem, QuadElem),
}

fn dot(form: &DiagForm, a: &[Rat], b: &[Rat]) -> Rat {
    form.coeffs.iter().zip(a.iter().zip(b)).map(|(c, (x, y))| c * x * y).sum()
}

/// Runs the chain `q₁` zero → `q₀` represents `−2m` → `q₀` isotropic over
/// ℚ(√m) → `s² + 2t² = −1`.
pub fn chain(m: i64, max_bound: i64) -> Result<Option<Chain>> {
    let Some(z) = isotropic_vector_q1(m, max_bound) else { return Ok(None) };
    let q1 = DiagForm::q1(m);
    let zr: Vec<Rat> = z.iter().map(|&x| int(x)).collect();
    if !q1.eval(&zr).is_zero() {
        return Err(Error::Internal("q₁ zero does not vanish".into()));
    }
    let q0 = DiagForm::q0();
    let x4 = int(z[3]);
    let rep = [&zr[0] / &x4, &zr[1] / &x4, &zr[2] / &x4];
    if q0.eval(&rep) != int(-2 * m) {
        return Err(Error::Internal("q₀ does not represent −2m at the derived vector".into()));
    }
    // orthogonal complement of rep, then Gram–Schmidt inside it
    let basis = [[int(1), int(0), int(0)], [int(0), int(1), int(0)], [int(0), int(0), int(1)]];
    let rr = q0.eval(&rep);
    let mut comp: Vec<Vec<Rat>> = Vec::new();
    for e in &basis {
        let mut v: Vec<Rat> = e.to_vec();
        let k = dot(&q0, &v, &rep) / &rr;
        for (vi, ri) in v.iter_mut().zip(&rep) {
            *vi -= &k * ri;
        }
        for w in &comp {
            let k = dot(&q0, &v, w) / q0.eval(w);
            for (vi, wi) in v.iter_mut().zip(w) {
                *vi -= &k * wi;
            }
        }
        if !q0.eval(&v).is_zero() {
            comp.push(v);
        }
        if comp.len() == 2 {
            break;
        }
    }
    if comp.len() != 2 {
        return Err(Error::Internal("orthogonal complement is not two-dimensional".into()));
    }
    let (e, f) = (&comp[0], &comp[1]);
    let (a, b) = (q0.eval(e), q0.eval(f));
    let ratio = -(&b / &a) / int(m);
    let t = rat_sqrt(&ratio).ok_or_else(|| Error::Internal("complement is not ⟨a, −am⟩".into()))?;
    let sq = QuadElem::sqrt_m(m);
    let tq = &QuadElem::rational(m, t) * &sq;
    let w: Vec<QuadElem> = e
        .iter()
        .zip(f)
        .map(|(ei, fi)| &(&tq * &QuadElem::rational(m, ei.clone())) + &QuadElem::rational(m, fi.clone()))
        .collect();
    if !q0.eval_quad(&w).vanishes() || w.iter().all(QuadElem::vanishes) {
        return Err(Error::Internal("q₀ isotropic vector check failed".into()));
    }
    let (num, den) = if !w[2].vanishes() { (0, 2) } else { (2, 0) };
    let s = &w[num] / &w[den];
    let t = &w[1] / &w[den];
    let st_ok = &(&(&s * &s) + &(&t * &t)) + &(&t * &t) == QuadElem::rational(m, int(-1));
    if !st_ok {
        return Err(Error::Internal("s² + 2t² ≠ −1".into()));
    }
    Ok(Some(Chain { q1_zero: z, rep, q0_zero: [w[0].clone(), w[1].clone(), w[2].clone()], st: (s, t) }))
}

/// Another point on `s² + 2t² = −1`, by the chord of slope `λ`.
fn chord(s0: &QuadElem, t0: &QuadElem, lam: i64) -> (QuadElem, QuadElem) {
    let m = s0.m();
    let l = QuadElem::rational(m, int(lam));
    let two = QuadElem::rational(m, int(2));
    let four = QuadElem::rational(m, int(4));
    let den = QuadElem::rational(m, int(1 + 2 * lam * lam));
    let k = -&(&(&(&two * s0) + &(&(&four * t0) * &l)) / &den);
    (s0 + &k, t0 + &(&l * &k))
}

fn st_to_uc(s: &QuadElem, t: &QuadElem) -> (QuadElem, QuadElem) {
    let half = QuadElem::rational(s.m(), rat(1, 2));
    (&half * &(s + t), &half * &(s - t))
}

/// Checks `q(u, c) = −1` and `u ≠ c`.
pub fn is_valid_uc(u: &QuadElem, c: &QuadElem) -> bool {
    u != c && q_form(u, c) == QuadElem::rational(u.m(), int(-1))
}

/// Bounded direct search with `u = α√m`, `c = β√m`, so that
/// `3α² − 2αβ + 3β² = −1/m`; numerators and denominators up to `h`,
/// enumerated by increasing height, then denominator, then numerator.
pub fn direct_search(m: i64, h: i64) -> Option<(QuadElem, QuadElem)> {
    if m >= 0 {
        return None;
    }
    let target = rat(-1, m);
    let mut vals: Vec<Rat> = Vec::new();
    for d in 1..=h {
        for n in -h..=h {
            if n.gcd(&d) == 1 {
                vals.push(rat(n, d));
            }
        }
    }
    vals.sort_by(|a, b| {
        let ha = a.numer().abs().max(a.denom().clone());
        let hb = b.numer().abs().max(b.denom().clone());
        ha.cmp(&hb).then(a.denom().cmp(b.denom())).then(a.numer().cmp(b.numer()))
    });
    let three = int(3);
    let two = int(2);
    for al in &vals {
        for be in &vals {
            if al == be {
                continue;
            }
            if &three * al * al - &two * al * be + &three * be * be == target {
                let sq = QuadElem::sqrt_m(m);
                return Some((&QuadElem::rational(m, al.clone()) * &sq, &QuadElem::rational(m, be.clone()) * &sq));
            }
        }
    }
    None
}

/// A verified `(u, c)` in ℚ(√m) with `q(u, c) = −1`, `u ≠ c`.
pub fn represent_minus_one(m: i64) -> Result<(QuadElem, QuadElem)> {
    if !decide_strong_field(m)? {
        return Err(Error::Precondition(format!("q does not represent −1 over Q(√{m})")));
    }
    if let Some(ch) = chain(m, 1024)? {
        let (s, t) = &ch.st;
        let mut cand = st_to_uc(s, t);
        let mut lam = 1;
        while !is_valid_uc(&cand.0, &cand.1) && lam <= 8 {
            let (s2, t2) = chord(s, t, lam);
            cand = st_to_uc(&s2, &t2);
            lam += 1;
        }
        if is_valid_uc(&cand.0, &cand.1) {
            return Ok(cand);
        }
    }
    direct_search(m, 40)
        .filter(|(u, c)| is_valid_uc(u, c))
        .ok_or_else(|| Error::BudgetExhausted(format!("no (u, c) found for m = {m}")))
}
