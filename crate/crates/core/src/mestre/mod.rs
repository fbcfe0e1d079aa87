//! Odd-degree lines.
//!
//! For monic separable `P` of odd degree, a nonzero pair `(Q, R)` with
//! `PQ′ − P′Q = R²` is found numerically (kernel of an antisymmetric matrix
//! built from the roots), rationalized, and then re-derived exactly: `Q` is
//! solved from a rational linear system and the identity is checked in ℚ[X].
//! When `Δ(P)` is a square, `Δ(P − TQ)` is then a square in ℚ[T], and
//! sieving primes turns `P − scale·N·Q` into a family whose every member has
//! group Aₙ.

pub mod kernel;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ffpoly::is_prime;
use crate::galoisid::{
    bertrand_prime, certify_contains_an, certify_equals_an, check_witness, AnWitness, Verdict,
};
use crate::ratcore::linalg::{solve, Solution};
use crate::ratcore::{discriminant_t, int, rat_sqrt, resultant, Rat, RatPoly, TPoly};

pub use kernel::{numeric_kernel, rationalize_r};

/// `(P, Q, R)` with `PQ′ − P′Q = R²` and the square root of `Δ(P − TQ)`.
#[derive(Clone, PartialEq, Debug)]
pub struct MestrePair {
    pub p: RatPoly,
    pub q: RatPoly,
    pub r: RatPoly,
    pub sqrt_disc: RatPoly,
    /// Working precision at which the numeric stage succeeded.
    pub precision: u32,
}

/// A certified family `P − (t₀ + scale·N)·Q`, `N ∈ ℤ`.
#[derive(Clone, PartialEq, Debug)]
pub struct LineRecipe {
    pub n: usize,
    pub p: RatPoly,
    pub q: RatPoly,
    pub r: Option<RatPoly>,
    pub sqrt_disc: RatPoly,
    pub witness: AnWitness,
    pub base_t: Rat,
    pub scale: BigInt,
}

impl LineRecipe {
    pub fn t_of(&self, n: i64) -> Rat {
        &self.base_t + Rat::from_integer(&self.scale * n)
    }

    /// The family member for the integer `N`.
    pub fn member(&self, n: i64) -> RatPoly {
        &self.p - &self.q.scale(&self.t_of(n))
    }
}

/// `PQ′ − P′Q`.
pub fn wronskian(p: &RatPoly, q: &RatPoly) -> RatPoly {
    &(p * &q.derivative()) - &(&p.derivative() * q)
}

pub fn identity_holds(p: &RatPoly, q: &RatPoly, r: &RatPoly) -> bool {
    wronskian(p, q) == r * r
}

/// Solves `PQ′ − P′Q = R²` for `Q` of degree `< n`.
pub fn solve_q(p: &RatPoly, r: &RatPoly) -> Option<RatPoly> {
    let n = p.degree()?;
    let target = r * r;
    let rows = 2 * n - 1;
    let cols: Vec<RatPoly> = (0..n)
        .map(|i| wronskian(p, &RatPoly::monomial(Rat::one(), i)))
        .collect();
    let a: Vec<Vec<Rat>> = (0..rows).map(|k| cols.iter().map(|c| c.coeff(k)).collect()).collect();
    if target.degree().is_some_and(|d| d >= rows) {
        return None;
    }
    let b: Vec<Rat> = (0..rows).map(|k| target.coeff(k)).collect();
    match solve(&(), &a, &b, n) {
        Solution::Unique(x) => Some(RatPoly::new(x)),
        _ => None,
    }
}

/// Exact square root of `Δ(P − TQ)` in ℚ[T], positive leading coefficient.
pub fn certify_disc_square(p: &RatPoly, q: &RatPoly) -> Result<RatPoly> {
    let d = discriminant_t(&TPoly::line(p, q))?;
    let s = d
        .sqrt()
        .ok_or_else(|| Error::Internal("Δ(P − TQ) is not a square in ℚ[T]".into()))?;
    Ok(if s.lc().is_some_and(|c| c.is_negative()) { -s } else { s })
}

/// Whether `(−1)^{(n+1)/2}·Res(P, Q)` is a rational square.
pub fn signed_resultant_is_square(p: &RatPoly, q: &RatPoly) -> Result<bool> {
    let n = p.deg0();
    let r = resultant(p, q)?;
    let r = if ((n + 1) / 2) % 2 == 1 { -r } else { r };
    Ok(rat_sqrt(&r).is_some())
}

/// Smallest positive `s` with `s²·x` integral for every coefficient.
fn square_clearing(q: &RatPoly) -> BigInt {
    let den = crate::ratcore::rat::common_denominator(q.coeffs());
    let mut s = BigInt::one();
    let mut d = den.clone();
    let mut f = BigInt::from(2);
    while &f * &f <= d {
        let mut e = 0u32;
        while d.is_multiple_of(&f) {
            d /= &f;
            e += 1;
        }
        if e > 0 {
            s *= f.pow(e.div_ceil(2));
        }
        f += 1;
    }
    if d > BigInt::one() {
        s *= d;
    }
    s
}

/// Runs the numeric-then-exact pipeline with precision doubling.
pub fn mestre_pair(p: &RatPoly, start_prec: u32, doublings: u32) -> Result<MestrePair> {
    let n = p.deg0();
    if !p.is_monic() || n < 3 || n % 2 == 0 {
        return Err(Error::Precondition("P must be monic of odd degree ≥ 3".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::RepeatedRoots);
    }
    let mut prec = start_prec;
    for _ in 0..=doublings {
        if let Some(pair) = attempt(p, prec)? {
            return Ok(pair);
        }
        prec *= 2;
    }
    Err(Error::Numeric(format!("no exact (Q, R) recovered up to {} bits", prec / 2)))
}

fn attempt(p: &RatPoly, prec: u32) -> Result<Option<MestrePair>> {
    let (cloud, lam) = match numeric_kernel(p, prec) {
        Ok(x) => x,
        Err(Error::Numeric(msg)) if msg.contains("overlap") => return Ok(None),
        Err(e) => return Err(e),
    };
    let Some(r) = rationalize_r(&cloud, &lam) else { return Ok(None) };
    let (_, r) = r.primitive_part();
    let Some(q) = solve_q(p, &r) else { return Ok(None) };
    if q.is_zero() {
        return Ok(None);
    }
    let s = Rat::from_integer(square_clearing(&q));
    let (q, r) = (q.scale(&(&s * &s)), r.scale(&s));
    if !identity_holds(p, &q, &r) {
        return Err(Error::Internal("identity PQ′ − P′Q = R² failed after rescaling".into()));
    }
    let sqrt_disc = certify_disc_square(p, &q)?;
    Ok(Some(MestrePair { p: p.clone(), q, r, sqrt_disc, precision: prec }))
}

/// Options for [`build_line_odd`].
#[derive(Clone, Debug)]
pub struct OddOptions {
    pub seed_poly: Option<RatPoly>,
    pub prime_bound: u64,
    pub rng_seed: u64,
    /// Caller-chosen `(p, q, r)`; verified before use.
    pub primes: Option<(u64, u64, Vec<u64>)>,
    pub search_budget: u64,
}

impl Default for OddOptions {
    fn default() -> Self {
        OddOptions { seed_poly: None, prime_bound: 1000, rng_seed: 1, primes: None, search_budget: 200_000 }
    }
}

/// Random monic integer polynomials of height ≤ 20 until one has square
/// discriminant and a containment certificate.
pub fn search_seed(n: usize, opts: &OddOptions) -> Result<RatPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
    for _ in 0..opts.search_budget {
        let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-20..=20)).collect();
        c.push(1);
        let f = RatPoly::from_ints(&c);
        let Ok(d) = crate::ratcore::discriminant(&f) else { continue };
        if d.is_zero() || rat_sqrt(&d).is_none() {
            continue;
        }
        if certify_contains_an(&f, opts.prime_bound)?.is_some() {
            return Ok(f);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no degree-{n} seed with square discriminant in {} draws",
        opts.search_budget
    )))
}

pub(crate) fn witness_from_primes(f: &RatPoly, primes: &(u64, u64, Vec<u64>)) -> Result<AnWitness> {
    let (p, q, r) = primes;
    if let Some(&bad) = [*p, *q].iter().chain(r).find(|&&x| !is_prime(x)) {
        return Err(Error::NotPrime(bad));
    }
    let w = AnWitness { ell: bertrand_prime(f.deg0()), p: *p, q: *q, r: r.clone() };
    if !check_witness(f, &w)? {
        return Err(Error::Precondition(format!(
            "primes p={p}, q={q}, r={r:?} do not certify containment of A_n"
        )));
    }
    Ok(w)
}

pub fn scale_of(w: &AnWitness) -> BigInt {
    w.primes().iter().fold(BigInt::one(), |acc, &p| acc * p)
}

/// Builds a certified odd-degree line `P − scale·N·Q`.
pub fn build_line_odd(n: usize, opts: &OddOptions) -> Result<LineRecipe> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Precondition(format!("degree must be odd and ≥ 3, got {n}")));
    }
    let p = match &opts.seed_poly {
        Some(f) => {
            if f.deg0() != n || !f.is_monic() || !f.is_integral() {
                return Err(Error::Precondition(format!("seed must be monic integral of degree {n}")));
            }
            if certify_equals_an(f, opts.prime_bound)?.verdict != Verdict::EqualsAn {
                return Err(Error::Precondition("seed is not certified to have group A_n".into()));
            }
            f.clone()
        }
        None => search_seed(n, opts)?,
    };
    let witness = match &opts.primes {
        Some(pr) => witness_from_primes(&p, pr)?,
        None => certify_contains_an(&p, opts.prime_bound)?
            .ok_or_else(|| Error::BudgetExhausted(format!("no witness primes ≤ {}", opts.prime_bound)))?,
    };
    let pair = mestre_pair(&p, 256, 4)?;
    if !signed_resultant_is_square(&pair.p, &pair.q)? {
        return Err(Error::Internal("(−1)^((n+1)/2)·Res(P, Q) is not a square".into()));
    }
    Ok(LineRecipe {
        n,
        scale: scale_of(&witness),
        p,
        q: pair.q,
        r: Some(pair.r),
        sqrt_disc: pair.sqrt_disc,
        witness,
        base_t: int(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::numeric::isolate_roots;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn stated() -> (RatPoly, RatPoly, RatPoly) {
        (
            p(&[-2, -18, -28, -5, 4, 1]),
            p(&[-7, -191, -474, -287, -49]),
            p(&[16, 47, 81, 41, 7]),
        )
    }

    #[test]
    fn stated_identity_and_solve() {
        let (pp, q, r) = stated();
        assert!(identity_holds(&pp, &q, &r));
        assert_eq!(solve_q(&pp, &r), Some(q.clone()));
        assert_eq!(solve_q(&pp, &RatPoly::zero(&())), Some(RatPoly::zero(&())));
        assert!(signed_resultant_is_square(&pp, &q).unwrap());
        assert_eq!(resultant(&pp, &q).unwrap(), Rat::from_integer((-21970354176i64).into()));
    }

    #[test]
    fn stated_disc_square() {
        let (pp, q, _) = stated();
        let s = certify_disc_square(&pp, &q).unwrap();
        // the root is 4·(22068963T⁴ − 6897879T³ + 946647T² − 62469T + 1762)
        let stated = p(&[1762, -62469, 946647, -6897879, 22068963]);
        assert_eq!(s, stated.scale(&int(4)));
    }

    #[test]
    fn pipeline_recovers_stated_r() {
        let (pp, q, r) = stated();
        let pair = mestre_pair(&pp, 256, 4).unwrap();
        assert_eq!(pair.r, r);
        assert_eq!(pair.q, q);
    }

    #[test]
    fn cubic_pipeline() {
        let f = p(&[1, -3, 0, 1]);
        let pair = mestre_pair(&f, 256, 4).unwrap();
        assert!(identity_holds(&pair.p, &pair.q, &pair.r));
        assert!(!pair.q.is_zero());
        assert_eq!(&pair.sqrt_disc * &pair.sqrt_disc, discriminant_t(&TPoly::line(&f, &pair.q)).unwrap());
    }

    #[test]
    fn low_precision_needs_retry() {
        let (pp, _, _) = stated();
        let cloud = isolate_roots(&pp.int_coeffs(), 16);
        let ok = match cloud {
            Err(_) => false,
            Ok(c) => kernel::kernel_vector(&c).ok().and_then(|l| rationalize_r(&c, &l)).is_some(),
        };
        assert!(!ok);
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(mestre_pair(&p(&[-1, 1, 1, -1]).monic(), 256, 1), Err(Error::RepeatedRoots));
        let opts = OddOptions::default();
        assert!(matches!(build_line_odd(4, &opts), Err(Error::Precondition(_))));
    }

    #[test]
    fn line_with_given_primes() {
        let (pp, q, _) = stated();
        let opts = OddOptions { seed_poly: Some(pp), primes: Some((7, 17, vec![7])), ..Default::default() };
        let line = build_line_odd(5, &opts).unwrap();
        assert_eq!(line.scale, BigInt::from(833));
        assert_eq!(line.q, q);
        let m1 = line.member(1);
        assert_eq!(m1.coeff(4), int(40817 + 4));
        assert_eq!(m1.coeff(3), int(239071 - 5));
        let bad = OddOptions { primes: Some((3, 17, vec![7])), ..opts };
        assert!(matches!(build_line_odd(5, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn square_clearing_minimal() {
        let q = RatPoly::new(vec![crate::ratcore::rat(1, 8), crate::ratcore::rat(1, 3)]);
        assert_eq!(square_clearing(&q), BigInt::from(12));
    }
}
