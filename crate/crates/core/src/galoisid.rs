//! Galois-group evidence.
//!
//! Containment of Aₙ is certified by Dedekind patterns: an ℓ-cycle pattern
//! `{ℓ,1,…}` for a prime `n/2 < ℓ ≤ n`, a 3-cycle pattern `{3,1,…}`, and
//! transitivity. For odd `n` transitivity comes from one prime where `f`
//! stays irreducible. For even `n` an n-cycle is odd and never occurs in
//! Aₙ, so transitivity is certified by a degree sieve instead: the degree
//! of a proper rational factor must be a sub-sum of every pattern, and the
//! witness primes leave no candidate degree.
//!
//! Quartics are classified through the cubic resolvent over any field with
//! a root finder.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ffpoly::{factor_pattern, is_prime, reduce_mod_p, FactorPattern};
use crate::ratcore::{
    discriminant, rat_sqrt, Field, Poly, Rat, RatPoly, Ring, RootFind, TPoly,
};

/// Classification of a quartic's Galois group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum QuarticGroup {
    S4,
    A4,
    V4,
    C4OrD4,
    Reducible,
}

impl fmt::Display for QuarticGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuarticGroup::S4 => "S4",
            QuarticGroup::A4 => "A4",
            QuarticGroup::V4 => "V4",
            QuarticGroup::C4OrD4 => "C4_or_D4",
            QuarticGroup::Reducible => "Reducible",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    ContainsAn,
    EqualsAn,
    Quartic(QuarticGroup),
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ContainsAn => f.write_str("ContainsAn"),
            Verdict::EqualsAn => f.write_str("EqualsAn"),
            Verdict::Quartic(g) => write!(f, "Quartic({g})"),
            Verdict::Inconclusive => f.write_str("Inconclusive"),
        }
    }
}

/// Primes certifying `Gal(f) ⊇ Aₙ`: `p` gives the ℓ-cycle, `q` the
/// 3-cycle, and `r` transitivity (a single prime with `f` irreducible when
/// `n` is odd; a degree-sieve witness set when `n` is even).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnWitness {
    pub ell: usize,
    pub p: u64,
    pub q: u64,
    pub r: Vec<u64>,
}

impl AnWitness {
    /// All witness primes with multiplicity, in the order `p, q, r…`.
    pub fn primes(&self) -> Vec<u64> {
        let mut v = vec![self.p, self.q];
        v.extend(&self.r);
        v
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct GroupEvidence {
    pub poly: RatPoly,
    pub disc: Rat,
    pub disc_square: bool,
    pub patterns: BTreeMap<u64, FactorPattern>,
    pub verdict: Verdict,
    pub witness: Option<AnWitness>,
}

fn require_monic_integer(f: &RatPoly) -> Result<()> {
    if !f.is_monic() || !f.is_integral() {
        return Err(Error::NotMonicInteger);
    }
    Ok(())
}

/// Factorization pattern of `f` mod `p`, or `None` at bad reduction.
pub fn cycle_type_sample(f: &RatPoly, p: u64) -> Result<Option<FactorPattern>> {
    require_monic_integer(f)?;
    match reduce_mod_p(f, p)? {
        Some(g) => Ok(Some(factor_pattern(&g)?)),
        None => Ok(None),
    }
}

/// Largest prime `ℓ ≤ n`; for `n ≥ 3` it is odd and exceeds `n/2`.
pub fn bertrand_prime(n: usize) -> usize {
    (3..=n).rev().find(|&l| is_prime(l as u64)).expect("n ≥ 3")
}

/// Degrees `1..n` that are sums of sub-multisets of the pattern.
fn subset_sums(pat: &FactorPattern, n: usize) -> BTreeSet<usize> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in &pat.degrees {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    (1..n).filter(|&s| reach[s]).collect()
}

fn sieve_empty(pats: &[&FactorPattern], n: usize) -> bool {
    let mut d: BTreeSet<usize> = (1..n).collect();
    for pat in pats {
        d = d.intersection(&subset_sums(pat, n)).copied().collect();
    }
    d.is_empty()
}

fn check_contains_pre(f: &RatPoly) -> Result<usize> {
    require_monic_integer(f)?;
    let n = f.deg0();
    if n < 3 {
        return Err(Error::BadDegree { found: n, expected: "at least 3" });
    }
    if !f.is_squarefree() {
        return Err(Error::Precondition("polynomial is not squarefree".into()));
    }
    Ok(n)
}

/// Searches primes up to `prime_bound` for an Aₙ-containment certificate,
/// taking the smallest qualifying primes.
pub fn certify_contains_an(f: &RatPoly, prime_bound: u64) -> Result<Option<AnWitness>> {
    let n = check_contains_pre(f)?;
    let ell = bertrand_prime(n);
    let (mut p, mut q, mut r) = (None, None, None);
    let mut shrinking: Vec<(u64, FactorPattern)> = Vec::new();
    let mut domain: BTreeSet<usize> = (1..n).collect();
    for prime in 2..=prime_bound {
        if !is_prime(prime) {
            continue;
        }
        let Some(pat) = cycle_type_sample(f, prime)? else { continue };
        if p.is_none() && pat.is_cycle_with_fixed(ell) {
            p = Some(prime);
        }
        if q.is_none() && pat.is_cycle_with_fixed(3) {
            q = Some(prime);
        }
        if n % 2 == 1 {
            if r.is_none() && pat.degrees == [n] {
                r = Some(vec![prime]);
            }
        } else if !domain.is_empty() {
            let next: BTreeSet<usize> = domain.intersection(&subset_sums(&pat, n)).copied().collect();
            if next != domain {
                domain = next;
                shrinking.push((prime, pat));
                if domain.is_empty() {
                    r = Some(prune_witness(&shrinking, n));
                }
            }
        }
        if let (Some(p), Some(q), Some(r)) = (p, q, &r) {
            return Ok(Some(AnWitness { ell, p, q, r: r.clone() }));
        }
    }
    Ok(None)
}

/// Drops redundant sieve primes, trying the largest first.
fn prune_witness(shrinking: &[(u64, FactorPattern)], n: usize) -> Vec<u64> {
    let mut keep: Vec<bool> = vec![true; shrinking.len()];
    for i in (0..shrinking.len()).rev() {
        keep[i] = false;
        let pats: Vec<&FactorPattern> =
            shrinking.iter().zip(&keep).filter(|(_, &k)| k).map(|((_, pat), _)| pat).collect();
        if !sieve_empty(&pats, n) {
            keep[i] = true;
        }
    }
    shrinking.iter().zip(&keep).filter(|(_, &k)| k).map(|((p, _), _)| *p).collect()
}

/// Re-derives a witness: each prime has good reduction and the claimed
/// pattern shape.
pub fn check_witness(f: &RatPoly, w: &AnWitness) -> Result<bool> {
    let n = check_contains_pre(f)?;
    if w.ell != bertrand_prime(n) {
        return Ok(false);
    }
    let pat = |p: u64| cycle_type_sample(f, p);
    let ok_p = pat(w.p)?.is_some_and(|x| x.is_cycle_with_fixed(w.ell));
    let ok_q = pat(w.q)?.is_some_and(|x| x.is_cycle_with_fixed(3));
    let mut rs = Vec::new();
    for &r in &w.r {
        match pat(r)? {
            Some(x) => rs.push(x),
            None => return Ok(false),
        }
    }
    let ok_r = if n % 2 == 1 {
        rs.len() == 1 && rs[0].degrees == [n]
    } else {
        !rs.is_empty() && sieve_empty(&rs.iter().collect::<Vec<_>>(), n)
    };
    Ok(ok_p && ok_q && ok_r)
}

fn evidence(f: &RatPoly, witness: Option<AnWitness>) -> Result<GroupEvidence> {
    let disc = discriminant(f)?;
    let disc_square = rat_sqrt(&disc).is_some();
    let mut patterns = BTreeMap::new();
    if let Some(w) = &witness {
        for p in w.primes() {
            if let Some(pat) = cycle_type_sample(f, p)? {
                patterns.insert(p, pat);
            }
        }
    }
    let verdict = match (&witness, disc_square) {
        (Some(_), true) => Verdict::EqualsAn,
        _ => Verdict::Inconclusive,
    };
    Ok(GroupEvidence { poly: f.clone(), disc, disc_square, patterns, verdict, witness })
}

/// `EqualsAn` exactly when containment is certified and `Δ(f)` is a square.
pub fn certify_equals_an(f: &RatPoly, prime_bound: u64) -> Result<GroupEvidence> {
    let w = certify_contains_an(f, prime_bound)?;
    evidence(f, w)
}

/// General identification used by the command line: quartics are
/// classified completely, other degrees get the Aₙ certificate, with
/// `ContainsAn` reported when the discriminant is not a square.
pub fn identify(f: &RatPoly, prime_bound: u64) -> Result<GroupEvidence> {
    require_monic_integer(f)?;
    if f.deg0() == 4 {
        let g = quartic_group_over_q(f)?;
        let mut ev = if g == QuarticGroup::Reducible {
            evidence(f, None)?
        } else {
            certify_equals_an(f, prime_bound)?
        };
        ev.verdict = Verdict::Quartic(g);
        return Ok(ev);
    }
    let mut ev = certify_equals_an(f, prime_bound)?;
    if ev.verdict == Verdict::Inconclusive && ev.witness.is_some() {
        ev.verdict = Verdict::ContainsAn;
    }
    Ok(ev)
}

/// Patterns at every good prime up to `bound`.
pub fn patterns_up_to(f: &RatPoly, bound: u64) -> Result<BTreeMap<u64, FactorPattern>> {
    let mut out = BTreeMap::new();
    for p in 2..=bound {
        if is_prime(p) {
            if let Some(pat) = cycle_type_sample(f, p)? {
                out.insert(p, pat);
            }
        }
    }
    Ok(out)
}

/// Resolvent coefficients, little-endian, for `X⁴ − c₁X³ + c₂X² − c₃X + c₄`:
/// `X³ − c₂X² + (c₁c₃ − 4c₄)X − c₃² − c₁²c₄ + 4c₂c₄`.
pub fn resolvent_coeffs<R: Ring>(c1: &R, c2: &R, c3: &R, c4: &R) -> [R; 4] {
    let four_c4 = c4.mul_ref(&c4.int_like(4));
    let lin = c1.mul_ref(c3).sub_ref(&four_c4);
    let cst = c3
        .mul_ref(c3)
        .neg_ref()
        .sub_ref(&c1.mul_ref(c1).mul_ref(c4))
        .add_ref(&c2.mul_ref(&four_c4));
    [cst, lin, c2.neg_ref(), c2.int_like(1)]
}

/// Cubic resolvent of a quartic (made monic first).
pub fn cubic_resolvent<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    if f.degree() != Some(4) {
        return Err(Error::BadDegree { found: f.deg0(), expected: "4" });
    }
    let g = f.monic();
    let c1 = g.coeff(3).neg_ref();
    let c2 = g.coeff(2);
    let c3 = g.coeff(1).neg_ref();
    let c4 = g.coeff(0);
    Ok(Poly::from_coeffs(f.ctx(), resolvent_coeffs(&c1, &c2, &c3, &c4).to_vec()))
}

/// Cubic resolvent of a quartic in `X` over `F[T]` whose leading
/// coefficient is a nonzero constant.
pub fn cubic_resolvent_t<F: Field>(f: &TPoly<F>) -> Result<TPoly<F>> {
    if f.deg_x() != Some(4) {
        return Err(Error::BadDegree { found: f.deg_x().unwrap_or(0), expected: "4" });
    }
    let lc = f.lc_x().unwrap();
    if lc.degree() != Some(0) {
        return Err(Error::Precondition("leading coefficient must be constant in T".into()));
    }
    let inv = lc.coeff(0).inv().unwrap();
    let c = |i: usize| f.x_coeff(i).scale(&inv);
    let r = resolvent_coeffs(&-&c(3), &c(2), &-&c(1), &c(0));
    Ok(TPoly::from_x_coeffs(f.ctx(), r.to_vec()))
}

/// A monic quadratic factor `X² + aX + b` of the monic quartic, if any.
fn quadratic_factor<F: RootFind>(f: &Poly<F>) -> Result<Option<Poly<F>>> {
    let ctx = f.ctx();
    let e = |i: usize| f.coeff(i);
    let (e0, e1, e2, e3) = (e(0), e(1), e(2), e(3));
    let a = Poly::x(ctx);
    let k = |c: &F| Poly::constant(c.clone());
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    // L = −a³ + e₃a² − e₂a + e₁, D = 2a − e₃, M = −a² + e₃a − e₂
    let l = &(&(&(-&a3) + &(&a2 * &k(&e3))) - &(&a * &k(&e2))) + &k(&e1);
    let d = &a.scale(&F::from_int(ctx, 2)) - &k(&e3);
    let mm = &(&(-&a2) + &(&a * &k(&e3))) - &k(&e2);
    let sextic = &(&(&l * &l) - &(&(&l * &d) * &mm)) + &(&(&d * &d) * &k(&e0));
    let try_factor = |a0: &F, b0: &F| {
        let g = Poly::from_coeffs(ctx, vec![b0.clone(), a0.clone(), F::one_in(ctx)]);
        f.div_exact(&g).map(|_| g)
    };
    for a0 in F::field_roots(&sextic)? {
        let d0 = d.eval(&a0);
        if d0.vanishes() {
            continue;
        }
        let b0 = l.eval(&a0).neg_ref().div_ref(&d0).unwrap();
        if let Some(g) = try_factor(&a0, &b0) {
            return Ok(Some(g));
        }
    }
    // a = e₃/2 makes D vanish: need L = 0 and b² + Mb + e₀ = 0.
    let half = e3.div_ref(&F::from_int(ctx, 2)).unwrap();
    if l.eval(&half).vanishes() {
        let quad = Poly::from_coeffs(ctx, vec![e0.clone(), mm.eval(&half), F::one_in(ctx)]);
        for b0 in F::field_roots(&quad)? {
            if let Some(g) = try_factor(&half, &b0) {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// Galois group of a quartic over its coefficient field.
pub fn quartic_group<F: RootFind>(f: &Poly<F>) -> Result<QuarticGroup> {
    if f.degree() != Some(4) {
        return Err(Error::BadDegree { found: f.deg0(), expected: "4" });
    }
    let g = f.monic();
    let disc = discriminant(&g)?;
    if disc.vanishes() || !F::field_roots(&g)?.is_empty() || quadratic_factor(&g)?.is_some() {
        return Ok(QuarticGroup::Reducible);
    }
    let res = cubic_resolvent(&g)?;
    Ok(match F::field_roots(&res)?.len() {
        0 if disc.try_sqrt().is_some() => QuarticGroup::A4,
        0 => QuarticGroup::S4,
        1 => QuarticGroup::C4OrD4,
        _ => QuarticGroup::V4,
    })
}

pub fn quartic_group_over_q(f: &RatPoly) -> Result<QuarticGroup> {
    quartic_group(f)
}

pub fn quartic_group_over_quad(f: &crate::ratcore::QuadPoly) -> Result<QuarticGroup> {
    quartic_group(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::{int, QuadElem, QuadPoly};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn quintic() -> RatPoly {
        p(&[-2, -18, -28, -5, 4, 1])
    }

    #[test]
    fn samples() {
        let f = quintic();
        assert_eq!(cycle_type_sample(&f, 17).unwrap().unwrap().degrees, vec![3, 1, 1]);
        assert_eq!(cycle_type_sample(&f, 7).unwrap().unwrap().degrees, vec![5]);
        assert_eq!(cycle_type_sample(&p(&[-1, 0, 1]), 2).unwrap(), None);
        assert_eq!(cycle_type_sample(&f, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn quintic_witness() {
        // P is already irreducible mod 5, so the smallest primes differ from
        // the hand-picked (7, 17, 7); both are valid witnesses.
        let w = certify_contains_an(&quintic(), 100).unwrap().unwrap();
        assert_eq!(w, AnWitness { ell: 5, p: 5, q: 17, r: vec![5] });
        assert!(check_witness(&quintic(), &w).unwrap());
        let hand = AnWitness { ell: 5, p: 7, q: 17, r: vec![7] };
        assert!(check_witness(&quintic(), &hand).unwrap());
        let bad = AnWitness { ell: 5, p: 3, q: 17, r: vec![7] };
        assert!(!check_witness(&quintic(), &bad).unwrap());
        let ev = certify_equals_an(&quintic(), 100).unwrap();
        assert_eq!(ev.verdict, Verdict::EqualsAn);
        assert!(ev.disc_square);
    }

    #[test]
    fn s5_quintic() {
        let f = p(&[-1, -1, 0, 0, 0, 1]);
        assert!(certify_contains_an(&f, 200).unwrap().is_some());
        let ev = certify_equals_an(&f, 200).unwrap();
        assert_eq!(ev.disc, int(2869));
        assert!(crate::ratcore::rat::isqrt_exact(&2869.into()).is_none());
        assert!(!ev.disc_square);
        assert_eq!(ev.verdict, Verdict::Inconclusive);
        assert_eq!(identify(&f, 200).unwrap().verdict, Verdict::ContainsAn);
    }

    #[test]
    fn cubic_a3() {
        let f = p(&[1, -3, 0, 1]);
        let ev = certify_equals_an(&f, 50).unwrap();
        assert_eq!(ev.disc, int(81));
        assert_eq!(ev.verdict, Verdict::EqualsAn);
        assert_eq!(ev.witness.unwrap().r, vec![2]);
    }

    #[test]
    fn preconditions() {
        let mut c = vec![0; 5];
        c[4] = 1;
        assert!(matches!(certify_contains_an(&p(&c), 50), Err(Error::Precondition(_))));
        assert!(matches!(certify_contains_an(&p(&[1, 1]), 50), Err(Error::BadDegree { .. })));
        assert_eq!(certify_contains_an(&RatPoly::new(vec![int(1), crate::ratcore::rat(1, 2)]), 50), Err(Error::NotMonicInteger));
    }

    #[test]
    fn even_degree_sieve() {
        // A₆ example: X⁶ + 24X − 20 has Galois group A₆
        let f = p(&[-20, 24, 0, 0, 0, 0, 1]);
        let w = certify_contains_an(&f, 2000).unwrap().unwrap();
        assert_eq!(w.ell, 5);
        assert!(check_witness(&f, &w).unwrap());
        assert_eq!(certify_equals_an(&f, 2000).unwrap().verdict, Verdict::EqualsAn);
    }

    #[test]
    fn resolvents() {
        assert_eq!(cubic_resolvent(&p(&[1, 0, 0, 0, 1])).unwrap(), p(&[0, -4, 0, 1]));
        let (k, m) = (-3i64, 1i64);
        let f = p(&[k * k, -8 * m, -2 * k, 0, 1]);
        let r = cubic_resolvent(&f).unwrap();
        // c₁ = 0, c₂ = −2k, c₃ = 8m, c₄ = k²
        assert_eq!(r, p(&[-64 * m * m + 4 * (-2 * k) * k * k, -4 * k * k, 2 * k, 1]));
        assert_eq!(discriminant(&r).unwrap(), discriminant(&f).unwrap());
        assert!(cubic_resolvent(&p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn quartic_classes() {
        assert_eq!(quartic_group_over_q(&p(&[1, 0, 0, 0, 1])).unwrap(), QuarticGroup::V4);
        assert_eq!(quartic_group_over_q(&p(&[1, 0, 2, 0, 1])).unwrap(), QuarticGroup::Reducible);
        assert_eq!(quartic_group_over_q(&p(&[-1, -1, 0, 0, 1])).unwrap(), QuarticGroup::S4);
        // X⁴ + 8X + 12 has group A₄
        assert_eq!(quartic_group_over_q(&p(&[12, 8, 0, 0, 1])).unwrap(), QuarticGroup::A4);
        // X⁴ − 2 is D₄, X⁴ + X³ + X² + X + 1 is C₄
        assert_eq!(quartic_group_over_q(&p(&[-2, 0, 0, 0, 1])).unwrap(), QuarticGroup::C4OrD4);
        assert_eq!(quartic_group_over_q(&p(&[1, 1, 1, 1, 1])).unwrap(), QuarticGroup::C4OrD4);
        // product of two irreducible quadratics
        assert_eq!(quartic_group_over_q(&(&p(&[2, 0, 1]) * &p(&[3, 1, 1]))).unwrap(), QuarticGroup::Reducible);
        // weak line at t = 1: P − Q = X⁴ − X³ + 6X² − 5X + 8
        let wl = &p(&[9, -8, 6, 0, 1]) - &p(&[1, -3, 0, 1]);
        assert_eq!(quartic_group_over_q(&wl).unwrap(), QuarticGroup::A4);
    }

    #[test]
    fn quartic_over_quad() {
        // X⁴ + 1 = (X² + i)(X² − i) over ℚ(i)
        let f = QuadPoly::from_rat_poly(-1, &p(&[1, 0, 0, 0, 1]));
        assert_eq!(quartic_group_over_quad(&f).unwrap(), QuarticGroup::Reducible);
        // X⁴ − 2 over ℚ(i): the group drops from D₄ to C₄
        let g = QuadPoly::from_rat_poly(-1, &p(&[-2, 0, 0, 0, 1]));
        assert_eq!(quartic_group_over_quad(&g).unwrap(), QuarticGroup::C4OrD4);
        // X⁴ + 8X + 12 stays A₄ over ℚ(i)
        let h = QuadPoly::from_rat_poly(-1, &p(&[12, 8, 0, 0, 1]));
        assert_eq!(quartic_group_over_quad(&h).unwrap(), QuarticGroup::A4);
        let _ = QuadElem::sqrt_m(-1);
    }
}
