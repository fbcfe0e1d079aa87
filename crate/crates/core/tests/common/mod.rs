//! Independent oracles and law checks shared by the property and
//! acceptance suites.

#![allow(dead_code)]

use altlines::ffpoly::primes_between;
use altlines::galoisid::{cubic_resolvent, cycle_type_sample};
use altlines::ratcore::numeric::{isolate_roots, Cx};
use altlines::ratcore::{discriminant, int, line_left, mobius_right, resultant, Mobius, Rat, RatPoly};
use num_traits::{One, ToPrimitive, Zero};

pub const SEED5: [i64; 6] = [-2, -18, -28, -5, 4, 1];

pub fn seed5() -> RatPoly {
    RatPoly::from_ints(&SEED5)
}

/// Resultant by the Euclidean recursion
/// `Res(f, g) = (−1)^{mn} lc(g)^{m − deg r} Res(g, r)`, `r = f mod g`.
pub fn euclid_resultant(f: &RatPoly, g: &RatPoly) -> Rat {
    let (m, n) = (f.deg0(), g.deg0());
    if n == 0 {
        return num_traits::pow(g.coeff(0), m);
    }
    let r = f.rem(g).unwrap();
    if r.is_zero() {
        return Rat::zero();
    }
    let sign = if (m * n) % 2 == 1 { -Rat::one() } else { Rat::one() };
    sign * num_traits::pow(g.lc().unwrap().clone(), m - r.deg0()) * euclid_resultant(g, &r)
}

fn poly_eval_cx(g: &RatPoly, z: &Cx, p: u32) -> Cx {
    let mut acc = Cx::zero();
    for c in g.coeffs().iter().rev() {
        acc = acc.mul(z, p).add(&Cx::from_rat(c, p));
    }
    acc
}

/// `lc(f)^{deg g} ∏ g(αᵢ)` over numerically isolated roots of squarefree
/// integral `f`, as an `f64`.
pub fn root_product_resultant(f: &RatPoly, g: &RatPoly) -> f64 {
    const P: u32 = 256;
    let cloud = isolate_roots(&f.int_coeffs(), P).expect("roots isolate");
    let mut acc = Cx::from_rat(&num_traits::pow(f.lc().unwrap().clone(), g.deg0()), P);
    for z in &cloud.mids {
        acc = acc.mul(&poly_eval_cx(g, z, P), P);
    }
    let (re, im) = acc.to_f64(P);
    assert!(im.abs() <= 1e-6 * (1.0 + re.abs()), "imaginary residue {im}");
    re
}

pub fn close(a: f64, exact: &Rat) -> bool {
    let e = exact.to_f64().unwrap();
    (a - e).abs() <= 1e-6 * (1.0 + e.abs())
}

/// Sign symmetry, the Euclidean and root-product oracles, and the
/// `f·h + g` reduction law.
pub fn resultant_laws(f: &RatPoly, g: &RatPoly, h: &RatPoly) -> Result<(), String> {
    let (m, n) = (f.deg0(), g.deg0());
    let r = resultant(f, g).map_err(|e| e.to_string())?;
    let sign = if (m * n) % 2 == 1 { int(-1) } else { int(1) };
    if resultant(g, f).unwrap() != &sign * &r {
        return Err("Res(g, f) ≠ (−1)^{mn} Res(f, g)".into());
    }
    if euclid_resultant(f, g) != r {
        return Err("Sylvester and Euclidean resultants differ".into());
    }
    if f.is_squarefree() && f.is_integral() && !close(root_product_resultant(f, g), &r) {
        return Err("root-product formula disagrees".into());
    }
    let fhg = &(f * h) + g;
    if !fhg.is_zero() {
        let k = fhg.deg0() as i64 - n as i64;
        let lc = f.lc().unwrap().clone();
        let factor = if k >= 0 { num_traits::pow(lc, k as usize) } else { Rat::one() / num_traits::pow(lc, (-k) as usize) };
        if resultant(f, &fhg).unwrap() != factor * &r {
            return Err("Res(f, fh + g) ≠ lc(f)^{deg(fh+g) − deg g} Res(f, g)".into());
        }
    }
    let gh = g * h;
    if !gh.is_zero() && resultant(f, &gh).unwrap() != &r * &resultant(f, h).unwrap() {
        return Err("Res(f, gh) ≠ Res(f, g) Res(f, h)".into());
    }
    Ok(())
}

/// A quartic and its cubic resolvent share their discriminant.
pub fn resolvent_disc_equal(f: &RatPoly) -> bool {
    let f = f.monic();
    discriminant(&cubic_resolvent(&f).unwrap()).unwrap() == discriminant(&f).unwrap()
}

/// `sqrt(f²) = ±f` and `f²·x` (for `f` coprime to x) has no square root.
pub fn sqrt_round_trip(f: &RatPoly) -> bool {
    let sq = f * f;
    let back = sq.sqrt();
    let ok = back.as_ref().is_some_and(|s| s == f || *s == -f);
    let x = RatPoly::from_ints(&[0, 1]);
    let twisted = &sq * &x;
    ok && (f.is_zero() || twisted.sqrt().is_none())
}

/// Both actions compose as matrix products and commute with each other.
pub fn gl2_commutes(p: &RatPoly, q: &RatPoly, g: &Mobius, h: &Mobius, left: &Mobius) -> bool {
    let n = p.deg0().max(q.deg0());
    let right = |x: &RatPoly, m: &Mobius| mobius_right(x, m, n).unwrap();
    let composed = right(&right(p, g), h) == right(p, &g.compose(h));
    let (l1, l2) = line_left(&right(p, g), &right(q, g), left);
    let (a, b) = line_left(p, q, left);
    let commute = l1 == right(&a, g) && l2 == right(&b, g);
    let ident = right(p, &Mobius::identity()) == *p;
    composed && commute && ident
}

/// Every good-prime factorization pattern of `f` below `bound` is even.
pub fn dedekind_even(f: &RatPoly, bound: u64) -> (usize, Vec<u64>) {
    let mut good = 0;
    let mut odd = vec![];
    for p in primes_between(2, bound) {
        if let Some(pat) = cycle_type_sample(f, p).unwrap() {
            good += 1;
            if !pat.is_even() {
                odd.push(p);
            }
        }
    }
    (good, odd)
}
