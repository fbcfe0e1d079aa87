//! Roots lying in the coefficient field: ℚ or ℚ(√m).
//!
//! Rational roots come from certified complex enclosures: once every disk
//! has radius below `1/(4·|lc|)`, a rational root `N/lc` inside a disk is
//! pinned down by rounding, then confirmed by exact evaluation.
//! Roots in ℚ(√m) are found by writing `h(x + y√m) = A + B√m`, eliminating
//! `y` with a resultant and back-substituting the rational `x`-roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Ring};
use super::numeric::isolate_roots_until;
use super::poly::{Poly, RatPoly};
use super::quad::{QuadElem, QuadPoly};
use super::rat::{int, rat_sqrt, Rat};
use super::resultant::resultant_t;
use super::tpoly::{RatTPoly, TPoly};
use crate::error::{Error, Result};

/// Fields whose polynomials can be searched for roots in the field itself.
pub trait RootFind: Field {
    /// Distinct roots in the field, in a deterministic order.
    fn field_roots(p: &Poly<Self>) -> Result<Vec<Self>>;
}

impl RootFind for Rat {
    fn field_roots(p: &Poly<Self>) -> Result<Vec<Self>> {
        rational_roots(p)
    }
}

impl RootFind for QuadElem {
    fn field_roots(p: &Poly<Self>) -> Result<Vec<Self>> {
        quad_roots(p)
    }
}

/// Distinct rational roots in increasing order.
pub fn rational_roots(f: &RatPoly) -> Result<Vec<Rat>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg0() == 0 {
        return Ok(vec![]);
    }
    let (_, mut g) = f.squarefree_part().primitive_part();
    let mut out = Vec::new();
    if g.coeff(0).is_zero() {
        out.push(Rat::zero());
        g = g.div_exact(&RatPoly::x(&())).expect("X divides");
    }
    match g.deg0() {
        0 => {}
        1 => out.push(-g.coeff(0) / g.coeff(1)),
        2 => {
            let (a, b, c) = (g.coeff(2), g.coeff(1), g.coeff(0));
            if let Some(s) = rat_sqrt(&(&b * &b - int(4) * &a * &c)) {
                let two_a = int(2) * &a;
                out.push((-&b + &s) / &two_a);
                out.push((-&b - &s) / &two_a);
            }
        }
        _ => out.extend(numeric_rational_roots(&g)?),
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn numeric_rational_roots(g: &RatPoly) -> Result<Vec<Rat>> {
    let c = g.int_coeffs();
    let lc = c.last().unwrap().abs();
    let start = 64 + 2 * c.iter().map(|x| x.bits()).max().unwrap_or(0) as u32;
    let cloud = isolate_roots_until(&c, start.next_power_of_two(), 8, |cl| {
        (cl.max_radius() * &lc) << 2u32 < BigInt::one() << cl.prec
    })?;
    let p = cloud.prec;
    let half = BigInt::one() << (p - 1);
    let mut out = Vec::new();
    for i in 0..cloud.len() {
        if !cloud.may_be_real(i) {
            continue;
        }
        let scaled = &cloud.mids[i].re * &lc + &half;
        let nearest = scaled.div_floor(&(BigInt::one() << p));
        let cand = Rat::new(nearest, lc.clone());
        if g.eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Splits `h(x + y√m)` into `(A, B)` with `h = A + B√m`, as polynomials in
/// `y` (the `X` slot) with coefficients in ℚ[x] (the `T` slot).
pub fn split_substitution(h: &QuadPoly) -> (RatTPoly, RatTPoly) {
    let m = int(*h.ctx());
    let zero = TPoly::from_x_coeffs(&(), vec![]);
    let one = TPoly::from_x_coeffs(&(), vec![RatPoly::one(&())]);
    let x = TPoly::from_x_coeffs(&(), vec![RatPoly::x(&())]);
    let y = TPoly::from_x_coeffs(&(), vec![RatPoly::zero(&()), RatPoly::one(&())]);
    let my = y.scale_t(&RatPoly::constant(m.clone()));
    let (mut ak, mut bk) = (one, zero.clone());
    let (mut a, mut b) = (zero.clone(), zero);
    for c in h.coeffs() {
        let (ca, cb) = (RatPoly::constant(c.a().clone()), RatPoly::constant(c.b().clone()));
        let mcb = RatPoly::constant(&m * c.b());
        a = a.add(&ak.scale_t(&ca)).add(&bk.scale_t(&mcb));
        b = b.add(&bk.scale_t(&ca)).add(&ak.scale_t(&cb));
        let na = ak.mul(&x).add(&bk.mul(&my));
        let nb = ak.mul(&y).add(&bk.mul(&x));
        ak = na;
        bk = nb;
    }
    (a, b)
}

/// Distinct roots of `h` in ℚ(√m), ordered by `(a, b)`.
pub fn quad_roots(h: &QuadPoly) -> Result<Vec<QuadElem>> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = *h.ctx();
    let f = h.squarefree_part();
    let mut out = match f.deg0() {
        0 => vec![],
        1 => vec![f.coeff(0).neg_ref()],
        2 => {
            let (b, c) = (f.coeff(1), f.coeff(0));
            let two = QuadElem::from_int(&m, 2);
            let disc = b.mul_ref(&b).sub_ref(&c.mul_ref(&QuadElem::from_int(&m, 4)));
            match disc.try_sqrt() {
                Some(s) => vec![
                    b.neg_ref().add_ref(&s).div_ref(&two).unwrap(),
                    b.neg_ref().sub_ref(&s).div_ref(&two).unwrap(),
                ],
                None => vec![],
            }
        }
        _ => eliminate(&f)?,
    };
    out.sort_by(|u, v| (u.a(), u.b()).cmp(&(v.a(), v.b())));
    out.dedup();
    Ok(out)
}

fn eliminate(f: &QuadPoly) -> Result<Vec<QuadElem>> {
    let m = *f.ctx();
    let (a, b) = split_substitution(f);
    let r = resultant_t(&a, &b)?;
    if r.is_zero() {
        return Err(Error::Internal("elimination resultant vanished".into()));
    }
    let mut out = Vec::new();
    for x0 in rational_roots(&r)? {
        let ay = a.x_coeffs().iter().map(|c| c.eval(&x0)).collect();
        let by = b.x_coeffs().iter().map(|c| c.eval(&x0)).collect();
        let g = RatPoly::new(ay).gcd(&RatPoly::new(by));
        if g.deg0() == 0 {
            continue;
        }
        for y0 in rational_roots(&g)? {
            let z = QuadElem::raw(m, x0.clone(), y0);
            if f.eval(&z).vanishes() {
                out.push(z);
            }
        }
    }
    Ok(out)
}

/// `Some(root)` when `h` has a root in its coefficient field ℚ(√m).
pub fn has_root_in_quad(h: &QuadPoly) -> Result<Option<QuadElem>> {
    Ok(quad_roots(h)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::rat::rat;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn rational_root_cases() {
        assert_eq!(rational_roots(&p(&[0, -4, 0, 1])).unwrap(), vec![int(-2), int(0), int(2)]);
        assert_eq!(rational_roots(&p(&[1, 0, 1])).unwrap(), vec![]);
        // (2X − 3)(3X + 1)(X² + X + 5)
        let f = &(&p(&[-3, 2]) * &p(&[1, 3])) * &p(&[5, 1, 1]);
        assert_eq!(rational_roots(&f).unwrap(), vec![rat(-1, 3), rat(3, 2)]);
        // repeated roots collapse
        let g = &p(&[-1, 1]).pow(3) * &p(&[7, 0, 0, 1]);
        assert_eq!(rational_roots(&g).unwrap(), vec![int(1)]);
        assert_eq!(rational_roots(&p(&[-2, -18, -28, -5, 4, 1])).unwrap(), vec![]);
    }

    #[test]
    fn large_root() {
        let big = int(22068963);
        let f = &RatPoly::linear_root(&big) * &p(&[-1, 0, 0, 0, 0, 1]);
        assert_eq!(rational_roots(&f).unwrap(), vec![int(1), big]);
    }

    #[test]
    fn quad_root_cases() {
        let m = -1;
        let q = |a: i64, b: i64| QuadElem::new(m, int(a), int(b)).unwrap();
        // X² − m over ℚ(√m)
        let h = QuadPoly::try_new(m, vec![q(1, 0), q(0, 0), q(1, 0)]).unwrap();
        let r = has_root_in_quad(&h).unwrap().unwrap();
        assert_eq!(&r * &r, q(-1, 0));
        // X³ − 2 has no root in ℚ(i)
        let h = QuadPoly::from_rat_poly(m, &p(&[-2, 0, 0, 1]));
        assert_eq!(has_root_in_quad(&h).unwrap(), None);
        // (X − (1 + 2i))(X² + 3)(X − 1/2)
        let lin = QuadPoly::linear_root(&q(1, 2));
        let h = &(&lin * &QuadPoly::from_rat_poly(m, &p(&[3, 0, 1]))) * &QuadPoly::from_rat_poly(m, &RatPoly::new(vec![rat(-1, 2), int(1)]));
        let roots = quad_roots(&h).unwrap();
        assert_eq!(roots, vec![QuadElem::rational(m, rat(1, 2)), q(1, 2)]);
        // over ℚ(√−3) the factor X² + 3 splits
        let h3 = QuadPoly::from_rat_poly(-3, &(&p(&[3, 0, 1]) * &p(&[1, 1, 1])));
        assert_eq!(quad_roots(&h3).unwrap().len(), 4);
    }
}
