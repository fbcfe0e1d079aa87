//! Resultants and discriminants.
//!
//! Univariate resultants are Sylvester determinants taken with formal
//! degrees, so a vanishing leading coefficient is allowed. Resultants of
//! [`TPoly`]s are obtained by evaluating at `T = 0, 1, …` and interpolating.

use super::field::Field;
use super::poly::Poly;
use super::tpoly::TPoly;
use crate::error::{Error, Result};

/// Sylvester determinant of `f` (formal degree `f.len() − 1`) and `g`
/// (formal degree `g.len() − 1`); coefficient slices are little-endian.
pub fn sylvester_resultant<F: Field>(ctx: &F::Ctx, f: &[F], g: &[F]) -> F {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return F::one_in(ctx);
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![F::zero_in(ctx); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![F::zero_in(ctx); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    F::det(ctx, rows)
}

pub fn resultant<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Result<F> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(sylvester_resultant(f.ctx(), f.coeffs(), g.coeffs()))
}

fn disc_sign(n: usize) -> i64 {
    if (n * (n - 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Δ(f) = (−1)^{n(n−1)/2} · Res(f, f′) / lc(f)`.
pub fn discriminant<F: Field>(f: &Poly<F>) -> Result<F> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::BadDegree { found: 0, expected: "at least 1" }),
        Some(n) => n,
    };
    let r = resultant(f, &f.derivative())?;
    let s = F::from_int(f.ctx(), disc_sign(n));
    Ok(r.mul_ref(&s).div_ref(f.lc().unwrap()).expect("nonzero leading coefficient"))
}

/// Newton interpolation through `(i, ys[i])` for `i = 0, 1, …`.
pub fn interpolate_at_naturals<F: Field>(ctx: &F::Ctx, ys: &[F]) -> Poly<F> {
    let n = ys.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let denom = F::from_int(ctx, k as i64).inv().unwrap();
            dd[i] = dd[i].sub_ref(&dd[i - 1]).mul_ref(&denom);
        }
    }
    // p(t) = dd0 + dd1 t + dd2 t(t−1) + …
    let mut p = Poly::zero(ctx);
    for k in (0..n).rev() {
        let shift = Poly::linear_root(&F::from_int(ctx, k as i64));
        p = &(&p * &shift) + &Poly::constant(dd[k].clone());
    }
    p
}

/// Resultant in `X` of two polynomials over `F[T]`, returned as a polynomial
/// in `T`.
pub fn resultant_t<F: Field>(f: &TPoly<F>, g: &TPoly<F>) -> Result<Poly<F>> {
    let (Some(m), Some(n)) = (f.deg_x(), g.deg_x()) else {
        return Err(Error::ZeroPolynomial);
    };
    let ctx = f.ctx();
    let bound = n * f.deg_t() + m * g.deg_t();
    let ys: Vec<F> = (0..=bound)
        .map(|t| {
            let t = F::from_int(ctx, t as i64);
            sylvester_resultant(ctx, &f.eval_t_padded(&t, m + 1), &g.eval_t_padded(&t, n + 1))
        })
        .collect();
    Ok(interpolate_at_naturals(ctx, &ys))
}

/// Discriminant in `X` of a polynomial over `F[T]`.
pub fn discriminant_t<F: Field>(f: &TPoly<F>) -> Result<Poly<F>> {
    let n = match f.deg_x() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::BadDegree { found: 0, expected: "at least 1" }),
        Some(n) => n,
    };
    let r = resultant_t(f, &f.derivative_x())?;
    let s = F::from_int(f.ctx(), disc_sign(n));
    r.scale(&s)
        .div_exact(f.lc_x().unwrap())
        .ok_or_else(|| Error::Internal("leading coefficient does not divide Res(f, f′)".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::poly::RatPoly;
    use crate::ratcore::rat::{int, Rat};
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&p(&[-3, 1]), &p(&[-5, 1])).unwrap(), int(-2));
        assert_eq!(resultant(&p(&[5]), &p(&[1, 2, 3])).unwrap(), int(25));
        assert_eq!(resultant(&RatPoly::zero(&()), &p(&[1])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn even_family_resultant_n10() {
        let mut c = vec![0i64; 11];
        c[10] = 1;
        c[9] = -10;
        let r = resultant(&p(&c), &p(&[64, -10])).unwrap();
        let expect = BigInt::from(-36) * BigInt::from(8).pow(18);
        assert_eq!(r, Rat::from_integer(expect));
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&p(&[1, 0, 1])).unwrap(), int(-4));
        assert_eq!(discriminant(&p(&[1, -3, 0, 1])).unwrap(), int(81));
        assert_eq!(discriminant(&p(&[1, 2, 1])).unwrap(), int(0));
        assert!(discriminant(&p(&[3])).is_err());
        // aX² + bX + c
        assert_eq!(discriminant(&p(&[5, 3, 2])).unwrap(), int(9 - 40));
    }

    #[test]
    fn weak_line_discriminant() {
        let (k, m) = (-3i64, 1i64);
        let pp = p(&[k * k, -8 * m, -2 * k, 0, 1]);
        let q = p(&[m, k, 0, 1]);
        let d = discriminant_t(&TPoly::line(&pp, &q)).unwrap();
        let cubic = p(&[64 * m, 16 * k, 0, 1]);
        assert_eq!(d, (&cubic * &cubic).scale(&int(81)));
    }

    #[test]
    fn interpolation() {
        let f = p(&[3, -1, 0, 2]);
        let ys: Vec<Rat> = (0..6).map(|t| f.eval(&int(t))).collect();
        assert_eq!(interpolate_at_naturals(&(), &ys), f);
    }
}
