//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored little-endian (index `i` holds the coefficient of
//! `Xⁱ`) and kept normalized: the zero polynomial is the empty vector and
//! otherwise the last entry is nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Ring};
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

pub type RatPoly = Poly<Rat>;

impl<F: Field> Poly<F> {
    pub fn from_coeffs(ctx: &F::Ctx, coeffs: Vec<F>) -> Self {
        let mut p = Poly { ctx: ctx.clone(), coeffs };
        p.normalize();
        p
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one_in(ctx))
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Self::from_coeffs(&ctx, vec![c])
    }

    /// The monomial `c·Xᵏ`.
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut v = vec![F::zero_in(&ctx); k];
        v.push(c);
        Self::from_coeffs(&ctx, v)
    }

    pub fn x(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one_in(ctx), 1)
    }

    /// `X − a`.
    pub fn linear_root(a: &F) -> Self {
        let ctx = a.ctx();
        Self::from_coeffs(&ctx, vec![a.neg_ref(), F::one_in(&ctx)])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.vanishes()) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero_in(&self.ctx))
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<F> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| *c == F::one_in(&self.ctx))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(&self.ctx, self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplication by `Xᵏ`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero_in(&self.ctx); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { ctx: self.ctx.clone(), coeffs: v }
    }

    pub fn monic(&self) -> Self {
        match self.lc().and_then(F::inv) {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_ref(&c.int_like(i as i64)))
            .collect();
        Self::from_coeffs(&self.ctx, v)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero_in(&self.ctx), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(&self.ctx), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lc().and_then(F::inv).ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let mut q = vec![F::zero_in(&self.ctx); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul_ref(&inv);
            if !c.vanishes() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].sub_ref(&c.mul_ref(dj));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(&self.ctx, q), Self::from_coeffs(&self.ctx, r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divrem(d)?.1)
    }

    /// The quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `f / gcd(f, f′)`, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Square root by matching coefficients from the top. The root's leading
    /// coefficient is the field's canonical square root of `lc(self)`.
    pub fn sqrt(&self) -> Option<Self> {
        let Some(d) = self.degree() else {
            return Some(self.clone());
        };
        if d % 2 == 1 {
            return None;
        }
        let k = d / 2;
        let top = self.lc()?.try_sqrt()?;
        let two_top_inv = top.add_ref(&top).inv()?;
        // g[k - i] for i = 0..=k
        let mut g = vec![F::zero_in(&self.ctx); k + 1];
        g[k] = top;
        for i in 1..=k {
            let mut acc = self.coeff(2 * k - i);
            for j in 1..i {
                acc = acc.sub_ref(&g[k - j].mul_ref(&g[k - i + j]));
            }
            g[k - i] = acc.mul_ref(&two_top_inv);
        }
        let g = Self::from_coeffs(&self.ctx, g);
        (&g * &g == *self).then_some(g)
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(ctx, self.coeffs.iter().map(f).collect())
    }

    /// Human-readable form in the variable `var`.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.vanishes() {
                continue;
            }
            let (neg, abs) = c.display_parts();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || abs != "1" {
                out.push_str(&abs);
            }
            out.push_str(&mono);
        }
        out
    }
}

impl<F: Field> Ring for Poly<F> {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn int_like(&self, n: i64) -> Self {
        Self::constant(F::from_int(&self.ctx, n))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("X"))
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(&self.ctx, v)
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: &Poly<F>) -> Poly<F> {
        self + &(-o)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(Ring::neg_ref).collect() }
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: &Poly<F>) -> Poly<F> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut v = vec![F::zero_in(&self.ctx); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::from_coeffs(&self.ctx, v)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, o: Poly<F>) -> Poly<F> {
                (&self).$m(&o)
            }
        }
        impl<'a, F: Field> $tr<&'a Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, o: &Poly<F>) -> Poly<F> {
                (&self).$m(o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

impl Poly<Rat> {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        Self::from_coeffs(&(), coeffs)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| super::rat::int(x)).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(super::rat::big).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Integer coefficients (panics unless integral).
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        assert!(self.is_integral(), "polynomial has non-integer coefficients");
        self.coeffs.iter().map(|c| c.numer().clone()).collect()
    }

    /// Writes `self = c·g` with `g` integral, content 1 and positive leading
    /// coefficient. Returns `(c, g)`; the zero polynomial gives `(0, 0)`.
    pub fn primitive_part(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let den = super::rat::common_denominator(&self.coeffs);
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = Self::from_bigints(&ints.iter().map(|x| x / &g).collect::<Vec<_>>());
        (Rat::new(g, den), prim)
    }

    /// Largest absolute value among the coefficients.
    pub fn height(&self) -> Rat {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Rat::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::rat::{int, rat};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn derivative_of_quintic() {
        let f = p(&[-2, -18, -28, -5, 4, 1]);
        assert_eq!(f.derivative(), p(&[-18, -56, -15, 16, 5]));
    }

    #[test]
    fn gcd_and_products() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(&p(&[1, 0, 1]) * &p(&[-1, 0, 1]), p(&[-1, 0, 0, 0, 1]));
        assert_eq!(p(&[2, 0, 2]).gcd(&p(&[0, 3])), p(&[1]));
        assert_eq!(p(&[2, 4]).gcd(&RatPoly::zero(&())), p(&[1, 2]).scale(&rat(1, 1)).monic());
    }

    #[test]
    fn divrem_exact() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
        assert_eq!(a.divrem(&RatPoly::zero(&())), Err(Error::DivisionByZero));
        assert_eq!(p(&[1, 0, -1]).div_exact(&p(&[1, 1])), Some(p(&[1, -1])));
    }

    #[test]
    fn sqrt_cases() {
        assert_eq!(p(&[1, 2, 1]).sqrt(), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).sqrt(), None);
        assert_eq!(p(&[1, -2, 1]).sqrt(), Some(p(&[-1, 1])));
        let g = RatPoly::new(vec![rat(-1, 3), int(0), rat(5, 2)]);
        assert_eq!((&g * &g).sqrt(), Some(g));
    }

    #[test]
    fn eval_compose_display() {
        let f = p(&[-2, -18, -28, -5, 4, 1]);
        assert_eq!(f.eval(&int(1)), int(-48));
        let shift = p(&[1, 1]);
        assert_eq!(f.compose(&shift).eval(&int(0)), f.eval(&int(1)));
        assert_eq!(f.to_string(), "X^5 + 4X^4 - 5X^3 - 28X^2 - 18X - 2");
        assert_eq!(RatPoly::new(vec![rat(1, 2), int(-1)]).to_string(), "-X + 1/2");
    }

    #[test]
    fn primitive() {
        let f = RatPoly::new(vec![rat(-1, 2), rat(3, 4)]);
        let (c, g) = f.primitive_part();
        assert_eq!(g, p(&[-2, 3]));
        assert_eq!(g.scale(&c), f);
        let (c, g) = p(&[4, -6]).primitive_part();
        assert_eq!((c, g), (int(-2), p(&[-2, 3])));
    }
}
