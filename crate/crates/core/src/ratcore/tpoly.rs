//! Polynomials in `X` whose coefficients are polynomials in `T`.

use std::fmt;

use super::field::{Field, Ring};
use super::poly::Poly;
use super::rat::Rat;

#[derive(Clone, PartialEq, Debug)]
pub struct TPoly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<Poly<F>>,
}

pub type RatTPoly = TPoly<Rat>;

impl<F: Field> TPoly<F> {
    pub fn from_x_coeffs(ctx: &F::Ctx, coeffs: Vec<Poly<F>>) -> Self {
        let mut t = TPoly { ctx: ctx.clone(), coeffs };
        while t.coeffs.last().is_some_and(Poly::is_zero) {
            t.coeffs.pop();
        }
        t
    }

    /// A polynomial in `X` with constant coefficients.
    pub fn from_x_poly(p: &Poly<F>) -> Self {
        Self::from_x_coeffs(p.ctx(), p.coeffs().iter().map(|c| Poly::constant(c.clone())).collect())
    }

    /// The line `P − T·Q`.
    pub fn line(p: &Poly<F>, q: &Poly<F>) -> Self {
        let ctx = p.ctx();
        let n = p.coeffs().len().max(q.coeffs().len());
        let coeffs = (0..n)
            .map(|i| Poly::from_coeffs(ctx, vec![p.coeff(i), q.coeff(i).neg_ref()]))
            .collect();
        Self::from_x_coeffs(ctx, coeffs)
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn x_coeffs(&self) -> &[Poly<F>] {
        &self.coeffs
    }

    pub fn x_coeff(&self, i: usize) -> Poly<F> {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Poly::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_t(&self) -> usize {
        self.coeffs.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    /// Leading coefficient in `X`, a polynomial in `T`.
    pub fn lc_x(&self) -> Option<&Poly<F>> {
        self.coeffs.last()
    }

    pub fn derivative_x(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&F::from_int(&self.ctx, i as i64)))
            .collect();
        Self::from_x_coeffs(&self.ctx, v)
    }

    /// Specialization `T = t`.
    pub fn eval_t(&self, t: &F) -> Poly<F> {
        Poly::from_coeffs(&self.ctx, self.coeffs.iter().map(|c| c.eval(t)).collect())
    }

    /// Specialization at `T = t`, keeping `len` formal coefficients.
    pub fn eval_t_padded(&self, t: &F, len: usize) -> Vec<F> {
        (0..len).map(|i| self.x_coeff(i).eval(t)).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_x_coeffs(&self.ctx, (0..n).map(|i| &self.x_coeff(i) + &o.x_coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_x_coeffs(&self.ctx, (0..n).map(|i| &self.x_coeff(i) - &o.x_coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::from_x_coeffs(&self.ctx, vec![]);
        }
        let mut v = vec![Poly::zero(&self.ctx); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        Self::from_x_coeffs(&self.ctx, v)
    }

    /// Multiplies every coefficient by the `T`-polynomial `c`.
    pub fn scale_t(&self, c: &Poly<F>) -> Self {
        Self::from_x_coeffs(&self.ctx, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Evaluates at `X = x` where `x` is itself a polynomial in `T`.
    pub fn eval_x(&self, x: &Poly<F>) -> Poly<F> {
        self.coeffs.iter().rev().fold(Poly::zero(&self.ctx), |acc, c| &(&acc * x) + c)
    }
}

impl<F: Field> Ring for TPoly<F> {
    fn add_ref(&self, o: &Self) -> Self {
        TPoly::add(self, o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        TPoly::sub(self, o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        TPoly::mul(self, o)
    }
    fn neg_ref(&self) -> Self {
        Self::from_x_coeffs(&self.ctx, self.coeffs.iter().map(|c| -c).collect())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn int_like(&self, n: i64) -> Self {
        Self::from_x_coeffs(&self.ctx, vec![Poly::constant(F::from_int(&self.ctx, n))])
    }
}

impl<F: Field> fmt::Display for TPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({})", c.display_var("T"))?,
                1 => write!(f, "({})X", c.display_var("T"))?,
                _ => write!(f, "({})X^{i}", c.display_var("T"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::poly::RatPoly;
    use crate::ratcore::rat::int;

    #[test]
    fn line_and_specialize() {
        let p = RatPoly::from_ints(&[9, -8, 6, 0, 1]);
        let q = RatPoly::from_ints(&[1, -3, 0, 1]);
        let l = TPoly::line(&p, &q);
        assert_eq!(l.deg_x(), Some(4));
        assert_eq!(l.deg_t(), 1);
        assert_eq!(l.eval_t(&int(0)), p);
        assert_eq!(l.eval_t(&int(2)), &p - &q.scale(&int(2)));
        assert_eq!(l.derivative_x().eval_t(&int(3)), l.eval_t(&int(3)).derivative());
        let sq = l.mul(&l);
        assert_eq!(sq.eval_t(&int(5)), &l.eval_t(&int(5)) * &l.eval_t(&int(5)));
        let x = RatPoly::from_ints(&[1, 1]);
        assert_eq!(l.eval_x(&x).eval(&int(2)), l.eval_t(&int(2)).eval(&int(3)));
    }
}
