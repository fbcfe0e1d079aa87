//! Elements `a + b√m` of a quadratic field ℚ(√m).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::field::{Field, Ring};
use super::poly::Poly;
use super::rat::{format_rat, int, is_squarefree, rat_sqrt, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElem {
    m: i64,
    a: Rat,
    b: Rat,
}

pub type QuadPoly = Poly<QuadElem>;

pub fn check_m(m: i64) -> Result<()> {
    if m == 1 || !is_squarefree(m) {
        return Err(Error::BadFieldParameter(m));
    }
    Ok(())
}

impl QuadElem {
    pub fn new(m: i64, a: Rat, b: Rat) -> Result<Self> {
        check_m(m)?;
        Ok(QuadElem { m, a, b })
    }

    /// Constructor for an `m` already known to be valid.
    pub(crate) fn raw(m: i64, a: Rat, b: Rat) -> Self {
        QuadElem { m, a, b }
    }

    pub fn rational(m: i64, a: Rat) -> Self {
        QuadElem { m, a, b: Rat::zero() }
    }

    /// `√m` itself.
    pub fn sqrt_m(m: i64) -> Self {
        QuadElem { m, a: Rat::zero(), b: Rat::one() }
    }

    pub fn m(&self) -> i64 {
        self.m
    }
    pub fn a(&self) -> &Rat {
        &self.a
    }
    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadElem { m: self.m, a: self.a.clone(), b: -&self.b }
    }

    /// `a² − m·b²`.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - int(self.m) * &self.b * &self.b
    }

    pub fn trace(&self) -> Rat {
        &self.a + &self.a
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.m == o.m {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.m, o.m))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(QuadElem { m: self.m, a: &self.a + &o.a, b: &self.b + &o.b })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&o.neg_ref())
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        let m = int(self.m);
        Ok(QuadElem {
            m: self.m,
            a: &self.a * &o.a + m * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        })
    }

    /// Sign normalization: first nonzero component positive.
    fn canonical_sign(self) -> Self {
        let neg = if self.a.is_zero() { self.b.is_negative() } else { self.a.is_negative() };
        if neg {
            self.neg_ref()
        } else {
            self
        }
    }
}

impl Ring for QuadElem {
    fn add_ref(&self, o: &Self) -> Self {
        self.checked_add(o).expect("quadratic field mismatch")
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.checked_sub(o).expect("quadratic field mismatch")
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("quadratic field mismatch")
    }
    fn neg_ref(&self) -> Self {
        QuadElem { m: self.m, a: -&self.a, b: -&self.b }
    }
    fn vanishes(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn int_like(&self, n: i64) -> Self {
        QuadElem::rational(self.m, int(n))
    }
}

impl Field for QuadElem {
    type Ctx = i64;

    fn ctx(&self) -> i64 {
        self.m
    }
    fn zero_in(m: &i64) -> Self {
        QuadElem::rational(*m, Rat::zero())
    }
    fn one_in(m: &i64) -> Self {
        QuadElem::rational(*m, Rat::one())
    }
    fn from_rat(m: &i64, r: &Rat) -> Self {
        QuadElem::rational(*m, r.clone())
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadElem { m: self.m, a: &self.a / &n, b: -&self.b / &n })
    }

    /// `(x + y√m)² = a + b√m` forces `x² + m y² = a`, `2xy = b`; so
    /// `x² = (a ± √N)/2` with `N = a² − m b²` the norm.
    fn try_sqrt(&self) -> Option<Self> {
        let m = self.m;
        if self.b.is_zero() {
            if let Some(x) = rat_sqrt(&self.a) {
                return Some(QuadElem::rational(m, x));
            }
            let y = rat_sqrt(&(&self.a / int(m)))?;
            return Some(QuadElem { m, a: Rat::zero(), b: y });
        }
        let n = rat_sqrt(&self.norm())?;
        let two = int(2);
        for x2 in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if x2.is_zero() {
                continue;
            }
            if let Some(x) = rat_sqrt(&x2) {
                let y = &self.b / (&two * &x);
                let r = QuadElem { m, a: x, b: y };
                debug_assert_eq!(r.mul_ref(&r), *self);
                return Some(r.canonical_sign());
            }
        }
        None
    }

    fn display_parts(&self) -> (bool, String) {
        let root = format!("√{}", self.m);
        if self.b.is_zero() {
            return (self.a.is_negative(), format_rat(&self.a.abs()));
        }
        if self.a.is_zero() {
            let bb = self.b.abs();
            let s = if bb.is_one() { root } else { format!("{}{}", format_rat(&bb), root) };
            return (self.b.is_negative(), s);
        }
        (false, format!("({self})"))
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}·√{}", format_rat(&self.a), sign, format_rat(&self.b.abs()), self.m)
    }
}

macro_rules! quad_ops {
    ($($tr:ident $m:ident $f:ident),*) => {$(
        impl<'a> $tr<&'a QuadElem> for &'a QuadElem {
            type Output = QuadElem;
            fn $m(self, o: &QuadElem) -> QuadElem {
                self.$f(o)
            }
        }
        impl $tr<QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $m(self, o: QuadElem) -> QuadElem {
                self.$f(&o)
            }
        }
    )*};
}
quad_ops!(Add add add_ref, Sub sub sub_ref, Mul mul mul_ref);

impl<'a> Div<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn div(self, o: &QuadElem) -> QuadElem {
        self.div_ref(o).expect("division by zero in quadratic field")
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        self.neg_ref()
    }
}

impl Poly<QuadElem> {
    /// Builds a polynomial over ℚ(√m), rejecting coefficients from another field.
    pub fn try_new(m: i64, coeffs: Vec<QuadElem>) -> Result<Self> {
        check_m(m)?;
        if let Some(c) = coeffs.iter().find(|c| c.m != m) {
            return Err(Error::FieldMismatch(m, c.m));
        }
        Ok(Self::from_coeffs(&m, coeffs))
    }

    pub fn from_rat_poly(m: i64, p: &Poly<Rat>) -> Self {
        p.map(&m, |c| QuadElem::rational(m, c.clone()))
    }

    pub fn conjugate(&self) -> Self {
        self.map(self.ctx(), QuadElem::conj)
    }

    /// `self · conj(self)`, which has rational coefficients.
    pub fn norm_poly(&self) -> Poly<Rat> {
        let n = self * &self.conjugate();
        n.map(&(), |c| c.a.clone())
    }

    /// Splits `Σ (aᵢ + bᵢ√m) Xⁱ` into `(Σ aᵢXⁱ, Σ bᵢXⁱ)`.
    pub fn split(&self) -> (Poly<Rat>, Poly<Rat>) {
        (self.map(&(), |c| c.a.clone()), self.map(&(), |c| c.b.clone()))
    }
}
