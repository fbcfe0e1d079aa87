//! The two GL₂ actions on lines: substitution `X ↦ (aX+b)/(cX+d)` on the
//! right and linear mixing of `(P, Q)` on the left.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::rat::{format_rat, int, Rat};
use crate::error::{Error, Result};

/// The matrix `[[a, b], [c, d]]` with nonzero determinant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mobius {
    a: Rat,
    b: Rat,
    c: Rat,
    d: Rat,
}

/// A point of ℙ¹(ℚ).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Point {
    Finite(Rat),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(x) => f.write_str(&format_rat(x)),
            Point::Infinity => f.write_str("∞"),
        }
    }
}

impl Point {
    pub fn int(n: i64) -> Self {
        Point::Finite(int(n))
    }

    /// Homogeneous coordinates `(x, y)` with the point equal to `x/y`.
    pub fn homogeneous(&self) -> (Rat, Rat) {
        match self {
            Point::Finite(x) => (x.clone(), Rat::one()),
            Point::Infinity => (Rat::one(), Rat::zero()),
        }
    }
}

impl Mobius {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::DegenerateMobius);
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Mobius { a: Rat::one(), b: Rat::zero(), c: Rat::zero(), d: Rat::one() }
    }

    pub fn entries(&self) -> [&Rat; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> Rat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn inverse(&self) -> Self {
        let det = self.det();
        Mobius {
            a: &self.d / &det,
            b: -&self.b / &det,
            c: -&self.c / &det,
            d: &self.a / &det,
        }
    }

    /// Matrix product `self · o`.
    pub fn compose(&self, o: &Self) -> Self {
        Mobius {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// Image of a point under `x ↦ (ax+b)/(cx+d)`.
    pub fn apply_point(&self, p: &Point) -> Point {
        let (x, y) = p.homogeneous();
        let nx = &self.a * &x + &self.b * &y;
        let ny = &self.c * &x + &self.d * &y;
        if ny.is_zero() {
            Point::Infinity
        } else {
            Point::Finite(nx / ny)
        }
    }
}

/// `(Pγ)(X) = P((aX+b)/(cX+d))·(cX+d)ⁿ`.
pub fn mobius_right(p: &RatPoly, g: &Mobius, n: usize) -> Result<RatPoly> {
    if p.degree().is_some_and(|d| d > n) {
        return Err(Error::BadDegree { found: p.deg0(), expected: "at most the homogenizing degree" });
    }
    let num = RatPoly::new(vec![g.b.clone(), g.a.clone()]);
    let den = RatPoly::new(vec![g.d.clone(), g.c.clone()]);
    let mut acc = RatPoly::zero(&());
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = &num.pow(i as u32) * &den.pow((n - i) as u32);
        acc = &acc + &term.scale(c);
    }
    Ok(acc)
}

/// `(P, Q) ↦ (aP + bQ, cP + dQ)`.
pub fn line_left(p: &RatPoly, q: &RatPoly, g: &Mobius) -> (RatPoly, RatPoly) {
    (
        &p.scale(&g.a) + &q.scale(&g.b),
        &p.scale(&g.c) + &q.scale(&g.d),
    )
}
