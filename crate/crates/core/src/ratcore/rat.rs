//! Rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps the fraction
//! reduced with a positive denominator. This module adds the exact square
//! root, the canonical `num/den` text form, and a few integer helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Ring};
use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Exact integer square root, `None` unless `n` is a perfect square.
pub fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Nonnegative rational square root when `x` is the square of a rational.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    let n = isqrt_exact(x.numer())?;
    let d = isqrt_exact(x.denom())?;
    Some(Rat::new(n, d))
}

/// Canonical text form: `num/den`, denominator omitted when it is 1.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = |msg: &str| Error::Parse { offset: 0, msg: format!("{msg}: {s:?}") };
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(n, d))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Factorization of a nonzero integer by trial division, as (prime, exponent)
/// pairs. Only meant for the small integers this crate feeds it.
pub fn factor_small(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_squarefree(m: i64) -> bool {
    m != 0 && factor_small(m.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

/// Square-free part of `sign · ∏ base_i^exp_i`.
pub fn squarefree_part_of_product(negative: bool, factors: &[(u64, u64)]) -> BigInt {
    let mut exps: std::collections::BTreeMap<u64, u64> = Default::default();
    for &(b, e) in factors {
        for (p, k) in factor_small(b) {
            *exps.entry(p).or_default() += k as u64 * e;
        }
    }
    let mut out = BigInt::one();
    for (p, e) in exps {
        if e % 2 == 1 {
            out *= p;
        }
    }
    if negative {
        -out
    } else {
        out
    }
}

impl Ring for Rat {
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
        Zero::is_zero(self)
    }
    fn int_like(&self, n: i64) -> Self {
        int(n)
    }
}

impl Field for Rat {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero_in(_: &()) -> Self {
        Rat::zero()
    }
    fn one_in(_: &()) -> Self {
        Rat::one()
    }
    fn from_rat(_: &(), r: &Rat) -> Self {
        r.clone()
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn try_sqrt(&self) -> Option<Self> {
        rat_sqrt(self)
    }
    fn display_parts(&self) -> (bool, String) {
        (self.is_negative(), format_rat(&self.abs()))
    }
    fn det(_: &(), rows: Vec<Vec<Self>>) -> Self {
        super::linalg::det_rat(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_examples() {
        assert_eq!(rat_sqrt(&int(81)), Some(int(9)));
        assert_eq!(rat_sqrt(&int(-4)), None);
        let c = BigInt::from(22068963);
        assert_eq!(rat_sqrt(&big(&(&c * &c))), Some(big(&c)));
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&int(0)), Some(int(0)));
    }

    #[test]
    fn text_form() {
        assert_eq!(format_rat(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rat(&int(7)), "7");
        assert_eq!(parse_rat("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("10").unwrap(), int(10));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(-7));
        assert!(!is_squarefree(12));
        assert!(!is_squarefree(0));
        // (−1)·3³·4⁴ → −3
        assert_eq!(squarefree_part_of_product(true, &[(3, 3), (4, 4)]), BigInt::from(-3));
        assert_eq!(squarefree_part_of_product(false, &[(5, 5), (6, 6)]), BigInt::from(5));
    }
}
