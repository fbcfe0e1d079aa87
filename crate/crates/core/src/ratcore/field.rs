//! Coefficient traits shared by rational and quadratic-field arithmetic.

use std::fmt::Debug;

use super::rat::Rat;

/// Commutative ring operations by reference.
pub trait Ring: Clone + PartialEq + Debug {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn vanishes(&self) -> bool;
    /// The integer `n` viewed in the same ring as `self`.
    fn int_like(&self, n: i64) -> Self;
}

/// A field of characteristic zero carrying an explicit context
/// (`()` for ℚ, the parameter `m` for ℚ(√m)).
pub trait Field: Ring {
    type Ctx: Clone + PartialEq + Eq + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rat(ctx: &Self::Ctx, r: &Rat) -> Self;
    fn inv(&self) -> Option<Self>;
    /// A canonical square root when one exists in the field.
    fn try_sqrt(&self) -> Option<Self>;
    /// Sign flag and absolute-value text used by polynomial printing.
    fn display_parts(&self) -> (bool, String);

    fn div_ref(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul_ref(&i))
    }

    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_rat(ctx, &super::rat::int(n))
    }

    /// Determinant by Gaussian elimination.
    fn det(ctx: &Self::Ctx, mut rows: Vec<Vec<Self>>) -> Self {
        let n = rows.len();
        let mut acc = Self::one_in(ctx);
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !rows[r][col].vanishes()) else {
                return Self::zero_in(ctx);
            };
            if piv != col {
                rows.swap(piv, col);
                acc = acc.neg_ref();
            }
            let p = rows[col][col].clone();
            acc = acc.mul_ref(&p);
            let pinv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if rows[r][col].vanishes() {
                    continue;
                }
                let f = rows[r][col].mul_ref(&pinv);
                for c in col..n {
                    let t = f.mul_ref(&rows[col][c]);
                    rows[r][c] = rows[r][c].sub_ref(&t);
                }
            }
        }
        acc
    }
}
