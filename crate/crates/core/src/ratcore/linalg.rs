//! Exact determinants and linear solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::Field;
use super::rat::Rat;

/// Determinant of a rational matrix: rows are cleared of denominators and
/// the integer matrix is reduced by fraction-free (Bareiss) elimination.
pub fn det_rat(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    if n == 0 {
        return Rat::one();
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let d = bareiss(&mut m);
    Rat::new(d, scale)
}

/// Integer determinant by Bareiss elimination; `m` is destroyed.
pub fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, piv);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    /// A particular solution plus a basis of the kernel.
    Family(Vec<F>, Vec<Vec<F>>),
    Inconsistent,
}

/// Solves `a·x = b` exactly by Gauss–Jordan elimination. The system may be
/// over- or under-determined.
pub fn solve<F: Field>(ctx: &F::Ctx, a: &[Vec<F>], b: &[F], ncols: usize) -> Solution<F> {
    let nrows = a.len();
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.resize(ncols, F::zero_in(ctx));
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].vanishes()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for c in col..=ncols {
            m[row][c] = m[row][c].mul_ref(&inv);
        }
        for r in 0..nrows {
            if r == row || m[r][col].vanishes() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..=ncols {
                let t = f.mul_ref(&m[row][c]);
                m[r][c] = m[r][c].sub_ref(&t);
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[ncols].vanishes()) {
        return Solution::Inconsistent;
    }
    let mut x = vec![F::zero_in(ctx); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    if pivots.len() == ncols {
        return Solution::Unique(x);
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero_in(ctx); ncols];
            v[f] = F::one_in(ctx);
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = m[r][f].neg_ref();
            }
            v
        })
        .collect();
    Solution::Family(x, basis)
}

/// Applies `a` to `x`.
pub fn mat_vec<F: Field>(ctx: &F::Ctx, a: &[Vec<F>], x: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(F::zero_in(ctx), |acc, (u, v)| acc.add_ref(&u.mul_ref(v)))
        })
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::rat::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_gauss() {
        let a = m(&[&[2, -1, 0, 3], &[1, 0, 4, -2], &[0, 5, -3, 1], &[7, 1, 1, 0]]);
        let g = <Rat as Field>::det(&(), a.clone());
        assert_eq!(det_rat(&a), g);
        let b = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]];
        assert_eq!(det_rat(&b), rat(1, 10) - rat(1, 12));
        assert_eq!(det_rat(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(det_rat(&m(&[&[1, 2], &[2, 4]])), int(0));
    }

    #[test]
    fn solve_cases() {
        let a = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        let b = vec![int(3), int(1), int(4)];
        assert_eq!(solve(&(), &a, &b, 2), Solution::Unique(vec![int(2), int(1)]));
        let b2 = vec![int(3), int(1), int(5)];
        assert_eq!(solve(&(), &a, &b2, 2), Solution::Inconsistent);
        let c = m(&[&[1, 1, 1]]);
        match solve(&(), &c, &[int(1)], 3) {
            Solution::Family(x, basis) => {
                assert_eq!(basis.len(), 2);
                assert_eq!(mat_vec(&(), &c, &x), vec![int(1)]);
                for v in basis {
                    assert_eq!(mat_vec(&(), &c, &v), vec![int(0)]);
                }
            }
            other => panic!("{other:?}"),
        }
    }
}
