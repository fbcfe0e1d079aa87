//! Even-degree families built from the cover `ℙ¹ → ℙ¹` ramified to order
//! `n − 1` over two points and to order 3 over a third.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::galoisid::{certify_contains_an, certify_equals_an, Verdict};
use crate::mestre::{scale_of, LineRecipe};
use crate::monodromy::{riemann_hurwitz, BranchData};
use crate::ratcore::rat::{factor_small, squarefree_part_of_product};
use crate::ratcore::{
    discriminant_t, int, line_left, mobius_right, resultant, Mobius, Point, Rat, RatPoly, RatTPoly,
    TPoly,
};

/// The solution `(a, b, c, d)` spanning
/// `a + b = c + d`, `na + (n−1)b = c`, `na + (n−2)b = 0`.
pub fn canonical_cover_coeffs(n: i64) -> (i64, i64, i64, i64) {
    (n - 2, -n, -n, n - 2)
}

/// `Xⁿ − nXⁿ⁻¹ − T(−nX + (n−2)²)` together with its certified data.
#[derive(Clone, PartialEq, Debug)]
pub struct EvenFamily {
    pub n: usize,
    pub p: RatPoly,
    pub q: RatPoly,
    pub disc_closed_form: RatPoly,
    pub base_field_a: BigInt,
}

fn pow_i(b: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(b), e)
}

fn check_even(n: usize) -> Result<()> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Precondition(format!("degree must be even and ≥ 4, got {n}")));
    }
    Ok(())
}

pub fn family_pair(n: usize) -> (RatPoly, RatPoly) {
    let ni = n as i64;
    let mut pc = vec![0i64; n + 1];
    pc[n] = 1;
    pc[n - 1] = -ni;
    let q = RatPoly::from_ints(&[(ni - 2) * (ni - 2), -ni]);
    (RatPoly::from_ints(&pc), q)
}

/// `(−1)^{n/2+1}(n−1)^{n−1}nⁿ·T^{n−2}·(T − (n−2)^{n−2})²`.
pub fn closed_form_disc(n: usize) -> RatPoly {
    let ni = n as i64;
    let mut k = pow_i(ni - 1, n - 1) * pow_i(ni, n);
    if (n / 2 + 1) % 2 == 1 {
        k = -k;
    }
    let lin = RatPoly::new(vec![-Rat::from_integer(pow_i(ni - 2, n - 2)), int(1)]);
    (&lin * &lin).shift_up(n - 2).scale(&Rat::from_integer(k))
}

/// Square-free part of `(−1)^{n/2+1}(n−1)^{n−1}nⁿ`.
pub fn base_field_even(n: usize) -> Result<BigInt> {
    check_even(n)?;
    let mut exps: Vec<(u64, u64)> = Vec::new();
    for (m, e) in [(n as u64 - 1, n as u64 - 1), (n as u64, n as u64)] {
        for (p, k) in factor_small(m) {
            exps.push((p, k as u64 * e));
        }
    }
    Ok(squarefree_part_of_product((n / 2 + 1) % 2 == 1, &exps))
}

/// Builds the family and checks every closed form against exact arithmetic.
pub fn even_family(n: usize) -> Result<EvenFamily> {
    check_even(n)?;
    let ni = n as i64;
    let (p, q) = family_pair(n);
    let disc = discriminant_t(&TPoly::line(&p, &q))?;
    let closed = closed_form_disc(n);
    if disc != closed {
        return Err(Error::Internal(format!("Δ(P − TQ) differs from the closed form at n = {n}")));
    }
    let res = resultant(&p, &q)?;
    let expect = Rat::from_integer(-4 * BigInt::from(ni - 1) * pow_i(ni - 2, 2 * n - 2));
    if res != expect {
        return Err(Error::Internal(format!("Res(P, Q) differs from −4(n−1)(n−2)^(2n−2) at n = {n}")));
    }
    let w = &(&p.derivative() * &q) - &(&p * &q.derivative());
    let sq = RatPoly::from_ints(&[-(ni - 2), 1]);
    let expect_w = (&sq * &sq).shift_up(n - 2).scale(&int(-ni * (ni - 1)));
    if w != expect_w {
        return Err(Error::Internal(format!("P′Q − PQ′ differs from its closed form at n = {n}")));
    }
    Ok(EvenFamily { n, p, q, disc_closed_form: closed, base_field_a: base_field_even(n)? })
}

impl EvenFamily {
    pub fn line(&self) -> RatTPoly {
        TPoly::line(&self.p, &self.q)
    }

    /// Square root of the discriminant in ℚ[T], if one exists.
    pub fn disc_sqrt(&self) -> Option<RatPoly> {
        self.disc_closed_form.sqrt()
    }

    /// Exact-division checks of the three prescribed fibers, plus the
    /// Riemann–Hurwitz count.
    pub fn check_ramification(&self) -> Result<()> {
        let n = self.n;
        let ni = n as i64;
        let zero_fiber = fiber_multiplicity(&self.p, &self.q, n, &Point::int(0), &Point::int(0))?;
        let inf_fiber = fiber_multiplicity(&self.p, &self.q, n, &Point::Infinity, &Point::Infinity)?;
        let t3 = Point::Finite(Rat::from_integer(pow_i(ni - 2, n - 2)));
        let three = fiber_multiplicity(&self.p, &self.q, n, &Point::int(ni - 2), &t3)?;
        if zero_fiber != n - 1 || inf_fiber != n - 1 || three != 3 {
            return Err(Error::Internal(format!(
                "fiber multiplicities ({zero_fiber}, {inf_fiber}, {three}) at n = {n}"
            )));
        }
        if !riemann_hurwitz(&branch_data(n), 0, 0) {
            return Err(Error::Internal("Riemann–Hurwitz count fails".into()));
        }
        Ok(())
    }
}

/// Ramification types `(n−1, 1)`, `(n−1, 1)`, `(3, 1, …, 1)`.
pub fn branch_data(n: usize) -> BranchData {
    let mut three = vec![3];
    three.resize(n - 2, 1);
    BranchData::new(n, vec![vec![n - 1, 1], vec![n - 1, 1], three]).expect("well-formed")
}

/// Multiplicity of `src` in the fiber of `[P : Q]` over `dst`.
///
/// For `src = ∞` this is the degree deficit of the fiber polynomial.
pub fn fiber_multiplicity(p: &RatPoly, q: &RatPoly, n: usize, src: &Point, dst: &Point) -> Result<usize> {
    let (u, v) = dst.homogeneous();
    let fib = &p.scale(&v) - &q.scale(&u);
    if fib.is_zero() {
        return Err(Error::Precondition("P and Q are proportional".into()));
    }
    match src {
        Point::Infinity => Ok(n - fib.deg0()),
        Point::Finite(a) => {
            let lin = RatPoly::linear_root(a);
            let mut k = 0;
            let mut g = fib;
            while let Some(h) = g.div_exact(&lin) {
                g = h;
                k += 1;
            }
            Ok(k)
        }
    }
}

/// Six points: the cover sends `src[i]` to `dst[i]` with prescribed order.
#[derive(Clone, PartialEq, Debug)]
pub struct RamTriple {
    pub src: [Point; 3],
    pub dst: [Point; 3],
}

impl RamTriple {
    pub fn new(src: [Point; 3], dst: [Point; 3]) -> Result<Self> {
        for pts in [&src, &dst] {
            if pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2] {
                return Err(Error::Precondition("points of a triple must be pairwise distinct".into()));
            }
        }
        Ok(RamTriple { src, dst })
    }

    pub fn standard() -> Self {
        let s = [Point::int(0), Point::Infinity, Point::int(1)];
        RamTriple { src: s.clone(), dst: s }
    }
}

/// The Möbius map sending `(0, ∞, 1)` to `(p, q, r)`.
pub fn mobius_from_standard(pts: &[Point; 3]) -> Result<Mobius> {
    let (p1, p2) = pts[0].homogeneous();
    let (q1, q2) = pts[1].homogeneous();
    let (r1, r2) = pts[2].homogeneous();
    // r = λ·q + μ·p
    let det = &q1 * &p2 - &p1 * &q2;
    if det.is_zero() {
        return Err(Error::DegenerateMobius);
    }
    let lam = (&r1 * &p2 - &p1 * &r2) / &det;
    let mu = (&q1 * &r2 - &r1 * &q2) / &det;
    Mobius::new(&lam * &q1, &mu * &p1, &lam * &q2, &mu * &p2)
}

/// The degree-`n` cover with the ramification prescribed by `triple`,
/// as the pair `(P, Q)` of the map `x ↦ P(x)/Q(x)`.
pub fn transported_cover(n: usize, triple: &RamTriple) -> Result<(RatPoly, RatPoly)> {
    if n < 3 {
        return Err(Error::Precondition(format!("degree must be ≥ 3, got {n}")));
    }
    let ni = n as i64;
    let (a, b, c, d) = canonical_cover_coeffs(ni);
    let mut pc = vec![0i64; n + 1];
    pc[n] = a;
    pc[n - 1] = b;
    let p0 = RatPoly::from_ints(&pc);
    let q0 = RatPoly::from_ints(&[d, c]);
    let alpha = mobius_from_standard(&triple.src)?;
    let beta = mobius_from_standard(&triple.dst)?;
    let inv = alpha.inverse();
    let p1 = mobius_right(&p0, &inv, n)?;
    let q1 = mobius_right(&q0, &inv, n)?;
    let (p, q) = line_left(&p1, &q1, &beta);
    let norm = if p.degree() == Some(n) { p.lc().cloned() } else { q.lc().cloned() };
    let norm = norm.ok_or(Error::ZeroPolynomial)?;
    Ok((p.scale(&norm.recip()), q.scale(&norm.recip())))
}

/// Checks the three fiber conditions of a transported cover.
pub fn check_transported(n: usize, triple: &RamTriple, p: &RatPoly, q: &RatPoly) -> Result<bool> {
    let want = [n - 1, n - 1, 3];
    for i in 0..3 {
        if fiber_multiplicity(p, q, n, &triple.src[i], &triple.dst[i])? < want[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Options for [`build_line_even`].
#[derive(Clone, Debug)]
pub struct EvenOptions {
    pub prime_bound: u64,
    /// Base specializations are tried in the order 1, −1, 2, −2, … up to this.
    pub max_base: i64,
}

impl Default for EvenOptions {
    fn default() -> Self {
        EvenOptions { prime_bound: 2000, max_base: 200 }
    }
}

/// An `Aₙ`-over-ℚ line `P − (t₀ + scale·N)Q` for even `n` with `n − 1` square.
pub fn build_line_even(n: usize, opts: &EvenOptions) -> Result<LineRecipe> {
    check_even(n)?;
    let r = ((n - 1) as u64).sqrt();
    if r * r != (n - 1) as u64 {
        return Err(Error::Precondition(format!("n − 1 = {} is not a square", n - 1)));
    }
    let fam = even_family(n)?;
    let sqrt_disc = fam.disc_sqrt().ok_or_else(|| Error::Internal("closed form is not a square".into()))?;
    let sqrt_disc = if sqrt_disc.lc().is_some_and(|c| c.is_negative()) { -sqrt_disc } else { sqrt_disc };
    for t0 in (1..=opts.max_base).flat_map(|k| [k, -k]) {
        let t = int(t0);
        if sqrt_disc.eval(&t).is_zero() {
            continue;
        }
        let f = &fam.p - &fam.q.scale(&t);
        if certify_equals_an(&f, opts.prime_bound)?.verdict != Verdict::EqualsAn {
            continue;
        }
        let Some(witness) = certify_contains_an(&f, opts.prime_bound)? else { continue };
        return Ok(LineRecipe {
            n,
            p: fam.p.clone(),
            q: fam.q.clone(),
            r: None,
            sqrt_disc,
            scale: scale_of(&witness),
            witness,
            base_t: t,
        });
    }
    Err(Error::BudgetExhausted(format!(
        "no base specialization |t| ≤ {} certified with primes ≤ {}",
        opts.max_base, opts.prime_bound
    )))
}

/// Degrees `n ≤ bound` for which the closed form is a square in ℚ[T].
pub fn square_degrees(bound: usize) -> Vec<usize> {
    (4..=bound)
        .step_by(2)
        .filter(|&n| closed_form_disc(n).sqrt().is_some())
        .collect()
}
