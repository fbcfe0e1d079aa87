//! Quartic lines.
//!
//! Weak lines `X⁴ − 2kX² − 8mX + k² − T(X³ + kX + m)` over ℚ, the polynomial
//! identities behind the two excluded ramification cases, the split
//! resolvent of the "no fixed point" configuration, and strong lines over
//! imaginary quadratic fields built from `q(u, c) = −1`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galoisid::{cubic_resolvent_t, quartic_group, QuarticGroup};
use crate::quadform::q_form;
use crate::ratcore::linalg::{solve, Solution};
use crate::ratcore::{
    discriminant_t, int, rat, rat_sqrt, rational_roots, resultant_t, Field, Poly, QuadElem, QuadPoly, Rat, RatPoly,
    RatTPoly, RootFind, TPoly,
};

/// `(k, m, c)` with `c² = −4k³ − 27m² ≠ 0`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuarticParams {
    pub k: Rat,
    pub m: Rat,
    pub c: Rat,
}

fn cubic_disc(k: &Rat, m: &Rat) -> Rat {
    int(-4) * k * k * k - int(27) * m * m
}

impl QuarticParams {
    pub fn new(k: Rat, m: Rat, c: Rat) -> Result<Self> {
        let d = cubic_disc(&k, &m);
        if d.is_zero() {
            return Err(Error::NotSeparable);
        }
        if &c * &c != d {
            return Err(Error::Precondition("c² ≠ −4k³ − 27m²".into()));
        }
        Ok(QuarticParams { k, m, c })
    }

    /// Finds `c ≥ 0` when `−4k³ − 27m²` is a nonzero square.
    pub fn from_km(k: Rat, m: Rat) -> Result<Self> {
        let d = cubic_disc(&k, &m);
        if d.is_zero() {
            return Err(Error::NotSeparable);
        }
        let c = rat_sqrt(&d).ok_or_else(|| Error::Precondition("−4k³ − 27m² is not a square".into()))?;
        QuarticParams::new(k, m, c)
    }

    pub fn p(&self) -> RatPoly {
        let (k, m) = (&self.k, &self.m);
        RatPoly::new(vec![k * k, int(-8) * m, int(-2) * k, int(0), int(1)])
    }

    pub fn q(&self) -> RatPoly {
        RatPoly::new(vec![self.m.clone(), self.k.clone(), int(0), int(1)])
    }

    /// Whether `Q = X³ + kX + m` is irreducible over ℚ. When it is not, the
    /// resolvent of `P − TQ` has a root in ℚ(T) and the line is only V₄.
    pub fn cubic_irreducible(&self) -> Result<bool> {
        Ok(rational_roots(&self.q())?.is_empty())
    }

    /// `T³ + 16kT + 64m`.
    pub fn disc_cubic(&self) -> RatPoly {
        RatPoly::new(vec![int(64) * &self.m, int(16) * &self.k, int(0), int(1)])
    }
}

/// A weak line with its certificate.
#[derive(Clone, PartialEq, Debug)]
pub struct WeakLine {
    pub params: QuarticParams,
    pub p: RatPoly,
    pub q: RatPoly,
    /// `c·(T³ + 16kT + 64m)`.
    pub sqrt_disc: RatPoly,
}

/// Replays `P = R² − 2mSU`, `4Q = −2RS + 2kSU + mU²`, `S² + 2RU − kU² = 0`
/// for `R = x² − k`, `S = −2x`, `U = −2` (the chart `y = 1`).
pub fn conic_identities(params: &QuarticParams) -> bool {
    let (k, m) = (&params.k, &params.m);
    let r = RatPoly::new(vec![-k.clone(), int(0), int(1)]);
    let s = RatPoly::from_ints(&[0, -2]);
    let u = RatPoly::from_ints(&[-2]);
    let c = |x: &Rat| RatPoly::new(vec![x.clone()]);
    let p = &(&r * &r) - &(&(&s * &u) * &c(&(int(2) * m)));
    let q4 = &(&(&(&r * &s) * &c(&int(-2))) + &(&(&s * &u) * &c(&(int(2) * k)))) + &(&(&u * &u) * &c(m));
    let conic = &(&(&s * &s) + &(&(&r * &u) * &c(&int(2)))) - &(&(&u * &u) * &c(k));
    p == params.p() && q4 == params.q().scale(&int(4)) && conic.is_zero()
}

pub fn weak_line(params: &QuarticParams) -> Result<WeakLine> {
    let (p, q) = (params.p(), params.q());
    let disc = discriminant_t(&TPoly::line(&p, &q))?;
    let cub = params.disc_cubic();
    let expect = (&cub * &cub).scale(&(&params.c * &params.c));
    if disc != expect {
        return Err(Error::Internal("Δ(P − TQ) ≠ (−4k³ − 27m²)(T³ + 16kT + 64m)²".into()));
    }
    if !conic_identities(params) {
        return Err(Error::Internal("conic parametrization identities fail".into()));
    }
    Ok(WeakLine { sqrt_disc: cub.scale(&params.c), params: params.clone(), p, q })
}

/// All integer `(k, m)` with `|k|, |m| ≤ h` and `−4k³ − 27m²` a nonzero square.
pub fn enumerate_params(h: i64) -> Vec<QuarticParams> {
    let mut out = Vec::new();
    for k in -h..=h {
        for m in -h..=h {
            if let Ok(p) = QuarticParams::from_km(int(k), int(m)) {
                out.push(p);
            }
        }
    }
    out
}

/// Group verdicts over a range of integer specializations.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Survey {
    pub a4: Vec<i64>,
    pub other: Vec<(i64, String)>,
    /// Reducible specializations or vanishing discriminant.
    pub degenerate: Vec<i64>,
}

impl Survey {
    pub fn a4_fraction(&self) -> f64 {
        let n = self.a4.len() + self.other.len();
        if n == 0 { 0.0 } else { self.a4.len() as f64 / n as f64 }
    }
}

pub fn survey<F: RootFind>(p: &Poly<F>, q: &Poly<F>, ts: impl IntoIterator<Item = i64>) -> Result<Survey> {
    let mut s = Survey { a4: vec![], other: vec![], degenerate: vec![] };
    for t in ts {
        let f = p - &q.scale(&F::from_int(p.ctx(), t));
        match quartic_group(&f)? {
            QuarticGroup::A4 => s.a4.push(t),
            QuarticGroup::Reducible => s.degenerate.push(t),
            g => s.other.push((t, g.to_string())),
        }
    }
    Ok(s)
}

/// Arithmetic in `ℚ[Y]/(Y³ + kY + m)`.
#[derive(Clone, PartialEq, Debug)]
pub struct CubicAlgebra {
    modulus: RatPoly,
}

impl CubicAlgebra {
    pub fn new(k: &Rat, m: &Rat) -> Self {
        CubicAlgebra { modulus: RatPoly::new(vec![m.clone(), k.clone(), int(0), int(1)]) }
    }

    pub fn reduce(&self, a: &RatPoly) -> RatPoly {
        a.rem(&self.modulus).expect("modulus is nonzero")
    }

    pub fn mul(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        self.reduce(&(a * b))
    }

    pub fn y(&self) -> RatPoly {
        RatPoly::x(&())
    }

    /// Inverse by solving the 3×3 multiplication system.
    pub fn inv(&self, a: &RatPoly) -> Option<RatPoly> {
        let cols: Vec<RatPoly> =
            (0..3).map(|i| self.mul(a, &RatPoly::monomial(Rat::one(), i))).collect();
        let mat: Vec<Vec<Rat>> = (0..3).map(|r| cols.iter().map(|c| c.coeff(r)).collect()).collect();
        match solve(&(), &mat, &[int(1), int(0), int(0)], 3) {
            Solution::Unique(x) => Some(RatPoly::new(x)),
            _ => None,
        }
    }
}

/// Outcome of the resolvent ansatz over the cubic algebra.
#[derive(Clone, PartialEq, Debug)]
pub enum WeakFieldReport {
    /// The resolvent has the root `a(Y)·T + b(Y)`.
    Split { a: RatPoly, b: RatPoly },
    Inconclusive(String),
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `E[t][j]`: coefficient of `Tᵗ bʲ` in `g(aT + b)` over the algebra.
fn ansatz_table(alg: &CubicAlgebra, g: &RatTPoly, a: &RatPoly) -> Vec<Vec<RatPoly>> {
    let deg = g.deg_x().unwrap_or(0);
    let tmax = g.deg_t() + deg + 1;
    let mut e = vec![vec![RatPoly::zero(&()); deg + 1]; tmax];
    let mut apow = vec![RatPoly::one(&())];
    for i in 1..=deg {
        let next = alg.mul(&apow[i - 1], a);
        apow.push(next);
    }
    for i in 0..=deg {
        let gi = g.x_coeff(i);
        for j in 0..=i {
            let lift = apow[i - j].scale(&int(binom(i, j)));
            for (s, c) in gi.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = s + i - j;
                e[t][j] = &e[t][j] + &lift.scale(c);
            }
        }
    }
    e
}

/// Evaluates the resolvent at `aT + b` in the algebra; zero iff a root.
pub fn check_split_root(alg: &CubicAlgebra, g: &RatTPoly, a: &RatPoly, b: &RatPoly) -> bool {
    let e = ansatz_table(alg, g, a);
    e.iter().all(|row| {
        let mut acc = RatPoly::zero(&());
        let mut bp = RatPoly::one(&());
        for c in row {
            acc = &acc + &alg.mul(c, &bp);
            bp = alg.mul(&bp, b);
        }
        alg.reduce(&acc).is_zero()
    })
}

/// Tries a root `Y·T + b` of the cubic resolvent of `P − TQ`, with `b`
/// solved from the first row of the table that is linear in `b`.
pub fn weak_field_check(params: &QuarticParams) -> Result<WeakFieldReport> {
    let alg = CubicAlgebra::new(&params.k, &params.m);
    let g = cubic_resolvent_t(&TPoly::line(&params.p(), &params.q()))?;
    let a = alg.y();
    let e = ansatz_table(&alg, &g, &a);
    for row in e.iter().rev() {
        let row: Vec<RatPoly> = row.iter().map(|c| alg.reduce(c)).collect();
        if row.iter().all(RatPoly::is_zero) {
            continue;
        }
        if row.iter().skip(2).any(|c| !c.is_zero()) {
            return Ok(WeakFieldReport::Inconclusive("top nonvanishing row is not linear in b".into()));
        }
        if row[1].is_zero() {
            return Ok(WeakFieldReport::Inconclusive("leading coefficient a = Y is not a root".into()));
        }
        let Some(inv) = alg.inv(&row[1]) else {
            return Ok(WeakFieldReport::Inconclusive("linear coefficient is a zero divisor".into()));
        };
        let b = alg.mul(&-&row[0], &inv);
        return Ok(if check_split_root(&alg, &g, &a, &b) {
            WeakFieldReport::Split { a, b }
        } else {
            WeakFieldReport::Inconclusive("solved b does not annihilate every row".into())
        });
    }
    Ok(WeakFieldReport::Inconclusive("resolvent vanishes identically".into()))
}

/// `Res_Y(Y³ + kY + m, X − a(Y)t − b(Y))`: the characteristic polynomial of
/// the specialized root, to be compared with the specialized resolvent.
pub fn root_charpoly(params: &QuarticParams, a: &RatPoly, b: &RatPoly, t: &Rat) -> Result<RatPoly> {
    let r = &a.scale(t) + b;
    let f = TPoly::from_x_poly(&RatPoly::new(vec![params.m.clone(), params.k.clone(), int(0), int(1)]));
    let mut h: Vec<RatPoly> = (0..3).map(|i| RatPoly::new(vec![-r.coeff(i)])).collect();
    h[0] = &h[0] + &RatPoly::x(&());
    while h.len() > 1 && h.last().is_some_and(RatPoly::is_zero) {
        h.pop();
    }
    resultant_t(&f, &TPoly::from_x_coeffs(&(), h))
}

/// Pass/fail record for one identity suite.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<(String, bool)>,
}

impl IdentityReport {
    fn push(&mut self, name: &str, ok: bool) {
        self.checks.push((name.to_string(), ok));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn quadric(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Rat {
    int(3) * a * a - int(10) * a * d + int(3) * d * d + b * b + int(10) * b * c + int(9) * c * c
}

/// `(a, b, c, d)` from the Segre parameters `(p, q, r, s)`.
pub fn segre_abcd(p: &Rat, q: &Rat, r: &Rat, s: &Rat) -> [Rat; 4] {
    let e = rat(1, 8);
    [
        (p * r + int(3) * q * s) * &e,
        (int(9) * r * s - p * q) * &e,
        (p * q - r * s) * &e,
        (int(3) * p * r + q * s) * &e,
    ]
}

/// Numerator and denominator of the rational map ramified to order 3 at `±√−3`.
pub fn case1_map(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> (RatPoly, RatPoly) {
    let cube = RatPoly::from_ints(&[0, -9, 0, 1]);
    let one_minus = RatPoly::from_ints(&[1, 0, -1]);
    let l1 = RatPoly::new(vec![b.clone(), a.clone()]);
    let l2 = RatPoly::new(vec![d.clone(), c.clone()]);
    let num = &(&cube * &l1) - &(&one_minus * &l2).scale(&int(9));
    let den = &(-&(&cube * &l2)) - &(&one_minus * &l1).scale(&int(3));
    (num, den)
}

/// `(A, B, C)` with `f′ = (x² + 3)²(Ax² + Bx + C)/den²`.
pub fn case1_abc(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> [Rat; 3] {
    [
        int(3) * a * a - a * d + b * c + int(9) * c * c,
        int(6) * a * b + int(18) * c * d,
        int(-3) * a * d + int(3) * b * b + int(3) * b * c + int(9) * d * d,
    ]
}

fn sq(p: &RatPoly) -> RatPoly {
    p * p
}

/// The first excluded case at a sample `(p, q, r, s)`.
pub fn case1_identities(p: &Rat, q: &Rat, r: &Rat, s: &Rat) -> Result<IdentityReport> {
    let [a, b, c, d] = segre_abcd(p, q, r, s);
    if (&a * &d - &b * &c).is_zero() {
        return Err(Error::Precondition("degenerate sample: ad − bc = 0".into()));
    }
    if (p * p + int(3) * s * s).is_zero() {
        return Err(Error::Precondition("degenerate sample: p² + 3s² = 0".into()));
    }
    let mut rep = IdentityReport { checks: vec![] };
    rep.push("quadric", quadric(&a, &b, &c, &d).is_zero());
    rep.push(
        "segre",
        [&b + int(9) * &c, &b + &c, int(3) * &d - &a, int(3) * &a - &d] == [p * q, r * s, p * r, q * s],
    );
    rep.push(
        "quadric factorization",
        quadric(&a, &b, &c, &d) == (&b + int(9) * &c) * (&b + &c) - (int(3) * &d - &a) * (int(3) * &a - &d),
    );
    // B² − 4AC, both on the quadric and at the raw sample
    let bac = |a: &Rat, b: &Rat, c: &Rat, d: &Rat| {
        let [ca, cb, cc] = case1_abc(a, b, c, d);
        &cb * &cb - int(4) * &ca * &cc == int(12) * (a * d - b * c) * quadric(a, b, c, d)
    };
    rep.push("B^2-4AC", bac(&a, &b, &c, &d) && bac(p, q, r, s));
    let (num, den) = case1_map(&a, &b, &c, &d);
    let [ca, cb, cc] = case1_abc(&a, &b, &c, &d);
    let wr = &(&num.derivative() * &den) - &(&num * &den.derivative());
    let x2p3 = RatPoly::from_ints(&[3, 0, 1]);
    rep.push("derivative", wr == &sq(&x2p3) * &RatPoly::new(vec![cc, cb, ca]));
    let disc = discriminant_t(&TPoly::line(&num, &den))?;
    let rt = RatPoly::new(vec![
        int(9) * p * r * r * r - int(9) * p * q * q * r + int(27) * q * r * r * s - int(3) * q * q * q * s,
        int(9) * p * q * r * r - p * q * q * q - int(9) * r * r * r * s + int(9) * q * q * r * s,
    ]);
    let t2p3 = RatPoly::from_ints(&[3, 0, 1]);
    let k = rat(-27, 64) * (p * p + int(3) * s * s) * (p * p + int(3) * s * s);
    rep.push("discriminant", disc == (&sq(&t2p3) * &sq(&rt)).scale(&k));
    Ok(rep)
}

/// `a + b·y` with `y² = d`, for residues at `√d` with `d` arbitrary.
#[derive(Clone, PartialEq, Debug)]
struct Rad {
    a: Rat,
    b: Rat,
}

impl Rad {
    fn mul(&self, o: &Rad, d: &Rat) -> Rad {
        Rad { a: &self.a * &o.a + &self.b * &o.b * d, b: &self.a * &o.b + &self.b * &o.a }
    }
    fn add(&self, o: &Rad) -> Rad {
        Rad { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn scale(&self, k: &Rat) -> Rad {
        Rad { a: &self.a * k, b: &self.b * k }
    }
    /// `1/y = y/d`.
    fn inv_y(d: &Rat) -> Rad {
        Rad { a: int(0), b: d.recip() }
    }
}

fn eval_rad(p: &RatPoly, y: &Rad, d: &Rat) -> Rad {
    p.coeffs().iter().rev().fold(Rad { a: int(0), b: int(0) }, |acc, c| acc.mul(y, d).add(&Rad { a: c.clone(), b: int(0) }))
}

/// Residue at `x = √d` of `N(x)/(x² − d)³`, as an element of `ℚ(√d)` in
/// the basis `1, √d`, via the Taylor expansion at `√d`.
fn residue_at_root(n: &RatPoly, d: &Rat) -> Rad {
    let y = Rad { a: int(0), b: int(1) };
    let n0 = eval_rad(n, &y, d);
    let n1 = eval_rad(&n.derivative(), &y, d);
    let n2 = eval_rad(&n.derivative().derivative(), &y, d).scale(&rat(1, 2));
    // (x + y)⁻³ = (2y)⁻³ (1 + ε/2y)⁻³
    let iy = Rad::inv_y(d);
    let i2y = iy.scale(&rat(1, 2));
    let i2y2 = i2y.mul(&i2y, d);
    let i2y3 = i2y2.mul(&i2y, d);
    let inner = n2.add(&n1.mul(&i2y, d).scale(&int(-3))).add(&n0.mul(&i2y2, d).scale(&int(6)));
    inner.mul(&i2y3, d)
}

/// Numerator `N` of the degree-4 map with the `(2,2)` fiber at ∞.
pub fn case2_numerator(u: &Rat, c: &Rat) -> RatPoly {
    let d = q_form(u, c);
    RatPoly::new(vec![
        (u - c) * &d * &d,
        int(-2) * c * c * &d,
        int(-2) * u * &d,
        int(-2) * u * u,
    ])
}

/// `(12u² − 8cu + 12c²)T² + (−15u³ + 19cu² − 21c²u + 9c³)T + (3u⁴ − 2cu³)`.
pub fn case2_r<F: Field>(u: &F, c: &F) -> Poly<F> {
    let ctx = u.ctx();
    let k = |n: i64| F::from_int(&ctx, n);
    let (u2, c2) = (u.mul_ref(u), c.mul_ref(c));
    let (u3, c3) = (u2.mul_ref(u), c2.mul_ref(c));
    let t2 = k(12).mul_ref(&u2).sub_ref(&k(8).mul_ref(&c.mul_ref(u))).add_ref(&k(12).mul_ref(&c2));
    let t1 = k(-15)
        .mul_ref(&u3)
        .add_ref(&k(19).mul_ref(&c.mul_ref(&u2)))
        .sub_ref(&k(21).mul_ref(&c2.mul_ref(u)))
        .add_ref(&k(9).mul_ref(&c3));
    let t0 = k(3).mul_ref(&u3.mul_ref(u)).sub_ref(&k(2).mul_ref(&c.mul_ref(&u3)));
    Poly::from_coeffs(&ctx, vec![t0, t1, t2])
}

/// The second excluded case at a sample `(u, c)`.
pub fn case2_identities(u: &Rat, c: &Rat) -> Result<IdentityReport> {
    let d = q_form(u, c);
    if u == c || d.is_zero() {
        return Err(Error::Precondition("degenerate sample: u = c or q(u, c) = 0".into()));
    }
    let mut rep = IdentityReport { checks: vec![] };
    rep.push("q decomposition", d == (u + c) * (u + c) + int(2) * (u - c) * (u - c));
    let cond = |a: &Rat, b: &Rat, cc: &Rat| int(3) * &d * &d * a * a - int(2) * &d * a * cc - &d * b * b + int(3) * cc * cc;
    let a = u / &d;
    rep.push("residue condition", cond(&a, &int(1), c).is_zero());
    // residue formula at the sample and at a perturbed (a, b, c)
    let residue_ok = |a: &Rat, b: &Rat, cc: &Rat| {
        let s = RatPoly::new(vec![cc.clone(), b.clone(), a.clone()]);
        let res = residue_at_root(&sq(&s), &d);
        let expect = Rad { a: int(0), b: cond(a, b, cc) / (int(16) * &d * &d * &d) };
        res == expect
    };
    rep.push("residue", residue_ok(&a, &int(1), c) && residue_ok(&(&a + int(1)), &int(2), &(c - int(1))));
    let n = case2_numerator(u, c);
    let xd = RatPoly::new(vec![-d.clone(), int(0), int(1)]);
    let den = sq(&xd);
    let s = RatPoly::new(vec![c.clone(), int(1), a.clone()]);
    let lhs = &(&(&n.derivative() * &den) - &(&n * &den.derivative())) * &(&xd * &sq(&xd));
    let rhs = (&sq(&den) * &sq(&s)).scale(&(int(2) * &d * &d));
    rep.push("antiderivative", lhs == rhs);
    let disc = discriminant_t(&TPoly::line(&n, &den))?;
    let r = case2_r(u, c);
    let uc = u - c;
    let k = int(-16) * &d * &d * &d * &uc * &uc * &uc * &uc;
    rep.push("discriminant", disc == sq(&r).scale(&k));
    Ok(rep)
}

/// The resolvent split behind the "no fixed point" configuration.
pub fn nofixed_resolvent(a: &Rat, b: &Rat) -> Result<IdentityReport> {
    if a.is_zero() || (a + b).is_zero() {
        return Err(Error::Precondition("degenerate (a, b): need a ≠ 0 and a + b ≠ 0".into()));
    }
    let num = RatPoly::new(vec![b.clone(), int(-2) * b, -a.clone()]);
    let den = RatPoly::new(vec![-b.clone(), int(-2) * a, a.clone()]);
    if num.gcd(&den).degree() != Some(0) {
        return Err(Error::Precondition("numerator and denominator share a factor".into()));
    }
    let p = sq(&num);
    let q = &sq(&num) - &sq(&den);
    let res = cubic_resolvent_t(&TPoly::line(&p, &q))?;
    let a4 = a * a * a * a;
    let scaled = TPoly::from_x_coeffs(&(), res.x_coeffs().iter().map(|c| c.scale(&a4)).collect());
    let tp = |c0: Vec<Rat>| RatPoly::new(c0);
    let f1 = TPoly::from_x_coeffs(&(), vec![tp(vec![int(2) * b]), tp(vec![a.clone()])]);
    let f2 = TPoly::from_x_coeffs(&(), vec![tp(vec![int(2) * b, int(-4) * (a + b)]), tp(vec![a.clone()])]);
    let f3 = TPoly::from_x_coeffs(
        &(),
        vec![tp(vec![int(-2) * a * b - int(4) * b * b, int(4) * b * (a + b)]), tp(vec![a * a])],
    );
    let prod = f1.mul(&f2).mul(&f3);
    let mut rep = IdentityReport { checks: vec![] };
    rep.push("resolvent factorization", scaled == prod);
    Ok(rep)
}

/// `(m, u, c)` with `q(u, c) = −1` and `u ≠ c` in ℚ(√m).
#[derive(Clone, PartialEq, Debug)]
pub struct StrongParams {
    pub m: i64,
    pub u: QuadElem,
    pub c: QuadElem,
}

impl StrongParams {
    pub fn new(m: i64, u: QuadElem, c: QuadElem) -> Result<Self> {
        if u.m() != m || c.m() != m {
            return Err(Error::FieldMismatch(u.m(), c.m()));
        }
        if u == c {
            return Err(Error::Precondition("u = c makes the discriminant vanish".into()));
        }
        if q_form(&u, &c) != QuadElem::rational(m, int(-1)) {
            return Err(Error::Precondition("q(u, c) ≠ −1".into()));
        }
        Ok(StrongParams { m, u, c })
    }
}

/// A strong line over ℚ(√m) with its certificate.
#[derive(Clone, PartialEq, Debug)]
pub struct StrongLine {
    pub params: StrongParams,
    pub p: QuadPoly,
    pub q: QuadPoly,
    pub sqrt_disc: QuadPoly,
    pub survey: Survey,
}

/// `(X² + 1)²` and `−2u²X³ − 2udX² − 2c²dX + (u − c)d²` with `d = −1`.
pub fn strong_pair(sp: &StrongParams) -> (QuadPoly, QuadPoly) {
    let m = sp.m;
    let e = |r: i64| QuadElem::rational(m, int(r));
    let d = e(-1);
    let (u, c) = (&sp.u, &sp.c);
    let p = QuadPoly::from_coeffs(&m, vec![e(1), e(0), e(2), e(0), e(1)]);
    let q = QuadPoly::from_coeffs(
        &m,
        vec![
            &(u - c) * &(&d * &d),
            &(&e(-2) * &(c * c)) * &d,
            &(&e(-2) * u) * &d,
            &e(-2) * &(u * u),
        ],
    );
    (p, q)
}

/// Builds the line and certifies `Δ(P − TQ) = 16(u − c)⁴·(T³R(1/T))²`.
pub fn strong_line(sp: &StrongParams) -> Result<StrongLine> {
    let (p, q) = strong_pair(sp);
    let m = sp.m;
    let disc = discriminant_t(&TPoly::line(&p, &q))?;
    let r = case2_r(&sp.u, &sp.c);
    let rev = QuadPoly::from_coeffs(&m, vec![QuadElem::rational(m, int(0)), r.coeff(2), r.coeff(1), r.coeff(0)]);
    let uc = &sp.u - &sp.c;
    let uc2 = &uc * &uc;
    let expect = (&rev * &rev).scale(&(&QuadElem::rational(m, int(16)) * &(&uc2 * &uc2)));
    if disc != expect {
        return Err(Error::Internal("strong-line discriminant differs from its closed form".into()));
    }
    let sqrt_disc = disc.sqrt().ok_or_else(|| Error::Internal("Δ(P − TQ) is not a square over ℚ(√m)[T]".into()))?;
    let s = survey(&p, &q, 1..=8)?;
    Ok(StrongLine { params: sp.clone(), p, q, sqrt_disc, survey: s })
}

/// Roots of the form `aT + b` (`a, b ∈ F`) of a polynomial in `X` over `F[T]`.
pub fn linear_roots<F: RootFind>(g: &TPoly<F>) -> Result<Vec<(F, F)>> {
    let ctx = g.ctx().clone();
    let deg = g.deg_x().unwrap_or(0);
    let top = (0..=deg).map(|i| g.x_coeff(i).degree().map_or(0, |d| d + i)).max().unwrap_or(0);
    // leading-order equation in a
    let lead: Vec<F> = (0..=deg)
        .map(|i| {
            let gi = g.x_coeff(i);
            match gi.degree() {
                Some(d) if d + i == top => gi.coeff(d),
                _ => F::zero_in(&ctx),
            }
        })
        .collect();
    let mut cands = F::field_roots(&Poly::from_coeffs(&ctx, lead))?;
    if !cands.iter().any(F::vanishes) {
        cands.push(F::zero_in(&ctx));
    }
    let mut out = Vec::new();
    for a in cands {
        // coefficient of Tᵗ in g(aT + Y) as a polynomial in Y
        let mut rows: Vec<Vec<F>> = vec![vec![F::zero_in(&ctx); deg + 1]; g.deg_t() + deg + 1];
        for i in 0..=deg {
            let gi = g.x_coeff(i);
            for j in 0..=i {
                let mut coef = F::from_int(&ctx, binom(i, j));
                for _ in 0..(i - j) {
                    coef = coef.mul_ref(&a);
                }
                for (s, c) in gi.coeffs().iter().enumerate() {
                    let t = s + i - j;
                    rows[t][j] = rows[t][j].add_ref(&c.mul_ref(&coef));
                }
            }
        }
        let mut common = Poly::zero(&ctx);
        for row in rows {
            common = common.gcd(&Poly::from_coeffs(&ctx, row));
        }
        if common.is_zero() {
            return Err(Error::Precondition("polynomial vanishes identically".into()));
        }
        for b in F::field_roots(&common)? {
            out.push((a.clone(), b));
        }
    }
    Ok(out)
}

pub fn strong_resolvent_linear_roots(line: &StrongLine) -> Result<Vec<(QuadElem, QuadElem)>> {
    linear_roots(&cubic_resolvent_t(&TPoly::line(&line.p, &line.q))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::represent_minus_one;

    #[test]
    fn stated_weak_line() {
        let pr = QuarticParams::from_km(int(-3), int(1)).unwrap();
        assert_eq!(pr.c, int(9));
        let wl = weak_line(&pr).unwrap();
        assert_eq!(wl.p, RatPoly::from_ints(&[9, -8, 6, 0, 1]));
        assert_eq!(wl.q, RatPoly::from_ints(&[1, -3, 0, 1]));
        assert_eq!(wl.sqrt_disc, RatPoly::from_ints(&[64, -48, 0, 1]).scale(&int(9)));
        let s = survey(&wl.p, &wl.q, 0..=10).unwrap();
        assert!(s.other.is_empty(), "{s:?}");
        assert!(QuarticParams::from_km(int(0), int(0)).is_err());
        assert!(QuarticParams::new(int(-3), int(1), int(8)).is_err());
    }

    #[test]
    fn enumeration() {
        let ps = enumerate_params(3);
        assert!(ps.iter().any(|p| p.k == int(-3) && p.m == int(1) && p.c == int(9)));
        for p in &ps {
            assert!((&p.c * &p.c + int(4) * &p.k * &p.k * &p.k + int(27) * &p.m * &p.m).is_zero());
            assert!(!p.c.is_zero());
        }
    }

    #[test]
    fn reducible_cubic_gives_klein_line() {
        let red = QuarticParams::from_km(int(-7), int(6)).unwrap();
        assert!(!red.cubic_irreducible().unwrap());
        let s = survey(&red.p(), &red.q(), 1..=3).unwrap();
        assert!(s.other.iter().all(|(_, g)| g == "V4") && s.a4.is_empty());
        assert!(QuarticParams::from_km(int(-3), int(1)).unwrap().cubic_irreducible().unwrap());
    }

    #[test]
    fn weak_field_split_and_cross_check() {
        let pr = QuarticParams::from_km(int(-3), int(1)).unwrap();
        let WeakFieldReport::Split { a, b } = weak_field_check(&pr).unwrap() else {
            panic!("expected a split resolvent")
        };
        assert_eq!(a, RatPoly::x(&()));
        // regression: the recovered constant term
        let alg = CubicAlgebra::new(&pr.k, &pr.m);
        let g = cubic_resolvent_t(&TPoly::line(&pr.p(), &pr.q())).unwrap();
        assert!(check_split_root(&alg, &g, &a, &b));
        for t in [0i64, 2, -5] {
            let chi = root_charpoly(&pr, &a, &b, &int(t)).unwrap();
            assert_eq!(chi, g.eval_t(&int(t)), "t = {t}");
        }
        assert!(!check_split_root(&alg, &g, &a, &RatPoly::from_ints(&[1])));
    }

    #[test]
    fn case1_sample() {
        let one = int(1);
        assert_eq!(segre_abcd(&one, &one, &one, &one), [rat(1, 2), int(1), int(0), rat(1, 2)]);
        let rep = case1_identities(&one, &int(2), &int(-1), &rat(1, 3)).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
    }

    #[test]
    fn case2_sample() {
        let rep = case2_identities(&int(1), &int(2)).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert!(case2_identities(&int(1), &int(1)).is_err());
    }

    #[test]
    fn nofixed() {
        assert!(nofixed_resolvent(&int(1), &int(1)).unwrap().all_pass());
        assert!(nofixed_resolvent(&int(2), &int(3)).unwrap().all_pass());
        assert!(nofixed_resolvent(&int(1), &int(-1)).is_err());
    }

    #[test]
    fn strong_line_over_gaussian_field() {
        let (u, c) = represent_minus_one(-1).unwrap();
        let sp = StrongParams::new(-1, u, c).unwrap();
        let line = strong_line(&sp).unwrap();
        assert_eq!(line.survey.a4, (1..=8).collect::<Vec<_>>());
        assert!(strong_resolvent_linear_roots(&line).unwrap().is_empty());
        let i = QuadElem::sqrt_m(-1);
        let bad = StrongParams::new(-1, i.clone(), i);
        assert!(bad.is_err());
    }

    #[test]
    fn linear_roots_find_weak_split_over_q() {
        // the no-fixed-point resolvent splits over ℚ(T) into linear factors
        let (a, b) = (int(1), int(1));
        let num = RatPoly::new(vec![b.clone(), int(-2) * &b, -a.clone()]);
        let den = RatPoly::new(vec![-b.clone(), int(-2) * &a, a.clone()]);
        let p = sq(&num);
        let q = &sq(&num) - &sq(&den);
        let g = cubic_resolvent_t(&TPoly::line(&p, &q)).unwrap();
        assert_eq!(linear_roots(&g).unwrap().len(), 3);
    }
}
