//! Certificate files: a line plus everything needed to re-check it.
//!
//! All exact values are strings (`"num/den"`), polynomials are coefficient
//! lists from the constant term up, and elements of ℚ(√m) are `[a, b]` for
//! `a + b√m`. Re-verification recomputes every evidence item from the line
//! alone and compares.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffpoly::is_prime;
use num_traits::Zero;

use crate::galoisid::{bertrand_prime, check_witness, cubic_resolvent_t, cycle_type_sample, AnWitness};
use crate::mestre::{identity_holds, scale_of, LineRecipe};
use crate::quarticline::{
    check_split_root, conic_identities, strong_pair, survey, CubicAlgebra, QuarticParams, StrongLine, StrongParams,
    Survey, WeakFieldReport, WeakLine,
};
use crate::ratcore::{discriminant_t, format_rat, parse_rat, QuadElem, QuadPoly, RatPoly, TPoly};

/// Specializations surveyed for weak quartic lines.
pub const WEAK_SURVEY: std::ops::RangeInclusive<i64> = -10..=10;
/// Specializations surveyed for strong quartic lines.
pub const STRONG_SURVEY: std::ops::RangeInclusive<i64> = 1..=8;

pub const SCHEMA: u32 = 1;

/// Kind of line certified.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Odd,
    Even,
    QuarticWeak,
    QuarticStrong,
}

/// Coefficient field of the line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldTag {
    Rational(String),
    Quad { quad: i64 },
}

impl FieldTag {
    pub fn q() -> Self {
        FieldTag::Rational("Q".into())
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct LineJson {
    #[serde(rename = "P")]
    pub p: Vec<String>,
    #[serde(rename = "Q")]
    pub q: Vec<String>,
    pub field: FieldTag,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    pub ell: usize,
    pub p: u64,
    pub q: u64,
    pub r: Vec<u64>,
    /// Factorization degrees of the base member modulo each witness prime.
    pub patterns: Vec<(u64, Vec<usize>)>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FamilyEvidence {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<Vec<String>>,
    pub sqrt_disc: Vec<String>,
    pub base_t: String,
    pub scale: String,
    pub witness: WitnessJson,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct WeakEvidence {
    pub k: String,
    pub m: String,
    pub c: String,
    pub sqrt_disc: Vec<String>,
    pub survey: Survey,
    /// `a(Y)·T + b(Y)` in ℚ[Y]/(Y³ + kY + m), when found.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub resolvent_root: Option<(Vec<String>, Vec<String>)>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct StrongEvidence {
    pub m: i64,
    pub u: [String; 2],
    pub c: [String; 2],
    pub sqrt_disc: Vec<[String; 2]>,
    pub survey: Survey,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    Family(FamilyEvidence),
    QuarticWeak(WeakEvidence),
    QuarticStrong(StrongEvidence),
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub kind: Kind,
    pub line: LineJson,
    pub evidence: Evidence,
    pub tool_version: String,
    pub rng_seed: u64,
}

/// One row of the verification table.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(name: &str, ok: bool, detail: impl Into<String>) -> Check {
    Check { name: name.to_string(), ok, detail: detail.into() }
}

pub fn rat_poly_json(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rat).collect()
}

pub fn rat_poly_from_json(v: &[String]) -> Result<RatPoly> {
    Ok(RatPoly::new(v.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?))
}

pub fn quad_json(x: &QuadElem) -> [String; 2] {
    [format_rat(x.a()), format_rat(x.b())]
}

pub fn quad_from_json(m: i64, v: &[String; 2]) -> Result<QuadElem> {
    QuadElem::new(m, parse_rat(&v[0])?, parse_rat(&v[1])?)
}

fn quad_poly_json(p: &QuadPoly) -> Vec<[String; 2]> {
    p.coeffs().iter().map(quad_json).collect()
}

fn quad_poly_from_json(m: i64, v: &[[String; 2]]) -> Result<QuadPoly> {
    QuadPoly::try_new(m, v.iter().map(|c| quad_from_json(m, c)).collect::<Result<_>>()?)
}

/// Quad coefficients are stored as `a + b√m` pairs inside the line too.
fn quad_line_json(p: &QuadPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| format!("{} {}", format_rat(c.a()), format_rat(c.b()))).collect()
}

fn quad_line_from_json(m: i64, v: &[String]) -> Result<QuadPoly> {
    let mut out = Vec::new();
    for s in v {
        let (a, b) = s
            .split_once(' ')
            .ok_or_else(|| Error::Parse { offset: 0, msg: format!("expected \"a b\" pair, got {s:?}") })?;
        out.push(QuadElem::new(m, parse_rat(a)?, parse_rat(b)?)?);
    }
    QuadPoly::try_new(m, out)
}

fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Certificate for an odd or even family recipe.
pub fn family_certificate(kind: Kind, recipe: &LineRecipe, rng_seed: u64) -> Result<Certificate> {
    let f0 = recipe.member(0);
    let w = &recipe.witness;
    let mut patterns = Vec::new();
    for p in w.primes() {
        let pat = cycle_type_sample(&f0, p)?
            .ok_or_else(|| Error::Internal(format!("witness prime {p} has bad reduction")))?;
        if !patterns.iter().any(|(q, _)| *q == p) {
            patterns.push((p, pat.degrees.clone()));
        }
    }
    Ok(Certificate {
        schema: SCHEMA,
        kind,
        line: LineJson { p: rat_poly_json(&recipe.p), q: rat_poly_json(&recipe.q), field: FieldTag::q() },
        evidence: Evidence::Family(FamilyEvidence {
            r: recipe.r.as_ref().map(rat_poly_json),
            sqrt_disc: rat_poly_json(&recipe.sqrt_disc),
            base_t: format_rat(&recipe.base_t),
            scale: recipe.scale.to_string(),
            witness: WitnessJson { ell: w.ell, p: w.p, q: w.q, r: w.r.clone(), patterns },
        }),
        tool_version: tool_version(),
        rng_seed,
    })
}

pub fn weak_certificate(line: &WeakLine, survey: &Survey, root: &WeakFieldReport) -> Certificate {
    let pr = &line.params;
    Certificate {
        schema: SCHEMA,
        kind: Kind::QuarticWeak,
        line: LineJson { p: rat_poly_json(&line.p), q: rat_poly_json(&line.q), field: FieldTag::q() },
        evidence: Evidence::QuarticWeak(WeakEvidence {
            k: format_rat(&pr.k),
            m: format_rat(&pr.m),
            c: format_rat(&pr.c),
            sqrt_disc: rat_poly_json(&line.sqrt_disc),
            survey: survey.clone(),
            resolvent_root: match root {
                WeakFieldReport::Split { a, b } => Some((rat_poly_json(a), rat_poly_json(b))),
                WeakFieldReport::Inconclusive(_) => None,
            },
        }),
        tool_version: tool_version(),
        rng_seed: 0,
    }
}

pub fn strong_certificate(line: &StrongLine) -> Certificate {
    let sp = &line.params;
    Certificate {
        schema: SCHEMA,
        kind: Kind::QuarticStrong,
        line: LineJson { p: quad_line_json(&line.p), q: quad_line_json(&line.q), field: FieldTag::Quad { quad: sp.m } },
        evidence: Evidence::QuarticStrong(StrongEvidence {
            m: sp.m,
            u: quad_json(&sp.u),
            c: quad_json(&sp.c),
            sqrt_disc: quad_poly_json(&line.sqrt_disc),
            survey: line.survey.clone(),
        }),
        tool_version: tool_version(),
        rng_seed: 0,
    }
}

pub fn to_json(c: &Certificate) -> String {
    serde_json::to_string_pretty(c).expect("certificate serializes") + "\n"
}

pub fn from_json(s: &str) -> Result<Certificate> {
    serde_json::from_str(s).map_err(|e| Error::Parse { offset: e.column(), msg: e.to_string() })
}

/// Re-checks every evidence item; never short-circuits.
pub fn verify(cert: &Certificate) -> Result<Vec<Check>> {
    let mut out = vec![check("schema", cert.schema == SCHEMA, format!("schema {}", cert.schema))];
    match (&cert.kind, &cert.evidence) {
        (Kind::Odd | Kind::Even, Evidence::Family(ev)) => verify_family(cert, ev, &mut out)?,
        (Kind::QuarticWeak, Evidence::QuarticWeak(ev)) => verify_weak(cert, ev, &mut out)?,
        (Kind::QuarticStrong, Evidence::QuarticStrong(ev)) => verify_strong(cert, ev, &mut out)?,
        _ => out.push(check("kind", false, "evidence does not match kind")),
    }
    Ok(out)
}

fn verify_family(cert: &Certificate, ev: &FamilyEvidence, out: &mut Vec<Check>) -> Result<()> {
    let p = rat_poly_from_json(&cert.line.p)?;
    let q = rat_poly_from_json(&cert.line.q)?;
    let n = p.deg0();
    out.push(check("field", cert.line.field == FieldTag::q(), "line over Q"));
    out.push(check("P monic integral", p.is_monic() && p.is_integral(), format!("degree {n}")));
    out.push(check("Q integral, deg < n", q.is_integral() && q.degree().is_some_and(|d| d < n), ""));
    let parity = match cert.kind {
        Kind::Odd => n % 2 == 1,
        _ => n % 2 == 0,
    };
    out.push(check("degree parity", parity, format!("n = {n}")));
    if let Some(r) = &ev.r {
        let r = rat_poly_from_json(r)?;
        out.push(check("PQ' - P'Q = R^2", identity_holds(&p, &q, &r), ""));
    }
    let s = rat_poly_from_json(&ev.sqrt_disc)?;
    let disc = discriminant_t(&TPoly::line(&p, &q))?;
    out.push(check("disc(P - TQ) = sqrt_disc^2", disc == &s * &s, format!("deg_T {}", disc.deg0())));
    let t0 = parse_rat(&ev.base_t)?;
    let f0 = &p - &q.scale(&t0);
    out.push(check("base member integral", t0.is_integer() && f0.is_integral(), format!("t0 = {}", ev.base_t)));
    out.push(check("base disc nonzero", !s.eval(&t0).is_zero(), ""));
    let w = AnWitness { ell: ev.witness.ell, p: ev.witness.p, q: ev.witness.q, r: ev.witness.r.clone() };
    let primes_ok = w.primes().iter().all(|&x| is_prime(x)) && w.ell == bertrand_prime(n);
    out.push(check("witness primes", primes_ok, format!("ell={} p={} q={} r={:?}", w.ell, w.p, w.q, w.r)));
    let mut pats_ok = true;
    for (pr, degs) in &ev.witness.patterns {
        let got = cycle_type_sample(&f0, *pr)?;
        pats_ok &= got.is_some_and(|g| &g.degrees == degs);
    }
    let listed = w.primes().iter().all(|x| ev.witness.patterns.iter().any(|(p, _)| p == x));
    out.push(check("factor patterns", pats_ok && listed, ""));
    out.push(check("witness certifies A_n", primes_ok && check_witness(&f0, &w)?, ""));
    let scale_ok = ev.scale == scale_of(&w).to_string();
    out.push(check("scale = product of witness primes", scale_ok, format!("scale {}", ev.scale)));
    Ok(())
}

fn verify_weak(cert: &Certificate, ev: &WeakEvidence, out: &mut Vec<Check>) -> Result<()> {
    let p = rat_poly_from_json(&cert.line.p)?;
    let q = rat_poly_from_json(&cert.line.q)?;
    let params = QuarticParams::new(parse_rat(&ev.k)?, parse_rat(&ev.m)?, parse_rat(&ev.c)?);
    out.push(check("c^2 = -4k^3 - 27m^2", params.is_ok(), format!("k={} m={} c={}", ev.k, ev.m, ev.c)));
    let Ok(params) = params else { return Ok(()) };
    out.push(check("line from (k, m)", params.p() == p && params.q() == q, ""));
    out.push(check("X^3 + kX + m irreducible", params.cubic_irreducible()?, ""));
    out.push(check("conic identities", conic_identities(&params), ""));
    let s = rat_poly_from_json(&ev.sqrt_disc)?;
    let disc = discriminant_t(&TPoly::line(&p, &q))?;
    let closed = params.disc_cubic().scale(&params.c);
    out.push(check("disc(P - TQ) = sqrt_disc^2", disc == &s * &s && s == closed, ""));
    let again = survey(&p, &q, WEAK_SURVEY)?;
    out.push(check("specialization survey", again == ev.survey, format!("{} A4 of {}", again.a4.len(), WEAK_SURVEY.count())));
    if let Some((a, b)) = &ev.resolvent_root {
        let alg = CubicAlgebra::new(&params.k, &params.m);
        let g = cubic_resolvent_t(&TPoly::line(&p, &q))?;
        let ok = check_split_root(&alg, &g, &rat_poly_from_json(a)?, &rat_poly_from_json(b)?);
        out.push(check("resolvent root in cubic algebra", ok, ""));
    }
    Ok(())
}

fn verify_strong(cert: &Certificate, ev: &StrongEvidence, out: &mut Vec<Check>) -> Result<()> {
    let m = ev.m;
    out.push(check("field", cert.line.field == FieldTag::Quad { quad: m }, format!("Q(sqrt({m}))")));
    let p = quad_line_from_json(m, &cert.line.p)?;
    let q = quad_line_from_json(m, &cert.line.q)?;
    let sp = StrongParams::new(m, quad_from_json(m, &ev.u)?, quad_from_json(m, &ev.c)?);
    out.push(check("q(u, c) = -1, u != c", sp.is_ok(), ""));
    let Ok(sp) = sp else { return Ok(()) };
    let (p2, q2) = strong_pair(&sp);
    out.push(check("line from (u, c)", p == p2 && q == q2, ""));
    let s = quad_poly_from_json(m, &ev.sqrt_disc)?;
    let disc = discriminant_t(&TPoly::line(&p, &q))?;
    out.push(check("disc(P - TQ) = sqrt_disc^2", disc == &s * &s, ""));
    let again = survey(&p, &q, STRONG_SURVEY)?;
    out.push(check("specialization survey", again == ev.survey, format!("{} A4 of 8", again.a4.len())));
    out.push(check("some specialization has group A4", !again.a4.is_empty(), ""));
    Ok(())
}

/// `true` when every check passed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mestre::{build_line_odd, OddOptions};
    use crate::quarticline::{weak_field_check, weak_line};
    use crate::ratcore::int;

    fn odd() -> Certificate {
        let opts = OddOptions { seed_poly: Some(RatPoly::from_ints(&[-2, -18, -28, -5, 4, 1])), ..Default::default() };
        family_certificate(Kind::Odd, &build_line_odd(5, &opts).unwrap(), 1).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let c = odd();
        let text = to_json(&c);
        assert!(text.contains("\"schema\": 1"));
        assert_eq!(from_json(&text).unwrap(), c);
        assert!(all_pass(&verify(&c).unwrap()));
    }

    #[test]
    fn tampering_is_detected() {
        let mut c = odd();
        c.line.q[0] = "-8".into();
        let checks = verify(&c).unwrap();
        assert!(checks.iter().any(|k| k.name == "disc(P - TQ) = sqrt_disc^2" && !k.ok));
        let mut c = odd();
        if let Evidence::Family(ev) = &mut c.evidence {
            ev.scale = "834".into();
        }
        assert!(!all_pass(&verify(&c).unwrap()));
        let mut c = odd();
        c.kind = Kind::QuarticStrong;
        assert!(!all_pass(&verify(&c).unwrap()));
    }

    #[test]
    fn weak_certificate_verifies() {
        let params = QuarticParams::from_km(int(-3), int(1)).unwrap();
        let line = weak_line(&params).unwrap();
        let s = survey(&line.p, &line.q, WEAK_SURVEY).unwrap();
        let cert = weak_certificate(&line, &s, &weak_field_check(&params).unwrap());
        let checks = verify(&from_json(&to_json(&cert)).unwrap()).unwrap();
        assert!(all_pass(&checks), "{checks:?}");
        assert!(checks.iter().any(|k| k.name == "resolvent root in cubic algebra"));
    }

    #[test]
    fn rationals_are_strings() {
        assert_eq!(rat_poly_json(&RatPoly::new(vec![crate::ratcore::rat(-1, 2), int(3)])), ["-1/2", "3"]);
        assert!(from_json("{\"schema\": 1, \"kind\": \"odd\"}").is_err());
    }
}
