mod common;

use altlines::evenline::{closed_form_disc, even_family};
use altlines::quadform::{decide_strong_field, decide_via_local_global, is_valid_uc};
use altlines::quarticline::{case1_identities, case2_identities, nofixed_resolvent, QuarticParams};
use altlines::ratcore::rat::is_squarefree;
use altlines::ratcore::{discriminant_t, format_rat, int, parse_rat, rat, Mobius, Rat, RatPoly, TPoly};
use num_traits::Zero;
use proptest::prelude::*;

use common::*;

fn poly(max_deg: usize, h: i64) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-h..=h, 1..=max_deg + 1).prop_map(|c| RatPoly::from_ints(&c))
}

fn nonconst(max_deg: usize, h: i64) -> impl Strategy<Value = RatPoly> {
    poly(max_deg, h).prop_filter("degree ≥ 1", |p| p.degree().is_some_and(|d| d >= 1))
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn mobius() -> impl Strategy<Value = Mobius> {
    (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4)
        .prop_filter_map("invertible", |(a, b, c, d)| Mobius::from_ints(a, b, c, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_laws_hold(f in nonconst(4, 9), g in nonconst(4, 9), h in poly(2, 5)) {
        prop_assert_eq!(resultant_laws(&f, &g, &h), Ok(()));
    }

    #[test]
    fn resolvent_shares_discriminant(c in prop::collection::vec(-12i64..=12, 4), lead in 1i64..=3) {
        let mut c = c;
        c.push(lead);
        prop_assert!(resolvent_disc_equal(&RatPoly::from_ints(&c)));
    }

    #[test]
    fn sqrt_round_trips(f in poly(5, 20)) {
        let f = if f.coeff(0).is_zero() { &f + &RatPoly::from_ints(&[1]) } else { f };
        prop_assert!(sqrt_round_trip(&f));
    }

    #[test]
    fn sqrt_over_t(p in nonconst(3, 6), q in nonconst(2, 6)) {
        let s = discriminant_t(&TPoly::line(&p, &q)).unwrap();
        let sq = &s * &s;
        prop_assert!(sq.sqrt().is_some_and(|r| r == s || r == -&s));
    }

    #[test]
    fn gl2_actions_commute(p in nonconst(4, 6), q in poly(3, 6), g in mobius(), h in mobius(), l in mobius()) {
        prop_assert!(gl2_commutes(&p, &q, &g, &h, &l));
    }

    #[test]
    fn rational_strings_round_trip(x in small_rat()) {
        prop_assert_eq!(parse_rat(&format_rat(&x)).unwrap(), x);
    }

    #[test]
    fn strong_field_decisions_agree(m in -400i64..=400) {
        prop_assume!(m != 0 && m != 1 && is_squarefree(m));
        prop_assert_eq!(decide_strong_field(m).unwrap(), decide_via_local_global(m).unwrap());
    }

    #[test]
    fn case_one_identities(p in small_rat(), q in small_rat(), r in small_rat(), s in small_rat()) {
        if let Ok(rep) = case1_identities(&p, &q, &r, &s) {
            prop_assert!(rep.all_pass(), "{:?}", rep.checks);
        }
    }

    #[test]
    fn case_two_identities(u in small_rat(), c in small_rat()) {
        if let Ok(rep) = case2_identities(&u, &c) {
            prop_assert!(rep.all_pass(), "{:?}", rep.checks);
        }
    }

    #[test]
    fn no_fixed_point_resolvent(a in small_rat(), b in small_rat()) {
        if let Ok(rep) = nofixed_resolvent(&a, &b) {
            prop_assert!(rep.all_pass());
        }
    }

    #[test]
    fn weak_line_discriminant(k in -10i64..=10, m in -10i64..=10) {
        if let Ok(pr) = QuarticParams::from_km(int(k), int(m)) {
            let disc = discriminant_t(&TPoly::line(&pr.p(), &pr.q())).unwrap();
            let s = pr.disc_cubic();
            prop_assert_eq!(disc, (&s * &s).scale(&(&pr.c * &pr.c)));
        }
    }
}

#[test]
fn even_closed_forms() {
    for n in (4..=14).step_by(2) {
        let fam = even_family(n).unwrap();
        assert_eq!(discriminant_t(&TPoly::line(&fam.p, &fam.q)).unwrap(), closed_form_disc(n), "n = {n}");
    }
}

#[test]
fn dedekind_patterns_of_quintic_are_even() {
    let (good, odd) = dedekind_even(&seed5(), 10_000);
    assert!(good > 1000);
    assert!(odd.is_empty(), "odd patterns at {odd:?}");
}

#[test]
fn strong_pairs_are_valid() {
    for m in [-1i64, -2, -5, -6, -10] {
        let (u, c) = altlines::quadform::represent_minus_one(m).unwrap();
        assert!(is_valid_uc(&u, &c), "m = {m}");
    }
}
