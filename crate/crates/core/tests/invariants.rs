//! Knot-invariance and oracle checks that cut across modules.

use flowloop::braid::{alexander_classical, BraidWord};
use flowloop::template::{build_template, enumerate_orbits, necklace_counts, Template};
use flowloop::verify::{self, Suite, CORPUS};
use flowloop::zhat::{phi, series_from_json, series_to_json, zhat, ZhatOptions};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word(s: &str) -> BraidWord {
    BraidWord::parse(s).unwrap()
}

#[test]
fn alexander_polynomials_are_palindromic() {
    for (name, w) in CORPUS {
        let a = alexander_classical(&word(w), 8).unwrap();
        let d = &a.delta;
        let top = d.max_exp().unwrap();
        for (e, c) in d.terms() {
            assert_eq!(c, &d.coeff(top - e), "{name}");
        }
    }
}

#[test]
fn known_alexander_polynomials() {
    let cases = [
        ("1 1 1", "1 - x + x^2"),
        ("1 -2 1 -2", "1 - 3*x + x^2"),
        ("1 1 1 1 1", "1 - x + x^2 - x^3 + x^4"),
        ("1 -2 1 -2 3 -2 3", "1 - 5*x + 9*x^2 - 5*x^3 + x^4"),
    ];
    for (w, want) in cases {
        assert_eq!(alexander_classical(&word(w), 4).unwrap().delta.render_terms("x"), want, "{w}");
    }
}

#[test]
fn phi_is_a_conjugacy_invariant() {
    for (name, w) in CORPUS {
        let b = word(w);
        let base = phi(&b, 6, ZhatOptions::default()).unwrap();
        for k in 1..b.len() {
            assert_eq!(phi(&b.rotated(k), 6, ZhatOptions::default()).unwrap(), base, "{name} rotated by {k}");
        }
    }
}

#[test]
fn zhat_json_round_trip() {
    for w in ["1 1 1", "1 -2 1 -2", "1 1 -2 1 -2 -2"] {
        let r = zhat(&word(w), 6, ZhatOptions::default()).unwrap();
        let js = serde_json::to_string(&series_to_json(&r.zhat)).unwrap();
        let back = series_from_json(&serde_json::from_str::<Vec<_>>(&js).unwrap(), r.zhat.order()).unwrap();
        assert_eq!(back, r.zhat);
    }
}

#[test]
fn template_dump_round_trips_and_counts_orbits() {
    for (name, w) in CORPUS {
        let t = build_template(&word(w)).unwrap();
        // Branch lines are unnamed in the dump, so compare up to relabelling.
        let back = Template::parse_dump(&t.dump()).unwrap();
        assert_eq!(back.dump(), t.dump(), "{name}");
        assert_eq!(enumerate_orbits(&back, 5).unwrap(), enumerate_orbits(&t, 5).unwrap(), "{name}");
        let orbits = enumerate_orbits(&t, 5).unwrap();
        let counts: Vec<BigInt> = (1..=5u32).map(|d| orbits.iter().filter(|o| o.degree == d).count().into()).collect();
        assert_eq!(counts, necklace_counts(&t, 5), "{name}");
    }
}

#[test]
fn full_verify_suite_passes() {
    let checks = verify::run(Suite::All);
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).map(ToString::to_string).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn braid_words_round_trip_through_text(
        letters in prop::collection::vec((1i32..=4, prop::bool::ANY), 1..10),
        extra in 0usize..2,
    ) {
        let letters: Vec<i32> = letters.into_iter().map(|(i, s)| if s { i } else { -i }).collect();
        let n = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap() + 1 + extra;
        let b = BraidWord::new(n, letters).unwrap();
        prop_assert_eq!(BraidWord::parse(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn positive_two_strand_torus_knots_match_alexander(k in 0usize..4) {
        let b = BraidWord::new(2, vec![1; 2 * k + 1]).unwrap();
        let p = phi(&b, 6, ZhatOptions::default()).unwrap();
        prop_assert_eq!(p.at_q_one(), alexander_classical(&b, 12).unwrap().inv_delta);
    }
}
