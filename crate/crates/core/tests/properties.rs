//! Property suites over ranges of knots: normal-form round trips,
//! uniqueness of the canonical forms, the sub-tuple/expansion bijection,
//! slope integrality and evenness, and the mirror slope negation.

use bridgeslope_core::{
    allowable_subtuples, analyze, calibrate, enumerate_expansions, even_expansion,
    positive_expansion, valid_knots, BigInt, Expansion, Rational, TwoBridgeKnot,
};
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn round_trip_alpha_up_to_500() {
    for knot in valid_knots(500) {
        let value = knot.fraction();
        let pe = positive_expansion(&knot);
        assert!(pe.is_positive_canonical(), "{knot}");
        assert_eq!(pe.eval().unwrap(), value, "{knot} positive");
        let ee = even_expansion(&knot);
        assert!(ee.is_even(), "{knot}");
        assert_eq!(ee.eval().unwrap(), value, "{knot} even");
    }
}

#[test]
fn bijection_alpha_up_to_199() {
    for knot in valid_knots(199) {
        let pe = positive_expansion(&knot);
        let subs = allowable_subtuples(&pe);
        let set = enumerate_expansions(&knot).unwrap();
        assert_eq!(subs.len(), set.len(), "{knot}");
    }
}

#[test]
fn enumerated_sets_contain_even_expansion() {
    for knot in valid_knots(99) {
        let set = enumerate_expansions(&knot).unwrap();
        let even = even_expansion(&knot);
        assert!(set.expansions().contains(&even), "{knot}");
        for e in set.expansions() {
            assert!(e.is_strict(), "{knot}: {e}");
            assert_eq!(e.eval().unwrap(), knot.fraction(), "{knot}: {e}");
        }
        // No duplicates: the set is sorted.
        for w in set.expansions().windows(2) {
            assert!(w[0] < w[1], "{knot}");
        }
    }
}

#[test]
fn slopes_integral_and_even_alpha_up_to_199() {
    let cal = calibrate().unwrap();
    let two = BigInt::from(2);
    for knot in valid_knots(199) {
        let report = analyze(&knot, &cal).unwrap();
        for s in &report.slope_multiset {
            assert!((s % &two).is_zero(), "{knot}: odd slope {s}");
        }
        assert_eq!(report.slope_multiset.len(), report.classes.len());
    }
}

#[test]
fn mirror_negates_slope_multiset_alpha_up_to_99() {
    let cal = calibrate().unwrap();
    for knot in valid_knots(99) {
        let slopes = analyze(&knot, &cal).unwrap().slope_multiset;
        let mut mirrored: Vec<BigInt> = analyze(&knot.mirror(), &cal)
            .unwrap()
            .slope_multiset
            .iter()
            .map(|s| -s)
            .collect();
        mirrored.sort();
        assert_eq!(slopes, mirrored, "{knot}");
    }
}

/// Independent bounded search for all-positive expansions with last entry
/// at least 2: depth-first over positive entries, following exact remainders.
/// Used only to confirm uniqueness of the canonical positive form.
fn positive_expansions_by_search(knot: &TwoBridgeKnot, max_len: usize) -> Vec<Vec<BigInt>> {
    fn rec(y: Rational, prefix: &mut Vec<BigInt>, max_len: usize, out: &mut Vec<Vec<BigInt>>) {
        if prefix.len() == max_len {
            return;
        }
        // y in (0, 1]; every positive entry n with 1/y - n in [0, 1) is
        // floor(1/y); n = 1/y - 1 with remainder 1 is also explored since a
        // tail may absorb it. Try both n and n - 1 when legal.
        let inv = y.recip();
        let fl = inv.floor().to_integer();
        for n in [fl.clone(), &fl - BigInt::from(1)] {
            if n < BigInt::from(1) {
                continue;
            }
            let rem = &inv - Rational::from(n.clone());
            if rem < Rational::zero() || rem > Rational::from(BigInt::from(1)) {
                continue;
            }
            prefix.push(n.clone());
            if rem.is_zero() {
                if n >= BigInt::from(2) {
                    out.push(prefix.clone());
                }
            } else {
                rec(rem, prefix, max_len, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(knot.fraction(), &mut Vec::new(), max_len, &mut out);
    out
}

#[test]
fn positive_form_unique_alpha_up_to_99() {
    for knot in valid_knots(99) {
        let pe = positive_expansion(&knot);
        let found = positive_expansions_by_search(&knot, pe.len() + 3);
        assert_eq!(found.len(), 1, "{knot}: {found:?}");
        assert_eq!(found[0], pe.entries().to_vec(), "{knot}");
    }
}

#[test]
fn even_form_unique_alpha_up_to_99() {
    use bridgeslope_core::brute_force_expansions;
    for knot in valid_knots(99) {
        let pe = positive_expansion(&knot);
        let sum: BigInt = pe.entries().iter().sum();
        let max_len = (TryInto::<u64>::try_into(sum).unwrap() as usize) + pe.len();
        let max_abs: u64 = pe
            .entries()
            .iter()
            .map(|m| TryInto::<u64>::try_into(m.clone()).unwrap())
            .max()
            .unwrap()
            + 2;
        let all = brute_force_expansions(&knot, max_len, max_abs).unwrap();
        let evens: Vec<&Expansion> = all
            .expansions()
            .iter()
            .filter(|e| e.is_even())
            .collect();
        assert_eq!(evens.len(), 1, "{knot}");
        assert_eq!(evens[0], &even_expansion(&knot), "{knot}");
    }
}

proptest! {
    /// Any expansion that evaluates without a zero denominator produces an
    /// exact rational, and re-evaluating is deterministic.
    #[test]
    fn eval_is_deterministic(r in -3i64..=3, entries in proptest::collection::vec(-9i64..=9, 0..8)) {
        let e = Expansion::from_i64(r, &entries);
        let first = e.eval();
        prop_assert_eq!(first, e.eval());
    }

    /// Valid random knots round-trip through both canonical forms.
    #[test]
    fn random_knot_round_trip(alpha_half in 1u64..2000, beta_seed in 1u64..u64::MAX) {
        let alpha = 2 * alpha_half + 1;
        let beta = beta_seed % (alpha - 1) + 1;
        if num_integer::gcd(alpha, beta) == 1 {
            let knot = TwoBridgeKnot::from_u64(alpha, beta).unwrap();
            prop_assert_eq!(positive_expansion(&knot).eval().unwrap(), knot.fraction());
            prop_assert_eq!(even_expansion(&knot).eval().unwrap(), knot.fraction());
        }
    }
}
