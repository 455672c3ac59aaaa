//! Knot-level verdicts and the K(6g-1, 2g) family verifier.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expansion::{even_expansion, positive_expansion, Expansion};
use crate::knot::TwoBridgeKnot;
use crate::subtuple::{
    allowable_subtuples, c_value, surface_classes, Calibration, SubTuple, SurfaceClass,
};

/// Full analysis of one knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotReport {
    pub knot: TwoBridgeKnot,
    pub positive_expansion: Expansion,
    pub even_expansion: Expansion,
    pub classes: Vec<SurfaceClass>,
    pub genus: u64,
    pub fibered: bool,
    pub unique_zero_slope: bool,
    /// Slopes of all classes, sorted; repeats are kept.
    pub slope_multiset: Vec<BigInt>,
}

/// Seifert genus: half the length of the all-even expansion.
pub fn genus(knot: &TwoBridgeKnot) -> Result<u64> {
    let even = even_expansion(knot);
    if !even.len().is_multiple_of(2) {
        return Err(Error::OddEvenExpansionLength {
            alpha: knot.alpha().to_string(),
            beta: knot.beta().to_string(),
            len: even.len(),
        });
    }
    Ok(even.len() as u64 / 2)
}

/// A 2-bridge knot is fibered exactly when its even expansion uses only
/// entries +2 and -2.
pub fn is_fibered(knot: &TwoBridgeKnot) -> bool {
    even_expansion(knot).is_all_plus_minus_two()
}

pub fn analyze(knot: &TwoBridgeKnot, cal: &Calibration) -> Result<KnotReport> {
    let classes = surface_classes(knot, cal)?;
    let mut slope_multiset: Vec<BigInt> = classes.iter().map(|c| c.slope.clone()).collect();
    slope_multiset.sort();
    let zero_count = slope_multiset.iter().filter(|s| s.is_zero()).count();
    Ok(KnotReport {
        knot: knot.clone(),
        positive_expansion: positive_expansion(knot),
        even_expansion: even_expansion(knot),
        classes,
        genus: genus(knot)?,
        fibered: is_fibered(knot),
        unique_zero_slope: zero_count == 1,
        slope_multiset,
    })
}

/// Named checks reproducing the combinatorial premises of the family
/// argument for `K_g = K(6g-1, 2g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub g: BigInt,
    /// Canonical positive expansion equals the (fold-normalized) family
    /// tuple `[2, 1, 2g-1]`.
    pub expansion_matches: bool,
    /// Allowable sub-tuples are exactly (1), (2), (3), (1,3).
    pub subtuples_match: bool,
    /// The four family c-values equal the closed forms
    /// `-2, 1, 1-2g, -1-2g`.
    pub c_values_match: bool,
    /// The four family c-values are pairwise distinct.
    pub c_distinct: bool,
    pub fibered: bool,
    pub genus_is_g: bool,
    pub unique_zero_slope: bool,
    /// Family c-values computed on the canonical expansion, in sub-tuple
    /// order (1), (2), (3), (1,3).
    pub computed_c: Vec<BigInt>,
    /// Closed forms evaluated at g, same order.
    pub expected_c: Vec<BigInt>,
    pub all_passed: bool,
}

impl FamilyReport {
    pub fn checks(&self) -> [(&'static str, bool); 7] {
        [
            ("expansion_matches", self.expansion_matches),
            ("subtuples_match", self.subtuples_match),
            ("c_values_match", self.c_values_match),
            ("c_distinct", self.c_distinct),
            ("fibered", self.fibered),
            ("genus_is_g", self.genus_is_g),
            ("unique_zero_slope", self.unique_zero_slope),
        ]
    }
}

/// Verifies the family premises at one genus parameter.
///
/// `g = 1` is rejected unless `allow_g1` is set; it serves as a negative
/// control. At `g = 1` the family tuple `[2, 1, 1]` folds to `[2, 2]`,
/// merging indices 2 and 3, so the (2)- and (3)-classes coincide and
/// c-distinctness fails.
pub fn verify_family(g: &BigInt, allow_g1: bool, cal: &Calibration) -> Result<FamilyReport> {
    if g < &BigInt::one() || (g.is_one() && !allow_g1) {
        return Err(Error::ParameterError(format!(
            "family parameter g must be at least 2 (got {g}); \
             g = 1 is allowed only as a negative control"
        )));
    }
    let two_g: BigInt = g * 2;
    let alpha = &two_g * 3 - 1;
    let knot = TwoBridgeKnot::new(alpha, two_g.clone())?;
    let report = analyze(&knot, cal)?;

    // Family tuple [2, 1, 2g-1]; at g = 1 the canonical form folds the
    // trailing [..., 1, 1] and indices 2, 3 land on the merged last entry.
    let literal = vec![BigInt::from(2), BigInt::one(), &two_g - 1];
    let folded = literal.last().unwrap().is_one();
    let expected_entries = if folded {
        vec![BigInt::from(2), BigInt::from(2)]
    } else {
        literal
    };
    let expected_pe = Expansion::new(BigInt::zero(), expected_entries);
    let expansion_matches = report.positive_expansion == expected_pe;

    let map_index = |i: usize| if folded && i == 3 { 2 } else { i };
    let nominal: [&[usize]; 4] = [&[1], &[2], &[3], &[1, 3]];
    let computed_c: Vec<BigInt> = nominal
        .iter()
        .map(|ix| {
            let mapped: Vec<usize> = ix.iter().map(|&i| map_index(i)).collect();
            c_value(&SubTuple::new(mapped), &report.positive_expansion)
        })
        .collect::<Result<_>>()?;
    let expected_c = vec![
        BigInt::from(-2),
        BigInt::one(),
        BigInt::one() - &two_g,
        BigInt::from(-1) - &two_g,
    ];
    let c_values_match = computed_c == expected_c;
    let c_distinct = {
        let mut sorted = computed_c.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    };

    let mut expected_subs: Vec<SubTuple> =
        nominal.iter().map(|ix| SubTuple::new(ix.to_vec())).collect();
    expected_subs.sort();
    let mut actual_subs = allowable_subtuples(&report.positive_expansion);
    actual_subs.sort();
    let subtuples_match = actual_subs == expected_subs;

    let genus_is_g = BigInt::from(report.genus) == *g;

    let all_passed = expansion_matches
        && subtuples_match
        && c_values_match
        && c_distinct
        && report.fibered
        && genus_is_g
        && report.unique_zero_slope;

    Ok(FamilyReport {
        g: g.clone(),
        expansion_matches,
        subtuples_match,
        c_values_match,
        c_distinct,
        fibered: report.fibered,
        genus_is_g,
        unique_zero_slope: report.unique_zero_slope,
        computed_c,
        expected_c,
        all_passed,
    })
}

/// A knot whose analysis failed, with the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub knot: TwoBridgeKnot,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub candidates: Vec<KnotReport>,
    pub diagnostics: Vec<Diagnostic>,
}

/// All valid knot parameters with `alpha <= alpha_max`, in `(alpha, beta)`
/// order.
pub fn valid_knots(alpha_max: u64) -> Vec<TwoBridgeKnot> {
    let mut out = Vec::new();
    let mut alpha = 3u64;
    while alpha <= alpha_max {
        for beta in 1..alpha {
            if beta.gcd(&alpha) == 1 {
                out.push(TwoBridgeKnot::from_u64(alpha, beta).expect("valid parameters"));
            }
        }
        alpha += 2;
    }
    out
}

/// Analyzes every valid knot with `alpha <= alpha_max` and keeps those with
/// a unique slope-0 class (and fibered, when required). Failed analyses go
/// to diagnostics, never dropped.
pub fn search_candidates(
    alpha_max: u64,
    require_fibered: bool,
    cal: &Calibration,
) -> SearchOutcome {
    let mut candidates = Vec::new();
    let mut diagnostics = Vec::new();
    for knot in valid_knots(alpha_max) {
        match analyze(&knot, cal) {
            Ok(report) => {
                if report.unique_zero_slope && (!require_fibered || report.fibered) {
                    candidates.push(report);
                }
            }
            Err(error) => diagnostics.push(Diagnostic { knot, error }),
        }
    }
    SearchOutcome { candidates, diagnostics }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subtuple::calibrate;

    #[test]
    fn genus_examples() {
        for ((a, b), want) in [((11u64, 4u64), 2u64), ((3, 1), 1), ((5, 2), 1)] {
            let k = TwoBridgeKnot::from_u64(a, b).unwrap();
            assert_eq!(genus(&k).unwrap(), want, "K({a},{b})");
        }
    }

    #[test]
    fn fibered_examples() {
        assert!(is_fibered(&TwoBridgeKnot::from_u64(11, 4).unwrap()));
        assert!(is_fibered(&TwoBridgeKnot::from_u64(5, 2).unwrap()));
        assert!(!is_fibered(&TwoBridgeKnot::from_u64(7, 2).unwrap()));
    }

    #[test]
    fn analyze_k11_4() {
        let cal = calibrate().unwrap();
        let k = TwoBridgeKnot::from_u64(11, 4).unwrap();
        let r = analyze(&k, &cal).unwrap();
        assert!(r.unique_zero_slope);
        assert!(r.fibered);
        assert_eq!(r.genus, 2);
        assert_eq!(r.classes.len(), 4);
    }

    #[test]
    fn analyze_calibration_knots() {
        let cal = calibrate().unwrap();
        let fig8 = analyze(&TwoBridgeKnot::from_u64(5, 2).unwrap(), &cal).unwrap();
        let want: Vec<BigInt> = [-4i64, 0, 4].iter().map(|&s| BigInt::from(s)).collect();
        assert_eq!(fig8.slope_multiset, want);
        assert!(fig8.unique_zero_slope);

        let trefoil = analyze(&TwoBridgeKnot::from_u64(3, 1).unwrap(), &cal).unwrap();
        assert_eq!(trefoil.classes.len(), 2);
        assert!(trefoil.unique_zero_slope);
    }

    #[test]
    fn family_passes_small_g() {
        let cal = calibrate().unwrap();
        for g in 2u64..=10 {
            let r = verify_family(&BigInt::from(g), false, &cal).unwrap();
            assert!(r.all_passed, "g = {g}: {r:?}");
        }
    }

    #[test]
    fn family_g50_c_values() {
        let cal = calibrate().unwrap();
        let r = verify_family(&BigInt::from(50), false, &cal).unwrap();
        assert!(r.all_passed);
        let want: Vec<BigInt> = [-2i64, 1, -99, -101].iter().map(|&v| v.into()).collect();
        assert_eq!(r.computed_c, want);
    }

    #[test]
    fn family_rejects_g1_without_flag() {
        let cal = calibrate().unwrap();
        assert!(matches!(
            verify_family(&BigInt::one(), false, &cal),
            Err(Error::ParameterError(_))
        ));
        assert!(matches!(
            verify_family(&BigInt::zero(), true, &cal),
            Err(Error::ParameterError(_))
        ));
    }

    #[test]
    fn family_g1_fails_c_distinct() {
        let cal = calibrate().unwrap();
        let r = verify_family(&BigInt::one(), true, &cal).unwrap();
        assert!(!r.c_distinct);
        assert!(!r.all_passed);
        // Folding [2,1,1] -> [2,2] merges indices 2 and 3.
        assert!(r.expansion_matches);
        assert_eq!(r.computed_c[1], r.computed_c[2]);
    }

    #[test]
    fn search_includes_expected_knots() {
        let cal = calibrate().unwrap();
        let found = search_candidates(11, true, &cal);
        assert!(found.diagnostics.is_empty());
        assert!(found
            .candidates
            .iter()
            .any(|r| r.knot == TwoBridgeKnot::from_u64(11, 4).unwrap()));
        assert!(found
            .candidates
            .iter()
            .any(|r| r.knot == TwoBridgeKnot::from_u64(5, 2).unwrap()));
        assert!(found
            .candidates
            .iter()
            .any(|r| r.knot == TwoBridgeKnot::from_u64(3, 1).unwrap()));
    }

    #[test]
    fn no_valid_knots_below_three() {
        assert!(valid_knots(2).is_empty());
    }
}
