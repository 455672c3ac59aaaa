//! Allowable sub-tuples of the positive expansion, c-values, the Seifert
//! anchor, and the calibrated boundary-slope map.
//!
//! Each allowable sub-tuple of the canonical positive expansion
//! `[m_1, ..., m_k]` encodes one strict expansion, hence one
//! essential-surface class. Its c-value is `sum_j (-1)^{i_j} m_{i_j}`, and
//! the boundary slope of the class is an integer multiple of the difference
//! between its c-value and the Seifert anchor `c_0`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::enumerate::enumerate_expansions;
use crate::error::{Error, Result};
use crate::expansion::{even_expansion, positive_expansion, Expansion};
use crate::knot::TwoBridgeKnot;
use crate::Rational;

/// A strictly increasing tuple of 1-based indices into the positive
/// expansion; the empty tuple is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubTuple {
    indices: Vec<usize>,
}

impl SubTuple {
    /// `indices` must be strictly increasing and 1-based.
    pub fn new(indices: Vec<usize>) -> Self {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]) && indices.first() != Some(&0),
            "sub-tuple indices must be strictly increasing and 1-based"
        );
        SubTuple { indices }
    }

    pub fn empty() -> Self {
        SubTuple { indices: Vec::new() }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl core::fmt::Display for SubTuple {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, ix) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{ix}")?;
        }
        write!(f, ")")
    }
}

/// The allowable sub-tuples of a canonical positive expansion, in
/// lexicographic order.
///
/// The predicate: indices are strictly increasing with no two consecutive
/// (`i_{j+1} >= i_j + 2`), and every position `i` with `m_i = 1` must have
/// one of `i-1, i, i+1` selected. Correctness contract: the count matches
/// the number of strict expansions of the knot (checked per knot by
/// [`surface_classes`]), and the family tuple `[2, 1, 2g-1]` yields exactly
/// `(1), (2), (3), (1,3)`.
pub fn allowable_subtuples(pe: &Expansion) -> Vec<SubTuple> {
    let k = pe.len();
    let ones: Vec<usize> = (1..=k)
        .filter(|&i| pe.entries()[i - 1].is_one())
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    gen_nonconsecutive(1, k, &mut current, &ones, &mut out);
    out
}

fn gen_nonconsecutive(
    start: usize,
    k: usize,
    current: &mut Vec<usize>,
    ones: &[usize],
    out: &mut Vec<SubTuple>,
) {
    if covers_ones(current, ones) {
        out.push(SubTuple { indices: current.clone() });
    }
    for i in start..=k {
        current.push(i);
        gen_nonconsecutive(i + 2, k, current, ones, out);
        current.pop();
    }
}

fn covers_ones(selected: &[usize], ones: &[usize]) -> bool {
    ones.iter().all(|&i| {
        selected
            .iter()
            .any(|&s| s + 1 == i || s == i || s == i + 1)
    })
}

/// `c(i_1, ..., i_l) = sum_j (-1)^{i_j} m_{i_j}`; the empty sub-tuple
/// gives 0.
pub fn c_value(st: &SubTuple, pe: &Expansion) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for &i in st.indices() {
        if i == 0 || i > pe.len() {
            return Err(Error::IndexOutOfBounds { index: i, len: pe.len() });
        }
        let m = &pe.entries()[i - 1];
        if i % 2 == 0 {
            total += m;
        } else {
            total -= m;
        }
    }
    Ok(total)
}

/// Sign-sum of a strict expansion: `sum_i (-1)^i sign(n_i)` (1-based).
/// Differences of sign-sums between classes give boundary-slope differences
/// in half-slope units; this is the second, sub-tuple-free route to the
/// slope multiset and pins down the Seifert anchor.
fn sign_sum(e: &Expansion) -> BigInt {
    let mut total = BigInt::zero();
    for (i, n) in e.entries().iter().enumerate() {
        let s = if n.is_positive() { 1 } else { -1 };
        // 1-based index parity: odd indices contribute -sign.
        if i % 2 == 0 {
            total -= s;
        } else {
            total += s;
        }
    }
    total
}

/// The Seifert anchor `c_0`: the c-value of the allowable sub-tuple whose
/// class is the orientable Seifert surface, i.e. the class of the all-even
/// expansion.
///
/// Identification: the even expansion has sign-sum `s_0`, and each strict
/// expansion `E` has slope offset `s_0 - sign_sum(E)` from the Seifert
/// class. `c_0` is the unique c-value among allowable sub-tuples for which
/// the multiset `{ c - c_0 }` equals the multiset of those offsets. Any
/// other number of consistent anchors is reported as ambiguous.
pub fn seifert_c0(knot: &TwoBridgeKnot) -> Result<BigInt> {
    let pe = positive_expansion(knot);
    let subs = allowable_subtuples(&pe);
    let cs: Vec<BigInt> = subs
        .iter()
        .map(|st| c_value(st, &pe))
        .collect::<Result<_>>()?;
    anchor(knot, &cs)
}

fn anchor(knot: &TwoBridgeKnot, cs: &[BigInt]) -> Result<BigInt> {
    let even = even_expansion(knot);
    let s0 = sign_sum(&even);
    let set = enumerate_expansions(knot)?;
    let mut offsets: Vec<BigInt> = set
        .expansions()
        .iter()
        .map(|e| &s0 - sign_sum(e))
        .collect();
    offsets.sort();

    let mut candidates: Vec<BigInt> = Vec::new();
    let mut distinct: Vec<&BigInt> = cs.iter().collect();
    distinct.sort();
    distinct.dedup();
    for c0 in distinct {
        let mut diffs: Vec<BigInt> = cs.iter().map(|c| c - c0).collect();
        diffs.sort();
        if diffs == offsets {
            candidates.push(c0.clone());
        }
    }
    if candidates.len() != 1 {
        return Err(Error::AnchorAmbiguous {
            alpha: knot.alpha().to_string(),
            beta: knot.beta().to_string(),
            candidates: candidates.len(),
        });
    }
    Ok(candidates.into_iter().next().unwrap())
}

/// The resolved slope map `slope = sign * scale * (c - c_0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Calibration {
    scale: Rational,
    sign: i8,
}

impl Calibration {
    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }
}

/// One row of calibration evidence: a candidate `(scale, sign)` applied to
/// the calibration knots.
#[derive(Debug, Clone)]
pub struct CalibrationTrial {
    pub scale: Rational,
    pub sign: i8,
    /// Slopes the candidate assigns to the figure-eight classes, in c order
    /// `-2, 0, +2`.
    pub figure_eight_slopes: Vec<Rational>,
    /// Slope the candidate assigns to the K(11,4) class with c = -2
    /// (anchor -3); non-integral values reject the candidate.
    pub k11_4_probe: Rational,
    pub integral: bool,
    pub accepted: bool,
}

fn candidate_scales() -> [Rational; 3] {
    [
        Rational::new(BigInt::one(), BigInt::from(2)),
        Rational::from(BigInt::one()),
        Rational::from(BigInt::from(2)),
    ]
}

/// Evidence table for every candidate `(scale, sign)` pair.
///
/// A candidate is accepted when it maps the figure-eight classes
/// (c-values -2, 0, +2 around anchor 0) to slopes -4, 0, +4 respectively
/// and stays integral on the K(11,4) classes. The literal 1/2 factor fails
/// integrality on K(11,4): it assigns slope 1/2 to the c = -2 class.
pub fn calibration_trials() -> Result<Vec<CalibrationTrial>> {
    let fig8 = TwoBridgeKnot::from_u64(5, 2)?;
    let fig8_pe = positive_expansion(&fig8);
    let fig8_subs = allowable_subtuples(&fig8_pe);
    let mut fig8_cs: Vec<BigInt> = fig8_subs
        .iter()
        .map(|st| c_value(st, &fig8_pe))
        .collect::<Result<_>>()?;
    fig8_cs.sort();
    let fig8_c0 = anchor(&fig8, &fig8_cs)?;

    let k11 = TwoBridgeKnot::from_u64(11, 4)?;
    let k11_pe = positive_expansion(&k11);
    let k11_subs = allowable_subtuples(&k11_pe);
    let k11_cs: Vec<BigInt> = k11_subs
        .iter()
        .map(|st| c_value(st, &k11_pe))
        .collect::<Result<_>>()?;
    let k11_c0 = anchor(&k11, &k11_cs)?;

    let expected_fig8: Vec<Rational> = [-4i64, 0, 4]
        .iter()
        .map(|&s| Rational::from(BigInt::from(s)))
        .collect();

    let mut trials = Vec::new();
    for scale in candidate_scales() {
        for sign in [1i8, -1] {
            let apply = |c: &BigInt, c0: &BigInt| -> Rational {
                let diff = Rational::from(c - c0);
                let signed = if sign == 1 { diff } else { -diff };
                &scale * signed
            };
            let fig8_slopes: Vec<Rational> =
                fig8_cs.iter().map(|c| apply(c, &fig8_c0)).collect();
            let k11_slopes: Vec<Rational> =
                k11_cs.iter().map(|c| apply(c, &k11_c0)).collect();
            let probe = apply(&BigInt::from(-2), &k11_c0);
            let integral = k11_slopes.iter().all(|s| s.is_integer())
                && fig8_slopes.iter().all(|s| s.is_integer());
            let accepted = integral && fig8_slopes == expected_fig8;
            trials.push(CalibrationTrial {
                scale: scale.clone(),
                sign,
                figure_eight_slopes: fig8_slopes,
                k11_4_probe: probe,
                integral,
                accepted,
            });
        }
    }
    Ok(trials)
}

/// Selects the unique `(scale, sign)` reproducing the figure-eight
/// boundary slopes `{-4, 0, +4}` with the c = -2 class at -4, subject to
/// integrality on K(11,4). The accepted calibration is scale 2, sign +1.
pub fn calibrate() -> Result<Calibration> {
    let trials = calibration_trials()?;
    let mut accepted = trials.into_iter().filter(|t| t.accepted);
    let first = accepted.next().ok_or(Error::CalibrationFailed)?;
    if accepted.next().is_some() {
        return Err(Error::CalibrationFailed);
    }
    Ok(Calibration { scale: first.scale, sign: first.sign })
}

/// `sign * scale * (c - c_0)`, required to be an integer.
pub fn slope(c: &BigInt, c0: &BigInt, cal: &Calibration) -> Result<BigInt> {
    let diff = Rational::from(c - c0);
    let signed = if cal.sign == 1 { diff } else { -diff };
    let s = &cal.scale * signed;
    if !s.is_integer() {
        return Err(Error::NonIntegralSlope {
            c: c.to_string(),
            c0: c0.to_string(),
            slope: format!("{}/{}", s.numer(), s.denom()),
        });
    }
    Ok(s.to_integer())
}

/// One essential-surface class: sub-tuple, c-value, boundary slope,
/// Seifert flag, and (for the Seifert class) the strict expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceClass {
    pub subtuple: SubTuple,
    pub c: BigInt,
    pub slope: BigInt,
    pub is_seifert: bool,
    pub expansion: Option<Expansion>,
}

/// Assembles one [`SurfaceClass`] per allowable sub-tuple, verifying the
/// bijection with the enumerated strict expansions.
pub fn surface_classes(knot: &TwoBridgeKnot, cal: &Calibration) -> Result<Vec<SurfaceClass>> {
    let pe = positive_expansion(knot);
    let subs = allowable_subtuples(&pe);
    let set = enumerate_expansions(knot)?;
    if subs.len() != set.len() {
        return Err(Error::BijectionMismatch {
            alpha: knot.alpha().to_string(),
            beta: knot.beta().to_string(),
            subtuple_count: subs.len(),
            expansion_count: set.len(),
            subtuples: render_list(subs.iter()),
            expansions: render_list(set.expansions().iter()),
        });
    }
    let cs: Vec<BigInt> = subs
        .iter()
        .map(|st| c_value(st, &pe))
        .collect::<Result<_>>()?;
    let c0 = anchor(knot, &cs)?;

    let mut classes: Vec<SurfaceClass> = subs
        .into_iter()
        .zip(cs)
        .map(|(st, c)| {
            let slope = slope(&c, &c0, cal)?;
            let is_seifert = c == c0;
            Ok(SurfaceClass { subtuple: st, c, slope, is_seifert, expansion: None })
        })
        .collect::<Result<_>>()?;

    // Attach the even expansion to the Seifert class when it is unambiguous.
    let seifert_count = classes.iter().filter(|cl| cl.is_seifert).count();
    if seifert_count == 1 {
        let even = even_expansion(knot);
        for cl in classes.iter_mut().filter(|cl| cl.is_seifert) {
            cl.expansion = Some(even.clone());
        }
    }
    Ok(classes)
}

fn render_list<T: core::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    let mut s = String::from("{");
    for (i, item) in items.enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&format!("{item}"));
    }
    s.push('}');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn subs_of(entries: &[i64]) -> Vec<SubTuple> {
        allowable_subtuples(&Expansion::from_i64(0, entries))
    }

    fn st(ix: &[usize]) -> SubTuple {
        SubTuple::new(ix.to_vec())
    }

    #[test]
    fn family_tuple_subtuples() {
        // Lexicographic order: (1), (1,3), (2), (3).
        assert_eq!(
            subs_of(&[2, 1, 3]),
            vec![st(&[1]), st(&[1, 3]), st(&[2]), st(&[3])]
        );
    }

    #[test]
    fn figure_eight_subtuples() {
        assert_eq!(subs_of(&[2, 2]), vec![st(&[]), st(&[1]), st(&[2])]);
    }

    #[test]
    fn trefoil_subtuples() {
        assert_eq!(subs_of(&[3]), vec![st(&[]), st(&[1])]);
    }

    #[test]
    fn c_value_examples() {
        let pe = Expansion::from_i64(0, &[2, 1, 3]);
        assert_eq!(c_value(&st(&[1]), &pe).unwrap(), BigInt::from(-2));
        assert_eq!(c_value(&st(&[2]), &pe).unwrap(), BigInt::from(1));
        assert_eq!(c_value(&st(&[3]), &pe).unwrap(), BigInt::from(-3));
        assert_eq!(c_value(&st(&[1, 3]), &pe).unwrap(), BigInt::from(-5));
        assert_eq!(c_value(&st(&[]), &pe).unwrap(), BigInt::zero());
    }

    #[test]
    fn c_value_out_of_bounds() {
        let pe = Expansion::from_i64(0, &[2, 2]);
        assert!(matches!(
            c_value(&st(&[3]), &pe),
            Err(Error::IndexOutOfBounds { index: 3, len: 2 })
        ));
    }

    #[test]
    fn seifert_anchor_examples() {
        for ((a, b), want) in [((11u64, 4u64), -3i64), ((5, 2), 0), ((3, 1), -3), ((7, 2), 2)] {
            let k = TwoBridgeKnot::from_u64(a, b).unwrap();
            assert_eq!(seifert_c0(&k).unwrap(), BigInt::from(want), "K({a},{b})");
        }
    }

    #[test]
    fn calibration_is_scale_two_sign_plus() {
        let cal = calibrate().unwrap();
        assert_eq!(cal.scale(), &Rational::from(BigInt::from(2)));
        assert_eq!(cal.sign(), 1);
    }

    #[test]
    fn half_scale_fails_integrality_on_k11_4() {
        let trials = calibration_trials().unwrap();
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        for t in trials.iter().filter(|t| t.scale == half) {
            assert!(!t.integral);
            assert!(!t.accepted);
            assert_eq!(t.k11_4_probe.abs(), half, "probe slope is +-1/2");
        }
    }

    #[test]
    fn slope_examples() {
        let cal = calibrate().unwrap();
        let s = |c: i64, c0: i64| slope(&BigInt::from(c), &BigInt::from(c0), &cal).unwrap();
        assert_eq!(s(-3, -3), BigInt::zero());
        assert_eq!(s(-2, -3), BigInt::from(2));
        assert_eq!(s(-5, -3), BigInt::from(-4));
    }

    #[test]
    fn surface_classes_k11_4() {
        let cal = calibrate().unwrap();
        let k = TwoBridgeKnot::from_u64(11, 4).unwrap();
        let classes = surface_classes(&k, &cal).unwrap();
        let mut cs: Vec<BigInt> = classes.iter().map(|c| c.c.clone()).collect();
        cs.sort();
        assert_eq!(cs, vec![(-5).into(), (-3).into(), (-2).into(), 1.into()]);
        let seifert: Vec<_> = classes.iter().filter(|c| c.is_seifert).collect();
        assert_eq!(seifert.len(), 1);
        assert_eq!(seifert[0].c, BigInt::from(-3));
        assert_eq!(seifert[0].subtuple, st(&[3]));
        assert_eq!(
            seifert[0].expansion,
            Some(Expansion::from_i64(0, &[2, 2, -2, 2]))
        );
    }

    #[test]
    fn surface_classes_slope_multisets() {
        let cal = calibrate().unwrap();
        for ((a, b), want) in [
            ((5u64, 2u64), vec![-4i64, 0, 4]),
            ((3, 1), vec![0, 6]),
        ] {
            let k = TwoBridgeKnot::from_u64(a, b).unwrap();
            let mut slopes: Vec<BigInt> = surface_classes(&k, &cal)
                .unwrap()
                .iter()
                .map(|c| c.slope.clone())
                .collect();
            slopes.sort();
            let want: Vec<BigInt> = want.into_iter().map(BigInt::from).collect();
            assert_eq!(slopes, want, "K({a},{b})");
        }
    }
}
