//! Signed continued-fraction expansions and the two canonical normal forms.
//!
//! An [`Expansion`] represents `r + 1/(n_1 + 1/(n_2 + ... + 1/n_t))`. Three
//! flavors matter here:
//!
//! * strict: every `|n_i| >= 2` (these are the carriers of essential
//!   surfaces),
//! * positive: `r = 0`, every entry `>= 1`, last entry `>= 2` (the unique
//!   canonical form produced by the Euclidean algorithm),
//! * even: every entry even and nonzero (unique for knots; all entries
//!   `+-2` certifies a fibered knot).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::knot::TwoBridgeKnot;
use crate::Rational;

/// An integer part plus a tuple of continued-fraction entries. The empty
/// entry tuple is legal and evaluates to the integer part alone.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Expansion {
    integer_part: BigInt,
    entries: Vec<BigInt>,
}

impl Expansion {
    pub fn new(integer_part: BigInt, entries: Vec<BigInt>) -> Self {
        Expansion { integer_part, entries }
    }

    pub fn from_i64(integer_part: i64, entries: &[i64]) -> Self {
        Expansion {
            integer_part: BigInt::from(integer_part),
            entries: entries.iter().map(|&n| BigInt::from(n)).collect(),
        }
    }

    pub fn integer_part(&self) -> &BigInt {
        &self.integer_part
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Exact value `r + [n_1, ..., n_t]`, evaluated innermost-first.
    pub fn eval(&self) -> Result<Rational> {
        let mut tail = Rational::zero();
        for n in self.entries.iter().rev() {
            let denom = Rational::from(n.clone()) + tail;
            if denom.is_zero() {
                return Err(Error::DegenerateExpansion);
            }
            tail = denom.recip();
        }
        Ok(Rational::from(self.integer_part.clone()) + tail)
    }

    /// Every entry has absolute value at least 2.
    pub fn is_strict(&self) -> bool {
        self.entries.iter().all(|n| n.abs() >= BigInt::from(2))
    }

    /// `r = 0`, all entries >= 1, last entry >= 2.
    pub fn is_positive_canonical(&self) -> bool {
        self.integer_part.is_zero()
            && self.entries.iter().all(|n| n >= &BigInt::one())
            && self.entries.last().is_some_and(|n| n >= &BigInt::from(2))
    }

    /// Every entry even and nonzero.
    pub fn is_even(&self) -> bool {
        self.entries.iter().all(|n| n.is_even() && !n.is_zero())
    }

    /// Every entry is `+2` or `-2`.
    pub fn is_all_plus_minus_two(&self) -> bool {
        let two = BigInt::from(2);
        self.entries.iter().all(|n| n.abs() == two)
    }
}

impl core::fmt::Display for Expansion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if !self.integer_part.is_zero() {
            write!(f, "{} + ", self.integer_part)?;
        }
        write!(f, "[")?;
        for (i, n) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "]")
    }
}

/// The unique all-positive expansion `[m_1, ..., m_k]` of `beta/alpha` with
/// `m_k >= 2`: the Euclidean algorithm on `alpha/beta`, with a trailing
/// `[..., m, 1] -> [..., m+1]` fold when the last quotient is 1.
pub fn positive_expansion(knot: &TwoBridgeKnot) -> Expansion {
    let mut entries: Vec<BigInt> = Vec::new();
    let mut x = knot.alpha().clone();
    let mut y = knot.beta().clone();
    while !y.is_zero() {
        let (q, r) = x.div_rem(&y);
        entries.push(q);
        x = y;
        y = r;
    }
    if entries.len() > 1 && entries.last().unwrap().is_one() {
        entries.pop();
        let last = entries.last_mut().unwrap();
        *last += 1;
    }
    Expansion::new(BigInt::zero(), entries)
}

/// The unique all-even expansion of `beta/alpha` (`alpha` odd guarantees
/// existence). Greedy even-quotient recursion: with current remainder
/// `y in (-1,1) \ {0}`, the next entry is the unique even integer `n` with
/// `1/y - n` strictly inside `(-1, 1)`; a remainder of exactly `+-1`
/// invalidates the branch. The integer part is whichever of `{0, 1}`
/// admits a terminating all-even run; exactly one does.
pub fn even_expansion(knot: &TwoBridgeKnot) -> Expansion {
    let value = knot.fraction();
    let mut found: Option<Expansion> = None;
    for r in 0..=1u32 {
        let start = &value - Rational::from(BigInt::from(r));
        if let Some(entries) = even_run(start) {
            let exp = Expansion::new(BigInt::from(r), entries);
            assert!(
                found.is_none(),
                "even expansion not unique for {knot}: arithmetic bug"
            );
            found = Some(exp);
        }
    }
    found.unwrap_or_else(|| panic!("no even expansion for {knot}: arithmetic bug"))
}

fn even_run(mut y: Rational) -> Option<Vec<BigInt>> {
    let one = Rational::one();
    let mut entries = Vec::new();
    while !y.is_zero() {
        let inv = y.recip();
        // The unique even integer within open distance 1 of inv, if any.
        let fl = inv.floor().to_integer();
        let n = if fl.is_even() { fl } else { fl + 1 };
        let rem = &inv - Rational::from(n.clone());
        if rem.abs() >= one {
            return None;
        }
        // An odd-integer inv leaves remainder exactly -1; caught above.
        entries.push(n);
        y = rem;
    }
    Some(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eval_single_entry() {
        assert_eq!(Expansion::from_i64(0, &[3]).eval().unwrap(), rat(1, 3));
    }

    #[test]
    fn eval_hand_arithmetic() {
        // 1/(2 + 1/(1 + 1/3)) = 1/(2 + 3/4) = 4/11
        assert_eq!(Expansion::from_i64(0, &[2, 1, 3]).eval().unwrap(), rat(4, 11));
    }

    #[test]
    fn eval_known_vector() {
        // Sigma[-2,3,-2,2] with integer part 1 is another expansion of 4/11.
        assert_eq!(
            Expansion::from_i64(1, &[-2, 3, -2, 2]).eval().unwrap(),
            rat(4, 11)
        );
    }

    #[test]
    fn eval_empty_is_integer_part() {
        assert_eq!(Expansion::from_i64(7, &[]).eval().unwrap(), rat(7, 1));
    }

    #[test]
    fn eval_degenerate() {
        // 1/(-1 + 1/1): inner suffix [1] = 1 makes the outer denominator 0.
        assert_eq!(
            Expansion::from_i64(0, &[-1, 1]).eval(),
            Err(Error::DegenerateExpansion)
        );
    }

    #[test]
    fn positive_expansion_examples() {
        let cases = [
            ((11u64, 4u64), &[2i64, 1, 3][..]),
            ((5, 2), &[2, 2]),
            ((3, 1), &[3]),
        ];
        for ((a, b), want) in cases {
            let k = TwoBridgeKnot::from_u64(a, b).unwrap();
            let pe = positive_expansion(&k);
            assert_eq!(pe, Expansion::from_i64(0, want), "K({a},{b})");
            assert!(pe.is_positive_canonical());
            assert_eq!(pe.eval().unwrap(), k.fraction());
        }
    }

    #[test]
    fn even_expansion_examples() {
        let cases = [
            ((11u64, 4u64), 0i64, &[2i64, 2, -2, 2][..]),
            ((3, 1), 1, &[-2, 2]),
            ((5, 2), 0, &[2, 2]),
        ];
        for ((a, b), r, want) in cases {
            let k = TwoBridgeKnot::from_u64(a, b).unwrap();
            let ee = even_expansion(&k);
            assert_eq!(ee, Expansion::from_i64(r, want), "K({a},{b})");
            assert!(ee.is_even());
            assert_eq!(ee.eval().unwrap(), k.fraction());
        }
    }
}
