//! Validated 2-bridge knot parameters.

use alloc::string::ToString;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// The 2-bridge knot `K(alpha, beta)`: `alpha` odd and at least 3,
/// `0 < beta < alpha`, `gcd(alpha, beta) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoBridgeKnot {
    alpha: BigInt,
    beta: BigInt,
}

impl TwoBridgeKnot {
    pub fn new(alpha: BigInt, beta: BigInt) -> Result<Self> {
        if alpha < BigInt::from(3) {
            return Err(Error::AlphaTooSmall { alpha: alpha.to_string() });
        }
        if alpha.is_even() {
            return Err(Error::EvenAlpha { alpha: alpha.to_string() });
        }
        if beta <= BigInt::zero() || beta >= alpha {
            return Err(Error::OutOfRange {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
            });
        }
        let g = alpha.gcd(&beta);
        if !g.is_one() {
            return Err(Error::NotCoprime {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
                gcd: g.to_string(),
            });
        }
        Ok(TwoBridgeKnot { alpha, beta })
    }

    pub fn from_u64(alpha: u64, beta: u64) -> Result<Self> {
        Self::new(BigInt::from(alpha), BigInt::from(beta))
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    /// The defining rational `beta/alpha`, in `(0, 1)`.
    pub fn fraction(&self) -> Rational {
        Rational::new(self.beta.clone(), self.alpha.clone())
    }

    /// The mirror parameterization `K(alpha, alpha - beta)`. Used by the
    /// empirical slope-negation property only; no equivalence of knots is
    /// applied anywhere else.
    pub fn mirror(&self) -> TwoBridgeKnot {
        TwoBridgeKnot {
            alpha: self.alpha.clone(),
            beta: &self.alpha - &self.beta,
        }
    }
}

impl core::fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "K({}, {})", self.alpha, self.beta)
    }
}
