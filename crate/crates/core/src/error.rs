use alloc::string::String;
use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An even `alpha` parameterizes a 2-bridge link, not a knot.
    #[error("alpha must be odd (alpha = {alpha}): even alpha gives a 2-bridge link")]
    EvenAlpha { alpha: String },

    #[error("alpha and beta must be coprime (gcd({alpha}, {beta}) = {gcd})")]
    NotCoprime { alpha: String, beta: String, gcd: String },

    #[error("beta must satisfy 0 < beta < alpha (got alpha = {alpha}, beta = {beta})")]
    OutOfRange { alpha: String, beta: String },

    #[error("alpha must be at least 3 (got {alpha})")]
    AlphaTooSmall { alpha: String },

    /// An intermediate denominator of the continued fraction vanished.
    #[error("degenerate expansion: a suffix evaluates to 0 in denominator position")]
    DegenerateExpansion,

    /// The enumerator exceeded its provably generous recursion cap; this is
    /// an internal logic error, never expected on valid input.
    #[error("expansion enumeration exceeded depth cap {cap}")]
    DepthCapExceeded { cap: u64 },

    #[error("brute-force search exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },

    #[error("sub-tuple index {index} out of bounds for expansion of length {len}")]
    IndexOutOfBounds { index: usize, len: usize },

    /// More than one (or no) choice of the Seifert anchor value is consistent
    /// with the sign-sum slope multiset; reported, never guessed silently.
    #[error("Seifert anchor ambiguous for K({alpha}, {beta}): {candidates} consistent anchors")]
    AnchorAmbiguous { alpha: String, beta: String, candidates: usize },

    #[error("no (scale, sign) candidate reproduces the figure-eight boundary slopes")]
    CalibrationFailed,

    /// A computed slope failed the integrality requirement; surfaces a
    /// convention bug, treated as a hard failure.
    #[error("non-integral slope {slope} from c = {c}, c0 = {c0}")]
    NonIntegralSlope { c: String, c0: String, slope: String },

    /// Allowable sub-tuple count disagrees with the enumerated expansion
    /// count; the allowability predicate is wrong for this knot.
    #[error(
        "bijection mismatch for K({alpha}, {beta}): {subtuple_count} allowable sub-tuples \
         vs {expansion_count} strict expansions\n  sub-tuples: {subtuples}\n  expansions: {expansions}"
    )]
    BijectionMismatch {
        alpha: String,
        beta: String,
        subtuple_count: usize,
        expansion_count: usize,
        subtuples: String,
        expansions: String,
    },

    /// The all-even expansion of a knot must have even length.
    #[error("even expansion of K({alpha}, {beta}) has odd length {len}")]
    OddEvenExpansionLength { alpha: String, beta: String, len: usize },

    #[error("{0}")]
    ParameterError(String),
}
