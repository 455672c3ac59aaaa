//! Cross-validation of the expansion enumerator against the brute-force
//! tuple search, with the generous per-knot bounds
//! `max_len = sum(m_i) + k`, `max_abs = max(m_i) + 2`.

use bridgeslope_core::{
    brute_force_expansions, enumerate_expansions, positive_expansion, valid_knots, BigInt,
    TwoBridgeKnot,
};

fn oracle_bounds(knot: &TwoBridgeKnot) -> (usize, u64) {
    let pe = positive_expansion(knot);
    let sum: BigInt = pe.entries().iter().sum();
    let sum: u64 = sum.try_into().unwrap();
    let max: u64 = pe
        .entries()
        .iter()
        .map(|m| m.clone().try_into().unwrap())
        .max()
        .unwrap();
    ((sum as usize) + pe.len(), max + 2)
}

#[test]
fn enumerator_matches_brute_force_alpha_up_to_99() {
    for knot in valid_knots(99) {
        let (max_len, max_abs) = oracle_bounds(&knot);
        let brute = brute_force_expansions(&knot, max_len, max_abs).unwrap();
        let fast = enumerate_expansions(&knot).unwrap();
        assert_eq!(fast, brute, "{knot}");
    }
}
