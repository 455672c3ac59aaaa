//! Exhaustive enumeration of strict expansions (all `|n_i| >= 2`).
//!
//! Each strict expansion of `beta/alpha` stands in for one branched surface
//! and hence one essential-surface class. [`enumerate_expansions`] walks the
//! exact-remainder recursion; [`brute_force_expansions`] is a deliberately
//! different search over raw entry tuples, kept only to cross-validate the
//! enumerator.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::expansion::{positive_expansion, Expansion};
use crate::knot::TwoBridgeKnot;
use crate::Rational;

/// All strict expansions of one knot, sorted by `(integer_part, entries)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSet {
    knot: TwoBridgeKnot,
    expansions: Vec<Expansion>,
}

impl ExpansionSet {
    pub fn knot(&self) -> &TwoBridgeKnot {
        &self.knot
    }

    pub fn expansions(&self) -> &[Expansion] {
        &self.expansions
    }

    pub fn len(&self) -> usize {
        self.expansions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.expansions.is_empty()
    }
}

/// Returns every expansion of `beta/alpha` with all entries of absolute
/// value at least 2.
///
/// Depth-first recursion on the exact remainder `y in (-1,1) \ {0}`: the
/// candidate next entries are the at most two integers adjacent to `1/y`
/// (its floor and ceiling), each kept only if `|n| >= 2`; the new remainder
/// `1/y - n` then automatically lies in `(-1, 1)` and a branch terminates
/// exactly when it is 0. The top level tries integer parts 0 and 1.
pub fn enumerate_expansions(knot: &TwoBridgeKnot) -> Result<ExpansionSet> {
    let pe = positive_expansion(knot);
    let cap = depth_cap(&pe);
    let value = knot.fraction();

    let mut out: Vec<Expansion> = Vec::new();
    for r in 0..=1u32 {
        let start = &value - Rational::from(BigInt::from(r));
        if start.is_zero() {
            continue;
        }
        // Explicit stack; expansions of K(6g-1, 2g) reach length 2g, which
        // would overflow the call stack for large g.
        let mut prefix: Vec<BigInt> = Vec::new();
        let mut stack: Vec<(usize, BigInt, Rational)> = Vec::new();
        push_candidates(&mut stack, 0, &start);
        while let Some((depth, entry, rem)) = stack.pop() {
            if depth as u64 >= cap {
                return Err(Error::DepthCapExceeded { cap });
            }
            prefix.truncate(depth);
            prefix.push(entry);
            if rem.is_zero() {
                out.push(Expansion::new(BigInt::from(r), prefix.clone()));
            } else {
                push_candidates(&mut stack, depth + 1, &rem);
            }
        }
    }
    out.sort();
    Ok(ExpansionSet { knot: knot.clone(), expansions: out })
}

fn push_candidates(stack: &mut Vec<(usize, BigInt, Rational)>, depth: usize, y: &Rational) {
    let inv = y.recip();
    let fl = inv.floor().to_integer();
    let mut cands = vec![fl.clone()];
    if !inv.is_integer() {
        cands.push(fl + 1);
    }
    // Reverse so the smaller candidate is explored first (lex output order;
    // the final sort makes this cosmetic).
    for n in cands.into_iter().rev() {
        if n.abs() < BigInt::from(2) {
            continue;
        }
        let rem = &inv - Rational::from(n.clone());
        stack.push((depth, n, rem));
    }
}

/// Recursion cap `sum(m_i) + k + 4` from the positive expansion
/// `[m_1, ..., m_k]`; generous for every valid knot.
fn depth_cap(pe: &Expansion) -> u64 {
    let sum: BigInt = pe.entries().iter().sum();
    let sum = sum.try_into().unwrap_or(u64::MAX);
    sum.saturating_add(pe.len() as u64).saturating_add(4)
}

const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Independent oracle for [`enumerate_expansions`]: tries every tuple of
/// length at most `max_len` with entries in `[-max_abs, -2] u [2, max_abs]`
/// and integer part in `{0, 1}`, keeping those that evaluate to
/// `beta/alpha`.
///
/// Infeasible subtrees are cut by forward interval propagation: the chosen
/// prefix determines a Moebius map `x -> (a x + b) / (c x + d)` applied to
/// the tail value, and any tail of a strict expansion lies in `[-1, 1]`, so
/// a prefix whose image interval misses the target cannot extend to a
/// solution. Candidate generation itself stays exhaustive over the entry
/// range.
pub fn brute_force_expansions(
    knot: &TwoBridgeKnot,
    max_len: usize,
    max_abs: u64,
) -> Result<ExpansionSet> {
    brute_force_with_budget(knot, max_len, max_abs, DEFAULT_NODE_BUDGET)
}

pub fn brute_force_with_budget(
    knot: &TwoBridgeKnot,
    max_len: usize,
    max_abs: u64,
    budget: u64,
) -> Result<ExpansionSet> {
    let value = knot.fraction();
    let mut out: Vec<Expansion> = Vec::new();
    let mut nodes: u64 = 0;
    for r in 0..=1u32 {
        let target = &value - Rational::from(BigInt::from(r));
        let mut search = BruteSearch {
            target,
            max_len,
            max_abs: max_abs as i64,
            budget,
            nodes: &mut nodes,
            out: &mut out,
            integer_part: BigInt::from(r),
        };
        search.recurse(&Mobius::identity(), &mut Vec::new())?;
    }
    out.sort();
    Ok(ExpansionSet { knot: knot.clone(), expansions: out })
}

/// Integer Moebius map `x -> (a x + b) / (c x + d)`.
struct Mobius {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mobius {
    fn identity() -> Self {
        Mobius {
            a: BigInt::from(1),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::from(1),
        }
    }

    /// Compose with one continued-fraction step `x -> 1 / (n + x)`.
    fn step(&self, n: &BigInt) -> Self {
        Mobius {
            a: self.b.clone(),
            b: &self.a + n * &self.b,
            c: self.d.clone(),
            d: &self.c + n * &self.d,
        }
    }

    /// Value at `x = 0`, if defined.
    fn at_zero(&self) -> Option<Rational> {
        if self.d.is_zero() {
            None
        } else {
            Some(Rational::new(self.b.clone(), self.d.clone()))
        }
    }

    /// True when `target` provably lies outside the image of `[-1, 1]`.
    /// A pole inside the interval means the image is unbounded: no pruning.
    fn excludes_on_unit_interval(&self, target: &Rational) -> bool {
        if self.d.abs() <= self.c.abs() {
            return false;
        }
        let lo = Rational::new(&self.b - &self.a, &self.d - &self.c);
        let hi = Rational::new(&self.a + &self.b, &self.c + &self.d);
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        target < &lo || target > &hi
    }
}

struct BruteSearch<'a> {
    target: Rational,
    max_len: usize,
    max_abs: i64,
    budget: u64,
    nodes: &'a mut u64,
    out: &'a mut Vec<Expansion>,
    integer_part: BigInt,
}

impl BruteSearch<'_> {
    fn recurse(&mut self, m: &Mobius, prefix: &mut Vec<BigInt>) -> Result<()> {
        if prefix.len() == self.max_len {
            return Ok(());
        }
        let entries = (-self.max_abs..=-2).chain(2..=self.max_abs);
        for n in entries.map(BigInt::from) {
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let next = m.step(&n);
            prefix.push(n);
            if next.at_zero().as_ref() == Some(&self.target) {
                self.out
                    .push(Expansion::new(self.integer_part.clone(), prefix.clone()));
            }
            if !next.excludes_on_unit_interval(&self.target) {
                self.recurse(&next, prefix)?;
            }
            prefix.pop();
        }
        Ok(())
    }
}
