//! Union primality and decomposition.
//!
//! A linear automaton `q_0 ≺ … ≺ q_n` is composite for union exactly when some
//! `q_i` has an accelerating pattern: every letter entering it from `q_{i-1}`
//! also enters it from a strictly earlier state. Non-linear automata are
//! always composite. Composite automata are the union of the principal
//! automata of their minimal generators.

use crate::builders::principal_automaton;
use crate::decomposition::{Component, Decomposition, Tag};
use crate::error::{Error, Result};
use crate::ideal::{letters_between, lmin, IdealAutomaton};
use crate::inter::Options;
use crate::product::Mode;

/// Incoming letter sets of one chain state `q_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccelStep {
    pub i: usize,
    /// `Σ_{j,i}` for `j` in `0..i`.
    pub incoming: Vec<Vec<char>>,
    pub accelerating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccelScan {
    pub chain: Vec<usize>,
    /// One entry per `i` in `1..=n`.
    pub steps: Vec<AccelStep>,
}

impl AccelScan {
    pub fn first(&self) -> Option<usize> {
        self.steps.iter().find(|s| s.accelerating).map(|s| s.i)
    }

    pub fn accelerating_at(&self) -> Vec<usize> {
        self.steps.iter().filter(|s| s.accelerating).map(|s| s.i).collect()
    }
}

pub fn accel_scan(a: &IdealAutomaton) -> Result<AccelScan> {
    let chain = a.chain()?;
    let dfa = a.dfa();
    let steps = (1..chain.len())
        .map(|i| {
            let incoming: Vec<Vec<char>> = (0..i).map(|j| letters_between(dfa, chain[j], chain[i])).collect();
            let accelerating = incoming[i - 1]
                .iter()
                .all(|c| incoming[..i - 1].iter().any(|set| set.contains(c)));
            AccelStep {
                i,
                incoming,
                accelerating,
            }
        })
        .collect();
    Ok(AccelScan { chain, steps })
}

fn linear_without_acceleration(a: &IdealAutomaton) -> bool {
    match accel_scan(a) {
        Ok(scan) => scan.first().is_none(),
        Err(_) => false,
    }
}

/// `m + 1` where `m` is the longest minimal generator.
pub fn generator_bound(a: &IdealAutomaton) -> usize {
    lmin(a).max_len().expect("ideals are non-empty") + 1
}

/// Prime for union iff linear without accelerating pattern.
///
/// Also checks the equivalent size criterion `|A| = m + 1` and panics if the
/// two disagree, since that can only be a bug.
pub fn is_union_prime(a: &IdealAutomaton) -> bool {
    let prime = linear_without_acceleration(a);
    let by_size = a.state_count() == generator_bound(a);
    assert_eq!(
        prime, by_size,
        "union primality criteria disagree on {:?}",
        a.dfa()
    );
    prime
}

/// The union of the principal automata of `lmin(a)`, shortest words first.
pub fn decompose_union(a: &IdealAutomaton) -> Result<Decomposition> {
    decompose_union_with(a, Options::default())
}

pub fn decompose_union_with(a: &IdealAutomaton, opts: Options) -> Result<Decomposition> {
    if linear_without_acceleration(a) {
        return Err(Error::PrimeInput("union"));
    }
    let components = lmin(a)
        .words()
        .iter()
        .map(|w| {
            Ok(Component {
                tag: Tag::Principal { word: w.clone() },
                automaton: principal_automaton(w, a.alphabet())?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let d = Decomposition {
        mode: Mode::Union,
        source: a.dfa().clone(),
        components,
        verified: false,
    };
    if opts.verify {
        d.verify()
    } else {
        Ok(d)
    }
}
