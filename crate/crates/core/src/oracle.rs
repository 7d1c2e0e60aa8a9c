//! Brute-force ground truth for small inputs.
//!
//! Everything here works by enumeration: of words up to a length, or of every
//! complete DFA up to a number of states. It is exponential on purpose and
//! only meant to cross-check the structural algorithms.

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::ideal::{check_ideal, IdealAutomaton};
use crate::minimize::{canonical, is_minimal, minimize};
use crate::product::{equivalent, includes, product, Mode};
use crate::words::{is_subword, WordSet};

/// Default bound on the number of states [`exhaustive_prime`] accepts.
pub const DEFAULT_CAP: usize = 4;

/// Largest alphabet [`exhaustive_prime`] accepts.
pub const MAX_LETTERS: usize = 2;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_VAR: &str = "IDEAL_ORACLE_CAP";

/// The cap from [`CAP_VAR`], falling back to [`DEFAULT_CAP`].
pub fn configured_cap() -> usize {
    std::env::var(CAP_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// All words over `alphabet` of length at most `max_len`, in shortlex order.
pub fn all_words(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Accepted words of length at most `max_len`.
pub fn enumerate_language(a: &Dfa, max_len: usize) -> WordSet {
    let words = all_words(a.alphabet(), max_len)
        .into_iter()
        .filter(|w| a.accepts(w).expect("words use the automaton alphabet"));
    WordSet::new(a.alphabet(), words).expect("words use the automaton alphabet")
}

/// Words of length at most `max_len` having a member of `k` as a subword.
pub fn subword_closure(k: &WordSet, max_len: usize) -> WordSet {
    let words = all_words(k.alphabet(), max_len)
        .into_iter()
        .filter(|w| k.words().iter().any(|u| is_subword(u, w)));
    WordSet::new(k.alphabet(), words).expect("words use the set alphabet")
}

/// Every complete DFA with exactly `states` states over `alphabet` whose
/// states are all reachable and numbered in breadth-first order, with every
/// choice of final states.
pub fn enumerate_dfas(alphabet: &[char], states: usize) -> Vec<Dfa> {
    let k = alphabet.len();
    let cells = states * k;
    let mut table = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        let shape = Dfa::from_fn(alphabet.to_vec(), states, 0, &[], |q, x| table[q * k + x])
            .expect("table entries are in range");
        if canonical(&shape) == shape {
            for mask in 0u32..(1 << states) {
                let finals: Vec<usize> = (0..states).filter(|&q| mask & (1 << q) != 0).collect();
                out.push(
                    Dfa::from_fn(alphabet.to_vec(), states, 0, &finals, |q, x| table[q * k + x])
                        .expect("table entries are in range"),
                );
            }
        }
        // odometer over all tables
        let mut i = 0;
        while i < cells {
            table[i] += 1;
            if table[i] < states {
                break;
            }
            table[i] = 0;
            i += 1;
        }
        if i == cells {
            return out;
        }
    }
}

/// Every minimal automaton with at most `max_states` states over `alphabet`
/// recognizing a non-empty ideal, up to renaming.
pub fn minimal_ideal_automata(alphabet: &[char], max_states: usize) -> Vec<IdealAutomaton> {
    (1..=max_states)
        .flat_map(|n| enumerate_dfas(alphabet, n))
        .filter(is_minimal)
        .filter_map(|d| check_ideal(&d).ok())
        .collect()
}

/// Decides primality by trying every strictly smaller complete DFA.
///
/// For intersection, the best any decomposition can do is the intersection
/// of all smaller DFAs whose language contains `L(a)`; `a` is prime iff that
/// intersection is still strictly larger (or there is no candidate at all).
/// Union is dual, with smaller DFAs whose language is contained in `L(a)`.
pub fn exhaustive_prime(a: &IdealAutomaton, mode: Mode) -> Result<bool> {
    exhaustive_prime_with_cap(a, mode, configured_cap())
}

pub fn exhaustive_prime_with_cap(a: &IdealAutomaton, mode: Mode, cap: usize) -> Result<bool> {
    let n = a.state_count();
    let letters = a.alphabet().len();
    if n > cap || letters > MAX_LETTERS {
        return Err(Error::TooLarge {
            states: n,
            letters,
            cap,
        });
    }
    let target = a.dfa();
    let mut acc: Option<Dfa> = None;
    for size in 1..n {
        for b in enumerate_dfas(a.alphabet(), size) {
            let admissible = match mode {
                Mode::Inter => includes(target, &b)?.holds(),
                Mode::Union => includes(&b, target)?.holds(),
            };
            if !admissible {
                continue;
            }
            let next = match acc.take() {
                None => b,
                Some(prev) => minimize(&product(mode, &[prev, b])?),
            };
            if equivalent(&next, target)?.holds() {
                return Ok(false);
            }
            acc = Some(next);
        }
    }
    Ok(true)
}

/// Every DFA with fewer states than `a` whose language contains `L(a)`.
pub fn smaller_supersets(a: &IdealAutomaton) -> Result<Vec<Dfa>> {
    let mut out = Vec::new();
    for size in 1..a.state_count() {
        for b in enumerate_dfas(a.alphabet(), size) {
            if includes(a.dfa(), &b)?.holds() {
                out.push(b);
            }
        }
    }
    Ok(out)
}
