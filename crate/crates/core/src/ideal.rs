//! Minimal automata recognizing ideals.
//!
//! A language is an ideal when it is closed under inserting letters anywhere.
//! On a minimal automaton that is equivalent to every residual being included
//! in the residual one letter further, which is what [`check_ideal`] tests.

use crate::dfa::{Dfa, Verdict};
use crate::error::{Error, Result};
use crate::minimize::minimize;
use crate::order::{ranks, ReachOrder, RankTable, Relation};
use crate::product::{includes, residual_inclusion};
use crate::words::WordSet;

/// A minimal, trim automaton whose language is a non-empty ideal.
///
/// Only [`check_ideal`] builds one, so the invariants always hold: a single
/// final state which is a sink, a reachability partial order, and ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealAutomaton {
    dfa: Dfa,
    order: ReachOrder,
    ranks: RankTable,
    final_state: usize,
}

impl IdealAutomaton {
    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    pub fn order(&self) -> &ReachOrder {
        &self.order
    }

    pub fn ranks(&self) -> &RankTable {
        &self.ranks
    }

    pub fn final_state(&self) -> usize {
        self.final_state
    }

    pub fn state_count(&self) -> usize {
        self.dfa.state_count()
    }

    pub fn alphabet(&self) -> &[char] {
        self.dfa.alphabet()
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        self.dfa.accepts(word)
    }

    pub fn is_linear(&self) -> bool {
        self.order.first_incomparable().is_none()
    }

    /// States listed along the total order `q_0 ≺ q_1 ≺ … ≺ q_n`.
    ///
    /// On a linear automaton distinct states have distinct ranks, so sorting
    /// by rank is a topological sort of the chain.
    pub fn chain(&self) -> Result<Vec<usize>> {
        if let Some((q, r)) = self.order.first_incomparable() {
            return Err(Error::NonLinearInput(q, r));
        }
        let mut chain: Vec<usize> = (0..self.state_count()).collect();
        chain.sort_by_key(|&q| self.ranks.rank(q));
        Ok(chain)
    }
}

/// `Σ_{q,r}`: letters `x` with `δ(q,x) = r`, in alphabet order.
pub fn letters_between(a: &Dfa, q: usize, r: usize) -> Vec<char> {
    a.alphabet()
        .iter()
        .enumerate()
        .filter(|&(x, _)| a.step(q, x) == r)
        .map(|(_, &c)| c)
        .collect()
}

/// Validates that `a` recognizes a non-empty ideal, minimizing it first.
pub fn check_ideal(a: &Dfa) -> Result<IdealAutomaton> {
    let dfa = minimize(a);
    if dfa.finals().next().is_none() {
        return Err(Error::EmptyLanguage);
    }
    let incl = residual_inclusion(&dfa);
    let k = dfa.alphabet().len();
    for q in 0..dfa.state_count() {
        for x in 0..k {
            let t = dfa.step(q, x);
            if !incl[q][t] {
                return Err(not_ideal_certificate(&dfa, q, x));
            }
        }
    }
    let order = ReachOrder::new(&dfa);
    let ranks = ranks(&dfa)?;
    let finals: Vec<usize> = dfa.finals().collect();
    debug_assert_eq!(finals.len(), 1, "minimal ideal automaton has one final state");
    debug_assert!(dfa.is_sink(finals[0]));
    debug_assert!(order.is_antisymmetric());
    Ok(IdealAutomaton {
        final_state: finals[0],
        dfa,
        order,
        ranks,
    })
}

// (u·v, u·x·v): u reaches q, v is accepted from q but not from δ(q,x).
fn not_ideal_certificate(dfa: &Dfa, q: usize, x: usize) -> Error {
    let u = dfa.access_words()[q].clone().expect("minimal automata are accessible");
    let v = match includes(&dfa.rerooted(q), &dfa.rerooted(dfa.step(q, x))) {
        Ok(Verdict::Fails(c)) => match c {
            crate::dfa::Certificate::Word(w) => w,
            other => unreachable!("inclusion certificates are words, got {other:?}"),
        },
        _ => unreachable!("residual inclusion already failed"),
    };
    let letter = dfa.alphabet()[x];
    Error::NotIdeal {
        word: format!("{u}{v}"),
        upper_word: format!("{u}{letter}{v}"),
    }
}

/// The minimal generators: accepted words with no accepted strict subword.
///
/// A run on a minimal word never stays in a state (the looping letter could be
/// deleted), so only runs that strictly climb the order are explored.
pub fn lmin(a: &IdealAutomaton) -> WordSet {
    let dfa = a.dfa();
    let mut found = Vec::new();
    let mut word = String::new();
    collect_climbing_runs(dfa, dfa.initial(), a.final_state(), &mut word, &mut found);
    let minimal: Vec<String> = found
        .into_iter()
        .filter(|w| {
            let letters: Vec<char> = w.chars().collect();
            (0..letters.len()).all(|i| {
                let shorter: String = letters
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &c)| c)
                    .collect();
                !dfa.accepts(&shorter).expect("letters come from the alphabet")
            })
        })
        .collect();
    WordSet::new(dfa.alphabet(), minimal).expect("words are over the automaton alphabet")
}

fn collect_climbing_runs(dfa: &Dfa, q: usize, target: usize, word: &mut String, out: &mut Vec<String>) {
    if q == target {
        out.push(word.clone());
        return;
    }
    for (x, &c) in dfa.alphabet().iter().enumerate() {
        let t = dfa.step(q, x);
        if t != q {
            word.push(c);
            collect_climbing_runs(dfa, t, target, word, out);
            word.pop();
        }
    }
}

/// Residual inclusion along the order: `q ≼ r` implies `R(q) ⊆ R(r)`.
pub fn residuals_monotone(a: &IdealAutomaton) -> bool {
    let incl = residual_inclusion(a.dfa());
    let n = a.state_count();
    (0..n).all(|q| {
        (0..n).all(|r| !matches!(a.order().relation(q, r), Relation::Below) || incl[q][r])
    })
}
