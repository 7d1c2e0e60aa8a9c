//! Complete deterministic automata with a dense transition table.
//!
//! A [`Dfa`] is immutable once built. The alphabet is kept sorted, and every
//! iteration over letters follows that order, which is what makes BFS
//! numbering and counterexamples reproducible.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A complete DFA. States are `0..state_count()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Vec<char>,
    initial: usize,
    finals: Vec<bool>,
    // row-major: delta[state * |alphabet| + letter]
    delta: Vec<usize>,
}

/// The canonical JSON automaton description, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDfa {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub finals: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
}

/// Explains why a check failed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Certificate {
    /// A word accepted by one side and rejected by the other.
    Word(String),
    /// A pair of states, for instance two incomparable ones.
    StatePair(usize, usize),
    /// A single offending state.
    State(usize),
    Letter(char),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Word(w) => write!(f, "word {w:?}"),
            Certificate::StatePair(p, q) => write!(f, "states ({p}, {q})"),
            Certificate::State(q) => write!(f, "state {q}"),
            Certificate::Letter(c) => write!(f, "letter {c:?}"),
        }
    }
}

/// Outcome of a yes/no check that can explain a "no".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Certificate),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(c) => Some(c),
        }
    }

    /// The counterexample word, when the certificate is one.
    pub fn word(&self) -> Option<&str> {
        match self {
            Verdict::Fails(Certificate::Word(w)) => Some(w),
            _ => None,
        }
    }
}

fn parse_letter(s: &str) -> Result<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) if !c.is_control() && !c.is_whitespace() => Ok(c),
        _ => Err(Error::BadLetter(s.to_string())),
    }
}

/// Sorts and deduplicates an alphabet, rejecting an empty one.
pub(crate) fn normalize_alphabet(letters: impl IntoIterator<Item = char>) -> Result<Vec<char>> {
    let mut alphabet: Vec<char> = letters.into_iter().collect();
    alphabet.sort_unstable();
    alphabet.dedup();
    if let Some(c) = alphabet.iter().find(|c| c.is_control() || c.is_whitespace()) {
        return Err(Error::BadLetter(c.to_string()));
    }
    Ok(alphabet)
}

/// Turns a parsed description into a [`Dfa`], checking completeness and determinism.
pub fn validate(raw: &RawDfa) -> Result<Dfa> {
    let letters = raw
        .alphabet
        .iter()
        .map(|s| parse_letter(s))
        .collect::<Result<Vec<_>>>()?;
    let alphabet = normalize_alphabet(letters)?;
    let n = raw.states;
    if n == 0 {
        return Err(Error::NoStates);
    }
    if raw.initial >= n {
        return Err(Error::BadIndex {
            what: "initial",
            index: raw.initial,
            bound: n,
        });
    }
    let mut finals = vec![false; n];
    for &f in &raw.finals {
        if f >= n {
            return Err(Error::BadIndex {
                what: "final",
                index: f,
                bound: n,
            });
        }
        finals[f] = true;
    }
    let k = alphabet.len();
    let mut delta: Vec<Option<usize>> = vec![None; n * k];
    for (src, letter, dst) in &raw.transitions {
        let c = parse_letter(letter)?;
        let x = alphabet
            .binary_search(&c)
            .map_err(|_| Error::UnknownLetter(c))?;
        for (what, idx) in [("source", *src), ("target", *dst)] {
            if idx >= n {
                return Err(Error::BadIndex {
                    what,
                    index: idx,
                    bound: n,
                });
            }
        }
        let slot = &mut delta[src * k + x];
        if slot.is_some() {
            return Err(Error::DuplicateTransition {
                state: *src,
                letter: c,
            });
        }
        *slot = Some(*dst);
    }
    let delta = delta
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            t.ok_or(Error::MissingTransition {
                state: i / k,
                letter: alphabet[i % k],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Dfa {
        alphabet,
        initial: raw.initial,
        finals,
        delta,
    })
}

impl Dfa {
    /// Builds a DFA from a closure giving the target of each (state, letter index).
    ///
    /// The alphabet must already be sorted and duplicate-free.
    pub fn from_fn(
        alphabet: Vec<char>,
        state_count: usize,
        initial: usize,
        finals: &[usize],
        mut next: impl FnMut(usize, usize) -> usize,
    ) -> Result<Dfa> {
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(state_count * k);
        for q in 0..state_count {
            for x in 0..k {
                delta.push(next(q, x));
            }
        }
        let raw_finals = finals.to_vec();
        Dfa::from_parts(alphabet, initial, raw_finals, delta)
    }

    /// Builds a DFA from letter-labelled triples, as in the JSON format.
    pub fn from_triples(
        alphabet: &str,
        state_count: usize,
        initial: usize,
        finals: &[usize],
        triples: &[(usize, char, usize)],
    ) -> Result<Dfa> {
        validate(&RawDfa {
            alphabet: alphabet.chars().map(String::from).collect(),
            states: state_count,
            initial,
            finals: finals.to_vec(),
            transitions: triples
                .iter()
                .map(|&(p, c, q)| (p, c.to_string(), q))
                .collect(),
        })
    }

    pub(crate) fn from_parts(
        alphabet: Vec<char>,
        initial: usize,
        finals: Vec<usize>,
        delta: Vec<usize>,
    ) -> Result<Dfa> {
        let k = alphabet.len();
        if k == 0 {
            return Err(Error::Parse("empty alphabet".into()));
        }
        if alphabet.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse("alphabet must be sorted and unique".into()));
        }
        let n = delta.len() / k;
        if n == 0 {
            return Err(Error::NoStates);
        }
        if initial >= n {
            return Err(Error::BadIndex {
                what: "initial",
                index: initial,
                bound: n,
            });
        }
        if let Some(&t) = delta.iter().find(|&&t| t >= n) {
            return Err(Error::BadIndex {
                what: "target",
                index: t,
                bound: n,
            });
        }
        let mut flags = vec![false; n];
        for f in finals {
            if f >= n {
                return Err(Error::BadIndex {
                    what: "final",
                    index: f,
                    bound: n,
                });
            }
            flags[f] = true;
        }
        Ok(Dfa {
            alphabet,
            initial,
            finals: flags,
            delta,
        })
    }

    /// The automaton accepting every word.
    pub fn universal(alphabet: &[char]) -> Dfa {
        Dfa {
            alphabet: alphabet.to_vec(),
            initial: 0,
            finals: vec![true],
            delta: vec![0; alphabet.len()],
        }
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn alphabet_string(&self) -> String {
        self.alphabet.iter().collect()
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(q, _)| q)
    }

    /// Target of `q` on the letter at position `x` of the alphabet.
    #[inline]
    pub fn step(&self, q: usize, x: usize) -> usize {
        self.delta[q * self.alphabet.len() + x]
    }

    /// Position of `c` in the alphabet.
    pub fn letter_index(&self, c: char) -> Result<usize> {
        self.alphabet
            .binary_search(&c)
            .map_err(|_| Error::UnknownLetter(c))
    }

    /// Runs `word` from `q`.
    pub fn run_from(&self, q: usize, word: &str) -> Result<usize> {
        word.chars()
            .try_fold(q, |s, c| Ok(self.step(s, self.letter_index(c)?)))
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.finals[self.run_from(self.initial, word)?])
    }

    pub fn is_sink(&self, q: usize) -> bool {
        (0..self.alphabet.len()).all(|x| self.step(q, x) == q)
    }

    /// Same transition structure with a different initial state.
    pub fn rerooted(&self, q: usize) -> Dfa {
        assert!(q < self.state_count(), "state {q} out of range");
        Dfa {
            initial: q,
            ..self.clone()
        }
    }

    /// The same automaton with final and non-final states swapped.
    pub fn complement(&self) -> Dfa {
        Dfa {
            finals: self.finals.iter().map(|f| !f).collect(),
            ..self.clone()
        }
    }

    pub(crate) fn check_same_alphabet(&self, other: &Dfa) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet_string(),
                right: other.alphabet_string(),
            });
        }
        Ok(())
    }

    /// States reachable from `q`, as a membership vector.
    pub fn reachable_from(&self, q: usize) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        seen[q] = true;
        let mut stack = vec![q];
        while let Some(s) = stack.pop() {
            for x in 0..self.alphabet.len() {
                let t = self.step(s, x);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Shortest, then lexicographically least, word leading from the
    /// initial state to each state (`None` when unreachable).
    pub fn access_words(&self) -> Vec<Option<String>> {
        let n = self.state_count();
        let mut words: Vec<Option<String>> = vec![None; n];
        words[self.initial] = Some(String::new());
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for (x, &c) in self.alphabet.iter().enumerate() {
                let t = self.step(q, x);
                if words[t].is_none() {
                    let mut w = words[q].clone().unwrap_or_default();
                    w.push(c);
                    words[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        words
    }

    /// Every state reachable from the initial state and co-reachable to a final state.
    pub fn trim_check(&self) -> Verdict {
        let reach = self.reachable_from(self.initial);
        if let Some(q) = reach.iter().position(|&r| !r) {
            return Verdict::Fails(Certificate::State(q));
        }
        let coreach = self.coreachable();
        match coreach.iter().position(|&r| !r) {
            Some(q) => Verdict::Fails(Certificate::State(q)),
            None => Verdict::Holds,
        }
    }

    fn coreachable(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in 0..n {
            for x in 0..self.alphabet.len() {
                preds[self.step(q, x)].push(q);
            }
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<usize> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// The canonical JSON description of this automaton.
    pub fn to_raw(&self) -> RawDfa {
        let mut transitions = Vec::with_capacity(self.delta.len());
        for q in 0..self.state_count() {
            for (x, &c) in self.alphabet.iter().enumerate() {
                transitions.push((q, c.to_string(), self.step(q, x)));
            }
        }
        RawDfa {
            alphabet: self.alphabet.iter().map(|c| c.to_string()).collect(),
            states: self.state_count(),
            initial: self.initial,
            finals: self.finals().collect(),
            transitions,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("automaton serializes")
    }

    pub fn from_json(text: &str) -> Result<Dfa> {
        let raw: RawDfa = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        validate(&raw)
    }
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Dfa {{ alphabet: {:?}, initial: {}, finals: {:?} }}",
            self.alphabet_string(),
            self.initial,
            self.finals().collect::<Vec<_>>()
        )?;
        for q in 0..self.state_count() {
            write!(f, "  {q}:")?;
            for (x, c) in self.alphabet.iter().enumerate() {
                write!(f, " {c}->{}", self.step(q, x))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
