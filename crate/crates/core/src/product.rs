//! Boolean products, language equivalence and inclusion.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::dfa::{Certificate, Dfa, Verdict};
use crate::error::{Error, Result};

/// How component languages are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Inter,
    Union,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Inter => "inter",
            Mode::Union => "union",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "inter" | "intersection" => Ok(Mode::Inter),
            "union" => Ok(Mode::Union),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// Reachable product automaton, states numbered in BFS discovery order.
pub fn product(mode: Mode, parts: &[Dfa]) -> Result<Dfa> {
    let first = parts.first().ok_or(Error::EmptyList)?;
    for p in &parts[1..] {
        first.check_same_alphabet(p)?;
    }
    let k = first.alphabet().len();
    let start: Vec<usize> = parts.iter().map(Dfa::initial).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut tuples = vec![start];
    let mut delta = Vec::new();
    let mut i = 0;
    while i < tuples.len() {
        for x in 0..k {
            let next: Vec<usize> = tuples[i]
                .iter()
                .zip(parts)
                .map(|(&q, a)| a.step(q, x))
                .collect();
            let fresh = tuples.len();
            let id = *index.entry(next.clone()).or_insert_with(|| {
                tuples.push(next);
                fresh
            });
            delta.push(id);
        }
        i += 1;
    }
    let finals: Vec<usize> = tuples
        .iter()
        .enumerate()
        .filter(|(_, t)| {
            let mut flags = t.iter().zip(parts).map(|(&q, a)| a.is_final(q));
            match mode {
                Mode::Inter => flags.all(|f| f),
                Mode::Union => flags.any(|f| f),
            }
        })
        .map(|(i, _)| i)
        .collect();
    Dfa::from_parts(first.alphabet().to_vec(), 0, finals, delta)
}

/// Shortest, lexicographically least word `w` with `target(a accepts w, b accepts w)`.
fn shortest_word(a: &Dfa, b: &Dfa, target: impl Fn(bool, bool) -> bool) -> Option<String> {
    let nb = b.state_count();
    let k = a.alphabet().len();
    let key = |p: usize, q: usize| p * nb + q;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; a.state_count() * nb];
    let start = key(a.initial(), b.initial());
    let mut seen = vec![false; parent.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([(a.initial(), b.initial())]);
    while let Some((p, q)) = queue.pop_front() {
        if target(a.is_final(p), b.is_final(q)) {
            let mut word = Vec::new();
            let mut cur = key(p, q);
            while let Some((prev, x)) = parent[cur] {
                word.push(a.alphabet()[x]);
                cur = prev;
            }
            return Some(word.into_iter().rev().collect());
        }
        for x in 0..k {
            let (p2, q2) = (a.step(p, x), b.step(q, x));
            let id = key(p2, q2);
            if !seen[id] {
                seen[id] = true;
                parent[id] = Some((key(p, q), x));
                queue.push_back((p2, q2));
            }
        }
    }
    None
}

/// `L(a) = L(b)`; on failure the certificate is the shortlex-least word of the symmetric difference.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<Verdict> {
    a.check_same_alphabet(b)?;
    Ok(match shortest_word(a, b, |x, y| x != y) {
        None => Verdict::Holds,
        Some(w) => Verdict::Fails(Certificate::Word(w)),
    })
}

/// `L(a) ⊆ L(b)`; on failure the certificate is the shortlex-least word of `L(a) \ L(b)`.
pub fn includes(a: &Dfa, b: &Dfa) -> Result<Verdict> {
    a.check_same_alphabet(b)?;
    Ok(match shortest_word(a, b, |x, y| x && !y) {
        None => Verdict::Holds,
        Some(w) => Verdict::Fails(Certificate::Word(w)),
    })
}

/// Matrix `m[p][q]` telling whether the residual at `p` is included in the residual at `q`.
///
/// Non-inclusion is the least fixpoint of "p final and q not, or some letter
/// leads to a non-included pair", propagated backwards over the pair graph.
pub fn residual_inclusion(a: &Dfa) -> Vec<Vec<bool>> {
    let n = a.state_count();
    let k = a.alphabet().len();
    let mut preds: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; k];
    for q in 0..n {
        for (x, by_letter) in preds.iter_mut().enumerate() {
            by_letter[a.step(q, x)].push(q);
        }
    }
    let mut bad = vec![vec![false; n]; n];
    let mut stack = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if a.is_final(p) && !a.is_final(q) {
                bad[p][q] = true;
                stack.push((p, q));
            }
        }
    }
    while let Some((p, q)) = stack.pop() {
        for by_letter in &preds {
            for &pp in &by_letter[p] {
                for &qq in &by_letter[q] {
                    if !bad[pp][qq] {
                        bad[pp][qq] = true;
                        stack.push((pp, qq));
                    }
                }
            }
        }
    }
    bad.into_iter()
        .map(|row| row.into_iter().map(|b| !b).collect())
        .collect()
}
