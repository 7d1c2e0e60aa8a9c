//! Minimization by partition refinement and canonical BFS numbering.

use std::collections::{HashMap, VecDeque};

use crate::dfa::Dfa;

/// Renumbers the states reachable from the initial state in breadth-first
/// discovery order (letters in alphabet order). Unreachable states are dropped.
pub fn canonical(a: &Dfa) -> Dfa {
    let n = a.state_count();
    let k = a.alphabet().len();
    let mut index = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    index[a.initial()] = 0;
    order.push(a.initial());
    let mut queue = VecDeque::from([a.initial()]);
    while let Some(q) = queue.pop_front() {
        for x in 0..k {
            let t = a.step(q, x);
            if index[t] == usize::MAX {
                index[t] = order.len();
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    let finals: Vec<usize> = (0..order.len()).filter(|&i| a.is_final(order[i])).collect();
    Dfa::from_fn(a.alphabet().to_vec(), order.len(), 0, &finals, |i, x| {
        index[a.step(order[i], x)]
    })
    .expect("canonical renumbering preserves validity")
}

/// The minimal complete DFA for the language of `a`, canonically numbered.
///
/// Refines the final/non-final split until the partition is a congruence
/// (Moore's refinement), then renumbers by [`canonical`].
pub fn minimize(a: &Dfa) -> Dfa {
    let a = canonical(a);
    let n = a.state_count();
    let k = a.alphabet().len();

    let mut class: Vec<usize> = (0..n).map(|q| usize::from(a.is_final(q))).collect();
    let mut count = class.iter().collect::<std::collections::HashSet<_>>().len();
    let mut signatures: HashMap<Vec<usize>, usize> = HashMap::new();
    loop {
        signatures.clear();
        let mut next = Vec::with_capacity(n);
        for q in 0..n {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[q]);
            sig.extend((0..k).map(|x| class[a.step(q, x)]));
            let fresh = signatures.len();
            next.push(*signatures.entry(sig).or_insert(fresh));
        }
        let refined = signatures.len();
        class = next;
        if refined == count {
            break;
        }
        count = refined;
    }

    let mut representative = vec![usize::MAX; count];
    for q in 0..n {
        if representative[class[q]] == usize::MAX {
            representative[class[q]] = q;
        }
    }
    let finals: Vec<usize> = (0..count)
        .filter(|&c| a.is_final(representative[c]))
        .collect();
    let quotient = Dfa::from_fn(a.alphabet().to_vec(), count, class[a.initial()], &finals, |c, x| {
        class[a.step(representative[c], x)]
    })
    .expect("quotient of a valid automaton is valid");
    canonical(&quotient)
}

pub fn is_minimal(a: &Dfa) -> bool {
    minimize(a).state_count() == a.state_count()
}

/// Isomorphism of the initially-connected parts (exact for trim or minimal automata).
pub fn isomorphic(a: &Dfa, b: &Dfa) -> bool {
    a.state_count() == b.state_count() && canonical(a) == canonical(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig4() -> Dfa {
        Dfa::from_triples(
            "abc",
            4,
            0,
            &[3],
            &[
                (0, 'a', 1),
                (0, 'b', 2),
                (0, 'c', 2),
                (1, 'a', 1),
                (1, 'b', 3),
                (1, 'c', 2),
                (2, 'a', 3),
                (2, 'b', 3),
                (2, 'c', 2),
                (3, 'a', 3),
                (3, 'b', 3),
                (3, 'c', 3),
            ],
        )
        .unwrap()
    }

    /// Independent check: all residuals of the three-letter fixture are pairwise distinct,
    /// computed by the naive equivalence closure over state pairs.
    fn distinct_residuals(a: &Dfa) -> bool {
        let n = a.state_count();
        let k = a.alphabet().len();
        let mut dist = vec![vec![false; n]; n];
        for p in 0..n {
            for q in 0..n {
                dist[p][q] = a.is_final(p) != a.is_final(q);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            for p in 0..n {
                for q in 0..n {
                    if !dist[p][q] && (0..k).any(|x| dist[a.step(p, x)][a.step(q, x)]) {
                        dist[p][q] = true;
                        changed = true;
                    }
                }
            }
        }
        (0..n).all(|p| (0..n).all(|q| p == q || dist[p][q]))
    }

    #[test]
    fn fig4_is_already_minimal() {
        let a = fig4();
        assert!(distinct_residuals(&a));
        let m = minimize(&a);
        assert!(isomorphic(&m, &a));
        assert_eq!(m.state_count(), 4);
    }

    #[test]
    fn two_universal_states_collapse() {
        let a = Dfa::from_triples(
            "ab",
            2,
            0,
            &[0, 1],
            &[(0, 'a', 1), (0, 'b', 0), (1, 'a', 0), (1, 'b', 1)],
        )
        .unwrap();
        assert_eq!(minimize(&a), Dfa::universal(&['a', 'b']));
    }

    #[test]
    fn empty_language_minimizes_to_one_rejecting_state() {
        let a = Dfa::from_triples("a", 2, 0, &[], &[(0, 'a', 1), (1, 'a', 0)]).unwrap();
        let m = minimize(&a);
        assert_eq!(m.state_count(), 1);
        assert!(!m.is_final(0));
    }

    #[test]
    fn canonical_numbering_is_bfs() {
        // states listed in reverse discovery order
        let a = Dfa::from_triples(
            "ab",
            3,
            2,
            &[0],
            &[
                (2, 'a', 1),
                (2, 'b', 2),
                (1, 'a', 1),
                (1, 'b', 0),
                (0, 'a', 0),
                (0, 'b', 0),
            ],
        )
        .unwrap();
        let c = canonical(&a);
        assert_eq!(c.initial(), 0);
        assert_eq!(c.step(0, 0), 1);
        assert_eq!(c.step(1, 1), 2);
        assert!(c.is_final(2));
    }
}
