//! Reachability order, ranks and linearity.

use std::collections::VecDeque;

use crate::dfa::{Certificate, Dfa, Verdict};
use crate::error::{Error, Result};

/// How two states compare under reachability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `q ≼ r` and not `r ≼ q`.
    Below,
    /// `r ≼ q` and not `q ≼ r`.
    Above,
    /// Each reaches the other: the same state or the same cycle.
    Mutual,
    Incomparable,
}

/// `reaches[q][r]` iff some word drives `q` to `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachOrder {
    reaches: Vec<Vec<bool>>,
}

impl ReachOrder {
    pub fn new(a: &Dfa) -> ReachOrder {
        ReachOrder {
            reaches: (0..a.state_count()).map(|q| a.reachable_from(q)).collect(),
        }
    }

    pub fn state_count(&self) -> usize {
        self.reaches.len()
    }

    /// `q ≼ r`.
    pub fn le(&self, q: usize, r: usize) -> bool {
        self.reaches[q][r]
    }

    /// `q ≺ r`.
    pub fn lt(&self, q: usize, r: usize) -> bool {
        q != r && self.reaches[q][r]
    }

    pub fn relation(&self, q: usize, r: usize) -> Relation {
        match (self.reaches[q][r], self.reaches[r][q]) {
            (true, true) => Relation::Mutual,
            (true, false) => Relation::Below,
            (false, true) => Relation::Above,
            (false, false) => Relation::Incomparable,
        }
    }

    pub fn comparable(&self, q: usize, r: usize) -> bool {
        self.relation(q, r) != Relation::Incomparable
    }

    /// Ancestors `{s : s ≼ q}`.
    pub fn ancestors(&self, q: usize) -> Vec<usize> {
        (0..self.state_count()).filter(|&s| self.reaches[s][q]).collect()
    }

    /// Descendants `{s : q ≼ s}`.
    pub fn descendants(&self, q: usize) -> Vec<usize> {
        (0..self.state_count()).filter(|&s| self.reaches[q][s]).collect()
    }

    /// True when mutual reachability only holds on the diagonal.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.state_count();
        (0..n).all(|q| (q + 1..n).all(|r| !(self.reaches[q][r] && self.reaches[r][q])))
    }

    /// First incomparable pair `(q, r)`, `q < r`, in index order.
    pub fn first_incomparable(&self) -> Option<(usize, usize)> {
        let n = self.state_count();
        (0..n)
            .flat_map(|q| (q + 1..n).map(move |r| (q, r)))
            .find(|&(q, r)| !self.comparable(q, r))
    }
}

/// `reach_order` for the module-level API.
pub fn reach_order(a: &Dfa) -> ReachOrder {
    ReachOrder::new(a)
}

/// Longest loop-free path length from the initial state to every state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    ranks: Vec<usize>,
    counts: Vec<usize>,
}

impl RankTable {
    pub fn rank(&self, q: usize) -> usize {
        self.ranks[q]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.ranks
    }

    /// `counts()[m]` is the number of states of rank `m`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn max_rank(&self) -> usize {
        self.counts.len() - 1
    }

    /// States of rank `m`, by increasing index.
    pub fn states_at(&self, m: usize) -> Vec<usize> {
        (0..self.ranks.len()).filter(|&q| self.ranks[q] == m).collect()
    }
}

/// Ranks of a partially ordered automaton (every cycle is a self-loop).
///
/// Dropping self-loops leaves a DAG; ranks are longest paths from the initial
/// state, computed along a Kahn topological order.
pub fn ranks(a: &Dfa) -> Result<RankTable> {
    let n = a.state_count();
    let k = a.alphabet().len();
    let reach = a.reachable_from(a.initial());
    if let Some(q) = reach.iter().position(|&r| !r) {
        return Err(Error::Unreachable(q));
    }
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for q in 0..n {
        for x in 0..k {
            let t = a.step(q, x);
            if t != q && !succ[q].contains(&t) {
                succ[q].push(t);
                indegree[t] += 1;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut queue: VecDeque<usize> = (0..n).filter(|&q| indegree[q] == 0).collect();
    let mut remaining = indegree.clone();
    while let Some(q) = queue.pop_front() {
        order.push(q);
        for &t in &succ[q] {
            remaining[t] -= 1;
            if remaining[t] == 0 {
                queue.push_back(t);
            }
        }
    }
    if order.len() < n {
        return Err(Error::NotPartiallyOrdered {
            cycle: find_cycle(&succ, &remaining),
        });
    }
    let mut rank = vec![0usize; n];
    for &q in &order {
        for &t in &succ[q] {
            rank[t] = rank[t].max(rank[q] + 1);
        }
    }
    let max = rank.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0; max + 1];
    for &r in &rank {
        counts[r] += 1;
    }
    Ok(RankTable {
        ranks: rank,
        counts,
    })
}

// Every state left over by Kahn's algorithm has a leftover predecessor, so
// walking predecessors must eventually repeat a state.
fn find_cycle(succ: &[Vec<usize>], remaining: &[usize]) -> Vec<usize> {
    let n = succ.len();
    let mut pred = vec![usize::MAX; n];
    for q in (0..n).filter(|&q| remaining[q] > 0) {
        for &t in &succ[q] {
            if remaining[t] > 0 && pred[t] == usize::MAX {
                pred[t] = q;
            }
        }
    }
    let mut pos = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut cur = (0..n).find(|&q| remaining[q] > 0).expect("a leftover state");
    while pos[cur] == usize::MAX {
        pos[cur] = path.len();
        path.push(cur);
        cur = pred[cur];
    }
    let mut cycle = path[pos[cur]..].to_vec();
    cycle.reverse();
    cycle
}

/// Whether reachability is a total preorder; certificate is an incomparable pair.
pub fn is_linear(a: &Dfa) -> Verdict {
    is_linear_with(&ReachOrder::new(a))
}

pub(crate) fn is_linear_with(order: &ReachOrder) -> Verdict {
    match order.first_incomparable() {
        None => Verdict::Holds,
        Some((q, r)) => Verdict::Fails(Certificate::StatePair(q, r)),
    }
}
