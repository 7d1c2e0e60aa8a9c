//! Intersection primality and decomposition.
//!
//! A non-linear automaton splits into one family automaton per state just
//! above the separator. A linear automaton `q_0 ≺ … ≺ q_n` is composite
//! exactly when it has a damping pattern, and then splits into two reduced
//! automata. Everything else is prime, and [`witness`] produces the word that
//! proves it.

use std::collections::HashSet;

use crate::decomposition::{Component, Decomposition, Tag};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::ideal::{check_ideal, letters_between, IdealAutomaton};
use crate::minimize::canonical;
use crate::order::{RankTable, ReachOrder};
use crate::product::Mode;

/// Knobs shared by the decomposition entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Check the product of the components against the source.
    pub verify: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { verify: true }
    }
}

fn finish(d: Decomposition, opts: Options) -> Result<Decomposition> {
    if opts.verify {
        d.verify()
    } else {
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorInfo {
    pub sep: usize,
    /// States of rank `sep_rank + 1`, by index.
    pub sep_set: Vec<usize>,
    pub sep_rank: usize,
}

/// The last state below which every rank holds a single state, and the
/// states one rank above it.
pub fn separator(a: &IdealAutomaton) -> Result<SeparatorInfo> {
    if a.is_linear() {
        return Err(Error::LinearInput);
    }
    let counts = a.ranks().counts();
    let sep_rank = counts.iter().take_while(|&&c| c == 1).count() - 1;
    let sep = a.ranks().states_at(sep_rank)[0];
    let sep_set = a.ranks().states_at(sep_rank + 1);
    debug_assert!(sep_set.len() >= 2);
    Ok(SeparatorInfo {
        sep,
        sep_set,
        sep_rank,
    })
}

/// `A(ρ)`: the restriction to `Anc(ρ) ∪ Desc(ρ)`.
///
/// From an ancestor `q` on letter `x`, the transition is taken from the first
/// state `s` up the ancestor chain (starting at `q`) whose `x`-successor stays
/// in the family. Descendants keep their transitions.
pub fn family_automaton(a: &IdealAutomaton, rho: usize) -> Result<Dfa> {
    let info = separator(a)?;
    if !info.sep_set.contains(&rho) {
        return Err(Error::NotInSeparatorSet(rho));
    }
    family_of(a.dfa(), a.order(), a.ranks(), a.final_state(), rho)
}

// The construction itself, usable on any partially ordered automaton.
pub(crate) fn family_of(dfa: &Dfa, order: &ReachOrder, ranks: &RankTable, final_state: usize, rho: usize) -> Result<Dfa> {
    let mut ancestors = order.ancestors(rho);
    ancestors.sort_by_key(|&q| ranks.rank(q));
    let n = dfa.state_count();
    let in_family: Vec<bool> = (0..n).map(|q| order.le(q, rho) || order.le(rho, q)).collect();
    let kept: Vec<usize> = (0..n).filter(|&q| in_family[q]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &q) in kept.iter().enumerate() {
        index[q] = i;
    }
    let target = |q: usize, x: usize| -> usize {
        let Some(start) = ancestors.iter().position(|&s| s == q) else {
            return dfa.step(q, x);
        };
        ancestors[start..]
            .iter()
            .map(|&s| dfa.step(s, x))
            .find(|&t| in_family[t])
            .expect("ρ itself has all its successors in the family")
    };
    let finals = [index[final_state]];
    let family = Dfa::from_fn(dfa.alphabet().to_vec(), kept.len(), index[dfa.initial()], &finals, |i, x| {
        index[target(kept[i], x)]
    })?;
    Ok(canonical(&family))
}

/// One family automaton per separator-set state; their intersection is `a`.
pub fn decompose_nonlinear(a: &IdealAutomaton) -> Result<Decomposition> {
    decompose_nonlinear_with(a, Options::default())
}

pub fn decompose_nonlinear_with(a: &IdealAutomaton, opts: Options) -> Result<Decomposition> {
    let info = separator(a)?;
    let components = info
        .sep_set
        .iter()
        .map(|&rho| {
            Ok(Component {
                tag: Tag::Family { rho },
                automaton: family_automaton(a, rho)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    finish(
        Decomposition {
            mode: Mode::Inter,
            source: a.dfa().clone(),
            components,
            verified: false,
        },
        opts,
    )
}

/// Letter sets around one consecutive pair `q_{k-1}, q_k` of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DampingStep {
    pub k: usize,
    /// `Σ_{k-1,k-1}`
    pub stay_before: Vec<char>,
    /// `Σ_{k-1,k}`
    pub advance: Vec<char>,
    /// `Σ_{k,k}`
    pub stay: Vec<char>,
    pub damping: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DampingScan {
    /// `chain[i]` is the state index of `q_i`.
    pub chain: Vec<usize>,
    /// One entry per `k` in `1..n`.
    pub steps: Vec<DampingStep>,
}

impl DampingScan {
    /// Smallest `k` with a damping pattern between `q_{k-1}` and `q_k`.
    pub fn first(&self) -> Option<usize> {
        self.steps.iter().find(|s| s.damping).map(|s| s.k)
    }

    pub fn damping_at(&self) -> Vec<usize> {
        self.steps.iter().filter(|s| s.damping).map(|s| s.k).collect()
    }
}

pub fn damping_scan(a: &IdealAutomaton) -> Result<DampingScan> {
    let chain = a.chain()?;
    let dfa = a.dfa();
    let n = chain.len() - 1;
    let steps = (1..n)
        .map(|k| {
            let (p, q) = (chain[k - 1], chain[k]);
            let stay_before = letters_between(dfa, p, p);
            let advance = letters_between(dfa, p, q);
            let stay = letters_between(dfa, q, q);
            let damping = stay_before.iter().chain(&advance).all(|c| stay.contains(c));
            DampingStep {
                k,
                stay_before,
                advance,
                stay,
                damping,
            }
        })
        .collect();
    Ok(DampingScan { chain, steps })
}

/// `A_k`: `q_k` removed and its incoming transitions sent to `q_{k+1}`.
pub fn reduced_automaton(a: &IdealAutomaton, k: usize) -> Result<Dfa> {
    let chain = a.chain()?;
    let n = chain.len() - 1;
    if k >= n {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: n.saturating_sub(1),
        });
    }
    let dfa = a.dfa();
    let mut pos = vec![0; chain.len()];
    for (i, &q) in chain.iter().enumerate() {
        pos[q] = i;
    }
    // chain position to index in A_k
    let squeeze = |i: usize| {
        let i = if i == k { k + 1 } else { i };
        if i > k {
            i - 1
        } else {
            i
        }
    };
    Dfa::from_fn(dfa.alphabet().to_vec(), n, 0, &[n - 1], |i, x| {
        let p = if i >= k { i + 1 } else { i };
        squeeze(pos[dfa.step(chain[p], x)])
    })
}

/// `[A_{k-1}, A_k]` for the smallest damping index `k`.
pub fn decompose_linear(a: &IdealAutomaton) -> Result<Decomposition> {
    decompose_linear_with(a, Options::default())
}

pub fn decompose_linear_with(a: &IdealAutomaton, opts: Options) -> Result<Decomposition> {
    let k = damping_scan(a)?.first().ok_or(Error::NoDampingPattern)?;
    let components = [k - 1, k]
        .into_iter()
        .map(|j| {
            Ok(Component {
                tag: Tag::Reduced { k: j },
                automaton: reduced_automaton(a, j)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    finish(
        Decomposition {
            mode: Mode::Inter,
            source: a.dfa().clone(),
            components,
            verified: false,
        },
        opts,
    )
}

/// Prime for intersection iff linear without damping pattern.
pub fn is_inter_prime(a: &IdealAutomaton) -> bool {
    match damping_scan(a) {
        Ok(scan) => scan.first().is_none(),
        Err(_) => false,
    }
}

/// A word rejected by `a` and accepted by every smaller automaton whose
/// language contains `L(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// `w(1), …, w(n-1)`.
    pub factors: Vec<String>,
    pub word: String,
}

impl Witness {
    /// The witness with factor `i` (0-based) written twice in place.
    pub fn duplicated(&self, i: usize) -> String {
        let mut out = String::new();
        for (j, f) in self.factors.iter().enumerate() {
            out.push_str(f);
            if j == i {
                out.push_str(f);
            }
        }
        out
    }
}

/// Builds `w(i)` for each `i` in `1..n`: the least letter of
/// `Σ_{i-1,i} \ Σ_{i,i}` if there is one, otherwise the least letter of
/// `Σ_{i-1,i-1} \ Σ_{i,i}` followed by the least letter of `Σ_{i-1,i}`.
///
/// The single-state automaton gets the empty witness, which it accepts.
pub fn witness(a: &IdealAutomaton) -> Result<Witness> {
    let scan = damping_scan(a)?;
    let mut factors = Vec::with_capacity(scan.steps.len());
    for s in &scan.steps {
        let outside = |set: &[char]| set.iter().copied().find(|c| !s.stay.contains(c));
        let factor = if let Some(c) = outside(&s.advance) {
            c.to_string()
        } else if let Some(c) = outside(&s.stay_before) {
            format!("{c}{}", s.advance[0])
        } else {
            return Err(Error::DampingPresent(s.k - 1, s.k));
        };
        factors.push(factor);
    }
    let word = factors.concat();
    Ok(Witness { factors, word })
}

/// Result of [`decompose_inter_recursive`] with the counts collected on the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursiveDecomposition {
    /// Distinct prime components.
    pub decomposition: Decomposition,
    /// Linear automata produced by splitting non-linear ones, with multiplicity.
    pub linear_leaves: usize,
    /// Prime automata produced by refining the linear leaves, with multiplicity.
    pub prime_leaves: usize,
}

impl RecursiveDecomposition {
    /// `prime_leaves ≤ 2^(2|A|)`.
    pub fn within_bound(&self) -> bool {
        let exp = 2 * self.decomposition.source.state_count();
        exp >= usize::BITS as usize || self.prime_leaves <= 1usize << exp
    }
}

/// Splits until every component is intersection-prime.
///
/// Non-linear automata are split first into linear leaves, which are then
/// split into primes. Every component is re-minimized before recursing.
/// Equal primes are merged; the counts keep multiplicities.
pub fn decompose_inter_recursive(a: &IdealAutomaton) -> Result<RecursiveDecomposition> {
    decompose_inter_recursive_with(a, Options::default())
}

pub fn decompose_inter_recursive_with(a: &IdealAutomaton, opts: Options) -> Result<RecursiveDecomposition> {
    let local = Options { verify: false };
    let mut linear = Vec::new();
    let mut stack = vec![a.clone()];
    while let Some(b) = stack.pop() {
        if b.is_linear() {
            linear.push(b);
            continue;
        }
        for c in decompose_nonlinear_with(&b, local)?.components {
            stack.push(check_ideal(&c.automaton)?);
        }
    }
    let linear_leaves = linear.len();

    let mut primes = Vec::new();
    while let Some(b) = linear.pop() {
        if is_inter_prime(&b) {
            primes.push(b);
            continue;
        }
        for c in decompose_linear_with(&b, local)?.components {
            linear.push(check_ideal(&c.automaton)?);
        }
    }
    let prime_leaves = primes.len();

    let mut seen = HashSet::new();
    primes.retain(|p| seen.insert(p.dfa().clone()));
    primes.sort_by(|p, q| {
        (p.state_count(), p.dfa().to_json()).cmp(&(q.state_count(), q.dfa().to_json()))
    });
    let components = primes
        .into_iter()
        .map(|p| Component {
            tag: Tag::Leaf,
            automaton: p.into_dfa(),
        })
        .collect();
    let decomposition = finish(
        Decomposition {
            mode: Mode::Inter,
            source: a.dfa().clone(),
            components,
            verified: false,
        },
        opts,
    )?;
    let out = RecursiveDecomposition {
        decomposition,
        linear_leaves,
        prime_leaves,
    };
    debug_assert!(out.within_bound());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{gen_fig6, power, principal_automaton};
    use crate::fixtures;
    use crate::minimize::isomorphic;
    use crate::product::{equivalent, includes, product};

    fn ideal(d: &Dfa) -> IdealAutomaton {
        check_ideal(d).unwrap()
    }

    #[test]
    fn fig2_separator_and_families() {
        let a = ideal(&fixtures::fig2());
        let info = separator(&a).unwrap();
        assert_eq!(info.sep_rank, 2);
        assert_eq!(info.sep_set.len(), 2);
        let d = decompose_nonlinear(&a).unwrap();
        assert!(d.verified);
        assert_eq!(d.len(), 2);
        for c in &d.components {
            check_ideal(&c.automaton).unwrap();
        }
    }

    #[test]
    fn drawn_fig2_families_are_fig3() {
        let d = fixtures::fig2_drawn();
        assert!(matches!(check_ideal(&d), Err(Error::NotIdeal { .. })));
        let order = ReachOrder::new(&d);
        let r = crate::order::ranks(&d).unwrap();
        let f1 = family_of(&d, &order, &r, 7, fixtures::FIG2_RHO1).unwrap();
        let f2 = family_of(&d, &order, &r, 7, fixtures::FIG2_RHO2).unwrap();
        assert!(isomorphic(&f1, &fixtures::fig3_rho1()));
        assert!(isomorphic(&f2, &fixtures::fig3_rho2()));
        // the intersection is not the drawn language
        let both = product(Mode::Inter, &[f1, f2]).unwrap();
        assert_eq!(equivalent(&both, &d).unwrap().word(), Some("abb"));
    }

    #[test]
    fn separator_rejects_linear_and_outsiders() {
        let a = ideal(&fixtures::fig4_a());
        assert_eq!(separator(&a), Err(Error::LinearInput));
        let b = ideal(&fixtures::fig2());
        let info = separator(&b).unwrap();
        assert_eq!(family_automaton(&b, info.sep), Err(Error::NotInSeparatorSet(info.sep)));
    }

    #[test]
    fn families_are_smaller_ideals() {
        for d in [fixtures::fig1(), fixtures::fig2(), gen_fig6(2).unwrap().into_dfa()] {
            let a = ideal(&d);
            let dec = decompose_nonlinear(&a).unwrap();
            for c in &dec.components {
                assert!(c.automaton.state_count() < a.state_count());
                check_ideal(&c.automaton).unwrap();
            }
        }
    }

    #[test]
    fn fig4_damping_and_reduction() {
        let a = ideal(&fixtures::fig4_a());
        let scan = damping_scan(&a).unwrap();
        assert_eq!(scan.damping_at(), vec![1]);
        assert_eq!(scan.steps[0].advance, vec!['a']);
        assert_eq!(scan.steps[0].stay, vec!['a']);
        assert!(isomorphic(&reduced_automaton(&a, 0).unwrap(), &fixtures::fig4_a0()));
        assert!(isomorphic(&reduced_automaton(&a, 1).unwrap(), &fixtures::fig4_a1()));
        assert_eq!(
            reduced_automaton(&a, 3),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        );
        let d = decompose_linear(&a).unwrap();
        assert_eq!(d.components[0].tag, Tag::Reduced { k: 0 });
        assert!(d.verified);
        assert!(!is_inter_prime(&a));
    }

    #[test]
    fn reduced_automata_contain_source() {
        let a = power(&ideal(&fixtures::fig4_a()), 2).unwrap();
        for k in 0..a.state_count() - 1 {
            let r = reduced_automaton(&a, k).unwrap();
            assert!(includes(a.dfa(), &r).unwrap().holds(), "k={k}");
            check_ideal(&r).unwrap();
        }
        let d = decompose_linear(&a).unwrap();
        assert!(d.components.iter().all(|c| c.automaton.state_count() == 6));
    }

    #[test]
    fn principal_ab_is_prime_with_witness() {
        let a = ideal(&principal_automaton("ab", &['a', 'b']).unwrap());
        let scan = damping_scan(&a).unwrap();
        assert_eq!(scan.steps[0].stay_before, vec!['b']);
        assert_eq!(scan.steps[0].advance, vec!['a']);
        assert!(scan.first().is_none());
        assert!(is_inter_prime(&a));
        assert_eq!(decompose_linear(&a), Err(Error::NoDampingPattern));
        let w = witness(&a).unwrap();
        assert_eq!(w.word, "ba");
        assert!(!a.accepts("ba").unwrap());
        assert!(a.accepts(&w.duplicated(0)).unwrap());
    }

    #[test]
    fn witness_needs_prime_linear() {
        assert!(matches!(
            witness(&ideal(&fixtures::fig2())),
            Err(Error::NonLinearInput(_, _))
        ));
        assert_eq!(witness(&ideal(&fixtures::fig4_a())), Err(Error::DampingPresent(0, 1)));
    }

    #[test]
    fn recursive_on_prime_is_leaf() {
        let a = ideal(&principal_automaton("ab", &['a', 'b']).unwrap());
        let r = decompose_inter_recursive(&a).unwrap();
        assert!(r.decomposition.is_leaf());
        assert_eq!(r.prime_leaves, 1);
    }

    #[test]
    fn recursive_fig4_power_counts() {
        let base = ideal(&fixtures::fig4_a());
        for n in 1..=3 {
            let a = power(&base, n).unwrap();
            let r = decompose_inter_recursive(&a).unwrap();
            assert_eq!(r.decomposition.len(), 1 << n, "n={n}");
            assert!(r.decomposition.verified);
            assert!(r.within_bound());
        }
    }

    #[test]
    fn recursive_fig6_counts() {
        for n in 1..=3 {
            let r = decompose_inter_recursive(&gen_fig6(n).unwrap()).unwrap();
            assert_eq!(r.linear_leaves, 1 << n, "n={n}");
            assert!(r.decomposition.verified);
        }
    }
}
