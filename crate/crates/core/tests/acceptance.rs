//! Acceptance criteria, one line each.
//!
//! Runs without the libtest harness so every criterion prints exactly one
//! `PASS`/`FAIL` line; the process fails if any criterion does.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ideal_automata::inter::{self, damping_scan, decompose_inter_recursive, decompose_linear, is_inter_prime};
use ideal_automata::oracle::{exhaustive_prime_with_cap, minimal_ideal_automata, smaller_supersets};
use ideal_automata::union::{accel_scan, decompose_union, generator_bound, is_union_prime};
use ideal_automata::{
    check_ideal, concat, equivalent, fixtures, gen_fig6, isomorphic, lmin, power, principal_automaton, product, shuffle_ideal,
    Decomposition, Dfa, Error, IdealAutomaton, Mode, WordSet,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))
}

fn ideal(d: &Dfa) -> Result<IdealAutomaton, String> {
    check_ideal(d).map_err(|e| e.to_string())
}

fn err(e: Error) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let k = WordSet::new(&['a', 'b', 'c'], ["cabb", "cacca", "cbca"]).map_err(err)?;
    let a = shuffle_ideal(&k).map_err(err)?;
    let mut profile = a.ranks().as_slice().to_vec();
    profile.sort_unstable();
    within(start, Duration::from_secs(1))?;
    let expected = [0, 1, 2, 2, 3, 4, 4, 5];
    ensure(
        a.state_count() == 8 && profile == expected,
        format!(
            "minimal automaton has {} states with ranks {profile:?}; expected 8 states with ranks {expected:?}",
            a.state_count()
        ),
    )?;
    Ok(format!("8 states, ranks {profile:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let a = check_ideal(&fixtures::fig2_drawn())
        .map_err(|e| format!("the drawn two-branch automaton is rejected by check_ideal: {e}"))?;
    let info = inter::separator(&a).map_err(err)?;
    ensure(info.sep_set.len() == 2, format!("sep_set {:?}", info.sep_set))?;
    let fams: Vec<Dfa> = info
        .sep_set
        .iter()
        .map(|&r| inter::family_automaton(&a, r))
        .collect::<ideal_automata::Result<_>>()
        .map_err(err)?;
    for (name, e) in [("rho1", fixtures::fig3_rho1()), ("rho2", fixtures::fig3_rho2())] {
        ensure(fams.iter().any(|f| isomorphic(f, &e)), format!("no family automaton matches {name}"))?;
    }
    ensure(
        equivalent(&product(Mode::Inter, &fams).map_err(err)?, a.dfa()).map_err(err)?.holds(),
        "product differs from the source",
    )?;
    within(start, Duration::from_secs(1))?;
    Ok("sep_set of size 2, families match, product equivalent".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let a = ideal(&fixtures::fig4_a())?;
    let scan = damping_scan(&a).map_err(err)?;
    ensure(scan.damping_at() == [1], format!("damping at {:?}", scan.damping_at()))?;
    let a0 = inter::reduced_automaton(&a, 0).map_err(err)?;
    let a1 = inter::reduced_automaton(&a, 1).map_err(err)?;
    ensure(isomorphic(&a0, &fixtures::fig4_a0()), "A0 differs")?;
    ensure(isomorphic(&a1, &fixtures::fig4_a1()), "A1 differs")?;
    let both = product(Mode::Inter, &[a0, a1]).map_err(err)?;
    ensure(equivalent(&both, a.dfa()).map_err(err)?.holds(), "A0 ∩ A1 differs from A")?;
    let d = decompose_linear(&a).map_err(err)?;
    ensure(d.verified && d.len() == 2, "decompose_linear did not verify")?;
    within(start, Duration::from_secs(1))?;
    Ok("damping at k=1, A0 and A1 match, intersection equivalent".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let a = ideal(&fixtures::fig4_a())?;
    let scan = accel_scan(&a).map_err(err)?;
    ensure(scan.accelerating_at() == [2], format!("accelerating at {:?}", scan.accelerating_at()))?;
    let gens = lmin(&a);
    ensure(gens.words() == ["ab", "ba", "bb", "ca", "cb"], format!("lmin {gens}"))?;
    let d = decompose_union(&a).map_err(err)?;
    ensure(d.verified && d.len() == 5, format!("{} components, verified {}", d.len(), d.verified))?;
    let union = product(Mode::Union, &d.automata()).map_err(err)?;
    ensure(equivalent(&union, a.dfa()).map_err(err)?.holds(), "union differs from A")?;
    ensure(
        d.components.iter().all(|c| c.automaton.state_count() == 3),
        "a component does not have 3 states",
    )?;
    within(start, Duration::from_secs(1))?;
    Ok("accelerating at i=2, lmin {ab,ba,bb,ca,cb}, 5 verified components of 3 states".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 1..=3 {
        let r = decompose_inter_recursive(&gen_fig6(n).map_err(err)?).map_err(err)?;
        ensure(
            r.linear_leaves == 1 << n,
            format!("n={n}: {} linear leaves, expected {}", r.linear_leaves, 1 << n),
        )?;
        ensure(r.decomposition.verified, format!("n={n}: not verified"))?;
        counts.push(r.linear_leaves);
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("linear leaves {counts:?}"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let base = ideal(&fixtures::fig4_a())?;
    let mut counts = Vec::new();
    for n in 1..=3 {
        let a = power(&base, n).map_err(err)?;
        ensure(a.state_count() == 3 * n + 1, format!("A^{n} has {} states", a.state_count()))?;
        let r = decompose_inter_recursive(&a).map_err(err)?;
        let leaves = r.decomposition.len();
        ensure(leaves == 1 << n, format!("n={n}: {leaves} prime leaves, expected {}", 1 << n))?;
        ensure(
            r.decomposition.components.iter().all(|c| is_inter_prime(&check_ideal(&c.automaton).unwrap())),
            format!("n={n}: a leaf is not prime"),
        )?;
        ensure(r.decomposition.verified && r.within_bound(), format!("n={n}: not verified"))?;
        counts.push(leaves);
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("prime leaves {counts:?}"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let all = minimal_ideal_automata(&['a', 'b'], 4);
    for a in &all {
        for (mode, fast) in [(Mode::Inter, is_inter_prime(a)), (Mode::Union, is_union_prime(a))] {
            let slow = exhaustive_prime_with_cap(a, mode, 4).map_err(err)?;
            ensure(
                slow == fast,
                format!("{} mode: fast {fast}, oracle {slow} on {:?}", mode.name(), a.dfa()),
            )?;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{} automata, both modes agree ({:.1?})", all.len(), start.elapsed()))
}

fn random_words(rng: &mut StdRng) -> WordSet {
    let letters = ['a', 'b', 'c'];
    let k = rng.gen_range(1..=3);
    let alphabet = &letters[..k];
    let count = rng.gen_range(1..=3);
    let words: Vec<String> = (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=4);
            (0..len).map(|_| alphabet[rng.gen_range(0..k)]).collect()
        })
        .collect();
    WordSet::new(alphabet, words).expect("letters come from the alphabet")
}

fn check_components(d: &Decomposition, what: &str) -> Result<(), String> {
    ensure(d.verified, format!("{what}: not verified"))?;
    for c in &d.components {
        check_ideal(&c.automaton).map_err(|e| format!("{what}: component {}: {e}", c.tag))?;
        ensure(
            c.automaton.state_count() < d.source.state_count(),
            format!("{what}: component {} not smaller", c.tag),
        )?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x1dea1);
    let (mut inter_count, mut union_count) = (0, 0);
    for round in 0..200 {
        let k = random_words(&mut rng);
        let a = shuffle_ideal(&k).map_err(|e| format!("round {round} {k}: {e}"))?;
        if !is_inter_prime(&a) {
            let d = if a.is_linear() {
                decompose_linear(&a)
            } else {
                inter::decompose_nonlinear(&a)
            }
            .map_err(|e| format!("round {round} {k}: {e}"))?;
            check_components(&d, &format!("round {round} {k} inter"))?;
            let r = decompose_inter_recursive(&a).map_err(|e| format!("round {round} {k}: {e}"))?;
            check_components(&r.decomposition, &format!("round {round} {k} recursive"))?;
            inter_count += 1;
        }
        if !is_union_prime(&a) {
            let d = decompose_union(&a).map_err(|e| format!("round {round} {k}: {e}"))?;
            check_components(&d, &format!("round {round} {k} union"))?;
            union_count += 1;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "200 sets, {inter_count} intersection and {union_count} union decompositions verified"
    ))
}

fn witness_sound(a: &IdealAutomaton) -> Result<(), String> {
    let w = inter::witness(a).map_err(err)?;
    let dfa = a.dfa();
    ensure(!a.accepts(&w.word).map_err(err)?, format!("witness {:?} accepted by {dfa:?}", w.word))?;
    let chain = a.chain().map_err(err)?;
    for (i, f) in w.factors.iter().enumerate() {
        let q = dfa.run_from(chain[i], f).map_err(err)?;
        ensure(q == chain[i + 1], format!("w({}) = {f} does not move q{i} to q{}", i + 1, i + 1))?;
        ensure(
            dfa.run_from(chain[i + 1], f).map_err(err)? != chain[i + 1],
            format!("w({}) = {f} stays in q{}", i + 1, i + 1),
        )?;
        ensure(
            a.accepts(&w.duplicated(i)).map_err(err)?,
            format!("duplicating w({}) in {:?} is rejected", i + 1, w.word),
        )?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut fixtures_checked = 0;
    let mut primes: Vec<IdealAutomaton> = Vec::new();
    for (w, alphabet) in [("ab", "ab"), ("ba", "ab"), ("aab", "ab"), ("cabb", "abc"), ("abcabc", "abc"), ("a", "a")] {
        let letters: Vec<char> = alphabet.chars().collect();
        primes.push(ideal(&principal_automaton(w, &letters).map_err(err)?)?);
    }
    let base = ideal(&fixtures::fig4_a())?;
    let cube = power(&base, 3).map_err(err)?;
    for c in decompose_inter_recursive(&cube).map_err(err)?.decomposition.components {
        primes.push(ideal(&c.automaton)?);
    }
    let small: Vec<IdealAutomaton> = minimal_ideal_automata(&['a', 'b'], 4)
        .into_iter()
        .filter(|a| a.state_count() >= 2 && is_inter_prime(a))
        .collect();
    primes.extend(small.iter().cloned());
    for a in &primes {
        if a.state_count() < 2 {
            continue;
        }
        ensure(is_inter_prime(a), format!("fixture not prime: {:?}", a.dfa()))?;
        witness_sound(a)?;
        fixtures_checked += 1;
    }
    let mut supersets = 0;
    for a in &small {
        let w = inter::witness(a).map_err(err)?;
        for b in smaller_supersets(a).map_err(err)? {
            ensure(
                b.accepts(&w.word).map_err(err)?,
                format!("witness {:?} of {:?} rejected by smaller superset {b:?}", w.word, a.dfa()),
            )?;
            supersets += 1;
        }
    }
    Ok(format!(
        "{fixtures_checked} prime automata sound; {supersets} smaller supersets of {} automata accept their witness",
        small.len()
    ))
}

fn union_bound_holds(a: &IdealAutomaton) -> Result<(), String> {
    let structural = accel_scan(a).map(|s| s.first().is_none()).unwrap_or(false);
    let by_size = a.state_count() == generator_bound(a);
    ensure(
        structural == by_size,
        format!("structural {structural}, size {by_size} on {:?}", a.dfa()),
    )
}

fn criterion_10() -> Outcome {
    let mut all: Vec<IdealAutomaton> = Vec::new();
    for d in [
        fixtures::fig1(),
        fixtures::fig2(),
        fixtures::fig4_a(),
        fixtures::fig4_a0(),
        fixtures::fig4_a1(),
        fixtures::fig3_rho1(),
        fixtures::fig3_rho2(),
    ] {
        all.push(ideal(&d)?);
    }
    for n in 1..=3 {
        all.push(gen_fig6(n).map_err(err)?);
        all.push(power(&ideal(&fixtures::fig4_a())?, n).map_err(err)?);
    }
    for w in ["", "a", "ab", "cabb", "abcabc"] {
        all.push(ideal(&principal_automaton(w, &['a', 'b', 'c']).map_err(err)?)?);
    }
    all.extend(minimal_ideal_automata(&['a', 'b'], 4));
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        all.push(shuffle_ideal(&random_words(&mut rng)).map_err(err)?);
    }
    for a in &all {
        union_bound_holds(a)?;
    }
    Ok(format!("{} automata, 0 discrepancies", all.len()))
}

fn benchmark() -> Outcome {
    let base = ideal(&fixtures::fig4_a())?;
    let word: String = "abc".repeat(332);
    let tail = ideal(&principal_automaton(&word, &['a', 'b', 'c']).map_err(err)?)?;
    let big = concat(&base, &tail).map_err(err)?;
    ensure(big.state_count() == 1000, format!("{} states", big.state_count()))?;
    let raw = big.dfa().clone();
    let start = Instant::now();
    let a = check_ideal(&raw).map_err(err)?;
    let d = decompose_linear(&a).map_err(err)?;
    let took = start.elapsed();
    ensure(d.verified, "not verified")?;
    ensure(took < Duration::from_secs(1), format!("took {took:?}"))?;
    Ok(format!("check + decompose of 1000 states in {took:.1?}"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 three-generator ideal reproduction", criterion_1),
        ("2 two-branch family reproduction", criterion_2),
        ("3 linear intersection decomposition", criterion_3),
        ("4 linear union decomposition", criterion_4),
        ("5 tightness, non-linear", criterion_5),
        ("6 tightness, linear", criterion_6),
        ("7 oracle agreement", criterion_7),
        ("8 randomized soundness", criterion_8),
        ("9 witness suite", criterion_9),
        ("10 union size consistency", criterion_10),
        ("benchmark 1000 states", benchmark),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
