//! Minimal generators of an ideal and the automaton they rebuild.

use ideal_automata::{fixtures, isomorphic, lmin, shuffle_ideal, check_ideal, WordSet};

fn main() {
    let a = check_ideal(&fixtures::fig1()).unwrap();
    let gens = lmin(&a);
    println!("lmin = {gens}");

    let k = WordSet::parse("@alphabet abc\n# generators\ncabb\ncacca\ncbca\n").unwrap();
    let rebuilt = shuffle_ideal(&k).unwrap();
    println!(
        "rebuilt from {k}: {} states, same automaton: {}",
        rebuilt.state_count(),
        isomorphic(rebuilt.dfa(), a.dfa())
    );
}
