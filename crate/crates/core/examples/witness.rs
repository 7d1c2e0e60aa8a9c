//! The word proving that a linear automaton is intersection-prime.

use ideal_automata::inter::witness;
use ideal_automata::{check_ideal, principal_automaton};

fn main() {
    for w in ["ab", "aab", "abcabc"] {
        let letters: Vec<char> = if w.contains('c') { vec!['a', 'b', 'c'] } else { vec!['a', 'b'] };
        let a = check_ideal(&principal_automaton(w, &letters).unwrap()).unwrap();
        let wit = witness(&a).unwrap();
        println!(
            "{w}: factors {:?}, witness {} (accepted: {})",
            wit.factors,
            wit.word,
            a.accepts(&wit.word).unwrap()
        );
        for i in 0..wit.factors.len() {
            let longer = wit.duplicated(i);
            println!("  doubling factor {}: {longer} accepted: {}", i + 1, a.accepts(&longer).unwrap());
        }
    }
}
