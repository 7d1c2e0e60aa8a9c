//! Validate automata and get a certificate when the language is not an ideal.

use ideal_automata::{check_ideal, fixtures, Dfa, Error};

fn main() {
    let a = check_ideal(&fixtures::fig4_a()).expect("fig4 is an ideal");
    println!("fig4: {} states, linear: {}, ranks {:?}", a.state_count(), a.is_linear(), a.ranks().as_slice());

    // exactly {ab}: accepted words stop being accepted once a letter is added
    let exact = Dfa::from_triples(
        "ab",
        4,
        0,
        &[2],
        &[
            (0, 'a', 1),
            (0, 'b', 3),
            (1, 'a', 3),
            (1, 'b', 2),
            (2, 'a', 3),
            (2, 'b', 3),
            (3, 'a', 3),
            (3, 'b', 3),
        ],
    )
    .unwrap();
    match check_ideal(&exact) {
        Err(Error::NotIdeal { word, upper_word }) => println!("not an ideal: {word} accepted, {upper_word} rejected"),
        other => println!("unexpected: {other:?}"),
    }

    match check_ideal(&fixtures::fig2_drawn()) {
        Err(e) => println!("drawn two-branch automaton: {e}"),
        Ok(_) => println!("drawn two-branch automaton is an ideal"),
    }
}
