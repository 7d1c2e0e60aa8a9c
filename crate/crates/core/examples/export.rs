//! JSON and DOT output of automata and decompositions.

use ideal_automata::dot::to_dot;
use ideal_automata::inter::decompose_linear;
use ideal_automata::{check_ideal, fixtures, Dfa};

fn main() {
    let a = fixtures::fig4_a();
    let json = a.to_json();
    println!("{json}");
    assert_eq!(Dfa::from_json(&json).unwrap(), a);
    print!("{}", to_dot(&a, "A"));

    let d = decompose_linear(&check_ideal(&a).unwrap()).unwrap();
    println!("{}", d.to_json());
}
