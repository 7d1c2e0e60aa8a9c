//! Find a damping pattern in a linear automaton and split on it.

use ideal_automata::inter::{damping_scan, decompose_linear, is_inter_prime};
use ideal_automata::{check_ideal, fixtures};

fn main() {
    let a = check_ideal(&fixtures::fig4_a()).unwrap();
    for s in damping_scan(&a).unwrap().steps {
        println!(
            "k={}: stay {:?} + advance {:?} vs stay {:?} -> damping {}",
            s.k, s.stay_before, s.advance, s.stay, s.damping
        );
    }
    println!("prime: {}", is_inter_prime(&a));
    let d = decompose_linear(&a).unwrap();
    for c in &d.components {
        println!("{}:\n{:?}", c.tag, c.automaton);
    }
    println!("verified: {}", d.verified);
}
