//! Union primality and decomposition into principal automata.

use ideal_automata::union::{accel_scan, decompose_union, is_union_prime};
use ideal_automata::{check_ideal, fixtures, principal_automaton};

fn main() {
    let a = check_ideal(&fixtures::fig4_a()).unwrap();
    println!("accelerating at {:?}", accel_scan(&a).unwrap().accelerating_at());
    println!("union prime: {}", is_union_prime(&a));
    let d = decompose_union(&a).unwrap();
    for c in &d.components {
        println!("  {} ({} states)", c.tag, c.automaton.state_count());
    }
    println!("verified: {}", d.verified);

    let p = check_ideal(&principal_automaton("cabb", &['a', 'b', 'c']).unwrap()).unwrap();
    println!("cabb union prime: {}", is_union_prime(&p));
}
