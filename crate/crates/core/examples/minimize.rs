//! Minimize, compare languages, and read counterexamples.

use ideal_automata::{equivalent, fixtures, includes, minimize, Dfa};

fn main() {
    // two copies of the same chain glued side by side
    let redundant = Dfa::from_fn(vec!['a', 'b'], 5, 0, &[4], |q, x| match (q, x) {
        (0, 0) => 1,
        (0, _) => 2,
        (1, _) | (2, _) => 3,
        _ => 4,
    })
    .unwrap();
    let m = minimize(&redundant);
    println!("{} states -> {} states", redundant.state_count(), m.state_count());
    println!("{m:?}");

    let a = fixtures::fig4_a();
    let a0 = fixtures::fig4_a0();
    println!("L(A) ⊆ L(A0): {}", includes(&a, &a0).unwrap().holds());
    let v = equivalent(&a, &a0).unwrap();
    println!("L(A) = L(A0): {} (shortest difference: {:?})", v.holds(), v.word());
}
