//! Cross-check the structural primality tests against brute force.

use ideal_automata::inter::is_inter_prime;
use ideal_automata::oracle::{exhaustive_prime_with_cap, minimal_ideal_automata};
use ideal_automata::union::is_union_prime;
use ideal_automata::Mode;

fn main() {
    let all = minimal_ideal_automata(&['a', 'b'], 3);
    let mut agree = 0;
    for a in &all {
        let inter = exhaustive_prime_with_cap(a, Mode::Inter, 3).unwrap() == is_inter_prime(a);
        let union = exhaustive_prime_with_cap(a, Mode::Union, 3).unwrap() == is_union_prime(a);
        if inter && union {
            agree += 1;
        }
    }
    println!("{agree}/{} minimal ideal automata with at most 3 states agree", all.len());
}
