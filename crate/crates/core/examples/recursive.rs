//! Decompose down to intersection-prime automata and count the leaves.

use ideal_automata::inter::decompose_inter_recursive;
use ideal_automata::{check_ideal, fixtures, gen_fig6, power};

fn main() {
    for n in 1..=3 {
        let a = gen_fig6(n).unwrap();
        let r = decompose_inter_recursive(&a).unwrap();
        println!(
            "two-track n={n}: {} states, {} linear leaves, {} primes",
            a.state_count(),
            r.linear_leaves,
            r.decomposition.len()
        );
    }
    let base = check_ideal(&fixtures::fig4_a()).unwrap();
    for n in 1..=3 {
        let a = power(&base, n).unwrap();
        let r = decompose_inter_recursive(&a).unwrap();
        println!(
            "A^{n}: {} states, {} primes (verified: {})",
            a.state_count(),
            r.decomposition.len(),
            r.decomposition.verified
        );
    }
}
