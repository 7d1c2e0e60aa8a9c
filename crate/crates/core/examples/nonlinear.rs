//! Split a non-linear ideal automaton into its family automata.

use ideal_automata::inter::{decompose_nonlinear, family_automaton, separator};
use ideal_automata::{check_ideal, fixtures};

fn main() {
    let a = check_ideal(&fixtures::fig2()).unwrap();
    let info = separator(&a).unwrap();
    println!("separator q{} at rank {}, separator set {:?}", info.sep, info.sep_rank, info.sep_set);
    for &rho in &info.sep_set {
        let f = family_automaton(&a, rho).unwrap();
        println!("family of q{rho}: {} states", f.state_count());
    }
    let d = decompose_nonlinear(&a).unwrap();
    println!("{} components, verified: {}", d.len(), d.verified);
}
