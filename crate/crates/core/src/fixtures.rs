//! Hand-transcribed automata used throughout the tests and examples.
//!
//! State numbers follow the order states are listed in the comments.

use crate::dfa::Dfa;

fn table(alphabet: &str, finals: &[usize], rows: &[&[usize]]) -> Dfa {
    let letters: Vec<char> = alphabet.chars().collect();
    Dfa::from_fn(letters, rows.len(), 0, finals, |q, x| rows[q][x]).expect("fixture is valid")
}

/// Minimal automaton of `{cabb, cacca, cbca} ⧢ {a,b,c}*`.
///
/// States are named by their shortlex access word:
/// `ε, c, ca, cb, cab, cac, cbc, cabb, cabc, cacc`. The final sink is 7.
pub fn fig1() -> Dfa {
    table(
        "abc",
        &[7],
        &[
            &[0, 0, 1],
            &[2, 3, 1],
            &[2, 4, 5],
            &[5, 3, 6],
            &[4, 7, 8],
            &[5, 4, 9],
            &[7, 6, 6],
            &[7, 7, 7],
            &[7, 7, 8],
            &[7, 8, 9],
        ],
    )
}

/// The eight-state drawing often shown for the same generators
/// (`ι, q0, …, q6`). It rejects `cabcb`, an upper-word of `cabb`, so it
/// does not recognize an ideal; kept to document that.
pub fn fig1_drawn() -> Dfa {
    table(
        "abc",
        &[7],
        &[
            &[0, 0, 1],
            &[2, 3, 1],
            &[2, 6, 4],
            &[4, 3, 5],
            &[4, 6, 5],
            &[7, 5, 5],
            &[6, 7, 5],
            &[7, 7, 7],
        ],
    )
}

/// Non-linear ideal automaton: `ι, q2, q_sep, ρ1, ρ2, q3, q4, q_f`.
///
/// Same shape as [`fig2_drawn`] except that `ρ1 -b-> q3` and `ρ2 -b-> q4`,
/// which makes the language an ideal.
pub fn fig2() -> Dfa {
    table(
        "ab",
        &[7],
        &[
            &[3, 1],
            &[3, 2],
            &[3, 4],
            &[3, 5],
            &[4, 6],
            &[7, 6],
            &[7, 7],
            &[7, 7],
        ],
    )
}

/// The drawing [`fig2`] is repaired from, with `ρ1 -b-> q4` and `ρ2 -b-> q3`.
/// It accepts `bbabb` but rejects the upper-word `bbbabb`, so it is not an
/// ideal. Its family automata are exactly
/// [`fig3_rho1`] and [`fig3_rho2`].
pub fn fig2_drawn() -> Dfa {
    table(
        "ab",
        &[7],
        &[
            &[3, 1],
            &[3, 2],
            &[3, 4],
            &[3, 6],
            &[4, 5],
            &[7, 6],
            &[7, 7],
            &[7, 7],
        ],
    )
}

/// Index of `ρ1` in [`fig2`] and [`fig2_drawn`].
pub const FIG2_RHO1: usize = 3;
/// Index of `ρ2` in [`fig2`].
pub const FIG2_RHO2: usize = 4;
/// Index of `q_sep` in [`fig2`].
pub const FIG2_SEP: usize = 2;

/// Family automaton of `ρ1` in [`fig2_drawn`]: `ι, q2, q_sep, ρ1, q4, q_f`,
/// with `q_sep -b-> q4` redirected.
pub fn fig3_rho1() -> Dfa {
    table(
        "ab",
        &[5],
        &[&[3, 1], &[3, 2], &[3, 4], &[3, 4], &[5, 5], &[5, 5]],
    )
}

/// Family automaton of `ρ2` in [`fig2_drawn`]: `ι, q2, q_sep, ρ2, q3, q4, q_f`, with every
/// `a` edge into `ρ1` redirected to `ρ2`.
pub fn fig3_rho2() -> Dfa {
    table(
        "ab",
        &[6],
        &[
            &[3, 1],
            &[3, 2],
            &[3, 3],
            &[3, 4],
            &[6, 5],
            &[6, 6],
            &[6, 6],
        ],
    )
}

/// Linear automaton `q0, q1, q2, q3` over `{a,b,c}`.
pub fn fig4_a() -> Dfa {
    table(
        "abc",
        &[3],
        &[&[1, 2, 2], &[1, 3, 2], &[3, 3, 2], &[3, 3, 3]],
    )
}

/// `q0` removed: `q1, q2, q3`, initial `q1`.
pub fn fig4_a0() -> Dfa {
    table("abc", &[2], &[&[0, 2, 1], &[2, 2, 1], &[2, 2, 2]])
}

/// `q1` removed: `q0, q2, q3`.
pub fn fig4_a1() -> Dfa {
    table("abc", &[2], &[&[1, 1, 1], &[2, 2, 1], &[2, 2, 2]])
}
