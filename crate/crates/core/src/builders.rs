//! Constructions producing ideal automata: principal automata, shuffle ideals
//! of finite sets, concatenation and the two tightness families.

use crate::dfa::{normalize_alphabet, Dfa};
use crate::error::{Error, Result};
use crate::ideal::{check_ideal, IdealAutomaton};
use crate::product::{product, Mode};
use crate::words::WordSet;

/// The `|w|+1`-state chain recognizing `{w} ⧢ Σ*`.
pub fn principal_automaton(word: &str, alphabet: &[char]) -> Result<Dfa> {
    let alphabet = normalize_alphabet(alphabet.iter().copied())?;
    let letters: Vec<usize> = word
        .chars()
        .map(|c| alphabet.binary_search(&c).map_err(|_| Error::UnknownLetter(c)))
        .collect::<Result<_>>()?;
    let n = letters.len();
    Dfa::from_fn(alphabet, n + 1, 0, &[n], |q, x| {
        if q < n && letters[q] == x {
            q + 1
        } else {
            q
        }
    })
}

/// Minimal automaton of `K ⧢ Σ*`.
pub fn shuffle_ideal(generators: &WordSet) -> Result<IdealAutomaton> {
    if generators.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    let parts = generators
        .words()
        .iter()
        .map(|w| principal_automaton(w, generators.alphabet()))
        .collect::<Result<Vec<_>>>()?;
    check_ideal(&product(Mode::Union, &parts)?)
}

/// `a · b`: the final state of `a` is dropped and its incoming transitions
/// are sent to the initial state of `b`.
pub fn concat(a: &IdealAutomaton, b: &IdealAutomaton) -> Result<IdealAutomaton> {
    a.dfa().check_same_alphabet(b.dfa())?;
    let (da, db) = (a.dfa(), b.dfa());
    let fa = a.final_state();
    // a's states except fa keep their relative order, b's follow
    let shift = |q: usize| if q > fa { q - 1 } else { q };
    let offset = da.state_count() - 1;
    let total = offset + db.state_count();
    let initial = if da.initial() == fa {
        offset + db.initial()
    } else {
        shift(da.initial())
    };
    let joined = Dfa::from_fn(
        da.alphabet().to_vec(),
        total,
        initial,
        &[offset + b.final_state()],
        |q, x| {
            if q < offset {
                let orig = if q >= fa { q + 1 } else { q };
                let t = da.step(orig, x);
                if t == fa {
                    offset + db.initial()
                } else {
                    shift(t)
                }
            } else {
                offset + db.step(q - offset, x)
            }
        },
    )?;
    check_ideal(&joined)
}

/// `a^n`, with `a^1 = a`.
pub fn power(a: &IdealAutomaton, n: usize) -> Result<IdealAutomaton> {
    if n == 0 {
        return Err(Error::InvalidParameter("power must be at least 1".into()));
    }
    let mut acc = a.clone();
    for _ in 1..n {
        acc = concat(&acc, a)?;
    }
    Ok(acc)
}

// One column of the two-track family: loop letters and exits of the top and
// bottom states. Columns alternate between the two rows of this table.
struct Column {
    top_loop: char,
    top_to_top: char,
    bottom_loop: char,
    bottom_to_bottom: char,
}

const COLUMNS: [Column; 2] = [
    Column {
        top_loop: 'b',
        top_to_top: 'c',
        bottom_loop: 'c',
        bottom_to_bottom: 'b',
    },
    Column {
        top_loop: 'c',
        top_to_top: 'b',
        bottom_loop: 'b',
        bottom_to_bottom: 'c',
    },
];

/// The raw two-track automaton over `{a,b,c}` with `n` columns.
///
/// State 0 loops on `a` and enters the top track on `b`, the bottom one on
/// `c`. Column `k` holds top state `2k-1` and bottom state `2k`; `a` always
/// crosses tracks. The last column sends its non-loop letters to the final
/// sink `2n+1`, giving `2n+2` states.
pub fn fig6_dfa(n: usize) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::InvalidParameter("fig6 needs at least one column".into()));
    }
    let alphabet = vec!['a', 'b', 'c'];
    let top = |k: usize| 2 * k - 1;
    let bottom = |k: usize| 2 * k;
    let accept = 2 * n + 1;
    let mut triples: Vec<(usize, char, usize)> = vec![(0, 'a', 0), (0, 'b', top(1)), (0, 'c', bottom(1))];
    for k in 1..=n {
        let col = &COLUMNS[(k - 1) % 2];
        let (next_top, next_bottom) = if k == n {
            (accept, accept)
        } else {
            (top(k + 1), bottom(k + 1))
        };
        triples.extend([
            (top(k), col.top_loop, top(k)),
            (top(k), col.top_to_top, next_top),
            (top(k), 'a', next_bottom),
            (bottom(k), col.bottom_loop, bottom(k)),
            (bottom(k), col.bottom_to_bottom, next_bottom),
            (bottom(k), 'a', next_top),
        ]);
    }
    for c in &alphabet {
        triples.push((accept, *c, accept));
    }
    Dfa::from_triples("abc", 2 * n + 2, 0, &[accept], &triples)
}

/// [`fig6_dfa`] validated as an ideal automaton.
pub fn gen_fig6(n: usize) -> Result<IdealAutomaton> {
    check_ideal(&fig6_dfa(n)?)
}
