use thiserror::Error;

/// Everything that can go wrong while building, checking or decomposing automata.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("letter {0:?} is not a single printable character")]
    BadLetter(String),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("missing transition from state {state} on {letter:?}")]
    MissingTransition { state: usize, letter: char },
    #[error("duplicate transition from state {state} on {letter:?}")]
    DuplicateTransition { state: usize, letter: char },
    #[error("{what} index {index} out of range (state count {bound})")]
    BadIndex {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch { left: String, right: String },
    #[error("empty list of automata")]
    EmptyList,
    #[error("automaton is not partially ordered, cycle through states {cycle:?}")]
    NotPartiallyOrdered { cycle: Vec<usize> },
    #[error("state {0} is not reachable from the initial state")]
    Unreachable(usize),
    #[error("language is not an ideal: {word:?} is accepted but its upper-word {upper_word:?} is not")]
    NotIdeal { word: String, upper_word: String },
    #[error("language is empty")]
    EmptyLanguage,
    #[error("automaton is linear")]
    LinearInput,
    #[error("automaton is not linear: states {0} and {1} are incomparable")]
    NonLinearInput(usize, usize),
    #[error("state {0} is not in the separator set")]
    NotInSeparatorSet(usize),
    #[error("linear automaton has no damping pattern")]
    NoDampingPattern,
    #[error("damping pattern between positions {0} and {1}")]
    DampingPresent(usize, usize),
    #[error("index {index} out of range, expected at most {max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("automaton is prime for {0}")]
    PrimeInput(&'static str),
    #[error("automaton too large for the exhaustive oracle: {states} states, {letters} letters (cap {cap} states, 2 letters)")]
    TooLarge {
        states: usize,
        letters: usize,
        cap: usize,
    },
    #[error("decomposition does not recognize the source language, counterexample {0:?}")]
    VerificationFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
