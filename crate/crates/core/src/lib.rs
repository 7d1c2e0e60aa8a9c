//! Primality and decomposition of minimal automata recognizing shuffle ideals.
//!
//! An ideal is a language closed under inserting letters anywhere. Given the
//! minimal automaton of an ideal, this crate decides whether it is prime for
//! intersection or for union (whether no family of strictly smaller automata
//! intersects, resp. unions, to the same language), and when it is not,
//! builds a decomposition whose components are smaller ideal automata.
//!
//! The main entry points:
//!
//! - [`check_ideal`] validates a [`Dfa`] and returns an [`IdealAutomaton`];
//! - [`inter::is_inter_prime`], [`inter::decompose_inter_recursive`];
//! - [`union::is_union_prime`], [`union::decompose_union`];
//! - [`oracle`] holds brute-force cross-checks for small automata.

#![allow(clippy::needless_range_loop)]

pub mod builders;
pub mod cli;
pub mod decomposition;
pub mod dfa;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod ideal;
pub mod inter;
pub mod minimize;
pub mod oracle;
pub mod order;
pub mod product;
pub mod union;
pub mod words;

pub use builders::{concat, fig6_dfa, gen_fig6, power, principal_automaton, shuffle_ideal};
pub use decomposition::{Component, Decomposition, Tag};
pub use dfa::{validate, Certificate, Dfa, RawDfa, Verdict};
pub use error::{Error, Result};
pub use ideal::{check_ideal, lmin, IdealAutomaton};
pub use minimize::{canonical, isomorphic, minimize};
pub use order::{is_linear, ranks, reach_order, RankTable, ReachOrder, Relation};
pub use product::{equivalent, includes, product, Mode};
pub use words::{is_subword, WordSet};
