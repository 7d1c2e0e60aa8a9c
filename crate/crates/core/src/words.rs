//! Finite word sets and the subword relation.

use std::cmp::Ordering;
use std::fmt;

use crate::dfa::normalize_alphabet;
use crate::error::{Error, Result};

/// Whether `u` embeds in `v` as a (scattered) subsequence.
pub fn is_subword(u: &str, v: &str) -> bool {
    let mut rest = v.chars();
    u.chars().all(|c| rest.any(|d| d == c))
}

/// Length first, then lexicographic.
pub fn shortlex(u: &str, v: &str) -> Ordering {
    u.chars()
        .count()
        .cmp(&v.chars().count())
        .then_with(|| u.cmp(v))
}

/// A finite set of words over a fixed alphabet, kept in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordSet {
    alphabet: Vec<char>,
    words: Vec<String>,
}

impl WordSet {
    pub fn new<S: AsRef<str>>(alphabet: &[char], words: impl IntoIterator<Item = S>) -> Result<WordSet> {
        let alphabet = normalize_alphabet(alphabet.iter().copied())?;
        let mut list = Vec::new();
        for w in words {
            let w = w.as_ref();
            if let Some(c) = w.chars().find(|c| alphabet.binary_search(c).is_err()) {
                return Err(Error::UnknownLetter(c));
            }
            list.push(w.to_string());
        }
        list.sort_by(|u, v| shortlex(u, v));
        list.dedup();
        Ok(WordSet {
            alphabet,
            words: list,
        })
    }

    /// Builds a set whose alphabet is the letters its words use.
    pub fn inferred<S: AsRef<str>>(words: impl IntoIterator<Item = S> + Clone) -> Result<WordSet> {
        let letters: Vec<char> = words
            .clone()
            .into_iter()
            .flat_map(|w| w.as_ref().chars().collect::<Vec<_>>())
            .collect();
        if letters.is_empty() {
            return Err(Error::Parse("cannot infer an alphabet from empty words".into()));
        }
        WordSet::new(&letters, words)
    }

    /// Parses the word-list text format.
    ///
    /// One word per line; `#` starts a comment; blank lines are skipped; `ε`
    /// alone on a line is the empty word. An optional `@alphabet abc` line
    /// fixes the alphabet, otherwise it is inferred from the words.
    pub fn parse(text: &str) -> Result<WordSet> {
        let mut alphabet: Option<Vec<char>> = None;
        let mut words = Vec::new();
        for line in text.lines() {
            let line = match line.find('#') {
                Some(i) => &line[..i],
                None => line,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("@alphabet") {
                let letters: Vec<char> = rest.chars().filter(|c| !c.is_whitespace()).collect();
                if letters.is_empty() {
                    return Err(Error::Parse("empty @alphabet header".into()));
                }
                alphabet = Some(letters);
                continue;
            }
            if line == "ε" {
                words.push(String::new());
            } else {
                words.push(line.to_string());
            }
        }
        match alphabet {
            Some(letters) => WordSet::new(&letters, &words),
            None => WordSet::inferred(&words),
        }
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &str) -> bool {
        self.words.iter().any(|u| u == w)
    }

    /// Length of the longest word, `None` for the empty set.
    pub fn max_len(&self) -> Option<usize> {
        self.words.iter().map(|w| w.chars().count()).max()
    }

    /// No word is a strict subword of another.
    pub fn is_antichain(&self) -> bool {
        self.words
            .iter()
            .all(|u| self.words.iter().all(|v| u == v || !is_subword(u, v)))
    }
}

impl fmt::Display for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<&str> = self
            .words
            .iter()
            .map(|w| if w.is_empty() { "ε" } else { w.as_str() })
            .collect();
        write!(f, "{{{}}}", shown.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force embedding search, independent of the greedy scan.
    fn embeds(u: &[char], v: &[char]) -> bool {
        match (u.split_first(), v.split_first()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((a, us)), Some((b, vs))) => (a == b && embeds(us, vs)) || embeds(u, vs),
        }
    }

    #[test]
    fn subword_examples() {
        assert!(is_subword("ab", "acb"));
        assert!(!is_subword("ba", "ab"));
        assert!(!is_subword("cabb", "cacca"));
        assert!(!is_subword("cacca", "cabb"));
        assert!(is_subword("", "xyz"));
        let (u, v): (Vec<char>, Vec<char>) = ("cabb".chars().collect(), "cacca".chars().collect());
        assert!(!embeds(&u, &v));
    }

    #[test]
    fn subword_agrees_with_brute_force() {
        let alphabet = ['a', 'b'];
        let mut all = vec![String::new()];
        for len in 1..=4 {
            let mut next = Vec::new();
            for w in all.iter().filter(|w| w.len() == len - 1) {
                for c in alphabet {
                    next.push(format!("{w}{c}"));
                }
            }
            all.extend(next);
        }
        for u in &all {
            for v in &all {
                let (uc, vc): (Vec<char>, Vec<char>) = (u.chars().collect(), v.chars().collect());
                assert_eq!(is_subword(u, v), embeds(&uc, &vc), "{u} {v}");
            }
        }
    }

    #[test]
    fn words_are_shortlex_sorted() {
        let s = WordSet::new(&['a', 'b', 'c'], ["cb", "ab", "ca", "b", "ab"]).unwrap();
        assert_eq!(s.words(), &["b", "ab", "ca", "cb"]);
        assert_eq!(s.max_len(), Some(2));
        assert_eq!(
            WordSet::new(&['a'], ["ab"]),
            Err(Error::UnknownLetter('b'))
        );
    }

    #[test]
    fn parses_file_format() {
        let text = "# generators\n@alphabet abc\ncabb\n\ncacca # second\ncbca\n";
        let s = WordSet::parse(text).unwrap();
        assert_eq!(s.alphabet(), &['a', 'b', 'c']);
        assert_eq!(s.words(), &["cabb", "cbca", "cacca"]);

        let inferred = WordSet::parse("ab\nba\n").unwrap();
        assert_eq!(inferred.alphabet(), &['a', 'b']);

        let eps = WordSet::parse("@alphabet ab\nε\n").unwrap();
        assert_eq!(eps.words(), &[""]);
        assert_eq!(eps.to_string(), "{ε}");
    }
}
