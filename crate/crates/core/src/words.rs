//! Square-free ternary words, palindrome-free quaternary words and factor
//! search.
//!
//! The ternary word is the fixed point of `a -> abc, b -> ac, c -> b`. The
//! quaternary word places the fourth label at every index divisible by three
//! and fills the remaining positions with the ternary word read from index 1,
//! which leaves no square and no palindrome of length two or more.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::hash::PrefixHash;

/// A finite word over a small ordered alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WordRepr")]
pub struct Word {
    alphabet: Vec<String>,
    symbols: Vec<u8>,
}

#[derive(Deserialize)]
struct WordRepr {
    alphabet: Vec<String>,
    symbols: Vec<u8>,
}

impl TryFrom<WordRepr> for Word {
    type Error = Error;

    fn try_from(r: WordRepr) -> Result<Self> {
        Word::new(r.symbols, r.alphabet)
    }
}

fn check_alphabet(alphabet: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for label in alphabet {
        if !seen.insert(label.as_str()) {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    Ok(())
}

pub(crate) fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet: Vec<String>) -> Result<Self> {
        check_alphabet(&alphabet)?;
        if let Some((position, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s as usize >= alphabet.len())
        {
            return Err(Error::SymbolOutOfRange {
                position,
                symbol,
                size: alphabet.len(),
            });
        }
        Ok(Word { alphabet, symbols })
    }

    /// Parses a label string by greedy longest-label matching.
    pub fn parse(text: &str, alphabet: Vec<String>) -> Result<Self> {
        check_alphabet(&alphabet)?;
        let mut order: Vec<usize> = (0..alphabet.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(alphabet[i].len()));
        let text = text.trim();
        let mut rest = text;
        let mut symbols = Vec::new();
        while !rest.is_empty() {
            let hit = order
                .iter()
                .find(|&&i| !alphabet[i].is_empty() && rest.starts_with(alphabet[i].as_str()));
            match hit {
                Some(&i) => {
                    symbols.push(i as u8);
                    rest = &rest[alphabet[i].len()..];
                }
                None => return Err(Error::UnknownLabel(text.len() - rest.len())),
            }
        }
        Ok(Word { alphabet, symbols })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<u8> {
        self.symbols.get(index).copied()
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.get(index).map(|s| self.alphabet[s as usize].as_str())
    }

    /// Same symbol ids under new display labels.
    pub fn relabel(&self, alphabet: Vec<String>) -> Result<Word> {
        if alphabet.len() != self.alphabet.len() {
            return Err(Error::AlphabetSize {
                expected: self.alphabet.len(),
                found: alphabet.len(),
            });
        }
        check_alphabet(&alphabet)?;
        Ok(Word {
            alphabet,
            symbols: self.symbols.clone(),
        })
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            symbols: self.symbols[..len.min(self.len())].to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("word serializes")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            f.write_str(&self.alphabet[s as usize])?;
        }
        Ok(())
    }
}

fn thue_symbols(length: usize) -> Vec<u8> {
    const IMAGE: [&[u8]; 3] = [&[0, 1, 2], &[0, 2], &[1]];
    // The fixed point satisfies w = h(w); expand w[i] into position as we go.
    let mut w: Vec<u8> = vec![0, 1, 2];
    let mut i = 1;
    while w.len() < length {
        let s = w[i] as usize;
        w.extend_from_slice(IMAGE[s]);
        i += 1;
    }
    w.truncate(length);
    w
}

/// First `length` symbols of the square-free ternary word, over `a, b, c`.
pub fn generate_thue(length: usize) -> Word {
    Word {
        alphabet: labels(&["a", "b", "c"]),
        symbols: thue_symbols(length),
    }
}

/// Symbols of the palindrome-free word: `3` at indices divisible by three,
/// otherwise the ternary word at `n - n/3`.
pub(crate) fn thue_star_symbols(length: usize) -> Vec<u8> {
    let t = thue_symbols(length);
    (0..length)
        .map(|n| if n % 3 == 0 { 3 } else { t[n - n / 3] })
        .collect()
}

/// First `length` symbols of the palindrome-free quaternary word. The
/// fourth label is the separator inserted at every index divisible by three.
pub fn generate_thue_star(length: usize, alphabet: Vec<String>) -> Result<Word> {
    if alphabet.len() != 4 {
        return Err(Error::AlphabetSize {
            expected: 4,
            found: alphabet.len(),
        });
    }
    check_alphabet(&alphabet)?;
    Ok(Word {
        alphabet,
        symbols: thue_star_symbols(length),
    })
}

/// The default quaternary alphabet `a, b, c, d`.
pub fn abcd() -> Vec<String> {
    labels(&["a", "b", "c", "d"])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Square,
    Palindrome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorLocation {
    pub start: usize,
    pub length: usize,
    pub kind: FactorKind,
}

/// Leftmost, then shortest, square factor.
pub fn find_square(word: &Word) -> Option<FactorLocation> {
    let s = word.symbols();
    let n = s.len();
    let h = PrefixHash::new(s.iter().copied());
    for start in 0..n {
        for half in 1..=(n - start) / 2 {
            let mid = start + half;
            if h.range(start, mid) == h.range(mid, mid + half)
                && s[start..mid] == s[mid..mid + half]
            {
                return Some(FactorLocation {
                    start,
                    length: 2 * half,
                    kind: FactorKind::Square,
                });
            }
        }
    }
    None
}

/// Leftmost, then shortest, palindromic factor of length at least
/// `min_length` (clamped to 2).
pub fn find_palindrome(word: &Word, min_length: usize) -> Option<FactorLocation> {
    let min_length = min_length.max(2);
    let s = word.symbols();
    let n = s.len();
    let fwd = PrefixHash::new(s.iter().copied());
    let rev = PrefixHash::new(s.iter().rev().copied());
    for start in 0..n {
        for length in min_length..=n - start {
            let end = start + length;
            // the reversal of s[start..end] is rev[n - end..n - start]
            if fwd.range(start, end) == rev.range(n - end, n - start)
                && s[start..end].iter().eq(s[start..end].iter().rev())
            {
                return Some(FactorLocation {
                    start,
                    length,
                    kind: FactorKind::Palindrome,
                });
            }
        }
    }
    None
}
