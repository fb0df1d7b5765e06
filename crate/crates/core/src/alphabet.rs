//! The stave alphabet and the word type built on it.
//!
//! Every stave carries the same 27 letters, top to bottom. There is no W,
//! and the ligatures Æ and Œ are letters in their own right.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// The letters painted on each stave, in order. Index 0 here is letter 1.
pub const LETTERS: [char; 27] = [
    'A', 'Æ', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'J', 'K', 'L', 'M', 'N', 'O', 'Œ', 'P', 'Q',
    'R', 'S', 'T', 'U', 'V', 'X', 'Y', 'Z',
];

/// Number of letters on a stave.
pub const ALPHABET_LEN: u8 = 27;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("letter {0:?} is not on the staves")]
    UnknownLetter(char),
    #[error("letter index {0} is outside 1..=27")]
    IndexOutOfRange(u8),
    #[error("empty word")]
    EmptyWord,
}

/// 1-based position of `letter` on a stave.
///
/// Lower-case input is accepted and folded to upper case.
pub fn letter_index(letter: char) -> Result<u8, AlphabetError> {
    let upper = fold_upper(letter);
    LETTERS
        .iter()
        .position(|&l| l == upper)
        .map(|i| i as u8 + 1)
        .ok_or(AlphabetError::UnknownLetter(letter))
}

/// The letter at 1-based stave position `index`.
pub fn letter_at(index: u8) -> Result<char, AlphabetError> {
    if (1..=ALPHABET_LEN).contains(&index) {
        Ok(LETTERS[index as usize - 1])
    } else {
        Err(AlphabetError::IndexOutOfRange(index))
    }
}

fn fold_upper(c: char) -> char {
    match c {
        'æ' => 'Æ',
        'œ' => 'Œ',
        c if c.is_ascii_lowercase() => c.to_ascii_uppercase(),
        c => c,
    }
}

/// A non-empty word over the stave alphabet, stored in canonical form:
/// upper case, with Æ and Œ as single code points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(String);

impl Word {
    /// Canonicalizes and validates `text`.
    ///
    /// Case is folded and the ASCII digraphs `AE`/`OE` become `Æ`/`Œ`.
    pub fn parse(text: &str) -> Result<Self, AlphabetError> {
        let original: Vec<char> = text.chars().collect();
        let folded: Vec<char> = original.iter().map(|&c| fold_upper(c)).collect();
        if folded.is_empty() {
            return Err(AlphabetError::EmptyWord);
        }
        let mut out = String::with_capacity(text.len());
        let mut i = 0;
        while i < folded.len() {
            let c = folded[i];
            let next = folded.get(i + 1).copied();
            let merged = match (c, next) {
                ('A', Some('E')) => Some('Æ'),
                ('O', Some('E')) => Some('Œ'),
                _ => None,
            };
            if let Some(lig) = merged {
                out.push(lig);
                i += 2;
                continue;
            }
            if !LETTERS.contains(&c) {
                return Err(AlphabetError::UnknownLetter(original[i]));
            }
            out.push(c);
            i += 1;
        }
        Ok(Word(out))
    }

    /// Builds a word from 1-based letter indices.
    pub fn from_indices(indices: &[u8]) -> Result<Self, AlphabetError> {
        if indices.is_empty() {
            return Err(AlphabetError::EmptyWord);
        }
        let s = indices
            .iter()
            .map(|&i| letter_at(i))
            .collect::<Result<String, _>>()?;
        Ok(Word(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn letters(&self) -> impl Iterator<Item = char> + '_ {
        self.0.chars()
    }

    /// Number of letters, counting Æ and Œ as one each.
    pub fn len(&self) -> usize {
        self.0.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn indices(&self) -> impl Iterator<Item = u8> + '_ {
        self.letters()
            .map(|c| letter_index(c).expect("word letters are validated on construction"))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stave_order_positions() {
        assert_eq!(letter_index('A'), Ok(1));
        assert_eq!(letter_index('Æ'), Ok(2));
        assert_eq!(letter_index('Œ'), Ok(17));
        assert_eq!(letter_index('Z'), Ok(27));
        assert_eq!(letter_index('w'), Err(AlphabetError::UnknownLetter('w')));
    }

    #[test]
    fn index_is_a_bijection() {
        for i in 1..=ALPHABET_LEN {
            let c = letter_at(i).unwrap();
            assert_eq!(letter_index(c), Ok(i));
            assert_eq!(LETTERS.iter().filter(|&&l| l == c).count(), 1);
        }
        assert!(letter_at(0).is_err());
        assert!(letter_at(28).is_err());
    }

    #[test]
    fn digraphs_fold_to_ligatures() {
        assert_eq!(Word::parse("praenarrant").unwrap().as_str(), "PRÆNARRANT");
        assert_eq!(Word::parse("PROELIA").unwrap().as_str(), "PRŒLIA");
        assert_eq!(Word::parse("prœlia").unwrap().as_str(), "PRŒLIA");
        assert_eq!(Word::parse("PRÆNARRANT").unwrap().len(), 10);
    }

    #[test]
    fn rejects_w_and_empty() {
        assert_eq!(Word::parse("WALDO"), Err(AlphabetError::UnknownLetter('W')));
        assert_eq!(Word::parse(""), Err(AlphabetError::EmptyWord));
        assert!(Word::parse("MAR TIA").is_err());
    }
}
