//! Verse corpora: one six-word line per text line, `#` comments.

use eureka_core::lexicon::SLOT_COUNT;
use eureka_core::{AlphabetError, Word};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("line {line}: expected {SLOT_COUNT} words, got {got}")]
    WordCount { line: usize, got: usize },
    #[error("line {line}: {source}")]
    Alphabet { line: usize, source: AlphabetError },
    #[error("corpus is empty")]
    Empty,
}

pub type CorpusLine = [Word; SLOT_COUNT];

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusLine>, CorpusError> {
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        if words.is_empty() {
            continue;
        }
        if words.len() != SLOT_COUNT {
            return Err(CorpusError::WordCount { line, got: words.len() });
        }
        let parsed = words
            .iter()
            .map(|w| Word::parse(w))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|source| CorpusError::Alphabet { line, source })?;
        lines.push(parsed.try_into().expect("six words"));
    }
    if lines.is_empty() {
        return Err(CorpusError::Empty);
    }
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines() {
        let c = parse_corpus("# two lines\nimpia verba domi conjungunt crimina mala\n\nMARTIA CASTRA FORIS PRAENARRANT PROELIA MULTA\n").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[1][3].as_str(), "PRÆNARRANT");
    }

    #[test]
    fn errors() {
        assert_eq!(parse_corpus("a b c"), Err(CorpusError::WordCount { line: 1, got: 3 }));
        assert_eq!(parse_corpus("\n# x\n"), Err(CorpusError::Empty));
        assert!(matches!(parse_corpus("a b c d e w"), Err(CorpusError::Alphabet { line: 1, .. })));
    }
}
