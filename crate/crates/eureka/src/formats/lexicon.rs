//! Line-oriented lexicon files.
//!
//! ```text
//! # drum word quantities category
//! 1 MARTIA -uu adj
//! 4 PRAENARRANT --- verb
//! ```
//!
//! `#` starts a comment, blank lines are skipped, words are case-insensitive
//! and `AE`/`OE` may stand for `Æ`/`Œ`. Rendering always writes the ligatures.

use std::fmt::Write as _;

use eureka_core::lexicon::{Lexicon, LexiconEntry, LexiconError, PartOfSpeech, Quantity, QuantityDisplay};
use eureka_core::Word;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconFileError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: {source}")]
    Entry {
        line: usize,
        column: usize,
        source: LexiconError,
    },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, (byte, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((byte, i)),
            (true, Some((b, col))) => {
                out.push(Token {
                    text: &line[b..byte],
                    column: col + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, col)) = start {
        out.push(Token {
            text: &line[b..],
            column: col + 1,
        });
    }
    out
}

/// Parses a lexicon document.
pub fn parse_lexicon(text: &str) -> Result<Lexicon, LexiconFileError> {
    let mut entries = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        if toks.is_empty() {
            continue;
        }
        let syntax = |column: usize, message: String| LexiconFileError::Syntax {
            line,
            column,
            message,
        };
        if toks.len() != 4 {
            let column = toks.get(4).map_or(content.chars().count() + 1, |t| t.column);
            return Err(syntax(
                column,
                format!("expected `<drum> <word> <quantities> <category>`, found {} fields", toks.len()),
            ));
        }
        let drum: usize = toks[0]
            .text
            .parse()
            .map_err(|_| syntax(toks[0].column, format!("drum {:?} is not a number", toks[0].text)))?;
        let entry_err = |column: usize| move |source: LexiconError| LexiconFileError::Entry {
            line,
            column,
            source,
        };
        if !(1..=6).contains(&drum) {
            return Err(entry_err(toks[0].column)(LexiconError::DrumOutOfRange(drum)));
        }
        let word = Word::parse(toks[1].text).map_err(|e| entry_err(toks[1].column)(e.into()))?;
        let quantities: Vec<Quantity> = toks[2]
            .text
            .chars()
            .enumerate()
            .map(|(i, c)| {
                Quantity::from_symbol(c).ok_or_else(|| {
                    syntax(toks[2].column + i, format!("{c:?} is not a quantity (use - or u)"))
                })
            })
            .collect::<Result<_, _>>()?;
        let pos = PartOfSpeech::from_keyword(&toks[3].text.to_ascii_lowercase()).ok_or_else(|| {
            syntax(
                toks[3].column,
                format!("category {:?} is not adj, noun, adv or verb", toks[3].text),
            )
        })?;
        let entry = LexiconEntry::new(drum, word, quantities, pos).map_err(|e| {
            let column = match e {
                LexiconError::CategoryMismatch { .. } => toks[3].column,
                _ => toks[2].column,
            };
            entry_err(column)(e)
        })?;
        entries.push(entry);
    }
    Ok(Lexicon::from_entries(entries)?)
}

/// Writes a lexicon back out, drum by drum.
pub fn render_lexicon(lexicon: &Lexicon) -> String {
    let mut out = String::new();
    for entry in lexicon.entries() {
        writeln!(
            out,
            "{} {} {} {}",
            entry.drum(),
            entry.word(),
            QuantityDisplay(entry.quantities()),
            entry.category().part_of_speech().keyword()
        )
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use eureka_core::lexicon::SlotCategory;
    use eureka_core::AlphabetError;

    const SIX: &str = "1 MARTIA -uu adj\n2 castra -u noun\n3 FORIS u- adv\n4 PRAENARRANT --- verb\n5 PROELIA -uu noun  # comment\n\n6 MULTA -u adj\n";

    #[test]
    fn martia_line() {
        let lex = parse_lexicon(SIX).unwrap();
        let e = &lex.drum(1)[0];
        assert_eq!(e.word().as_str(), "MARTIA");
        assert_eq!(e.quantities(), &[Quantity::Long, Quantity::Short, Quantity::Short]);
        assert_eq!(e.category(), SlotCategory::Adj1);
        assert_eq!(lex.drum(4)[0].word().as_str(), "PRÆNARRANT");
        assert_eq!(lex.drum(2)[0].word().as_str(), "CASTRA");
    }

    #[test]
    fn empty_document() {
        assert_eq!(
            parse_lexicon(""),
            Err(LexiconFileError::Lexicon(LexiconError::EmptyDrum(1)))
        );
        assert_eq!(
            parse_lexicon("# nothing\n\n"),
            Err(LexiconFileError::Lexicon(LexiconError::EmptyDrum(1)))
        );
    }

    #[test]
    fn alphabet_violation() {
        let err = parse_lexicon("1 WALDO -uu adj").unwrap_err();
        assert_eq!(
            err,
            LexiconFileError::Entry {
                line: 1,
                column: 3,
                source: LexiconError::Alphabet(AlphabetError::UnknownLetter('W')),
            }
        );
        assert_eq!(err.to_string(), "line 1, column 3: letter 'W' is not on the staves");
    }

    #[test]
    fn syntax_positions() {
        let err = parse_lexicon("1 MARTIA -ux adj").unwrap_err();
        assert!(matches!(err, LexiconFileError::Syntax { line: 1, column: 12, .. }), "{err}");
        let err = parse_lexicon("\n  x MARTIA -uu adj").unwrap_err();
        assert!(matches!(err, LexiconFileError::Syntax { line: 2, column: 3, .. }), "{err}");
        let err = parse_lexicon("1 MARTIA -uu").unwrap_err();
        assert!(matches!(err, LexiconFileError::Syntax { line: 1, column: 13, .. }), "{err}");
        let err = parse_lexicon("1 MARTIA -uu adj extra").unwrap_err();
        assert!(matches!(err, LexiconFileError::Syntax { line: 1, column: 18, .. }), "{err}");
        let err = parse_lexicon("1 MARTIA -uu pron").unwrap_err();
        assert!(matches!(err, LexiconFileError::Syntax { column: 14, .. }), "{err}");
    }

    #[test]
    fn entry_errors() {
        let err = parse_lexicon("7 MARTIA -uu adj").unwrap_err();
        assert!(matches!(
            err,
            LexiconFileError::Entry { source: LexiconError::DrumOutOfRange(7), column: 1, .. }
        ));
        let err = parse_lexicon("1 MARTIA -uu noun").unwrap_err();
        assert!(matches!(
            err,
            LexiconFileError::Entry { source: LexiconError::CategoryMismatch { .. }, column: 14, .. }
        ));
        let err = parse_lexicon("1 A -uu adj").unwrap_err();
        assert!(matches!(
            err,
            LexiconFileError::Entry { source: LexiconError::TooManyQuantities { .. }, .. }
        ));
    }

    #[test]
    fn render_round_trip() {
        let lex = parse_lexicon(SIX).unwrap();
        let text = render_lexicon(&lex);
        assert!(text.contains("4 PRÆNARRANT --- verb"));
        assert!(text.contains("5 PRŒLIA -uu noun"));
        assert_eq!(parse_lexicon(&text).unwrap(), lex);
    }
}
