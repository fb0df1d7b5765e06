//! Peter table files (`.pet`) and word-set files.
//!
//! A table file holds one or more tables. Each starts with a `% <row width>`
//! header followed by its rows; `#` (or `█`) is a black square. Word-set
//! files list the nine words of one table per line, digit 1 first.

use std::fmt::Write as _;

use eureka_core::peter::{PeterCell, PeterError, PeterTable, WORDS_PER_TABLE};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Table { line: usize, source: PeterError },
}

/// Reads every table in a `.pet` document.
pub fn parse_tables(text: &str) -> Result<Vec<PeterTable>, TableFileError> {
    let mut tables = Vec::new();
    let mut current: Option<(usize, usize, Vec<PeterCell>)> = None;
    let finish = |cur: Option<(usize, usize, Vec<PeterCell>)>, tables: &mut Vec<PeterTable>| {
        if let Some((line, width, cells)) = cur {
            let t = PeterTable::new(cells, width).map_err(|source| TableFileError::Table { line, source })?;
            tables.push(t);
        }
        Ok(())
    };
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(header) = trimmed.strip_prefix('%') {
            finish(current.take(), &mut tables)?;
            let width: usize = header.trim().parse().map_err(|_| TableFileError::Syntax {
                line,
                message: format!("row width {:?} is not a number", header.trim()),
            })?;
            current = Some((line, width, Vec::new()));
            continue;
        }
        let Some((_, _, cells)) = current.as_mut() else {
            return Err(TableFileError::Syntax {
                line,
                message: "rows before the first `%` header".into(),
            });
        };
        for c in trimmed.chars().filter(|c| !c.is_whitespace()) {
            cells.push(PeterCell::from_char(c).map_err(|source| TableFileError::Table { line, source })?);
        }
    }
    finish(current, &mut tables)?;
    Ok(tables)
}

/// Writes tables in file notation.
pub fn write_tables(tables: &[PeterTable]) -> String {
    let mut out = String::new();
    for t in tables {
        writeln!(out, "% {}", t.row_width()).expect("writing to a String");
        for row in t.cells().chunks(t.row_width()) {
            for cell in row {
                out.push(match cell {
                    PeterCell::Letter(c) => *c,
                    PeterCell::Black => '#',
                });
            }
            out.push('\n');
        }
    }
    out
}

/// Reads nine words per non-blank line. `#` starts a comment.
pub fn parse_word_sets(text: &str) -> Result<Vec<Vec<String>>, TableFileError> {
    let mut sets = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<String> = content.split_whitespace().map(str::to_owned).collect();
        if words.is_empty() {
            continue;
        }
        if words.len() != WORDS_PER_TABLE {
            return Err(TableFileError::Table {
                line: n + 1,
                source: PeterError::WordCount(words.len()),
            });
        }
        sets.push(words);
    }
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use eureka_core::peter::{encode_table, render_table};

    #[test]
    fn write_parse_round_trip() {
        let a = encode_table(&["tristia", "b", "c", "d", "e", "f", "g", "h", "i"], 9).unwrap();
        let b = encode_table(&["a", "b", "c", "d", "e", "f", "g", "h", "i"], 6).unwrap();
        let text = write_tables(&[a.clone(), b.clone()]);
        assert_eq!(parse_tables(&text).unwrap(), vec![a, b]);
    }

    #[test]
    fn rendered_form_parses() {
        let t = encode_table(&["a", "b", "c", "d", "e", "f", "g", "h", "i"], 9).unwrap();
        let text = format!("% 9\n{}", render_table(&t));
        assert_eq!(parse_tables(&text).unwrap(), vec![t]);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_tables("abc"), Err(TableFileError::Syntax { line: 1, .. })));
        assert!(matches!(parse_tables("% x\nabc"), Err(TableFileError::Syntax { line: 1, .. })));
        assert!(matches!(
            parse_tables("% 9\nab1"),
            Err(TableFileError::Table { line: 2, source: PeterError::NonLatinLetter('1') })
        ));
        assert!(matches!(
            parse_word_sets("a b c\n"),
            Err(TableFileError::Table { line: 1, source: PeterError::WordCount(3) })
        ));
    }
}
