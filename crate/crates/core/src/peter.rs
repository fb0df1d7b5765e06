//! John Peter's versifying tables (1677).
//!
//! Each table is a grid of letters and black squares read row-major. The word
//! for digit `d` starts at cell [`first_position`]`(d)` and continues every
//! ninth cell until a black square. The nine start cells are a permutation of
//! 1..=9, so the nine words live in disjoint residue classes mod 9.
//!
//! Positions in this module are 1-based, as in the printed instructions.
//! `cell(p)` maps to storage index `p - 1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Words per table, one per digit.
pub const WORDS_PER_TABLE: usize = 9;
/// Tables per line.
pub const TABLES: usize = 6;
/// Cells between consecutive letters of one word.
pub const STRIDE: usize = 9;
/// Printed rendering of a black square.
pub const BLACK_GLYPH: char = '█';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeterError {
    #[error("digit {0} is outside 1..=9")]
    DigitOutOfRange(u8),
    #[error("key must be six digits 1-9, got {0:?}")]
    BadKey(String),
    #[error("{0:?} is not a letter a-z")]
    NonLatinLetter(char),
    #[error("a table hides exactly nine words, got {0}")]
    WordCount(usize),
    #[error("word for digit {0} is empty")]
    EmptyWord(u8),
    #[error("walk for digit {digit} ran off the table without a black square")]
    MalformedTable { digit: u8 },
    #[error("residue class for digit {digit} has {blacks} black squares")]
    BlackCount { digit: u8, blacks: usize },
    #[error("expected {TABLES} tables, got {0}")]
    TableCount(usize),
    #[error("row width must be positive")]
    ZeroWidth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeterCell {
    Letter(char),
    Black,
}

impl PeterCell {
    /// Reads one grid cell: a letter, `#`, or the black glyph.
    pub fn from_char(c: char) -> Result<Self, PeterError> {
        match c {
            '#' | BLACK_GLYPH => Ok(PeterCell::Black),
            c if c.is_ascii_alphabetic() => Ok(PeterCell::Letter(c.to_ascii_lowercase())),
            c => Err(PeterError::NonLatinLetter(c)),
        }
    }
}

/// Start cell (1-based) of the word for `digit`: count up from the digit to
/// 9, or for 9 count from the first cell.
pub fn first_position(digit: u8) -> Result<usize, PeterError> {
    match digit {
        1..=8 => Ok(9 - digit as usize),
        9 => Ok(9),
        _ => Err(PeterError::DigitOutOfRange(digit)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeterTable {
    cells: Vec<PeterCell>,
    row_width: usize,
}

impl PeterTable {
    pub fn new(cells: Vec<PeterCell>, row_width: usize) -> Result<Self, PeterError> {
        if row_width == 0 {
            return Err(PeterError::ZeroWidth);
        }
        Ok(Self { cells, row_width })
    }

    /// Parses grid text: one row per line, whitespace ignored.
    pub fn from_grid(text: &str, row_width: usize) -> Result<Self, PeterError> {
        let cells = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(PeterCell::from_char)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(cells, row_width)
    }

    pub fn cells(&self) -> &[PeterCell] {
        &self.cells
    }

    pub fn row_width(&self) -> usize {
        self.row_width
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cell at 1-based position `p`.
    pub fn cell(&self, p: usize) -> Option<PeterCell> {
        p.checked_sub(1).and_then(|i| self.cells.get(i)).copied()
    }

    /// Checks that every digit's residue class holds exactly one black square.
    pub fn validate(&self) -> Result<(), PeterError> {
        for digit in 1..=9u8 {
            let start = first_position(digit)?;
            let blacks = (start..=self.cells.len())
                .step_by(STRIDE)
                .filter(|&p| self.cell(p) == Some(PeterCell::Black))
                .count();
            if blacks != 1 {
                return Err(PeterError::BlackCount { digit, blacks });
            }
        }
        Ok(())
    }
}

/// Six digits, one per table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PeterKey([u8; TABLES]);

impl PeterKey {
    pub fn new(digits: [u8; TABLES]) -> Result<Self, PeterError> {
        if let Some(&d) = digits.iter().find(|d| !(1..=9).contains(*d)) {
            return Err(PeterError::DigitOutOfRange(d));
        }
        Ok(Self(digits))
    }

    pub fn parse(text: &str) -> Result<Self, PeterError> {
        let bad = || PeterError::BadKey(text.into());
        let digits: Vec<u8> = text
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        let digits: [u8; TABLES] = digits.try_into().map_err(|_| bad())?;
        Self::new(digits).map_err(|_| bad())
    }

    pub fn digits(&self) -> [u8; TABLES] {
        self.0
    }

    /// All 9^6 keys in ascending order.
    pub fn all() -> impl Iterator<Item = PeterKey> {
        (0..PETER_LINES).map(|mut n| {
            let mut digits = [0u8; TABLES];
            for d in digits.iter_mut().rev() {
                *d = (n % 9) as u8 + 1;
                n /= 9;
            }
            PeterKey(digits)
        })
    }
}

impl fmt::Display for PeterKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Walks the table from the digit's start cell, taking every ninth cell until
/// a black square.
pub fn decode_word(table: &PeterTable, digit: u8) -> Result<String, PeterError> {
    let mut p = first_position(digit)?;
    let mut word = String::new();
    loop {
        match table.cell(p) {
            Some(PeterCell::Letter(c)) => word.push(c),
            Some(PeterCell::Black) => return Ok(word),
            None => return Err(PeterError::MalformedTable { digit }),
        }
        p += STRIDE;
    }
}

/// Decodes one word from each table.
pub fn decode_line(tables: &[PeterTable], key: PeterKey) -> Result<[String; TABLES], PeterError> {
    if tables.len() != TABLES {
        return Err(PeterError::TableCount(tables.len()));
    }
    let mut words: [String; TABLES] = Default::default();
    for ((word, table), digit) in words.iter_mut().zip(tables).zip(key.0) {
        *word = decode_word(table, digit)?;
    }
    Ok(words)
}

/// Number of keys, and so of lines the tables produce: 9^6.
pub const PETER_LINES: u64 = 531_441;

pub fn count_peter_lines() -> u64 {
    PETER_LINES
}

/// Distinct lines across all keys: the product of each table's distinct words.
pub fn count_distinct_peter_lines(tables: &[PeterTable]) -> Result<u64, PeterError> {
    if tables.len() != TABLES {
        return Err(PeterError::TableCount(tables.len()));
    }
    let mut product = 1u64;
    for table in tables {
        let mut seen: Vec<String> = Vec::new();
        for digit in 1..=9 {
            let w = decode_word(table, digit)?;
            if !seen.contains(&w) {
                seen.push(w);
            }
        }
        product *= seen.len() as u64;
    }
    Ok(product)
}

/// Hides nine words, `words[d - 1]` for digit `d`, in one table.
///
/// Cells after a word's black square are decoys: letters of that same word,
/// picked by a hash of the word and the cell's step, so the table is a pure
/// function of its words and each word only touches its own residue class.
pub fn encode_table(words: &[&str], row_width: usize) -> Result<PeterTable, PeterError> {
    if words.len() != WORDS_PER_TABLE {
        return Err(PeterError::WordCount(words.len()));
    }
    if row_width == 0 {
        return Err(PeterError::ZeroWidth);
    }
    let mut letters: Vec<Vec<char>> = Vec::with_capacity(WORDS_PER_TABLE);
    for (i, w) in words.iter().enumerate() {
        let chars = w
            .chars()
            .map(|c| {
                if c.is_ascii_alphabetic() {
                    Ok(c.to_ascii_lowercase())
                } else {
                    Err(PeterError::NonLatinLetter(c))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        if chars.is_empty() {
            return Err(PeterError::EmptyWord(i as u8 + 1));
        }
        letters.push(chars);
    }

    let mut last = 0;
    for (i, w) in letters.iter().enumerate() {
        let start = first_position(i as u8 + 1)?;
        last = last.max(start + STRIDE * w.len());
    }
    let len = last.div_ceil(row_width) * row_width;

    let mut cells = alloc::vec![PeterCell::Black; len];
    for (i, w) in letters.iter().enumerate() {
        let start = first_position(i as u8 + 1)?;
        let hash = fnv1a(w);
        for (k, p) in (start..=len).step_by(STRIDE).enumerate() {
            cells[p - 1] = match k.cmp(&w.len()) {
                core::cmp::Ordering::Less => PeterCell::Letter(w[k]),
                core::cmp::Ordering::Equal => PeterCell::Black,
                core::cmp::Ordering::Greater => {
                    let pick = mix(hash, k as u64) % w.len() as u64;
                    PeterCell::Letter(w[pick as usize])
                }
            };
        }
    }
    PeterTable::new(cells, row_width)
}

fn fnv1a(chars: &[char]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &c in chars {
        for b in (c as u32).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

fn mix(hash: u64, step: u64) -> u64 {
    let mut z = hash ^ step.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Printable grid: upper-case letters, black squares as `█`, one row per
/// line.
pub fn render_table(table: &PeterTable) -> String {
    let mut out = String::new();
    for row in table.cells.chunks(table.row_width) {
        for cell in row {
            out.push(match cell {
                PeterCell::Letter(c) => c.to_ascii_uppercase(),
                PeterCell::Black => BLACK_GLYPH,
            });
        }
        out.push('\n');
    }
    out
}
