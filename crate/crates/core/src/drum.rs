//! Compiles words into wire lengths on the drums, and reads them back.
//!
//! A letter at stave index `i` is wired with length `28 - i`, so A gets the
//! longest wire (27) and Z the shortest (1). Length 0 means no wire: the
//! column is padding past the end of a shorter word.

use alloc::vec::Vec;

use thiserror::Error;

use crate::alphabet::{letter_at, letter_index, AlphabetError, Word, ALPHABET_LEN};
use crate::lexicon::{Lexicon, SlotCategory, SLOT_COUNT};

/// Depth a stave reaches when there is no wire under it.
pub const BLANK_DEPTH: u8 = ALPHABET_LEN + 1;

/// Length of one wire, 0 for none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WireLength(u8);

impl WireLength {
    pub const NONE: WireLength = WireLength(0);

    pub fn new(length: u8) -> Option<Self> {
        (length <= ALPHABET_LEN).then_some(WireLength(length))
    }

    pub fn for_letter(letter: char) -> Result<Self, AlphabetError> {
        letter_index(letter).map(|i| WireLength(BLANK_DEPTH - i))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn is_none(self) -> bool {
        self.0 == 0
    }

    /// How far a stave falls before it rests on this wire.
    pub fn rest_depth(self) -> u8 {
        BLANK_DEPTH - self.0
    }

    pub fn letter(self) -> Option<char> {
        if self.is_none() {
            None
        } else {
            letter_at(self.rest_depth()).ok()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrumError {
    #[error("no words to compile")]
    NoWords,
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error("row {row} out of range ({rows} rows)")]
    RowOutOfRange { row: usize, rows: usize },
    #[error("row {row} has a wire after a blank column")]
    MalformedRow { row: usize },
    #[error("row {row} is blank")]
    BlankRow { row: usize },
    #[error("row {row} has {got} columns, drum is {width} wide")]
    RaggedRow { row: usize, got: usize, width: usize },
    #[error("drum {drum} is wired for slot {found}")]
    SlotOrder { drum: usize, found: SlotCategory },
    #[error("wire length {0} is longer than 27")]
    BadLength(u8),
}

/// The wires on one drum: one row per word, one column per stave.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WireMatrix {
    slot: SlotCategory,
    width: usize,
    rows: Vec<Vec<WireLength>>,
}

impl WireMatrix {
    /// Builds a matrix from raw wire lengths, checking every row decodes.
    pub fn from_rows(slot: SlotCategory, rows: Vec<Vec<u8>>) -> Result<Self, DrumError> {
        if rows.is_empty() {
            return Err(DrumError::NoWords);
        }
        let width = rows[0].len();
        let mut out = Vec::with_capacity(rows.len());
        for (r, raw) in rows.into_iter().enumerate() {
            if raw.len() != width {
                return Err(DrumError::RaggedRow {
                    row: r,
                    got: raw.len(),
                    width,
                });
            }
            let row = raw
                .into_iter()
                .map(|l| WireLength::new(l).ok_or(DrumError::BadLength(l)))
                .collect::<Result<Vec<_>, _>>()?;
            out.push(row);
        }
        let matrix = WireMatrix {
            slot,
            width,
            rows: out,
        };
        for r in 0..matrix.rows.len() {
            matrix.decode_row(r)?;
        }
        if !matrix.rows.iter().any(|row| !row[width - 1].is_none()) {
            return Err(DrumError::BlankRow { row: 0 });
        }
        Ok(matrix)
    }

    pub fn slot(&self) -> SlotCategory {
        self.slot
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, index: usize) -> Option<&[WireLength]> {
        self.rows.get(index).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[WireLength]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// Reads the word wired on row `index`.
    pub fn decode_row(&self, index: usize) -> Result<Word, DrumError> {
        let row = self.row(index).ok_or(DrumError::RowOutOfRange {
            row: index,
            rows: self.rows.len(),
        })?;
        decode_wires(row).map_err(|e| match e {
            DrumError::MalformedRow { .. } => DrumError::MalformedRow { row: index },
            DrumError::BlankRow { .. } => DrumError::BlankRow { row: index },
            other => other,
        })
    }
}

/// Decodes one row of wires. Padding must be a suffix.
pub fn decode_wires(row: &[WireLength]) -> Result<Word, DrumError> {
    let len = row.iter().position(|w| w.is_none()).unwrap_or(row.len());
    if row[len..].iter().any(|w| !w.is_none()) {
        return Err(DrumError::MalformedRow { row: 0 });
    }
    if len == 0 {
        return Err(DrumError::BlankRow { row: 0 });
    }
    let indices: Vec<u8> = row[..len].iter().map(|w| w.rest_depth()).collect();
    Ok(Word::from_indices(&indices)?)
}

/// Wires one drum. Row `k` spells `words[k]`, padded with 0 to the width of
/// the longest word.
pub fn compile_drum(words: &[Word], slot: SlotCategory) -> Result<WireMatrix, DrumError> {
    let width = words.iter().map(Word::len).max().ok_or(DrumError::NoWords)?;
    let rows = words
        .iter()
        .map(|w| {
            let mut row: Vec<WireLength> = w
                .letters()
                .map(WireLength::for_letter)
                .collect::<Result<_, _>>()?;
            row.resize(width, WireLength::NONE);
            Ok(row)
        })
        .collect::<Result<Vec<_>, DrumError>>()?;
    Ok(WireMatrix { slot, width, rows })
}

/// All six drums, in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineProgram {
    drums: [WireMatrix; SLOT_COUNT],
}

impl MachineProgram {
    pub fn new(drums: [WireMatrix; SLOT_COUNT]) -> Result<Self, DrumError> {
        for (d, m) in drums.iter().enumerate() {
            if m.slot != SlotCategory::ALL[d] {
                return Err(DrumError::SlotOrder {
                    drum: d + 1,
                    found: m.slot,
                });
            }
        }
        Ok(Self { drums })
    }

    pub fn drums(&self) -> &[WireMatrix; SLOT_COUNT] {
        &self.drums
    }

    /// 1-based drum accessor.
    pub fn drum(&self, drum: usize) -> &WireMatrix {
        &self.drums[drum - 1]
    }

    /// Total number of staves: one per column across all drums.
    pub fn stave_count(&self) -> usize {
        self.drums.iter().map(WireMatrix::width).sum()
    }
}

/// Wires every drum of a lexicon, keeping each drum's row order.
pub fn compile_program(lexicon: &Lexicon) -> Result<MachineProgram, DrumError> {
    let mut drums = Vec::with_capacity(SLOT_COUNT);
    for (d, entries) in lexicon.drums().enumerate() {
        let words: Vec<Word> = entries.iter().map(|e| e.word().clone()).collect();
        drums.push(compile_drum(&words, SlotCategory::ALL[d])?);
    }
    let drums: [WireMatrix; SLOT_COUNT] = drums
        .try_into()
        .map_err(|_| DrumError::NoWords)?;
    MachineProgram::new(drums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn words(ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| Word::parse(w).unwrap()).collect()
    }

    fn lengths(m: &WireMatrix, r: usize) -> Vec<u8> {
        m.row(r).unwrap().iter().map(|w| w.get()).collect()
    }

    #[test]
    fn densa() {
        let m = compile_drum(&words(&["DENSA"]), SlotCategory::Adj2).unwrap();
        assert_eq!(lengths(&m, 0), vec![23, 22, 13, 7, 27]);
        assert_eq!(m.decode_row(0).unwrap().as_str(), "DENSA");
    }

    #[test]
    fn single_letter() {
        let m = compile_drum(&words(&["A"]), SlotCategory::Adj1).unwrap();
        assert_eq!(m.width(), 1);
        assert_eq!(lengths(&m, 0), vec![27]);
        assert_eq!(m.decode_row(0).unwrap().as_str(), "A");
    }

    #[test]
    fn padding() {
        let m = compile_drum(&words(&["AB", "A"]), SlotCategory::Adj1).unwrap();
        assert_eq!(m.width(), 2);
        assert_eq!(lengths(&m, 1), vec![27, 0]);
        assert_eq!(m.decode_row(1).unwrap().as_str(), "A");
    }

    #[test]
    fn decode_errors() {
        let m = WireMatrix {
            slot: SlotCategory::Adj1,
            width: 3,
            rows: vec![vec![WireLength(27), WireLength(0), WireLength(5)]],
        };
        assert_eq!(m.decode_row(0), Err(DrumError::MalformedRow { row: 0 }));
        assert_eq!(m.decode_row(1), Err(DrumError::RowOutOfRange { row: 1, rows: 1 }));
        assert!(WireMatrix::from_rows(SlotCategory::Adj1, vec![vec![27, 0, 5]]).is_err());
        assert!(WireMatrix::from_rows(SlotCategory::Adj1, vec![vec![28]]).is_err());
        assert_eq!(compile_drum(&[], SlotCategory::Adj1), Err(DrumError::NoWords));
    }

    #[test]
    fn ligature_wires() {
        let m = compile_drum(&words(&["PRÆLIA"]), SlotCategory::Noun2).unwrap();
        assert_eq!(lengths(&m, 0)[2], 26);
        let m = compile_drum(&words(&["PRŒLIA"]), SlotCategory::Noun2).unwrap();
        assert_eq!(lengths(&m, 0)[2], 11);
    }

    #[test]
    fn longer_wire_means_earlier_letter() {
        let all = crate::alphabet::LETTERS;
        for (i, &a) in all.iter().enumerate() {
            for &b in &all[i + 1..] {
                assert!(WireLength::for_letter(a).unwrap() > WireLength::for_letter(b).unwrap());
            }
        }
    }
}
