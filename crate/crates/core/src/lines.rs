//! Exhaustive listing of every line a program can show.

use alloc::vec::Vec;

use thiserror::Error;

use crate::alphabet::Word;
use crate::drum::{DrumError, MachineProgram};
use crate::lexicon::SLOT_COUNT;
use crate::machine::Verse;

/// Default ceiling on the number of lines [`enumerate_lines`] will list.
pub const DEFAULT_LINE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("{lines} lines exceed the cap of {cap}")]
    CapExceeded { lines: u64, cap: u64 },
    #[error(transparent)]
    Drum(#[from] DrumError),
}

/// Streams the cartesian product of each drum's distinct words.
///
/// Drum 1 varies slowest and drum 6 fastest; within a drum words come in row
/// order, a repeated word keeping its first row.
#[derive(Debug, Clone)]
pub struct LineEnumerator {
    words: Vec<Vec<Word>>,
    odometer: [usize; SLOT_COUNT],
    remaining: u64,
}

impl Iterator for LineEnumerator {
    type Item = Verse;

    fn next(&mut self) -> Option<Verse> {
        if self.remaining == 0 {
            return None;
        }
        let words: [Word; SLOT_COUNT] =
            core::array::from_fn(|d| self.words[d][self.odometer[d]].clone());
        self.remaining -= 1;
        for d in (0..SLOT_COUNT).rev() {
            self.odometer[d] += 1;
            if self.odometer[d] < self.words[d].len() {
                break;
            }
            self.odometer[d] = 0;
        }
        Some(Verse::new(words))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

impl ExactSizeIterator for LineEnumerator {}

/// Distinct words wired on each drum, first occurrence order.
pub fn distinct_drum_words(program: &MachineProgram) -> Result<Vec<Vec<Word>>, DrumError> {
    program
        .drums()
        .iter()
        .map(|drum| {
            let mut words: Vec<Word> = Vec::new();
            for r in 0..drum.row_count() {
                let w = drum.decode_row(r)?;
                if !words.contains(&w) {
                    words.push(w);
                }
            }
            Ok(words)
        })
        .collect()
}

/// Number of distinct lines the program can show.
pub fn count_program_lines(program: &MachineProgram) -> Result<u64, DrumError> {
    Ok(distinct_drum_words(program)?
        .iter()
        .map(|w| w.len() as u64)
        .fold(1, u64::saturating_mul))
}

/// Every distinct line, refusing when there are more than `cap`.
pub fn enumerate_lines(program: &MachineProgram, cap: u64) -> Result<LineEnumerator, EnumerateError> {
    let words = distinct_drum_words(program)?;
    let lines = words.iter().map(|w| w.len() as u64).fold(1, u64::saturating_mul);
    if lines > cap {
        return Err(EnumerateError::CapExceeded { lines, cap });
    }
    Ok(LineEnumerator {
        words,
        odometer: [0; SLOT_COUNT],
        remaining: lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drum::compile_drum;
    use crate::lexicon::SlotCategory;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn program(drums: [&[&str]; SLOT_COUNT]) -> MachineProgram {
        let matrices: Vec<_> = drums
            .iter()
            .enumerate()
            .map(|(d, ws)| {
                let words: Vec<Word> = ws.iter().map(|w| Word::parse(w).unwrap()).collect();
                compile_drum(&words, SlotCategory::ALL[d]).unwrap()
            })
            .collect();
        MachineProgram::new(matrices.try_into().unwrap()).unwrap()
    }

    #[test]
    fn two_per_drum() {
        let p = program([
            &["IMPIA", "MARTIA"],
            &["VERBA", "CASTRA"],
            &["DOMI", "FORIS"],
            &["CONJUNGUNT", "PRAENARRANT"],
            &["CRIMINA", "PROELIA"],
            &["MALA", "MULTA"],
        ]);
        let lines: Vec<Verse> = enumerate_lines(&p, DEFAULT_LINE_CAP).unwrap().collect();
        assert_eq!(lines.len(), 64);
        let set: BTreeSet<_> = lines.iter().cloned().collect();
        assert_eq!(set.len(), 64);
        assert_eq!(lines[0].to_string(), "IMPIA VERBA DOMI CONJUNGUNT CRIMINA MALA");
        assert_eq!(lines[1].to_string(), "IMPIA VERBA DOMI CONJUNGUNT CRIMINA MULTA");
        assert_eq!(lines[63].to_string(), "MARTIA CASTRA FORIS PRÆNARRANT PRŒLIA MULTA");
    }

    #[test]
    fn repeated_word_counted_once() {
        let p = program([&["A"], &["B"], &["FORIS", "DOMI", "FORIS"], &["C"], &["D"], &["E"]]);
        assert_eq!(count_program_lines(&p).unwrap(), 2);
        assert_eq!(enumerate_lines(&p, 10).unwrap().len(), 2);
    }

    #[test]
    fn single_line_and_cap() {
        let p = program([&["A"], &["B"], &["C"], &["D"], &["E"], &["F"]]);
        assert_eq!(enumerate_lines(&p, 1).unwrap().count(), 1);
        let p = program([&["A", "B"], &["B", "C"], &["C"], &["D"], &["E"], &["F"]]);
        assert_eq!(
            enumerate_lines(&p, 3).unwrap_err(),
            EnumerateError::CapExceeded { lines: 4, cap: 3 }
        );
    }
}
