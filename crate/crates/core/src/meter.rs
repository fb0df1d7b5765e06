//! Dactylic hexameter scansion.
//!
//! Feet one to four are dactyls (`-uu`) or spondees (`--`), foot five is a
//! dactyl unless spondaic fifths are allowed, and foot six is a long followed
//! by an anceps syllable. Elision is not modelled.
//!
//! Two recognisers live here. [`scan`] is a backtracking parser that returns
//! the dactyl-first foot assignment. [`MeterAutomaton`] runs the same foot
//! grammar as a subset-construction automaton so lexicon validation can reason
//! about whole drums at once without enumerating lines.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::alphabet::Word;
use crate::lexicon::{Lexicon, Quantity, SLOT_COUNT};

/// Feet per line.
pub const FEET: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FootKind {
    Dactyl,
    Spondee,
    /// Line-final long plus anceps.
    Final,
}

impl FootKind {
    pub fn letter(self) -> char {
        match self {
            FootKind::Dactyl => 'D',
            FootKind::Spondee => 'S',
            FootKind::Final => 'X',
        }
    }

    fn pattern(self) -> &'static [Quantity] {
        use Quantity::{Long, Short};
        match self {
            FootKind::Dactyl => &[Long, Short, Short],
            FootKind::Spondee => &[Long, Long],
            FootKind::Final => &[Long, Long],
        }
    }
}

/// One foot and the half-open syllable range it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Foot {
    pub kind: FootKind,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FootParse {
    pub feet: [Foot; FEET],
}

impl FootParse {
    pub fn kinds(&self) -> [FootKind; FEET] {
        self.feet.map(|f| f.kind)
    }

    /// Syllable count covered by the parse.
    pub fn len(&self) -> usize {
        self.feet[FEET - 1].end
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for FootParse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, foot) in self.feet.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", foot.kind.letter())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeterError {
    #[error("empty quantity sequence")]
    Empty,
    #[error("no valid hexameter parse (furthest failure at syllable {furthest})")]
    NoValidParse { furthest: usize },
    #[error("expected {expected} words, got {got}")]
    WordCount { expected: usize, got: usize },
    #[error("word {word} is not on drum {drum}")]
    UnknownWord { drum: usize, word: Word },
}

/// Scans a quantity sequence as a hexameter.
///
/// Tries feet left to right, dactyl before spondee, and returns the first
/// complete parse. On failure reports the furthest syllable index at which a
/// foot failed to match.
pub fn scan(quantities: &[Quantity], allow_spondaic_fifth: bool) -> Result<FootParse, MeterError> {
    if quantities.is_empty() {
        return Err(MeterError::Empty);
    }
    let mut scanner = Scanner {
        q: quantities,
        allow_spondaic_fifth,
        feet: [Foot {
            kind: FootKind::Final,
            start: 0,
            end: 0,
        }; FEET],
        furthest: 0,
    };
    if scanner.foot(0, 0) {
        Ok(FootParse { feet: scanner.feet })
    } else {
        Err(MeterError::NoValidParse {
            furthest: scanner.furthest,
        })
    }
}

struct Scanner<'a> {
    q: &'a [Quantity],
    allow_spondaic_fifth: bool,
    feet: [Foot; FEET],
    furthest: usize,
}

impl Scanner<'_> {
    fn fail_at(&mut self, pos: usize) -> bool {
        self.furthest = self.furthest.max(pos);
        false
    }

    fn foot(&mut self, index: usize, pos: usize) -> bool {
        if index == FEET - 1 {
            return self.final_foot(pos);
        }
        let candidates: &[FootKind] = if index < 4 || self.allow_spondaic_fifth {
            &[FootKind::Dactyl, FootKind::Spondee]
        } else {
            &[FootKind::Dactyl]
        };
        for &kind in candidates {
            match self.match_pattern(kind.pattern(), pos) {
                Ok(end) => {
                    self.feet[index] = Foot {
                        kind,
                        start: pos,
                        end,
                    };
                    if self.foot(index + 1, end) {
                        return true;
                    }
                }
                Err(at) => {
                    self.fail_at(at);
                }
            }
        }
        false
    }

    fn final_foot(&mut self, pos: usize) -> bool {
        let len = self.q.len();
        if pos >= len {
            return self.fail_at(pos);
        }
        if self.q[pos] != Quantity::Long {
            return self.fail_at(pos);
        }
        if len - pos < 2 {
            return self.fail_at(len);
        }
        if len - pos > 2 {
            // syllables left over after the sixth foot
            return self.fail_at(pos + 2);
        }
        self.feet[FEET - 1] = Foot {
            kind: FootKind::Final,
            start: pos,
            end: len,
        };
        true
    }

    fn match_pattern(&self, pattern: &[Quantity], pos: usize) -> Result<usize, usize> {
        for (k, want) in pattern.iter().enumerate() {
            match self.q.get(pos + k) {
                Some(got) if got == want => {}
                _ => return Err(pos + k),
            }
        }
        Ok(pos + pattern.len())
    }
}

/// Looks up each word on its slot's drum and scans the concatenated
/// quantities.
pub fn scan_line(
    lexicon: &Lexicon,
    words: &[Word],
    allow_spondaic_fifth: bool,
) -> Result<FootParse, MeterError> {
    if words.len() != SLOT_COUNT {
        return Err(MeterError::WordCount {
            expected: SLOT_COUNT,
            got: words.len(),
        });
    }
    let mut quantities = Vec::new();
    for (i, word) in words.iter().enumerate() {
        let drum = i + 1;
        let entry = lexicon
            .lookup(drum, word)
            .ok_or_else(|| MeterError::UnknownWord {
                drum,
                word: word.clone(),
            })?;
        quantities.extend_from_slice(entry.quantities());
    }
    scan(&quantities, allow_spondaic_fifth)
}

/// A set of positions in the foot grammar, packed into a bitmask.
///
/// Bits 0..=6 mark "at the start of foot f" (bit 6 is the accepting state,
/// line complete). Bits 7..=12 mark "read the opening long of foot f".
/// Bits 13..=17 mark "read long-short of foot f, one short to go".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MeterState(u32);

const AT_FOOT: u32 = 0;
const AFTER_LONG: u32 = 7;
const AFTER_LONG_SHORT: u32 = 13;
const ACCEPT_BIT: u32 = 1 << (AT_FOOT + FEET as u32);

impl MeterState {
    pub const START: MeterState = MeterState(1 << AT_FOOT);
    pub const DEAD: MeterState = MeterState(0);

    pub fn is_dead(self) -> bool {
        self.0 == 0
    }

    /// True when the syllables read so far form a complete line.
    pub fn accepts(self) -> bool {
        self.0 & ACCEPT_BIT != 0
    }
}

/// Runs the hexameter foot grammar over quantity sequences one syllable at a
/// time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeterAutomaton {
    allow_spondaic_fifth: bool,
}

impl MeterAutomaton {
    pub fn new(allow_spondaic_fifth: bool) -> Self {
        Self {
            allow_spondaic_fifth,
        }
    }

    pub fn step(&self, state: MeterState, q: Quantity) -> MeterState {
        let mut next = 0u32;
        let bits = state.0;
        let last = FEET as u32 - 1;
        for f in 0..FEET as u32 {
            if bits & (1 << (AT_FOOT + f)) != 0 && q == Quantity::Long {
                next |= 1 << (AFTER_LONG + f);
            }
            if bits & (1 << (AFTER_LONG + f)) != 0 {
                if f == last {
                    // anceps
                    next |= ACCEPT_BIT;
                } else {
                    match q {
                        Quantity::Short => next |= 1 << (AFTER_LONG_SHORT + f),
                        Quantity::Long => {
                            if f < 4 || self.allow_spondaic_fifth {
                                next |= 1 << (AT_FOOT + f + 1);
                            }
                        }
                    }
                }
            }
            if f < last && bits & (1 << (AFTER_LONG_SHORT + f)) != 0 && q == Quantity::Short {
                next |= 1 << (AT_FOOT + f + 1);
            }
        }
        MeterState(next)
    }

    pub fn run(&self, state: MeterState, quantities: &[Quantity]) -> MeterState {
        quantities.iter().fold(state, |s, &q| self.step(s, q))
    }

    pub fn accepts(&self, quantities: &[Quantity]) -> bool {
        self.run(MeterState::START, quantities).accepts()
    }
}

/// Parses a quantity string such as `-uu -u u-`. Whitespace is ignored.
pub fn parse_quantities(text: &str) -> Option<Vec<Quantity>> {
    let q: Option<Vec<Quantity>> = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(Quantity::from_symbol)
        .collect();
    q.filter(|v| !v.is_empty())
}
