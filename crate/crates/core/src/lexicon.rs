//! Word lists for the six drums and their metrical validation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::alphabet::{AlphabetError, Word};
use crate::meter::{MeterAutomaton, MeterState};

/// Number of drums, and of words in a line.
pub const SLOT_COUNT: usize = 6;

/// Metrical length of a syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    Long,
    Short,
}

impl Quantity {
    pub fn symbol(self) -> char {
        match self {
            Quantity::Long => '-',
            Quantity::Short => 'u',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '-' => Some(Quantity::Long),
            'u' | 'U' => Some(Quantity::Short),
            _ => None,
        }
    }
}

/// Writes quantities in file notation, e.g. `-uu`.
pub struct QuantityDisplay<'a>(pub &'a [Quantity]);

impl fmt::Display for QuantityDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in self.0 {
            write!(f, "{}", q.symbol())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartOfSpeech {
    Adjective,
    Noun,
    Adverb,
    Verb,
}

impl PartOfSpeech {
    pub fn keyword(self) -> &'static str {
        match self {
            PartOfSpeech::Adjective => "adj",
            PartOfSpeech::Noun => "noun",
            PartOfSpeech::Adverb => "adv",
            PartOfSpeech::Verb => "verb",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "adj" => Some(PartOfSpeech::Adjective),
            "noun" => Some(PartOfSpeech::Noun),
            "adv" => Some(PartOfSpeech::Adverb),
            "verb" => Some(PartOfSpeech::Verb),
            _ => None,
        }
    }
}

/// The slot grammar: adjective noun adverb verb noun adjective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlotCategory {
    Adj1,
    Noun1,
    Adv,
    Verb,
    Noun2,
    Adj2,
}

impl SlotCategory {
    pub const ALL: [SlotCategory; SLOT_COUNT] = [
        SlotCategory::Adj1,
        SlotCategory::Noun1,
        SlotCategory::Adv,
        SlotCategory::Verb,
        SlotCategory::Noun2,
        SlotCategory::Adj2,
    ];

    /// Category of 1-based drum `drum`.
    pub fn for_drum(drum: usize) -> Option<Self> {
        drum.checked_sub(1).and_then(|i| Self::ALL.get(i)).copied()
    }

    pub fn drum(self) -> usize {
        self as usize + 1
    }

    pub fn part_of_speech(self) -> PartOfSpeech {
        match self {
            SlotCategory::Adj1 | SlotCategory::Adj2 => PartOfSpeech::Adjective,
            SlotCategory::Noun1 | SlotCategory::Noun2 => PartOfSpeech::Noun,
            SlotCategory::Adv => PartOfSpeech::Adverb,
            SlotCategory::Verb => PartOfSpeech::Verb,
        }
    }
}

impl fmt::Display for SlotCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SlotCategory::Adj1 => "ADJ1",
            SlotCategory::Noun1 => "NOUN1",
            SlotCategory::Adv => "ADV",
            SlotCategory::Verb => "VERB",
            SlotCategory::Noun2 => "NOUN2",
            SlotCategory::Adj2 => "ADJ2",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error("drum {0} is outside 1..=6")]
    DrumOutOfRange(usize),
    #[error("empty drum {0}")]
    EmptyDrum(usize),
    #[error("word {word} has no quantities")]
    NoQuantities { word: Word },
    #[error("word {word} has {quantities} quantities but only {letters} letters")]
    TooManyQuantities {
        word: Word,
        quantities: usize,
        letters: usize,
    },
    #[error("drum {drum} takes {expected} words, not {found}")]
    CategoryMismatch {
        drum: usize,
        expected: &'static str,
        found: &'static str,
    },
    #[error("{} metrical violation(s), first: {}", .0.len(), .0[0])]
    Metrical(Vec<Diagnostic>),
}

/// One word on one drum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    drum: usize,
    word: Word,
    quantities: Vec<Quantity>,
    category: SlotCategory,
}

impl LexiconEntry {
    pub fn new(
        drum: usize,
        word: Word,
        quantities: Vec<Quantity>,
        part_of_speech: PartOfSpeech,
    ) -> Result<Self, LexiconError> {
        let category = SlotCategory::for_drum(drum).ok_or(LexiconError::DrumOutOfRange(drum))?;
        if category.part_of_speech() != part_of_speech {
            return Err(LexiconError::CategoryMismatch {
                drum,
                expected: category.part_of_speech().keyword(),
                found: part_of_speech.keyword(),
            });
        }
        if quantities.is_empty() {
            return Err(LexiconError::NoQuantities { word });
        }
        if quantities.len() > word.len() {
            return Err(LexiconError::TooManyQuantities {
                quantities: quantities.len(),
                letters: word.len(),
                word,
            });
        }
        Ok(Self {
            drum,
            word,
            quantities,
            category,
        })
    }

    pub fn drum(&self) -> usize {
        self.drum
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn quantities(&self) -> &[Quantity] {
        &self.quantities
    }

    pub fn category(&self) -> SlotCategory {
        self.category
    }
}

/// Entries grouped by drum, each drum keeping insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    drums: [Vec<LexiconEntry>; SLOT_COUNT],
}

impl Lexicon {
    pub fn from_entries<I>(entries: I) -> Result<Self, LexiconError>
    where
        I: IntoIterator<Item = LexiconEntry>,
    {
        let mut drums: [Vec<LexiconEntry>; SLOT_COUNT] = Default::default();
        for entry in entries {
            drums[entry.drum - 1].push(entry);
        }
        if let Some(i) = drums.iter().position(Vec::is_empty) {
            return Err(LexiconError::EmptyDrum(i + 1));
        }
        Ok(Self { drums })
    }

    /// Rows of 1-based drum `drum`.
    ///
    /// # Panics
    /// If `drum` is not in 1..=6.
    pub fn drum(&self, drum: usize) -> &[LexiconEntry] {
        &self.drums[drum - 1]
    }

    pub fn drums(&self) -> impl Iterator<Item = &[LexiconEntry]> {
        self.drums.iter().map(Vec::as_slice)
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.drums.iter().flatten()
    }

    /// First entry for `word` on `drum`.
    pub fn lookup(&self, drum: usize, word: &Word) -> Option<&LexiconEntry> {
        self.drums
            .get(drum.wrapping_sub(1))?
            .iter()
            .find(|e| e.word == *word)
    }

    /// Words of one drum with repeats removed, in first-seen order.
    pub fn distinct_words(&self, drum: usize) -> Vec<&Word> {
        let mut seen = BTreeSet::new();
        self.drum(drum)
            .iter()
            .map(|e| &e.word)
            .filter(|w| seen.insert(*w))
            .collect()
    }

    /// Number of different lines the drums can show: the product of each
    /// drum's distinct word count.
    pub fn count_distinct_lines(&self) -> u64 {
        (1..=SLOT_COUNT)
            .map(|d| self.distinct_words(d).len() as u64)
            .fold(1u64, u64::saturating_mul)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    /// Metrical findings are errors.
    Strict,
    /// Metrical findings are reported as warnings and the lexicon is kept.
    Historical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Warning,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finding {
    /// No choice of words on the other drums gives a hexameter with this word.
    Unfit,
    /// Some choice of words on the other drums gives a line that does not scan.
    Unclosed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub finding: Finding,
    pub drum: usize,
    /// 0-based row on the drum.
    pub row: usize,
    pub word: Word,
    pub quantities: Vec<Quantity>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        let what = match self.finding {
            Finding::Unfit => "cannot appear in any hexameter from this lexicon",
            Finding::Unclosed => "yields lines that do not scan",
        };
        write!(
            f,
            "{level}: drum {} row {} {} ({}) {what}",
            self.drum,
            self.row + 1,
            self.word,
            QuantityDisplay(&self.quantities)
        )
    }
}

/// Checks that every word can take part in a hexameter and that every line the
/// drums can produce scans.
///
/// Words that fit nowhere are reported as [`Finding::Unfit`]. The remaining
/// words are then checked for closure: a word that can be combined with the
/// other drums' (fit) words into a line that fails to scan is reported as
/// [`Finding::Unclosed`]. A lexicon with no findings produces only hexameters.
pub fn validate_historical(
    lexicon: &Lexicon,
    mode: ValidationMode,
    allow_spondaic_fifth: bool,
) -> Result<Vec<Diagnostic>, LexiconError> {
    let automaton = MeterAutomaton::new(allow_spondaic_fifth);
    let all: Vec<Vec<&[Quantity]>> = lexicon
        .drums()
        .map(|d| d.iter().map(|e| e.quantities()).collect())
        .collect();

    let mut findings = Vec::new();
    let fit = DrumAnalysis::new(&automaton, &all);
    let mut kept: Vec<Vec<&[Quantity]>> = Vec::with_capacity(SLOT_COUNT);
    for (d, entries) in lexicon.drums().enumerate() {
        let mut keep = Vec::new();
        for (row, entry) in entries.iter().enumerate() {
            if fit.can_complete(d, entry.quantities()) {
                keep.push(entry.quantities());
            } else {
                findings.push((Finding::Unfit, d, row, entry));
            }
        }
        kept.push(keep);
    }

    if kept.iter().all(|k| !k.is_empty()) {
        let closed = DrumAnalysis::new(&automaton, &kept);
        for (d, entries) in lexicon.drums().enumerate() {
            for (row, entry) in entries.iter().enumerate() {
                let unfit = findings
                    .iter()
                    .any(|&(_, fd, frow, _)| fd == d && frow == row);
                if !unfit && !closed.always_completes(d, entry.quantities()) {
                    findings.push((Finding::Unclosed, d, row, entry));
                }
            }
        }
    }

    findings.sort_by_key(|&(_, d, row, _)| (d, row));
    let severity = match mode {
        ValidationMode::Strict => Severity::Error,
        ValidationMode::Historical => Severity::Warning,
    };
    let diagnostics: Vec<Diagnostic> = findings
        .into_iter()
        .map(|(finding, d, row, entry)| Diagnostic {
            severity,
            finding,
            drum: d + 1,
            row,
            word: entry.word.clone(),
            quantities: entry.quantities.clone(),
        })
        .collect();

    if mode == ValidationMode::Strict && !diagnostics.is_empty() {
        Err(LexiconError::Metrical(diagnostics))
    } else {
        Ok(diagnostics)
    }
}

/// Forward reachable meter states before each drum, plus memoised backward
/// "some completion scans" / "every completion scans" queries.
struct DrumAnalysis<'a> {
    automaton: &'a MeterAutomaton,
    drums: &'a [Vec<&'a [Quantity]>],
    reachable: Vec<BTreeSet<MeterState>>,
    some: core::cell::RefCell<BTreeMap<(usize, MeterState), bool>>,
    every: core::cell::RefCell<BTreeMap<(usize, MeterState), bool>>,
}

impl<'a> DrumAnalysis<'a> {
    fn new(automaton: &'a MeterAutomaton, drums: &'a [Vec<&'a [Quantity]>]) -> Self {
        let mut reachable = Vec::with_capacity(drums.len());
        let mut current = BTreeSet::new();
        current.insert(MeterState::START);
        for words in drums {
            let next = current
                .iter()
                .flat_map(|&s| words.iter().map(move |w| automaton.run(s, w)))
                // dead states stay: a line already broken on an earlier drum
                // still counts against every word later in it
                .collect();
            reachable.push(core::mem::replace(&mut current, next));
        }
        Self {
            automaton,
            drums,
            reachable,
            some: Default::default(),
            every: Default::default(),
        }
    }

    fn can_complete(&self, drum: usize, word: &[Quantity]) -> bool {
        self.reachable[drum]
            .iter()
            .any(|&s| self.some_from(drum + 1, self.automaton.run(s, word)))
    }

    fn always_completes(&self, drum: usize, word: &[Quantity]) -> bool {
        self.reachable[drum]
            .iter()
            .all(|&s| self.every_from(drum + 1, self.automaton.run(s, word)))
    }

    fn some_from(&self, drum: usize, state: MeterState) -> bool {
        if drum == self.drums.len() {
            return state.accepts();
        }
        if state.is_dead() {
            return false;
        }
        if let Some(&v) = self.some.borrow().get(&(drum, state)) {
            return v;
        }
        let v = self.drums[drum]
            .iter()
            .any(|w| self.some_from(drum + 1, self.automaton.run(state, w)));
        self.some.borrow_mut().insert((drum, state), v);
        v
    }

    fn every_from(&self, drum: usize, state: MeterState) -> bool {
        if drum == self.drums.len() {
            return state.accepts();
        }
        if state.is_dead() {
            return false;
        }
        if let Some(&v) = self.every.borrow().get(&(drum, state)) {
            return v;
        }
        let v = self.drums[drum]
            .iter()
            .all(|w| self.every_from(drum + 1, self.automaton.run(state, w)));
        self.every.borrow_mut().insert((drum, state), v);
        v
    }
}
