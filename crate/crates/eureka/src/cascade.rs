//! Chains of machines, each built from the verses of the one before.
//!
//! Generation k's drum d holds the distinct words found at position d of the
//! previous generation's lines, in first-seen order. Quantities and
//! categories come from the root lexicon, so every successor is a sub-lexicon
//! of the root and inherits its metrical closure.

use eureka_core::lexicon::{LexiconEntry, SLOT_COUNT};
use eureka_core::{compile_program, DrumError, Lexicon, LexiconError, Machine, MachineConfig, MachineError, Word};
use thiserror::Error;

use crate::formats::corpus::CorpusLine;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CascadeError {
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("cascade depth must be at least 1")]
    ZeroDepth,
    #[error("word {word} (position {drum}) is not in the root lexicon")]
    MissingWord { drum: usize, word: Word },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Drum(#[from] DrumError),
    #[error(transparent)]
    Machine(#[from] MachineError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeSpec {
    pub corpus: Vec<CorpusLine>,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generation {
    /// 1-based.
    pub index: usize,
    pub lexicon: Lexicon,
    pub lines: Vec<CorpusLine>,
}

/// Builds the lexicon a corpus supplies to the next machine.
pub fn corpus_lexicon(root: &Lexicon, corpus: &[CorpusLine]) -> Result<Lexicon, CascadeError> {
    if corpus.is_empty() {
        return Err(CascadeError::EmptyCorpus);
    }
    let mut drums: [Vec<&LexiconEntry>; SLOT_COUNT] = Default::default();
    for line in corpus {
        for (d, word) in line.iter().enumerate() {
            let entry = root.lookup(d + 1, word).ok_or_else(|| CascadeError::MissingWord {
                drum: d + 1,
                word: word.clone(),
            })?;
            if !drums[d].iter().any(|e| e.word() == word) {
                drums[d].push(entry);
            }
        }
    }
    Ok(Lexicon::from_entries(drums.into_iter().flatten().cloned())?)
}

/// Runs `depth` generations of `pulls` verses each. Generation k uses seed
/// `seed + k - 1` and auto-winds.
pub fn run_cascade(
    root: &Lexicon,
    spec: &CascadeSpec,
    seed: u64,
    pulls: usize,
) -> Result<Vec<Generation>, CascadeError> {
    if spec.depth == 0 {
        return Err(CascadeError::ZeroDepth);
    }
    let mut corpus = spec.corpus.clone();
    let mut out = Vec::with_capacity(spec.depth);
    for k in 0..spec.depth {
        let lexicon = corpus_lexicon(root, &corpus)?;
        let program = compile_program(&lexicon)?;
        let config = MachineConfig {
            auto_wind: true,
            ..Default::default()
        };
        let mut machine = Machine::new(program, seed.wrapping_add(k as u64), config);
        let lines: Vec<CorpusLine> = machine
            .run_session(pulls)?
            .into_iter()
            .map(|r| r.verse.words().clone())
            .collect();
        out.push(Generation {
            index: k + 1,
            lexicon,
            lines: lines.clone(),
        });
        if lines.is_empty() {
            break;
        }
        corpus = lines;
    }
    Ok(out)
}
