//! Text file formats read and written by the command-line tool.

pub mod corpus;
pub mod lexicon;
pub mod peter;
pub mod program;

pub use corpus::{parse_corpus, CorpusError};
pub use lexicon::{parse_lexicon, render_lexicon, LexiconFileError};
pub use peter::{parse_tables, parse_word_sets, write_tables, TableFileError};
pub use program::{parse_program, render_program, ProgramFileError};
