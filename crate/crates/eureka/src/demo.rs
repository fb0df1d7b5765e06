//! Built-in data files.

use eureka_core::Lexicon;

use crate::formats::parse_lexicon;

/// The two verses quoted from the machine, two words per drum.
pub const DEMO_LEXICON: &str = include_str!("../data/demo.lex");
/// A lexicon with the machine's recorded drum sizes.
pub const CLARK_LEXICON: &str = include_str!("../data/clark.lex");
/// The two quoted verses, as a cascade corpus.
pub const DEMO_CORPUS: &str = "IMPIA VERBA DOMI CONJUNGUNT CRIMINA MALA\nMARTIA CASTRA FORIS PRAENARRANT PROELIA MULTA\n";
/// Nine words per Peter table, six tables.
pub const PETER_WORDS: &str = include_str!("../data/peter.words");

pub fn demo_lexicon() -> Lexicon {
    parse_lexicon(DEMO_LEXICON).expect("built-in demo lexicon parses")
}

pub fn clark_lexicon() -> Lexicon {
    parse_lexicon(CLARK_LEXICON).expect("built-in clark lexicon parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use eureka_core::{compile_program, validate_historical, ValidationMode};

    #[test]
    fn demo_is_closed() {
        let lex = demo_lexicon();
        assert_eq!(lex.count_distinct_lines(), 64);
        assert!(validate_historical(&lex, ValidationMode::Strict, false).unwrap().is_empty());
        assert_eq!(compile_program(&lex).unwrap().stave_count(), 39);
    }

    #[test]
    fn clark_sizes() {
        let lex = clark_lexicon();
        let sizes: Vec<usize> = (1..=6).map(|d| lex.distinct_words(d).len()).collect();
        assert_eq!(sizes, [15, 16, 16, 18, 19, 20]);
        assert_eq!(lex.count_distinct_lines(), 26_265_600);
        assert!(validate_historical(&lex, ValidationMode::Strict, false).is_ok());
    }
}
