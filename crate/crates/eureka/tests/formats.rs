use eureka::formats::{parse_lexicon, parse_program, parse_tables, render_lexicon, render_program, write_tables};
use eureka_core::alphabet::LETTERS;
use eureka_core::lexicon::{Lexicon, LexiconEntry, Quantity, SlotCategory};
use eureka_core::peter::encode_table;
use eureka_core::{compile_program, Word};
use proptest::prelude::*;

fn entry_strategy() -> impl Strategy<Value = LexiconEntry> {
    (
        1usize..=6,
        prop::collection::vec(prop::sample::select(LETTERS.to_vec()), 3..10),
        prop::collection::vec(prop::bool::ANY, 1..3),
    )
        .prop_map(|(drum, letters, longs)| {
            let word = Word::parse(&letters.into_iter().collect::<String>()).unwrap();
            let q = longs
                .into_iter()
                .map(|l| if l { Quantity::Long } else { Quantity::Short })
                .collect();
            let pos = SlotCategory::ALL[drum - 1].part_of_speech();
            LexiconEntry::new(drum, word, q, pos).unwrap()
        })
}

fn lexicon_strategy() -> impl Strategy<Value = Lexicon> {
    (prop::collection::vec(entry_strategy(), 0..20), prop::collection::vec(entry_strategy(), 6)).prop_map(
        |(extra, mut base)| {
            for (d, e) in base.iter_mut().enumerate() {
                let pos = SlotCategory::ALL[d].part_of_speech();
                *e = LexiconEntry::new(d + 1, e.word().clone(), e.quantities().to_vec(), pos).unwrap();
            }
            Lexicon::from_entries(base.into_iter().chain(extra)).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn lexicon_file_round_trip(lex in lexicon_strategy()) {
        let text = render_lexicon(&lex);
        prop_assert_eq!(parse_lexicon(&text).unwrap(), lex);
    }

    #[test]
    fn program_dump_round_trip(lex in lexicon_strategy()) {
        let program = compile_program(&lex).unwrap();
        prop_assert_eq!(parse_program(&render_program(&program)).unwrap(), program);
    }

    #[test]
    fn table_file_round_trip(
        sets in prop::collection::vec(prop::collection::vec("[a-z]{1,8}", 9), 1..7),
        width in 1usize..15,
    ) {
        let tables: Vec<_> = sets
            .iter()
            .map(|s| encode_table(&s.iter().map(String::as_str).collect::<Vec<_>>(), width).unwrap())
            .collect();
        prop_assert_eq!(parse_tables(&write_tables(&tables)).unwrap(), tables);
    }
}

#[test]
fn lexicon_file_accepts_ligature_spellings() {
    let a = parse_lexicon(eureka::demo::DEMO_LEXICON).unwrap();
    let b = parse_lexicon(&eureka::demo::DEMO_LEXICON.replace("PRAENARRANT", "PRÆNARRANT")).unwrap();
    assert_eq!(a, b);
}
