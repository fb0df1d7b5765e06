//! Core model of John Clark's Eureka Latin verse machine.
//!
//! Words are wired onto six drums as lengths of wire, the machine kicks the
//! drums, lets its staves fall onto the wires and reads off a line in the
//! slot order adjective, noun, adverb, verb, noun, adjective. Around that sit a
//! hexameter scanner used to check lexicons and output, and John Peter's
//! earlier paper tables that hide nine words per table in residue classes.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, trace output and
//! the command line live in the `eureka` crate.

#![no_std]

extern crate alloc;

pub mod alphabet;
pub mod drum;
pub mod lexicon;
pub mod lines;
pub mod machine;
pub mod meter;
pub mod peter;

pub use alphabet::{letter_index, AlphabetError, Word};
pub use drum::{compile_drum, compile_program, DrumError, MachineProgram, WireLength, WireMatrix};
pub use lexicon::{
    validate_historical, Diagnostic, Lexicon, LexiconEntry, LexiconError, PartOfSpeech, Quantity,
    SlotCategory, ValidationMode, SLOT_COUNT,
};
pub use lines::{enumerate_lines, EnumerateError, DEFAULT_LINE_CAP};
pub use machine::{CycleResult, Frame, KickRule, Machine, MachineConfig, MachineError, Phase, Verse};
pub use meter::{scan, scan_line, FootKind, FootParse, MeterError};
