//! The interpreting and composing cycle, one tick per letter of stave travel.
//!
//! A pull of the lever runs: drum kick, stave descent until every stave rests
//! on its wire (the bell rings on the tick the last stave lands), dwell while
//! the line can be read, and reset of the staves. A full wind is good for five
//! pulls.
//!
//! The kick happens at the start of each pull rather than after the reset, so
//! a freshly built machine does not show an un-kicked first line.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::alphabet::{letter_at, Word};
use crate::drum::{DrumError, MachineProgram, BLANK_DEPTH};
use crate::lexicon::SLOT_COUNT;

/// Pulls available from one full wind.
pub const WIND_CYCLES: u8 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    Ready,
    Interpreting,
    Dwell,
    Resetting,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Phase::Ready => "READY",
            Phase::Interpreting => "INTERPRETING",
            Phase::Dwell => "DWELL",
            Phase::Resetting => "RESETTING",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MachineError {
    #[error("the machine needs winding")]
    NeedsWinding,
    #[error("cannot {action} while {phase}")]
    WrongPhase { action: &'static str, phase: Phase },
    #[error(transparent)]
    Drum(#[from] DrumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MachineConfig {
    /// Wind automatically when a session runs out of energy.
    pub auto_wind: bool,
    /// Keep a set of every line shown so repeats can be counted.
    pub track_repeats: bool,
}

/// How far a drum turns between lines: uniform in `1..=rows`.
///
/// A kick of `rows` is a full turn, so the drum can land on the row it
/// started from; every landing row is equally likely.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KickRule;

impl KickRule {
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R, rows: usize) -> usize {
        rng.gen_range(1..=rows)
    }

    pub fn apply(&self, position: usize, kick: usize, rows: usize) -> usize {
        (position + kick) % rows
    }
}

/// A six-word line as shown in the viewing windows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Verse {
    words: [Word; SLOT_COUNT],
}

impl Verse {
    pub fn new(words: [Word; SLOT_COUNT]) -> Self {
        Self { words }
    }

    pub fn words(&self) -> &[Word; SLOT_COUNT] {
        &self.words
    }
}

impl fmt::Display for Verse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Snapshot of the staves at one tick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub tick: u32,
    pub drops: Vec<u8>,
    pub display: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleResult {
    /// 1-based cycle number since the machine was built.
    pub cycle: u64,
    /// Row selected on each drum.
    pub rows: [usize; SLOT_COUNT],
    pub verse: Verse,
    pub trace: Vec<Frame>,
    /// Tick on which the last stave came to rest.
    pub bell_tick: u32,
}

/// Live state of one machine.
#[derive(Debug, Clone)]
pub struct Machine {
    program: MachineProgram,
    config: MachineConfig,
    seed: u64,
    rng: ChaCha8Rng,
    kick: KickRule,
    positions: [usize; SLOT_COUNT],
    drops: Vec<u8>,
    targets: Vec<u8>,
    phase: Phase,
    energy: u8,
    tick: u32,
    bell_tick: Option<u32>,
    odometer: u64,
    seen: BTreeSet<Verse>,
    repeats: u64,
}

impl Machine {
    /// A machine at rest, unwound, every drum on row 0.
    pub fn new(program: MachineProgram, seed: u64, config: MachineConfig) -> Self {
        let staves = program.stave_count();
        Self {
            program,
            config,
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
            kick: KickRule,
            positions: [0; SLOT_COUNT],
            drops: alloc::vec![0; staves],
            targets: alloc::vec![0; staves],
            phase: Phase::Ready,
            energy: 0,
            tick: 0,
            bell_tick: None,
            odometer: 0,
            seen: BTreeSet::new(),
            repeats: 0,
        }
    }

    pub fn program(&self) -> &MachineProgram {
        &self.program
    }

    pub fn config(&self) -> MachineConfig {
        self.config
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn energy(&self) -> u8 {
        self.energy
    }

    pub fn positions(&self) -> [usize; SLOT_COUNT] {
        self.positions
    }

    pub fn drops(&self) -> &[u8] {
        &self.drops
    }

    pub fn tick(&self) -> u32 {
        self.tick
    }

    pub fn bell_tick(&self) -> Option<u32> {
        self.bell_tick
    }

    /// Completed cycles.
    pub fn odometer(&self) -> u64 {
        self.odometer
    }

    /// Lines shown more than once, when repeat tracking is on.
    pub fn repeats(&self) -> u64 {
        self.repeats
    }

    /// Raises the weight. Always tops up to a full wind.
    pub fn wind(&mut self) -> Result<(), MachineError> {
        if self.phase != Phase::Ready {
            return Err(MachineError::WrongPhase {
                action: "wind",
                phase: self.phase,
            });
        }
        self.energy = WIND_CYCLES;
        Ok(())
    }

    /// Releases the brake: kicks the drums, lifts the reset board and lets the
    /// staves start to fall.
    pub fn start_cycle(&mut self) -> Result<(), MachineError> {
        if self.phase != Phase::Ready {
            return Err(MachineError::WrongPhase {
                action: "start a cycle",
                phase: self.phase,
            });
        }
        if self.energy == 0 {
            return Err(MachineError::NeedsWinding);
        }
        self.energy -= 1;
        for (d, drum) in self.program.drums().iter().enumerate() {
            let rows = drum.row_count();
            let kick = self.kick.draw(&mut self.rng, rows);
            self.positions[d] = self.kick.apply(self.positions[d], kick, rows);
        }
        let mut stave = 0;
        for (d, drum) in self.program.drums().iter().enumerate() {
            let row = drum
                .row(self.positions[d])
                .expect("drum position is kept below its row count");
            for wire in row {
                self.targets[stave] = wire.rest_depth();
                stave += 1;
            }
        }
        self.drops.fill(0);
        self.tick = 0;
        self.bell_tick = None;
        self.phase = Phase::Interpreting;
        Ok(())
    }

    /// Lets every moving stave fall one letter. When the last one lands the
    /// bell rings and the machine dwells.
    pub fn descend_tick(&mut self) -> Result<Frame, MachineError> {
        if self.phase != Phase::Interpreting {
            return Err(MachineError::WrongPhase {
                action: "descend",
                phase: self.phase,
            });
        }
        self.tick += 1;
        let mut moving = false;
        for (drop, &target) in self.drops.iter_mut().zip(&self.targets) {
            if *drop < target {
                *drop += 1;
            }
            moving |= *drop < target;
        }
        if !moving {
            self.phase = Phase::Dwell;
            self.bell_tick = Some(self.tick);
        }
        Ok(self.frame())
    }

    /// Reads the line out of the windows, resets the staves and returns to
    /// rest.
    pub fn finish_cycle(&mut self) -> Result<Verse, MachineError> {
        if self.phase != Phase::Dwell {
            return Err(MachineError::WrongPhase {
                action: "reset",
                phase: self.phase,
            });
        }
        let verse = self.current_verse()?;
        self.phase = Phase::Resetting;
        self.drops.fill(0);
        self.phase = Phase::Ready;
        self.odometer += 1;
        if self.config.track_repeats && !self.seen.insert(verse.clone()) {
            self.repeats += 1;
        }
        Ok(verse)
    }

    /// One full cycle of the machine.
    pub fn pull_lever(&mut self) -> Result<CycleResult, MachineError> {
        self.start_cycle()?;
        let mut trace = alloc::vec![self.frame()];
        while self.phase == Phase::Interpreting {
            trace.push(self.descend_tick()?);
        }
        let bell_tick = self.tick;
        let rows = self.positions;
        let verse = self.finish_cycle()?;
        Ok(CycleResult {
            cycle: self.odometer,
            rows,
            verse,
            trace,
            bell_tick,
        })
    }

    /// Runs `pulls` cycles, winding between them when auto-wind is on.
    pub fn run_session(&mut self, pulls: usize) -> Result<Vec<CycleResult>, MachineError> {
        let mut out = Vec::with_capacity(pulls);
        for _ in 0..pulls {
            if self.energy == 0 && self.config.auto_wind {
                self.wind()?;
            }
            out.push(self.pull_lever()?);
        }
        Ok(out)
    }

    /// The drum rows currently under the staves, decoded.
    pub fn current_verse(&self) -> Result<Verse, MachineError> {
        let mut words = Vec::with_capacity(SLOT_COUNT);
        for (d, drum) in self.program.drums().iter().enumerate() {
            words.push(drum.decode_row(self.positions[d])?);
        }
        let words: [Word; SLOT_COUNT] = words.try_into().expect("six drums");
        Ok(Verse::new(words))
    }

    /// What the viewing windows show: each stave's current letter, blank
    /// staves left out, drums separated by one space.
    pub fn read_display(&self) -> String {
        render_display(&self.program, &self.drops)
    }

    pub fn frame(&self) -> Frame {
        Frame {
            tick: self.tick,
            drops: self.drops.clone(),
            display: self.read_display(),
        }
    }
}

/// Renders stave depths as window text. Depth 0 (raised) and the blank depth
/// below Z show nothing.
pub fn render_display(program: &MachineProgram, drops: &[u8]) -> String {
    let mut out = String::new();
    let mut stave = 0;
    for (d, drum) in program.drums().iter().enumerate() {
        if d > 0 {
            out.push(' ');
        }
        for &depth in &drops[stave..stave + drum.width()] {
            if depth != 0 && depth != BLANK_DEPTH {
                out.push(letter_at(depth).expect("depth within the stave alphabet"));
            }
        }
        stave += drum.width();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drum::compile_drum;
    use crate::lexicon::SlotCategory;
    use alloc::string::ToString;
    use alloc::vec;

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

    fn single() -> MachineProgram {
        program([
            &["IMPIA"],
            &["VERBA"],
            &["DOMI"],
            &["CONJUNGUNT"],
            &["CRIMINA"],
            &["MALA"],
        ])
    }

    #[test]
    fn new_machine_is_unwound() {
        let m = Machine::new(single(), 42, MachineConfig::default());
        assert_eq!(m.phase(), Phase::Ready);
        assert_eq!(m.energy(), 0);
        assert_eq!(m.positions(), [0; 6]);
        assert!(m.drops().iter().all(|&d| d == 0));
        assert_eq!(m.read_display().trim(), "");
    }

    #[test]
    fn winding() {
        let mut m = Machine::new(single(), 1, MachineConfig::default());
        assert_eq!(m.pull_lever(), Err(MachineError::NeedsWinding));
        m.wind().unwrap();
        assert_eq!(m.energy(), 5);
        m.pull_lever().unwrap();
        m.pull_lever().unwrap();
        assert_eq!(m.energy(), 3);
        m.wind().unwrap();
        assert_eq!(m.energy(), 5);
        m.start_cycle().unwrap();
        assert!(matches!(
            m.wind(),
            Err(MachineError::WrongPhase { phase: Phase::Interpreting, .. })
        ));
    }

    #[test]
    fn single_row_drums_repeat_with_full_descent() {
        let mut m = Machine::new(single(), 9, MachineConfig::default());
        m.wind().unwrap();
        for _ in 0..5 {
            let r = m.pull_lever().unwrap();
            assert_eq!(r.verse.to_string(), "IMPIA VERBA DOMI CONJUNGUNT CRIMINA MALA");
            // deepest letter is the V of VERBA at 24 and no drum has padding
            assert_eq!(r.bell_tick, 24);
            assert_eq!(r.trace.len(), 25);
            assert_eq!(r.trace.last().unwrap().display, r.verse.to_string());
        }
        assert_eq!(m.pull_lever(), Err(MachineError::NeedsWinding));
    }

    #[test]
    fn descent_targets() {
        let mut m = Machine::new(program([&["DA"], &["A"], &["A"], &["A"], &["A"], &["A"]]), 0, MachineConfig::default());
        m.wind().unwrap();
        m.start_cycle().unwrap();
        let mut d_rest = None;
        let mut a_rest = None;
        while m.phase() == Phase::Interpreting {
            let f = m.descend_tick().unwrap();
            if d_rest.is_none() && f.drops[0] == 5 {
                d_rest = Some(f.tick);
            }
            if a_rest.is_none() && f.drops[1] == 1 {
                a_rest = Some(f.tick);
            }
        }
        assert_eq!(d_rest, Some(5));
        assert_eq!(a_rest, Some(1));
        assert_eq!(m.bell_tick(), Some(5));
        assert_eq!(m.read_display(), "DA A A A A A");
        assert!(matches!(m.descend_tick(), Err(MachineError::WrongPhase { .. })));
        m.finish_cycle().unwrap();
        assert_eq!(m.phase(), Phase::Ready);
    }

    #[test]
    fn padding_staves_fall_to_the_bottom() {
        let mut m = Machine::new(
            program([&["A", "AB"], &["A"], &["A"], &["A"], &["A"], &["A"]]),
            3,
            MachineConfig::default(),
        );
        m.wind().unwrap();
        let results = m.run_session(5).unwrap();
        for r in results {
            let last = r.trace.last().unwrap();
            if r.rows[0] == 0 {
                assert_eq!(r.bell_tick, 28);
                assert_eq!(last.drops[1], 28);
            } else {
                assert_eq!(r.bell_tick, 3);
            }
            assert_eq!(last.display, r.verse.to_string());
        }
    }

    #[test]
    fn mid_descent_display() {
        let mut m = Machine::new(single(), 5, MachineConfig::default());
        m.wind().unwrap();
        m.start_cycle().unwrap();
        for _ in 0..3 {
            m.descend_tick().unwrap();
        }
        // letter 3 on a stave is B (Æ is letter 2); the A of IMPIA has landed
        let shown = m.read_display();
        let segments: Vec<&str> = shown.split(' ').collect();
        assert_eq!(segments[0], "BBBBA");
        assert_eq!(segments[5], "BABA");
    }

    #[test]
    fn auto_wind_session() {
        let config = MachineConfig {
            auto_wind: true,
            ..Default::default()
        };
        let mut m = Machine::new(single(), 5, config);
        assert_eq!(m.run_session(0).unwrap(), vec![]);
        let r = m.run_session(12).unwrap();
        assert_eq!(r.len(), 12);
        assert_eq!(r[11].cycle, 12);
        assert_eq!(m.odometer(), 12);
        assert_eq!(m.energy(), 3);
    }

    #[test]
    fn repeat_counter() {
        let config = MachineConfig {
            auto_wind: true,
            track_repeats: true,
        };
        let mut m = Machine::new(single(), 5, config);
        m.run_session(4).unwrap();
        assert_eq!(m.repeats(), 3);
    }
}
