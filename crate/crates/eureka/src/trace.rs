//! JSON Lines records for machine sessions.

use eureka_core::{CycleResult, Frame};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameRecord {
    pub tick: u32,
    pub drops: Vec<u8>,
    pub display: String,
}

impl From<&Frame> for FrameRecord {
    fn from(f: &Frame) -> Self {
        Self {
            tick: f.tick,
            drops: f.drops.clone(),
            display: f.display.clone(),
        }
    }
}

/// Closes each cycle in a trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerseRecord {
    pub cycle: u64,
    pub seed: u64,
    pub bell_tick: u32,
    pub verse: String,
    pub words: Vec<String>,
}

impl VerseRecord {
    pub fn new(result: &CycleResult, seed: u64) -> Self {
        Self {
            cycle: result.cycle,
            seed,
            bell_tick: result.bell_tick,
            verse: result.verse.to_string(),
            words: result.verse.words().iter().map(|w| w.as_str().to_owned()).collect(),
        }
    }
}

/// Writes one cycle as JSON Lines. With `frames` off only the verse record is written.
pub fn write_cycle<W: std::io::Write + ?Sized>(
    out: &mut W,
    result: &CycleResult,
    seed: u64,
    frames: bool,
) -> std::io::Result<()> {
    if frames {
        for f in &result.trace {
            serde_json::to_writer(&mut *out, &FrameRecord::from(f))?;
            out.write_all(b"\n")?;
        }
    }
    serde_json::to_writer(&mut *out, &VerseRecord::new(result, seed))?;
    out.write_all(b"\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use eureka_core::{compile_program, Machine, MachineConfig};

    #[test]
    fn lines_are_json() {
        let program = compile_program(&crate::demo::demo_lexicon()).unwrap();
        let mut m = Machine::new(program, 3, MachineConfig::default());
        m.wind().unwrap();
        let r = m.pull_lever().unwrap();
        let mut buf = Vec::new();
        write_cycle(&mut buf, &r, 3, true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), r.trace.len() + 1);
        let first: FrameRecord = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first.tick, 0);
        assert!(first.display.trim().is_empty());
        let last: VerseRecord = serde_json::from_str(lines.last().unwrap()).unwrap();
        assert_eq!(last.verse, r.verse.to_string());
        assert_eq!(last.words.len(), 6);
        assert_eq!(last.cycle, 1);
    }
}
