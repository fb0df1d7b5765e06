//! Plain-text dump of a compiled machine program.
//!
//! ```text
//! [drum 1 ADJ1 width=6]
//! 14,10,10,9,19,27
//! ```
//!
//! One header per drum, one comma-separated row of wire lengths per word.
//! Zero is a short wire that lets the stave fall clear of the alphabet.

use std::fmt::Write as _;

use eureka_core::drum::{DrumError, MachineProgram, WireMatrix};
use eureka_core::lexicon::{SlotCategory, SLOT_COUNT};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProgramFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("drum {drum}: {source}")]
    Drum { drum: usize, source: DrumError },
    #[error("expected {SLOT_COUNT} drums, got {0}")]
    DrumCount(usize),
    #[error(transparent)]
    Program(#[from] DrumError),
}

pub fn render_program(program: &MachineProgram) -> String {
    let mut out = String::new();
    for (d, drum) in program.drums().iter().enumerate() {
        writeln!(out, "[drum {} {} width={}]", d + 1, drum.slot(), drum.width()).expect("writing to a String");
        for row in drum.rows() {
            let cells: Vec<String> = row.iter().map(|w| w.get().to_string()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }
    out
}

fn parse_header(text: &str, line: usize) -> Result<(usize, SlotCategory, usize), ProgramFileError> {
    let bad = |message: &str| ProgramFileError::Syntax {
        line,
        message: message.to_owned(),
    };
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| bad("header must be `[drum N SLOT width=W]`"))?;
    let parts: Vec<&str> = inner.split_whitespace().collect();
    let [kw, n, slot, width] = parts.as_slice() else {
        return Err(bad("header must be `[drum N SLOT width=W]`"));
    };
    if *kw != "drum" {
        return Err(bad("header must start with `drum`"));
    }
    let n: usize = n.parse().map_err(|_| bad("drum number is not a number"))?;
    let category = SlotCategory::ALL
        .into_iter()
        .find(|c| c.to_string() == *slot)
        .ok_or_else(|| bad("unknown slot name"))?;
    let width: usize = width
        .strip_prefix("width=")
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| bad("bad `width=` field"))?;
    Ok((n, category, width))
}

pub fn parse_program(text: &str) -> Result<MachineProgram, ProgramFileError> {
    struct Pending {
        drum: usize,
        slot: SlotCategory,
        width: usize,
        line: usize,
        rows: Vec<Vec<u8>>,
    }
    let mut drums: Vec<WireMatrix> = Vec::new();
    let mut current: Option<Pending> = None;
    let close = |p: Pending, drums: &mut Vec<WireMatrix>| -> Result<(), ProgramFileError> {
        let m = WireMatrix::from_rows(p.slot, p.rows).map_err(|source| ProgramFileError::Drum { drum: p.drum, source })?;
        if m.width() != p.width {
            return Err(ProgramFileError::Syntax {
                line: p.line,
                message: format!("header says width {} but rows are {} wide", p.width, m.width()),
            });
        }
        drums.push(m);
        Ok(())
    };
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if t.starts_with('[') {
            if let Some(p) = current.take() {
                close(p, &mut drums)?;
            }
            let (drum, slot, width) = parse_header(t, line)?;
            current = Some(Pending {
                drum,
                slot,
                width,
                line,
                rows: Vec::new(),
            });
            continue;
        }
        let Some(p) = current.as_mut() else {
            return Err(ProgramFileError::Syntax {
                line,
                message: "row before the first drum header".into(),
            });
        };
        let row = t
            .split(',')
            .map(|c| c.trim().parse::<u8>())
            .collect::<Result<Vec<u8>, _>>()
            .map_err(|_| ProgramFileError::Syntax {
                line,
                message: "wire lengths must be numbers 0-27".into(),
            })?;
        p.rows.push(row);
    }
    if let Some(p) = current.take() {
        close(p, &mut drums)?;
    }
    let drums: [WireMatrix; SLOT_COUNT] = drums.try_into().map_err(|v: Vec<_>| ProgramFileError::DrumCount(v.len()))?;
    Ok(MachineProgram::new(drums)?)
}
