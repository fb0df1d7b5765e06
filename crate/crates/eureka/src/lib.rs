//! Files, traces, cascades and the command line around [`eureka_core`].

pub mod cascade;
pub mod cli;
pub mod demo;
pub mod formats;
pub mod trace;

pub use eureka_core;
