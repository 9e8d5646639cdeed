//! Parity-biased partition counting, proof-map auditing and claim checks.

pub mod cli;
pub mod counting;
pub mod maps;
pub mod partition;
pub mod verify;
