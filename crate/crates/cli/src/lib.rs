//! Library side of the `extbar` command: reports, verification suites and
//! command execution, shared with the acceptance target.

pub mod commands;
pub mod report;
pub mod verify;
