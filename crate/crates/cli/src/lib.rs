//! File formats, JSON reports and subcommand logic for the `rankbisim`
//! command-line tool.

pub mod commands;
pub mod formats;
