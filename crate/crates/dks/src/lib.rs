//! File formats, table dumps, timing and the `dks` command line.

pub mod bench;
pub mod cli;
pub mod dump;
pub mod io;
