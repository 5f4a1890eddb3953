//! Library side of the `ssum` binary: instance generation, the instance
//! file format, report rendering, oracle sweeps and benchmarking.

pub mod bench;
pub mod gen;
pub mod io;
pub mod report;
pub mod verify;
