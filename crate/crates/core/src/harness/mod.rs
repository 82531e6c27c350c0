//! Instance generation, exact oracles and the benchmark runner.

pub mod bench;
pub mod gen;
pub mod oracle;
