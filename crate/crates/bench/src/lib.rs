//! Benchmark-only crate; see `benches/methods.rs` for the criterion suite.
