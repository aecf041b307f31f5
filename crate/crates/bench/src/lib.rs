//! Benchmark-only crate; see `benches/core.rs`. Run with `cargo bench`.
