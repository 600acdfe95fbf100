//! Benchmarks for the lexc engine live under `benches/`.
