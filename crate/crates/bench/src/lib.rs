//! Criterion benchmarks for srtriple live in `benches/`.
