//! Criterion benchmarks for quivermod-core; see `benches/`.
