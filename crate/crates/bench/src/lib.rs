//! Criterion benchmarks for the oracles and the tiling engine; see `benches/`.
