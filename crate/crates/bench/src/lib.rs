//! Criterion benchmarks for `triadic-core`; see `benches/`.
