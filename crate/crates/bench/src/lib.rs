//! Criterion benchmarks for the dicke workspace; see `benches/`.
