//! Criterion benchmarks for `horrocks-core`; see `benches/`.
