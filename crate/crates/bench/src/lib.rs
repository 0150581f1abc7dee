//! Criterion benchmarks for `qhopf-core`; see `benches/`.
