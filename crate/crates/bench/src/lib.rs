//! Criterion benchmarks for ringlab; see `benches/`.
