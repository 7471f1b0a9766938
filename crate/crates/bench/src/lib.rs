//! Criterion benchmarks for the arithmetic core and the class formulas.
//! See `benches/`.
