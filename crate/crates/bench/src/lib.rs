//! Benchmarks for `facet-core`; see `benches/solvers.rs`.
