//! Criterion benchmarks for `cyclehull`. Run with `cargo bench -p cyclehull-bench`.
