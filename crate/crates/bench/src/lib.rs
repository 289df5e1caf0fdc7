//! Criterion benchmarks for `cylhook-core`; run with `cargo bench -p cylhook-bench`.
