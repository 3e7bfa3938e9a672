#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(matrix) = equiline::verify::ingest_adjacency(data) {
        // Accepted input must already be a simple graph: symmetric with a
        // zero diagonal.
        let n = matrix.order();
        for i in 0..n {
            assert!(!matrix.entry(i, i));
            for j in 0..n {
                assert_eq!(matrix.entry(i, j), matrix.entry(j, i));
            }
        }
    }
});
