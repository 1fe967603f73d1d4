//! Benchmark inputs shared by the criterion targets.

use lgr_exc_core::YoungDiagram;

/// Fixed diagrams of increasing size.
pub fn sample_diagrams() -> Vec<YoungDiagram> {
    [&[2, 1][..], &[3, 2, 1], &[4, 3, 2, 1], &[5, 4, 3, 2, 1]]
        .iter()
        .map(|p| YoungDiagram::new(p.to_vec()).expect("valid diagram"))
        .collect()
}
