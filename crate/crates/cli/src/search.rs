//! Parallel fan-out for the candidate search. Workers analyze disjoint
//! slices of the knot list; results are merged back into `(alpha, beta)`
//! order, so the output is identical for any worker count.

use bridgeslope_core::{analyze, valid_knots, Calibration, Diagnostic, SearchOutcome};

pub fn run(alpha_max: u64, require_fibered: bool, jobs: usize, cal: &Calibration) -> SearchOutcome {
    if jobs <= 1 {
        return bridgeslope_core::search_candidates(alpha_max, require_fibered, cal);
    }
    let knots = valid_knots(alpha_max);
    let chunk = knots.len().div_ceil(jobs);
    let mut candidates = Vec::new();
    let mut diagnostics = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = knots
            .chunks(chunk.max(1))
            .map(|slice| {
                scope.spawn(move || {
                    let mut found = Vec::new();
                    let mut failed = Vec::new();
                    for knot in slice {
                        match analyze(knot, cal) {
                            Ok(report) => {
                                if report.unique_zero_slope
                                    && (!require_fibered || report.fibered)
                                {
                                    found.push(report);
                                }
                            }
                            Err(error) => failed.push(Diagnostic { knot: knot.clone(), error }),
                        }
                    }
                    (found, failed)
                })
            })
            .collect();
        // Chunks are contiguous and in order, so appending join results in
        // spawn order preserves (alpha, beta) ordering.
        for handle in handles {
            let (found, failed) = handle.join().expect("search worker panicked");
            candidates.extend(found);
            diagnostics.extend(failed);
        }
    });
    SearchOutcome { candidates, diagnostics }
}
