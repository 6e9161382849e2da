//! Multi-threaded refutation over contiguous slices of the first search
//! variable. Results are merged in slice order, so the report does not
//! depend on the thread count.

use std::thread;

use bnlimit_core::curves::CompactCurve;
use bnlimit_core::limit::{RefutationReport, RefuteOptions, Refuter};
use bnlimit_core::numerology::SeriesType;

pub fn refute(
    curve: &CompactCurve,
    t: SeriesType,
    opts: RefuteOptions,
    threads: usize,
) -> bnlimit_core::Result<RefutationReport> {
    let refuter = Refuter::new(curve, t, opts)?;
    let n = refuter.first_domain_len();
    let parts = threads.clamp(1, n.max(1));
    if parts == 1 {
        return refuter.run();
    }
    let bounds: Vec<usize> = (0..=parts).map(|i| i * n / parts).collect();
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = bounds
            .windows(2)
            .map(|w| {
                let (lo, hi) = (w[0], w[1]);
                let refuter = &refuter;
                s.spawn(move || refuter.run_range(lo..hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search thread panicked")).collect()
    });
    let parts = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(refuter.merge(parts))
}
