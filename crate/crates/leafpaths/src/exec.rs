//! Deterministic fan-out across worker threads. Work is split into
//! contiguous chunks and results are merged in chunk order, so the worker
//! count never changes any output.

/// Applies `f` to every item, fanning out across `workers` scoped threads.
/// Results come back in input order.
pub fn map_chunked<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let mut out = Vec::with_capacity(items.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        for h in handles {
            out.extend(h.join().expect("worker panicked"));
        }
    });
    out
}

/// Folds each of `workers` contiguous rank ranges of `0..total` with
/// `fold`, then merges the partial results left to right.
pub fn fold_ranges<R, F, M>(total: u64, workers: usize, fold: F, merge: M) -> Option<R>
where
    R: Send,
    F: Fn(std::ops::Range<u64>) -> R + Sync,
    M: Fn(R, R) -> R,
{
    if total == 0 {
        return None;
    }
    let workers = (workers.max(1) as u64).min(total);
    if workers == 1 {
        return Some(fold(0..total));
    }
    let chunk = total.div_ceil(workers);
    let mut partials = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = w * chunk;
                let hi = (lo + chunk).min(total);
                let fold = &fold;
                scope.spawn(move || fold(lo..hi))
            })
            .collect();
        for h in handles {
            partials.push(h.join().expect("worker panicked"));
        }
    });
    partials.into_iter().reduce(merge)
}
