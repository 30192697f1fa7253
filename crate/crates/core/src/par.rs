//! Batch execution helpers: rayon data-parallel when the `parallel`
//! feature is enabled, sequential otherwise. Results are collected in
//! input order either way, so outputs are identical across both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a batch, in parallel when available.
#[cfg(feature = "parallel")]
pub fn map_batch<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_batch<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Always-sequential variant, kept for benchmarking against the parallel
/// path.
pub fn map_batch_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batch_preserves_order() {
        let items: Vec<u64> = (0..100).collect();
        let a = map_batch(&items, |x| x * x);
        let b = map_batch_seq(&items, |x| x * x);
        assert_eq!(a, b);
    }
}
