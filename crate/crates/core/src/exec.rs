//! Order-preserving map over index ranges, parallel when the `parallel`
//! feature is enabled and sequential otherwise. Both paths are exposed so
//! the bench suite can compare them in a single run.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_indices<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_indices_seq(n, f)
    }
}

pub fn map_indices_seq<U>(n: usize, f: impl Fn(usize) -> U) -> Vec<U> {
    (0..n).map(f).collect()
}
