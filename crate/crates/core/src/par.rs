//! Execution mode for the data-parallel sweeps.
//!
//! With the `parallel` feature (default) the sweeps fan out over rayon's
//! global pool; without it every [`Exec`] runs sequentially. Results are
//! always assembled in index order, so the two modes agree bit for bit.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Evaluates `f(0..count)` and returns the results in index order.
    pub fn map_indexed<T, F>(self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..count).into_par_iter().map(f).collect(),
            _ => (0..count).map(f).collect(),
        }
    }

    /// Splits `0..len` into contiguous chunks and maps each chunk, in order.
    pub(crate) fn map_chunks<T, F>(self, len: u64, chunks: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(std::ops::Range<u64>) -> T + Sync + Send,
    {
        let chunks = (chunks.max(1) as u64).min(len.max(1));
        let step = len.div_ceil(chunks);
        self.map_indexed(chunks as usize, |c| {
            let lo = (c as u64 * step).min(len);
            let hi = ((c as u64 + 1) * step).min(len);
            f(lo..hi)
        })
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}
