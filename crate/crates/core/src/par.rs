//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it every call degrades to the sequential path.

/// How a batch of independent work items is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    /// Run on rayon. `threads: None` uses the global pool.
    Parallel {
        threads: Option<usize>,
    },
}

impl Parallelism {
    /// `Some(1)` means sequential, `Some(j)` a dedicated pool of `j` threads,
    /// `None` the default.
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            Some(0 | 1) => Parallelism::Sequential,
            Some(j) => Parallelism::Parallel { threads: Some(j) },
            None => Parallelism::default(),
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && matches!(self, Parallelism::Parallel { .. })
    }
}

impl Default for Parallelism {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Parallelism::Parallel { threads: None }
        } else {
            Parallelism::Sequential
        }
    }
}

/// Runs `f` inside the thread pool selected by `par`.
pub(crate) fn install<R: Send>(par: Parallelism, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Parallelism::Parallel { threads: Some(threads) } = par {
        // A pool that fails to build (e.g. thread spawn refused) falls back
        // to the global one; results do not depend on the thread count.
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            return pool.install(f);
        }
    }
    let _ = par;
    f()
}

/// Maps `f` over `items`, keeping input order in the output.
pub(crate) fn map_ordered<T, R, F>(items: &[T], par: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = par;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_in_both_modes() {
        let xs: Vec<u64> = (0..1000).collect();
        let seq = map_ordered(&xs, Parallelism::Sequential, |x| x * x);
        let par = install(Parallelism::Parallel { threads: Some(3) }, || {
            map_ordered(&xs, Parallelism::Parallel { threads: Some(3) }, |x| x * x)
        });
        assert_eq!(seq, par);
    }

    #[test]
    fn jobs_mapping() {
        assert_eq!(Parallelism::from_jobs(Some(1)), Parallelism::Sequential);
        assert_eq!(
            Parallelism::from_jobs(Some(4)),
            Parallelism::Parallel { threads: Some(4) }
        );
    }
}
