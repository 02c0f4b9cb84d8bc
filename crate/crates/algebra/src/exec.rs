//! Choice between data-parallel and sequential evaluation of independent work.

/// How independent items (coefficients, levels, checks) are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecPolicy {
    /// Use the rayon thread pool when the `parallel` feature is enabled,
    /// otherwise fall back to sequential evaluation.
    #[default]
    Parallel,
    Sequential,
}

impl ExecPolicy {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecPolicy::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            if self == ExecPolicy::Parallel {
                use rayon::prelude::*;
                return items.into_par_iter().map(f).collect();
            }
        }
        items.into_iter().map(f).collect()
    }

    /// Maps `f` over `0..n`, preserving order.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        self.map((0..n).collect(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_policies_agree() {
        let a = ExecPolicy::Parallel.map_range(100, |i| i * i);
        let b = ExecPolicy::Sequential.map_range(100, |i| i * i);
        assert_eq!(a, b);
    }
}
