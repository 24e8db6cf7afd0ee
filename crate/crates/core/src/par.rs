//! Sequential / parallel execution switch.
//!
//! Without the `parallel` feature every strategy runs sequentially.

/// How data-parallel loops are executed.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `items.iter().map(f).collect()`, in parallel when enabled.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// `(0..n).map(f).collect()`, in parallel when enabled.
    pub fn map_range<U, F>(self, n: usize, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// First index (lowest) at which `f` returns `Some`, with its value.
    pub fn find_first<T, U, F>(self, items: &[T], f: F) -> Option<(usize, U)>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Option<U> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items
                .par_iter()
                .enumerate()
                .filter_map(|(i, x)| f(x).map(|u| (i, u)))
                .min_by_key(|(i, _)| *i);
        }
        items.iter().enumerate().find_map(|(i, x)| f(x).map(|u| (i, u)))
    }
}

#[cfg(test)]
mod tests {
    use super::Exec;

    #[test]
    fn strategies_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = Exec::Sequential.map(&xs, |x| x * x);
        let b = Exec::Parallel.map(&xs, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(
            Exec::Parallel.find_first(&xs, |&x| (x % 97 == 96).then_some(x)),
            Some((96, 96))
        );
    }
}
