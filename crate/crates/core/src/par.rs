//! Execution strategy for data-parallel sweeps.

/// `Parallel` uses rayon when the `parallel` feature is enabled and falls
/// back to a sequential loop otherwise. Results are in input order either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Parallel,
    Sequential,
}

pub fn map<T, U, F>(items: &[T], strategy: Strategy, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_keep_order() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(&xs, Strategy::Parallel, |x| x * x);
        let b = map(&xs, Strategy::Sequential, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(a[999], 998001);
    }
}
