//! Data-parallel helpers. With the `parallel` feature (default) independent
//! tasks fan out over rayon; without it, or when a caller requests sequential
//! execution explicitly, the same closures run in order. Results always come
//! back in input order so downstream aggregation is deterministic.

/// Execution mode for batch helpers; benches compare the two on identical
/// workloads.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parallelism {
    Rayon,
    Sequential,
}

impl Parallelism {
    pub fn available() -> Parallelism {
        if cfg!(feature = "parallel") {
            Parallelism::Rayon
        } else {
            Parallelism::Sequential
        }
    }
}

/// Maps `f` over `items`, in parallel when requested and compiled in.
pub fn map_batch<T, U, F>(mode: Parallelism, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        Parallelism::Rayon => items.into_iter().map(f).collect(),
        Parallelism::Sequential => items.into_iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn results_keep_input_order() {
        let items: Vec<u64> = (0..64).collect();
        let seq = map_batch(Parallelism::Sequential, items.clone(), |x| x * x);
        let par = map_batch(Parallelism::available(), items, |x| x * x);
        assert_eq!(seq, par);
    }
}
