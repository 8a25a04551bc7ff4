//! Execution strategy for embarrassingly parallel work: a data-parallel map
//! over independent items with a sequential fallback, selected at runtime.
//! The parallel path requires the `parallel` feature (on by default); without
//! it both modes run sequentially.

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExecMode {
    Parallel,
    Sequential,
}

impl ExecMode {
    pub fn label(self) -> &'static str {
        match self {
            ExecMode::Parallel => "parallel",
            ExecMode::Sequential => "sequential",
        }
    }
}

/// Apply `f` to every item, preserving order.
pub fn map_items<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(f).collect()
            }
        }
    }
}
