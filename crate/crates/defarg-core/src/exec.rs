//! Execution strategy for the data-parallel inner loops.
//!
//! Extension enumeration and per-arc map validation map a pure function
//! over an index set and then combine results in index order, so they
//! parallelize without affecting output. The default mode is
//! [`ExecMode::Parallel`] when the `parallel` feature is enabled
//! (rayon), [`ExecMode::Sequential`] otherwise; both produce identical,
//! deterministically ordered results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to run an enumeration internally. Results never depend on the
/// choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Fan-out threshold below which parallel dispatch is not worth it.
#[cfg(feature = "parallel")]
const MIN_PARALLEL_LEN: usize = 64;

/// Maps `f` over `inputs`, preserving input order in the output.
pub(crate) fn ordered_map<I, O, F>(mode: ExecMode, inputs: Vec<I>, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync + Send,
{
    match mode {
        ExecMode::Sequential => inputs.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            if inputs.len() < MIN_PARALLEL_LEN {
                inputs.into_iter().map(f).collect()
            } else {
                inputs.into_par_iter().map(f).collect()
            }
        }
    }
}
