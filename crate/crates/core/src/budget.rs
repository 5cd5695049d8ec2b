use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::fibers::DEFAULT_FIBER_CAP;

/// Resource limits and execution strategy shared by the expensive
/// operations. Results never depend on `parallel`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Point cap for a single fiber.
    pub max_fiber: usize,
    /// Cap on candidate sums processed by a Graver completion.
    pub max_completion: usize,
    /// Use the rayon pool when the `parallel` feature is compiled in.
    pub parallel: bool,
    /// Wall-clock cutoff checked by the long-running loops.
    #[serde(skip)]
    pub deadline: Option<Instant>,
}

pub const DEFAULT_MAX_COMPLETION: usize = 2_000_000_000;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_fiber: DEFAULT_FIBER_CAP,
            max_completion: DEFAULT_MAX_COMPLETION,
            parallel: cfg!(feature = "parallel"),
            deadline: None,
        }
    }
}

impl Budget {
    pub fn sequential() -> Self {
        Budget {
            parallel: false,
            ..Budget::default()
        }
    }

    pub fn with_max_fiber(mut self, cap: usize) -> Self {
        self.max_fiber = cap;
        self
    }

    pub fn with_max_completion(mut self, cap: usize) -> Self {
        self.max_completion = cap;
        self
    }

    /// Gives up `limit` from now.
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn check_deadline(&self) -> crate::Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(crate::Error::TimeBudget),
            _ => Ok(()),
        }
    }

    /// Defaults overridden by `TORIC_MAX_FIBER` / `TORIC_MAX_COMPLETION`.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(v) = env_usize("TORIC_MAX_FIBER") {
            b.max_fiber = v;
        }
        if let Some(v) = env_usize("TORIC_MAX_COMPLETION") {
            b.max_completion = v;
        }
        b
    }
}

fn env_usize(key: &str) -> Option<usize> {
    std::env::var(key).ok().and_then(|s| s.trim().parse().ok())
}

/// Maps `f` over `items`, in parallel when allowed; output order follows input.
pub(crate) fn par_map<T, U, F>(budget: &Budget, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if budget.parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    let _ = budget;
    items.iter().map(f).collect()
}

/// Sizes the global worker pool. A hint only: results never depend on it.
pub fn set_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let _ = n;
}
