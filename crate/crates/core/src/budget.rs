//! Cooperative time budgets for long computations.

use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Run `f` on this thread, making engine loops fail with [`Error::Timeout`]
/// once `budget` has elapsed.
pub fn with_deadline<T>(budget: Duration, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let deadline = Instant::now() + budget;
    let previous = DEADLINE.with(|d| d.replace(Some(deadline)));
    let out = f();
    DEADLINE.with(|d| d.set(previous));
    out
}

pub(crate) fn check() -> Result<()> {
    DEADLINE.with(|d| match d.get() {
        Some(t) if Instant::now() > t => Err(Error::Timeout),
        _ => Ok(()),
    })
}
