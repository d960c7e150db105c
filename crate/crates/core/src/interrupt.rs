//! Cooperative cancellation for long-running searches.

use crate::error::{Error, Result};

/// Polled by the solvers; returning `true` aborts the search with [`Error::Timeout`].
pub trait Interrupt: Sync {
    fn interrupted(&self) -> bool;
}

/// Never interrupts.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Interrupt for Unlimited {
    fn interrupted(&self) -> bool {
        false
    }
}

impl<F: Fn() -> bool + Sync> Interrupt for F {
    fn interrupted(&self) -> bool {
        self()
    }
}

/// Amortizes the cost of polling: the interrupt is consulted every 1024 ticks.
pub(crate) struct Poll<'a> {
    stop: &'a dyn Interrupt,
    ticks: u32,
}

impl<'a> Poll<'a> {
    pub(crate) fn new(stop: &'a dyn Interrupt) -> Self {
        Poll { stop, ticks: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0x3ff == 0 && self.stop.interrupted() {
            return Err(Error::Timeout);
        }
        Ok(())
    }

    pub(crate) fn check(&self) -> Result<()> {
        if self.stop.interrupted() {
            Err(Error::Timeout)
        } else {
            Ok(())
        }
    }
}
