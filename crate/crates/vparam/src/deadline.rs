use std::time::{Duration, Instant};

use vparam_core::Interrupt;

/// Wall-clock budget for one solver invocation.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    end: Instant,
}

impl Deadline {
    pub fn after(budget: Duration) -> Self {
        Deadline { end: Instant::now() + budget }
    }

    pub fn after_ms(ms: u64) -> Self {
        Self::after(Duration::from_millis(ms))
    }
}

impl Interrupt for Deadline {
    fn interrupted(&self) -> bool {
        Instant::now() >= self.end
    }
}
