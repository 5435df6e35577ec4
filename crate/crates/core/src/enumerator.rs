use crate::error::{Error, Result};
use crate::exec::Execution;

/// Largest Frobenius number the enumeration routines accept unless overridden.
pub const DEFAULT_MAX_FROBENIUS: u32 = 40;

/// Settings shared by the irreducible and atomic enumerations.
///
/// The free functions in [`crate::irreducible`] and [`crate::atomic`] use
/// `Enumerator::default()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumerator {
    pub max_frobenius: u32,
    pub execution: Execution,
    /// Keep the intermediate A/B₀/B₁/C stages of each ANI level.
    pub keep_stages: bool,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self {
            max_frobenius: DEFAULT_MAX_FROBENIUS,
            execution: Execution::default(),
            keep_stages: false,
        }
    }
}

impl Enumerator {
    pub fn with_max_frobenius(mut self, max_frobenius: u32) -> Self {
        self.max_frobenius = max_frobenius;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_stages(mut self, keep: bool) -> Self {
        self.keep_stages = keep;
        self
    }

    pub(crate) fn check(&self, frobenius: u32) -> Result<()> {
        if frobenius == 0 {
            Err(Error::ZeroFrobenius)
        } else if frobenius > self.max_frobenius {
            Err(Error::LimitExceeded {
                requested: frobenius,
                limit: self.max_frobenius,
            })
        } else {
            Ok(())
        }
    }
}
