//! Resource guards shared by all iterated operations.

use serde::{Deserialize, Serialize};

/// Hard ceilings for word growth and iteration counts. Exceeding either is an
/// error, never silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResourceLimits {
    /// Maximum letter length of any intermediate or final word/path.
    pub max_word_length: u64,
    /// Maximum number of map applications in a single operation.
    pub max_iterations: u32,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        ResourceLimits {
            max_word_length: 10_000_000,
            max_iterations: 64,
        }
    }
}

impl ResourceLimits {
    pub fn new(max_word_length: u64, max_iterations: u32) -> Self {
        assert!(max_word_length > 0 && max_iterations > 0);
        ResourceLimits {
            max_word_length,
            max_iterations,
        }
    }
}
