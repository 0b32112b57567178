use std::fmt;

use serde::{Deserialize, Serialize};

/// Whether tropical operations take the minimum or the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Min,
    Max,
}

impl Convention {
    pub fn flipped(self) -> Self {
        match self {
            Convention::Min => Convention::Max,
            Convention::Max => Convention::Min,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Min => "min",
            Convention::Max => "max",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
