//! Command implementations behind the `freqlab` binary.
//!
//! Every command renders its output to a `String` so that the binary, the
//! integration tests and the acceptance suite share one code path.

pub mod commands;
pub mod random;
pub mod verify;

use std::fmt;

/// Why a command did not succeed; maps onto the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Bad flags, unreadable input or a parse error. Exit code 2.
    Usage(String),
    /// A checked claim did not hold. Exit code 1.
    Assertion(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Assertion(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "error: {msg}"),
            Failure::Assertion(msg) => write!(f, "assertion failed: {msg}"),
        }
    }
}

impl From<freqlab::Error> for Failure {
    fn from(e: freqlab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type CmdResult<T> = Result<T, Failure>;
