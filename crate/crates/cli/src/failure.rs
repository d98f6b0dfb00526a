use std::fmt::Display;

use seedsens_core::{Error, ErrorKind};

pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(flag: &str, message: impl Display) -> Self {
        Self {
            code: EXIT_INPUT,
            message: format!("{flag}: {message}"),
        }
    }

    pub fn internal(message: impl Display) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: message.to_string(),
        }
    }

    /// Wraps a library error, naming the flag it came from.
    pub fn at(flag: &str) -> impl Fn(Error) -> Self + '_ {
        move |e| {
            let code = match e.kind() {
                ErrorKind::Input => EXIT_INPUT,
                ErrorKind::Resource => EXIT_RESOURCE,
                ErrorKind::Internal => EXIT_INTERNAL,
            };
            Self {
                code,
                message: format!("{flag}: {e}"),
            }
        }
    }
}
