use thiserror::Error;

/// Errors raised by the combinatorics engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A solved table or a p-Kostka matrix failed one of its validation gates.
    #[error("table inconsistency: {0}")]
    TableInconsistency(String),
    /// The requested parameters exceed a configured ceiling.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

/// Rejects anything but a prime.
pub fn check_prime(p: u32) -> Result<()> {
    if p < 2
        || (2..p)
            .take_while(|d| d * d <= p)
            .any(|d| p.is_multiple_of(d))
    {
        return invalid(format!("{p} is not a prime"));
    }
    Ok(())
}
