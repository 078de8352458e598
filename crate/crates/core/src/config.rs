//! Size ceilings for table builds and verification grids.

use crate::error::{Error, Result};

/// Environment variable that replaces every ceiling with its value.
pub const MAX_N_ENV: &str = "ORBITNUM_MAX_N";

/// Largest table size built on request: 10 for p = 2, 12 otherwise.
pub fn default_table_ceiling(p: u32) -> u32 {
    if p == 2 {
        10
    } else {
        12
    }
}

/// The override from the environment, if set.
pub fn ceiling_override() -> Result<Option<u32>> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            Error::InvalidInput(format!("{MAX_N_ENV}={v:?} is not a nonnegative integer"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Error::InvalidInput(format!("{MAX_N_ENV}: {e}"))),
    }
}

/// Refuses `n` above the ceiling (the default unless overridden).
pub fn check_ceiling(what: &str, n: u32, default: u32) -> Result<()> {
    let ceiling = ceiling_override()?.unwrap_or(default);
    if n > ceiling {
        return Err(Error::ResourceLimit(format!(
            "{what}: size {n} exceeds the ceiling {ceiling} (set {MAX_N_ENV} to raise it)"
        )));
    }
    Ok(())
}
