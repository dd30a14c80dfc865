//! Reading and writing the ring-spec JSON document.

use crate::error::{Result, RingError};
use crate::finring::{Ring, RingSpec};

/// Parses a ring-spec document. Unknown fields are rejected; diagnostics
/// carry the line and column of the offending token.
pub fn parse_spec(text: &str) -> Result<RingSpec> {
    serde_json::from_str(text).map_err(|e| RingError::Parse(e.to_string()))
}

/// Parses and validates a ring-spec document.
pub fn parse_ring(text: &str) -> Result<Ring> {
    parse_spec(text)?.validate()
}

/// Serializes a struct-constant ring. Table-encoded rings have no
/// presentation and are rejected.
pub fn write_spec(ring: &Ring) -> Result<String> {
    let spec = ring.to_spec().ok_or_else(|| {
        RingError::InvalidArgument(format!(
            "`{}` is table-encoded and has no ring-spec form",
            ring.name()
        ))
    })?;
    let mut text = serde_json::to_string(&spec).map_err(|e| RingError::Parse(e.to_string()))?;
    text.push('\n');
    Ok(text)
}
