//! Error taxonomy shared across the crate.
//!
//! Decryption failure (the FO re-encryption check not holding) is a value in
//! this taxonomy, deliberately distinct from malformed-input conditions such
//! as a truncated file or an off-group point encoding. Callers that need
//! stable machine-readable identifiers should use [`Error::code`].

use std::fmt;

/// All failure conditions surfaced by the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A `(t, k, n)` configuration failed validation. The message carries the
    /// computed security level when the rejection is security-related.
    InvalidParams(String),
    /// An identity string is empty or too long for the wire encoding.
    InvalidIdentity(String),
    /// A byte string had the wrong length for the expected encoding.
    LengthMismatch { expected: usize, got: usize },
    /// A correctly sized point encoding that is not a group element.
    InvalidPoint,
    /// A correctly sized scalar encoding that is not in canonical reduced form.
    InvalidScalar,
    /// A container did not start with the `CFC1` magic.
    BadMagic,
    /// A container carried an unsupported format version.
    BadVersion(u8),
    /// A container carried an unknown or unexpected artifact kind.
    BadKind(u8),
    /// A container's parameter digest does not match the supplied parameters.
    ParamsDigestMismatch,
    /// A container payload had bytes left over after decoding.
    TrailingBytes(usize),
    /// The partial-key binding equation `Q - U = wP - Y` does not hold; the
    /// commitment the authority signed off on is not the one presented.
    BindingCheckFailed,
    /// Decryption failure: the re-encryption check `r'P = R` did not hold.
    DecryptionFailed,
}

impl Error {
    /// Stable machine-parsable identifier for this error, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParams(_) => "invalid_params",
            Error::InvalidIdentity(_) => "invalid_identity",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::InvalidPoint => "invalid_point",
            Error::InvalidScalar => "invalid_scalar",
            Error::BadMagic => "bad_magic",
            Error::BadVersion(_) => "bad_version",
            Error::BadKind(_) => "bad_kind",
            Error::ParamsDigestMismatch => "params_digest_mismatch",
            Error::TrailingBytes(_) => "trailing_bytes",
            Error::BindingCheckFailed => "binding_check_failed",
            Error::DecryptionFailed => "decryption_failed",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::InvalidIdentity(msg) => write!(f, "invalid identity: {msg}"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected} bytes, got {got}")
            }
            Error::InvalidPoint => write!(f, "encoding is not a valid group element"),
            Error::InvalidScalar => write!(f, "encoding is not a canonical scalar"),
            Error::BadMagic => write!(f, "not a CFC1 container"),
            Error::BadVersion(v) => write!(f, "unsupported container version {v}"),
            Error::BadKind(k) => write!(f, "unknown or unexpected artifact kind {k}"),
            Error::ParamsDigestMismatch => {
                write!(f, "artifact was produced under different system parameters")
            }
            Error::TrailingBytes(n) => write!(f, "{n} trailing bytes after payload"),
            Error::BindingCheckFailed => {
                write!(f, "partial key does not bind to the presented commitment")
            }
            Error::DecryptionFailed => write!(f, "decryption failed"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
