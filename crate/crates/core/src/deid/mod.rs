//! Rule-driven metadata de-identification.
//!
//! A [`DeidProfile`] maps tag patterns to action codes; [`apply_profile`]
//! walks a dataset (sequences included) applying the winning action per
//! element, remapping UIDs consistently through a shared [`UidMap`], and
//! produces an [`AuditRecord`] that never contains an original value.

mod apply;
mod builtin;
mod profile;
mod uid;

pub use apply::apply_profile;
pub use builtin::builtin_names;
pub use profile::{action_for_tag, load_profile, load_profile_named, DeidProfile, TagPattern};
pub use uid::UidMap;

use alloc::string::String;
use alloc::vec::Vec;

use crate::dicom::TagPath;

/// How an element is handled, following the standard's confidentiality
/// profile action codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionCode {
    /// Replace with a type-appropriate dummy value.
    Dummy,
    /// Replace with a zero-length value.
    Zero,
    /// Remove the element entirely.
    Remove,
    /// Keep unchanged.
    Keep,
    /// Clean: deterministic transform (date shift for DA/DT; falls back to
    /// `Zero` when the value cannot be parsed).
    Clean,
    /// Replace a UID consistently across the whole run.
    RemapUid,
}

impl ActionCode {
    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'D' => Some(ActionCode::Dummy),
            'Z' => Some(ActionCode::Zero),
            'X' => Some(ActionCode::Remove),
            'K' => Some(ActionCode::Keep),
            'C' => Some(ActionCode::Clean),
            'U' => Some(ActionCode::RemapUid),
            _ => None,
        }
    }

    pub fn letter(&self) -> char {
        match self {
            ActionCode::Dummy => 'D',
            ActionCode::Zero => 'Z',
            ActionCode::Remove => 'X',
            ActionCode::Keep => 'K',
            ActionCode::Clean => 'C',
            ActionCode::RemapUid => 'U',
        }
    }
}

/// What happened to an element's value. Original values are never recorded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disposition {
    Removed,
    Replaced,
    Kept,
}

impl Disposition {
    pub fn as_str(&self) -> &'static str {
        match self {
            Disposition::Removed => "removed",
            Disposition::Replaced => "replaced",
            Disposition::Kept => "kept",
        }
    }
}

/// One audited action.
#[derive(Clone, Debug)]
pub struct AuditEntry {
    pub path: TagPath,
    pub action: ActionCode,
    pub disposition: Disposition,
    /// Extra context, e.g. a clean-action fallback. Never an original value.
    pub note: Option<String>,
}

/// The audit trail for one processed dataset.
#[derive(Clone, Debug, Default)]
pub struct AuditRecord {
    pub file_id: String,
    pub profile: String,
    /// Filled by the caller; the core has no clock.
    pub timestamp: String,
    pub entries: Vec<AuditEntry>,
}

/// Errors from profile loading and application.
#[derive(Debug, thiserror::Error)]
pub enum DeidError {
    #[error("profile line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("unknown built-in profile {0:?}")]
    UnknownProfile(String),
    #[error(
        "UID remap collision: two distinct UIDs hash to the same replacement; rotate the UID key"
    )]
    UidCollision,
    #[error("UID root {0:?} must be digits and dots, at most 24 characters")]
    BadUidRoot(String),
}
