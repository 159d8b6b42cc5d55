//! Consistent UID remapping under a keyed hash.
//!
//! Replacement UIDs are `root + "." + decimal(first 16 digest bytes)` of a
//! SHA-256 over `key || 0 || uid`, so the same original maps to the same
//! replacement in every run with the same key, without storing a reversible
//! table. An in-run cache makes the mapping observable and lets a second
//! pass recognize its own outputs (idempotence).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use sha2::{Digest, Sha256};

use super::DeidError;

/// Default organizational root for generated UIDs (the UUID-derived root).
pub const DEFAULT_UID_ROOT: &str = "2.25";

#[derive(Clone, Debug)]
pub struct UidMap {
    key: Vec<u8>,
    root: String,
    forward: BTreeMap<String, String>,
    reverse: BTreeMap<String, String>,
}

impl UidMap {
    /// `root` must be digits and dots, at most 24 characters, so that the
    /// longest replacement (`root` + "." + a 39-digit number) stays within
    /// the 64-character UID limit.
    pub fn new(key: &[u8], root: &str) -> Result<Self, DeidError> {
        let valid = !root.is_empty()
            && root.len() <= 24
            && root.chars().all(|c| c.is_ascii_digit() || c == '.')
            && !root.starts_with('.')
            && !root.ends_with('.');
        if !valid {
            return Err(DeidError::BadUidRoot(root.to_string()));
        }
        Ok(UidMap {
            key: key.to_vec(),
            root: root.to_string(),
            forward: BTreeMap::new(),
            reverse: BTreeMap::new(),
        })
    }

    pub fn with_default_root(key: &[u8]) -> Self {
        Self::new(key, DEFAULT_UID_ROOT).expect("default root is valid")
    }

    /// Deterministically replace `uid`. Distinct inputs map to distinct
    /// outputs; a digest collision is a hard error (rotate the key) rather
    /// than a silent reuse. Feeding back an already-produced replacement
    /// returns it unchanged.
    pub fn remap(&mut self, uid: &str) -> Result<String, DeidError> {
        if let Some(mapped) = self.forward.get(uid) {
            return Ok(mapped.clone());
        }
        if self.reverse.contains_key(uid) {
            return Ok(uid.to_string());
        }
        let replacement = self.derive(uid);
        if let Some(prior) = self.reverse.get(&replacement) {
            if prior != uid {
                return Err(DeidError::UidCollision);
            }
        }
        self.forward.insert(uid.to_string(), replacement.clone());
        self.reverse.insert(replacement.clone(), uid.to_string());
        Ok(replacement)
    }

    fn derive(&self, uid: &str) -> String {
        let mut hasher = Sha256::new();
        hasher.update(&self.key);
        hasher.update([0u8]);
        hasher.update(uid.as_bytes());
        let digest = hasher.finalize();
        let n = u128::from_le_bytes(digest[..16].try_into().expect("16 bytes"));
        alloc::format!("{}.{}", self.root, n)
    }

    /// Observed (original, replacement) pairs, for optional persistence.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.forward.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    /// Reload a persisted pair. Disagreements with the keyed derivation are
    /// honored in favor of the persisted value (the map is the authority).
    pub fn insert_entry(&mut self, original: &str, replacement: &str) {
        self.forward
            .insert(original.to_string(), replacement.to_string());
        self.reverse
            .insert(replacement.to_string(), original.to_string());
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}
