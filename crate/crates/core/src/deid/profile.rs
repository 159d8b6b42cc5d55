//! Profile file parsing and per-tag action resolution.
//!
//! Profile grammar, one entry per line:
//!
//! ```text
//! # comment
//! name = my-profile
//! extends = basic
//! default_action = K
//! private_tags = remove-all          # or: keep
//! date_shift_days = -30
//! retain_options = flag-a, flag-b
//!
//! 0010,0010 = Z                      # exact tag
//! 50xx,xxxx = X                      # masked: x nibbles are wildcards
//! 6000-60FF,4000 = X                 # group range
//! ```
//!
//! Precedence when several patterns match one tag: exact > masked > range >
//! profile default. Private tags are resolved by the private-tag policy
//! before the table is consulted.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::builtin::BUILTINS;
use super::{ActionCode, DeidError};
use crate::dicom::Tag;

/// One half (group or element) of a tag pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternPart {
    Exact(u16),
    /// `value` compared under `mask`; zero mask nibbles are wildcards.
    Masked { value: u16, mask: u16 },
    Range(u16, u16),
}

impl PatternPart {
    fn matches(&self, v: u16) -> bool {
        match *self {
            PatternPart::Exact(x) => v == x,
            PatternPart::Masked { value, mask } => v & mask == value,
            PatternPart::Range(lo, hi) => (lo..=hi).contains(&v),
        }
    }

    /// Number of fixed nibbles (0..=4); ranges count as zero.
    fn specificity(&self) -> u32 {
        match *self {
            PatternPart::Exact(_) => 4,
            PatternPart::Masked { mask, .. } => {
                (0..4).filter(|i| mask >> (i * 4) & 0xF != 0).count() as u32
            }
            PatternPart::Range(_, _) => 0,
        }
    }

    fn overlaps(&self, other: &PatternPart) -> bool {
        // Conservative pairwise check over the nibble structure.
        match (*self, *other) {
            (PatternPart::Exact(a), _) => other.matches(a),
            (_, PatternPart::Exact(b)) => self.matches(b),
            (
                PatternPart::Masked { value: v1, mask: m1 },
                PatternPart::Masked { value: v2, mask: m2 },
            ) => v1 & m1 & m2 == v2 & m1 & m2,
            (PatternPart::Range(a, b), PatternPart::Range(c, d)) => a <= d && c <= b,
            (PatternPart::Range(a, b), PatternPart::Masked { .. }) => {
                (a..=b).any(|v| other.matches(v))
            }
            (PatternPart::Masked { .. }, PatternPart::Range(c, d)) => {
                (c..=d).any(|v| self.matches(v))
            }
        }
    }
}

/// A tag pattern from a profile entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TagPattern {
    pub group: PatternPart,
    pub element: PatternPart,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PatternKind {
    Exact,
    Masked,
    Ranged,
}

impl TagPattern {
    pub fn matches(&self, tag: Tag) -> bool {
        self.group.matches(tag.group) && self.element.matches(tag.element)
    }

    fn kind(&self) -> PatternKind {
        if matches!(self.group, PatternPart::Range(..))
            || matches!(self.element, PatternPart::Range(..))
        {
            PatternKind::Ranged
        } else if matches!(self.group, PatternPart::Exact(_))
            && matches!(self.element, PatternPart::Exact(_))
        {
            PatternKind::Exact
        } else {
            PatternKind::Masked
        }
    }

    fn specificity(&self) -> u32 {
        self.group.specificity() + self.element.specificity()
    }

    fn overlaps(&self, other: &TagPattern) -> bool {
        self.group.overlaps(&other.group) && self.element.overlaps(&other.element)
    }
}

/// How private (odd-group) tags are handled before the table is consulted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrivateTagPolicy {
    RemoveAll,
    Keep,
}

/// A resolved de-identification profile.
#[derive(Clone, Debug)]
pub struct DeidProfile {
    pub name: String,
    pub entries: Vec<(TagPattern, ActionCode)>,
    pub private_tag_policy: PrivateTagPolicy,
    pub date_shift_days: i32,
    pub default_action: ActionCode,
    pub retain_options: BTreeSet<String>,
}

/// Load a built-in profile by name.
pub fn load_profile_named(name: &str) -> Result<DeidProfile, DeidError> {
    let text = BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| DeidError::UnknownProfile(name.to_string()))?;
    load_profile(text)
}

/// Parse a profile from its text form. An `extends` header pulls in a
/// built-in base whose entries the new ones override.
pub fn load_profile(text: &str) -> Result<DeidProfile, DeidError> {
    let mut base: Option<DeidProfile> = None;
    let mut name: Option<String> = None;
    let mut default_action: Option<ActionCode> = None;
    let mut private_tag_policy: Option<PrivateTagPolicy> = None;
    let mut date_shift_days: Option<i32> = None;
    let mut retain_options: BTreeSet<String> = BTreeSet::new();
    let mut entries: Vec<(TagPattern, ActionCode)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| DeidError::Config {
            line: lineno,
            message: "expected `key = value`".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "name" => name = Some(value.to_string()),
            "extends" => base = Some(load_profile_named(value)?),
            "default_action" => {
                default_action = Some(parse_action(value, lineno)?);
            }
            "private_tags" => {
                private_tag_policy = Some(match value {
                    "remove-all" => PrivateTagPolicy::RemoveAll,
                    "keep" => PrivateTagPolicy::Keep,
                    other => {
                        return Err(DeidError::Config {
                            line: lineno,
                            message: alloc::format!("unknown private_tags policy {other:?}"),
                        })
                    }
                });
            }
            "date_shift_days" => {
                date_shift_days = Some(value.parse().map_err(|_| DeidError::Config {
                    line: lineno,
                    message: alloc::format!("invalid date_shift_days {value:?}"),
                })?);
            }
            "retain_options" => {
                retain_options.extend(
                    value
                        .split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty()),
                );
            }
            pattern => {
                let pat = parse_pattern(pattern, lineno)?;
                let action = parse_action(value, lineno)?;
                entries.push((pat, action));
            }
        }
    }

    let mut profile = match base {
        Some(b) => {
            let mut p = b;
            p.name = name.unwrap_or(p.name);
            if let Some(a) = default_action {
                p.default_action = a;
            }
            if let Some(pol) = private_tag_policy {
                p.private_tag_policy = pol;
            }
            if let Some(d) = date_shift_days {
                p.date_shift_days = d;
            }
            p.retain_options.extend(retain_options);
            for (pat, action) in entries {
                match p.entries.iter_mut().find(|(existing, _)| *existing == pat) {
                    Some(slot) => slot.1 = action,
                    None => p.entries.push((pat, action)),
                }
            }
            p
        }
        None => DeidProfile {
            name: name.unwrap_or_else(|| "custom".into()),
            entries,
            private_tag_policy: private_tag_policy.unwrap_or(PrivateTagPolicy::RemoveAll),
            date_shift_days: date_shift_days.unwrap_or(0),
            default_action: default_action.unwrap_or(ActionCode::Keep),
            retain_options,
        },
    };

    check_conflicts(&profile)?;
    profile
        .entries
        .sort_by_key(|(pat, _)| (pat.kind(), core::cmp::Reverse(pat.specificity())));
    Ok(profile)
}

fn parse_action(s: &str, line: usize) -> Result<ActionCode, DeidError> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => ActionCode::from_letter(c).ok_or_else(|| DeidError::Config {
            line,
            message: alloc::format!("unknown action letter {c:?}"),
        }),
        _ => Err(DeidError::Config {
            line,
            message: alloc::format!("expected a single action letter, got {s:?}"),
        }),
    }
}

fn parse_pattern(s: &str, line: usize) -> Result<TagPattern, DeidError> {
    let (g, e) = s.split_once(',').ok_or_else(|| DeidError::Config {
        line,
        message: alloc::format!("expected GGGG,EEEE pattern, got {s:?}"),
    })?;
    Ok(TagPattern {
        group: parse_part(g.trim(), line)?,
        element: parse_part(e.trim(), line)?,
    })
}

fn parse_part(s: &str, line: usize) -> Result<PatternPart, DeidError> {
    let bad = |message: String| DeidError::Config { line, message };
    if let Some((lo, hi)) = s.split_once('-') {
        let lo = parse_hex4(lo).ok_or_else(|| bad(alloc::format!("bad range start {lo:?}")))?;
        let hi = parse_hex4(hi).ok_or_else(|| bad(alloc::format!("bad range end {hi:?}")))?;
        if lo > hi {
            return Err(bad(alloc::format!("inverted range {s:?}")));
        }
        return Ok(PatternPart::Range(lo, hi));
    }
    if s.len() != 4 {
        return Err(bad(alloc::format!("pattern part {s:?} must be 4 hex digits")));
    }
    let mut value = 0u16;
    let mut mask = 0u16;
    for c in s.chars() {
        value <<= 4;
        mask <<= 4;
        match c {
            // 'x' is not a hex digit, so it can serve as the wildcard nibble
            'x' | 'X' => {}
            _ => match c.to_digit(16) {
                Some(d) => {
                    value |= d as u16;
                    mask |= 0xF;
                }
                None => return Err(bad(alloc::format!("bad hex digit {c:?} in {s:?}"))),
            },
        }
    }
    if mask == 0xFFFF {
        Ok(PatternPart::Exact(value))
    } else {
        Ok(PatternPart::Masked { value, mask })
    }
}

fn parse_hex4(s: &str) -> Option<u16> {
    let s = s.trim();
    if s.len() != 4 {
        return None;
    }
    u16::from_str_radix(s, 16).ok()
}

/// Reject ambiguous tables: duplicate exact tags with different actions, and
/// same-precedence overlapping patterns that disagree.
fn check_conflicts(profile: &DeidProfile) -> Result<(), DeidError> {
    let es = &profile.entries;
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (pa, aa) = &es[i];
            let (pb, ab) = &es[j];
            if aa == ab || pa.kind() != pb.kind() {
                continue;
            }
            if pa.kind() == PatternKind::Exact {
                if pa == pb {
                    return Err(DeidError::Config {
                        line: 0,
                        message: alloc::format!(
                            "conflicting duplicate entries for the same exact tag ({:?} vs {:?})",
                            aa.letter(),
                            ab.letter()
                        ),
                    });
                }
            } else if pa.specificity() == pb.specificity() && pa.overlaps(pb) {
                return Err(DeidError::Config {
                    line: 0,
                    message: "overlapping patterns of equal precedence disagree".into(),
                });
            }
        }
    }
    Ok(())
}

/// Resolve the winning action for a tag. Deterministic: private-tag policy
/// first, then exact > masked (most specific) > range > default.
pub fn action_for_tag(profile: &DeidProfile, tag: Tag) -> ActionCode {
    if tag.is_private() {
        return match profile.private_tag_policy {
            PrivateTagPolicy::RemoveAll => ActionCode::Remove,
            PrivateTagPolicy::Keep => ActionCode::Keep,
        };
    }
    // Entries are sorted by (kind, specificity desc) at load time, so the
    // first match wins.
    for (pattern, action) in &profile.entries {
        if pattern.matches(tag) {
            return *action;
        }
    }
    profile.default_action
}
