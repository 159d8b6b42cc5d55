//! Applying a profile to a dataset.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use chrono::{Datelike, NaiveDate, TimeDelta};

use super::{ActionCode, AuditEntry, AuditRecord, DeidError, DeidProfile, Disposition, UidMap};
use crate::dicom::{DataSet, Element, Tag, TagPath, Value, Vr};

const TAG_SOP_INSTANCE: Tag = Tag::new(0x0008, 0x0018);
const TAG_MEDIA_SOP_INSTANCE: Tag = Tag::new(0x0002, 0x0003);
const TAG_IDENTITY_REMOVED: Tag = Tag::new(0x0012, 0x0062);
const TAG_DEID_METHOD: Tag = Tag::new(0x0012, 0x0063);

/// Apply `profile` to `ds`, remapping UIDs through `uids`.
///
/// Every element, nested ones included, gets its winning action; group
/// length elements are dropped (their values go stale under any edit); the
/// de-identification marker elements (0012,0062)/(0012,0063) are inserted.
/// A dataset already carrying the marker skips the date-shift part of clean
/// actions so that a second application is a no-op.
pub fn apply_profile(
    ds: &DataSet,
    profile: &DeidProfile,
    uids: &mut UidMap,
    file_id: &str,
) -> Result<(DataSet, AuditRecord), DeidError> {
    let mut audit = AuditRecord {
        file_id: file_id.to_string(),
        profile: profile.name.clone(),
        timestamp: String::new(),
        entries: Vec::new(),
    };

    let already_deidentified = ds
        .string_value(TAG_IDENTITY_REMOVED)
        .is_some_and(|v| v == "YES");

    let mut ctx = Ctx {
        profile,
        uids,
        audit: &mut audit,
        skip_date_shift: already_deidentified,
        path: Vec::new(),
    };

    let mut out = ds.clone();
    out.elements = ctx.walk(&ds.elements)?;

    // De-identification markers; upserts keep a second pass idempotent.
    let method = alloc::format!("medideid {} profile", profile.name);
    out.put(Element::new_padded(
        TAG_IDENTITY_REMOVED,
        Vr::CS,
        b"YES".to_vec(),
    ));
    out.put(Element::new_padded(
        TAG_DEID_METHOD,
        Vr::LO,
        method.into_bytes(),
    ));
    audit.entries.push(AuditEntry {
        path: TagPath::top(TAG_IDENTITY_REMOVED),
        action: ActionCode::Dummy,
        disposition: Disposition::Replaced,
        note: Some("de-identification marker".into()),
    });
    audit.entries.push(AuditEntry {
        path: TagPath::top(TAG_DEID_METHOD),
        action: ActionCode::Dummy,
        disposition: Disposition::Replaced,
        note: Some("de-identification marker".into()),
    });

    // Keep the file meta's media SOP instance UID in step with the dataset.
    if let Some(new_sop) = out.string_value(TAG_SOP_INSTANCE) {
        let changed = ds.string_value(TAG_SOP_INSTANCE).as_deref() != Some(new_sop.as_str());
        if changed {
            if let Some(pos) = out.meta.iter().position(|e| e.tag == TAG_MEDIA_SOP_INSTANCE) {
                out.meta[pos] =
                    Element::new_padded(TAG_MEDIA_SOP_INSTANCE, Vr::UI, new_sop.into_bytes());
                audit.entries.push(AuditEntry {
                    path: TagPath::top(TAG_MEDIA_SOP_INSTANCE),
                    action: ActionCode::RemapUid,
                    disposition: Disposition::Replaced,
                    note: Some("mirrors SOP instance UID".into()),
                });
            }
        }
    }

    Ok((out, audit))
}

struct Ctx<'a> {
    profile: &'a DeidProfile,
    uids: &'a mut UidMap,
    audit: &'a mut AuditRecord,
    skip_date_shift: bool,
    path: Vec<(Tag, usize)>,
}

impl Ctx<'_> {
    fn walk(&mut self, elements: &[Element]) -> Result<Vec<Element>, DeidError> {
        let mut out = Vec::with_capacity(elements.len());
        for e in elements {
            // Group lengths go stale under any edit; the standard drops them
            // during de-identification.
            if e.tag.is_group_length() {
                self.note(e.tag, ActionCode::Remove, Disposition::Removed, Some("group length"));
                continue;
            }
            let action = super::action_for_tag(self.profile, e.tag);
            match action {
                ActionCode::Remove => {
                    self.note(e.tag, action, Disposition::Removed, None);
                }
                ActionCode::Keep => {
                    out.push(self.recurse_kept(e, action)?);
                }
                ActionCode::Zero => {
                    let replaced = match &e.value {
                        Value::Sequence(_) => Element {
                            tag: e.tag,
                            vr: Vr::SQ,
                            value: Value::Sequence(Vec::new()),
                            explicit_length: e.explicit_length,
                        },
                        _ => Element::new(e.tag, e.vr, Vec::new()),
                    };
                    out.push(replaced);
                    self.note(e.tag, action, Disposition::Replaced, None);
                }
                ActionCode::Dummy => {
                    out.push(self.dummy_for(e)?);
                    self.note(e.tag, action, Disposition::Replaced, None);
                }
                ActionCode::RemapUid => {
                    out.push(self.remap_element(e)?);
                    self.note(e.tag, action, Disposition::Replaced, None);
                }
                ActionCode::Clean => {
                    let cleaned = self.clean_element(e)?;
                    out.push(cleaned);
                }
            }
        }
        Ok(out)
    }

    /// Kept sequences are still traversed: nested elements get their own
    /// winning actions.
    fn recurse_kept(&mut self, e: &Element, action: ActionCode) -> Result<Element, DeidError> {
        match &e.value {
            Value::Sequence(items) => {
                let mut new_items = Vec::with_capacity(items.len());
                for (idx, item) in items.iter().enumerate() {
                    self.path.push((e.tag, idx));
                    let elements = self.walk(&item.elements)?;
                    self.path.pop();
                    new_items.push(crate::dicom::Item {
                        elements,
                        explicit_length: item.explicit_length,
                    });
                }
                Ok(Element {
                    tag: e.tag,
                    vr: e.vr,
                    value: Value::Sequence(new_items),
                    explicit_length: e.explicit_length,
                })
            }
            _ => {
                self.note(e.tag, action, Disposition::Kept, None);
                Ok(e.clone())
            }
        }
    }

    fn dummy_for(&mut self, e: &Element) -> Result<Element, DeidError> {
        if let Value::Sequence(_) = e.value {
            return Ok(Element {
                tag: e.tag,
                vr: Vr::SQ,
                value: Value::Sequence(Vec::new()),
                explicit_length: e.explicit_length,
            });
        }
        if e.vr == Vr::UI {
            return self.remap_element(e);
        }
        let bytes: Vec<u8> = match e.vr {
            Vr::PN | Vr::LO | Vr::SH | Vr::ST | Vr::LT | Vr::UT | Vr::CS => b"ANONYMIZED".to_vec(),
            Vr::DA => b"19000101".to_vec(),
            Vr::TM => b"000000".to_vec(),
            Vr::DT => b"19000101000000".to_vec(),
            Vr::AS => b"000Y".to_vec(),
            Vr::IS | Vr::DS => b"0 ".to_vec(),
            Vr::US => alloc::vec![0, 0],
            Vr::UL | Vr::SL | Vr::FL => alloc::vec![0, 0, 0, 0],
            Vr::FD => alloc::vec![0, 0, 0, 0, 0, 0, 0, 0],
            Vr::SS => alloc::vec![0, 0],
            _ => Vec::new(),
        };
        Ok(Element::new_padded(e.tag, e.vr, bytes))
    }

    fn remap_element(&mut self, e: &Element) -> Result<Element, DeidError> {
        let Some(bytes) = e.value.as_bytes() else {
            return Ok(e.clone());
        };
        if bytes.is_empty() {
            return Ok(e.clone());
        }
        let text = String::from_utf8_lossy(bytes);
        let mut mapped = Vec::new();
        for part in text.split('\\') {
            let trimmed = part.trim_matches(|c| c == '\0' || c == ' ');
            if trimmed.is_empty() {
                mapped.push(String::new());
            } else {
                mapped.push(self.uids.remap(trimmed)?);
            }
        }
        let joined = mapped.join("\\");
        Ok(Element::new_padded(e.tag, e.vr, joined.into_bytes()))
    }

    fn clean_element(&mut self, e: &Element) -> Result<Element, DeidError> {
        let action = ActionCode::Clean;
        if self.skip_date_shift {
            self.note(
                e.tag,
                action,
                Disposition::Kept,
                Some("already de-identified; date shift skipped"),
            );
            return Ok(e.clone());
        }
        let shift = self.profile.date_shift_days;
        let original = e.string_value().unwrap_or_default();
        let cleaned = match e.vr {
            Vr::DA => shift_date(&original, shift),
            Vr::DT => shift_datetime(&original, shift),
            // A shift by whole days leaves a bare time of day unchanged.
            Vr::TM => Some(original.clone()),
            _ => None,
        };
        match cleaned {
            Some(v) => {
                self.note(e.tag, action, Disposition::Replaced, None);
                Ok(Element::new_padded(e.tag, e.vr, v.into_bytes()))
            }
            None => {
                self.note(
                    e.tag,
                    action,
                    Disposition::Replaced,
                    Some("unparseable value; fell back to zero-length"),
                );
                Ok(Element::new(e.tag, e.vr, Vec::new()))
            }
        }
    }

    fn note(
        &mut self,
        tag: Tag,
        action: ActionCode,
        disposition: Disposition,
        note: Option<&str>,
    ) {
        self.audit.entries.push(AuditEntry {
            path: TagPath::nested(self.path.clone(), tag),
            action,
            disposition,
            note: note.map(|s| s.to_string()),
        });
    }
}

fn parse_da(s: &str) -> Option<NaiveDate> {
    if s.len() != 8 || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let y: i32 = s[0..4].parse().ok()?;
    let m: u32 = s[4..6].parse().ok()?;
    let d: u32 = s[6..8].parse().ok()?;
    NaiveDate::from_ymd_opt(y, m, d)
}

fn format_da(d: NaiveDate) -> String {
    alloc::format!("{:04}{:02}{:02}", d.year(), d.month(), d.day())
}

fn shift_date(s: &str, days: i32) -> Option<String> {
    let date = parse_da(s)?;
    let shifted = date.checked_add_signed(TimeDelta::days(days as i64))?;
    Some(format_da(shifted))
}

/// DT values start with the YYYYMMDD date; everything after (time, fraction,
/// zone) is preserved as-is.
fn shift_datetime(s: &str, days: i32) -> Option<String> {
    if s.len() < 8 {
        return None;
    }
    let (date_part, rest) = s.split_at(8);
    let shifted = shift_date(date_part, days)?;
    Some(alloc::format!("{shifted}{rest}"))
}
