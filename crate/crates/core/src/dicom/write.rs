//! DICOM stream serializer.
//!
//! Re-encodes a dataset in its declared transfer syntax, preserving each
//! element's defined/undefined length form, so an unmodified parse/serialize
//! round-trip is byte-identical. The file meta group length (0002,0000) is
//! recomputed on every write.

use alloc::vec::Vec;
use core::ops::Range;

use super::{
    DataSet, DicomError, Element, Item, Tag, TagPath, Value, Vr, TAG_ITEM, TAG_ITEM_DELIM,
    TAG_SEQ_DELIM,
};

const UNDEFINED: u32 = 0xFFFF_FFFF;

/// Where an element landed in the serialized stream.
#[derive(Clone, Debug)]
pub struct ElementSpan {
    pub path: TagPath,
    /// Tag/VR/length header bytes.
    pub header: Range<usize>,
    /// Value bytes (for sequences: items and any trailing delimiter).
    pub value: Range<usize>,
}

struct Writer {
    out: Vec<u8>,
    spans: Vec<ElementSpan>,
    record_spans: bool,
    path: Vec<(Tag, usize)>,
}

impl Writer {
    fn u16_le(&mut self, v: u16) {
        self.out.extend_from_slice(&v.to_le_bytes());
    }

    fn u32_le(&mut self, v: u32) {
        self.out.extend_from_slice(&v.to_le_bytes());
    }

    fn tag(&mut self, tag: Tag) {
        self.u16_le(tag.group);
        self.u16_le(tag.element);
    }

    /// Write a 32-bit length placeholder; returns its offset for patching.
    fn placeholder(&mut self) -> usize {
        let at = self.out.len();
        self.u32_le(0);
        at
    }

    fn patch_u32(&mut self, at: usize, v: u32) {
        self.out[at..at + 4].copy_from_slice(&v.to_le_bytes());
    }
}

/// Serialize a dataset to bytes.
pub fn serialize_dataset(ds: &DataSet) -> Result<Vec<u8>, DicomError> {
    Ok(serialize_inner(ds, false)?.0)
}

/// Serialize and report the byte span of every element (meta and dataset,
/// including nested ones).
pub fn serialize_with_spans(ds: &DataSet) -> Result<(Vec<u8>, Vec<ElementSpan>), DicomError> {
    serialize_inner(ds, true)
}

fn serialize_inner(
    ds: &DataSet,
    record_spans: bool,
) -> Result<(Vec<u8>, Vec<ElementSpan>), DicomError> {
    let mut w = Writer {
        out: Vec::new(),
        spans: Vec::new(),
        record_spans,
        path: Vec::new(),
    };

    if let Some(preamble) = &ds.preamble {
        w.out.extend_from_slice(preamble);
        w.out.extend_from_slice(b"DICM");
    }

    if !ds.meta.is_empty() {
        write_meta(&mut w, &ds.meta)?;
    }

    let explicit = ds.transfer_syntax.is_explicit();
    for e in &ds.elements {
        write_element(&mut w, e, explicit)?;
    }
    Ok((w.out, w.spans))
}

/// The meta group is always explicit-VR little-endian. A present group
/// length element is recomputed from the bytes that follow it.
fn write_meta(w: &mut Writer, meta: &[Element]) -> Result<(), DicomError> {
    let group_length_tag = Tag::new(0x0002, 0x0000);
    let mut rest_start = None;
    for e in meta {
        if e.tag == group_length_tag {
            let start = w.out.len();
            w.tag(e.tag);
            w.out.extend_from_slice(&Vr::UL.0);
            w.u16_le(4);
            let at = w.placeholder();
            if w.record_spans {
                w.spans.push(ElementSpan {
                    path: TagPath::top(e.tag),
                    header: start..at,
                    value: at..at + 4,
                });
            }
            rest_start = Some((at, w.out.len()));
        } else {
            write_element(w, e, true)?;
        }
    }
    if let Some((at, start)) = rest_start {
        let len = (w.out.len() - start) as u32;
        w.patch_u32(at, len);
    }
    Ok(())
}

fn write_element(w: &mut Writer, e: &Element, explicit: bool) -> Result<(), DicomError> {
    let header_start = w.out.len();
    w.tag(e.tag);

    match &e.value {
        Value::Primitive(bytes) => {
            if bytes.len() % 2 == 1 {
                return Err(DicomError::OddLength {
                    tag: e.tag,
                    length: bytes.len(),
                });
            }
            write_length_header(w, e, bytes.len(), explicit)?;
            let value_start = w.out.len();
            w.out.extend_from_slice(bytes);
            record_span(w, e.tag, header_start, value_start);
        }
        Value::Fragments(raw) => {
            // Encapsulated values are always undefined length; the raw bytes
            // already contain the fragments and the sequence delimiter.
            if explicit {
                w.out.extend_from_slice(&e.vr.0);
                w.u16_le(0);
            }
            w.u32_le(UNDEFINED);
            let value_start = w.out.len();
            w.out.extend_from_slice(raw);
            record_span(w, e.tag, header_start, value_start);
        }
        Value::Sequence(items) => {
            if explicit {
                w.out.extend_from_slice(&Vr::SQ.0);
                w.u16_le(0);
            }
            let len_at = w.placeholder();
            let value_start = w.out.len();
            for (idx, item) in items.iter().enumerate() {
                w.path.push((e.tag, idx));
                write_item(w, item, explicit)?;
                w.path.pop();
            }
            if e.explicit_length {
                let len = w.out.len() - value_start;
                w.patch_u32(len_at, len as u32);
            } else {
                w.patch_u32(len_at, UNDEFINED);
                w.tag(TAG_SEQ_DELIM);
                w.u32_le(0);
            }
            record_span(w, e.tag, header_start, value_start);
        }
    }
    Ok(())
}

fn write_length_header(
    w: &mut Writer,
    e: &Element,
    len: usize,
    explicit: bool,
) -> Result<(), DicomError> {
    if !explicit {
        w.u32_le(len as u32);
        return Ok(());
    }
    w.out.extend_from_slice(&e.vr.0);
    if e.vr.is_known() && e.vr.has_long_header() {
        w.u16_le(0);
        w.u32_le(len as u32);
    } else {
        if len > u16::MAX as usize {
            return Err(DicomError::ValueTooLong {
                tag: e.tag,
                length: len,
            });
        }
        w.u16_le(len as u16);
    }
    Ok(())
}

fn write_item(w: &mut Writer, item: &Item, explicit: bool) -> Result<(), DicomError> {
    w.tag(TAG_ITEM);
    let len_at = w.placeholder();
    let start = w.out.len();
    for e in &item.elements {
        write_element(w, e, explicit)?;
    }
    if item.explicit_length {
        let len = w.out.len() - start;
        w.patch_u32(len_at, len as u32);
    } else {
        w.patch_u32(len_at, UNDEFINED);
        w.tag(TAG_ITEM_DELIM);
        w.u32_le(0);
    }
    Ok(())
}

fn record_span(w: &mut Writer, tag: Tag, header_start: usize, value_start: usize) {
    if w.record_spans {
        let path = TagPath::nested(w.path.clone(), tag);
        w.spans.push(ElementSpan {
            path,
            header: header_start..value_start,
            value: value_start..w.out.len(),
        });
    }
}
