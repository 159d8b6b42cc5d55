//! DICOM stream parser.

use alloc::vec::Vec;

use super::{
    dict, DataSet, DicomError, Element, Item, Tag, TransferSyntax, Value, Vr, MAX_DEPTH,
    TAG_ITEM, TAG_ITEM_DELIM, TAG_PIXEL_DATA, TAG_SEQ_DELIM, TAG_TRANSFER_SYNTAX,
};

const UNDEFINED: u32 = 0xFFFF_FFFF;

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(buf: &'a [u8], pos: usize) -> Self {
        Cursor { buf, pos }
    }

    fn remaining(&self) -> usize {
        self.buf.len() - self.pos
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8], DicomError> {
        if self.remaining() < n {
            return Err(DicomError::Truncated { offset: self.pos });
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u16_le(&mut self) -> Result<u16, DicomError> {
        let b = self.take(2)?;
        Ok(u16::from_le_bytes([b[0], b[1]]))
    }

    fn u32_le(&mut self) -> Result<u32, DicomError> {
        let b = self.take(4)?;
        Ok(u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
    }

    fn tag(&mut self) -> Result<Tag, DicomError> {
        let group = self.u16_le()?;
        let element = self.u16_le()?;
        Ok(Tag::new(group, element))
    }

    fn peek_tag(&self) -> Result<Tag, DicomError> {
        if self.remaining() < 4 {
            return Err(DicomError::Truncated { offset: self.pos });
        }
        Ok(Tag::new(
            u16::from_le_bytes([self.buf[self.pos], self.buf[self.pos + 1]]),
            u16::from_le_bytes([self.buf[self.pos + 2], self.buf[self.pos + 3]]),
        ))
    }
}

/// Parse a DICOM Part-10 file: 128-byte preamble, "DICM", file meta group,
/// then the dataset in the declared transfer syntax.
pub fn parse_dataset(bytes: &[u8]) -> Result<DataSet, DicomError> {
    if bytes.len() < 132 || &bytes[128..132] != b"DICM" {
        return Err(DicomError::MissingMagic);
    }
    let mut preamble = [0u8; 128];
    preamble.copy_from_slice(&bytes[..128]);

    let mut cur = Cursor::new(bytes, 132);
    let meta = parse_meta(&mut cur)?;
    let ts_uid = meta
        .iter()
        .find(|e| e.tag == TAG_TRANSFER_SYNTAX)
        .and_then(|e| e.string_value())
        .ok_or(DicomError::MissingTransferSyntax)?;
    let transfer_syntax = TransferSyntax::from_uid(&ts_uid)?;

    let elements = parse_elements(&mut cur, bytes.len(), transfer_syntax.is_explicit(), 0)?;
    Ok(DataSet {
        preamble: Some(preamble),
        meta,
        transfer_syntax,
        elements,
    })
}

/// Parse a raw (headerless) dataset stream with no preamble or file meta.
/// When `transfer_syntax` is `None` the encoding is sniffed from the first
/// element header.
pub fn parse_dataset_raw(
    bytes: &[u8],
    transfer_syntax: Option<TransferSyntax>,
) -> Result<DataSet, DicomError> {
    let ts = match transfer_syntax {
        Some(ts) => ts,
        None => sniff_encoding(bytes),
    };
    let mut cur = Cursor::new(bytes, 0);
    let elements = parse_elements(&mut cur, bytes.len(), ts.is_explicit(), 0)?;
    Ok(DataSet {
        preamble: None,
        meta: Vec::new(),
        transfer_syntax: ts,
        elements,
    })
}

fn sniff_encoding(bytes: &[u8]) -> TransferSyntax {
    if bytes.len() >= 6 && Vr([bytes[4], bytes[5]]).is_known() {
        TransferSyntax::ExplicitLe
    } else {
        TransferSyntax::ImplicitLe
    }
}

/// File meta is always explicit-VR little-endian; it spans the contiguous
/// run of group-0002 elements.
fn parse_meta(cur: &mut Cursor) -> Result<Vec<Element>, DicomError> {
    let mut meta = Vec::new();
    let mut prev: Option<Tag> = None;
    while cur.remaining() >= 4 && cur.peek_tag()?.is_file_meta() {
        let offset = cur.pos;
        let e = parse_element(cur, true, 0)?;
        if let Some(p) = prev {
            if e.tag <= p {
                return Err(DicomError::NonAscendingTags { tag: e.tag, offset });
            }
        }
        prev = Some(e.tag);
        meta.push(e);
    }
    Ok(meta)
}

/// Parse elements until `end` (byte offset) is reached.
fn parse_elements(
    cur: &mut Cursor,
    end: usize,
    explicit: bool,
    depth: usize,
) -> Result<Vec<Element>, DicomError> {
    let mut elements = Vec::new();
    let mut prev: Option<Tag> = None;
    while cur.pos < end {
        let offset = cur.pos;
        let e = parse_element(cur, explicit, depth)?;
        if let Some(p) = prev {
            if e.tag <= p {
                return Err(DicomError::NonAscendingTags { tag: e.tag, offset });
            }
        }
        prev = Some(e.tag);
        elements.push(e);
    }
    if cur.pos != end {
        return Err(DicomError::Truncated { offset: cur.pos });
    }
    Ok(elements)
}

fn parse_element(cur: &mut Cursor, explicit: bool, depth: usize) -> Result<Element, DicomError> {
    let offset = cur.pos;
    let tag = cur.tag()?;
    if tag == TAG_ITEM || tag == TAG_ITEM_DELIM || tag == TAG_SEQ_DELIM {
        return Err(DicomError::UnexpectedTag { tag, offset });
    }

    let (vr, length) = if explicit {
        let vr_bytes = cur.take(2)?;
        let vr = Vr([vr_bytes[0], vr_bytes[1]]);
        if vr.is_known() && vr.has_long_header() {
            cur.take(2)?; // reserved
            (vr, cur.u32_le()?)
        } else {
            // Known short-form VRs and unknown codes both use the 2-byte
            // length; unknown values stay opaque.
            (vr, cur.u16_le()? as u32)
        }
    } else {
        let length = cur.u32_le()?;
        (dict::vr_for_tag(tag), length)
    };

    let value = if vr == Vr::SQ && length != UNDEFINED {
        if length as usize > cur.remaining() {
            return Err(DicomError::LengthOverrun {
                tag,
                offset,
                length,
            });
        }
        let end = cur.pos + length as usize;
        let items = parse_items_defined(cur, end, explicit, depth)?;
        return Ok(Element {
            tag,
            vr,
            value: Value::Sequence(items),
            explicit_length: true,
        });
    } else if length == UNDEFINED {
        if depth >= MAX_DEPTH {
            return Err(DicomError::DepthExceeded { offset });
        }
        if vr == Vr::SQ || (!explicit && tag != TAG_PIXEL_DATA && !matches!(vr, Vr::OB | Vr::OW)) {
            // Undefined length in implicit VR means a sequence unless it is
            // (encapsulated) pixel data.
            let items = parse_items_undefined(cur, explicit, depth)?;
            return Ok(Element {
                tag,
                vr: Vr::SQ,
                value: Value::Sequence(items),
                explicit_length: false,
            });
        }
        if matches!(vr, Vr::OB | Vr::OW | Vr::UN) || tag == TAG_PIXEL_DATA {
            Value::Fragments(parse_fragments(cur)?)
        } else {
            return Err(DicomError::InvalidUndefinedLength { tag });
        }
    } else {
        if length as usize > cur.remaining() {
            return Err(DicomError::LengthOverrun {
                tag,
                offset,
                length,
            });
        }
        Value::Primitive(cur.take(length as usize)?.to_vec())
    };

    Ok(Element {
        tag,
        vr,
        value,
        explicit_length: length != UNDEFINED,
    })
}

fn parse_items_defined(
    cur: &mut Cursor,
    end: usize,
    explicit: bool,
    depth: usize,
) -> Result<Vec<Item>, DicomError> {
    if depth >= MAX_DEPTH {
        return Err(DicomError::DepthExceeded { offset: cur.pos });
    }
    let mut items = Vec::new();
    while cur.pos < end {
        items.push(parse_item(cur, explicit, depth)?);
    }
    if cur.pos != end {
        return Err(DicomError::Truncated { offset: cur.pos });
    }
    Ok(items)
}

fn parse_items_undefined(
    cur: &mut Cursor,
    explicit: bool,
    depth: usize,
) -> Result<Vec<Item>, DicomError> {
    let mut items = Vec::new();
    loop {
        let offset = cur.pos;
        let tag = cur.peek_tag()?;
        if tag == TAG_SEQ_DELIM {
            cur.tag()?;
            cur.u32_le()?;
            return Ok(items);
        }
        if tag != TAG_ITEM {
            return Err(DicomError::UnexpectedTag { tag, offset });
        }
        items.push(parse_item(cur, explicit, depth)?);
    }
}

fn parse_item(cur: &mut Cursor, explicit: bool, depth: usize) -> Result<Item, DicomError> {
    let offset = cur.pos;
    let tag = cur.tag()?;
    if tag != TAG_ITEM {
        return Err(DicomError::UnexpectedTag { tag, offset });
    }
    let length = cur.u32_le()?;
    if length == UNDEFINED {
        let mut elements = Vec::new();
        let mut prev: Option<Tag> = None;
        loop {
            let el_offset = cur.pos;
            if cur.peek_tag()? == TAG_ITEM_DELIM {
                cur.tag()?;
                cur.u32_le()?;
                return Ok(Item {
                    elements,
                    explicit_length: false,
                });
            }
            let e = parse_element(cur, explicit, depth + 1)?;
            if let Some(p) = prev {
                if e.tag <= p {
                    return Err(DicomError::NonAscendingTags {
                        tag: e.tag,
                        offset: el_offset,
                    });
                }
            }
            prev = Some(e.tag);
            elements.push(e);
        }
    }
    if length as usize > cur.remaining() {
        return Err(DicomError::LengthOverrun {
            tag,
            offset,
            length,
        });
    }
    let end = cur.pos + length as usize;
    let elements = parse_elements(cur, end, explicit, depth + 1)?;
    Ok(Item {
        elements,
        explicit_length: true,
    })
}

/// Capture an encapsulated value verbatim: item fragments up to and
/// including the sequence delimitation item.
fn parse_fragments(cur: &mut Cursor) -> Result<Vec<u8>, DicomError> {
    let start = cur.pos;
    loop {
        let offset = cur.pos;
        let tag = cur.tag()?;
        let length = cur.u32_le()?;
        if tag == TAG_SEQ_DELIM {
            return Ok(cur.buf[start..cur.pos].to_vec());
        }
        if tag != TAG_ITEM {
            return Err(DicomError::UnexpectedTag { tag, offset });
        }
        if length == UNDEFINED || length as usize > cur.remaining() {
            return Err(DicomError::LengthOverrun {
                tag,
                offset,
                length,
            });
        }
        cur.take(length as usize)?;
    }
}
