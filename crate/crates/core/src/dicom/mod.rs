//! DICOM Part-10 data sets with byte-exact round-trip for untouched elements.
//!
//! Supports the implicit-VR and explicit-VR little-endian transfer syntaxes.
//! Data sets under an encapsulated (compressed pixel data) transfer syntax are
//! parsed with explicit-VR rules and the pixel fragments are carried opaquely,
//! so metadata de-identification still works on them.

mod dict;
mod edit;
mod parse;
mod write;

pub use edit::{edit_element, EditOp};
pub use parse::{parse_dataset, parse_dataset_raw};
pub use write::{serialize_dataset, serialize_with_spans, ElementSpan};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Maximum sequence nesting depth accepted by the parser.
pub const MAX_DEPTH: usize = 32;

/// A DICOM attribute tag: (group, element) pair, ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tag {
    pub group: u16,
    pub element: u16,
}

impl Tag {
    pub const fn new(group: u16, element: u16) -> Self {
        Tag { group, element }
    }

    /// Private tags have an odd group number.
    pub fn is_private(&self) -> bool {
        self.group & 1 == 1
    }

    /// Group-length elements have element number 0000.
    pub fn is_group_length(&self) -> bool {
        self.element == 0
    }

    pub fn is_file_meta(&self) -> bool {
        self.group == 0x0002
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:04X},{:04X})", self.group, self.element)
    }
}

impl fmt::Debug for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Item tag within a sequence value.
pub const TAG_ITEM: Tag = Tag::new(0xFFFE, 0xE000);
/// Item delimitation tag (ends an undefined-length item).
pub const TAG_ITEM_DELIM: Tag = Tag::new(0xFFFE, 0xE00D);
/// Sequence delimitation tag (ends an undefined-length sequence).
pub const TAG_SEQ_DELIM: Tag = Tag::new(0xFFFE, 0xE0DD);
/// Pixel data.
pub const TAG_PIXEL_DATA: Tag = Tag::new(0x7FE0, 0x0010);
/// Transfer syntax UID in the file meta group.
pub const TAG_TRANSFER_SYNTAX: Tag = Tag::new(0x0002, 0x0010);

/// A two-character value representation code.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vr(pub [u8; 2]);

macro_rules! vrs {
    ($($name:ident),+) => {
        $(pub const $name: Vr = Vr(*stringify!($name).as_bytes().first_chunk::<2>().unwrap());)+
    };
}

impl Vr {
    vrs!(
        AE, AS, AT, CS, DA, DS, DT, FL, FD, IS, LO, LT, OB, OD, OF, OL, OV, OW, PN, SH, SL, SQ,
        SS, ST, SV, TM, UC, UI, UL, UN, UR, US, UT, UV
    );

    pub fn as_str(&self) -> &str {
        core::str::from_utf8(&self.0).unwrap_or("??")
    }

    /// Whether this VR uses the 12-byte element header (2 reserved bytes and
    /// a 32-bit length) in explicit-VR encoding.
    pub fn has_long_header(&self) -> bool {
        matches!(
            *self,
            Vr::OB
                | Vr::OD
                | Vr::OF
                | Vr::OL
                | Vr::OV
                | Vr::OW
                | Vr::SQ
                | Vr::SV
                | Vr::UC
                | Vr::UN
                | Vr::UR
                | Vr::UT
                | Vr::UV
        )
    }

    pub fn is_known(&self) -> bool {
        matches!(
            *self,
            Vr::AE
                | Vr::AS
                | Vr::AT
                | Vr::CS
                | Vr::DA
                | Vr::DS
                | Vr::DT
                | Vr::FL
                | Vr::FD
                | Vr::IS
                | Vr::LO
                | Vr::LT
                | Vr::OB
                | Vr::OD
                | Vr::OF
                | Vr::OL
                | Vr::OV
                | Vr::OW
                | Vr::PN
                | Vr::SH
                | Vr::SL
                | Vr::SQ
                | Vr::SS
                | Vr::ST
                | Vr::SV
                | Vr::TM
                | Vr::UC
                | Vr::UI
                | Vr::UL
                | Vr::UN
                | Vr::UR
                | Vr::US
                | Vr::UT
                | Vr::UV
        )
    }

    /// True for string-valued VRs that pad with a trailing space.
    pub fn is_text(&self) -> bool {
        matches!(
            *self,
            Vr::AE
                | Vr::AS
                | Vr::CS
                | Vr::DA
                | Vr::DS
                | Vr::DT
                | Vr::IS
                | Vr::LO
                | Vr::LT
                | Vr::PN
                | Vr::SH
                | Vr::ST
                | Vr::TM
                | Vr::UC
                | Vr::UR
                | Vr::UT
        )
    }

    /// Pad byte used to make an odd-length value even.
    pub fn pad_byte(&self) -> u8 {
        if self.is_text() {
            b' '
        } else {
            0
        }
    }
}

impl fmt::Display for Vr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Vr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One item of a sequence value.
#[derive(Clone, Debug, PartialEq)]
pub struct Item {
    pub elements: Vec<Element>,
    /// Whether the item was (and will be) encoded with an explicit length
    /// rather than an item delimitation tag.
    pub explicit_length: bool,
}

/// The value of a data element.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    /// Raw value bytes of a non-sequence element.
    Primitive(Vec<u8>),
    /// Nested data sets of an SQ element.
    Sequence(Vec<Item>),
    /// Encapsulated pixel-data fragments, kept verbatim (item headers and
    /// the trailing sequence delimitation included) so round-trips are
    /// byte-exact without decoding.
    Fragments(Vec<u8>),
}

impl Value {
    pub fn as_bytes(&self) -> Option<&[u8]> {
        match self {
            Value::Primitive(b) => Some(b),
            _ => None,
        }
    }

    pub fn as_items(&self) -> Option<&[Item]> {
        match self {
            Value::Sequence(items) => Some(items),
            _ => None,
        }
    }
}

/// A single data element.
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    pub tag: Tag,
    pub vr: Vr,
    pub value: Value,
    /// Whether the element was (and will be) encoded with an explicit length.
    /// Only sequences and encapsulated values may use the undefined form.
    pub explicit_length: bool,
}

impl Element {
    /// A primitive element; the value must already have even length.
    pub fn new(tag: Tag, vr: Vr, value: Vec<u8>) -> Self {
        Element {
            tag,
            vr,
            value: Value::Primitive(value),
            explicit_length: true,
        }
    }

    /// A primitive element padded to even length with the VR's pad byte.
    pub fn new_padded(tag: Tag, vr: Vr, mut value: Vec<u8>) -> Self {
        if value.len() % 2 == 1 {
            value.push(vr.pad_byte());
        }
        Element::new(tag, vr, value)
    }

    pub fn new_sequence(tag: Tag, items: Vec<Item>) -> Self {
        Element {
            tag,
            vr: Vr::SQ,
            value: Value::Sequence(items),
            explicit_length: false,
        }
    }

    /// Value bytes with trailing pad (space or NUL) stripped, as UTF-8.
    pub fn string_value(&self) -> Option<String> {
        let bytes = self.value.as_bytes()?;
        let trimmed = trim_value(bytes);
        Some(String::from_utf8_lossy(trimmed).into_owned())
    }
}

fn trim_value(bytes: &[u8]) -> &[u8] {
    let mut end = bytes.len();
    while end > 0 && (bytes[end - 1] == b' ' || bytes[end - 1] == 0) {
        end -= 1;
    }
    let mut start = 0;
    while start < end && bytes[start] == b' ' {
        start += 1;
    }
    &bytes[start..end]
}

/// The dataset encoding declared by the file meta group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransferSyntax {
    ImplicitLe,
    ExplicitLe,
    /// An encapsulated (compressed pixel data) syntax; the dataset itself is
    /// encoded explicit-VR little-endian and pixel data stays opaque.
    Encapsulated(String),
}

pub const UID_IMPLICIT_LE: &str = "1.2.840.10008.1.2";
pub const UID_EXPLICIT_LE: &str = "1.2.840.10008.1.2.1";
const UID_EXPLICIT_BE: &str = "1.2.840.10008.1.2.2";
const UID_DEFLATED_LE: &str = "1.2.840.10008.1.2.1.99";

impl TransferSyntax {
    pub fn from_uid(uid: &str) -> Result<Self, DicomError> {
        match uid {
            UID_IMPLICIT_LE => Ok(TransferSyntax::ImplicitLe),
            UID_EXPLICIT_LE => Ok(TransferSyntax::ExplicitLe),
            UID_EXPLICIT_BE | UID_DEFLATED_LE => Err(DicomError::UnsupportedTransferSyntax {
                uid: uid.into(),
            }),
            u if u.starts_with("1.2.840.10008.1.2.4.") || u == "1.2.840.10008.1.2.5" => {
                Ok(TransferSyntax::Encapsulated(u.into()))
            }
            u => Err(DicomError::UnsupportedTransferSyntax { uid: u.into() }),
        }
    }

    pub fn uid(&self) -> &str {
        match self {
            TransferSyntax::ImplicitLe => UID_IMPLICIT_LE,
            TransferSyntax::ExplicitLe => UID_EXPLICIT_LE,
            TransferSyntax::Encapsulated(uid) => uid,
        }
    }

    /// Whether dataset elements carry explicit VR codes.
    pub fn is_explicit(&self) -> bool {
        !matches!(self, TransferSyntax::ImplicitLe)
    }
}

/// A parsed DICOM data set: optional Part-10 envelope plus ordered elements.
#[derive(Clone, Debug, PartialEq)]
pub struct DataSet {
    /// 128-byte preamble, kept verbatim. `None` for raw (headerless) streams.
    pub preamble: Option<[u8; 128]>,
    /// Group-0002 file meta elements as parsed (explicit-VR little-endian).
    pub meta: Vec<Element>,
    pub transfer_syntax: TransferSyntax,
    /// Top-level dataset elements, strictly ascending by tag.
    pub elements: Vec<Element>,
}

impl DataSet {
    /// An empty Part-10 dataset with a zeroed preamble and minimal meta group.
    pub fn new(transfer_syntax: TransferSyntax) -> Self {
        let meta = alloc::vec![
            Element::new(Tag::new(0x0002, 0x0000), Vr::UL, alloc::vec![0, 0, 0, 0]),
            Element::new_padded(
                TAG_TRANSFER_SYNTAX,
                Vr::UI,
                transfer_syntax.uid().as_bytes().to_vec(),
            ),
        ];
        DataSet {
            preamble: Some([0u8; 128]),
            meta,
            transfer_syntax,
            elements: Vec::new(),
        }
    }

    pub fn find(&self, tag: Tag) -> Option<&Element> {
        self.elements
            .binary_search_by(|e| e.tag.cmp(&tag))
            .ok()
            .map(|i| &self.elements[i])
    }

    pub fn find_mut(&mut self, tag: Tag) -> Option<&mut Element> {
        self.elements
            .binary_search_by(|e| e.tag.cmp(&tag))
            .ok()
            .map(move |i| &mut self.elements[i])
    }

    pub fn find_meta(&self, tag: Tag) -> Option<&Element> {
        self.meta.iter().find(|e| e.tag == tag)
    }

    /// String value of a top-level element, pad stripped.
    pub fn string_value(&self, tag: Tag) -> Option<String> {
        self.find(tag)?.string_value()
    }

    /// Multi-valued string element split at backslashes, pads stripped.
    pub fn strings(&self, tag: Tag) -> Vec<String> {
        match self.string_value(tag) {
            Some(s) if !s.is_empty() => s
                .split('\\')
                .map(|p| p.trim_matches(|c| c == ' ' || c == '\0').into())
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Unsigned 16-bit value: binary US or a numeric string.
    pub fn u16_value(&self, tag: Tag) -> Option<u16> {
        let e = self.find(tag)?;
        let bytes = e.value.as_bytes()?;
        if e.vr == Vr::US && bytes.len() >= 2 {
            return Some(u16::from_le_bytes([bytes[0], bytes[1]]));
        }
        e.string_value()?.trim().parse().ok()
    }

    /// Signed integer value from an IS (or numeric string) element.
    pub fn i64_value(&self, tag: Tag) -> Option<i64> {
        self.string_value(tag)?.trim().parse().ok()
    }

    /// Decimal values from a DS element (multi-valued).
    pub fn f64_values(&self, tag: Tag) -> Vec<f64> {
        self.strings(tag)
            .iter()
            .filter_map(|s| s.trim().parse().ok())
            .collect()
    }

    /// Insert or replace a top-level element, preserving tag order.
    pub fn put(&mut self, element: Element) {
        match self.elements.binary_search_by(|e| e.tag.cmp(&element.tag)) {
            Ok(i) => self.elements[i] = element,
            Err(i) => self.elements.insert(i, element),
        }
    }

    /// Remove a top-level element; returns it if present.
    pub fn take(&mut self, tag: Tag) -> Option<Element> {
        match self.elements.binary_search_by(|e| e.tag.cmp(&tag)) {
            Ok(i) => Some(self.elements.remove(i)),
            Err(_) => None,
        }
    }
}

/// Path to a (possibly nested) element: `(sequence tag, item index)*` steps
/// then the leaf tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TagPath {
    pub steps: Vec<(Tag, usize)>,
    pub leaf: Tag,
}

impl TagPath {
    pub fn top(leaf: Tag) -> Self {
        TagPath {
            steps: Vec::new(),
            leaf,
        }
    }

    pub fn nested(steps: Vec<(Tag, usize)>, leaf: Tag) -> Self {
        TagPath { steps, leaf }
    }
}

impl fmt::Display for TagPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (tag, idx) in &self.steps {
            write!(f, "{tag}[{idx}]/")?;
        }
        write!(f, "{}", self.leaf)
    }
}

/// Errors from parsing, serializing, or editing DICOM data.
#[derive(Debug, thiserror::Error)]
pub enum DicomError {
    #[error("not a DICOM Part-10 file: missing DICM magic at offset 128")]
    MissingMagic,
    #[error("truncated stream at byte {offset}")]
    Truncated { offset: usize },
    #[error("element {tag} at byte {offset} has length {length} overrunning the stream")]
    LengthOverrun {
        tag: Tag,
        offset: usize,
        length: u32,
    },
    #[error("unexpected tag {tag} at byte {offset}")]
    UnexpectedTag { tag: Tag, offset: usize },
    #[error("element {tag} at byte {offset} is not in ascending tag order")]
    NonAscendingTags { tag: Tag, offset: usize },
    #[error("sequence nesting exceeds {MAX_DEPTH} levels at byte {offset}")]
    DepthExceeded { offset: usize },
    #[error("element {tag} has undefined length but is not a sequence or encapsulated value")]
    InvalidUndefinedLength { tag: Tag },
    #[error("unsupported transfer syntax {uid}")]
    UnsupportedTransferSyntax { uid: String },
    #[error("file meta group has no transfer syntax UID")]
    MissingTransferSyntax,
    #[error("element {tag} has an odd-length value ({length} bytes) and no pad instruction")]
    OddLength { tag: Tag, length: usize },
    #[error("element {tag} value of {length} bytes exceeds the 16-bit length field")]
    ValueTooLong { tag: Tag, length: usize },
    #[error("element {path} not found")]
    NotFound { path: TagPath },
    #[error("path step {tag}[{index}] does not address a sequence item")]
    NotASequence { tag: Tag, index: usize },
}

pub use dict::vr_for_tag;

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn tag_ordering_is_group_then_element() {
        let a = Tag::new(0x0008, 0x0020);
        let b = Tag::new(0x0008, 0x0030);
        let c = Tag::new(0x0010, 0x0010);
        assert!(a < b && b < c);
    }

    #[test]
    fn private_and_group_length_tags() {
        assert!(Tag::new(0x0009, 0x0001).is_private());
        assert!(!Tag::new(0x0010, 0x0010).is_private());
        assert!(Tag::new(0x0010, 0x0000).is_group_length());
    }

    #[test]
    fn padded_element_is_even() {
        let e = Element::new_padded(Tag::new(0x0010, 0x0020), Vr::LO, b"12345".to_vec());
        assert_eq!(e.value.as_bytes().unwrap(), b"12345 ");
        let u = Element::new_padded(Tag::new(0x0008, 0x0018), Vr::UI, b"1.2.3".to_vec());
        assert_eq!(u.value.as_bytes().unwrap(), b"1.2.3\0");
    }

    #[test]
    fn string_value_strips_padding() {
        let e = Element::new(Tag::new(0x0010, 0x0010), Vr::PN, b"DOE^JOHN ".to_vec());
        assert_eq!(e.string_value().unwrap(), "DOE^JOHN");
    }

    #[test]
    fn dataset_put_keeps_order() {
        let mut ds = DataSet::new(TransferSyntax::ExplicitLe);
        ds.put(Element::new(Tag::new(0x0010, 0x0020), Vr::LO, vec![]));
        ds.put(Element::new(Tag::new(0x0008, 0x0060), Vr::CS, vec![]));
        ds.put(Element::new(Tag::new(0x0010, 0x0010), Vr::PN, vec![]));
        let tags: Vec<Tag> = ds.elements.iter().map(|e| e.tag).collect();
        assert_eq!(
            tags,
            vec![
                Tag::new(0x0008, 0x0060),
                Tag::new(0x0010, 0x0010),
                Tag::new(0x0010, 0x0020)
            ]
        );
    }

    #[test]
    fn transfer_syntax_lookup() {
        assert_eq!(
            TransferSyntax::from_uid("1.2.840.10008.1.2").unwrap(),
            TransferSyntax::ImplicitLe
        );
        assert_eq!(
            TransferSyntax::from_uid("1.2.840.10008.1.2.1").unwrap(),
            TransferSyntax::ExplicitLe
        );
        assert!(matches!(
            TransferSyntax::from_uid("1.2.840.10008.1.2.4.50").unwrap(),
            TransferSyntax::Encapsulated(_)
        ));
        assert!(TransferSyntax::from_uid("1.2.840.10008.1.2.2").is_err());
    }
}
