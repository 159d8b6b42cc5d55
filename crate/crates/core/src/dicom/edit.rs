//! Targeted element edits, the substrate the de-identification actions
//! build on.

use alloc::vec::Vec;

use super::{DataSet, DicomError, Element, TagPath, Value, Vr};

/// An edit applied to the element addressed by a [`TagPath`].
#[derive(Clone, Debug)]
pub enum EditOp {
    /// Delete the element entirely (a sequence loses its whole subtree).
    Remove,
    /// Replace the value of an existing element, padding to even length.
    /// Fails with [`DicomError::NotFound`] when the element is absent.
    Replace(Vec<u8>),
    /// Insert a new element (or overwrite an existing one), padding to even
    /// length and preserving tag order.
    Insert { vr: Vr, value: Vec<u8> },
}

/// Apply `op` to the element at `path`. Nested paths address sequence items
/// by index.
pub fn edit_element(ds: &mut DataSet, path: &TagPath, op: EditOp) -> Result<(), DicomError> {
    let elements = resolve_mut(&mut ds.elements, path)?;
    apply(elements, path, op)
}

fn resolve_mut<'a>(
    elements: &'a mut Vec<Element>,
    path: &TagPath,
) -> Result<&'a mut Vec<Element>, DicomError> {
    let mut current = elements;
    for &(tag, index) in &path.steps {
        let pos = current
            .iter()
            .position(|e| e.tag == tag)
            .ok_or_else(|| DicomError::NotFound { path: path.clone() })?;
        match &mut current[pos].value {
            Value::Sequence(items) => {
                let item = items
                    .get_mut(index)
                    .ok_or(DicomError::NotASequence { tag, index })?;
                current = &mut item.elements;
            }
            _ => return Err(DicomError::NotASequence { tag, index }),
        }
    }
    Ok(current)
}

fn apply(elements: &mut Vec<Element>, path: &TagPath, op: EditOp) -> Result<(), DicomError> {
    let tag = path.leaf;
    let pos = elements.binary_search_by(|e| e.tag.cmp(&tag));
    match op {
        EditOp::Remove => {
            if let Ok(i) = pos {
                elements.remove(i);
            }
            Ok(())
        }
        EditOp::Replace(value) => match pos {
            Ok(i) => {
                let vr = elements[i].vr;
                elements[i] = Element::new_padded(tag, vr, value);
                Ok(())
            }
            Err(_) => Err(DicomError::NotFound { path: path.clone() }),
        },
        EditOp::Insert { vr, value } => {
            let e = Element::new_padded(tag, vr, value);
            match pos {
                Ok(i) => elements[i] = e,
                Err(i) => elements.insert(i, e),
            }
            Ok(())
        }
    }
}
