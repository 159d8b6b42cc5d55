//! Core algorithms for batch de-identification of medical imaging data.
//!
//! This crate holds everything that operates on in-memory buffers: DICOM
//! Part-10 parsing and serialization, rule-driven metadata scrubbing, NIfTI-1
//! volume I/O, Siemens twix header scrubbing, morphological skull-stripping
//! and defacing, burned-in text redaction, and DICOM-WSI pixel cleaning.
//!
//! The crate is `no_std` (with `alloc`) so the algorithmic core stays free of
//! filesystem, process, and clock dependencies; the companion CLI crate
//! supplies those.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod deid;
pub mod dicom;
pub mod nifti;
pub mod redact;
pub mod synth;
pub mod twix;
pub mod volume;
pub mod wsi;
