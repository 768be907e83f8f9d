//! serkit — a speech emotion recognition toolkit.
//!
//! The crate covers the full experimental pipeline: deterministic audio
//! ingestion and DSP ([`signal`]), IS09 utterance vectors and MFCC sequences
//! ([`features`]), manifest-driven corpora with speaker-disjoint splits and a
//! synthetic corpus generator ([`corpus`]), a small exact-gradient neural
//! substrate ([`nn`]), three classifier families plus frozen-trunk transfer
//! and multi-task training ([`classifiers`]), metrics and report tables
//! ([`eval`]), and the batch CLI layer ([`config`], [`bundle`], [`runner`]).
//!
//! Every operation is deterministic given (data, config, seed): reruns produce
//! byte-identical feature caches, model bundles, and result files.

pub mod signal;
pub mod util;

pub use signal::{SignalError, Waveform};
