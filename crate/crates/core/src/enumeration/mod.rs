//! Canonical forms, isomorph-free generation of connected graphs, corpus
//! verification and the search for graphs exceeding `max(ω, Δ − 1)`.

pub mod canon;
pub mod exceptions;
pub mod generate;
pub mod verify;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use exceptions::{find_exceptions, ExceptionCatalog, ExceptionEntry, LevelSummary};
pub use generate::{
    generate_connected, generate_connected_filtered, levels, ClassFilter, MAX_ORDER,
};
pub use verify::{graph6_lines, verify_theorem, VerificationReport, VerifyParams};
