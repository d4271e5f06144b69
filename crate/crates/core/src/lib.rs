//! Weyl group conjugacy classes, unipotent classes and the map Φ between them,
//! with exact-arithmetic witnesses and brute-force checks over finite fields.

pub mod error;
pub mod elliptic;
pub mod field;
pub mod fq;
pub mod isometry;
pub mod matrix;
pub mod partition;
pub mod phi;
pub mod poly;
pub mod tables;
pub mod unipotent;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};

/// Upper bound on the size of any exhaustive enumeration, read from
/// `WEYLPHI_BUDGET` (default one million).
pub fn enumeration_budget() -> u64 {
    std::env::var("WEYLPHI_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(1_000_000)
}
