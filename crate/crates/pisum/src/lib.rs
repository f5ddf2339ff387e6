//! Oracles, verification reports, and rendering for [`pisum_core`].
//!
//! The `pisum` binary is a thin wrapper over this library.

pub mod manifest;
pub mod oracle;
pub mod render;
pub mod report;
pub mod verify;
