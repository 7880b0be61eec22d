//! Exact verification of hypergeometric identities pulled back along Belyi
//! coverings: number-field towers, truncated series, ₃F₂ machinery, the
//! genus-2 curve H₇ and a registry of named checks.

pub mod belyi;
pub mod cli;
pub mod curve;
pub mod error;
pub mod exactfield;
pub mod hypergeom;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
