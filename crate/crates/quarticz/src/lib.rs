//! Verification toolkit for the Fermat quartic Z₀⁴ − Z₁⁴ + Z₂⁴ − Z₃⁴ = 0,
//! the Siegel modular threefold Z ⊂ P⁷ built from genus-2 theta constants,
//! and the weight-3 CM newform of level 16 that governs both.

pub mod arith;
pub mod error;
pub mod theta;

pub use error::{Error, Result};
pub mod pointcount;
pub mod cmform;
pub mod lfactors;
pub mod soudry;
pub mod verify;
