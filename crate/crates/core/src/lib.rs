//! Exact verification of parameter-dependent Yang-Baxter maps: the maps
//! themselves, their transfer dynamics and Lax matrices, and seeded
//! property checkers over the rationals.

pub mod algebra;
pub mod catalog;
pub mod lax;
pub mod orbit;
pub mod report;
pub mod suite;
pub mod yb;
