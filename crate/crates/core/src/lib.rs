//! Exact arithmetic, local conductor formulas, number-field computations and
//! F2 group machinery for favorable quintic fields and their pair resolvents.

#![allow(clippy::needless_range_loop)]

pub mod curves;
pub mod error;
pub mod exact_core;
pub mod f2_groups;
pub mod field_lab;
pub mod fixtures;
pub mod honda_ext;
pub mod local_conductors;
pub mod resolvent;
mod serde_big;

pub use error::{Error, Result};
pub use exact_core::{F2Matrix, FiniteField, IntPoly};

pub use field_lab::{ClassUnitData, NumberFieldData, PrimeSplitting, RayClassRank};
pub use resolvent::{QuinticReport, ResolventField};
