//! Folded ribbon knots in the plane: multi-twist Möbius bands, (2,q)-torus
//! knots and twist knots built from accordions, half-wraps and clasps.
//!
//! Ribbon width is fixed at 1, so the ribbonlength of a diagram is the length
//! of its closed centerline.

pub mod analysis;
pub mod construction;
pub mod error;
pub mod export;
pub mod geometry;

pub use analysis::*;
pub use construction::*;
pub use error::{Result, RibbonError};
pub use export::*;
pub use geometry::*;
