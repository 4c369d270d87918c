pub mod error;
pub mod field;
pub mod hereditary;
pub mod linalg;

pub use error::{Error, Result};
pub use field::{Field, Fp, Q};
pub mod algebra;
pub mod approx;
pub mod arknit;
pub mod fixtures;
pub mod homological;
pub mod krull;
pub mod module;
pub mod registry;
pub mod tilting;
pub mod tiltquiver;
