//! Locally complex algebras of dimension three and four.

pub mod four;
pub mod geometry;
pub mod three;

pub use four::{build_a_tu, extract_tu, Params4};
pub use geometry::{equiv_4d, geometric_type, is_division_4d, FloatParams4};
pub use three::{build_a_ts, canonical_3d, iso_3d, CanonicalForm3};
