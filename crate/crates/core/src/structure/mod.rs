//! Constructive structure theory: the `R + U` splitting, recognition of the
//! alternative division algebras, the super-alternative classifier,
//! annihilators and zero divisors, alter-scalars, and homomorphism checks.

pub mod annihilator;
pub mod decompose;
pub mod embedding;
pub mod recognize;
pub mod superalt;

use std::fmt;

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::cayley_dickson::named_algebra;
use crate::error::{Error, Result};
use crate::matrix::QMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Tag {
    R,
    C,
    H,
    O,
    TO,
    S,
    TS,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::R => "R",
            Tag::C => "C",
            Tag::H => "H",
            Tag::O => "O",
            Tag::TO => "TO",
            Tag::S => "S",
            Tag::TS => "TS",
        }
    }

    pub fn algebra(self) -> Algebra {
        named_algebra(self.name()).expect("catalogue contains every tag").algebra
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The isomorphism type together with an explicit isomorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct RecognitionResult {
    pub tag: Tag,
    /// Maps coordinates in the input algebra to coordinates in the named one.
    pub iso: QMatrix,
    /// Preimages of the named basis `1, e_1, ...` in the input algebra.
    pub basis: Vec<Element>,
}

/// Builds the iso from the constructed basis and checks it exactly.
pub(crate) fn finalize(a: &Algebra, tag: Tag, basis: Vec<Element>) -> Result<RecognitionResult> {
    let target = tag.algebra();
    if basis.len() != target.dim() || basis.len() != a.dim() {
        return Err(Error::Inconsistent(format!(
            "constructed {} basis vectors for {} in dimension {}",
            basis.len(),
            tag,
            a.dim()
        )));
    }
    let cols: Vec<Vec<_>> = basis.iter().map(|e| e.coords().to_vec()).collect();
    let p = QMatrix::from_columns(&cols)?;
    let iso = p
        .inverse()
        .map_err(|_| Error::Inconsistent(format!("constructed {tag} basis is dependent")))?;
    match embedding::check_homomorphism(&iso, a, &target)? {
        crate::properties::Check::Holds => Ok(RecognitionResult { tag, iso, basis }),
        crate::properties::Check::Fails(f) => Err(Error::Inconsistent(format!(
            "constructed map to {tag} is not multiplicative: {f:?}"
        ))),
    }
}
