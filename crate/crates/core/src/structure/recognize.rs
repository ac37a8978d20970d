//! Recognition of alternative locally complex algebras as R, C, H or O by
//! building the standard basis `i, j, k = ij, e_4, e_5 = e_1 e_4, ...`.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::properties::{is_alternative, is_locally_complex};
use crate::structure::decompose::Decomposition;
use crate::structure::{finalize, RecognitionResult, Tag};

pub fn recognize_alternative_division(a: &Algebra) -> Result<RecognitionResult> {
    a.unit_element()?;
    if !is_locally_complex(a)?.holds() {
        return Err(Error::NotLocallyComplex);
    }
    if !is_alternative(a).holds() {
        return Err(Error::NotAlternative);
    }
    let (tag, basis) = standard_basis(a)?;
    finalize(a, tag, basis)
}

/// `1, e_1, ..., e_{n-1}` matching the catalogue table of the returned tag.
/// Assumes the algebra is alternative and locally complex.
pub(crate) fn standard_basis(a: &Algebra) -> Result<(Tag, Vec<Element>)> {
    let d = Decomposition::new(a)?;
    let pool = d.u_basis().to_vec();
    let one = d.one().clone();
    let tag = match a.dim() {
        1 => return Ok((Tag::R, vec![one])),
        2 => Tag::C,
        4 => Tag::H,
        8 => Tag::O,
        n => return Err(Error::Inconsistent(format!("alternative locally complex algebra of dimension {n}"))),
    };
    let i = d.extend_in(&pool, &[])?;
    if tag == Tag::C {
        return Ok((tag, vec![one, i]));
    }
    let j = d.extend_with_orbit(&pool, &[i.clone()], &[i.clone()])?;
    let k = a.mul(&i, &j);
    if tag == Tag::H {
        return Ok((tag, vec![one, i, j, k]));
    }
    let e4 = d.extend_with_orbit(&pool, &[i.clone(), j.clone(), k.clone()], &[i.clone(), j.clone(), k.clone()])?;
    let e5 = a.mul(&i, &e4);
    let e6 = a.mul(&j, &e4);
    let e7 = a.mul(&k, &e4);
    Ok((tag, vec![one, i, j, k, e4, e5, e6, e7]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::named_algebra;
    use crate::matrix::QMatrix;

    #[test]
    fn named_algebras_are_recognized() {
        for (name, tag) in [("R", Tag::R), ("C", Tag::C), ("H", Tag::H), ("O", Tag::O)] {
            let a = named_algebra(name).unwrap().algebra;
            let r = recognize_alternative_division(&a).unwrap();
            assert_eq!(r.tag, tag);
        }
        let r = recognize_alternative_division(&named_algebra("R").unwrap().algebra).unwrap();
        assert_eq!(r.iso, QMatrix::identity(1));
    }

    #[test]
    fn sedenions_are_rejected() {
        let s = named_algebra("S").unwrap().algebra;
        assert_eq!(recognize_alternative_division(&s).unwrap_err(), Error::NotAlternative);
    }
}
