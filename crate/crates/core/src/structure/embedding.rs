//! Homomorphism checks and a bounded search for subalgebras.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::properties::Check;
use crate::rational::int;

#[derive(Clone, Debug, PartialEq)]
pub enum HomFailure {
    /// The unit is not sent to the unit.
    Unit,
    /// `map(e_i e_j) != map(e_i) map(e_j)`.
    Product { i: usize, j: usize, expected: Element, found: Element },
    /// The map has a kernel.
    NotInjective { rank: usize },
}

/// `map` is `dim B x dim A`; column `i` is the image of the `i`-th basis
/// vector of `A`. Checks unit, products on all basis pairs, and injectivity.
pub fn check_homomorphism(map: &QMatrix, a: &Algebra, b: &Algebra) -> Result<Check<HomFailure>> {
    if map.nrows() != b.dim() || map.ncols() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim() * a.dim(),
            found: map.nrows() * map.ncols(),
        });
    }
    let image = |x: &Element| Element::new(map.mul_vec(x.coords()).expect("shape checked"));
    if let (Ok(one_a), Ok(one_b)) = (a.unit_element(), b.unit_element()) {
        if image(&one_a) != one_b {
            return Ok(Check::Fails(HomFailure::Unit));
        }
    } else if a.unit().is_some() {
        return Ok(Check::Fails(HomFailure::Unit));
    }
    let imgs: Vec<Element> = (0..a.dim()).map(|i| Element::new(map.col_vec(i))).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let expected = image(&a.basis_product(i, j));
            let found = b.mul(&imgs[i], &imgs[j]);
            if expected != found {
                return Ok(Check::Fails(HomFailure::Product { i, j, expected, found }));
            }
        }
    }
    let rank = map.rank();
    if rank < a.dim() {
        return Ok(Check::Fails(HomFailure::NotInjective { rank }));
    }
    Ok(Check::Holds)
}

/// The map `TO -> S` sending `f_i -> e_i` for `i <= 3` and
/// `f_4, f_5, f_6, f_7 -> e_12, -e_13, -e_14, -e_15`.
pub fn tilde_octonion_embedding() -> QMatrix {
    let mut m = QMatrix::zeros(16, 8);
    for i in 0..4 {
        m[(i, i)] = int(1);
    }
    m[(12, 4)] = int(1);
    m[(13, 5)] = int(-1);
    m[(14, 6)] = int(-1);
    m[(15, 7)] = int(-1);
    m
}

/// Result of [`subalgebra_census`]: for each requested dimension, the first
/// generator set found whose generated subalgebra has that dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Census {
    pub found: BTreeMap<usize, Vec<Element>>,
    pub missing: Vec<usize>,
    pub candidates_tried: usize,
}

/// Closes candidate generator sets (the supplied spans first, then basis
/// vectors, basis pairs and `e_i ± e_j` pairs, then seeded random pairs)
/// and records which target dimensions occur. Never claims nonexistence.
pub fn subalgebra_census(
    a: &Algebra,
    dims: &[usize],
    extra: &[Vec<Element>],
    budget: usize,
    seed: u64,
) -> Result<Census> {
    let n = a.dim();
    let mut found: BTreeMap<usize, Vec<Element>> = BTreeMap::new();
    let wanted = |found: &BTreeMap<usize, Vec<Element>>| dims.iter().any(|d| !found.contains_key(d));
    let mut tried = 0usize;
    let mut consider = |gens: Vec<Element>, found: &mut BTreeMap<usize, Vec<Element>>| -> Result<()> {
        tried += 1;
        let sub = a.generated_subalgebra(&gens, a.unit().is_some())?;
        if dims.contains(&sub.dim()) && !found.contains_key(&sub.dim()) {
            found.insert(sub.dim(), gens);
        }
        Ok(())
    };
    for gens in extra {
        consider(gens.clone(), &mut found)?;
    }
    let e = |i: usize| Element::basis(n, i);
    let mut structured: Vec<Vec<Element>> = vec![vec![]];
    for i in 0..n {
        structured.push(vec![e(i)]);
    }
    for i in 0..n {
        for j in i + 1..n {
            structured.push(vec![e(i), e(j)]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            structured.push(vec![&e(i) + &e(j)]);
            structured.push(vec![&e(i) - &e(j)]);
        }
    }
    for gens in structured {
        if !wanted(&found) {
            break;
        }
        consider(gens, &mut found)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        if !wanted(&found) {
            break;
        }
        let mut random = || Element::new((0..n).map(|_| int(rng.gen_range(-2..=2))).collect());
        let gens = vec![random(), random()];
        consider(gens, &mut found)?;
    }
    let missing = dims.iter().copied().filter(|d| !found.contains_key(d)).collect();
    Ok(Census {
        found,
        missing,
        candidates_tried: tried,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::named_algebra;

    #[test]
    fn identity_is_a_homomorphism() {
        let o = named_algebra("O").unwrap().algebra;
        assert!(check_homomorphism(&QMatrix::identity(8), &o, &o).unwrap().holds());
    }

    #[test]
    fn tilde_octonions_embed_in_sedenions() {
        let to = named_algebra("TO").unwrap().algebra;
        let s = named_algebra("S").unwrap().algebra;
        let m = tilde_octonion_embedding();
        assert!(check_homomorphism(&m, &to, &s).unwrap().holds());
        let mut bad = m.clone();
        bad[(13, 5)] = int(1);
        match check_homomorphism(&bad, &to, &s).unwrap() {
            Check::Fails(HomFailure::Product { expected, found, .. }) => assert_ne!(expected, found),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn census_finds_quaternion_subalgebra() {
        let o = named_algebra("O").unwrap().algebra;
        let c = subalgebra_census(&o, &[1, 4], &[], 0, 1).unwrap();
        assert!(c.missing.is_empty());
        assert_eq!(c.found[&1], Vec::<Element>::new());
    }
}
