//! Classification of super-alternative locally complex algebras: the even
//! part is recognized first, then the odd part is attached according to the
//! even part's type.

use num::{One, Zero};

use crate::algebra::{Algebra, Element};
use crate::cayley_dickson::Grading;
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::properties::{is_locally_complex, is_super_alternative};
use crate::rational::{int, Rational};
use crate::structure::decompose::Decomposition;
use crate::structure::recognize::standard_basis;
use crate::structure::{finalize, RecognitionResult, Tag};

pub fn classify_super_alternative(a: &Algebra, g: &Grading) -> Result<RecognitionResult> {
    g.validate(a)?;
    if !is_locally_complex(a)?.holds() {
        return Err(Error::NotLocallyComplex);
    }
    if !is_super_alternative(a, g)?.holds() {
        return Err(Error::NotSuperAlternative);
    }
    let (even_alg, rows) = a.restrict(&g.even)?;
    let (tag0, basis0) = standard_basis(&even_alg)?;
    // even-part coordinates back to the ambient algebra
    let lift = |x: &Element| Element::new(rows.transpose().mul_vec(x.coords()).expect("restriction shape"));
    let even: Vec<Element> = basis0.iter().map(lift).collect();
    if g.odd.is_zero() {
        return finalize(a, tag0, even);
    }
    if g.odd.dim() != g.even.dim() {
        return Err(Error::Inconsistent(format!(
            "odd part has dimension {} but even part has {}",
            g.odd.dim(),
            g.even.dim()
        )));
    }
    let d = Decomposition::new(a)?;
    let odd: Vec<Element> = g.odd.basis().iter().cloned().map(Element::new).collect();
    let imag = &even[1..];
    let (tag, basis) = match tag0 {
        Tag::R => {
            let f = d.extend_in(&odd, &[])?;
            (Tag::C, vec![even[0].clone(), f])
        }
        Tag::C => {
            let j = d.extend_with_orbit(&odd, imag, imag)?;
            let k = a.mul(&imag[0], &j);
            (Tag::H, vec![even[0].clone(), imag[0].clone(), j, k])
        }
        Tag::H => quaternion_even_part(a, &d, &even, &odd)?,
        Tag::O => octonion_even_part(a, &d, &even, &odd)?,
        other => return Err(Error::Inconsistent(format!("even part recognized as {other}"))),
    };
    finalize(a, tag, basis)
}

fn quaternion_even_part(a: &Algebra, d: &Decomposition<'_>, even: &[Element], odd: &[Element]) -> Result<(Tag, Vec<Element>)> {
    let (i, j, k) = (&even[1], &even[2], &even[3]);
    let f = d.extend_with_orbit(odd, &even[1..], &even[1..])?;
    let fi = a.mul(i, &f);
    let fj = a.mul(j, &f);
    let fk = a.mul(k, &f);
    let ijf = a.mul(i, &fj);
    let cols: Vec<Vec<Rational>> = [&f, &fi, &fj, &fk].iter().map(|e| e.coords().to_vec()).collect();
    let lambda = QMatrix::from_columns(&cols)?
        .solve(ijf.coords())
        .ok_or_else(|| Error::Inconsistent("i(jf) outside the odd part".into()))?;
    let tag = if lambda[3] == int(1) {
        Tag::TO
    } else if lambda[3] == int(-1) {
        Tag::O
    } else {
        return Err(Error::Inconsistent("coefficient of kf in i(jf) is not ±1".into()));
    };
    Ok((tag, vec![even[0].clone(), i.clone(), j.clone(), k.clone(), f, fi, fj, fk]))
}

fn octonion_even_part(a: &Algebra, d: &Decomposition<'_>, even: &[Element], odd: &[Element]) -> Result<(Tag, Vec<Element>)> {
    let e = |i: usize| &even[i];
    // q = p + (e_i e_j)(e_i(e_j p)) satisfies (e_i e_j) q = -e_i(e_j q)
    let remedy = |i: usize, j: usize, p: &Element| -> Element {
        let eij = a.mul(e(i), e(j));
        p + &a.mul(&eij, &a.mul(e(i), &a.mul(e(j), p)))
    };
    let u = odd
        .first()
        .ok_or_else(|| Error::Inconsistent("empty odd part".into()))?;
    let mut v = remedy(1, 2, u);
    if v.is_zero() {
        v = a.mul(e(3), u);
    }
    let mut w = remedy(1, 4, &v);
    if w.is_zero() {
        w = a.mul(e(2), &v);
    }
    let mut x = remedy(2, 4, &w);
    if x.is_zero() {
        x = a.mul(e(1), &w);
    }
    let y_prime = remedy(3, 4, &x);
    let y = if y_prime.is_zero() { x } else { y_prime };
    let sign = anticommutation_sign(a, e(3), e(4), &y)?;
    let y = normalize_in_solution_space(a, d, even, odd, &y, &sign)?;
    let tag = if sign.is_one() { Tag::TS } else { Tag::S };
    let mut basis: Vec<Element> = even.to_vec();
    basis.push(y.clone());
    for ei in &even[1..] {
        basis.push(a.mul(ei, &y));
    }
    Ok((tag, basis))
}

/// `eps` with `(e_i e_j) y = eps e_i(e_j y)`, which must be ±1.
fn anticommutation_sign(a: &Algebra, ei: &Element, ej: &Element, y: &Element) -> Result<Rational> {
    let lhs = a.mul(&a.mul(ei, ej), y);
    let rhs = a.mul(ei, &a.mul(ej, y));
    if lhs == rhs {
        Ok(Rational::one())
    } else if lhs == -rhs {
        Ok(-Rational::one())
    } else {
        Err(Error::Inconsistent("remedied odd element has no sign relation".into()))
    }
}

/// Scales `y` to `y^2 = -1`, or, if its norm is not a rational square, finds
/// a unit vector among the odd elements satisfying the same four relations.
fn normalize_in_solution_space(
    a: &Algebra,
    d: &Decomposition<'_>,
    even: &[Element],
    odd: &[Element],
    y: &Element,
    sign: &Rational,
) -> Result<Element> {
    if let Some(unit) = d.find_unit_vector(std::slice::from_ref(y)) {
        return Ok(unit);
    }
    let relations: [(usize, usize, Rational); 4] = [
        (1, 2, int(-1)),
        (1, 4, int(-1)),
        (2, 4, int(-1)),
        (3, 4, sign.clone()),
    ];
    // column k: stacked defects (e_i e_j) o_k - eps e_i(e_j o_k)
    let mut cols = Vec::with_capacity(odd.len());
    for o in odd {
        let mut col = Vec::with_capacity(4 * a.dim());
        for (i, j, eps) in &relations {
            let lhs = a.mul(&a.mul(&even[*i], &even[*j]), o);
            let rhs = a.mul(&even[*i], &a.mul(&even[*j], o));
            col.extend((&lhs - &rhs.scale(eps)).into_coords());
        }
        cols.push(col);
    }
    let m = QMatrix::from_columns(&cols)?;
    let solutions: Vec<Element> = m
        .kernel()
        .into_iter()
        .map(|c| {
            c.iter()
                .zip(odd)
                .filter(|(ci, _)| !ci.is_zero())
                .fold(Element::zero(a.dim()), |acc, (ci, o)| &acc + &o.scale(ci))
        })
        .collect();
    d.find_unit_vector(&solutions).ok_or(Error::NonSquareNorm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::named_algebra;

    #[test]
    fn catalogue_gradings_classify() {
        for (name, tag) in [("S", Tag::S), ("TO", Tag::TO), ("TS", Tag::TS), ("C", Tag::C), ("H", Tag::H), ("O", Tag::O)] {
            let n = named_algebra(name).unwrap();
            let r = classify_super_alternative(&n.algebra, n.grading.as_ref().unwrap()).unwrap();
            assert_eq!(r.tag, tag, "{name}");
        }
    }

    #[test]
    fn trivial_grading_of_octonions() {
        let o = named_algebra("O").unwrap().algebra;
        let r = classify_super_alternative(&o, &Grading::trivial(8)).unwrap();
        assert_eq!(r.tag, Tag::O);
    }
}
