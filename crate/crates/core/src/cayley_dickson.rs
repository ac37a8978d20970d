//! The Cayley-Dickson doubling, Z/2 gradings, and the catalogue of named
//! algebras (R, C, H, O, S, A_n, the two tilde algebras, J_n).

use num::{One, Zero};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::{int, Rational};
use crate::subspace::Subspace;
use crate::tables::{parse_signed_table, TILDE_OCTONION_TABLE, TILDE_SEDENION_TABLE};

/// An algebra together with a linear involution `*`, stored as a matrix
/// acting on coordinate columns.
#[derive(Clone, Debug)]
pub struct InvolutiveAlgebra {
    algebra: Algebra,
    star: QMatrix,
}

impl InvolutiveAlgebra {
    /// Validates `** = id`, `(ab)* = b* a*` on basis pairs, and that `x + x*`
    /// and `x x* = x* x` are scalars for basis elements and their pairwise sums.
    pub fn new(algebra: Algebra, star: QMatrix) -> Result<Self> {
        let n = algebra.dim();
        if star.nrows() != n || star.ncols() != n {
            return Err(Error::InvalidInvolution("star matrix has wrong shape".into()));
        }
        algebra.unit_element()?;
        let ia = InvolutiveAlgebra { algebra, star };
        if ia.star.mul(&ia.star)? != QMatrix::identity(n) {
            return Err(Error::InvalidInvolution("star is not an involution".into()));
        }
        let basis: Vec<Element> = (0..n).map(|i| Element::basis(n, i)).collect();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let lhs = ia.apply(&ia.algebra.mul(a, b));
                let rhs = ia.algebra.mul(&ia.apply(b), &ia.apply(a));
                if lhs != rhs {
                    return Err(Error::InvalidInvolution(format!(
                        "(e{i} e{j})* != e{j}* e{i}*"
                    )));
                }
            }
        }
        let mut samples = basis.clone();
        for i in 0..n {
            for j in i + 1..n {
                samples.push(&basis[i] + &basis[j]);
            }
        }
        for x in &samples {
            let xs = ia.apply(x);
            let sum = x + &xs;
            let p = ia.algebra.mul(x, &xs);
            let q = ia.algebra.mul(&xs, x);
            if ia.algebra.scalar_value(&sum).is_none() || ia.algebra.scalar_value(&p).is_none() || p != q
            {
                return Err(Error::InvalidInvolution(format!(
                    "x + x* or x x* not scalar for x = {x:?}"
                )));
            }
        }
        Ok(ia)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn star(&self) -> &QMatrix {
        &self.star
    }

    pub fn into_parts(self) -> (Algebra, QMatrix) {
        (self.algebra, self.star)
    }

    pub fn apply(&self, x: &Element) -> Element {
        Element::new(self.star.mul_vec(x.coords()).expect("star matches algebra dimension"))
    }

    /// `x*`, with a length check.
    pub fn involution_apply(&self, x: &Element) -> Result<Element> {
        if x.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.algebra.dim(),
                found: x.len(),
            });
        }
        Ok(self.apply(x))
    }
}

/// The reals with the trivial involution.
pub fn real() -> InvolutiveAlgebra {
    let alg = Algebra::new(1, vec![Rational::one()], Some(0))
        .and_then(|a| a.with_labels(vec!["1".into()]))
        .expect("R is well formed");
    InvolutiveAlgebra {
        algebra: alg,
        star: QMatrix::identity(1),
    }
}

fn split(x: &Element, m: usize) -> (Element, Element) {
    let c = x.coords();
    (Element::new(c[..m].to_vec()), Element::new(c[m..].to_vec()))
}

fn join(a: &Element, b: &Element) -> Element {
    let mut v = a.coords().to_vec();
    v.extend_from_slice(b.coords());
    Element::new(v)
}

/// One doubling step: pairs `(a, b)` with
/// `(a,b)(c,d) = (ac - d* b, da + b c*)` and `(a,b)* = (a*, -b)`.
/// Basis index `i < m` is `(e_i, 0)`, index `m + i` is `(0, e_i)`.
pub fn cayley_dickson(base: &InvolutiveAlgebra) -> Result<InvolutiveAlgebra> {
    let b = &base.algebra;
    let m = b.dim();
    let unit = b.unit().ok_or(Error::NotUnital)?;
    if base.star.nrows() != m || base.star.mul(&base.star)? != QMatrix::identity(m) {
        return Err(Error::InvalidInvolution("base involution is invalid".into()));
    }
    let n = 2 * m;
    let algebra = Algebra::from_fn(n, Some(unit), |i, j| {
        let (a, bb) = split(&Element::basis(n, i), m);
        let (c, d) = split(&Element::basis(n, j), m);
        let first = &b.mul(&a, &c) - &b.mul(&base.apply(&d), &bb);
        let second = &b.mul(&d, &a) + &b.mul(&bb, &base.apply(&c));
        join(&first, &second).into_coords()
    })?;
    let mut star = QMatrix::zeros(n, n);
    for i in 0..m {
        for j in 0..m {
            star[(i, j)] = base.star[(i, j)].clone();
        }
        star[(m + i, m + i)] = -Rational::one();
    }
    let labels = (0..n)
        .map(|i| if i == unit { "1".to_string() } else { format!("e{i}") })
        .collect();
    Ok(InvolutiveAlgebra {
        algebra: algebra.with_labels(labels)?,
        star,
    })
}

/// `A_n`: `n` doublings of R.
pub fn cayley_dickson_tower(n: usize) -> InvolutiveAlgebra {
    let mut a = real();
    for _ in 0..n {
        a = cayley_dickson(&a).expect("doubling a valid involutive algebra");
    }
    a
}

/// A Z/2 grading `A = A_0 + A_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub even: Subspace,
    pub odd: Subspace,
}

impl Grading {
    pub fn new(even: Subspace, odd: Subspace) -> Self {
        Grading { even, odd }
    }

    pub fn from_indices(dim: usize, even: &[usize], odd: &[usize]) -> Result<Self> {
        Ok(Grading {
            even: Subspace::coordinate(dim, even)?,
            odd: Subspace::coordinate(dim, odd)?,
        })
    }

    /// Everything even.
    pub fn trivial(dim: usize) -> Self {
        Grading {
            even: Subspace::full(dim),
            odd: Subspace::zero(dim),
        }
    }

    /// First half even, second half odd, as produced by a doubling step.
    pub fn natural(dim: usize) -> Result<Self> {
        if dim < 2 || dim % 2 != 0 {
            return Err(Error::InvalidGrading(format!("dimension {dim} is not a doubling")));
        }
        let h = dim / 2;
        Self::from_indices(dim, &(0..h).collect::<Vec<_>>(), &(h..dim).collect::<Vec<_>>())
    }

    /// Checks the direct sum, `1 in A_0`, and `A_i A_j ⊆ A_{i+j}` on basis products.
    pub fn validate(&self, a: &Algebra) -> Result<()> {
        let n = a.dim();
        if self.even.ambient() != n || self.odd.ambient() != n {
            return Err(Error::InvalidGrading("ambient dimension mismatch".into()));
        }
        if self.even.dim() + self.odd.dim() != n || self.even.join(&self.odd)?.dim() != n {
            return Err(Error::InvalidGrading("parts do not form a direct sum".into()));
        }
        if let Ok(one) = a.unit_element() {
            if !self.even.contains(one.coords()) {
                return Err(Error::InvalidGrading("unit is not even".into()));
            }
        }
        let parts = [&self.even, &self.odd];
        for (pi, p) in parts.iter().enumerate() {
            for (qi, q) in parts.iter().enumerate() {
                let target = parts[(pi + qi) % 2];
                for x in p.basis() {
                    for y in q.basis() {
                        let prod = a.mul(&Element::new(x.clone()), &Element::new(y.clone()));
                        if !target.contains(prod.coords()) {
                            return Err(Error::InvalidGrading(format!(
                                "product of degree {pi} and {qi} elements leaves degree {}",
                                (pi + qi) % 2
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Homogeneous elements used by identity checks: basis vectors of each part.
    pub fn homogeneous_basis(&self) -> Vec<(usize, Element)> {
        let mut out = Vec::new();
        for (deg, part) in [(0, &self.even), (1, &self.odd)] {
            for v in part.basis() {
                out.push((deg, Element::new(v.clone())));
            }
        }
        out
    }
}

/// A catalogue algebra together with its grading and involution, when defined.
#[derive(Clone, Debug)]
pub struct NamedAlgebra {
    pub name: String,
    pub algebra: Algebra,
    pub grading: Option<Grading>,
    pub involution: Option<QMatrix>,
}

/// `J_k`: basis `1, e1..e_{k-1}` with `e_i e_j = -delta_ij`.
pub fn jordan_spin(k: usize) -> Result<Algebra> {
    if k == 0 {
        return Err(Error::InvalidConstants("J_k needs k >= 1".into()));
    }
    let alg = Algebra::from_fn(k, Some(0), |i, j| {
        let mut v = vec![Rational::zero(); k];
        match (i, j) {
            (0, x) | (x, 0) => v[x] = Rational::one(),
            (a, b) if a == b => v[0] = int(-1),
            _ => {}
        }
        v
    })?;
    let labels = (0..k)
        .map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") })
        .collect();
    alg.with_labels(labels)
}

pub fn tilde_octonions() -> Algebra {
    parse_signed_table(TILDE_OCTONION_TABLE, "f").expect("built-in table is well formed")
}

pub fn tilde_sedenions() -> Algebra {
    parse_signed_table(TILDE_SEDENION_TABLE, "f").expect("built-in table is well formed")
}

fn cd_named(name: &str, n: usize) -> Result<NamedAlgebra> {
    let (algebra, star) = cayley_dickson_tower(n).into_parts();
    let dim = algebra.dim();
    let grading = if n == 0 {
        Grading::trivial(1)
    } else {
        Grading::natural(dim)?
    };
    Ok(NamedAlgebra {
        name: name.to_string(),
        algebra,
        grading: Some(grading),
        involution: Some(star),
    })
}

/// Looks up `R, C, H, O, S, A0..A6, TO, TS, J<k>` (case-insensitive;
/// `J_k` and `J(k)` are accepted too).
pub fn named_algebra(name: &str) -> Result<NamedAlgebra> {
    let key = name.trim().to_ascii_uppercase().replace('_', "");
    let unknown = || Error::UnknownAlgebra(name.to_string());
    match key.as_str() {
        "R" => cd_named("R", 0),
        "C" => cd_named("C", 1),
        "H" => cd_named("H", 2),
        "O" => cd_named("O", 3),
        "S" => cd_named("S", 4),
        "TO" => {
            let algebra = tilde_octonions();
            let grading = Grading::from_indices(8, &[0, 1, 2, 3], &[4, 5, 6, 7])?;
            Ok(NamedAlgebra {
                name: "TO".into(),
                algebra,
                grading: Some(grading),
                involution: None,
            })
        }
        "TS" => {
            let algebra = tilde_sedenions();
            let grading =
                Grading::from_indices(16, &(0..8).collect::<Vec<_>>(), &(8..16).collect::<Vec<_>>())?;
            Ok(NamedAlgebra {
                name: "TS".into(),
                algebra,
                grading: Some(grading),
                involution: None,
            })
        }
        _ => {
            if let Some(rest) = key.strip_prefix('A') {
                let n: usize = rest.parse().map_err(|_| unknown())?;
                if n > 6 {
                    return Err(unknown());
                }
                return cd_named(&format!("A{n}"), n);
            }
            if let Some(rest) = key.strip_prefix('J') {
                let rest = rest.trim_start_matches('(').trim_end_matches(')');
                let k: usize = rest.parse().map_err(|_| unknown())?;
                let algebra = jordan_spin(k)?;
                return Ok(NamedAlgebra {
                    name: format!("J{k}"),
                    algebra,
                    grading: None,
                    involution: None,
                });
            }
            Err(unknown())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn doubling_r_gives_complex_numbers() {
        let c = cayley_dickson(&real()).unwrap();
        let a = c.algebra();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.unit(), Some(0));
        let e = Element::basis(2, 1);
        assert_eq!(a.mul(&e, &e), Element::from_i64(&[-1, 0]));
    }

    #[test]
    fn star_negates_imaginary_units() {
        let o = cayley_dickson_tower(3);
        let one = Element::basis(8, 0);
        assert_eq!(o.involution_apply(&one).unwrap(), one);
        assert_eq!(o.apply(&Element::basis(8, 3)), -Element::basis(8, 3));
        let s = cayley_dickson_tower(4);
        let mut x = Element::basis(16, 5);
        x = &x + &Element::basis(16, 0).scale(&int(2));
        let sum = &x + &s.apply(&x);
        assert_eq!(sum, Element::basis(16, 0).scale(&int(4)));
    }

    #[test]
    fn tower_outputs_pass_involution_validation() {
        for n in 0..=4 {
            let t = cayley_dickson_tower(n);
            let (a, star) = t.into_parts();
            assert_eq!(a.dim(), 1 << n);
            InvolutiveAlgebra::new(a, star).unwrap();
        }
    }

    #[test]
    fn natural_gradings_are_valid() {
        for n in 1..=4 {
            let t = cayley_dickson_tower(n);
            Grading::natural(t.algebra().dim()).unwrap().validate(t.algebra()).unwrap();
        }
    }

    #[test]
    fn bogus_grading_rejected() {
        let h = cayley_dickson_tower(2);
        let g = Grading::from_indices(4, &[0, 1], &[2]).unwrap();
        assert!(g.validate(h.algebra()).is_err());
        let g = Grading::from_indices(4, &[0, 2], &[1, 3]).unwrap();
        g.validate(h.algebra()).unwrap();
        let g = Grading::from_indices(4, &[1, 2], &[0, 3]).unwrap();
        assert!(g.validate(h.algebra()).is_err());
    }

    #[test]
    fn doubling_matches_literal_tables() {
        use crate::tables::{OCTONION_TABLE, SEDENION_TABLE};
        let o = parse_signed_table(OCTONION_TABLE, "e").unwrap();
        assert_eq!(cayley_dickson_tower(3).algebra().constants(), o.constants());
        let s = parse_signed_table(SEDENION_TABLE, "e").unwrap();
        assert_eq!(cayley_dickson_tower(4).algebra().constants(), s.constants());
    }

    #[test]
    fn named_lookup() {
        let to = named_algebra("TO").unwrap();
        let a = &to.algebra;
        assert_eq!(a.mul(&a.basis_element(5), &a.basis_element(6)), a.basis_element(3));
        let ts = named_algebra("ts").unwrap();
        let b = &ts.algebra;
        assert_eq!(b.mul(&b.basis_element(9), &b.basis_element(4)), -b.basis_element(13));
        let j3 = named_algebra("J_3").unwrap().algebra;
        assert!(j3.mul(&j3.basis_element(1), &j3.basis_element(2)).is_zero());
        assert_eq!(named_algebra("A5").unwrap().algebra.dim(), 32);
        assert!(matches!(named_algebra("Z"), Err(Error::UnknownAlgebra(_))));
        for g in [&to.grading, &ts.grading] {
            g.as_ref().unwrap().validate(if g == &to.grading { a } else { b }).unwrap();
        }
    }
}
