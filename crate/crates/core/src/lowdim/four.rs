//! Four-dimensional locally complex algebras `A_{T,u}`, exact layer.

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::properties::is_locally_complex;
use crate::rational::{format_rational, int, parse_rational, to_f64, Rational};
use crate::structure::decompose::Decomposition;

/// Pairs `(a, b, c)` with `e_a x e_b = e_c`, zero-based.
const CYCLIC: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params4 {
    pub t: QMatrix,
    pub u: Vec<Rational>,
}

impl Params4 {
    pub fn new(t: QMatrix, u: Vec<Rational>) -> Result<Self> {
        if t.nrows() != 3 || t.ncols() != 3 {
            return Err(Error::DimensionMismatch { expected: 9, found: t.nrows() * t.ncols() });
        }
        if u.len() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: u.len() });
        }
        Ok(Params4 { t, u })
    }

    pub fn from_i64(t: [[i64; 3]; 3], u: [i64; 3]) -> Self {
        let rows: Vec<&[i64]> = t.iter().map(|r| r.as_slice()).collect();
        Params4 {
            t: QMatrix::from_i64(&rows),
            u: u.iter().map(|&x| int(x)).collect(),
        }
    }

    /// `P = (T + T^T) / 2`.
    pub fn symmetric_part(&self) -> QMatrix {
        self.t
            .add(&self.t.transpose())
            .expect("square")
            .scale(&crate::rational::half())
    }

    pub fn skew_part(&self) -> QMatrix {
        self.t
            .sub(&self.t.transpose())
            .expect("square")
            .scale(&crate::rational::half())
    }

    pub fn to_f64(&self) -> super::geometry::FloatParams4 {
        let t = nalgebra::Matrix3::from_fn(|i, j| to_f64(&self.t[(i, j)]));
        let u = nalgebra::Vector3::from_fn(|i, _| to_f64(&self.u[i]));
        super::geometry::FloatParams4 { t, u }
    }
}

/// Text form used in JSON: `{"T": [["1","0","0"], ...], "u": ["0","0","0"]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Params4Text {
    #[serde(rename = "T")]
    pub t: Vec<Vec<String>>,
    pub u: Vec<String>,
}

impl From<&Params4> for Params4Text {
    fn from(p: &Params4) -> Self {
        Params4Text {
            t: p.t.rows_vec().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
            u: p.u.iter().map(format_rational).collect(),
        }
    }
}

impl TryFrom<&Params4Text> for Params4 {
    type Error = Error;

    fn try_from(p: &Params4Text) -> Result<Self> {
        let parse = |s: &String| parse_rational(s).map_err(Error::from);
        let rows = p
            .t
            .iter()
            .map(|r| r.iter().map(parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let u = p.u.iter().map(parse).collect::<Result<Vec<_>>>()?;
        Params4::new(QMatrix::from_rows(rows)?, u)
    }
}

/// `e_a e_b = eps_abc (u_c + T e_c)` for `a != b`, `e_a^2 = -1`.
pub fn build_a_tu(p: &Params4) -> Algebra {
    Algebra::from_fn(4, Some(0), |i, j| {
        let mut out = vec![Rational::zero(); 4];
        if i == 0 || j == 0 {
            out[i + j] = int(1);
            return out;
        }
        if i == j {
            out[0] = int(-1);
            return out;
        }
        let (a, b) = (i - 1, j - 1);
        for &(x, y, c) in &CYCLIC {
            let sign = if (a, b) == (x, y) {
                int(1)
            } else if (a, b) == (y, x) {
                int(-1)
            } else {
                continue;
            };
            out[0] = &sign * &p.u[c];
            for r in 0..3 {
                out[r + 1] = &sign * &p.t[(r, c)];
            }
        }
        out
    })
    .expect("well-formed table")
    .with_labels(vec!["1".into(), "e1".into(), "e2".into(), "e3".into()])
    .expect("four labels")
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtractResult {
    pub params: Params4,
    /// `1, e1, e2, e3` in the coordinates of the input algebra; the map
    /// `A_{T,u} -> A` sends basis vector `i` to `basis[i]`.
    pub basis: Vec<Element>,
}

/// Reads `(T, u)` from an orthonormal basis of `U`. Fails with
/// `NonSquareNorm` when no such basis has rational coordinates; use
/// [`super::geometry::extract_tu_float`] then.
pub fn extract_tu(a: &Algebra) -> Result<ExtractResult> {
    check_dim4_lc(a)?;
    let d = Decomposition::new(a)?;
    let e = d.orthonormal_basis()?;
    let mut t = QMatrix::zeros(3, 3);
    let mut u = vec![Rational::zero(); 3];
    for &(x, y, c) in &CYCLIC {
        let p = a.mul(&e[x], &e[y]);
        u[c] = d.scalar_part(&p);
        let v = d.vector_part(&p);
        for r in 0..3 {
            t[(r, c)] = d.inner(&v, &e[r]);
        }
    }
    let mut basis = vec![d.one().clone()];
    basis.extend(e);
    Ok(ExtractResult {
        params: Params4::new(t, u)?,
        basis,
    })
}

pub(crate) fn check_dim4_lc(a: &Algebra) -> Result<()> {
    if a.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: a.dim() });
    }
    a.unit_element()?;
    if !is_locally_complex(a)?.holds() {
        return Err(Error::NotLocallyComplex);
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Definiteness {
    Positive,
    Negative,
    /// Some nonzero `z` has `<Pz, z> = 0` (including singular `P`).
    Indefinite,
}

/// Exact definiteness of a symmetric 3x3 matrix by leading principal minors.
pub fn symmetric_definiteness(p: &QMatrix) -> Definiteness {
    let minors = |m: &QMatrix| -> Vec<Rational> {
        (1..=3)
            .map(|k| {
                let rows: Vec<Vec<Rational>> = (0..k).map(|i| m.row(i)[..k].to_vec()).collect();
                QMatrix::from_rows(rows).expect("square").determinant().expect("square")
            })
            .collect()
    };
    if minors(p).iter().all(Signed::is_positive) {
        Definiteness::Positive
    } else if minors(&p.scale(&int(-1))).iter().all(Signed::is_positive) {
        Definiteness::Negative
    } else {
        Definiteness::Indefinite
    }
}

fn cross(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    vec![
        &x[1] * &y[2] - &x[2] * &y[1],
        &x[2] * &y[0] - &x[0] * &y[2],
        &x[0] * &y[1] - &x[1] * &y[0],
    ]
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// A rational `z != 0` with `<Pz, z> = 0` for symmetric `P`: a kernel
/// vector, an isotropic vector met while diagonalizing, or a solution of the
/// diagonal form `q1 x^2 + q2 y^2 + q3 z^2 = 0` found by searching `x, y` up
/// to `ISOTROPIC_SEARCH` and solving for `z`.
pub fn rational_isotropic_vector(p: &QMatrix) -> Option<Vec<Rational>> {
    if let Some(z) = p.kernel().into_iter().next() {
        return Some(z);
    }
    let form = |x: &[Rational], y: &[Rational]| dot(&p.mul_vec(x).expect("3x3"), y);
    // Gram-Schmidt with respect to the form
    let mut basis: Vec<(Vec<Rational>, Rational)> = Vec::with_capacity(3);
    for k in 0..3 {
        let mut v = vec![Rational::zero(); 3];
        v[k] = int(1);
        for (b, q) in &basis {
            let c = form(&v, b) / q;
            v = v.iter().zip(b).map(|(vi, bi)| vi - &c * bi).collect();
        }
        let q = form(&v, &v);
        if q.is_zero() {
            return Some(v);
        }
        basis.push((v, q));
    }
    let den = basis.iter().fold(num::BigInt::from(1), |acc, (_, q)| num::integer::lcm(acc, q.denom().clone()));
    let coef: Vec<num::BigInt> = basis.iter().map(|(_, q)| (q * Rational::from_integer(den.clone())).to_integer()).collect();
    for x in 0..=ISOTROPIC_SEARCH {
        for y in -ISOTROPIC_SEARCH..=ISOTROPIC_SEARCH {
            if x == 0 && y <= 0 {
                continue;
            }
            let (bx, by) = (num::BigInt::from(x), num::BigInt::from(y));
            let rest = -(&coef[0] * &bx * &bx + &coef[1] * &by * &by);
            // z^2 = rest / c3 is a rational square iff rest * c3 is a square
            let Some(r) = crate::rational::isqrt(&(&rest * &coef[2])) else {
                continue;
            };
            let z = Rational::new(r, coef[2].clone());
            let (bx, by) = (Rational::from_integer(bx), Rational::from_integer(by));
            let v = (0..3)
                .map(|i| &bx * &basis[0].0[i] + &by * &basis[1].0[i] + &z * &basis[2].0[i])
                .collect();
            return Some(v);
        }
    }
    None
}

const ISOTROPIC_SEARCH: i64 = 200;

/// An exact zero-divisor pair `(x, y)` in `A_{T,u}` (coordinates `1, e1, e2,
/// e3`), available when the symmetric part has a rational isotropic vector.
///
/// With `<Tz, z> = 0` put `w = Tz`, `t = -1` (or, if `Tz = 0`, `w` any vector
/// orthogonal to `z` and `t = 0`), `v = (z x w) / |w|^2` so that `w x v = z`,
/// and `s = -<z, u> / |w|^2`. Then `(0, w)(t, v - s w) = 0`.
pub fn exact_zero_divisor(p: &Params4) -> Option<(Element, Element)> {
    let z = rational_isotropic_vector(&p.symmetric_part())?;
    let tz = p.t.mul_vec(&z).expect("3x3");
    let (w, t) = if tz.iter().all(Zero::is_zero) {
        let k = if z[0].is_zero() { 0 } else if z[1].is_zero() { 1 } else { 2 };
        let mut ek = vec![Rational::zero(); 3];
        ek[k] = int(1);
        (cross(&z, &ek), int(0))
    } else {
        (tz, int(-1))
    };
    let ww = dot(&w, &w);
    let v: Vec<Rational> = cross(&z, &w).iter().map(|c| c / &ww).collect();
    let s = -dot(&z, &p.u) / &ww;
    let mut x = vec![Rational::zero()];
    x.extend(w.iter().cloned());
    let mut y = vec![t];
    y.extend(v.iter().zip(&w).map(|(vi, wi)| vi - &s * wi));
    Some((Element::new(x), Element::new(y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::{jordan_spin, named_algebra};
    use crate::structure::recognize::recognize_alternative_division;
    use crate::structure::Tag;

    #[test]
    fn identity_gives_quaternions() {
        let a = build_a_tu(&Params4::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 0, 0]));
        assert_eq!(recognize_alternative_division(&a).unwrap().tag, Tag::H);
        assert_eq!(a.constants(), named_algebra("H").unwrap().algebra.constants());
    }

    #[test]
    fn zero_gives_jordan_spin() {
        let a = build_a_tu(&Params4::from_i64([[0; 3]; 3], [0, 0, 0]));
        assert_eq!(a.constants(), jordan_spin(4).unwrap().constants());
    }

    #[test]
    fn extraction_round_trip() {
        let p = Params4::from_i64([[1, 2, -3], [0, 5, 1], [4, -1, 2]], [7, 0, -2]);
        let ex = extract_tu(&build_a_tu(&p)).unwrap();
        assert_eq!(ex.params, p);
        assert_eq!(extract_tu(&jordan_spin(4).unwrap()).unwrap().params, Params4::from_i64([[0; 3]; 3], [0; 3]));
    }

    #[test]
    fn definiteness() {
        let p = Params4::from_i64([[2, 1, 0], [-1, 3, 0], [0, 0, 1]], [0; 3]);
        assert_eq!(symmetric_definiteness(&p.symmetric_part()), Definiteness::Positive);
        let n = Params4::from_i64([[-1, 0, 0], [0, -1, 0], [0, 0, -1]], [0; 3]);
        assert_eq!(symmetric_definiteness(&n.symmetric_part()), Definiteness::Negative);
        let h = Params4::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, -1]], [0; 3]);
        assert_eq!(symmetric_definiteness(&h.symmetric_part()), Definiteness::Indefinite);
    }

    #[test]
    fn hyperboloid_zero_divisor() {
        for p in [
            Params4::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, -1]], [0; 3]),
            Params4::from_i64([[1, 3, 0], [-3, 1, 2], [0, -2, -1]], [1, -2, 5]),
            Params4::from_i64([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], [0, 0, 1]),
            Params4::from_i64([[0; 3]; 3], [1, 1, 1]),
        ] {
            let (x, y) = exact_zero_divisor(&p).unwrap();
            assert!(!x.is_zero() && !y.is_zero());
            assert!(build_a_tu(&p).multiply(&x, &y).unwrap().is_zero());
        }
    }
}
