//! Three-dimensional locally complex algebras `A_{t,s}`.

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::properties::is_locally_complex;
use crate::rational::{format_rational, int, rational_sqrt, to_f64, Rational};
use crate::structure::decompose::Decomposition;

fn labels3() -> Vec<String> {
    vec!["1".into(), "e1".into(), "e2".into()]
}

/// `e1 e2 = t + z1 e1 + z2 e2 = -e2 e1`, `e1^2 = e2^2 = -1`.
pub fn build_a_ts_raw(t: &Rational, z: [&Rational; 2]) -> Algebra {
    let prod = vec![t.clone(), z[0].clone(), z[1].clone()];
    Algebra::from_fn(3, Some(0), |i, j| {
        let mut out = vec![Rational::zero(); 3];
        match (i, j) {
            (0, k) | (k, 0) => out[k] = int(1),
            (a, b) if a == b => out[0] = int(-1),
            (1, 2) => out.clone_from(&prod),
            _ => out = prod.iter().map(|c| -c).collect(),
        }
        out
    })
    .expect("well-formed table")
    .with_labels(labels3())
    .expect("three labels")
}

pub fn build_a_ts(t: &Rational, s: &Rational) -> Result<Algebra> {
    if t.is_negative() || s.is_negative() {
        return Err(Error::Precondition("t and s must be nonnegative".into()));
    }
    Ok(build_a_ts_raw(t, [s, &Rational::zero()]))
}

/// The `(t, s)` class of a three-dimensional locally complex algebra, stored
/// through `t^2` and `s^2` so that it stays exact when the values are
/// irrational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalForm3 {
    #[serde(with = "rational_text")]
    pub t_squared: Rational,
    #[serde(with = "rational_text")]
    pub s_squared: Rational,
}

impl CanonicalForm3 {
    pub fn t(&self) -> f64 {
        to_f64(&self.t_squared).sqrt()
    }

    pub fn s(&self) -> f64 {
        to_f64(&self.s_squared).sqrt()
    }

    /// `t` when it is rational.
    pub fn exact_t(&self) -> Option<Rational> {
        rational_sqrt(&self.t_squared)
    }

    pub fn exact_s(&self) -> Option<Rational> {
        rational_sqrt(&self.s_squared)
    }

    fn describe(r: &Rational) -> String {
        match rational_sqrt(r) {
            Some(x) => format_rational(&x),
            None => format!("sqrt({})", format_rational(r)),
        }
    }

    pub fn t_text(&self) -> String {
        Self::describe(&self.t_squared)
    }

    pub fn s_text(&self) -> String {
        Self::describe(&self.s_squared)
    }
}

pub(crate) mod rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Reads `e1 e2 = t' + z1' w1 + z2' w2` in an orthogonal basis `w1, w2` of
/// `U` and rescales. A reflection absorbs the sign of `t`, so the class is
/// `(|t|, |z|)` in an orthonormal basis.
pub fn canonical_3d(a: &Algebra) -> Result<CanonicalForm3> {
    if a.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: a.dim() });
    }
    a.unit_element()?;
    if !is_locally_complex(a)?.holds() {
        return Err(Error::NotLocallyComplex);
    }
    let d = Decomposition::new(a)?;
    let orth = d
        .orthogonalize(d.u_basis())
        .map_err(|_| Error::NotLocallyComplex)?;
    let (w1, n1) = &orth[0];
    let (w2, n2) = &orth[1];
    let p = a.mul(w1, w2);
    let t_raw = d.scalar_part(&p);
    let v = d.vector_part(&p);
    let z1 = d.inner(&v, w1) / n1;
    let z2 = d.inner(&v, w2) / n2;
    let nn = n1 * n2;
    Ok(CanonicalForm3 {
        t_squared: &t_raw * &t_raw / &nn,
        s_squared: (&z1 * &z1 * n1 + &z2 * &z2 * n2) / &nn,
    })
}

/// Parameters `(t, z)` of the algebra in the given orthonormal basis
/// `e1, e2` of `U`, without the sign normalization.
pub fn raw_parameters(a: &Algebra, e1: &Element, e2: &Element) -> Result<(Rational, [Rational; 2])> {
    let d = Decomposition::new(a)?;
    let p = a.mul(e1, e2);
    let v = d.vector_part(&p);
    Ok((d.scalar_part(&p), [d.inner(&v, e1), d.inner(&v, e2)]))
}

pub fn iso_3d(c1: &CanonicalForm3, c2: &CanonicalForm3, tol: f64) -> bool {
    if c1 == c2 {
        return true;
    }
    (c1.t() - c2.t()).abs() <= tol && (c1.s() - c2.s()).abs() <= tol
}
