//! Finite-dimensional algebras over Q given by structure constants.
//!
//! An [`Algebra`] of dimension `n` stores the dense tensor `c[i][j][k]` with
//! `e_i * e_j = sum_k c[i][j][k] e_k`. Products are computed exactly; a sparse
//! index of the nonzero constants is kept alongside the dense tensor.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::{format_rational, int, Rational};
use crate::subspace::Subspace;

/// Coordinate vector of an algebra element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Rational>,
}

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Element { coords }
    }

    pub fn zero(n: usize) -> Self {
        Element {
            coords: vec![Rational::zero(); n],
        }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.coords[i] = Rational::one();
        e
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        Element::new(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element::new(self.coords.iter().map(|c| c * s).collect())
    }

    pub fn dot(&self, other: &Element) -> Rational {
        self.coords
            .iter()
            .zip(&other.coords)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Human-readable linear combination over the given labels.
    pub fn display_with(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for (i, c) in self.support() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let label = labels.get(i).cloned().unwrap_or_else(|| format!("b{i}"));
            if label == "1" {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&label);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), label));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.len(), rhs.len(), "element length mismatch");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.len(), rhs.len(), "element length mismatch");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

impl Mul<&Element> for &Rational {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

/// Result of solving `x^2 - t x + n = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalQuadratic {
    /// `x = lambda * 1`; by convention `t = 2 lambda`, `n = lambda^2`.
    Scalar(Rational),
    Quadratic { trace: Rational, norm: Rational },
    NotQuadratic,
}

impl MinimalQuadratic {
    pub fn trace(&self) -> Option<Rational> {
        match self {
            MinimalQuadratic::Scalar(l) => Some(l * int(2)),
            MinimalQuadratic::Quadratic { trace, .. } => Some(trace.clone()),
            MinimalQuadratic::NotQuadratic => None,
        }
    }

    pub fn norm(&self) -> Option<Rational> {
        match self {
            MinimalQuadratic::Scalar(l) => Some(l * l),
            MinimalQuadratic::Quadratic { norm, .. } => Some(norm.clone()),
            MinimalQuadratic::NotQuadratic => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    constants: Vec<Rational>,
    unit: Option<usize>,
    labels: Vec<String>,
    // nonzero (k, c[i][j][k]) for each pair (i, j), indexed i * dim + j
    sparse: Vec<Vec<(usize, Rational)>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("dim", &self.dim)
            .field("unit", &self.unit)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

pub fn default_labels(dim: usize, unit: Option<usize>) -> Vec<String> {
    (0..dim)
        .map(|i| {
            if Some(i) == unit {
                "1".to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

impl Algebra {
    /// Builds an algebra from the flat tensor `constants[(i * dim + j) * dim + k]`.
    /// When `unit` is given it is verified to act as a two-sided identity.
    pub fn new(dim: usize, constants: Vec<Rational>, unit: Option<usize>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidConstants("dimension must be positive".into()));
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: constants.len(),
            });
        }
        if let Some(u) = unit {
            if u >= dim {
                return Err(Error::InvalidUnit(u));
            }
        }
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &constants[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        let alg = Algebra {
            dim,
            constants,
            unit,
            labels: default_labels(dim, unit),
            sparse,
        };
        if let Some(u) = unit {
            for i in 0..dim {
                let e = Element::basis(dim, i);
                if alg.basis_product(u, i) != e || alg.basis_product(i, u) != e {
                    return Err(Error::InvalidUnit(u));
                }
            }
        }
        Ok(alg)
    }

    /// Builds an algebra from a closure giving the coordinates of `e_i e_j`.
    pub fn from_fn<F>(dim: usize, unit: Option<usize>, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Vec<Rational>,
    {
        let mut constants = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = f(i, j);
                if p.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: p.len(),
                    });
                }
                constants.extend(p);
            }
        }
        Self::new(dim, constants, unit)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit_element(&self) -> Result<Element> {
        self.unit
            .map(|u| Element::basis(self.dim, u))
            .ok_or(Error::NotUnital)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let mut out = Element::zero(self.dim);
        for (k, c) in &self.sparse[i * self.dim + j] {
            out.coords[*k] = c.clone();
        }
        out
    }

    pub fn scalar(&self, lambda: &Rational) -> Result<Element> {
        Ok(self.unit_element()?.scale(lambda))
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// Bilinear product of two elements.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked product; callers guarantee matching lengths.
    pub(crate) fn mul(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        let ys: Vec<(usize, &Rational)> = y.support().collect();
        for (i, xi) in x.support() {
            for (j, yj) in &ys {
                let terms = &self.sparse[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let w = xi * *yj;
                for (k, c) in terms {
                    out[*k] += &w * c;
                }
            }
        }
        Element::new(out)
    }

    /// Matrix of `y -> x y`.
    pub fn left_mul_matrix(&self, x: &Element) -> Result<QMatrix> {
        self.check(x)?;
        let n = self.dim;
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(x, &Element::basis(n, j));
            for (i, c) in col.support() {
                m[(i, j)] = c.clone();
            }
        }
        Ok(m)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mul_matrix(&self, x: &Element) -> Result<QMatrix> {
        self.check(x)?;
        let n = self.dim;
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(&Element::basis(n, j), x);
            for (i, c) in col.support() {
                m[(i, j)] = c.clone();
            }
        }
        Ok(m)
    }

    /// `Some(lambda)` when `x = lambda * 1`.
    pub fn scalar_value(&self, x: &Element) -> Option<Rational> {
        let u = self.unit?;
        x.coords
            .iter()
            .enumerate()
            .all(|(i, c)| i == u || c.is_zero())
            .then(|| x.coords[u].clone())
    }

    pub fn minimal_quadratic(&self, x: &Element) -> Result<MinimalQuadratic> {
        self.check(x)?;
        let one = self.unit_element()?;
        if let Some(l) = self.scalar_value(x) {
            return Ok(MinimalQuadratic::Scalar(l));
        }
        // x^2 = t x - n 1
        let sq = self.mul(x, x);
        let m = QMatrix::from_columns(&[x.coords.clone(), (-&one).coords])?;
        Ok(match m.solve(&sq.coords) {
            Some(tn) => MinimalQuadratic::Quadratic {
                trace: tn[0].clone(),
                norm: tn[1].clone(),
            },
            None => MinimalQuadratic::NotQuadratic,
        })
    }

    /// Smallest subspace containing `gens` (and 1 when requested) closed under
    /// multiplication.
    pub fn generated_subalgebra(&self, gens: &[Element], include_unit: bool) -> Result<Subspace> {
        for g in gens {
            self.check(g)?;
        }
        let mut seeds: Vec<Element> = gens.to_vec();
        if include_unit {
            seeds.push(self.unit_element()?);
        }
        let mut span = Subspace::zero(self.dim);
        let mut members: Vec<Element> = Vec::new();
        let mut frontier: Vec<Element> = Vec::new();
        for s in seeds {
            if !span.contains(s.coords()) {
                span = span.join(&Subspace::span(self.dim, &[s.coords.clone()])?)?;
                frontier.push(s);
            }
        }
        let mut rounds = 0;
        while !frontier.is_empty() && rounds <= self.dim {
            rounds += 1;
            let mut next = Vec::new();
            let current: Vec<Element> = members.iter().chain(frontier.iter()).cloned().collect();
            for a in &frontier {
                for b in &current {
                    for p in [self.mul(a, b), self.mul(b, a)] {
                        if !p.is_zero() && !span.contains(p.coords()) {
                            span = span.join(&Subspace::span(self.dim, &[p.coords.clone()])?)?;
                            next.push(p);
                        }
                    }
                }
            }
            members.extend(frontier);
            frontier = next;
        }
        Ok(span)
    }

    /// The same algebra expressed in a new basis whose vectors are the rows of
    /// `basis` (in current coordinates). The unit index follows the row equal
    /// to the current unit, if any.
    pub fn change_basis(&self, basis: &QMatrix) -> Result<Algebra> {
        let n = self.dim;
        if basis.nrows() != n || basis.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: basis.nrows(),
            });
        }
        let inv = basis.inverse()?;
        let rows: Vec<Element> = (0..n).map(|i| Element::new(basis.row_vec(i))).collect();
        let inv_t = inv.transpose();
        let mut constants = Vec::with_capacity(n * n * n);
        for a in &rows {
            for b in &rows {
                let p = self.mul(a, b);
                // new coordinates c satisfy c^T * basis = p^T
                constants.extend(inv_t.mul_vec(p.coords())?);
            }
        }
        let unit = self.unit.and_then(|u| {
            let one = Element::basis(n, u);
            rows.iter().position(|r| *r == one)
        });
        Algebra::new(n, constants, unit)
    }

    /// The algebra structure on a multiplicatively closed subspace, together
    /// with the matrix whose rows are the chosen basis in ambient coordinates.
    /// If the subspace contains 1, it becomes basis vector 0.
    pub fn restrict(&self, sub: &Subspace) -> Result<(Algebra, QMatrix)> {
        let mut chosen: Vec<Vec<Rational>> = Vec::new();
        let mut span = Subspace::zero(self.dim);
        let mut candidates: Vec<Vec<Rational>> = Vec::new();
        let mut unit = None;
        if let Ok(one) = self.unit_element() {
            if sub.contains(one.coords()) {
                candidates.push(one.coords.clone());
                unit = Some(0);
            }
        }
        candidates.extend(sub.basis().iter().cloned());
        for c in candidates {
            if !span.contains(&c) {
                span = span.join(&Subspace::span(self.dim, &[c.clone()])?)?;
                chosen.push(c);
            }
        }
        let m = chosen.len();
        let elems: Vec<Element> = chosen.iter().cloned().map(Element::new).collect();
        let basis_t = QMatrix::from_columns(&chosen)?;
        let mut constants = Vec::with_capacity(m * m * m);
        for a in &elems {
            for b in &elems {
                let p = self.mul(a, b);
                let c = basis_t
                    .solve(p.coords())
                    .ok_or_else(|| Error::Precondition("subspace is not closed under multiplication".into()))?;
                constants.extend(c);
            }
        }
        let alg = Algebra::new(m, constants, unit)?;
        Ok((alg, QMatrix::from_rows(chosen)?))
    }

    pub fn is_commutative_on_basis(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn complex() -> Algebra {
        // basis {1, i}
        Algebra::from_fn(2, Some(0), |a, b| match (a, b) {
            (0, k) | (k, 0) => Element::basis(2, k).into_coords(),
            _ => vec![int(-1), int(0)],
        })
        .unwrap()
    }

    #[test]
    fn left_mul_of_i_in_c() {
        let c = complex();
        let l = c.left_mul_matrix(&Element::basis(2, 1)).unwrap();
        assert_eq!(l, QMatrix::from_i64(&[&[0, -1], &[1, 0]]));
        let one = c.unit_element().unwrap();
        assert_eq!(c.left_mul_matrix(&one).unwrap(), QMatrix::identity(2));
    }

    #[test]
    fn rejects_fake_unit() {
        let bad = Algebra::from_fn(2, Some(1), |_, _| vec![int(0), int(0)]);
        assert_eq!(bad.unwrap_err(), Error::InvalidUnit(1));
    }

    #[test]
    fn scalar_minimal_quadratic_convention() {
        let c = complex();
        let x = c.scalar(&int(3)).unwrap();
        let q = c.minimal_quadratic(&x).unwrap();
        assert_eq!(q, MinimalQuadratic::Scalar(int(3)));
        assert_eq!(q.trace(), Some(int(6)));
        assert_eq!(q.norm(), Some(int(9)));
    }

    #[test]
    fn complex_number_trace_and_norm() {
        let c = complex();
        let x = Element::new(vec![frac(1, 2), int(2)]);
        let q = c.minimal_quadratic(&x).unwrap();
        assert_eq!(q.trace(), Some(int(1)));
        assert_eq!(q.norm(), Some(frac(17, 4)));
    }

    #[test]
    fn multiply_checks_dimensions() {
        let c = complex();
        let err = c.multiply(&Element::zero(3), &Element::zero(2)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn unit_generates_one_dimensional_subalgebra() {
        let c = complex();
        let one = c.unit_element().unwrap();
        assert_eq!(c.generated_subalgebra(&[one], false).unwrap().dim(), 1);
        assert_eq!(c.generated_subalgebra(&[], true).unwrap().dim(), 1);
    }

    #[test]
    fn display_linear_combination() {
        let c = complex();
        let x = Element::new(vec![int(2), frac(-1, 3)]);
        assert_eq!(x.display_with(c.labels()), "2 - 1/3*e1");
    }
}
