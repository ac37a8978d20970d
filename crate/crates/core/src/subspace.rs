//! Linear subspaces of `Q^n` in canonical reduced row-echelon form.
//!
//! Two spans of the same space always produce identical basis matrices, so
//! derived equality is equality of subspaces.

use num::Zero;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let id = QMatrix::identity(ambient);
        Subspace {
            ambient,
            basis: id.rows_vec(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors; all must have length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = QMatrix::from_rows(vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    /// Span of the coordinate vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let mut vs = Vec::new();
        for &i in indices {
            if i >= ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: i + 1,
                });
            }
            let mut v = vec![Rational::zero(); ambient];
            v[i] = num::One::one();
            vs.push(v);
        }
        Self::span(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        self.coordinates_of(v).is_some()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        // In RREF the coordinate along row i is the entry of v at pivot i.
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, b) in rebuilt.iter_mut().zip(row) {
                if !b.is_zero() {
                    *r += c * b;
                }
            }
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn as_matrix(&self) -> QMatrix {
        if self.basis.is_empty() {
            return QMatrix::zeros(0, self.ambient);
        }
        QMatrix::from_rows(self.basis.clone()).expect("rows share the ambient length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(&[3, 5, 2])));
        assert!(!a.contains(&v(&[1, 0, 0])));
    }

    #[test]
    fn zero_and_full() {
        let z = Subspace::span(4, &[v(&[0, 0, 0, 0])]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z, Subspace::zero(4));
        assert!(z.is_subspace_of(&Subspace::full(4)));
        assert_eq!(Subspace::coordinate(4, &[0, 1, 2, 3]).unwrap(), Subspace::full(4));
    }

    #[test]
    fn coordinates_rebuild_vector() {
        let s = Subspace::span(3, &[v(&[2, 0, 4]), v(&[0, 3, 3])]).unwrap();
        let c = s.coordinates_of(&v(&[2, 3, 7])).unwrap();
        assert_eq!(c, v(&[2, 3]));
    }
}
