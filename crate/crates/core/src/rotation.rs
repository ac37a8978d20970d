//! Rational orthogonal matrices by the Cayley transform, and random basis
//! rotations of algebras that fix the unit (and optionally a grading).

use num::Zero;
use rand::Rng;

use crate::algebra::Algebra;
use crate::cayley_dickson::Grading;
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::{frac, int};

/// `(I - K)(I + K)^{-1}` for skew `K`; orthogonal with determinant one.
pub fn cayley_transform(k: &QMatrix) -> Result<QMatrix> {
    let n = k.nrows();
    if !k.add(&k.transpose())?.is_zero() {
        return Err(Error::Precondition("matrix is not skew-symmetric".into()));
    }
    let id = QMatrix::identity(n);
    id.sub(k)?.mul(&id.add(k)?.inverse()?)
}

/// A sparse random skew matrix with entries in `{+-1/2, +-1}`, mapped
/// through the Cayley transform. With `reflect`, the first row is negated
/// half of the time so both determinants occur.
pub fn random_orthogonal<R: Rng>(n: usize, rng: &mut R, reflect: bool) -> QMatrix {
    if n == 0 {
        return QMatrix::identity(0);
    }
    let choices = [frac(1, 2), frac(-1, 2), int(1), int(-1)];
    let mut k = QMatrix::zeros(n, n);
    let density = (2.0 / n.max(2) as f64).min(0.6);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                let v = choices[rng.gen_range(0..choices.len())].clone();
                k[(j, i)] = -v.clone();
                k[(i, j)] = v;
            }
        }
    }
    let mut q = cayley_transform(&k).expect("I + K is invertible for skew K");
    if reflect && rng.gen_bool(0.5) {
        for j in 0..n {
            q[(0, j)] = -q[(0, j)].clone();
        }
    }
    q
}

/// Embeds `blocks` on the given index sets of an `n x n` identity.
fn scatter(n: usize, parts: &[(&[usize], &QMatrix)]) -> QMatrix {
    let mut m = QMatrix::identity(n);
    for (idx, q) in parts.iter().filter(|(idx, _)| !idx.is_empty()) {
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(i, j)] = q[(a, b)].clone();
            }
        }
    }
    m
}

/// The algebra in the basis given by the rows of a random orthogonal change
/// fixing the unit vector. Returns the new algebra and the basis rows.
pub fn random_unit_fixing_rotation<R: Rng>(a: &Algebra, rng: &mut R) -> Result<(Algebra, QMatrix)> {
    let unit = a.unit().ok_or(Error::NotUnital)?;
    let rest: Vec<usize> = (0..a.dim()).filter(|&i| i != unit).collect();
    let q = random_orthogonal(rest.len(), rng, true);
    let rows = scatter(a.dim(), &[(&rest, &q)]);
    Ok((a.change_basis(&rows)?, rows))
}

/// As [`random_unit_fixing_rotation`], rotating the imaginary even and the
/// odd coordinates separately so that the same index sets remain the
/// grading. The grading must be spanned by basis vectors.
pub fn random_grading_preserving_rotation<R: Rng>(
    a: &Algebra,
    g: &Grading,
    rng: &mut R,
) -> Result<(Algebra, QMatrix)> {
    let unit = a.unit().ok_or(Error::NotUnital)?;
    let coordinate = |s: &crate::subspace::Subspace| -> Result<Vec<usize>> {
        s.basis()
            .iter()
            .map(|v| {
                let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
                match nz.as_slice() {
                    [i] => Ok(*i),
                    _ => Err(Error::InvalidGrading("grading is not spanned by basis vectors".into())),
                }
            })
            .collect()
    };
    let even: Vec<usize> = coordinate(&g.even)?.into_iter().filter(|&i| i != unit).collect();
    let odd = coordinate(&g.odd)?;
    let q0 = random_orthogonal(even.len(), rng, true);
    let q1 = random_orthogonal(odd.len(), rng, true);
    let rows = scatter(a.dim(), &[(&even, &q0), (&odd, &q1)]);
    Ok((a.change_basis(&rows)?, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::cayley_dickson::named_algebra;

    #[test]
    fn cayley_transform_is_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [2, 3, 7, 15] {
            let q = random_orthogonal(n, &mut rng, true);
            assert_eq!(q.mul(&q.transpose()).unwrap(), QMatrix::identity(n));
        }
    }

    #[test]
    fn rotation_keeps_unit_and_grading() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let to = named_algebra("TO").unwrap();
        let g = to.grading.unwrap();
        let (b, _) = random_grading_preserving_rotation(&to.algebra, &g, &mut rng).unwrap();
        assert_eq!(b.unit(), Some(0));
        g.validate(&b).unwrap();
    }
}
