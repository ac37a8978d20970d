//! Floating-point layer for four-dimensional algebras: spectral typing,
//! the division test, equivalence of parameter pairs, hyperboloid
//! configurations and the rank-0 family.

use nalgebra::{Matrix3, SymmetricEigen, Vector3, Vector4};
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::lowdim::four::check_dim4_lc;
use crate::rational::to_f64;
use crate::structure::decompose::Decomposition;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct FloatParams4 {
    pub t: Matrix3<f64>,
    pub u: Vector3<f64>,
}

impl FloatParams4 {
    pub fn new(t: Matrix3<f64>, u: Vector3<f64>) -> Self {
        FloatParams4 { t, u }
    }

    pub fn symmetric_part(&self) -> Matrix3<f64> {
        (self.t + self.t.transpose()) * 0.5
    }

    pub fn skew_part(&self) -> Matrix3<f64> {
        (self.t - self.t.transpose()) * 0.5
    }

    /// `(det Q) Q T Q^T` and `(det Q) Q u`.
    pub fn transform(&self, q: &Matrix3<f64>) -> FloatParams4 {
        let d = q.determinant().signum();
        FloatParams4 {
            t: q * self.t * q.transpose() * d,
            u: q * self.u * d,
        }
    }

    fn scale(&self) -> f64 {
        1.0 + self.t.norm() + self.u.norm()
    }
}

/// `c` with `R_c = [[0, c3, -c2], [-c3, 0, c1], [c2, -c1, 0]]`.
pub fn axial(m: &Matrix3<f64>) -> Vector3<f64> {
    Vector3::new(m[(1, 2)], m[(2, 0)], m[(0, 1)])
}

pub fn skew_from_axial(c: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(0.0, c[2], -c[1], -c[2], 0.0, c[0], c[1], -c[0], 0.0)
}

/// The rank-0 representative `T_d` with `d` above the diagonal in position (1,2).
pub fn t_d(d: f64) -> Matrix3<f64> {
    Matrix3::new(0.0, d, 0.0, -d, 0.0, 0.0, 0.0, 0.0, 0.0)
}

/// Product in `A_{T,u}` on coordinates `(lambda, x)`.
pub fn mul_tu(p: &FloatParams4, a: &Vector4<f64>, b: &Vector4<f64>) -> Vector4<f64> {
    let (l, x) = (a[0], Vector3::new(a[1], a[2], a[3]));
    let (m, y) = (b[0], Vector3::new(b[1], b[2], b[3]));
    let c = x.cross(&y);
    let v = y * l + x * m + p.t * c;
    Vector4::new(l * m - x.dot(&y) + c.dot(&p.u), v[0], v[1], v[2])
}

/// Eigenvalues in descending order with matching eigenvector columns.
pub fn sorted_eigen(p: &Matrix3<f64>) -> (Vector3<f64>, Matrix3<f64>) {
    let eig = SymmetricEigen::new(*p);
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let vals = Vector3::from_fn(|i, _| eig.eigenvalues[idx[i]]);
    let vecs = Matrix3::from_fn(|r, c| eig.eigenvectors[(r, idx[c])]);
    (vals, vecs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Ellipsoid,
    Hyperboloid,
    EllipticCylinder,
    HyperbolicCylinder,
    Rank1,
    Rank0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeometricType {
    pub rank: usize,
    pub kind: Kind,
}

pub fn geometric_type(t: &Matrix3<f64>, tol: f64) -> GeometricType {
    let p = (t + t.transpose()) * 0.5;
    let (vals, _) = sorted_eigen(&p);
    let pos = vals.iter().filter(|&&l| l > tol).count();
    let neg = vals.iter().filter(|&&l| l < -tol).count();
    let rank = pos + neg;
    let kind = match (rank, pos == 0 || neg == 0) {
        (3, true) => Kind::Ellipsoid,
        (3, false) => Kind::Hyperboloid,
        (2, true) => Kind::EllipticCylinder,
        (2, false) => Kind::HyperbolicCylinder,
        (1, _) => Kind::Rank1,
        _ => Kind::Rank0,
    };
    GeometricType { rank, kind }
}

#[derive(Clone, Debug, PartialEq)]
pub enum DivisionVerdict {
    Division,
    /// Unit vectors `x`, `y` with `|xy| = residual`.
    ZeroDivisors { x: Vector4<f64>, y: Vector4<f64>, residual: f64 },
}

/// Division iff `<Tz, z>` is definite. Otherwise returns the pair `(0, w)`,
/// `(t, v - s w)` built from an isotropic unit `z`, normalized, with its
/// measured residual.
pub fn is_division_4d(p: &FloatParams4, tol: f64) -> DivisionVerdict {
    let (vals, vecs) = sorted_eigen(&p.symmetric_part());
    if vals[2] > tol || vals[0] < -tol {
        return DivisionVerdict::Division;
    }
    let z = if let Some(i) = (0..3).find(|&i| vals[i].abs() <= tol) {
        vecs.column(i).into_owned()
    } else {
        // vals[0] > 0 > vals[2]
        (vecs.column(0) * (-vals[2]).sqrt() + vecs.column(2) * vals[0].sqrt()).normalize()
    };
    let tz = p.t * z;
    let (w, t) = if tz.norm() <= tol {
        let k = (0..3).min_by(|&a, &b| z[a].abs().total_cmp(&z[b].abs())).unwrap_or(0);
        (z.cross(&Vector3::ith(k, 1.0)), 0.0)
    } else {
        (tz, -1.0)
    };
    let ww = w.norm_squared();
    let v = z.cross(&w) / ww;
    let s = -z.dot(&p.u) / ww;
    let y3 = v - w * s;
    let x = Vector4::new(0.0, w[0], w[1], w[2]).normalize();
    let y = Vector4::new(t, y3[0], y3[1], y3[2]).normalize();
    let residual = mul_tu(p, &x, &y).norm();
    DivisionVerdict::ZeroDivisors { x, y, residual }
}

/// `(T, u)` of a four-dimensional locally complex algebra in an orthonormal
/// basis computed in floating point; works whether or not the norms are
/// rational squares.
pub fn extract_tu_float(a: &Algebra) -> Result<FloatParams4> {
    check_dim4_lc(a)?;
    let d = Decomposition::new(a)?;
    let orth = d.orthogonalize(d.u_basis()).map_err(|_| Error::NotLocallyComplex)?;
    let norms: Vec<f64> = orth.iter().map(|(_, n)| to_f64(n).sqrt()).collect();
    let mut t = Matrix3::zeros();
    let mut u = Vector3::zeros();
    for (x, y, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let p = a.mul(&orth[x].0, &orth[y].0);
        let scale = norms[x] * norms[y];
        u[c] = to_f64(&d.scalar_part(&p)) / scale;
        let v = d.vector_part(&p);
        for r in 0..3 {
            // coefficient on w_r is <v, w_r> / n_r; on e_r = w_r / |w_r| it gains |w_r|
            t[(r, c)] = to_f64(&d.inner(&v, &orth[r].0)) / norms[r] / scale;
        }
    }
    Ok(FloatParams4 { t, u })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Equivalence {
    pub equivalent: bool,
    /// Orthogonal `Q` with `T' = (det Q) Q T Q^T`, `u' = (det Q) Q u`.
    pub witness: Option<Matrix3<f64>>,
    /// The deciding quantity was within a factor 10 of `tol`.
    pub borderline: bool,
}

/// Orthonormal frame of `R^g` whose first vectors come from Gram-Schmidt
/// on `data`; returns the frame (as columns) and how many came from data.
fn frame(data: &[nalgebra::DVector<f64>], g: usize, eps: f64) -> (nalgebra::DMatrix<f64>, usize, Vec<bool>) {
    let mut cols: Vec<nalgebra::DVector<f64>> = Vec::new();
    let mut used = Vec::new();
    for v in data {
        let mut r = v.clone();
        for c in &cols {
            r -= c * c.dot(v);
        }
        if r.norm() > eps {
            cols.push(r.normalize());
            used.push(true);
        } else {
            used.push(false);
        }
    }
    let from_data = cols.len();
    for i in 0..g {
        if cols.len() == g {
            break;
        }
        let mut r = nalgebra::DVector::from_fn(g, |k, _| if k == i { 1.0 } else { 0.0 });
        for c in &cols {
            r -= c * c[i];
        }
        if r.norm() > 0.3 {
            cols.push(r.normalize());
        }
    }
    (nalgebra::DMatrix::from_columns(&cols), from_data, used)
}

/// Rotations `R` in SO(3) with `R P R^T = P'`, `R k = k'`, `R u = u'` for the
/// given sign; returns the best candidate and its residual.
fn align(
    p: (&Matrix3<f64>, &Vector3<f64>, &Vector3<f64>),
    q: (&Matrix3<f64>, &Vector3<f64>, &Vector3<f64>),
    group_tol: f64,
    eps: f64,
) -> Option<Matrix3<f64>> {
    let (vals, v) = sorted_eigen(p.0);
    let (vals2, v2) = sorted_eigen(q.0);
    if (vals - vals2).amax() > group_tol {
        return None;
    }
    let a = v.transpose() * p.1;
    let b = v.transpose() * p.2;
    let a2 = v2.transpose() * q.1;
    let b2 = v2.transpose() * q.2;
    let mut groups: Vec<Vec<usize>> = vec![vec![0]];
    for i in 1..3 {
        if (vals[i - 1] - vals[i]).abs() <= group_tol {
            groups.last_mut().expect("nonempty").push(i);
        } else {
            groups.push(vec![i]);
        }
    }
    let mut blocks = Vec::new();
    let mut free = Vec::new();
    for g in &groups {
        let pick = |x: &Vector3<f64>| nalgebra::DVector::from_fn(g.len(), |k, _| x[g[k]]);
        let (f, r, used) = frame(&[pick(&a), pick(&b)], g.len(), eps);
        let (f2, r2, used2) = frame(&[pick(&a2), pick(&b2)], g.len(), eps);
        if r != r2 || used != used2 || f.ncols() != g.len() || f2.ncols() != g.len() {
            return None;
        }
        let block = &f2 * f.transpose();
        if r < g.len() {
            free.push(blocks.len());
        }
        blocks.push(block);
    }
    let target = v.determinant().signum() * v2.determinant().signum();
    let det: f64 = blocks.iter().map(|b| b.determinant().signum()).product();
    if det != target {
        let k = *free.first()?;
        // compose with a reflection of the complement of the data span
        let g = &groups[k];
        let pick = |x: &Vector3<f64>| nalgebra::DVector::from_fn(g.len(), |i, _| x[g[i]]);
        let (f, _, _) = frame(&[pick(&a), pick(&b)], g.len(), eps);
        let mut flip = nalgebra::DMatrix::identity(g.len(), g.len());
        let last = g.len() - 1;
        flip[(last, last)] = -1.0;
        blocks[k] = &blocks[k] * &f * flip * f.transpose();
    }
    let mut bmat = Matrix3::zeros();
    for (g, blk) in groups.iter().zip(&blocks) {
        for (i, &gi) in g.iter().enumerate() {
            for (j, &gj) in g.iter().enumerate() {
                bmat[(gi, gj)] = blk[(i, j)];
            }
        }
    }
    Some(v2 * bmat * v.transpose())
}

fn residual(p1: &FloatParams4, p2: &FloatParams4, q: &Matrix3<f64>) -> f64 {
    let img = p1.transform(q);
    let orth = (q * q.transpose() - Matrix3::identity()).amax();
    ((img.t - p2.t).amax() + (img.u - p2.u).amax()) / p1.scale().max(p2.scale()) + orth
}

/// Decides `(T, u) ~ (T', u')`. For each sign `det Q = +-1` the symmetric
/// parts are diagonalized; inside each eigenspace the remaining freedom is
/// an orthogonal map that must carry the components of the axial vector
/// and of `u` onto their counterparts, which fixes it up to a reflection of
/// whatever the data leave free. The candidate is verified to `tol`.
pub fn equiv_4d(p1: &FloatParams4, p2: &FloatParams4, tol: f64) -> Equivalence {
    let scale = p1.scale().max(p2.scale());
    let group_tol = (100.0 * tol * scale).max(1e-12);
    let eps = (tol * scale).sqrt().max(1e-12);
    let mut best: Option<(f64, Matrix3<f64>)> = None;
    for sigma in [1.0, -1.0] {
        // T' = sigma R T R^T, u' = R u with R in SO(3), Q = sigma R
        let t = p1.t * sigma;
        let (ps, ks) = ((t + t.transpose()) * 0.5, axial(&((t - t.transpose()) * 0.5)));
        let (pt, kt) = (p2.symmetric_part(), axial(&p2.skew_part()));
        if let Some(r) = align((&ps, &ks, &p1.u), (&pt, &kt, &p2.u), group_tol, eps) {
            let q = r * sigma;
            let res = residual(p1, p2, &q);
            if best.as_ref().map_or(true, |(b, _)| res < *b) {
                best = Some((res, q));
            }
        }
    }
    let eig_gap = {
        let (a, _) = sorted_eigen(&p1.symmetric_part());
        let (b, _) = sorted_eigen(&p2.symmetric_part());
        let neg = Vector3::new(-a[2], -a[1], -a[0]);
        (a - b).amax().min((neg - b).amax()) / scale
    };
    match best {
        Some((res, q)) if res <= tol => Equivalence {
            equivalent: true,
            witness: Some(q),
            borderline: res > tol / 10.0,
        },
        Some((res, _)) => Equivalence {
            equivalent: false,
            witness: None,
            borderline: res < 10.0 * tol,
        },
        None => Equivalence {
            equivalent: false,
            witness: None,
            borderline: eig_gap < 10.0 * tol,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HyperboloidConfig {
    pub delta: [f64; 3],
    pub u: [f64; 3],
    pub c: [f64; 3],
}

impl HyperboloidConfig {
    pub fn params(&self) -> FloatParams4 {
        let d = Matrix3::from_diagonal(&Vector3::from(self.delta));
        FloatParams4 {
            t: d + skew_from_axial(&Vector3::from(self.c)),
            u: Vector3::from(self.u),
        }
    }

    pub fn is_circular(&self, tol: f64) -> bool {
        (self.delta[0] - self.delta[1]).abs() <= tol
    }

    /// Images under the orientation-preserving symmetries `diag(+-1, +-1, +-1)`
    /// of determinant one.
    pub fn symmetric_images(&self) -> Vec<HyperboloidConfig> {
        [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
            .iter()
            .map(|s| HyperboloidConfig {
                delta: self.delta,
                u: [s[0] * self.u[0], s[1] * self.u[1], s[2] * self.u[2]],
                c: [s[0] * self.c[0], s[1] * self.c[1], s[2] * self.c[2]],
            })
            .collect()
    }
}

/// Principal-axis form `(delta, Qu, c)` with `Q P Q^T = diag(delta)`,
/// `Q R Q^T = R_c`, `Q` in SO(3), after flipping `T` to `-T` if needed so
/// that two eigenvalues are positive.
pub fn hyperboloid_config(p: &FloatParams4, tol: f64) -> Result<HyperboloidConfig> {
    if geometric_type(&p.t, tol).kind != Kind::Hyperboloid {
        return Err(Error::Precondition("symmetric part is not of hyperboloid type".into()));
    }
    let (vals, _) = sorted_eigen(&p.symmetric_part());
    let t = if vals.iter().filter(|&&l| l > 0.0).count() == 1 { -p.t } else { p.t };
    let (vals, vecs) = sorted_eigen(&((t + t.transpose()) * 0.5));
    let mut q = vecs.transpose();
    if q.determinant() < 0.0 {
        for j in 0..3 {
            q[(2, j)] = -q[(2, j)];
        }
    }
    let c = axial(&(q * ((t - t.transpose()) * 0.5) * q.transpose()));
    let u = q * p.u;
    Ok(HyperboloidConfig {
        delta: [vals[0], vals[1], vals[2]],
        u: [u[0], u[1], u[2]],
        c: [c[0], c[1], c[2]],
    })
}

/// Equivalence of configurations: same hyperboloid and points related by a
/// symmetry. Circular hyperboloids have a continuous symmetry group; those
/// are compared through [`equiv_4d`] on the reconstructed parameters.
pub fn config_equiv(a: &HyperboloidConfig, b: &HyperboloidConfig, tol: f64) -> Equivalence {
    let scale = 1.0 + a.params().t.norm().max(b.params().t.norm());
    let ddelta = (0..3).map(|i| (a.delta[i] - b.delta[i]).abs()).fold(0.0, f64::max);
    if ddelta > tol * scale {
        return Equivalence {
            equivalent: false,
            witness: None,
            borderline: ddelta < 10.0 * tol * scale,
        };
    }
    if a.is_circular(tol * scale) {
        return equiv_4d(&a.params(), &b.params(), tol);
    }
    let dist = |x: &HyperboloidConfig| {
        (0..3)
            .map(|i| (x.u[i] - b.u[i]).abs().max((x.c[i] - b.c[i]).abs()))
            .fold(0.0, f64::max)
    };
    let (best, img) = a
        .symmetric_images()
        .into_iter()
        .enumerate()
        .map(|(k, x)| (dist(&x), k))
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .expect("four images");
    let signs = [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]][img];
    let equivalent = best <= tol * scale;
    Equivalence {
        equivalent,
        witness: equivalent.then(|| Matrix3::from_diagonal(&Vector3::from(signs))),
        borderline: (best - tol * scale).abs() < 10.0 * tol * scale && best > tol * scale / 10.0,
    }
}

/// Equivalence of rank-0 parameters `(d, u)`, i.e. of `A_{T_d, u}`. For
/// `d > 0` the stabilizer of `T_d` contains reflections fixing `e_3` (with
/// `det Q = -1` these send `u_3` to `-u_3`), so the invariant is `|u_3|`.
pub fn rank0_equiv(d: f64, u: &Vector3<f64>, d2: f64, u2: &Vector3<f64>, tol: f64) -> Result<bool> {
    if d < 0.0 || d2 < 0.0 {
        return Err(Error::Precondition("d must be nonnegative".into()));
    }
    if (d - d2).abs() > tol || (u.norm() - u2.norm()).abs() > tol {
        return Ok(false);
    }
    if d <= tol {
        return Ok(true);
    }
    Ok((u[2].abs() - u2[2].abs()).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(axis: Vector3<f64>, angle: f64) -> Matrix3<f64> {
        *nalgebra::Rotation3::from_axis_angle(&nalgebra::Unit::new_normalize(axis), angle).matrix()
    }

    fn sample() -> FloatParams4 {
        FloatParams4::new(
            Matrix3::new(2.0, 0.5, -1.0, 0.3, 1.0, 0.7, 0.2, -0.4, -1.5),
            Vector3::new(0.3, -1.0, 2.0),
        )
    }

    #[test]
    fn types() {
        assert_eq!(geometric_type(&Matrix3::identity(), DEFAULT_TOL).kind, Kind::Ellipsoid);
        let h = Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0));
        assert_eq!(geometric_type(&h, DEFAULT_TOL), GeometricType { rank: 3, kind: Kind::Hyperboloid });
        assert_eq!(geometric_type(&t_d(2.0), DEFAULT_TOL).rank, 0);
    }

    #[test]
    fn division_test() {
        let p = FloatParams4::new(Matrix3::identity(), Vector3::zeros());
        assert_eq!(is_division_4d(&p, DEFAULT_TOL), DivisionVerdict::Division);
        for t in [Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0)), sample().t, t_d(1.0)] {
            let p = FloatParams4::new(t, Vector3::new(0.5, 0.0, -2.0));
            match is_division_4d(&p, DEFAULT_TOL) {
                DivisionVerdict::ZeroDivisors { residual, .. } => assert!(residual < 1e-8),
                DivisionVerdict::Division => panic!("not a division algebra"),
            }
        }
    }

    #[test]
    fn orbit_is_equivalent() {
        let p = sample();
        for q in [rot(Vector3::new(1.0, 2.0, 3.0), 0.7), -rot(Vector3::new(0.0, 1.0, -1.0), 2.0), -Matrix3::identity()] {
            let e = equiv_4d(&p, &p.transform(&q), DEFAULT_TOL);
            assert!(e.equivalent);
            let w = e.witness.unwrap();
            assert!(residual(&p, &p.transform(&q), &w) < 1e-9);
        }
    }

    #[test]
    fn sign_flip_and_separation() {
        let p = sample();
        let flipped = FloatParams4::new(-p.t, p.u);
        assert!(equiv_4d(&p, &flipped, DEFAULT_TOL).equivalent);
        let i = FloatParams4::new(Matrix3::identity(), Vector3::zeros());
        let d = FloatParams4::new(Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, 2.0)), Vector3::zeros());
        assert!(!equiv_4d(&i, &d, DEFAULT_TOL).equivalent);
    }

    #[test]
    fn degenerate_spectra() {
        // P = I with axial vector and u: only their lengths and angle matter
        let a = FloatParams4::new(Matrix3::identity() + skew_from_axial(&Vector3::new(0.0, 0.0, 1.0)), Vector3::new(1.0, 0.0, 1.0));
        let b = FloatParams4::new(Matrix3::identity() + skew_from_axial(&Vector3::new(1.0, 0.0, 0.0)), Vector3::new(1.0, 1.0, 0.0));
        let c = FloatParams4::new(Matrix3::identity() + skew_from_axial(&Vector3::new(1.0, 0.0, 0.0)), Vector3::new(0.0, 1.0, 1.0));
        assert!(equiv_4d(&a, &b, DEFAULT_TOL).equivalent);
        assert!(!equiv_4d(&a, &c, DEFAULT_TOL).equivalent);
    }

    #[test]
    fn rank0_rule_matches_equivalence() {
        let cases = [
            (0.0, [1.0, 0.0, 0.0], 0.0, [0.0, 1.0, 0.0]),
            (1.0, [1.0, 0.0, 0.0], 1.0, [0.0, 1.0, 0.0]),
            (1.0, [0.0, 0.0, 1.0], 1.0, [1.0, 0.0, 0.0]),
            (1.0, [0.0, 0.0, 1.0], 1.0, [0.0, 0.0, -1.0]),
            (1.0, [0.6, 0.0, 0.8], 1.0, [0.0, -0.6, -0.8]),
            (2.0, [0.0, 0.0, 1.0], 1.0, [0.0, 0.0, 1.0]),
        ];
        for (d, u, d2, u2) in cases {
            let (u, u2) = (Vector3::from(u), Vector3::from(u2));
            let rule = rank0_equiv(d, &u, d2, &u2, DEFAULT_TOL).unwrap();
            let e = equiv_4d(&FloatParams4::new(t_d(d), u), &FloatParams4::new(t_d(d2), u2), DEFAULT_TOL);
            assert_eq!(rule, e.equivalent, "{d} {u:?} {d2} {u2:?}");
        }
        assert!(rank0_equiv(-1.0, &Vector3::zeros(), 0.0, &Vector3::zeros(), 1e-9).is_err());
    }

    #[test]
    fn hyperboloid_principal_axes() {
        let c = Vector3::new(0.5, -1.0, 2.0);
        let u = Vector3::new(1.0, 2.0, 3.0);
        let p = FloatParams4::new(Matrix3::from_diagonal(&Vector3::new(2.0, 1.0, -1.0)) + skew_from_axial(&c), u);
        let cfg = hyperboloid_config(&p, DEFAULT_TOL).unwrap();
        assert!((Vector3::from(cfg.delta) - Vector3::new(2.0, 1.0, -1.0)).amax() < 1e-12);
        assert!(equiv_4d(&p, &cfg.params(), DEFAULT_TOL).equivalent);
        let permuted = FloatParams4::new(Matrix3::from_diagonal(&Vector3::new(-1.0, 2.0, 1.0)), u);
        let cfg2 = hyperboloid_config(&permuted, DEFAULT_TOL).unwrap();
        assert!((Vector3::from(cfg2.delta) - Vector3::new(2.0, 1.0, -1.0)).amax() < 1e-12);
        assert!(equiv_4d(&permuted, &cfg2.params(), DEFAULT_TOL).equivalent);
        for img in cfg.symmetric_images() {
            assert!(config_equiv(&cfg, &img, DEFAULT_TOL).equivalent);
            assert!(equiv_4d(&cfg.params(), &img.params(), DEFAULT_TOL).equivalent);
        }
    }

    #[test]
    fn float_extraction_matches_exact() {
        use crate::lowdim::four::{build_a_tu, Params4};
        let p = Params4::from_i64([[1, 2, 0], [0, -1, 3], [1, 1, 1]], [2, 0, -1]);
        let f = extract_tu_float(&build_a_tu(&p)).unwrap();
        assert!((f.t - p.to_f64().t).amax() < 1e-12);
        assert!((f.u - p.to_f64().u).amax() < 1e-12);
    }
}
