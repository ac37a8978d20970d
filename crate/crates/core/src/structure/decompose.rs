//! The splitting `A = R1 + U` of a quadratic algebra, the inner product
//! `<u, v> = -1/2 (uv + vu)` on `U`, and Gram-Schmidt over the rationals.
//!
//! Normalizing a vector to `v^2 = -1` needs a rational square root of its
//! norm. When a norm is not a square we look for another vector in the same
//! span whose norm is one (see [`Decomposition::find_unit_vector`]).

use num::{BigInt, Integer, One, Signed, Zero};

use crate::algebra::{Algebra, Element, MinimalQuadratic};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::{isqrt, rational_sqrt, Rational};
use crate::subspace::Subspace;

/// Evaluations allowed when searching integer combinations for a unit vector.
const SQUARE_SEARCH_BUDGET: usize = 300_000;

/// A quadratic unital algebra together with its trace functional and a basis
/// of `U`.
#[derive(Clone, Debug)]
pub struct Decomposition<'a> {
    alg: &'a Algebra,
    one: Element,
    // t(b_i) for each basis vector; t(x) = tau . x
    tau: Vec<Rational>,
    u_basis: Vec<Element>,
    gram: QMatrix,
}

impl<'a> Decomposition<'a> {
    /// Fails with `NotQuadratic` unless every basis vector is quadratic and the
    /// trace-free parts `u_i` satisfy `u_i^2, u_i u_j + u_j u_i in R1`. Those
    /// conditions together are equivalent to the algebra being quadratic.
    pub fn new(alg: &'a Algebra) -> Result<Self> {
        let one = alg.unit_element()?;
        let n = alg.dim();
        let unit = alg.unit().expect("unit checked above");
        let mut tau = Vec::with_capacity(n);
        for i in 0..n {
            let t = match alg.minimal_quadratic(&alg.basis_element(i))? {
                MinimalQuadratic::Scalar(l) => &l + &l,
                MinimalQuadratic::Quadratic { trace, .. } => trace,
                MinimalQuadratic::NotQuadratic => return Err(Error::NotQuadratic),
            };
            tau.push(t);
        }
        let half = Rational::new(1.into(), 2.into());
        let u_basis: Vec<Element> = (0..n)
            .filter(|&i| i != unit)
            .map(|i| &alg.basis_element(i) - &one.scale(&(&tau[i] * &half)))
            .collect();
        let m = u_basis.len();
        let mut gram = QMatrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let uv = alg.mul(&u_basis[i], &u_basis[j]);
                let s = if i == j { &uv + &uv } else { &uv + &alg.mul(&u_basis[j], &u_basis[i]) };
                let lambda = alg.scalar_value(&s).ok_or(Error::NotQuadratic)?;
                let g = -(lambda * &half);
                gram[(i, j)] = g.clone();
                gram[(j, i)] = g;
            }
        }
        Ok(Decomposition {
            alg,
            one,
            tau,
            u_basis,
            gram,
        })
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    pub fn one(&self) -> &Element {
        &self.one
    }

    /// The trace-free parts of the non-unit basis vectors; a basis of `U`.
    pub fn u_basis(&self) -> &[Element] {
        &self.u_basis
    }

    pub fn trace(&self, x: &Element) -> Rational {
        x.dot(&Element::new(self.tau.clone()))
    }

    /// `t(x)/2`, the coefficient of 1 in `A = R1 + U`.
    pub fn scalar_part(&self, x: &Element) -> Rational {
        self.trace(x) / Rational::from_integer(2.into())
    }

    /// `x - t(x)/2`.
    pub fn vector_part(&self, x: &Element) -> Element {
        x - &self.one.scale(&self.scalar_part(x))
    }

    pub fn u_subspace(&self) -> Subspace {
        let rows: Vec<Vec<Rational>> = self.u_basis.iter().map(|u| u.coords().to_vec()).collect();
        Subspace::span(self.alg.dim(), &rows).expect("rows share the ambient length")
    }

    /// `-1/2 (xy + yx)` read as a scalar via the trace (exact for `x, y in U`).
    pub fn inner(&self, x: &Element, y: &Element) -> Rational {
        let s = &self.alg.mul(x, y) + &self.alg.mul(y, x);
        -self.scalar_part(&s) / Rational::from_integer(2.into())
    }

    /// Gram matrix of the form on the `u_basis`.
    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    fn coords_in_u(&self, x: &Element) -> Vec<Rational> {
        let unit = self.alg.unit().expect("decomposition is unital");
        let v = self.vector_part(x);
        (0..self.alg.dim())
            .filter(|&i| i != unit)
            .map(|i| v.coords()[i].clone())
            .collect()
    }

    fn from_u_coords(&self, c: &[Rational]) -> Element {
        let mut out = Element::zero(self.alg.dim());
        for (ci, u) in c.iter().zip(&self.u_basis) {
            if !ci.is_zero() {
                out = &out + &u.scale(ci);
            }
        }
        out
    }

    fn form(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let gb = self.gram.mul_vec(b).expect("coordinate length matches U");
        a.iter().zip(&gb).map(|(x, y)| x * y).sum()
    }

    /// Exact Gram-Schmidt on the vector parts of `vs` without normalization.
    /// Returns orthogonal vectors with their norms `<w, w>`, skipping
    /// dependent inputs. `Err(w)` reports a nonzero vector with `<w, w> <= 0`.
    pub fn orthogonalize(&self, vs: &[Element]) -> std::result::Result<Vec<(Element, Rational)>, Element> {
        let mut out: Vec<(Vec<Rational>, Rational)> = Vec::new();
        for v in vs {
            let mut c = self.coords_in_u(v);
            for (w, d) in &out {
                let coef = self.form(&c, w) / d;
                if coef.is_zero() {
                    continue;
                }
                for (ci, wi) in c.iter_mut().zip(w) {
                    *ci -= &coef * wi;
                }
            }
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            let d = self.form(&c, &c);
            if !d.is_positive() {
                return Err(self.from_u_coords(&c));
            }
            out.push((c, d));
        }
        Ok(out.into_iter().map(|(c, d)| (self.from_u_coords(&c), d)).collect())
    }

    /// An element of `span(vs)` (vector parts) with `<x, x> = 1`, if one can
    /// be found. Tries the inputs, then an orthogonal basis, then small
    /// integer combinations of up to five orthogonal vectors.
    pub fn find_unit_vector(&self, vs: &[Element]) -> Option<Element> {
        let orth = self.orthogonalize(vs).ok()?;
        if let Some(x) = self.quick_unit_vector(vs, &orth) {
            return Some(x);
        }
        self.searched_unit_vector(&orth)
    }

    /// Inputs, orthogonalized inputs, and equal-norm groups; no search.
    fn quick_unit_vector(&self, vs: &[Element], orth: &[(Element, Rational)]) -> Option<Element> {
        for v in vs {
            let p = self.vector_part(v);
            let d = self.inner(&p, &p);
            if d.is_positive() {
                if let Some(r) = rational_sqrt(&d) {
                    return Some(p.scale(&r.recip()));
                }
            }
        }
        for (w, d) in orth {
            if let Some(r) = rational_sqrt(d) {
                return Some(w.scale(&r.recip()));
            }
        }
        self.equal_norm_combination(orth)
    }

    fn searched_unit_vector(&self, orth: &[(Element, Rational)]) -> Option<Element> {
        let m = orth.len().min(5);
        if m < 2 {
            return None;
        }
        let norms: Vec<&Rational> = orth[..m].iter().map(|(_, d)| d).collect();
        let den = norms.iter().fold(BigInt::one(), |acc, d| acc.lcm(d.denom()));
        let ints: Vec<BigInt> = norms
            .iter()
            .map(|d| d.numer() * (&den / d.denom()))
            .collect();
        let c = search_square_combination(&ints, &den)?;
        let mut x = Element::zero(self.alg.dim());
        for (ci, (w, _)) in c.iter().zip(orth) {
            if *ci != 0 {
                x = &x + &w.scale(&Rational::from_integer(BigInt::from(*ci)));
            }
        }
        let d = self.inner(&x, &x);
        let r = rational_sqrt(&d)?;
        Some(x.scale(&r.recip()))
    }

    /// With `k` orthogonal vectors of the same norm `p/q`, a combination with
    /// integer coefficients whose squares sum to `pq` has norm `p^2`.
    fn equal_norm_combination(&self, orth: &[(Element, Rational)]) -> Option<Element> {
        let mut best: Option<Vec<&(Element, Rational)>> = None;
        for (_, d) in orth {
            let group: Vec<&(Element, Rational)> = orth.iter().filter(|(_, e)| e == d).take(4).collect();
            if group.len() >= 2 && best.as_ref().is_none_or(|b| group.len() > b.len()) {
                best = Some(group);
            }
        }
        let group = best?;
        let d = &group[0].1;
        let c = sum_of_squares(&(d.numer() * d.denom()), group.len())?;
        let mut x = Element::zero(self.alg.dim());
        for (ci, (w, _)) in c.iter().zip(&group) {
            if !ci.is_zero() {
                x = &x + &w.scale(&Rational::from_integer(ci.clone()));
            }
        }
        let r = rational_sqrt(&self.inner(&x, &x))?;
        Some(x.scale(&r.recip()))
    }

    /// Like [`extend_in`](Self::extend_in), but if the complement has no
    /// easily found unit vector, retries with `w` and its images `m w` for
    /// `m` in `mults`. In composition-like algebras these all share the norm
    /// of `w`.
    pub fn extend_with_orbit(&self, pool: &[Element], existing: &[Element], mults: &[Element]) -> Result<Element> {
        let rest = self.complement(pool, existing);
        let w = rest.first().ok_or(Error::SpansU)?;
        let orth = self.orthogonalize(&rest).map_err(|_| Error::NotLocallyComplex)?;
        if let Some(x) = self.quick_unit_vector(&rest, &orth) {
            return Ok(x);
        }
        let mut cands = vec![w.clone()];
        cands.extend(mults.iter().map(|m| self.alg.mul(m, w)));
        if let Ok(orbit) = self.orthogonalize(&cands) {
            if let Some(x) = self.quick_unit_vector(&cands, &orbit) {
                return Ok(x);
            }
        }
        self.searched_unit_vector(&orth).ok_or(Error::NonSquareNorm)
    }

    /// Projects each pool vector off the orthonormal `existing` family and
    /// returns a unit vector in the span of what is left.
    pub fn extend_in(&self, pool: &[Element], existing: &[Element]) -> Result<Element> {
        let rest = self.complement(pool, existing);
        if rest.is_empty() {
            return Err(Error::SpansU);
        }
        self.find_unit_vector(&rest).ok_or(Error::NonSquareNorm)
    }

    /// Like [`extend_in`](Self::extend_in) but without normalizing: returns a
    /// vector orthogonal to `existing` and its norm.
    pub fn extend_in_unnormalized(&self, pool: &[Element], existing: &[Element]) -> Result<(Element, Rational)> {
        let rest = self.complement(pool, existing);
        let v = rest.into_iter().next().ok_or(Error::SpansU)?;
        let d = self.inner(&v, &v);
        Ok((v, d))
    }

    fn complement(&self, pool: &[Element], existing: &[Element]) -> Vec<Element> {
        pool.iter()
            .map(|u| {
                // v = u + sum alpha_i e_i with alpha_i = 1/2 (u e_i + e_i u) = -<u, e_i>
                let mut v = self.vector_part(u);
                for e in existing {
                    let alpha = -self.inner(&v, e);
                    if !alpha.is_zero() {
                        v = &v + &e.scale(&alpha);
                    }
                }
                v
            })
            .filter(|v| !v.is_zero())
            .collect()
    }

    /// A full orthonormal basis `e_1..e_{n-1}` of `U` (so `e_i^2 = -1` and the
    /// `e_i` pairwise anticommute), built one vector at a time.
    pub fn orthonormal_basis(&self) -> Result<Vec<Element>> {
        let mut out: Vec<Element> = Vec::new();
        while out.len() < self.u_basis.len() {
            let e = self.extend_in(&self.u_basis, &out)?;
            out.push(e);
        }
        Ok(out)
    }
}

/// `n = c_1^2 + ... + c_k^2` by a bounded depth-first search, largest
/// terms first.
fn sum_of_squares(n: &BigInt, k: usize) -> Option<Vec<BigInt>> {
    fn go(n: &BigInt, k: usize, budget: &mut usize, out: &mut Vec<BigInt>) -> bool {
        if k == 1 {
            return match isqrt(n) {
                Some(r) => {
                    out.push(r);
                    true
                }
                None => false,
            };
        }
        if k == 3 && !is_sum_of_three_squares(n) {
            return false;
        }
        let mut a = n.sqrt();
        loop {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            out.push(a.clone());
            if go(&(n - &a * &a), k - 1, budget, out) {
                return true;
            }
            out.pop();
            if a.is_zero() {
                return false;
            }
            a -= 1;
        }
    }
    if n.is_negative() || k == 0 {
        return None;
    }
    let mut budget = SQUARE_SEARCH_BUDGET;
    let mut out = Vec::with_capacity(k);
    go(n, k, &mut budget, &mut out).then_some(out)
}

/// Legendre: `n` is a sum of three squares unless `n = 4^a (8b + 7)`.
fn is_sum_of_three_squares(n: &BigInt) -> bool {
    let mut m = n.clone();
    let four = BigInt::from(4);
    while !m.is_zero() && (&m % &four).is_zero() {
        m /= &four;
    }
    &m % BigInt::from(8) != BigInt::from(7)
}

/// Enumerates integer vectors `c` by growing max-norm and returns the first
/// with `sum c_k^2 ints_k / den` a rational square.
fn search_square_combination(ints: &[BigInt], den: &BigInt) -> Option<Vec<i64>> {
    let m = ints.len();
    let mut evals = 0usize;
    let mut bound = 1i64;
    while evals < SQUARE_SEARCH_BUDGET {
        let mut c = vec![-bound; m];
        loop {
            let max = c.iter().map(|x| x.abs()).max().unwrap_or(0);
            let first_nonzero_positive = c.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);
            if max == bound && first_nonzero_positive {
                evals += 1;
                let s: BigInt = c
                    .iter()
                    .zip(ints)
                    .map(|(&ci, n)| n * BigInt::from(ci * ci))
                    .sum();
                if s.is_positive() && isqrt(&(&s * den)).is_some() {
                    return Some(c);
                }
            }
            // odometer increment over [-bound, bound]^m
            let mut k = 0;
            loop {
                if k == m {
                    break;
                }
                if c[k] < bound {
                    c[k] += 1;
                    break;
                }
                c[k] = -bound;
                k += 1;
            }
            if k == m {
                break;
            }
        }
        bound += 1;
    }
    None
}

/// `U = {u not in R : u^2 in R} + {0}` of a quadratic algebra.
pub fn compute_u(a: &Algebra) -> Result<Subspace> {
    Ok(Decomposition::new(a)?.u_subspace())
}

/// One more unit vector anticommuting with `existing`, which must be an
/// orthonormal family in `U` (squares `-1`, pairwise anticommuting).
pub fn extend_anticommuting_basis(a: &Algebra, existing: &[Element]) -> Result<Element> {
    let d = Decomposition::new(a)?;
    check_orthonormal(&d, existing)?;
    if d.orthogonalize(d.u_basis()).is_err() {
        return Err(Error::NotLocallyComplex);
    }
    d.extend_in(d.u_basis(), existing)
}

pub(crate) fn check_orthonormal(d: &Decomposition<'_>, existing: &[Element]) -> Result<()> {
    let a = d.algebra();
    let minus_one = -d.one().clone();
    for (i, e) in existing.iter().enumerate() {
        if e.len() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: e.len(),
            });
        }
        if a.mul(e, e) != minus_one {
            return Err(Error::Precondition(format!("element {i} does not square to -1")));
        }
        for f in &existing[..i] {
            if !(&a.mul(e, f) + &a.mul(f, e)).is_zero() {
                return Err(Error::Precondition(format!("element {i} does not anticommute with an earlier one")));
            }
        }
    }
    Ok(())
}
