//! Exact decision procedures for the algebra classes: quadratic, locally
//! complex, alternative, super-alternative, nicely normed, and commutative
//! locally complex (`J_n`).
//!
//! Identities that are quadratic in one variable are checked on the
//! polarized family `{e_i} ∪ {e_i + e_j}`, which makes every verdict a proof.

use std::collections::HashMap;

use num::{BigInt, Integer, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Element, MinimalQuadratic};
use crate::cayley_dickson::{jordan_spin, Grading};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::{format_rational, int, rational_sqrt, Rational};
use crate::structure::decompose::Decomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

/// `Holds`, or a counterexample.
#[derive(Clone, Debug, PartialEq)]
pub enum Check<W> {
    Holds,
    Fails(W),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }
}

/// Which side of the alternative laws failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Law {
    /// `x^2 y = x (x y)`
    Left,
    /// `y x^2 = (y x) x`
    Right,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityWitness {
    pub x: Element,
    pub y: Element,
    pub law: Law,
    /// Left side minus right side; nonzero.
    pub defect: Element,
}

/// Decides whether `1, x, x^2` are dependent for every `x` by expanding the
/// 2x2 minors of `(x, x^2)` (unit coordinate dropped) as cubic polynomials
/// and checking every coefficient. The witness is an `x` with `1, x, x^2`
/// independent.
pub fn is_quadratic(a: &Algebra) -> Result<Check<Element>> {
    let unit = a.unit().ok_or(Error::NotUnital)?;
    let n = a.dim();
    // square[l] = [(p, q, s)] with (x^2)_l = sum s x_p x_q, p <= q
    let square: Vec<Vec<(usize, usize, Rational)>> = (0..n)
        .map(|l| {
            let mut terms = Vec::new();
            for p in 0..n {
                for q in p..n {
                    let s = if p == q {
                        a.constant(p, p, l).clone()
                    } else {
                        a.constant(p, q, l) + a.constant(q, p, l)
                    };
                    if !s.is_zero() {
                        terms.push((p, q, s));
                    }
                }
            }
            terms
        })
        .collect();
    let others: Vec<usize> = (0..n).filter(|&i| i != unit).collect();
    let pairs: Vec<(usize, usize)> = others
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| others[i + 1..].iter().map(move |&l| (k, l)))
        .collect();
    let bad = pairs.par_iter().find_map_first(|&(k, l)| {
        let mut poly: HashMap<[usize; 3], Rational> = HashMap::new();
        for (p, q, s) in &square[l] {
            let mut m = [k, *p, *q];
            m.sort_unstable();
            *poly.entry(m).or_insert_with(Rational::zero) += s;
        }
        for (p, q, s) in &square[k] {
            let mut m = [l, *p, *q];
            m.sort_unstable();
            *poly.entry(m).or_insert_with(Rational::zero) -= s;
        }
        poly.into_iter().find(|(_, c)| !c.is_zero()).map(|(m, _)| m)
    });
    match bad {
        None => Ok(Check::Holds),
        Some(m) => quadratic_witness(a, &m).map(Check::Fails),
    }
}

// A nonzero cubic in at most three variables, of degree <= 3 in each, is
// nonzero somewhere on {0,1,2,3}^3.
fn quadratic_witness(a: &Algebra, vars: &[usize; 3]) -> Result<Element> {
    let mut vs = vars.to_vec();
    vs.dedup();
    let k = vs.len();
    for code in 1..4usize.pow(k as u32) {
        let mut x = Element::zero(a.dim());
        let mut c = code;
        for &v in &vs {
            let digit = (c % 4) as i64;
            c /= 4;
            if digit != 0 {
                x = &x + &a.basis_element(v).scale(&int(digit));
            }
        }
        if a.minimal_quadratic(&x)? == MinimalQuadratic::NotQuadratic {
            return Ok(x);
        }
    }
    Err(Error::Inconsistent("nonzero quadratic defect without a grid witness".into()))
}

/// A basis `1, e_1, ..., e_{n-1}` with `e_i^2 = -norms[i]` and pairwise
/// anticommuting `e_i`. When every norm is 1 this is the standard basis of a
/// locally complex algebra; otherwise no rational normalization was found.
#[derive(Clone, Debug, PartialEq)]
pub struct LocallyComplexCertificate {
    pub basis: Vec<Element>,
    /// Rows are the basis vectors in the algebra's coordinates.
    pub change_of_basis: QMatrix,
    /// `norms[0]` belongs to the unit and is `-1` by convention (`1^2 = 1`).
    pub norms: Vec<Rational>,
}

impl LocallyComplexCertificate {
    pub fn is_normalized(&self) -> bool {
        self.norms[1..].iter().all(|d| *d == int(1))
    }

    /// Re-checks `e_i^2 = -norms[i]` and anticommutation exactly.
    pub fn verify(&self, a: &Algebra) -> bool {
        let one = match a.unit_element() {
            Ok(o) => o,
            Err(_) => return false,
        };
        if self.basis.first() != Some(&one) {
            return false;
        }
        let es = &self.basis[1..];
        es.iter().enumerate().all(|(i, e)| {
            a.mul(e, e) == one.scale(&-self.norms[i + 1].clone())
                && es[..i].iter().all(|f| (&a.mul(e, f) + &a.mul(f, e)).is_zero())
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LcFailure {
    /// `1, x, x^2` are independent.
    NotQuadratic(Element),
    /// `x != 0` with `x^2 = 0`.
    Nilpotent(Element),
    /// A nontrivial idempotent.
    Idempotent(Element),
    /// A nonscalar `x` with `n(x) <= 0`.
    NonPositiveNorm { x: Element, norm: Rational },
}

/// `Ok(Holds)` unless a trace-free vector has nonpositive norm or the
/// algebra is not quadratic. Dimension 1 holds vacuously.
pub fn is_locally_complex(a: &Algebra) -> Result<Check<LcFailure>> {
    a.unit_element()?;
    let d = match Decomposition::new(a) {
        Ok(d) => d,
        Err(Error::NotQuadratic) => {
            return match is_quadratic(a)? {
                Check::Fails(x) => Ok(Check::Fails(LcFailure::NotQuadratic(x))),
                Check::Holds => Err(Error::Inconsistent("quadratic test disagrees with U construction".into())),
            }
        }
        Err(e) => return Err(e),
    };
    Ok(match d.orthogonalize(d.u_basis()) {
        Ok(_) => Check::Holds,
        Err(w) => Check::Fails(non_positive_witness(&d, w)),
    })
}

/// The certificate when the algebra is locally complex, else the failure.
pub fn locally_complex_certificate(a: &Algebra) -> Result<std::result::Result<LocallyComplexCertificate, LcFailure>> {
    a.unit_element()?;
    let d = match Decomposition::new(a) {
        Ok(d) => d,
        Err(Error::NotQuadratic) => {
            return match is_quadratic(a)? {
                Check::Fails(x) => Ok(Err(LcFailure::NotQuadratic(x))),
                Check::Holds => Err(Error::Inconsistent("quadratic test disagrees with U construction".into())),
            }
        }
        Err(e) => return Err(e),
    };
    let orth = match d.orthogonalize(d.u_basis()) {
        Ok(o) => o,
        Err(w) => return Ok(Err(non_positive_witness(&d, w))),
    };
    let one = d.one().clone();
    let (vectors, norms): (Vec<Element>, Vec<Rational>) = match d.orthonormal_basis() {
        Ok(es) => {
            let k = es.len();
            (es, vec![int(1); k])
        }
        Err(Error::NonSquareNorm) => orth.into_iter().unzip(),
        Err(e) => return Err(e),
    };
    let mut basis = vec![one];
    basis.extend(vectors);
    let mut all_norms = vec![int(-1)];
    all_norms.extend(norms);
    let change_of_basis = QMatrix::from_rows(basis.iter().map(|e| e.coords().to_vec()).collect())?;
    Ok(Ok(LocallyComplexCertificate {
        basis,
        change_of_basis,
        norms: all_norms,
    }))
}

fn non_positive_witness(d: &Decomposition<'_>, w: Element) -> LcFailure {
    let a = d.algebra();
    let norm = d.inner(&w, &w);
    if norm.is_zero() {
        return LcFailure::Nilpotent(w);
    }
    // w^2 = -norm = beta^2 > 0: (1 + w / beta) / 2 is idempotent
    if let Some(beta) = rational_sqrt(&-norm.clone()) {
        let half = Rational::new(1.into(), 2.into());
        let e = (d.one() + &w.scale(&beta.recip())).scale(&half);
        debug_assert_eq!(a.mul(&e, &e), e);
        return LcFailure::Idempotent(e);
    }
    LcFailure::NonPositiveNorm { x: w, norm }
}

/// `x ∈ {e_i} ∪ {e_i + e_j : i < j}`.
pub fn polarized_family(n: usize) -> Vec<Element> {
    let mut out: Vec<Element> = (0..n).map(|i| Element::basis(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(&Element::basis(n, i) + &Element::basis(n, j));
        }
    }
    out
}

/// Checks `x^2 y = x(xy)` and `y x^2 = (yx)x` for every `x` in `xs` and every
/// basis vector `y`. The first failure in family order is returned.
/// Both laws are homogeneous (two products on each side, `x` twice), so they
/// are checked on the integer table `D c_ijk` and integer multiples of `x`.
pub fn check_alternative_laws(a: &Algebra, xs: &[Element]) -> Check<IdentityWitness> {
    let n = a.dim();
    let table = IntTable::new(a);
    // x(x e_k) = sum_j (x e_k)_j x e_j, so the columns of L_x and R_x suffice
    let apply = |cols: &[Vec<BigInt>], v: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        for (c, col) in v.iter().zip(cols) {
            if !c.is_zero() {
                for (o, x) in out.iter_mut().zip(col) {
                    *o += c * x;
                }
            }
        }
        out
    };
    let found = xs.par_iter().find_map_first(|x| {
        let xi = integer_multiple(x);
        let x2 = table.mul(&xi, &xi);
        let left_cols: Vec<Vec<BigInt>> = (0..n).map(|k| table.mul_basis_right(&xi, k)).collect();
        let right_cols: Vec<Vec<BigInt>> = (0..n).map(|k| table.mul_basis_left(k, &xi)).collect();
        (0..n).find_map(|k| {
            if table.mul_basis_right(&x2, k) != apply(&left_cols, &left_cols[k]) {
                return Some((x, k, Law::Left));
            }
            (table.mul_basis_left(k, &x2) != apply(&right_cols, &right_cols[k])).then_some((x, k, Law::Right))
        })
    });
    match found {
        None => Check::Holds,
        Some((x, k, law)) => {
            let y = a.basis_element(k);
            let x2 = a.mul(x, x);
            let defect = match law {
                Law::Left => &a.mul(&x2, &y) - &a.mul(x, &a.mul(x, &y)),
                Law::Right => &a.mul(&y, &x2) - &a.mul(&a.mul(&y, x), x),
            };
            Check::Fails(IdentityWitness {
                x: x.clone(),
                y,
                law,
                defect,
            })
        }
    }
}

/// Structure constants times their common denominator.
struct IntTable {
    n: usize,
    // (i, j) -> [(k, D c_ijk)]
    sparse: Vec<Vec<(usize, BigInt)>>,
}

impl IntTable {
    fn new(a: &Algebra) -> Self {
        let n = a.dim();
        let den = a.constants().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let sparse = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter_map(|k| {
                        let c = a.constant(ij / n, ij % n, k);
                        (!c.is_zero()).then(|| (k, c.numer() * (&den / c.denom())))
                    })
                    .collect()
            })
            .collect();
        IntTable { n, sparse }
    }

    fn mul(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        let mut out = vec![BigInt::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xi * yj;
                for (k, c) in &self.sparse[i * n + j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    /// `x e_k`
    fn mul_basis_right(&self, x: &[BigInt], k: usize) -> Vec<BigInt> {
        let n = self.n;
        let mut out = vec![BigInt::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (l, c) in &self.sparse[i * n + k] {
                out[*l] += xi * c;
            }
        }
        out
    }

    /// `e_k x`
    fn mul_basis_left(&self, k: usize, x: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        let mut out = vec![BigInt::zero(); n];
        for (j, xj) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (l, c) in &self.sparse[k * n + j] {
                out[*l] += xj * c;
            }
        }
        out
    }
}

fn integer_multiple(x: &Element) -> Vec<BigInt> {
    let den = x.coords().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    x.coords().iter().map(|c| c.numer() * (&den / c.denom())).collect()
}

pub fn is_alternative(a: &Algebra) -> Check<IdentityWitness> {
    check_alternative_laws(a, &polarized_family(a.dim()))
}

/// Both alternative laws for homogeneous `u`, polarized within each part of
/// the grading, against every basis vector.
pub fn is_super_alternative(a: &Algebra, g: &Grading) -> Result<Check<IdentityWitness>> {
    g.validate(a)?;
    let mut family = Vec::new();
    for part in [&g.even, &g.odd] {
        let vs: Vec<Element> = part.basis().iter().cloned().map(Element::new).collect();
        for (i, v) in vs.iter().enumerate() {
            family.push(v.clone());
            for w in &vs[i + 1..] {
                family.push(v + w);
            }
        }
    }
    Ok(check_alternative_laws(a, &family))
}

#[derive(Clone, Debug, PartialEq)]
pub enum NicelyNormedFailure {
    NotLocallyComplex(LcFailure),
    /// `u v - v u` has nonzero scalar part `2 * scalar`.
    Commutator { u: Element, v: Element, scalar: Rational },
}

/// Nicely normed iff locally complex and, for an orthonormal basis of `U`,
/// `e_i e_j` has no scalar part when `i != j`. Since `e_i, e_j` anticommute,
/// that scalar part is half the scalar part of `[e_i, e_j]`, an alternating
/// form on `U`; so it suffices to test any basis of `U`. Dimension 1 holds.
pub fn is_nicely_normed(a: &Algebra) -> Result<Check<NicelyNormedFailure>> {
    a.unit_element()?;
    let d = match Decomposition::new(a) {
        Ok(d) => d,
        Err(Error::NotQuadratic) => {
            if let Check::Fails(f) = is_locally_complex(a)? {
                return Ok(Check::Fails(NicelyNormedFailure::NotLocallyComplex(f)));
            }
            return Err(Error::Inconsistent("quadratic test disagrees with U construction".into()));
        }
        Err(e) => return Err(e),
    };
    if let Err(w) = d.orthogonalize(d.u_basis()) {
        return Ok(Check::Fails(NicelyNormedFailure::NotLocallyComplex(non_positive_witness(&d, w))));
    }
    let us = d.u_basis();
    for (i, u) in us.iter().enumerate() {
        for v in &us[i + 1..] {
            let c = &a.mul(u, v) - &a.mul(v, u);
            let s = d.scalar_part(&c);
            if !s.is_zero() {
                return Ok(Check::Fails(NicelyNormedFailure::Commutator {
                    u: u.clone(),
                    v: v.clone(),
                    scalar: s,
                }));
            }
        }
    }
    Ok(Check::Holds)
}

#[derive(Clone, Debug, PartialEq)]
pub enum JnVerdict {
    /// Commutative, hence isomorphic to `J_n`. `iso` maps coordinates in the
    /// algebra to coordinates in `J_n`; `None` if no rational orthonormal
    /// basis was found.
    Yes { iso: Option<QMatrix> },
    /// Basis indices `(i, j)` with `e_i e_j != e_j e_i`.
    No { i: usize, j: usize },
}

/// For a locally complex algebra, commutativity is equivalent to being `J_n`.
pub fn is_commutative_jn(a: &Algebra) -> Result<JnVerdict> {
    let cert = match locally_complex_certificate(a)? {
        Ok(c) => c,
        Err(_) => return Err(Error::NotLocallyComplex),
    };
    if let Some((i, j)) = a.is_commutative_on_basis() {
        return Ok(JnVerdict::No { i, j });
    }
    if !cert.is_normalized() {
        return Ok(JnVerdict::Yes { iso: None });
    }
    let j = jordan_spin(a.dim())?;
    let iso = cert.change_of_basis.transpose().inverse()?;
    if crate::structure::embedding::check_homomorphism(&iso, a, &j)?.holds() {
        Ok(JnVerdict::Yes { iso: Some(iso) })
    } else {
        Err(Error::Inconsistent("commutative locally complex algebra failed the J_n map".into()))
    }
}

/// Checks `(xy)(zx) = (x(yz))x` on all basis triples; returns the first
/// failing `(x, y, z)` indices.
pub fn moufang_failure(a: &Algebra) -> Option<(usize, usize, usize)> {
    let n = a.dim();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .collect();
    triples.into_par_iter().find_first(|&(i, j, k)| {
        let (x, y, z) = (a.basis_element(i), a.basis_element(j), a.basis_element(k));
        let lhs = a.mul(&a.mul(&x, &y), &a.mul(&z, &x));
        let rhs = a.mul(&a.mul(&x, &a.mul(&y, &z)), &x);
        lhs != rhs
    })
}

/// A yes/no/unknown flag with a human-readable witness or certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Flag {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Flag {
    pub fn new(verdict: Verdict, witness: impl Into<String>) -> Self {
        Flag {
            verdict,
            witness: Some(witness.into()),
        }
    }

    pub fn bare(verdict: Verdict) -> Self {
        Flag { verdict, witness: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadratic: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locally_complex: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternative: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub super_alternative: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nicely_normed: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutative: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub has_zero_divisors: Option<Flag>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertySet {
    All,
    Quadratic,
    LocallyComplex,
    Alternative,
    SuperAlternative,
    NicelyNormed,
}

impl std::str::FromStr for PropertySet {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "all" => PropertySet::All,
            "quadratic" => PropertySet::Quadratic,
            "lc" => PropertySet::LocallyComplex,
            "alt" => PropertySet::Alternative,
            "superalt" => PropertySet::SuperAlternative,
            "nn" => PropertySet::NicelyNormed,
            other => return Err(format!("unknown property `{other}`")),
        })
    }
}

fn show(a: &Algebra, x: &Element) -> String {
    x.display_with(a.labels())
}

fn lc_failure_text(a: &Algebra, f: &LcFailure) -> String {
    match f {
        LcFailure::NotQuadratic(x) => format!("1, x, x^2 independent for x = {}", show(a, x)),
        LcFailure::Nilpotent(x) => format!("nilpotent element {}", show(a, x)),
        LcFailure::Idempotent(x) => format!("nontrivial idempotent {}", show(a, x)),
        LcFailure::NonPositiveNorm { x, norm } => {
            format!("n({}) = {} <= 0", show(a, x), format_rational(norm))
        }
    }
}

fn identity_text(a: &Algebra, w: &IdentityWitness) -> String {
    let law = match w.law {
        Law::Left => "x^2 y != x(xy)",
        Law::Right => "y x^2 != (yx)x",
    };
    format!("{law} for x = {}, y = {}", show(a, &w.x), show(a, &w.y))
}

/// Runs the selected checks. Zero divisors are searched only for `All`.
pub fn property_report(
    a: &Algebra,
    grading: Option<&Grading>,
    which: PropertySet,
    zero_divisor_budget: usize,
    seed: u64,
) -> Result<PropertyReport> {
    use PropertySet as P;
    let want = |p: P| which == P::All || which == p;
    let unital = a.unit().is_some();
    let no_unit = || Flag::new(Verdict::Unknown, "algebra has no unit");
    let mut r = PropertyReport {
        dim: a.dim(),
        quadratic: None,
        locally_complex: None,
        alternative: None,
        super_alternative: None,
        nicely_normed: None,
        commutative: None,
        has_zero_divisors: None,
    };
    if want(P::Quadratic) {
        r.quadratic = Some(if !unital {
            no_unit()
        } else {
            match is_quadratic(a)? {
                Check::Holds => Flag::new(Verdict::Yes, "all cubic minor coefficients vanish"),
                Check::Fails(x) => Flag::new(Verdict::No, format!("1, x, x^2 independent for x = {}", show(a, &x))),
            }
        });
    }
    if want(P::LocallyComplex) {
        r.locally_complex = Some(if !unital {
            no_unit()
        } else {
            match locally_complex_certificate(a)? {
                Ok(c) => {
                    let labels: Vec<String> = c.basis.iter().map(|e| show(a, e)).collect();
                    let note = if c.is_normalized() { "" } else { " (unnormalized)" };
                    Flag::new(Verdict::Yes, format!("anticommuting basis{note}: [{}]", labels.join(", ")))
                }
                Err(f) => Flag::new(Verdict::No, lc_failure_text(a, &f)),
            }
        });
    }
    if want(P::Alternative) {
        r.alternative = Some(match is_alternative(a) {
            Check::Holds => Flag::new(Verdict::Yes, "polarized basis family checked"),
            Check::Fails(w) => Flag::new(Verdict::No, identity_text(a, &w)),
        });
    }
    if want(P::SuperAlternative) {
        r.super_alternative = Some(match grading {
            None => Flag::new(Verdict::Unknown, "no grading supplied"),
            Some(g) => match is_super_alternative(a, g)? {
                Check::Holds => Flag::new(Verdict::Yes, "polarized homogeneous family checked"),
                Check::Fails(w) => Flag::new(Verdict::No, identity_text(a, &w)),
            },
        });
    }
    if want(P::NicelyNormed) {
        r.nicely_normed = Some(if !unital {
            no_unit()
        } else {
            match is_nicely_normed(a)? {
                Check::Holds => Flag::new(Verdict::Yes, "commutators of U have no scalar part"),
                Check::Fails(NicelyNormedFailure::NotLocallyComplex(f)) => {
                    Flag::new(Verdict::No, format!("not locally complex: {}", lc_failure_text(a, &f)))
                }
                Check::Fails(NicelyNormedFailure::Commutator { u, v, scalar }) => Flag::new(
                    Verdict::No,
                    format!(
                        "uv - vu has scalar part {} for u = {}, v = {}",
                        format_rational(&(&scalar * int(2))),
                        show(a, &u),
                        show(a, &v)
                    ),
                ),
            }
        });
    }
    if which == P::All {
        r.commutative = Some(match a.is_commutative_on_basis() {
            None => Flag::new(Verdict::Yes, "all basis pairs commute"),
            Some((i, j)) => Flag::new(
                Verdict::No,
                format!("{} {} != {} {}", a.labels()[i], a.labels()[j], a.labels()[j], a.labels()[i]),
            ),
        });
        use crate::structure::annihilator::{zero_divisor_search, ZeroDivisorOutcome};
        r.has_zero_divisors = Some(match zero_divisor_search(a, zero_divisor_budget, seed)? {
            ZeroDivisorOutcome::Found { x, y } => {
                Flag::new(Verdict::Yes, format!("({}) * ({}) = 0", show(a, &x), show(a, &y)))
            }
            ZeroDivisorOutcome::NoneFound { reason } => Flag::new(Verdict::No, reason),
            ZeroDivisorOutcome::Exhausted { tried } => {
                Flag::new(Verdict::Unknown, format!("no zero divisor among {tried} candidates"))
            }
        });
    }
    Ok(r)
}

/// `n(x) > 0` sanity helper used by tests: the norm of a nonscalar element.
pub fn norm_of(a: &Algebra, x: &Element) -> Result<Option<Rational>> {
    Ok(a.minimal_quadratic(x)?.norm())
}
