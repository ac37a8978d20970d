//! Annihilators, alter-scalars, and zero-divisor search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Algebra, Element};
use crate::error::Result;
use crate::lowdim::four::{exact_zero_divisor, extract_tu, symmetric_definiteness, Definiteness};
use crate::matrix::QMatrix;
use crate::properties::{is_alternative, is_locally_complex, polarized_family};
use crate::rational::int;
use crate::subspace::Subspace;

/// `Ann(x) = {y : xy = 0}`.
pub fn annihilator(a: &Algebra, x: &Element) -> Result<Subspace> {
    let l = a.left_mul_matrix(x)?;
    Subspace::span(a.dim(), &l.kernel())
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlterScalarSpace {
    /// All `a` with `x^2 a = x(xa)` for every `x`.
    pub solutions: Subspace,
    /// True when the solution space is larger than the scalars.
    pub has_alter_scalars: bool,
}

/// Solves `x^2 a = x(xa)` for `a`, over the polarized family of `x`.
pub fn alter_scalar_space(a: &Algebra) -> Result<AlterScalarSpace> {
    let n = a.dim();
    let mut rows: Vec<Vec<crate::Rational>> = Vec::new();
    for x in polarized_family(n) {
        let x2 = a.mul(&x, &x);
        // column j of L_{x^2} - L_x L_x
        let cols: Vec<Vec<crate::Rational>> = (0..n)
            .map(|j| {
                let ej = a.basis_element(j);
                (&a.mul(&x2, &ej) - &a.mul(&x, &a.mul(&x, &ej))).into_coords()
            })
            .collect();
        let m = QMatrix::from_columns(&cols)?;
        rows.extend(m.rows_vec().into_iter().filter(|r| r.iter().any(|c| !num::Zero::is_zero(c))));
        if rows.len() > 4 * n {
            rows = Subspace::span(n, &rows)?.basis().to_vec();
        }
    }
    let solutions = if rows.is_empty() {
        Subspace::full(n)
    } else {
        Subspace::span(n, &QMatrix::from_rows(rows)?.kernel())?
    };
    let has_alter_scalars = solutions.dim() >= 2;
    Ok(AlterScalarSpace {
        solutions,
        has_alter_scalars,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum ZeroDivisorOutcome {
    /// `x y = 0` exactly with both nonzero.
    Found { x: Element, y: Element },
    /// Proven free of zero divisors.
    NoneFound { reason: String },
    /// Nothing found within the budget; no conclusion.
    Exhausted { tried: usize },
}

fn first_zero_divisor(a: &Algebra, candidates: &[Element]) -> Option<(Element, Element)> {
    candidates.par_iter().find_map_first(|x| {
        let l = a.left_mul_matrix(x).ok()?;
        l.kernel().into_iter().next().map(|y| (x.clone(), Element::new(y)))
    })
}

/// Structured families first (`e_i`, `e_i ± e_j`, then `e_i ± e_j ± e_k` up
/// to dimension 16), then `budget` seeded random small-integer elements.
/// Alternative locally complex algebras and positive or negative definite
/// four-dimensional ones are reported as division algebras without search.
pub fn zero_divisor_search(a: &Algebra, budget: usize, seed: u64) -> Result<ZeroDivisorOutcome> {
    let n = a.dim();
    let lc = a.unit().is_some() && is_locally_complex(a)?.holds();
    if lc && is_alternative(a).holds() {
        return Ok(ZeroDivisorOutcome::NoneFound {
            reason: "alternative locally complex algebras are division algebras".into(),
        });
    }
    if lc && n == 4 {
        if let Ok(ex) = extract_tu(a) {
            let p = ex.params.symmetric_part();
            if symmetric_definiteness(&p) != Definiteness::Indefinite {
                return Ok(ZeroDivisorOutcome::NoneFound {
                    reason: "symmetric part of T is definite".into(),
                });
            }
            if let Some((x, y)) = exact_zero_divisor(&ex.params) {
                // back to the input coordinates
                let to_a = |v: &Element| {
                    v.support()
                        .fold(Element::zero(n), |acc, (i, c)| &acc + &ex.basis[i].scale(c))
                };
                return Ok(ZeroDivisorOutcome::Found {
                    x: to_a(&x),
                    y: to_a(&y),
                });
            }
        }
    }
    let e = |i: usize| Element::basis(n, i);
    let mut tried = 0;
    let mut family: Vec<Element> = (0..n).map(e).collect();
    for i in 0..n {
        for j in i + 1..n {
            family.push(&e(i) + &e(j));
            family.push(&e(i) - &e(j));
        }
    }
    tried += family.len();
    if let Some((x, y)) = first_zero_divisor(a, &family) {
        return Ok(ZeroDivisorOutcome::Found { x, y });
    }
    if n <= 16 {
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for (sj, sk) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        triples.push(&(&e(i) + &e(j).scale(&int(sj))) + &e(k).scale(&int(sk)));
                    }
                }
            }
        }
        tried += triples.len();
        if let Some((x, y)) = first_zero_divisor(a, &triples) {
            return Ok(ZeroDivisorOutcome::Found { x, y });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<Element> = (0..budget)
        .map(|_| Element::new((0..n).map(|_| int(rng.gen_range(-3..=3))).collect()))
        .filter(|x| !x.is_zero())
        .collect();
    tried += random.len();
    if let Some((x, y)) = first_zero_divisor(a, &random) {
        return Ok(ZeroDivisorOutcome::Found { x, y });
    }
    Ok(ZeroDivisorOutcome::Exhausted { tried })
}
