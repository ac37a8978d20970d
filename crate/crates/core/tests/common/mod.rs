#![allow(dead_code)]

pub mod tables;

use lcalg::rational::int;
use lcalg::{Algebra, Element, Rational};
use num::Zero;

/// Multiplication on a basis whose products are signed basis vectors,
/// kept apart from the library so it can serve as a reference.
#[derive(Clone, Debug)]
pub struct SignedBasis {
    pub dim: usize,
    /// `prod[i * dim + j] = (sign, k)` with `e_i e_j = sign * e_k`.
    pub prod: Vec<(i8, usize)>,
}

impl SignedBasis {
    pub fn from_table<const N: usize>(t: &[[i8; N]; N]) -> Self {
        let dim = N + 1;
        let mut prod = vec![(1, 0); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                prod[i * dim + j] = match (i, j) {
                    (0, k) | (k, 0) => (1, k),
                    _ => match t[i - 1][j - 1] {
                        0 => (-1, 0),
                        v => (v.signum(), v.unsigned_abs() as usize),
                    },
                };
            }
        }
        SignedBasis { dim, prod }
    }

    /// `A_n` via `(a, b)(c, d) = (ac - d*b, da + bc*)`.
    pub fn doubling(n: u32) -> Self {
        let mut cur = SignedBasis { dim: 1, prod: vec![(1, 0)] };
        for _ in 0..n {
            let h = cur.dim;
            let conj = |l: usize| if l == 0 { 1 } else { -1 };
            let mut prod = vec![(1, 0); 4 * h * h];
            for i in 0..2 * h {
                for j in 0..2 * h {
                    let (hi, li, hj, lj) = (i >= h, i % h, j >= h, j % h);
                    prod[i * 2 * h + j] = match (hi, hj) {
                        (false, false) => cur.get(li, lj),
                        (false, true) => {
                            let (s, k) = cur.get(lj, li);
                            (s, k + h)
                        }
                        (true, false) => {
                            let (s, k) = cur.get(li, lj);
                            (s * conj(lj), k + h)
                        }
                        (true, true) => {
                            let (s, k) = cur.get(lj, li);
                            (-s * conj(lj), k)
                        }
                    };
                }
            }
            cur = SignedBasis { dim: 2 * h, prod };
        }
        cur
    }

    pub fn get(&self, i: usize, j: usize) -> (i8, usize) {
        self.prod[i * self.dim + j]
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let (s, k) = self.get(i, j);
                let p = a * b;
                if s > 0 {
                    out[k] += p;
                } else {
                    out[k] -= p;
                }
            }
        }
        out
    }

    pub fn mul_e(&self, x: &Element, y: &Element) -> Vec<Rational> {
        self.mul(x.coords(), y.coords())
    }

    /// Left multiplication by `x` as rows `L_x e_j` (transposed).
    pub fn left_columns(&self, x: &[Rational]) -> Vec<Vec<Rational>> {
        (0..self.dim).map(|j| self.mul(x, &unit_vec(self.dim, j))).collect()
    }

    pub fn agrees_with(&self, a: &Algebra) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let (s, k) = self.get(i, j);
                let mut want = vec![Rational::zero(); self.dim];
                want[k] = int(s as i64);
                if a.basis_product(i, j).coords() != want.as_slice() {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = int(1);
    v
}

/// Sparse integer vector from `(index, coefficient)` pairs.
pub fn vec_of(n: usize, terms: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for &(i, c) in terms {
        v[i] += int(c);
    }
    v
}

pub fn sub(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn is_zero(x: &[Rational]) -> bool {
    x.iter().all(Zero::is_zero)
}

/// Rank by fraction-free elimination over the rationals.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                let row_r = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row_r) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the span generated by `gens` under the multiplication,
/// closing the span repeatedly.
pub fn closure_dim(m: &SignedBasis, gens: &[Vec<Rational>]) -> usize {
    let mut span: Vec<Vec<Rational>> = gens.to_vec();
    loop {
        let before = rank(&span);
        let mut next = span.clone();
        for x in &span {
            for y in &span {
                next.push(m.mul(x, y));
            }
        }
        let after = rank(&next);
        if after == before {
            return before;
        }
        span = basis_of(&next);
    }
}

/// A maximal independent subset, in order.
pub fn basis_of(vs: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for v in vs {
        out.push(v.clone());
        if rank(&out) < out.len() {
            out.pop();
        }
    }
    out
}
